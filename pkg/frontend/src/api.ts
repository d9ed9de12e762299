// Typed client for the play service. The UI never computes game logic:
// every number it shows comes back from these endpoints.

export interface InstanceDoc {
    n: number;
    edges: [number, number][];
    weights: string[];
    name?: string;
}

export interface HistoryEntry {
    vertex: number;
    mover: 'alice' | 'bob';
}

export interface View {
    n: number;
    edges: [number, number][];
    weights: string[];
    remaining: number[];
    history: HistoryEntry[];
    scores: { alice: string; bob: string };
    turn: 'alice' | 'bob' | null;
    legalMoves: number[];
    finished: boolean;
    verdict: 'alice' | 'bob' | null;
}

export interface MoveEval {
    vertex: number;
    valueAfter: string;
    optimal: boolean;
}

export type EngineRole = 'alice' | 'bob' | 'none';

export class ServiceError extends Error {
    constructor(readonly status: number, readonly code: string, message: string) {
        super(message);
    }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
    const res = await fetch(url, {
        headers: { 'content-type': 'application/json' },
        ...init,
    });
    const body = await res.json();
    if (!res.ok) {
        throw new ServiceError(res.status, body.code ?? 'error', body.message ?? res.statusText);
    }
    return body as T;
}

export class Client {
    constructor(readonly base: string) {}

    createSession(instance: InstanceDoc, engineRole: EngineRole):
            Promise<{ sessionId: string; view: View }> {
        return request(`${this.base}/sessions`, {
            method: 'POST',
            body: JSON.stringify({ instance, engineRole }),
        });
    }

    view(id: string): Promise<View> {
        return request(`${this.base}/sessions/${id}`);
    }

    move(id: string, vertex: number): Promise<View> {
        return request(`${this.base}/sessions/${id}/moves`, {
            method: 'POST',
            body: JSON.stringify({ vertex }),
        });
    }

    engineMove(id: string): Promise<{ view: View; evals: MoveEval[] }> {
        return request(`${this.base}/sessions/${id}/engine-move`, { method: 'POST' });
    }

    evals(id: string): Promise<MoveEval[]> {
        return request(`${this.base}/sessions/${id}/evals`);
    }

    undo(id: string): Promise<View> {
        return request(`${this.base}/sessions/${id}/undo`, { method: 'POST' });
    }
}
