// Pure view-model: everything the board shows is computed here from the
// latest service view, the frozen layout and the optional eval overlay.
// The DOM layer just paints a Scene; keeping this pure keeps it testable.

import type { MoveEval, View } from './api.js';
import { addDecimals } from './decimal.js';
import type { Point } from './layout.js';

export type VertexState = 'legal' | 'locked' | 'removed';

export interface SceneVertex {
    id: number;
    x: number;
    y: number;
    state: VertexState;
    weightLabel: string;      // blank for weight-0 vertices
    removedBy: 'alice' | 'bob' | null;
    evalLabel: string | null; // exact value shown by the what-if overlay
    evalOptimal: boolean;
}

export interface SceneEdge {
    a: number;
    b: number;
    ghost: boolean; // at least one endpoint already removed
}

export interface Scene {
    vertices: SceneVertex[];
    edges: SceneEdge[];
    scores: { alice: string; bob: string };
    remainingWeight: string;
    totalWeight: string;
    turnLabel: string;
    banner: string | null;
    canUndo: boolean;
    engineTurn: boolean;
}

export function buildScene(
    view: View,
    positions: Point[],
    evals: MoveEval[] | null,
    engineRole: 'alice' | 'bob' | 'none',
): Scene {
    const remaining = new Set(view.remaining);
    const legal = new Set(view.legalMoves);
    const removedBy = new Map<number, 'alice' | 'bob'>();
    for (const h of view.history) removedBy.set(h.vertex, h.mover);
    const evalByVertex = new Map<number, MoveEval>();
    for (const e of evals ?? []) evalByVertex.set(e.vertex, e);

    const vertices: SceneVertex[] = [];
    for (let v = 0; v < view.n; v++) {
        const state: VertexState = !remaining.has(v) ? 'removed'
            : legal.has(v) ? 'legal' : 'locked';
        const ev = state === 'legal' ? evalByVertex.get(v) : undefined;
        vertices.push({
            id: v,
            x: positions[v].x,
            y: positions[v].y,
            state,
            weightLabel: view.weights[v] === '0' ? '' : view.weights[v],
            removedBy: removedBy.get(v) ?? null,
            evalLabel: ev ? (ev.valueAfter.startsWith('-') ? ev.valueAfter : `+${ev.valueAfter}`) : null,
            evalOptimal: ev?.optimal ?? false,
        });
    }

    const edges: SceneEdge[] = view.edges.map(([a, b]) => ({
        a, b, ghost: !remaining.has(a) || !remaining.has(b),
    }));

    const remainingWeight = addDecimals(view.remaining.map((v) => view.weights[v]));
    const totalWeight = addDecimals(view.weights);

    let banner: string | null = null;
    if (view.finished && view.verdict) {
        banner = view.verdict === 'alice'
            ? 'Alice wins (at least half the weight)'
            : 'Bob wins';
    }

    const engineTurn = !view.finished && view.turn !== null && view.turn === engineRole;
    const turnLabel = view.finished ? 'game over'
        : `${view.turn} to move` + (engineTurn ? ' (engine)' : '');

    return {
        vertices,
        edges,
        scores: view.scores,
        remainingWeight,
        totalWeight,
        turnLabel,
        banner,
        canUndo: view.history.length > 0,
        engineTurn,
    };
}

// display invariant: banked scores plus what is still on the board always
// add up to the total weight
export function sceneConserves(scene: Scene): boolean {
    const sum = addDecimals([scene.scores.alice, scene.scores.bob, scene.remainingWeight]);
    return sum === scene.totalWeight;
}
