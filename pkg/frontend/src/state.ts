// Session controller: owns the service round-trips and the client state.
// One request in flight at a time; controls are disabled while waiting.
// Layout is computed once per session and frozen afterwards.

import { Client, ServiceError } from './api.js';
import type { EngineRole, InstanceDoc, MoveEval, View } from './api.js';
import { forceLayout } from './layout.js';
import type { Point } from './layout.js';
import { buildScene } from './scene.js';
import type { Scene } from './scene.js';

export class GameController {
    private sessionId: string | null = null;
    private view: View | null = null;
    private evals: MoveEval[] | null = null;
    private positions: Point[] = [];
    private busy = false;

    engineRole: EngineRole = 'none';
    showEvals = false;
    lastError: string | null = null;

    constructor(private client: Client) {}

    get isBusy(): boolean {
        return this.busy;
    }

    get session(): string | null {
        return this.sessionId;
    }

    get currentView(): View | null {
        return this.view;
    }

    get currentEvals(): MoveEval[] | null {
        return this.evals;
    }

    scene(): Scene | null {
        if (!this.view) return null;
        return buildScene(this.view, this.positions,
                          this.showEvals ? this.evals : null, this.engineRole);
    }

    private async exclusive<T>(work: () => Promise<T>): Promise<T | null> {
        if (this.busy) return null;
        this.busy = true;
        this.lastError = null;
        try {
            return await work();
        } catch (err) {
            if (err instanceof ServiceError) {
                this.lastError = err.message;
                return null;
            }
            throw err;
        } finally {
            this.busy = false;
        }
    }

    async newGame(instance: InstanceDoc, engineRole: EngineRole): Promise<void> {
        await this.exclusive(async () => {
            const { sessionId, view } = await this.client.createSession(instance, engineRole);
            this.sessionId = sessionId;
            this.view = view;
            this.engineRole = engineRole;
            this.evals = null;
            this.positions = forceLayout(view.n, view.edges);
            await this.refreshEvals();
        });
    }

    private async refreshEvals(): Promise<void> {
        if (!this.sessionId || !this.view || this.view.finished || !this.showEvals) {
            this.evals = null;
            return;
        }
        this.evals = await this.client.evals(this.sessionId);
    }

    async grab(vertex: number): Promise<boolean> {
        const res = await this.exclusive(async () => {
            this.view = await this.client.move(this.sessionId!, vertex);
            await this.refreshEvals();
            return true;
        });
        return res === true;
    }

    async engineMove(): Promise<MoveEval[] | null> {
        return await this.exclusive(async () => {
            const { view, evals } = await this.client.engineMove(this.sessionId!);
            this.view = view;
            await this.refreshEvals();
            return evals;
        });
    }

    async toggleEvals(): Promise<void> {
        this.showEvals = !this.showEvals;
        await this.exclusive(async () => {
            await this.refreshEvals();
        });
    }

    async undo(): Promise<boolean> {
        const res = await this.exclusive(async () => {
            this.view = await this.client.undo(this.sessionId!);
            await this.refreshEvals();
            return true;
        });
        return res === true;
    }
}
