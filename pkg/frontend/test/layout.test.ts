import { describe, expect, it } from 'vitest';

import { forceLayout } from '../src/layout';
import { BOBWIN8 } from '../src/presets';

describe('frozen force layout', () => {
    it('is deterministic for the same graph', () => {
        const a = forceLayout(BOBWIN8.n, BOBWIN8.edges);
        const b = forceLayout(BOBWIN8.n, BOBWIN8.edges);
        expect(a).toEqual(b);
    });

    it('keeps every vertex inside the viewport', () => {
        for (const [n, edges] of [
            [BOBWIN8.n, BOBWIN8.edges],
            [1, []],
            [2, [[0, 1]]],
        ] as [number, [number, number][]][]) {
            const pos = forceLayout(n, edges);
            expect(pos).toHaveLength(n);
            for (const p of pos) {
                expect(p.x).toBeGreaterThanOrEqual(30);
                expect(p.x).toBeLessThanOrEqual(690);
                expect(p.y).toBeGreaterThanOrEqual(30);
                expect(p.y).toBeLessThanOrEqual(450);
            }
        }
    });

    it('separates adjacent vertices', () => {
        const pos = forceLayout(BOBWIN8.n, BOBWIN8.edges);
        for (const [a, b] of BOBWIN8.edges) {
            const d = Math.hypot(pos[a].x - pos[b].x, pos[a].y - pos[b].y);
            expect(d).toBeGreaterThan(20);
        }
    });

    it('differs between different graphs (seeded by content)', () => {
        const a = forceLayout(4, [[0, 1], [1, 2], [2, 3]]);
        const b = forceLayout(4, [[0, 1], [1, 2], [2, 3], [3, 0]]);
        expect(a).not.toEqual(b);
    });
});
