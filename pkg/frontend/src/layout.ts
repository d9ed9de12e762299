// Force-directed layout, computed once per session and then frozen so the
// board geometry stays stable while vertices are grabbed.  Fully
// deterministic: the PRNG is seeded from the graph itself.
// Fruchterman-Reingold with a linear cooling schedule.

export interface Point {
    x: number;
    y: number;
}

function mulberry32(seed: number): () => number {
    let a = seed >>> 0;
    return () => {
        a = (a + 0x6d2b79f5) >>> 0;
        let t = a;
        t = Math.imul(t ^ (t >>> 15), t | 1);
        t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
        return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
    };
}

function graphSeed(n: number, edges: [number, number][]): number {
    let h = 2166136261 ^ n;
    for (const [a, b] of edges) {
        h = Math.imul(h ^ (a * 31 + b), 16777619);
    }
    return h >>> 0;
}

const MARGIN = 30;

export function forceLayout(
    n: number,
    edges: [number, number][],
    width = 720,
    height = 480,
    iterations = 300,
): Point[] {
    if (n === 0) return [];
    const cx = width / 2;
    const cy = height / 2;
    if (n === 1) return [{ x: cx, y: cy }];
    const rand = mulberry32(graphSeed(n, edges));
    const areaW = width - 2 * MARGIN;
    const areaH = height - 2 * MARGIN;
    const k = 0.6 * Math.sqrt((areaW * areaH) / n);

    const radius = Math.min(areaW, areaH) / 2.2;
    const pos: Point[] = [];
    for (let v = 0; v < n; v++) {
        const angle = (2 * Math.PI * v) / n;
        pos.push({
            x: cx + radius * Math.cos(angle) + (rand() - 0.5) * 10,
            y: cy + radius * Math.sin(angle) + (rand() - 0.5) * 10,
        });
    }

    for (let step = 0; step < iterations; step++) {
        const t = Math.max(1.5, (width / 10) * (1 - step / iterations));
        const dx = new Array(n).fill(0);
        const dy = new Array(n).fill(0);
        for (let a = 0; a < n; a++) {
            for (let b = a + 1; b < n; b++) {
                let ex = pos[a].x - pos[b].x;
                let ey = pos[a].y - pos[b].y;
                let d = Math.hypot(ex, ey);
                if (d < 1e-3) {
                    ex = rand() - 0.5;
                    ey = rand() - 0.5;
                    d = Math.hypot(ex, ey);
                }
                const f = (k * k) / d / d; // repulsion along the unit vector
                dx[a] += ex * f; dy[a] += ey * f;
                dx[b] -= ex * f; dy[b] -= ey * f;
            }
        }
        for (const [a, b] of edges) {
            const ex = pos[a].x - pos[b].x;
            const ey = pos[a].y - pos[b].y;
            const d = Math.hypot(ex, ey) || 1e-3;
            const f = d / k; // attraction d^2/k along the unit vector
            dx[a] -= ex * f; dy[a] -= ey * f;
            dx[b] += ex * f; dy[b] += ey * f;
        }
        for (let v = 0; v < n; v++) {
            // drift toward the center keeps disconnected pieces on canvas
            dx[v] += (cx - pos[v].x) * 0.02;
            dy[v] += (cy - pos[v].y) * 0.02;
            const len = Math.hypot(dx[v], dy[v]) || 1;
            const capped = Math.min(len, t);
            pos[v].x += (dx[v] / len) * capped;
            pos[v].y += (dy[v] / len) * capped;
            pos[v].x = Math.max(MARGIN, Math.min(width - MARGIN, pos[v].x));
            pos[v].y = Math.max(MARGIN, Math.min(height - MARGIN, pos[v].y));
        }
    }

    // deterministic de-overlap: coincident pairs would hide vertices
    for (let a = 0; a < n; a++) {
        for (let b = a + 1; b < n; b++) {
            if (Math.hypot(pos[a].x - pos[b].x, pos[a].y - pos[b].y) < 24) {
                const angle = (2 * Math.PI * (a * n + b)) / (n * n);
                pos[b].x = Math.max(MARGIN, Math.min(width - MARGIN,
                    pos[b].x + 26 * Math.cos(angle)));
                pos[b].y = Math.max(MARGIN, Math.min(height - MARGIN,
                    pos[b].y + 26 * Math.sin(angle)));
            }
        }
    }
    for (const p of pos) {
        p.x = Math.round(p.x * 100) / 100;
        p.y = Math.round(p.y * 100) / 100;
    }
    return pos;
}
