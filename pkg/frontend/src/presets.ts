// Preset instances so the interesting graphs are one click away.
// bobwin8 mirrors the bundled instance document of the engine package
// byte for byte (a test pins the two against each other).

import type { InstanceDoc } from './api.js';

export const BOBWIN8: InstanceDoc = {
    n: 8,
    edges: [[0, 3], [0, 4], [0, 5], [1, 2], [1, 3], [2, 4], [3, 6], [4, 7]],
    weights: ['2', '0', '0', '1', '1', '1', '0', '0'],
    name: 'bobwin8',
};

// the engine package lists edges min-endpoint-first in lexicographic
// order; presets mirror that so documents compare byte for byte
function normalized(edges: [number, number][]): [number, number][] {
    return edges
        .map(([a, b]) => (a < b ? [a, b] : [b, a]) as [number, number])
        .sort((e, f) => e[0] - f[0] || e[1] - f[1]);
}

export function pathPreset(n: number, weights?: string[]): InstanceDoc {
    const edges: [number, number][] = [];
    for (let i = 0; i + 1 < n; i++) edges.push([i, i + 1]);
    return {
        n,
        edges: normalized(edges),
        weights: weights ?? alternating(n),
        name: `path/${n}`,
    };
}

export function coronaPreset(r: number): InstanceDoc {
    const edges: [number, number][] = [];
    for (let i = 0; i < r; i++) edges.push([i, (i + 1) % r]);
    for (let i = 0; i < r; i++) edges.push([i, r + i]);
    const weights = Array<string>(2 * r).fill('0');
    for (let i = 0; i < r; i++) weights[i] = '1';
    return { n: 2 * r, edges: normalized(edges), weights, name: `corona/r=${r}` };
}

export function hubMemberPreset(r: number, mask: number): InstanceDoc {
    const u1 = r, u2 = r + 1, leafHub = r + 2, leafU1 = r + 3, leafU2 = r + 4;
    const edges: [number, number][] = [];
    for (let i = 1; i + 1 < r; i++) edges.push([i, i + 1]); // solid cycle arc
    if (mask & 1) edges.push([0, 1]);
    if (mask & 2) edges.push([0, r - 1]);
    edges.push([u1, 0], [u1, 1], [u2, 0], [u2, r - 1]);
    edges.push([leafHub, 0], [leafU1, u1], [leafU2, u2]);
    const weights = Array<string>(r + 5).fill('0');
    weights[0] = '2';
    weights[u1] = '1';
    weights[u2] = '1';
    weights[leafHub] = '1';
    return { n: r + 5, edges: normalized(edges), weights, name: `hub/r=${r}/edges=${mask}` };
}

export function spiderTreePreset(): InstanceDoc {
    // three legs of length 2 joined at a center, alternating weights
    const edges: [number, number][] = [[0, 1], [1, 2], [0, 3], [3, 4], [0, 5], [5, 6]];
    return {
        n: 7,
        edges,
        weights: ['3', '0', '2', '0', '2', '0', '1'],
        name: 'tree/spider',
    };
}

function alternating(n: number): string[] {
    return Array.from({ length: n }, (_, i) => (i % 2 === 0 ? '0' : String(1 + (i % 3))));
}

export interface Preset {
    label: string;
    doc: InstanceDoc;
    suggestedEngine: 'alice' | 'bob' | 'none';
}

export const PRESETS: Preset[] = [
    { label: 'bobwin8 - the 8-vertex second-player win', doc: BOBWIN8, suggestedEngine: 'bob' },
    { label: 'hub member r=3, both optional edges', doc: hubMemberPreset(3, 3), suggestedEngine: 'bob' },
    { label: 'hub member r=5, no optional edges', doc: hubMemberPreset(5, 0), suggestedEngine: 'bob' },
    { label: 'corona r=3 (net), unit cycle weights', doc: coronaPreset(3), suggestedEngine: 'bob' },
    { label: 'corona r=5 (sunlet), unit cycle weights', doc: coronaPreset(5), suggestedEngine: 'bob' },
    { label: 'path of 8, mixed weights', doc: pathPreset(8), suggestedEngine: 'alice' },
    { label: 'path of 6, mixed weights', doc: pathPreset(6), suggestedEngine: 'alice' },
    { label: 'spider tree (7 vertices)', doc: spiderTreePreset(), suggestedEngine: 'alice' },
];
