// DOM layer: paints a Scene into an SVG element and forwards clicks.
// Deliberately dumb; all decisions live in scene.ts / state.ts.

import type { Scene, SceneVertex } from './scene.js';

const SVG_NS = 'http://www.w3.org/2000/svg';

export interface BoardCallbacks {
    onGrab(vertex: number): void;
}

export function renderBoard(svg: SVGSVGElement, scene: Scene, cb: BoardCallbacks): void {
    svg.replaceChildren();
    for (const e of scene.edges) {
        const a = scene.vertices[e.a];
        const b = scene.vertices[e.b];
        const line = document.createElementNS(SVG_NS, 'line');
        line.setAttribute('x1', String(a.x));
        line.setAttribute('y1', String(a.y));
        line.setAttribute('x2', String(b.x));
        line.setAttribute('y2', String(b.y));
        line.setAttribute('class', e.ghost ? 'edge ghost' : 'edge');
        svg.appendChild(line);
    }
    for (const v of scene.vertices) {
        svg.appendChild(vertexGroup(v, cb));
    }
}

function vertexGroup(v: SceneVertex, cb: BoardCallbacks): SVGGElement {
    const g = document.createElementNS(SVG_NS, 'g');
    g.setAttribute('class', `vertex ${v.state}` + (v.removedBy ? ` by-${v.removedBy}` : ''));
    g.dataset.vertex = String(v.id);

    const circle = document.createElementNS(SVG_NS, 'circle');
    circle.setAttribute('cx', String(v.x));
    circle.setAttribute('cy', String(v.y));
    circle.setAttribute('r', '16');
    g.appendChild(circle);

    const label = document.createElementNS(SVG_NS, 'text');
    label.setAttribute('x', String(v.x));
    label.setAttribute('y', String(v.y + 4));
    label.setAttribute('class', 'weight');
    label.textContent = v.weightLabel;
    g.appendChild(label);

    const id = document.createElementNS(SVG_NS, 'text');
    id.setAttribute('x', String(v.x));
    id.setAttribute('y', String(v.y - 20));
    id.setAttribute('class', 'vertex-id');
    id.textContent = `v${v.id}`;
    g.appendChild(id);

    if (v.evalLabel !== null) {
        const ev = document.createElementNS(SVG_NS, 'text');
        ev.setAttribute('x', String(v.x));
        ev.setAttribute('y', String(v.y + 30));
        ev.setAttribute('class', v.evalOptimal ? 'eval optimal' : 'eval');
        ev.textContent = v.evalOptimal ? `${v.evalLabel} *` : v.evalLabel;
        g.appendChild(ev);
    }

    if (v.state === 'legal') {
        g.addEventListener('click', () => cb.onGrab(v.id));
    } else if (v.state === 'locked') {
        // clicking a cutvertex gives inline feedback but changes nothing
        g.addEventListener('click', () => {
            g.classList.remove('shake');
            void (g as unknown as HTMLElement).getBoundingClientRect?.();
            g.classList.add('shake');
        });
    }
    return g;
}
