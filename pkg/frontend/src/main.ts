// Page bootstrap: preset menu, control buttons, status panels.

import { Client } from './api.js';
import { renderBoard } from './board.js';
import { PRESETS } from './presets.js';
import { sceneConserves } from './scene.js';
import { GameController } from './state.js';

const client = new Client('');
const controller = new GameController(client);

const el = {
    preset: document.getElementById('preset') as HTMLSelectElement,
    role: document.getElementById('engine-role') as HTMLSelectElement,
    newGame: document.getElementById('new-game') as HTMLButtonElement,
    engineMove: document.getElementById('engine-move') as HTMLButtonElement,
    evals: document.getElementById('toggle-evals') as HTMLButtonElement,
    undo: document.getElementById('undo') as HTMLButtonElement,
    board: document.getElementById('board') as unknown as SVGSVGElement,
    status: document.getElementById('status') as HTMLElement,
    scores: document.getElementById('scores') as HTMLElement,
    banner: document.getElementById('banner') as HTMLElement,
    error: document.getElementById('error') as HTMLElement,
};

for (const [i, preset] of PRESETS.entries()) {
    const opt = document.createElement('option');
    opt.value = String(i);
    opt.textContent = preset.label;
    el.preset.appendChild(opt);
}
el.preset.addEventListener('change', () => {
    el.role.value = PRESETS[Number(el.preset.value)].suggestedEngine;
});
el.role.value = PRESETS[0].suggestedEngine;

function paint(): void {
    const scene = controller.scene();
    el.error.textContent = controller.lastError ?? '';
    if (!scene) return;
    renderBoard(el.board, scene, {
        onGrab: (vertex) => {
            void act(() => controller.grab(vertex));
        },
    });
    el.status.textContent = scene.turnLabel;
    el.scores.textContent =
        `Alice ${scene.scores.alice} : Bob ${scene.scores.bob}` +
        ` | on board ${scene.remainingWeight} / ${scene.totalWeight}`;
    el.banner.textContent = scene.banner ?? '';
    el.banner.className = scene.banner ? 'banner shown' : 'banner';
    el.engineMove.disabled = controller.isBusy || !scene.engineTurn;
    el.undo.disabled = controller.isBusy || !scene.canUndo;
    el.evals.textContent = controller.showEvals ? 'hide evals' : 'show evals';
    if (!sceneConserves(scene)) {
        el.error.textContent = 'display inconsistency: scores do not add up';
    }
}

async function act(work: () => Promise<unknown>): Promise<void> {
    await work();
    paint();
}

el.newGame.addEventListener('click', () => {
    const preset = PRESETS[Number(el.preset.value)];
    const role = el.role.value as 'alice' | 'bob' | 'none';
    void act(() => controller.newGame(preset.doc, role));
});
el.engineMove.addEventListener('click', () => {
    void act(() => controller.engineMove());
});
el.evals.addEventListener('click', () => {
    void act(() => controller.toggleEvals());
});
el.undo.addEventListener('click', () => {
    void act(() => controller.undo());
});

void act(() => controller.newGame(PRESETS[0].doc, PRESETS[0].suggestedEngine));
