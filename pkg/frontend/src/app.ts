/** Demo page wiring: forwards the three pointer events to the engine,
 * repaints exactly when the engine reports a change, and offers scene
 * choice, layout save/load and a cover overlay. */

import { BoundaryClient, httpTransport } from "./boundary.js";
import { CURSOR_CSS } from "./protocol.js";
import { drawScene } from "./render.js";

const client = new BoundaryClient(httpTransport("/api"));

const canvas = document.getElementById("scene") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const sceneSelect = document.getElementById("scene-select") as HTMLSelectElement;
const saveButton = document.getElementById("save") as HTMLButtonElement;
const loadInput = document.getElementById("load") as HTMLInputElement;
const overlayToggle = document.getElementById("overlay") as HTMLInputElement;
const banner = document.getElementById("banner") as HTMLDivElement;

let pointerIsDown = false;

function showError(message: string): void {
  banner.textContent = message;
  banner.hidden = false;
}

function clearError(): void {
  banner.hidden = true;
}

async function repaint(): Promise<void> {
  const res = await client.send({ type: "getRenderModel", debug: overlayToggle.checked });
  drawScene(ctx, res.commands ?? [], canvas.width, canvas.height);
}

function guard<A extends unknown[]>(fn: (...args: A) => Promise<void>): (...args: A) => void {
  return (...args) => {
    fn(...args).then(clearError, (err) => showError(String(err)));
  };
}

const initScene = guard(async (name: string) => {
  const res = await client.send({ type: "init", scene: name });
  const [w, h] = res.canvas ?? [800, 600];
  canvas.width = w;
  canvas.height = h;
  await repaint();
});

function canvasPoint(ev: MouseEvent): { x: number; y: number } {
  const box = canvas.getBoundingClientRect();
  return { x: ev.clientX - box.left, y: ev.clientY - box.top };
}

canvas.addEventListener("contextmenu", (ev) => ev.preventDefault());

canvas.addEventListener(
  "mousedown",
  guard(async (ev: MouseEvent) => {
    const { x, y } = canvasPoint(ev);
    pointerIsDown = true;
    await client.send({ type: "pointerDown", x, y, button: ev.button === 2 ? "R" : "L" });
  }),
);

canvas.addEventListener(
  "mousemove",
  guard(async (ev: MouseEvent) => {
    const { x, y } = canvasPoint(ev);
    if (pointerIsDown) {
      const res = await client.send({ type: "pointerMove", x, y });
      if (res.changed) {
        await repaint();
      }
    } else {
      const res = await client.send({ type: "getCursor", x, y });
      canvas.style.cursor = CURSOR_CSS[res.cursor ?? "Default"] ?? "default";
    }
  }),
);

window.addEventListener(
  "mouseup",
  guard(async () => {
    if (!pointerIsDown) return;
    pointerIsDown = false;
    await client.send({ type: "pointerUp" });
    await repaint();
  }),
);

sceneSelect.addEventListener("change", () => initScene(sceneSelect.value));
overlayToggle.addEventListener("change", guard(repaint));

saveButton.addEventListener(
  "click",
  guard(async () => {
    const res = await client.send({ type: "saveLayout" });
    const blob = new Blob([res.document ?? ""], { type: "text/plain" });
    const link = document.createElement("a");
    link.href = URL.createObjectURL(blob);
    link.download = `${sceneSelect.value}.mrl`;
    link.click();
    URL.revokeObjectURL(link.href);
  }),
);

loadInput.addEventListener(
  "change",
  guard(async () => {
    const file = loadInput.files?.[0];
    if (!file) return;
    const text = await file.text();
    const res = await client.send({ type: "restoreLayout", document: text });
    if (res.warnings && res.warnings.length > 0) {
      showError(`restored with warnings: ${res.warnings.join("; ")}`);
    }
    await repaint();
    loadInput.value = "";
  }),
);

guard(async () => {
  const res = await client.send({ type: "listScenes" });
  for (const name of res.scenes ?? []) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    sceneSelect.append(option);
  }
})();
initScene(sceneSelect.value || "calculator");
