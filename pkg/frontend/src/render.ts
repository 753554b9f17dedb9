/** Pure renderer: draw commands in, 2D-context calls out. The page keeps
 * no geometry of its own; every frame is rebuilt from the engine's
 * render model. */

import type { DebugShape, DrawCommand } from "./protocol.js";

/** The context subset the renderer needs (easy to fake in tests). */
export interface Ctx2D {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  font: string;
  textAlign: CanvasTextAlign;
  textBaseline: CanvasTextBaseline;
  globalAlpha: number;
  clearRect(x: number, y: number, w: number, h: number): void;
  fillRect(x: number, y: number, w: number, h: number): void;
  strokeRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  closePath(): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  fill(): void;
  stroke(): void;
  fillText(text: string, x: number, y: number): void;
  save(): void;
  restore(): void;
  translate(x: number, y: number): void;
  rotate(angle: number): void;
  setLineDash(segments: number[]): void;
}

const FILL_COLORS: Record<string, string> = {
  control: "#e8e8ee",
  linked: "#dcebe0",
  "plot-area": "#f4f0e4",
  scale: "#d8dcec",
};

const STROKE_COLORS: Record<string, string> = {
  "group-frame": "#7a7a8c",
  "dependent-frame": "#9a8a6a",
  polygon: "#4a6a9a",
  "polygon-center": "#4a6a9a",
  disc: "#6a4a9a",
  ring: "#6a4a9a",
};

const TEXT_COLORS: Record<string, string> = {
  "control-label": "#333340",
  "group-title": "#55556a",
  comment: "#224488",
};

const FREEDOM_COLORS: Record<string, string> = {
  any: "#d04040",
  ns: "#3070d0",
  we: "#30a060",
  none: "#909090",
};

function polygonPath(ctx: Ctx2D, points: [number, number][]): void {
  ctx.beginPath();
  points.forEach(([x, y], i) => (i === 0 ? ctx.moveTo(x, y) : ctx.lineTo(x, y)));
  ctx.closePath();
}

function drawDebugShape(ctx: Ctx2D, shape: DebugShape): void {
  if (shape.kind === "circle") {
    ctx.beginPath();
    ctx.arc(shape.cx, shape.cy, shape.r, 0, Math.PI * 2);
    ctx.stroke();
    return;
  }
  if (shape.kind === "capsule") {
    const dx = shape.x2 - shape.x1;
    const dy = shape.y2 - shape.y1;
    const len = Math.hypot(dx, dy) || 1;
    const nx = (-dy / len) * shape.halfWidth;
    const ny = (dx / len) * shape.halfWidth;
    polygonPath(ctx, [
      [shape.x1 + nx, shape.y1 + ny],
      [shape.x2 + nx, shape.y2 + ny],
      [shape.x2 - nx, shape.y2 - ny],
      [shape.x1 - nx, shape.y1 - ny],
    ]);
    ctx.stroke();
    ctx.beginPath();
    ctx.arc(shape.x1, shape.y1, shape.halfWidth, 0, Math.PI * 2);
    ctx.stroke();
    ctx.beginPath();
    ctx.arc(shape.x2, shape.y2, shape.halfWidth, 0, Math.PI * 2);
    ctx.stroke();
    return;
  }
  polygonPath(ctx, shape.points);
  ctx.stroke();
}

export function drawScene(
  ctx: Ctx2D,
  commands: DrawCommand[],
  width: number,
  height: number,
): void {
  ctx.clearRect(0, 0, width, height);
  for (const cmd of commands) {
    switch (cmd.kind) {
      case "FilledRect":
        ctx.fillStyle = FILL_COLORS[cmd.style] ?? "#e0e0e0";
        ctx.fillRect(cmd.x, cmd.y, cmd.w, cmd.h);
        ctx.strokeStyle = "#666672";
        ctx.lineWidth = 1;
        ctx.setLineDash([]);
        ctx.strokeRect(cmd.x, cmd.y, cmd.w, cmd.h);
        break;
      case "PolygonOutline":
        ctx.strokeStyle = STROKE_COLORS[cmd.style] ?? "#555";
        ctx.lineWidth = cmd.style === "polygon" ? 2 : 1.5;
        ctx.setLineDash(cmd.style === "dependent-frame" ? [6, 4] : []);
        polygonPath(ctx, cmd.points);
        ctx.stroke();
        ctx.setLineDash([]);
        break;
      case "CircleOutline":
        ctx.strokeStyle = STROKE_COLORS[cmd.style] ?? "#555";
        ctx.lineWidth = cmd.style === "polygon-center" ? 2 : 1.5;
        ctx.setLineDash([]);
        ctx.beginPath();
        ctx.arc(cmd.cx, cmd.cy, cmd.r, 0, Math.PI * 2);
        ctx.stroke();
        break;
      case "Text":
        ctx.save();
        ctx.translate(cmd.x, cmd.y);
        ctx.rotate(cmd.angle);
        ctx.fillStyle = TEXT_COLORS[cmd.style] ?? "#222";
        ctx.font = "13px system-ui, sans-serif";
        ctx.textAlign = "center";
        ctx.textBaseline = "middle";
        ctx.fillText(cmd.text, 0, 0);
        ctx.restore();
        break;
      case "DebugNode":
        ctx.save();
        ctx.globalAlpha = 0.55;
        ctx.strokeStyle = FREEDOM_COLORS[cmd.freedom] ?? "#d04040";
        ctx.lineWidth = 1;
        ctx.setLineDash([]);
        drawDebugShape(ctx, cmd.shape);
        ctx.restore();
        break;
    }
  }
}
