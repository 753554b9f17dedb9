/** Boundary message types mirrored from the engine endpoint, plus the
 * cursor-name mapping used by the canvas. */

export type Button = "L" | "R";

export type BoundaryRequest =
  | { type: "listScenes" }
  | { type: "init"; scene: string }
  | { type: "pointerDown"; x: number; y: number; button: Button }
  | { type: "pointerMove"; x: number; y: number }
  | { type: "pointerUp" }
  | { type: "getCursor"; x: number; y: number }
  | { type: "getRenderModel"; debug?: boolean }
  | { type: "saveLayout" }
  | { type: "restoreLayout"; document: string };

export interface FilledRect {
  kind: "FilledRect";
  x: number;
  y: number;
  w: number;
  h: number;
  style: string;
}

export interface PolygonOutline {
  kind: "PolygonOutline";
  points: [number, number][];
  style: string;
}

export interface CircleOutline {
  kind: "CircleOutline";
  cx: number;
  cy: number;
  r: number;
  style: string;
}

export interface TextCommand {
  kind: "Text";
  text: string;
  x: number;
  y: number;
  angle: number;
  style: string;
}

export type DebugShape =
  | { kind: "circle"; cx: number; cy: number; r: number }
  | { kind: "capsule"; x1: number; y1: number; x2: number; y2: number; halfWidth: number }
  | { kind: "polygon"; points: [number, number][] };

export interface DebugNode {
  kind: "DebugNode";
  shape: DebugShape;
  freedom: string;
}

export type DrawCommand = FilledRect | PolygonOutline | CircleOutline | TextCommand | DebugNode;

export interface BoundaryResponse {
  ok: boolean;
  error?: string;
  scenes?: string[];
  canvas?: [number, number];
  caught?: boolean;
  changed?: boolean;
  released?: { tag: string; node: number } | null;
  cursor?: string;
  commands?: DrawCommand[];
  document?: string;
  warnings?: string[];
}

/** Engine cursor shape -> CSS cursor. */
export const CURSOR_CSS: Record<string, string> = {
  Default: "default",
  MoveAll: "move",
  SizeNS: "ns-resize",
  SizeWE: "ew-resize",
  SizeNWSE: "nwse-resize",
  SizeNESW: "nesw-resize",
  SizeAll: "all-scroll",
  Rotate: "grab",
  Hand: "pointer",
};
