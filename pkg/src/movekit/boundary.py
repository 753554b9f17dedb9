"""Message boundary for embedding the engine in a browser demo.

The UI owns no geometry: it sends pointer events and queries and renders
whatever the engine answers. Requests and responses are single JSON
objects, strictly sequential; the draw commands come back ordered
back-to-front, matching the engine's z-order.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, HTTPServer
from pathlib import Path
from typing import Any, Optional

from .cover import Capsule, Circle, ConvexPolygon
from .elements import (
    ChatoyantPolygon,
    CommentedControl,
    DependentFrame,
    Disc,
    FramedControl,
    Group,
    LinkedRectangles,
    PlotComposite,
    Ring,
)
from .geometry import Point, Rect
from .mover import Element, PointerButton, _AutoFramed
from .persistence import restore_layout, save_layout
from .scene import Scene
from .scenes import CANVAS_SIZE, build_scene, scene_names


def _filled(rect: Rect, style: str) -> dict:
    return {"kind": "FilledRect", "x": rect.x, "y": rect.y, "w": rect.w, "h": rect.h, "style": style}


def _outline(points, style: str) -> dict:
    return {"kind": "PolygonOutline", "points": [[p.x, p.y] for p in points], "style": style}


def _circle(center: Point, r: float, style: str) -> dict:
    return {"kind": "CircleOutline", "cx": center.x, "cy": center.y, "r": r, "style": style}


def _text(content: str, pos: Point, angle: float, style: str) -> dict:
    return {"kind": "Text", "text": content, "x": pos.x, "y": pos.y, "angle": angle, "style": style}


def _control_commands(rect: Rect, label: str) -> list[dict]:
    cmds = [_filled(rect, "control")]
    if label:
        cmds.append(_text(label, rect.center, 0.0, "control-label"))
    return cmds


def element_commands(element: Element) -> list[dict]:
    if isinstance(element, _AutoFramed):
        return _control_commands(element.target.rect, getattr(element.target, "payload", ""))
    if isinstance(element, CommentedControl):
        cmds = _control_commands(element.rect, element.control.payload)
        cmds.append(_text(element.text, element.text_center(), element.angle, "comment"))
        return cmds
    if isinstance(element, FramedControl):
        return _control_commands(element.rect, element.payload)
    if isinstance(element, Group):
        cmds = [_outline(element.frame.corners(), "group-frame")]
        cmds.append(_text(element.title, Point(element.frame.x + 10, element.frame.y + 10), 0.0, "group-title"))
        for child in element.children:
            cmds.extend(_control_commands(child.rect, child.payload))
        return cmds
    if isinstance(element, DependentFrame):
        return [_outline(element.frame.corners(), "dependent-frame")]
    if isinstance(element, LinkedRectangles):
        return [_filled(r, "linked") for r in element.rects]
    if isinstance(element, ChatoyantPolygon):
        return [
            _outline(element.vertices, "polygon"),
            _circle(element.center, 2.0, "polygon-center"),
        ]
    if isinstance(element, Disc):
        return [_circle(element.center, element.radius, "disc")]
    if isinstance(element, Ring):
        return [
            _circle(element.center, element.inner_radius, "ring"),
            _circle(element.center, element.outer_radius, "ring"),
        ]
    if isinstance(element, PlotComposite):
        cmds = [_filled(element.area, "plot-area")]
        for k in range(len(element.scales)):
            cmds.append(_filled(element.scale_rect(k), "scale"))
        for j, c in enumerate(element.comments):
            cmds.append(_text(c.content, element.comment_center(j), c.angle, "comment"))
        return cmds
    return []


def _shape_json(shape) -> dict:
    if isinstance(shape, Circle):
        return {"kind": "circle", "cx": shape.center.x, "cy": shape.center.y, "r": shape.radius}
    if isinstance(shape, Capsule):
        return {
            "kind": "capsule",
            "x1": shape.p1.x, "y1": shape.p1.y,
            "x2": shape.p2.x, "y2": shape.p2.y,
            "halfWidth": shape.half_width,
        }
    assert isinstance(shape, ConvexPolygon)
    return {"kind": "polygon", "points": [[p.x, p.y] for p in shape.vertices]}


def render_commands(scene: Scene, debug: bool = False) -> list[dict]:
    """Draw commands for the whole scene, back-to-front."""
    cmds: list[dict] = []
    for element in scene.engine.elements():
        cmds.extend(element_commands(element))
    if debug:
        for element in scene.engine.elements():
            for node in element.define_cover().nodes:
                cmds.append(
                    {"kind": "DebugNode", "shape": _shape_json(node.shape), "freedom": node.freedom.value}
                )
    return cmds


class BoundarySession:
    """One scene, one engine, strictly sequential request handling."""

    def __init__(self) -> None:
        self.scene: Optional[Scene] = None

    def handle(self, request: dict) -> dict:
        try:
            return self._dispatch(request)
        except Exception as exc:  # every failure surfaces to the UI banner
            return {"ok": False, "error": str(exc)}

    def _require_scene(self) -> Scene:
        if self.scene is None:
            raise RuntimeError("no scene initialized; send init first")
        return self.scene

    def _dispatch(self, request: dict) -> dict:
        kind = request.get("type")
        if kind == "listScenes":
            return {"ok": True, "scenes": scene_names()}
        if kind == "init":
            self.scene = build_scene(request["scene"])
            return {"ok": True, "scenes": scene_names(), "canvas": list(CANVAS_SIZE)}
        scene = self._require_scene()
        engine = scene.engine
        if kind == "pointerDown":
            button = PointerButton(request.get("button", "L"))
            caught = engine.catch(Point(float(request["x"]), float(request["y"])), button)
            return {"ok": True, "caught": caught}
        if kind == "pointerMove":
            changed = engine.move(Point(float(request["x"]), float(request["y"])))
            return {"ok": True, "changed": changed}
        if kind == "pointerUp":
            released = engine.release()
            if released is None:
                return {"ok": True, "released": None}
            element_id, node = released
            tag = scene.tag_of(engine.element_by_id(element_id))
            return {"ok": True, "released": {"tag": tag, "node": node}}
        if kind == "getCursor":
            cursor = engine.cursor(Point(float(request["x"]), float(request["y"])))
            return {"ok": True, "cursor": cursor.value}
        if kind == "getRenderModel":
            return {"ok": True, "commands": render_commands(scene, bool(request.get("debug")))}
        if kind == "saveLayout":
            return {"ok": True, "document": save_layout(scene)}
        if kind == "restoreLayout":
            warnings = restore_layout(scene, request["document"])
            return {"ok": True, "warnings": warnings}
        raise ValueError(f"unknown request type: {kind!r}")


def serve(port: int, root: Path) -> None:
    """Single-threaded HTTP server: POST /api drives one BoundarySession,
    GET serves the demo's static files from root."""
    session = BoundarySession()
    root = root.resolve()

    class Handler(BaseHTTPRequestHandler):
        def log_message(self, fmt, *args):  # quiet by default
            pass

        def _send(self, code: int, body: bytes, content_type: str) -> None:
            self.send_response(code)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(body)))
            self.end_headers()
            self.wfile.write(body)

        def do_POST(self) -> None:
            if self.path != "/api":
                self._send(404, b"not found", "text/plain")
                return
            length = int(self.headers.get("Content-Length", "0"))
            try:
                request = json.loads(self.rfile.read(length) or b"{}")
            except json.JSONDecodeError as exc:
                response: dict[str, Any] = {"ok": False, "error": f"bad JSON: {exc}"}
            else:
                response = session.handle(request)
            self._send(200, json.dumps(response).encode(), "application/json")

        def do_GET(self) -> None:
            rel = self.path.split("?", 1)[0].lstrip("/") or "index.html"
            target = (root / rel).resolve()
            if root not in target.parents and target != root:
                self._send(403, b"forbidden", "text/plain")
                return
            if not target.is_file():
                self._send(404, b"not found", "text/plain")
                return
            suffix = target.suffix
            content_type = {
                ".html": "text/html",
                ".js": "text/javascript",
                ".css": "text/css",
                ".json": "application/json",
                ".mrl": "text/plain",
            }.get(suffix, "application/octet-stream")
            self._send(200, target.read_bytes(), content_type)

    server = HTTPServer(("127.0.0.1", port), Handler)
    print(f"serving on http://127.0.0.1:{port}/ (root {root})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
