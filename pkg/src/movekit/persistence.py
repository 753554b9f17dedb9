"""Layout persistence: save and restore element geometry, z-order and
angles as a line-oriented text document (`.mrl` files).

Format, fixed so files diff cleanly and round-trip byte-for-byte:

    MRL1 <sceneId>
    <tag> <kind> <x> <y> <w> <h> <angle>
      <childTag> <childKind> <x> <y> <w> <h> <angle>
      ...

Records appear in z-order (bottom first); reals are rendered with 17
significant digits so doubles round-trip exactly. Field meaning is
per kind:

    framed-control / commented-control  x y w h of the control rect
      text (child)                      anchor fraction in x y, angle
    group                               frame rect
    dependent-frame                     derived frame (informational)
    linked-rects                        first rect; offsets are fixed
    polygon                             center in x y, angle
      vertex (children v0..vN)          vertex position in x y
    disc                                center in x y, radius in w and h
    ring                                center in x y, inner w, outer h
    plot                                area rect
      scale (children s0..sN)           offset vector in x y
      comment (children c0..cN)         anchor fraction in x y, angle
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .elements import (
    ChatoyantPolygon,
    CommentedControl,
    DependentFrame,
    Disc,
    FramedControl,
    Group,
    LinkedRectangles,
    MIN_DISC_RADIUS,
    MIN_RING_GAP,
    PLOT_MIN_SIZE,
    PlotComposite,
    Ring,
)
from .geometry import Point, Rect, clamp
from .mover import Element, _AutoFramed
from .scene import Scene

MAGIC = "MRL1"
FILE_EXTENSION = ".mrl"


class LayoutError(ValueError):
    """Malformed layout document; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class LayoutRecord:
    tag: str
    kind: str
    x: float
    y: float
    w: float
    h: float
    angle: float
    children: list["LayoutRecord"] = field(default_factory=list)

    def field_value(self, name: str) -> float:
        try:
            return {"x": self.x, "y": self.y, "w": self.w, "h": self.h, "angle": self.angle}[name]
        except KeyError:
            raise KeyError(f"unknown geometry field: {name!r}") from None

    def child(self, tag: str) -> "LayoutRecord | None":
        for c in self.children:
            if c.tag == tag:
                return c
        return None


@dataclass
class LayoutDocument:
    scene_id: str
    records: list[LayoutRecord]

    def record(self, tag: str) -> "LayoutRecord | None":
        for r in self.records:
            if r.tag == tag:
                return r
        return None


def _fmt(v: float) -> str:
    return format(v, ".17g")


# -- extraction ----------------------------------------------------------


def element_record(tag: str, element: Element) -> LayoutRecord:
    """Geometry snapshot of one element, dispatched on its class."""
    if isinstance(element, _AutoFramed):
        r = element.target.rect
        return LayoutRecord(tag, "framed-control", r.x, r.y, r.w, r.h, 0.0)
    if isinstance(element, CommentedControl):
        r = element.rect
        rec = LayoutRecord(tag, "commented-control", r.x, r.y, r.w, r.h, 0.0)
        rec.children.append(
            LayoutRecord("text", "text", element.anchor[0], element.anchor[1], 0.0, 0.0, element.angle)
        )
        return rec
    if isinstance(element, FramedControl):
        r = element.rect
        return LayoutRecord(tag, "framed-control", r.x, r.y, r.w, r.h, 0.0)
    if isinstance(element, Group):
        f = element.frame
        return LayoutRecord(tag, "group", f.x, f.y, f.w, f.h, 0.0)
    if isinstance(element, DependentFrame):
        f = element.frame
        return LayoutRecord(tag, "dependent-frame", f.x, f.y, f.w, f.h, 0.0)
    if isinstance(element, LinkedRectangles):
        r = element.rects[0]
        return LayoutRecord(tag, "linked-rects", r.x, r.y, r.w, r.h, 0.0)
    if isinstance(element, ChatoyantPolygon):
        rec = LayoutRecord(tag, "polygon", element.center.x, element.center.y, 0.0, 0.0, element.angle)
        for k, v in enumerate(element.vertices):
            rec.children.append(LayoutRecord(f"v{k}", "vertex", v.x, v.y, 0.0, 0.0, 0.0))
        return rec
    if isinstance(element, Disc):
        c = element.center
        return LayoutRecord(tag, "disc", c.x, c.y, element.radius, element.radius, 0.0)
    if isinstance(element, Ring):
        c = element.center
        return LayoutRecord(tag, "ring", c.x, c.y, element.inner_radius, element.outer_radius, 0.0)
    if isinstance(element, PlotComposite):
        a = element.area
        rec = LayoutRecord(tag, "plot", a.x, a.y, a.w, a.h, 0.0)
        for k, s in enumerate(element.scales):
            rec.children.append(LayoutRecord(f"s{k}", "scale", s.offset[0], s.offset[1], 0.0, 0.0, 0.0))
        for j, c in enumerate(element.comments):
            rec.children.append(LayoutRecord(f"c{j}", "comment", c.anchor[0], c.anchor[1], 0.0, 0.0, c.angle))
        return rec
    raise TypeError(f"no layout record mapping for {type(element).__name__}")


def scene_document(scene: Scene) -> LayoutDocument:
    records = [
        element_record(tag, scene.element(tag)) for tag in scene.tags_in_z_order()
    ]
    return LayoutDocument(scene.scene_id, records)


def save_layout(scene: Scene) -> str:
    """Deterministic text document for the scene's current layout."""
    doc = scene_document(scene)
    lines = [f"{MAGIC} {doc.scene_id}"]
    for rec in doc.records:
        lines.append(_record_line(rec))
        for child in rec.children:
            lines.append("  " + _record_line(child))
    return "\n".join(lines) + "\n"


def _record_line(rec: LayoutRecord) -> str:
    return (
        f"{rec.tag} {rec.kind} {_fmt(rec.x)} {_fmt(rec.y)} "
        f"{_fmt(rec.w)} {_fmt(rec.h)} {_fmt(rec.angle)}"
    )


# -- parsing -------------------------------------------------------------


def parse_layout(text: str) -> LayoutDocument:
    lines = text.splitlines()
    if not lines:
        raise LayoutError(1, "empty document")
    header = lines[0].split(" ")
    if len(header) != 2 or header[0] != MAGIC:
        raise LayoutError(1, f"bad header, expected '{MAGIC} <sceneId>'")
    doc = LayoutDocument(header[1], [])
    for lineno, raw in enumerate(lines[1:], start=2):
        if not raw.strip():
            continue
        indented = raw.startswith("  ")
        rec = _parse_record(raw.strip(), lineno)
        if indented:
            if not doc.records:
                raise LayoutError(lineno, "child record before any element record")
            doc.records[-1].children.append(rec)
        else:
            doc.records.append(rec)
    return doc


def _parse_record(line: str, lineno: int) -> LayoutRecord:
    parts = line.split(" ")
    if len(parts) != 7:
        raise LayoutError(lineno, f"expected 7 fields, got {len(parts)}")
    tag, kind = parts[0], parts[1]
    values = []
    for token in parts[2:]:
        try:
            v = float(token)
        except ValueError:
            raise LayoutError(lineno, f"bad number: {token!r}") from None
        if not math.isfinite(v):
            raise LayoutError(lineno, f"non-finite value: {token!r}")
        values.append(v)
    return LayoutRecord(tag, kind, *values)


# -- application ---------------------------------------------------------


def restore_layout(scene: Scene, document: str | LayoutDocument) -> list[str]:
    """Apply a saved layout to the scene; returns warnings for records that
    could not be applied cleanly (unknown tags, clamped sizes, ...).

    Documents for another scene are rejected. Elements missing from the
    document keep their current geometry; document records set z-order
    (listed elements end up on top, in document order).
    """
    doc = parse_layout(document) if isinstance(document, str) else document
    if doc.scene_id != scene.scene_id:
        raise ValueError(
            f"layout is for scene {doc.scene_id!r}, not {scene.scene_id!r}"
        )
    warnings: list[str] = []
    for rec in doc.records:
        if not scene.has_tag(rec.tag):
            warnings.append(f"{rec.tag}: unknown tag, record ignored")
            continue
        element = scene.element(rec.tag)
        expected = element_record(rec.tag, element).kind
        if rec.kind != expected:
            warnings.append(f"{rec.tag}: kind {rec.kind!r} does not match {expected!r}, record ignored")
            continue
        _apply_record(element, rec, warnings)
    for rec in doc.records:
        if scene.has_tag(rec.tag):
            scene.bring_to_front(rec.tag)
    return warnings


def _clamped_size(
    tag: str, w: float, h: float, min_size, max_size, warnings: list[str]
) -> tuple[float, float]:
    cw = clamp(w, min_size[0], max_size[0])
    ch = clamp(h, min_size[1], max_size[1])
    if (cw, ch) != (w, h):
        warnings.append(f"{tag}: size {w} x {h} clamped to limits")
    return cw, ch


def _apply_record(element: Element, rec: LayoutRecord, warnings: list[str]) -> None:
    if isinstance(element, _AutoFramed):
        frame = element.frame
        w, h = _clamped_size(rec.tag, rec.w, rec.h, frame.min_size, frame.max_size, warnings)
        element.target.rect = Rect(rec.x, rec.y, w, h)
        return
    if isinstance(element, CommentedControl):
        w, h = _clamped_size(
            rec.tag, rec.w, rec.h, element.control.min_size, element.control.max_size, warnings
        )
        element.control.rect = Rect(rec.x, rec.y, w, h)
        text = rec.child("text")
        if text is not None:
            element.anchor = (text.x, text.y)
            element.angle = text.angle
        return
    if isinstance(element, FramedControl):
        w, h = _clamped_size(rec.tag, rec.w, rec.h, element.min_size, element.max_size, warnings)
        element.rect = Rect(rec.x, rec.y, w, h)
        return
    if isinstance(element, Group):
        w, h = _clamped_size(rec.tag, rec.w, rec.h, element.frame_min, element.frame_max, warnings)
        element.set_frame(Rect(rec.x, rec.y, w, h))
        return
    if isinstance(element, DependentFrame):
        return  # frame is derived from the children, nothing to apply
    if isinstance(element, LinkedRectangles):
        first = element.rects[0]
        element.move(rec.x - first.x, rec.y - first.y)
        return
    if isinstance(element, ChatoyantPolygon):
        verts = [c for c in rec.children if c.kind == "vertex"]
        if len(verts) != len(element.vertices):
            warnings.append(f"{rec.tag}: vertex count mismatch, geometry kept")
            return
        element.center = Point(rec.x, rec.y)
        element.vertices = [Point(v.x, v.y) for v in verts]
        element.angle = rec.angle
        return
    if isinstance(element, Disc):
        element.center = Point(rec.x, rec.y)
        r = max(rec.w, MIN_DISC_RADIUS)
        if r != rec.w:
            warnings.append(f"{rec.tag}: radius {rec.w} clamped to minimum")
        element.radius = r
        return
    if isinstance(element, Ring):
        element.center = Point(rec.x, rec.y)
        inner = max(rec.w, MIN_DISC_RADIUS)
        outer = max(rec.h, inner + MIN_RING_GAP)
        if (inner, outer) != (rec.w, rec.h):
            warnings.append(f"{rec.tag}: radii {rec.w}/{rec.h} clamped")
        element.inner_radius = inner
        element.outer_radius = outer
        return
    if isinstance(element, PlotComposite):
        w, h = _clamped_size(rec.tag, rec.w, rec.h, PLOT_MIN_SIZE, (math.inf, math.inf), warnings)
        element.area = Rect(rec.x, rec.y, w, h)
        for k, s in enumerate(element.scales):
            child = rec.child(f"s{k}")
            if child is not None and child.kind == "scale":
                s.offset = (child.x, child.y)
        for j, c in enumerate(element.comments):
            child = rec.child(f"c{j}")
            if child is not None and child.kind == "comment":
                c.anchor = (child.x, child.y)
                c.angle = child.angle
        return
    raise TypeError(f"no layout restore mapping for {type(element).__name__}")
