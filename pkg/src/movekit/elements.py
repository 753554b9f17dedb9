"""Concrete element classes: framed controls, commented controls, groups,
dependent frames, linked rectangles, the chatoyant polygon, N-node discs
and rings, and the plot/scale/comment parent-child composite.

Every class keeps its own geometry as the single source of truth and
rebuilds its cover on demand; move_node returns True only when geometry
actually changed, which is what gates repaints upstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence

from .cover import (
    Capsule,
    Circle,
    ConvexPolygon,
    Cover,
    CoverNode,
    CursorShape,
    DEFAULT_FRAME_WIDTH,
    FrameRole,
    MovementFreedom,
    ResizePolicy,
    frame_cover_roles,
    make_n_node_border_cover,
    make_rect_frame_cover,
    resize_frame_rect,
)
from .geometry import (
    Point,
    Rect,
    bounds_union,
    clamp,
    normalize_angle,
    polygon_signed_area,
    rotate_point,
)
from .mover import Element, PointerButton

# Deterministic stand-in for glyph metrics: painted text occupies a box
# sized from its content, so text nodes are testable without a renderer.
TEXT_CHAR_W = 8.0
TEXT_LINE_H = 16.0

APEX_NODE_RADIUS = 6.0
CENTER_NODE_RADIUS = 6.0
EDGE_NODE_HALF_WIDTH = 4.0
MIN_CIRCUMRADIUS = 4.0           # zoom may not collapse a polygon below this

MIN_DISC_RADIUS = 4.0
MIN_RING_GAP = 4.0

PLOT_BORDER_HALF = 3.0           # resize band straddles the area border
PLOT_CORNER_HALF = 6.0
PLOT_MIN_SIZE = (40.0, 30.0)
SCALE_BREADTH = 14.0

_NO_LIMIT = (math.inf, math.inf)


def _size_of(rect: Rect) -> tuple[float, float]:
    return (rect.w, rect.h)


def _check_limits(rect: Rect, min_size, max_size) -> None:
    if not (min_size[0] <= rect.w <= max_size[0] and min_size[1] <= rect.h <= max_size[1]):
        raise ValueError(
            f"rect size {rect.w} x {rect.h} outside limits {min_size}..{max_size}"
        )


def text_box_polygon(center: Point, content: str, angle: float) -> ConvexPolygon:
    """Bounding box of painted text, rotated about its center."""
    hw = TEXT_CHAR_W * max(1, len(content)) / 2.0
    hh = TEXT_LINE_H / 2.0
    corners = (
        Point(center.x - hw, center.y - hh),
        Point(center.x + hw, center.y - hh),
        Point(center.x + hw, center.y + hh),
        Point(center.x - hw, center.y + hh),
    )
    if angle == 0.0:
        return ConvexPolygon(corners)
    return ConvexPolygon(tuple(rotate_point(c, center, angle) for c in corners))


def _rotation_delta(center: Point, pt: Point, dx: float, dy: float) -> Optional[float]:
    """Pointer swing around center between the previous and current point."""
    prev = Point(pt.x - dx, pt.y - dy)
    if prev.distance_to(center) < 1e-9 or pt.distance_to(center) < 1e-9:
        return None
    return normalize_angle(
        math.atan2(pt.y - center.y, pt.x - center.x)
        - math.atan2(prev.y - center.y, prev.x - center.x)
    )


class FramedControl(Element):
    """Control-like rectangle: interior is interaction-forbidden, the
    surrounding frame moves it and (per size limits) resizes it."""

    def __init__(
        self,
        rect: Rect,
        min_size: Optional[tuple[float, float]] = None,
        max_size: Optional[tuple[float, float]] = None,
        payload: str = "",
        frame_width: float = DEFAULT_FRAME_WIDTH,
    ):
        self.min_size = tuple(min_size) if min_size is not None else _size_of(rect)
        self.max_size = tuple(max_size) if max_size is not None else _size_of(rect)
        _check_limits(rect, self.min_size, self.max_size)
        self.rect = rect
        self.payload = payload
        self.frame_width = frame_width

    @property
    def policy(self) -> ResizePolicy:
        return ResizePolicy.from_limits(self.min_size, self.max_size)

    def define_cover(self) -> Cover:
        return make_rect_frame_cover(self.rect, self.frame_width, self.policy)

    def move(self, dx: float, dy: float) -> None:
        self.rect = self.rect.translated(dx, dy)

    def move_node(self, i: int, dx: float, dy: float, pt: Point, button: PointerButton) -> bool:
        if button is PointerButton.RIGHT:
            return False
        role = frame_cover_roles(self.policy)[i]
        if role.value.startswith("strip"):
            return False
        new = resize_frame_rect(self.rect, role, dx, dy, self.min_size, self.max_size)
        if new == self.rect:
            return False
        self.rect = new
        return True

    def bounds(self) -> Rect:
        return self.rect


class CommentedControl(Element):
    """A framed control paired with painted text. The pair moves together;
    the text also moves and rotates on its own, changing only its anchor
    (a fractional offset in the control's rect) and angle."""

    rotatable = True

    def __init__(
        self,
        rect: Rect,
        text: str,
        anchor: tuple[float, float] = (0.5, -0.6),
        angle: float = 0.0,
        min_size: Optional[tuple[float, float]] = None,
        max_size: Optional[tuple[float, float]] = None,
        payload: str = "",
        frame_width: float = DEFAULT_FRAME_WIDTH,
    ):
        self.control = FramedControl(rect, min_size, max_size, payload, frame_width)
        self.text = text
        self.anchor = (float(anchor[0]), float(anchor[1]))
        self.angle = float(angle)

    @property
    def rect(self) -> Rect:
        return self.control.rect

    def text_center(self) -> Point:
        r = self.control.rect
        return Point(r.x + self.anchor[0] * r.w, r.y + self.anchor[1] * r.h)

    def text_polygon(self) -> ConvexPolygon:
        return text_box_polygon(self.text_center(), self.text, self.angle)

    def define_cover(self) -> Cover:
        text_node = CoverNode(self.text_polygon(), MovementFreedom.ANY, CursorShape.MOVE_ALL)
        return Cover((text_node,) + self.control.define_cover().nodes)

    def move(self, dx: float, dy: float) -> None:
        self.control.move(dx, dy)  # anchor is relative: the text follows

    def move_node(self, i: int, dx: float, dy: float, pt: Point, button: PointerButton) -> bool:
        if i == 0:
            if button is PointerButton.RIGHT:
                delta = _rotation_delta(self.text_center(), pt, dx, dy)
                if delta is None or delta == 0.0:
                    return False
                self.angle += delta
                return True
            if dx == 0.0 and dy == 0.0:
                return False
            r = self.control.rect
            c = self.text_center().translated(dx, dy)
            self.anchor = ((c.x - r.x) / r.w, (c.y - r.y) / r.h)
            return True
        return self.control.move_node(i - 1, dx, dy, pt, button)

    def bounds(self) -> Rect:
        bx0, by0, bx1, by1 = self.text_polygon().bbox
        return bounds_union([self.control.rect, Rect(bx0, by0, bx1 - bx0, by1 - by0)])


LayoutRule = Callable[[Rect], Sequence[Rect]]


class Group(Element):
    """Frame-driven group: the frame moves by any uncovered inner point and
    resizes within its range; children sit where the layout rule puts them
    for the current frame, and their interiors stay dead zones."""

    def __init__(
        self,
        frame: Rect,
        title: str,
        frame_min: tuple[float, float],
        frame_max: tuple[float, float],
        children: Sequence[FramedControl],
        layout: LayoutRule,
        frame_width: float = DEFAULT_FRAME_WIDTH,
    ):
        self.title = title
        self.frame_min = tuple(frame_min)
        self.frame_max = tuple(frame_max)
        self.children = list(children)
        self.layout = layout
        self.frame_width = frame_width
        _check_limits(frame, self.frame_min, self.frame_max)
        for probe in (
            frame,
            Rect(frame.x, frame.y, self.frame_min[0], self.frame_min[1]),
            Rect(frame.x, frame.y, self.frame_max[0], self.frame_max[1]),
        ):
            self._validate_layout(probe)
        self.frame = frame
        self._apply_layout()

    def _validate_layout(self, frame: Rect) -> None:
        rects = list(self.layout(frame))
        if len(rects) != len(self.children):
            raise ValueError("layout rule must produce one rect per child")
        for rc in rects:
            if not frame.contains_rect(rc):
                raise ValueError(f"layout rule puts a child outside the frame: {rc}")

    def _apply_layout(self) -> None:
        for child, rc in zip(self.children, self.layout(self.frame)):
            child.rect = rc

    @property
    def policy(self) -> ResizePolicy:
        return ResizePolicy.from_limits(self.frame_min, self.frame_max)

    def define_cover(self) -> Cover:
        nodes: list[CoverNode] = []
        for child in self.children:
            r = child.rect
            poly = ConvexPolygon(r.corners())
            nodes.append(CoverNode(poly, MovementFreedom.ANY, CursorShape.DEFAULT))
        nodes.extend(make_rect_frame_cover(self.frame, self.frame_width, self.policy).nodes)
        body = ConvexPolygon(self.frame.corners())
        nodes.append(CoverNode(body, MovementFreedom.NONE, CursorShape.MOVE_ALL))
        return Cover(nodes)

    def set_frame(self, frame: Rect) -> None:
        self.frame = frame
        self._apply_layout()

    def move(self, dx: float, dy: float) -> None:
        self.set_frame(self.frame.translated(dx, dy))

    def move_node(self, i: int, dx: float, dy: float, pt: Point, button: PointerButton) -> bool:
        if button is PointerButton.RIGHT:
            return False
        n_children = len(self.children)
        if i < n_children:
            return False  # child interiors are dead zones
        role = frame_cover_roles(self.policy)[i - n_children]
        if role.value.startswith("strip"):
            return False
        new = resize_frame_rect(self.frame, role, dx, dy, self.frame_min, self.frame_max)
        if new == self.frame:
            return False
        self.set_frame(new)
        return True

    def bounds(self) -> Rect:
        return self.frame


class DependentFrame(Element):
    """Group determined from inside: children are registered individually
    and move on their own; the frame is always the union of their bounds
    expanded by the margin, and grabbing the frame band moves everyone."""

    def __init__(self, children: Sequence[Element], margin: float):
        if not children:
            raise ValueError("dependent frame needs at least one child")
        if not (margin > 0):
            raise ValueError(f"margin must be positive, got {margin}")
        self.children = list(children)
        self.margin = float(margin)

    @property
    def frame(self) -> Rect:
        return self._union().expanded(self.margin)

    def _union(self) -> Rect:
        return bounds_union([c.bounds() for c in self.children])

    def define_cover(self) -> Cover:
        # The band between the children union and the frame, all move strips.
        return make_rect_frame_cover(self._union(), self.margin, ResizePolicy.NO_RESIZE)

    def move(self, dx: float, dy: float) -> None:
        for child in self.children:
            child.move(dx, dy)

    def move_node(self, i: int, dx: float, dy: float, pt: Point, button: PointerButton) -> bool:
        return False  # every node is a freedom-None strip

    def bounds(self) -> Rect:
        return self.frame


class LinkedRectangles(Element):
    """Any number of rectangles moving synchronously; grab any of them by
    any point. Non-resizable, offsets are fixed for life."""

    def __init__(self, rects: Sequence[Rect]):
        if not rects:
            raise ValueError("linked rectangles need at least one rect")
        self.rects = list(rects)

    def define_cover(self) -> Cover:
        return Cover(
            [
                CoverNode(ConvexPolygon(r.corners()), MovementFreedom.NONE, CursorShape.MOVE_ALL)
                for r in self.rects
            ]
        )

    def move(self, dx: float, dy: float) -> None:
        self.rects = [r.translated(dx, dy) for r in self.rects]

    def move_node(self, i: int, dx: float, dy: float, pt: Point, button: PointerButton) -> bool:
        return False

    def bounds(self) -> Rect:
        return bounds_union(self.rects)


class ChatoyantPolygon(Element):
    """The showcase object using all three node shapes: moved or rotated by
    any inner point, reconfigured by any apex or the center point, zoomed
    by any border point.

    Node order: apexes, center, edges, body. Apex drags must keep the
    polygon convex; zooms scale every vertex about the center and are
    ignored if they would collapse the circumradius below the minimum.
    """

    rotatable = True

    def __init__(self, center: Point, vertices: Sequence[Point], angle: float = 0.0):
        poly = ConvexPolygon(tuple(vertices))  # validates convexity / winding
        self.center = center
        self.vertices = list(poly.vertices)
        self.angle = float(angle)

    @staticmethod
    def regular(center: Point, sides: int, circumradius: float, angle: float = 0.0) -> "ChatoyantPolygon":
        step = 2.0 * math.pi / sides
        verts = [
            Point(
                center.x + circumradius * math.cos(angle + step * k),
                center.y + circumradius * math.sin(angle + step * k),
            )
            for k in range(sides)
        ]
        return ChatoyantPolygon(center, verts, angle)

    # node index layout
    def _node_role(self, i: int) -> tuple[str, int]:
        n = len(self.vertices)
        if i < n:
            return ("apex", i)
        if i == n:
            return ("center", 0)
        if i <= 2 * n:
            return ("edge", i - n - 1)
        return ("body", 0)

    def define_cover(self) -> Cover:
        nodes: list[CoverNode] = []
        for v in self.vertices:
            nodes.append(CoverNode(Circle(v, APEX_NODE_RADIUS), MovementFreedom.ANY, CursorShape.SIZE_ALL))
        nodes.append(CoverNode(Circle(self.center, CENTER_NODE_RADIUS), MovementFreedom.ANY, CursorShape.SIZE_ALL))
        n = len(self.vertices)
        for k in range(n):
            nodes.append(
                CoverNode(
                    Capsule(self.vertices[k], self.vertices[(k + 1) % n], EDGE_NODE_HALF_WIDTH),
                    MovementFreedom.ANY,
                    CursorShape.HAND,
                )
            )
        nodes.append(
            CoverNode(ConvexPolygon(tuple(self.vertices)), MovementFreedom.NONE, CursorShape.MOVE_ALL)
        )
        return Cover(nodes)

    def move(self, dx: float, dy: float) -> None:
        self.center = self.center.translated(dx, dy)
        self.vertices = [v.translated(dx, dy) for v in self.vertices]

    def _rotate(self, pt: Point, dx: float, dy: float) -> bool:
        delta = _rotation_delta(self.center, pt, dx, dy)
        if delta is None or delta == 0.0:
            return False
        self.vertices = [rotate_point(v, self.center, delta) for v in self.vertices]
        self.angle += delta
        return True

    def move_node(self, i: int, dx: float, dy: float, pt: Point, button: PointerButton) -> bool:
        if button is PointerButton.RIGHT:
            return self._rotate(pt, dx, dy)
        kind, k = self._node_role(i)
        if kind == "apex":
            if dx == 0.0 and dy == 0.0:
                return False
            candidate = list(self.vertices)
            candidate[k] = candidate[k].translated(dx, dy)
            if not self._acceptable(candidate):
                return False
            self.vertices = candidate
            return True
        if kind == "center":
            if dx == 0.0 and dy == 0.0:
                return False
            self.move(dx, dy)
            return True
        if kind == "edge":
            prev = Point(pt.x - dx, pt.y - dy)
            r0 = prev.distance_to(self.center)
            r1 = pt.distance_to(self.center)
            if r0 < 1e-9 or r1 == r0:
                return False
            f = r1 / r0
            scaled = [
                Point(self.center.x + (v.x - self.center.x) * f, self.center.y + (v.y - self.center.y) * f)
                for v in self.vertices
            ]
            if max(v.distance_to(self.center) for v in scaled) < MIN_CIRCUMRADIUS:
                return False
            self.vertices = scaled
            return True
        return False  # body forward-moves via move()

    def _acceptable(self, candidate: list[Point]) -> bool:
        """Apex drags may reshape the polygon but not break convexity or
        flip the winding."""
        try:
            ConvexPolygon(tuple(candidate))
        except ValueError:
            return False
        return (polygon_signed_area(candidate) > 0) == (polygon_signed_area(self.vertices) > 0)

    def bounds(self) -> Rect:
        xs = [v.x for v in self.vertices] + [self.center.x]
        ys = [v.y for v in self.vertices] + [self.center.y]
        return Rect(min(xs), min(ys), max(xs) - min(xs), max(ys) - min(ys))


class Disc(Element):
    """Filled circle with an N-node border: border nodes resize the radius,
    the body moves the disc."""

    def __init__(self, center: Point, radius: float, count: int = 24, node_radius: float = 5.0):
        if not (radius >= MIN_DISC_RADIUS):
            raise ValueError(f"disc radius must be at least {MIN_DISC_RADIUS}")
        self.center = center
        self.radius = float(radius)
        self.count = count
        self.node_radius = node_radius

    def define_cover(self) -> Cover:
        return make_n_node_border_cover(self.center, [self.radius], self.node_radius, self.count)

    def move(self, dx: float, dy: float) -> None:
        self.center = self.center.translated(dx, dy)

    def move_node(self, i: int, dx: float, dy: float, pt: Point, button: PointerButton) -> bool:
        if button is PointerButton.RIGHT or i >= self.count:
            return False
        new_r = max(pt.distance_to(self.center), MIN_DISC_RADIUS)
        if new_r == self.radius:
            return False
        self.radius = new_r
        return True

    def bounds(self) -> Rect:
        r = self.radius
        return Rect(self.center.x - r, self.center.y - r, 2 * r, 2 * r)


class Ring(Element):
    """Annulus with N-node covers on both borders; each border resizes its
    own radius, the body between them moves the ring."""

    def __init__(
        self,
        center: Point,
        inner_radius: float,
        outer_radius: float,
        count: int = 24,
        node_radius: float = 5.0,
    ):
        if not (inner_radius >= MIN_DISC_RADIUS):
            raise ValueError(f"inner radius must be at least {MIN_DISC_RADIUS}")
        if not (inner_radius + MIN_RING_GAP <= outer_radius):
            raise ValueError("ring borders must stay at least the minimum gap apart")
        self.center = center
        self.inner_radius = float(inner_radius)
        self.outer_radius = float(outer_radius)
        self.count = count
        self.node_radius = node_radius

    def define_cover(self) -> Cover:
        return make_n_node_border_cover(
            self.center, [self.inner_radius, self.outer_radius], self.node_radius, self.count
        )

    def move(self, dx: float, dy: float) -> None:
        self.center = self.center.translated(dx, dy)

    def move_node(self, i: int, dx: float, dy: float, pt: Point, button: PointerButton) -> bool:
        if button is PointerButton.RIGHT or i >= 2 * self.count:
            return False
        d = pt.distance_to(self.center)
        if i < self.count:
            new_r = clamp(d, MIN_DISC_RADIUS, self.outer_radius - MIN_RING_GAP)
            if new_r == self.inner_radius:
                return False
            self.inner_radius = new_r
        else:
            new_r = max(d, self.inner_radius + MIN_RING_GAP)
            if new_r == self.outer_radius:
                return False
            self.outer_radius = new_r
        return True

    def bounds(self) -> Rect:
        r = self.outer_radius
        return Rect(self.center.x - r, self.center.y - r, 2 * r, 2 * r)


class PlotSide(Enum):
    LEFT = "left"
    RIGHT = "right"
    TOP = "top"
    BOTTOM = "bottom"


@dataclass
class PlotScale:
    """Scale strip attached to one side of a plot area. Its rect derives
    from the side's anchor corner plus a user-adjustable offset; its length
    follows the attached side, so area resizes re-derive it."""

    side: PlotSide
    offset: tuple[float, float]
    ratio: float = 1.0
    breadth: float = SCALE_BREADTH


@dataclass
class PlotComment:
    """Painted text anchored fractionally to its owner: the area itself
    (owner < 0) or a scale by index."""

    owner: int
    content: str
    anchor: tuple[float, float]
    angle: float = 0.0


class PlotComposite(Element):
    """Plot area with attached scales and comments. The area moves by any
    inner point and resizes by any border point; scales move individually
    (their offsets are the record of that); comments move and rotate
    individually. All child positions derive from parent-relative state,
    so synchronous movement costs nothing."""

    rotatable = True

    def __init__(self, area: Rect, scales: Sequence[PlotScale] = (), comments: Sequence[PlotComment] = ()):
        _check_limits(area, PLOT_MIN_SIZE, _NO_LIMIT)
        self.area = area
        self.scales = list(scales)
        self.comments = list(comments)
        for c in self.comments:
            if not (-1 <= c.owner < len(self.scales)):
                raise ValueError(f"comment owner out of range: {c.owner}")

    # -- derived child geometry -----------------------------------------

    def _anchor_corner(self, side: PlotSide) -> Point:
        a = self.area
        if side is PlotSide.LEFT or side is PlotSide.TOP:
            return Point(a.x, a.y)
        if side is PlotSide.RIGHT:
            return Point(a.right, a.y)
        return Point(a.x, a.bottom)

    def scale_rect(self, k: int) -> Rect:
        s = self.scales[k]
        origin = self._anchor_corner(s.side)
        x = origin.x + s.offset[0]
        y = origin.y + s.offset[1]
        if s.side in (PlotSide.LEFT, PlotSide.RIGHT):
            return Rect(x, y, s.breadth, s.ratio * self.area.h)
        return Rect(x, y, s.ratio * self.area.w, s.breadth)

    def _owner_rect(self, owner: int) -> Rect:
        return self.area if owner < 0 else self.scale_rect(owner)

    def comment_center(self, j: int) -> Point:
        c = self.comments[j]
        r = self._owner_rect(c.owner)
        return Point(r.x + c.anchor[0] * r.w, r.y + c.anchor[1] * r.h)

    def comment_polygon(self, j: int) -> ConvexPolygon:
        c = self.comments[j]
        return text_box_polygon(self.comment_center(j), c.content, c.angle)

    # -- cover -----------------------------------------------------------

    def _border_roles(self) -> tuple[FrameRole, ...]:
        return (
            FrameRole.CORNER_TL,
            FrameRole.CORNER_TR,
            FrameRole.CORNER_BR,
            FrameRole.CORNER_BL,
            FrameRole.MID_TOP,
            FrameRole.MID_RIGHT,
            FrameRole.MID_BOTTOM,
            FrameRole.MID_LEFT,
        )

    def define_cover(self) -> Cover:
        nodes: list[CoverNode] = []
        for j in range(len(self.comments)):
            nodes.append(CoverNode(self.comment_polygon(j), MovementFreedom.ANY, CursorShape.MOVE_ALL))
        for k in range(len(self.scales)):
            nodes.append(
                CoverNode(ConvexPolygon(self.scale_rect(k).corners()), MovementFreedom.ANY, CursorShape.MOVE_ALL)
            )
        a, b, ch = self.area, PLOT_BORDER_HALF, PLOT_CORNER_HALF
        for px, py in ((a.x, a.y), (a.right, a.y), (a.right, a.bottom), (a.x, a.bottom)):
            square = ConvexPolygon(
                (
                    Point(px - ch, py - ch),
                    Point(px + ch, py - ch),
                    Point(px + ch, py + ch),
                    Point(px - ch, py + ch),
                )
            )
            cursor = CursorShape.SIZE_NWSE if (px == a.x) == (py == a.y) else CursorShape.SIZE_NESW
            nodes.append(CoverNode(square, MovementFreedom.ANY, cursor))
        # Edge strips between the corner squares, straddling the border.
        edges = (
            (a.x + ch, a.y - b, a.right - ch, a.y + b, MovementFreedom.NS, CursorShape.SIZE_NS),
            (a.right - b, a.y + ch, a.right + b, a.bottom - ch, MovementFreedom.WE, CursorShape.SIZE_WE),
            (a.x + ch, a.bottom - b, a.right - ch, a.bottom + b, MovementFreedom.NS, CursorShape.SIZE_NS),
            (a.x - b, a.y + ch, a.x + b, a.bottom - ch, MovementFreedom.WE, CursorShape.SIZE_WE),
        )
        for x0, y0, x1, y1, freedom, cursor in edges:
            poly = ConvexPolygon((Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1)))
            nodes.append(CoverNode(poly, freedom, cursor))
        nodes.append(CoverNode(ConvexPolygon(a.corners()), MovementFreedom.NONE, CursorShape.MOVE_ALL))
        return Cover(nodes)

    def _classify(self, i: int) -> tuple[str, int]:
        nc, ns = len(self.comments), len(self.scales)
        if i < nc:
            return ("comment", i)
        if i < nc + ns:
            return ("scale", i - nc)
        if i < nc + ns + 4:
            return ("corner", i - nc - ns)
        if i < nc + ns + 8:
            return ("edge", i - nc - ns - 4)
        return ("body", 0)

    # -- behavior ---------------------------------------------------------

    def move(self, dx: float, dy: float) -> None:
        self.area = self.area.translated(dx, dy)

    def move_node(self, i: int, dx: float, dy: float, pt: Point, button: PointerButton) -> bool:
        kind, k = self._classify(i)
        if button is PointerButton.RIGHT:
            if kind != "comment":
                return False
            c = self.comments[k]
            delta = _rotation_delta(self.comment_center(k), pt, dx, dy)
            if delta is None or delta == 0.0:
                return False
            c.angle += delta
            return True
        if dx == 0.0 and dy == 0.0:
            return False
        if kind == "comment":
            c = self.comments[k]
            r = self._owner_rect(c.owner)
            moved = self.comment_center(k).translated(dx, dy)
            c.anchor = ((moved.x - r.x) / r.w, (moved.y - r.y) / r.h)
            return True
        if kind == "scale":
            s = self.scales[k]
            s.offset = (s.offset[0] + dx, s.offset[1] + dy)
            return True
        if kind in ("corner", "edge"):
            roles = self._border_roles()
            role = roles[k] if kind == "corner" else roles[4 + k]
            new = resize_frame_rect(self.area, role, dx, dy, PLOT_MIN_SIZE, _NO_LIMIT)
            if new == self.area:
                return False
            self.area = new
            return True
        return False  # body forward-moves via move()

    def bounds(self) -> Rect:
        rects = [self.area]
        rects.extend(self.scale_rect(k) for k in range(len(self.scales)))
        for j in range(len(self.comments)):
            x0, y0, x1, y1 = self.comment_polygon(j).bbox
            rects.append(Rect(x0, y0, x1 - x0, y1 - y0))
        return bounds_union(rects)
