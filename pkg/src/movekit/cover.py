"""Covers: the sets of sensitive nodes that make objects grabbable.

A cover is an ordered list of nodes; each node is a circle, a capsule
(a strip with two semicircles at the ends) or a convex polygon, and
carries the movement freedom of that node plus the cursor to show over
it. Nodes may overlap freely; hit-testing is first-wins in declaration
order, so small detail nodes are declared before large body nodes.

Also provides the two standard generators: the rectangular frame cover
used for control-like elements (move strips around the border, resize
handles per policy) and the N-node border cover for discs and rings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Optional, Union

from .geometry import (
    Point,
    Rect,
    clamp,
    dist_point_segment,
    point_in_convex_polygon,
    polygon_signed_area,
)

DEFAULT_FRAME_WIDTH = 6.0

# Mid-side resize handles grow with the side so they stay findable on
# lengthy sides: clamp(side / 4, 16, 60) logical px.
MID_NODE_MIN = 16.0
MID_NODE_MAX = 60.0


class MovementFreedom(Enum):
    """Individual mobility of one node."""

    ANY = "any"
    NS = "ns"
    WE = "we"
    NONE = "none"  # grabbing this node moves the whole object


class CursorShape(Enum):
    DEFAULT = "Default"
    MOVE_ALL = "MoveAll"
    SIZE_NS = "SizeNS"
    SIZE_WE = "SizeWE"
    SIZE_NWSE = "SizeNWSE"
    SIZE_NESW = "SizeNESW"
    SIZE_ALL = "SizeAll"
    ROTATE = "Rotate"
    HAND = "Hand"


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self) -> None:
        if not (self.radius > 0):
            raise ValueError(f"circle radius must be positive, got {self.radius}")

    @cached_property
    def bbox(self) -> tuple[float, float, float, float]:
        c, r = self.center, self.radius
        return (c.x - r, c.y - r, c.x + r, c.y + r)

    def contains(self, p: Point) -> bool:
        dx = p.x - self.center.x
        dy = p.y - self.center.y
        return dx * dx + dy * dy <= self.radius * self.radius


@dataclass(frozen=True)
class Capsule:
    """A strip with two semicircles at the ends: all points within
    halfWidth of the segment p1-p2."""

    p1: Point
    p2: Point
    half_width: float

    def __post_init__(self) -> None:
        if not (self.half_width > 0):
            raise ValueError(f"capsule half width must be positive, got {self.half_width}")

    @cached_property
    def bbox(self) -> tuple[float, float, float, float]:
        hw = self.half_width
        return (
            min(self.p1.x, self.p2.x) - hw,
            min(self.p1.y, self.p2.y) - hw,
            max(self.p1.x, self.p2.x) + hw,
            max(self.p1.y, self.p2.y) + hw,
        )

    def contains(self, p: Point) -> bool:
        return dist_point_segment(p, self.p1, self.p2) <= self.half_width


@dataclass(frozen=True)
class ConvexPolygon:
    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 3:
            raise ValueError("polygon needs at least 3 vertices")
        if polygon_signed_area(verts) == 0.0:
            raise ValueError("degenerate polygon: zero area")
        sign = 0.0
        n = len(verts)
        for i in range(n):
            a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
            if a.x == b.x and a.y == b.y:
                raise ValueError("degenerate polygon: duplicate consecutive vertices")
            cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
            if cross != 0.0:
                if sign != 0.0 and (cross > 0) != (sign > 0):
                    raise ValueError("polygon is not convex")
                sign = cross

    @cached_property
    def bbox(self) -> tuple[float, float, float, float]:
        xs = [v.x for v in self.vertices]
        ys = [v.y for v in self.vertices]
        return (min(xs), min(ys), max(xs), max(ys))

    def contains(self, p: Point) -> bool:
        return point_in_convex_polygon(p, list(self.vertices))


NodeShape = Union[Circle, Capsule, ConvexPolygon]


@dataclass(frozen=True)
class CoverNode:
    shape: NodeShape
    freedom: MovementFreedom
    cursor: CursorShape


class Cover:
    """Immutable ordered node list; node index is the node's identity.

    Hit-testing walks nodes in declaration order and returns the first
    containing node, so overlap resolution is purely positional.
    """

    __slots__ = ("_nodes", "_hit_seq")

    def __init__(self, nodes: list[CoverNode] | tuple[CoverNode, ...]):
        self._nodes: tuple[CoverNode, ...] = tuple(nodes)
        # Precomputed (bbox, index, shape) sequence keeps rejection cheap
        # when covers are probed thousands of times per frame or test.
        self._hit_seq = tuple(
            (n.shape.bbox, i, n.shape) for i, n in enumerate(self._nodes)
        )

    @property
    def nodes(self) -> tuple[CoverNode, ...]:
        return self._nodes

    def __len__(self) -> int:
        return len(self._nodes)


def node_contains(node: CoverNode, p: Point) -> bool:
    """Boundary-inclusive containment for any of the three node shapes."""
    return node.shape.contains(p)


def cover_hit(cover: Cover, p: Point) -> Optional[int]:
    """Index of the first node (declaration order) containing p, else None."""
    px, py = p.x, p.y
    for (x0, y0, x1, y1), i, shape in cover._hit_seq:
        if x0 <= px <= x1 and y0 <= py <= y1 and shape.contains(p):
            return i
    return None


def cursor_at(cover: Cover, p: Point) -> Optional[CursorShape]:
    """Cursor of the hit node, or None when nothing is under p."""
    i = cover_hit(cover, p)
    return None if i is None else cover.nodes[i].cursor


class ResizePolicy(Enum):
    """Which axes of a framed rectangle the user may resize."""

    NO_RESIZE = "none"
    WE_ONLY = "we"
    NS_ONLY = "ns"
    FULL = "full"

    @staticmethod
    def from_limits(min_size: tuple[float, float], max_size: tuple[float, float]) -> "ResizePolicy":
        we = min_size[0] < max_size[0]
        ns = min_size[1] < max_size[1]
        if we and ns:
            return ResizePolicy.FULL
        if we:
            return ResizePolicy.WE_ONLY
        if ns:
            return ResizePolicy.NS_ONLY
        return ResizePolicy.NO_RESIZE


class FrameRole(Enum):
    """What a frame-cover node does, keyed by its position in the cover."""

    CORNER_TL = "corner_tl"
    CORNER_TR = "corner_tr"
    CORNER_BR = "corner_br"
    CORNER_BL = "corner_bl"
    MID_TOP = "mid_top"
    MID_RIGHT = "mid_right"
    MID_BOTTOM = "mid_bottom"
    MID_LEFT = "mid_left"
    STRIP_TOP = "strip_top"
    STRIP_RIGHT = "strip_right"
    STRIP_BOTTOM = "strip_bottom"
    STRIP_LEFT = "strip_left"


_CORNER_ROLES = (FrameRole.CORNER_TL, FrameRole.CORNER_TR, FrameRole.CORNER_BR, FrameRole.CORNER_BL)
_MID_ROLES = (FrameRole.MID_TOP, FrameRole.MID_RIGHT, FrameRole.MID_BOTTOM, FrameRole.MID_LEFT)
_STRIP_ROLES = (FrameRole.STRIP_TOP, FrameRole.STRIP_RIGHT, FrameRole.STRIP_BOTTOM, FrameRole.STRIP_LEFT)

_CORNER_CURSORS = {
    FrameRole.CORNER_TL: CursorShape.SIZE_NWSE,
    FrameRole.CORNER_BR: CursorShape.SIZE_NWSE,
    FrameRole.CORNER_TR: CursorShape.SIZE_NESW,
    FrameRole.CORNER_BL: CursorShape.SIZE_NESW,
}


def frame_cover_roles(policy: ResizePolicy) -> tuple[FrameRole, ...]:
    """Node role per index for a frame cover built with the same policy."""
    roles: list[FrameRole] = []
    if policy is ResizePolicy.FULL:
        roles.extend(_CORNER_ROLES)
        roles.extend(_MID_ROLES)
    elif policy is ResizePolicy.WE_ONLY:
        roles.extend((FrameRole.MID_RIGHT, FrameRole.MID_LEFT))
    elif policy is ResizePolicy.NS_ONLY:
        roles.extend((FrameRole.MID_TOP, FrameRole.MID_BOTTOM))
    roles.extend(_STRIP_ROLES)
    return tuple(roles)


def _rect_poly(x0: float, y0: float, x1: float, y1: float) -> ConvexPolygon:
    return ConvexPolygon(
        (Point(x0, y0), Point(x1, y0), Point(x1, y1), Point(x0, y1))
    )


def make_rect_frame_cover(
    rect: Rect,
    frame_width: float = DEFAULT_FRAME_WIDTH,
    policy: ResizePolicy = ResizePolicy.NO_RESIZE,
) -> Cover:
    """Frame cover for a control-like rect: the interior stays a hole.

    The sensitive band lies between the rect boundary and the rect
    expanded by frame_width; the strictly-inside area is covered by no
    node, so clicks there keep their native meaning. Resize handles
    (corner squares centered on the expanded outline's corners, and
    enlarged mid-side handles per policy) are declared before the four
    freedom-None move strips, so handles win overlaps.

    Node order matches frame_cover_roles(policy).
    """
    if not (frame_width > 0):
        raise ValueError(f"frame width must be positive, got {frame_width}")
    if not (rect.w > 0 and rect.h > 0):
        raise ValueError(f"degenerate rect for frame cover: {rect}")

    fw = frame_width
    x0, y0, x1, y1 = rect.x, rect.y, rect.right, rect.bottom
    cx, cy = rect.center.x, rect.center.y
    nodes: list[CoverNode] = []

    def corner(role: FrameRole, px: float, py: float, sx: float, sy: float) -> None:
        # 2*fw square centered on the expanded outline's corner: it fills
        # the band corner and spills outward, never into the interior.
        ox, oy = px + sx * 2 * fw, py + sy * 2 * fw
        nodes.append(
            CoverNode(
                _rect_poly(min(px, ox), min(py, oy), max(px, ox), max(py, oy)),
                MovementFreedom.ANY,
                _CORNER_CURSORS[role],
            )
        )

    def mid_we(role: FrameRole) -> None:
        half = clamp(rect.h / 4.0, MID_NODE_MIN, MID_NODE_MAX) / 2.0
        xa, xb = (x0 - fw, x0) if role is FrameRole.MID_LEFT else (x1, x1 + fw)
        nodes.append(
            CoverNode(
                _rect_poly(xa, cy - half, xb, cy + half),
                MovementFreedom.WE,
                CursorShape.SIZE_WE,
            )
        )

    def mid_ns(role: FrameRole) -> None:
        half = clamp(rect.w / 4.0, MID_NODE_MIN, MID_NODE_MAX) / 2.0
        ya, yb = (y0 - fw, y0) if role is FrameRole.MID_TOP else (y1, y1 + fw)
        nodes.append(
            CoverNode(
                _rect_poly(cx - half, ya, cx + half, yb),
                MovementFreedom.NS,
                CursorShape.SIZE_NS,
            )
        )

    if policy is ResizePolicy.FULL:
        corner(FrameRole.CORNER_TL, x0, y0, -1, -1)
        corner(FrameRole.CORNER_TR, x1, y0, +1, -1)
        corner(FrameRole.CORNER_BR, x1, y1, +1, +1)
        corner(FrameRole.CORNER_BL, x0, y1, -1, +1)
        mid_ns(FrameRole.MID_TOP)
        mid_we(FrameRole.MID_RIGHT)
        mid_ns(FrameRole.MID_BOTTOM)
        mid_we(FrameRole.MID_LEFT)
    elif policy is ResizePolicy.WE_ONLY:
        mid_we(FrameRole.MID_RIGHT)
        mid_we(FrameRole.MID_LEFT)
    elif policy is ResizePolicy.NS_ONLY:
        mid_ns(FrameRole.MID_TOP)
        mid_ns(FrameRole.MID_BOTTOM)

    # Freedom-None move strips tile the whole band: full-width strips above
    # and below, side strips between them. Role order: top, right, bottom, left.
    for x0s, y0s, x1s, y1s in (
        (x0 - fw, y0 - fw, x1 + fw, y0),
        (x1, y0, x1 + fw, y1),
        (x0 - fw, y1, x1 + fw, y1 + fw),
        (x0 - fw, y0, x0, y1),
    ):
        nodes.append(
            CoverNode(_rect_poly(x0s, y0s, x1s, y1s), MovementFreedom.NONE, CursorShape.MOVE_ALL)
        )
    return Cover(nodes)


def resize_frame_rect(
    rect: Rect,
    role: FrameRole,
    dx: float,
    dy: float,
    min_size: tuple[float, float],
    max_size: tuple[float, float],
) -> Rect:
    """Apply a resize-handle drag: the dragged edge moves, the opposite
    edge stays fixed, and the size clamps into [min, max] per axis."""
    x, y, w, h = rect.x, rect.y, rect.w, rect.h
    # Horizontal edge participation.
    if role in (FrameRole.MID_LEFT, FrameRole.CORNER_TL, FrameRole.CORNER_BL):
        right = rect.right
        w = clamp(right - (x + dx), min_size[0], max_size[0])
        x = right - w
    elif role in (FrameRole.MID_RIGHT, FrameRole.CORNER_TR, FrameRole.CORNER_BR):
        w = clamp(w + dx, min_size[0], max_size[0])
    # Vertical edge participation.
    if role in (FrameRole.MID_TOP, FrameRole.CORNER_TL, FrameRole.CORNER_TR):
        bottom = rect.bottom
        h = clamp(bottom - (y + dy), min_size[1], max_size[1])
        y = bottom - h
    elif role in (FrameRole.MID_BOTTOM, FrameRole.CORNER_BL, FrameRole.CORNER_BR):
        h = clamp(h + dy, min_size[1], max_size[1])
    return Rect(x, y, w, h)


def make_n_node_border_cover(
    center: Point,
    radii: list[float],
    node_radius: float,
    count: int,
) -> Cover:
    """Border cover for a disc (one radius) or a ring (two radii).

    Each border gets `count` small circle nodes evenly spaced along it
    (freedom Any, SizeAll cursor), declared first; the body for moving
    follows: a single circle for a disc, or a fan of freedom-None
    trapezoids approximating the annulus for a ring. MoveAll cursor on
    the body.
    """
    if count < 8:
        raise ValueError(f"border node count must be at least 8, got {count}")
    if len(radii) not in (1, 2):
        raise ValueError("expected one radius (disc) or two (ring)")
    if any(not (r > 0) for r in radii):
        raise ValueError("radii must be positive")
    if len(radii) == 2 and not (radii[0] < radii[1]):
        raise ValueError("radii must be strictly increasing")

    nodes: list[CoverNode] = []
    step = 2.0 * math.pi / count
    for r in radii:
        for k in range(count):
            a = step * k
            nodes.append(
                CoverNode(
                    Circle(Point(center.x + r * math.cos(a), center.y + r * math.sin(a)), node_radius),
                    MovementFreedom.ANY,
                    CursorShape.SIZE_ALL,
                )
            )

    if len(radii) == 1:
        nodes.append(
            CoverNode(Circle(center, radii[0]), MovementFreedom.NONE, CursorShape.MOVE_ALL)
        )
    else:
        r_in, r_out = radii
        for k in range(count):
            a0, a1 = step * k, step * (k + 1)
            quad = ConvexPolygon(
                (
                    Point(center.x + r_in * math.cos(a0), center.y + r_in * math.sin(a0)),
                    Point(center.x + r_in * math.cos(a1), center.y + r_in * math.sin(a1)),
                    Point(center.x + r_out * math.cos(a1), center.y + r_out * math.sin(a1)),
                    Point(center.x + r_out * math.cos(a0), center.y + r_out * math.sin(a0)),
                )
            )
            nodes.append(CoverNode(quad, MovementFreedom.NONE, CursorShape.MOVE_ALL))
    return Cover(nodes)
