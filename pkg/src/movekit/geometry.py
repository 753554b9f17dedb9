"""2D primitives shared by every other module: points, rects, angles.

Screen convention throughout: y grows downward and positive angles turn
clockwise. Coordinates are doubles; integer pointer input is widened at
the call sites. All functions here are pure and thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

TWO_PI = 2.0 * math.pi


def require_finite(*values: float) -> None:
    """Reject NaN / infinity at interface boundaries."""
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"non-finite coordinate: {v!r}")


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __iter__(self) -> Iterator[float]:
        yield self.x
        yield self.y

    def translated(self, dx: float, dy: float) -> "Point":
        return Point(self.x + dx, self.y + dy)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Rect:
    """Axis-aligned rectangle: top-left origin, non-negative size."""

    x: float
    y: float
    w: float
    h: float

    def __post_init__(self) -> None:
        if self.w < 0 or self.h < 0:
            raise ValueError(f"negative rect size: {self.w} x {self.h}")

    @property
    def right(self) -> float:
        return self.x + self.w

    @property
    def bottom(self) -> float:
        return self.y + self.h

    @property
    def center(self) -> Point:
        return Point(self.x + self.w / 2.0, self.y + self.h / 2.0)

    def translated(self, dx: float, dy: float) -> "Rect":
        return Rect(self.x + dx, self.y + dy, self.w, self.h)

    def expanded(self, d: float) -> "Rect":
        """Grow by d on every side (d may be negative while size stays valid)."""
        return Rect(self.x - d, self.y - d, self.w + 2 * d, self.h + 2 * d)

    def contains(self, p: Point) -> bool:
        """Boundary-inclusive containment."""
        return self.x <= p.x <= self.right and self.y <= p.y <= self.bottom

    def contains_rect(self, other: "Rect") -> bool:
        return (
            self.x <= other.x
            and self.y <= other.y
            and other.right <= self.right
            and other.bottom <= self.bottom
        )

    def corners(self) -> tuple[Point, Point, Point, Point]:
        """Clockwise from top-left (screen orientation)."""
        return (
            Point(self.x, self.y),
            Point(self.right, self.y),
            Point(self.right, self.bottom),
            Point(self.x, self.bottom),
        )


def normalize_angle(radians: float) -> float:
    """Fold an angle into (-pi, pi]. Storage stays unnormalized; call on demand."""
    r = radians % TWO_PI
    if r > math.pi:
        r -= TWO_PI
    return r


def angle_of(origin: Point, target: Point) -> float:
    """Screen-space direction from origin to target, clockwise-positive."""
    return math.atan2(target.y - origin.y, target.x - origin.x)


def dist_point_segment(p: Point, a: Point, b: Point) -> float:
    """Euclidean distance from p to the closed segment ab (a == b allowed)."""
    abx = b.x - a.x
    aby = b.y - a.y
    apx = p.x - a.x
    apy = p.y - a.y
    denom = abx * abx + aby * aby
    if denom == 0.0:
        return math.hypot(apx, apy)
    t = (apx * abx + apy * aby) / denom
    if t < 0.0:
        t = 0.0
    elif t > 1.0:
        t = 1.0
    return math.hypot(apx - t * abx, apy - t * aby)


def polygon_signed_area(vertices: Iterable[Point]) -> float:
    """Shoelace area; sign encodes winding (positive for clockwise on screen)."""
    verts = list(vertices)
    area = 0.0
    for i, a in enumerate(verts):
        b = verts[(i + 1) % len(verts)]
        area += a.x * b.y - b.x * a.y
    return area / 2.0


def point_in_convex_polygon(p: Point, vertices: list[Point]) -> bool:
    """Boundary-inclusive half-plane test against every edge.

    Callers guarantee a validated convex polygon with consistent winding;
    degenerate inputs are rejected where polygons are constructed, not here.
    """
    orient = 1.0 if polygon_signed_area(vertices) > 0 else -1.0
    n = len(vertices)
    for i in range(n):
        a = vertices[i]
        b = vertices[(i + 1) % n]
        cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)
        if cross * orient < 0.0:
            return False
    return True


def rotate_point(p: Point, pivot: Point, angle: float) -> Point:
    """Rotate p about pivot; positive angle turns clockwise on screen (y-down)."""
    c = math.cos(angle)
    s = math.sin(angle)
    dx = p.x - pivot.x
    dy = p.y - pivot.y
    return Point(pivot.x + dx * c - dy * s, pivot.y + dx * s + dy * c)


def bounds_union(rects: list[Rect]) -> Rect:
    """Smallest rect containing every input; empty input is a caller error."""
    if not rects:
        raise ValueError("bounds_union of an empty list")
    x0 = min(r.x for r in rects)
    y0 = min(r.y for r in rects)
    x1 = max(r.right for r in rects)
    y1 = max(r.bottom for r in rects)
    return Rect(x0, y0, x1 - x0, y1 - y0)


def clamp(value: float, lo: float, hi: float) -> float:
    return lo if value < lo else hi if value > hi else value
