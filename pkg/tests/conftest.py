"""Shared brute-force oracles, kept deliberately independent of the code
paths they check."""

from __future__ import annotations

import math
import random

import pytest

from movekit import Point


def segment_distance_oracle(p: Point, a: Point, b: Point) -> float:
    """Distance to a segment by ternary search over the parameter (the
    distance along a segment is unimodal), no projection formula."""
    def at(t: float) -> float:
        return math.hypot(p.x - (a.x + t * (b.x - a.x)), p.y - (a.y + t * (b.y - a.y)))

    lo, hi = 0.0, 1.0
    for _ in range(120):
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        if at(m1) <= at(m2):
            hi = m2
        else:
            lo = m1
    return at((lo + hi) / 2)


def ray_cast_inside_oracle(p: Point, vertices: list[Point]) -> bool:
    """Even-odd ray cast to the right; boundary treatment is irrelevant to
    callers because they skip points near edges."""
    inside = False
    n = len(vertices)
    for i in range(n):
        a, b = vertices[i], vertices[(i + 1) % n]
        if (a.y > p.y) != (b.y > p.y):
            x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if p.x < x_at:
                inside = not inside
    return inside


def min_edge_distance(p: Point, vertices: list[Point]) -> float:
    """Boundary-band filter only (not an oracle), so the fast projection
    distance is fine here."""
    from movekit import dist_point_segment

    n = len(vertices)
    return min(
        dist_point_segment(p, vertices[i], vertices[(i + 1) % n]) for i in range(n)
    )


def random_convex_polygon(rng: random.Random, n: int = 6, radius: float = 80.0) -> list[Point]:
    """Convex polygon from sorted angles on a jittered circle."""
    cx, cy = rng.uniform(-50, 50), rng.uniform(-50, 50)
    angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
    # Convexity needs monotone angles AND a common radius; jitter the
    # radius per call, not per vertex.
    r = radius * rng.uniform(0.5, 1.5)
    return [Point(cx + r * math.cos(a), cy + r * math.sin(a)) for a in angles]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260809)
