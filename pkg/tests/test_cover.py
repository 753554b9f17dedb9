"""Covers: shape containment, first-wins hit-testing, and the two
standard cover generators."""

import math
import random

import pytest

from movekit import (
    Capsule,
    Circle,
    ConvexPolygon,
    Cover,
    CoverNode,
    CursorShape,
    FrameRole,
    MovementFreedom,
    Point,
    Rect,
    ResizePolicy,
    cover_hit,
    cursor_at,
    dist_point_segment,
    frame_cover_roles,
    make_n_node_border_cover,
    make_rect_frame_cover,
    node_contains,
    resize_frame_rect,
)

from conftest import segment_distance_oracle


def square_poly(half: float) -> ConvexPolygon:
    return ConvexPolygon((Point(-half, -half), Point(half, -half), Point(half, half), Point(-half, half)))


class TestShapes:
    def test_circle_boundary_inclusive(self):
        node = CoverNode(Circle(Point(0, 0), 5), MovementFreedom.ANY, CursorShape.SIZE_ALL)
        assert node_contains(node, Point(3, 4))  # distance exactly 5

    def test_capsule_rejects_beyond_endcap(self):
        node = CoverNode(Capsule(Point(0, 0), Point(10, 0), 2), MovementFreedom.ANY, CursorShape.HAND)
        assert not node_contains(node, Point(12.5, 0))

    def test_capsule_accepts_near_endcap(self):
        # Independent oracle: ternary-search distance from (11,1) to the
        # segment is sqrt(2) = 1.4142..., well under the half width 2.
        oracle = segment_distance_oracle(Point(11, 1), Point(0, 0), Point(10, 0))
        assert oracle == pytest.approx(math.sqrt(2), abs=1e-9)
        node = CoverNode(Capsule(Point(0, 0), Point(10, 0), 2), MovementFreedom.ANY, CursorShape.HAND)
        assert node_contains(node, Point(11, 1))

    def test_capsule_containment_equals_segment_distance_exactly(self, rng):
        cap = Capsule(Point(-8, 3), Point(12, -5), 4.5)
        node = CoverNode(cap, MovementFreedom.ANY, CursorShape.HAND)
        for _ in range(2000):
            p = Point(rng.uniform(-20, 25), rng.uniform(-15, 15))
            expected = dist_point_segment(p, cap.p1, cap.p2) <= cap.half_width
            assert node_contains(node, p) == expected

    def test_invalid_shapes_rejected_at_construction(self):
        with pytest.raises(ValueError):
            Circle(Point(0, 0), 0)
        with pytest.raises(ValueError):
            Capsule(Point(0, 0), Point(1, 0), -1)
        with pytest.raises(ValueError):
            ConvexPolygon((Point(0, 0), Point(1, 1)))
        with pytest.raises(ValueError):
            ConvexPolygon((Point(0, 0), Point(5, 5), Point(10, 10)))  # zero area
        with pytest.raises(ValueError):
            # dent makes it concave
            ConvexPolygon((Point(0, 0), Point(10, 0), Point(2, 2), Point(0, 10)))


class TestCoverHit:
    def overlap_cover(self) -> Cover:
        return Cover(
            [
                CoverNode(Circle(Point(0, 0), 5), MovementFreedom.ANY, CursorShape.SIZE_ALL),
                CoverNode(square_poly(20), MovementFreedom.NONE, CursorShape.MOVE_ALL),
            ]
        )

    def test_first_wins_on_overlap(self):
        assert cover_hit(self.overlap_cover(), Point(1, 1)) == 0

    def test_later_node_when_first_misses(self):
        assert cover_hit(self.overlap_cover(), Point(15, 15)) == 1

    def test_miss(self):
        assert cover_hit(self.overlap_cover(), Point(100, 100)) is None

    def test_cursor_follows_hit(self):
        cover = self.overlap_cover()
        assert cursor_at(cover, Point(1, 1)) is CursorShape.SIZE_ALL
        assert cursor_at(cover, Point(15, 15)) is CursorShape.MOVE_ALL
        assert cursor_at(cover, Point(100, 100)) is None

    def test_first_wins_matches_scan_all_oracle(self, rng):
        for _ in range(50):
            nodes = []
            for _ in range(rng.randrange(1, 8)):
                kind = rng.randrange(3)
                if kind == 0:
                    shape = Circle(Point(rng.uniform(-30, 30), rng.uniform(-30, 30)), rng.uniform(2, 15))
                elif kind == 1:
                    shape = Capsule(
                        Point(rng.uniform(-30, 30), rng.uniform(-30, 30)),
                        Point(rng.uniform(-30, 30), rng.uniform(-30, 30)),
                        rng.uniform(2, 10),
                    )
                else:
                    half = rng.uniform(4, 20)
                    cx, cy = rng.uniform(-30, 30), rng.uniform(-30, 30)
                    shape = ConvexPolygon(
                        (
                            Point(cx - half, cy - half),
                            Point(cx + half, cy - half),
                            Point(cx + half, cy + half),
                            Point(cx - half, cy + half),
                        )
                    )
                cursor = rng.choice(list(CursorShape))
                nodes.append(CoverNode(shape, MovementFreedom.ANY, cursor))
            cover = Cover(nodes)
            for _ in range(60):
                p = Point(rng.uniform(-50, 50), rng.uniform(-50, 50))
                containing = [i for i, n in enumerate(nodes) if node_contains(n, p)]
                expected = min(containing) if containing else None
                assert cover_hit(cover, p) == expected
                expected_cursor = None if expected is None else nodes[expected].cursor
                assert cursor_at(cover, p) == expected_cursor


class TestRectFrameCover:
    RECT = Rect(0, 0, 100, 60)

    def test_full_policy_has_twelve_nodes(self):
        cover = make_rect_frame_cover(self.RECT, 6, ResizePolicy.FULL)
        assert len(cover) == 12
        assert len(frame_cover_roles(ResizePolicy.FULL)) == 12

    def test_interior_is_a_hole(self):
        cover = make_rect_frame_cover(self.RECT, 6, ResizePolicy.FULL)
        assert cover_hit(cover, Point(50, 30)) is None

    def test_left_mid_node_resizes_we(self):
        cover = make_rect_frame_cover(self.RECT, 6, ResizePolicy.FULL)
        i = cover_hit(cover, Point(-3, 30))
        assert i is not None
        assert frame_cover_roles(ResizePolicy.FULL)[i] is FrameRole.MID_LEFT
        assert cover.nodes[i].cursor is CursorShape.SIZE_WE
        assert cover.nodes[i].freedom is MovementFreedom.WE

    def test_no_resize_same_point_is_a_move_strip(self):
        cover = make_rect_frame_cover(self.RECT, 6, ResizePolicy.NO_RESIZE)
        i = cover_hit(cover, Point(-3, 30))
        assert i is not None
        assert cover.nodes[i].freedom is MovementFreedom.NONE
        assert cover.nodes[i].cursor is CursorShape.MOVE_ALL

    def test_construction_errors(self):
        with pytest.raises(ValueError):
            make_rect_frame_cover(self.RECT, 0, ResizePolicy.FULL)
        with pytest.raises(ValueError):
            make_rect_frame_cover(Rect(0, 0, 0, 10), 6, ResizePolicy.FULL)

    @pytest.mark.parametrize("policy", list(ResizePolicy))
    def test_hole_and_reach_randomized(self, policy, rng):
        for _ in range(12):
            rect = Rect(rng.uniform(-200, 200), rng.uniform(-200, 200), rng.uniform(15, 300), rng.uniform(15, 300))
            fw = rng.uniform(2, 12)
            cover = make_rect_frame_cover(rect, fw, policy)
            roles = frame_cover_roles(policy)
            assert len(roles) == len(cover)
            for _ in range(250):
                # strictly inside: never caught
                p = Point(
                    rng.uniform(rect.x + 1e-7, rect.right - 1e-7),
                    rng.uniform(rect.y + 1e-7, rect.bottom - 1e-7),
                )
                assert cover_hit(cover, p) is None
            for _ in range(250):
                # anywhere in the closed frame band: always caught
                if rng.random() < 0.5:
                    x = rng.uniform(rect.x - fw, rect.right + fw)
                    y = rng.choice(
                        [rng.uniform(rect.y - fw, rect.y), rng.uniform(rect.bottom, rect.bottom + fw)]
                    )
                else:
                    x = rng.choice(
                        [rng.uniform(rect.x - fw, rect.x), rng.uniform(rect.right, rect.right + fw)]
                    )
                    y = rng.uniform(rect.y - fw, rect.bottom + fw)
                assert cover_hit(cover, Point(x, y)) is not None

    def test_mid_node_length_clamps(self):
        # side/4 below 16 clamps up; above 60 clamps down
        small = make_rect_frame_cover(Rect(0, 0, 100, 20), 6, ResizePolicy.FULL)
        i = cover_hit(small, Point(-3, 10 + 7.9))  # within half-length 8
        assert frame_cover_roles(ResizePolicy.FULL)[i] is FrameRole.MID_LEFT
        assert cover_hit(small, Point(-3, 10 + 8.1)) is not None  # strip, not mid
        big = make_rect_frame_cover(Rect(0, 0, 1000, 400), 6, ResizePolicy.FULL)
        i = cover_hit(big, Point(500, -3))
        assert frame_cover_roles(ResizePolicy.FULL)[i] is FrameRole.MID_TOP
        j = cover_hit(big, Point(500 + 31, -3))  # past half-length 30
        assert frame_cover_roles(ResizePolicy.FULL)[j] is FrameRole.STRIP_TOP

    def test_we_only_has_no_corner_or_ns_nodes(self):
        roles = frame_cover_roles(ResizePolicy.WE_ONLY)
        assert set(roles) == {
            FrameRole.MID_LEFT,
            FrameRole.MID_RIGHT,
            FrameRole.STRIP_TOP,
            FrameRole.STRIP_RIGHT,
            FrameRole.STRIP_BOTTOM,
            FrameRole.STRIP_LEFT,
        }


class TestResizeFrameRect:
    LIMITS = dict(min_size=(60.0, 30.0), max_size=(200.0, 30.0))

    def test_right_mid_clamps_at_max(self):
        r = resize_frame_rect(Rect(10, 10, 100, 30), FrameRole.MID_RIGHT, 150, 0, **self.LIMITS)
        assert r == Rect(10, 10, 200, 30)

    def test_left_mid_clamps_and_keeps_right_edge(self):
        # Independent edge arithmetic: right edge fixed at 110; dragging the
        # left edge +50 would leave w=50 < 60, so w=60 and x=110-60=50.
        r = resize_frame_rect(Rect(10, 10, 100, 30), FrameRole.MID_LEFT, 50, 0, **self.LIMITS)
        assert r == Rect(50, 10, 60, 30)

    def test_corner_moves_both_edges(self):
        r = resize_frame_rect(
            Rect(10, 10, 100, 50), FrameRole.CORNER_BR, 20, -10, min_size=(10, 10), max_size=(500, 500)
        )
        assert r == Rect(10, 10, 120, 40)

    def test_top_left_corner_keeps_bottom_right(self):
        r = resize_frame_rect(
            Rect(10, 10, 100, 50), FrameRole.CORNER_TL, -5, 5, min_size=(10, 10), max_size=(500, 500)
        )
        assert r == Rect(5, 15, 105, 45)
        assert (r.right, r.bottom) == (110, 60)


class TestNNodeBorderCover:
    def test_disc_node_count(self):
        cover = make_n_node_border_cover(Point(0, 0), [50], 4, 24)
        assert len(cover) == 25  # 24 border + 1 body

    def test_border_point_hits_a_border_node(self):
        cover = make_n_node_border_cover(Point(0, 0), [50], 4, 24)
        i = cover_hit(cover, Point(50, 0))
        assert i is not None and i < 24
        assert cover.nodes[i].freedom is MovementFreedom.ANY
        assert cover.nodes[i].cursor is CursorShape.SIZE_ALL

    def test_center_hits_the_body(self):
        cover = make_n_node_border_cover(Point(0, 0), [50], 4, 24)
        i = cover_hit(cover, Point(0, 0))
        assert i == 24
        assert cover.nodes[i].freedom is MovementFreedom.NONE
        assert cover.nodes[i].cursor is CursorShape.MOVE_ALL

    def test_ring_has_two_borders_and_a_body_assembly(self):
        cover = make_n_node_border_cover(Point(0, 0), [30, 60], 4, 16)
        assert len(cover) == 16 * 3
        mid = cover_hit(cover, Point(45, 0))  # between the borders
        assert mid is not None and mid >= 32
        assert cover.nodes[mid].freedom is MovementFreedom.NONE
        inner = cover_hit(cover, Point(30, 0))
        assert inner is not None and inner < 16
        hole = cover_hit(cover, Point(0, 0))
        assert hole is None  # ring center stays empty

    def test_construction_errors(self):
        with pytest.raises(ValueError):
            make_n_node_border_cover(Point(0, 0), [50], 4, 7)
        with pytest.raises(ValueError):
            make_n_node_border_cover(Point(0, 0), [60, 30], 4, 24)
        with pytest.raises(ValueError):
            make_n_node_border_cover(Point(0, 0), [], 4, 24)
