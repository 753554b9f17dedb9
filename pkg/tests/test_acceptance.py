"""Acceptance suite: one test per shipped criterion, each printing a
pass/fail line. Run with `pytest -s tests/test_acceptance.py` to see the
lines as they go."""

import math
import random
import sys
import time
from pathlib import Path

import pytest

from movekit import (
    Capsule,
    ChatoyantPolygon,
    Circle,
    CoverNode,
    CursorShape,
    MovementFreedom,
    Point,
    PointerButton,
    Rect,
    ResizePolicy,
    build_scene,
    cover_hit,
    make_rect_frame_cover,
    node_contains,
    parse_trace,
    restore_layout,
    run_trace,
    save_layout,
    scene_names,
)
from movekit.fuzz import fuzz_scene

from conftest import (
    min_edge_distance,
    random_convex_polygon,
    ray_cast_inside_oracle,
    segment_distance_oracle,
)

TRACES = Path(__file__).resolve().parent.parent / "traces"
GOLDEN_CORPUS = [
    ("calculator_rearrange", "calculator"),
    ("dataselection_groups", "data-selection"),
    ("nnode_resize", "nnode"),
    ("personal_info", "personal-info"),
    ("plots_move", "plots"),
    ("polygon_rotate", "polygon"),
]


def criterion(name):
    """Emit one PASS/FAIL line per criterion, whatever pytest captures."""

    def wrap(fn):
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"[acceptance] {name}: FAIL", file=sys.stderr)
                raise
            dt = time.perf_counter() - t0
            print(f"[acceptance] {name}: PASS ({dt:.2f}s)")

        run.__name__ = fn.__name__
        return run

    return wrap


@criterion("containment-oracle")
def test_containment_agrees_with_brute_force_oracles():
    """Capsule/circle/polygon containment vs independent oracles: zero
    disagreements outside a 1e-9 boundary band, 10,000 points per shape."""
    rng = random.Random(424242)
    deadline = time.perf_counter() + 5.0

    circle = Circle(Point(12.5, -3.25), 37.0)
    node = CoverNode(circle, MovementFreedom.ANY, CursorShape.SIZE_ALL)
    for _ in range(10_000):
        p = Point(rng.uniform(-40, 65), rng.uniform(-55, 50))
        d = math.hypot(p.x - circle.center.x, p.y - circle.center.y)
        if abs(d - circle.radius) <= 1e-9:
            continue
        assert node_contains(node, p) == (d < circle.radius)

    cap = Capsule(Point(-20, 5), Point(30, -15), 9.0)
    node = CoverNode(cap, MovementFreedom.ANY, CursorShape.HAND)
    for _ in range(10_000):
        p = Point(rng.uniform(-40, 50), rng.uniform(-35, 25))
        d = segment_distance_oracle(p, cap.p1, cap.p2)
        if abs(d - cap.half_width) <= 1e-9:
            continue
        assert node_contains(node, p) == (d < cap.half_width)

    checked = 0
    while checked < 10_000:
        verts = random_convex_polygon(rng, n=rng.randrange(3, 9))
        from movekit import ConvexPolygon

        node = CoverNode(ConvexPolygon(tuple(verts)), MovementFreedom.ANY, CursorShape.SIZE_ALL)
        for _ in range(1000):
            p = Point(rng.uniform(-220, 220), rng.uniform(-220, 220))
            if min_edge_distance(p, verts) <= 1e-9:
                continue
            assert node_contains(node, p) == ray_cast_inside_oracle(p, verts)
            checked += 1

    assert time.perf_counter() <= deadline, "containment oracle overran its 5 s budget"


@criterion("control-frame-hole")
def test_frame_covers_have_holes_and_full_band_reach():
    """100 random rects/policies: 10,000 interior samples never catch,
    band samples always catch."""
    rng = random.Random(99)
    deadline = time.perf_counter() + 10.0
    policies = list(ResizePolicy)
    for case in range(100):
        rect = Rect(rng.uniform(-300, 300), rng.uniform(-300, 300), rng.uniform(20, 400), rng.uniform(20, 400))
        fw = rng.uniform(3, 10)
        policy = policies[case % 4]
        cover = make_rect_frame_cover(rect, fw, policy)
        x0, y0, x1, y1 = rect.x, rect.y, rect.right, rect.bottom
        u = rng.uniform
        for _ in range(10_000):
            p = Point(u(x0 + 1e-9, x1 - 1e-9), u(y0 + 1e-9, y1 - 1e-9))
            assert cover_hit(cover, p) is None, f"interior point caught: {p} in {rect}"
        for _ in range(2_000):
            if rng.random() < 0.5:
                p = Point(u(x0 - fw, x1 + fw), u(y0 - fw, y0) if rng.random() < 0.5 else u(y1, y1 + fw))
            else:
                p = Point(u(x0 - fw, x0) if rng.random() < 0.5 else u(x1, x1 + fw), u(y0 - fw, y1 + fw))
            assert cover_hit(cover, p) is not None, f"band point missed: {p} in {rect}"
    assert time.perf_counter() <= deadline, "frame-hole check overran its 10 s budget"


@criterion("calculator-parity")
def test_calculator_buttons_move_exactly_by_trace_deltas():
    """Every registered button moves exactly by its drag delta; interior
    downs catch nothing; resizing clamps at the declared limits; the
    rearrangement trace matches its golden layout byte-for-byte."""
    scene = build_scene("calculator")
    engine = scene.engine
    buttons = [t for t in scene.tags_in_z_order() if t.startswith("btn_")]
    assert len(buttons) == 20
    for k, tag in enumerate(buttons):
        control = scene.element(tag)
        before = control.rect
        grab = Point(before.center.x, before.y - 3.0)  # top frame strip
        dx, dy = float(5 + (k % 7)), float(3 + (k % 5))
        assert engine.catch(grab, PointerButton.LEFT), tag
        assert engine.move(Point(grab.x + dx, grab.y + dy))
        engine.release()
        assert control.rect == before.translated(dx, dy), tag
        # undo so later grabs see the stock grid
        engine.catch(Point(grab.x + dx, grab.y + dy), PointerButton.LEFT)
        engine.move(grab)
        engine.release()
        assert control.rect == before

    for tag in buttons:
        c = scene.element(tag).rect
        assert not engine.catch(Point(c.center.x, c.center.y), PointerButton.LEFT), tag

    display = scene.element("display")
    engine.catch(Point(display.rect.right + 3, display.rect.center.y), PointerButton.LEFT)
    engine.move(Point(display.rect.right + 3000, display.rect.center.y))
    engine.release()
    assert display.rect.w == 400  # max clamp
    engine.catch(Point(display.rect.right + 3, display.rect.center.y), PointerButton.LEFT)
    engine.move(Point(display.rect.right - 3000, display.rect.center.y))
    engine.release()
    assert display.rect.w == 100  # min clamp

    events = parse_trace((TRACES / "calculator_rearrange.trace").read_text())
    report = run_trace("calculator", events)
    assert report.ok, report.failures
    golden = (TRACES / "calculator_rearrange.golden.mrl").read_text()
    assert report.layout == golden


@criterion("rigidity-and-zoom")
def test_polygon_rotation_rigidity_and_zoom_scaling():
    """500 rotate steps keep pairwise vertex distances within 1e-6; edge
    zooms scale all center-distances by one common factor within 1e-9."""
    scene = build_scene("polygon")
    engine = scene.engine
    poly = scene.element("poly")
    rng = random.Random(31337)

    def pairwise(p: ChatoyantPolygon):
        v = p.vertices
        return [v[i].distance_to(v[j]) for i in range(len(v)) for j in range(i + 1, len(v))]

    baseline = pairwise(poly)
    pointer = Point(340, 240)
    assert engine.catch(pointer, PointerButton.RIGHT)
    for _ in range(500):
        pointer = Point(pointer.x + rng.uniform(-30, 30), pointer.y + rng.uniform(-30, 30))
        engine.move(pointer)
        for d0, d1 in zip(baseline, pairwise(poly)):
            assert abs(d1 - d0) <= 1e-6
    engine.release()

    for _ in range(100):
        center = poly.center
        k = rng.randrange(len(poly.vertices))
        a = poly.vertices[k]
        b = poly.vertices[(k + 1) % len(poly.vertices)]
        grab = Point((a.x + b.x) / 2, (a.y + b.y) / 2)  # edge midpoint
        before = [v.distance_to(center) for v in poly.vertices]
        assert engine.catch(grab, PointerButton.LEFT)
        f = rng.uniform(0.6, 1.5)
        target = Point(center.x + (grab.x - center.x) * f, center.y + (grab.y - center.y) * f)
        changed = engine.move(target)
        engine.release()
        after = [v.distance_to(center) for v in poly.vertices]
        if not changed:
            assert after == before
            continue
        ratios = [d1 / d0 for d0, d1 in zip(before, after)]
        for r in ratios:
            assert abs(r - ratios[0]) <= 1e-9


@criterion("parent-child-audit")
def test_parent_child_state_survives_fuzzed_sequences():
    """Fuzzed plots scene: children always recompute exactly from parent-
    relative state; dependent frames always equal union + margin."""
    for name, seed in (("plots", 5), ("plots", 23), ("personal-info", 5), ("panels", 11)):
        report = fuzz_scene(name, steps=1200, seed=seed)
        assert report.ok, (name, report.problems)


@criterion("persistence-round-trip")
def test_layouts_round_trip_and_golden_corpus_replays():
    """save -> restore -> save is byte-identical on 100 fuzzed scenes; the
    shipped golden corpus replays to exit 0."""
    names = scene_names()
    done = 0
    seed = 0
    while done < 100:
        name = names[done % len(names)]
        seed += 1
        report = fuzz_scene(name, steps=60, seed=seed)
        assert report.ok, (name, report.problems)
        saved = report.layout
        fresh = build_scene(name)
        warnings = restore_layout(fresh, saved)
        assert warnings == [], (name, warnings)
        assert save_layout(fresh) == saved, name
        done += 1

    for trace, scene_name in GOLDEN_CORPUS:
        events = parse_trace((TRACES / f"{trace}.trace").read_text())
        report = run_trace(scene_name, events)
        assert report.ok, (trace, report.failures)
        assert report.layout == (TRACES / f"{trace}.golden.mrl").read_text(), trace


@criterion("determinism")
def test_fuzz_reports_are_byte_identical_across_runs():
    """Same seed, same bytes; distinct scenes and seeds all audited."""
    for name in scene_names():
        a = fuzz_scene(name, steps=300, seed=777)
        b = fuzz_scene(name, steps=300, seed=777)
        assert a.render() == b.render(), name
        assert a.ok, (name, a.problems)
