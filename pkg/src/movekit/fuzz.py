"""Seeded random drag sequences with an invariant audit after every event.

Randomness comes from splitmix64 so runs reproduce bit-for-bit from the
seed alone, independent of any library's generator: the 64-bit state
advances by 0x9E3779B97F4A7C15 per draw and the output is the finalizer
    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27; z *= 0x94D049BB133111EB
    z ^= z >> 31
Floats in [0, 1) take the top 53 bits of that output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .elements import (
    ChatoyantPolygon,
    CommentedControl,
    DependentFrame,
    Disc,
    FramedControl,
    Group,
    LinkedRectangles,
    MIN_CIRCUMRADIUS,
    MIN_DISC_RADIUS,
    MIN_RING_GAP,
    PlotComposite,
    Ring,
)
from .geometry import Point, Rect, bounds_union, polygon_signed_area
from .mover import Element, PointerButton
from .persistence import save_layout
from .scene import Scene
from .scenes import CANVAS_SIZE, build_scene

_MASK = (1 << 64) - 1


class SplitMix64:
    """Tiny deterministic PRNG (splitmix64); see module docstring."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randrange(self, n: int) -> int:
        return int(self.random() * n)


class AuditFailure(AssertionError):
    pass


_EPS = 1e-9


def audit_element(tag: str, element: Element, problems: list[str]) -> None:
    """Check the element-class invariants that must hold after any event."""
    if isinstance(element, CommentedControl):
        element = element.control  # falls through to the size-limit check
    if isinstance(element, FramedControl):
        r = element.rect
        if not (
            element.min_size[0] - _EPS <= r.w <= element.max_size[0] + _EPS
            and element.min_size[1] - _EPS <= r.h <= element.max_size[1] + _EPS
        ):
            problems.append(f"{tag}: size {r.w} x {r.h} escaped limits")
    elif isinstance(element, Group):
        f = element.frame
        if not (
            element.frame_min[0] - _EPS <= f.w <= element.frame_max[0] + _EPS
            and element.frame_min[1] - _EPS <= f.h <= element.frame_max[1] + _EPS
        ):
            problems.append(f"{tag}: frame size escaped its range")
        for child in element.children:
            if not f.contains_rect(child.rect):
                problems.append(f"{tag}: child {child.payload!r} outside the frame")
    elif isinstance(element, DependentFrame):
        expected = bounds_union([c.bounds() for c in element.children]).expanded(element.margin)
        if element.frame != expected:
            problems.append(f"{tag}: frame is not union + margin")
    elif isinstance(element, ChatoyantPolygon):
        verts = element.vertices
        if len(verts) < 3 or polygon_signed_area(verts) == 0.0:
            problems.append(f"{tag}: degenerate polygon")
        if max(v.distance_to(element.center) for v in verts) < MIN_CIRCUMRADIUS - _EPS:
            problems.append(f"{tag}: polygon collapsed below the minimum circumradius")
    elif isinstance(element, Disc):
        if element.radius < MIN_DISC_RADIUS - _EPS:
            problems.append(f"{tag}: disc radius below minimum")
    elif isinstance(element, Ring):
        if element.inner_radius < MIN_DISC_RADIUS - _EPS:
            problems.append(f"{tag}: ring inner radius below minimum")
        if element.outer_radius < element.inner_radius + MIN_RING_GAP - _EPS:
            problems.append(f"{tag}: ring gap below minimum")


class OffsetTracker:
    """Watches LinkedRectangles: pairwise offsets are fixed for life."""

    def __init__(self, scene: Scene):
        self._baselines: dict[str, list[tuple[float, float]]] = {}
        for tag in scene.tags_in_z_order():
            element = scene.element(tag)
            if isinstance(element, LinkedRectangles):
                first = element.rects[0]
                self._baselines[tag] = [(r.x - first.x, r.y - first.y) for r in element.rects]

    def check(self, scene: Scene, problems: list[str]) -> None:
        for tag, offsets in self._baselines.items():
            element = scene.element(tag)
            first = element.rects[0]
            for r, (ox, oy) in zip(element.rects, offsets):
                if abs(r.x - first.x - ox) > _EPS or abs(r.y - first.y - oy) > _EPS:
                    problems.append(f"{tag}: linked offsets drifted")
                    return


def check_plot_children(tag: str, element: PlotComposite, problems: list[str]) -> None:
    """Recompute child geometry from parent-relative state with independent
    arithmetic and require exact agreement with the element's answers."""
    a = element.area
    for k, s in enumerate(element.scales):
        if s.side.value == "left":
            ox, oy = a.x, a.y
        elif s.side.value == "right":
            ox, oy = a.x + a.w, a.y
        elif s.side.value == "top":
            ox, oy = a.x, a.y
        else:
            ox, oy = a.x, a.y + a.h
        if s.side.value in ("left", "right"):
            expected = Rect(ox + s.offset[0], oy + s.offset[1], s.breadth, s.ratio * a.h)
        else:
            expected = Rect(ox + s.offset[0], oy + s.offset[1], s.ratio * a.w, s.breadth)
        if element.scale_rect(k) != expected:
            problems.append(f"{tag}: scale {k} does not derive from its offset")
    for j, c in enumerate(element.comments):
        owner = a if c.owner < 0 else element.scale_rect(c.owner)
        expected_center = Point(owner.x + c.anchor[0] * owner.w, owner.y + c.anchor[1] * owner.h)
        if element.comment_center(j) != expected_center:
            problems.append(f"{tag}: comment {j} does not derive from its anchor")


def audit_scene(scene: Scene, offsets: OffsetTracker) -> list[str]:
    problems: list[str] = []
    for tag in scene.tags_in_z_order():
        element = scene.element(tag)
        audit_element(tag, element, problems)
        if isinstance(element, PlotComposite):
            check_plot_children(tag, element, problems)
    offsets.check(scene, problems)
    return problems


def _pairwise_distances(poly: ChatoyantPolygon) -> list[float]:
    verts = poly.vertices
    return [
        verts[i].distance_to(verts[j])
        for i in range(len(verts))
        for j in range(i + 1, len(verts))
    ]


@dataclass
class FuzzReport:
    scene: str
    steps: int
    seed: int
    downs: int = 0
    moves: int = 0
    ups: int = 0
    catches: int = 0
    repaints: int = 0
    problems: list[str] = field(default_factory=list)
    layout: str = ""

    @property
    def ok(self) -> bool:
        return not self.problems

    def render(self) -> str:
        lines = [
            f"fuzz scene={self.scene} steps={self.steps} seed={self.seed}",
            f"events: down={self.downs} move={self.moves} up={self.ups}",
            f"catches: {self.catches}",
            f"repaints: {self.repaints}",
            f"audit: {'ok' if self.ok else 'FAILED'}",
        ]
        lines.extend(self.problems)
        lines.append("layout:")
        lines.append(self.layout.rstrip("\n"))
        return "\n".join(lines) + "\n"


def fuzz_scene(scene_name: str, steps: int, seed: int) -> FuzzReport:
    """Drive a scene with a seeded drag sequence, auditing every event.

    Also verifies shape similarity for caught chatoyant polygons: any
    non-apex drag may only scale the pairwise vertex distances by one
    common factor (1 for moves and rotations).
    """
    scene = build_scene(scene_name)
    engine = scene.engine
    rng = SplitMix64(seed)
    offsets = OffsetTracker(scene)
    report = FuzzReport(scene_name, steps, seed)
    w, h = CANVAS_SIZE
    pointer = Point(0.0, 0.0)

    for _ in range(steps):
        caught = engine.caught
        if caught is None:
            if rng.random() < 0.75:
                elements = engine.elements()
                b = elements[rng.randrange(len(elements))].bounds()
                pointer = Point(
                    rng.uniform(b.x - 10, b.right + 10), rng.uniform(b.y - 10, b.bottom + 10)
                )
            else:
                pointer = Point(rng.uniform(-50, w + 50), rng.uniform(-50, h + 50))
            button = PointerButton.RIGHT if rng.random() < 0.2 else PointerButton.LEFT
            report.downs += 1
            if engine.catch(pointer, button):
                report.catches += 1
        elif rng.random() < 0.75:
            element = engine.element_by_id(caught.element_id)
            before = (
                _pairwise_distances(element) if isinstance(element, ChatoyantPolygon) else None
            )
            is_apex = (
                isinstance(element, ChatoyantPolygon)
                and element._node_role(caught.node)[0] == "apex"
                and caught.mode.value == "forward"
            )
            pointer = Point(pointer.x + rng.uniform(-25, 25), pointer.y + rng.uniform(-25, 25))
            report.moves += 1
            if engine.move(pointer):
                report.repaints += 1
            if before is not None and not is_apex:
                after = _pairwise_distances(element)
                ratios = [a / b for a, b in zip(after, before) if b > 1e-12]
                if ratios and any(abs(r - ratios[0]) > 1e-6 * max(1.0, ratios[0]) for r in ratios):
                    report.problems.append("chatoyant drag broke shape similarity")
        else:
            report.ups += 1
            engine.release()
        report.problems.extend(audit_scene(scene, offsets))
        if report.problems:
            break
    engine.release()
    report.layout = save_layout(scene)
    return report
