"""The single supervisor that drives all moving / resizing / rotating.

One Mover instance owns a z-ordered registry of elements and a one-slot
caught state. The host feeds it exactly three pointer events: catch on
button down, move on pointer move (its return gates repaints), release
on button up. Left button starts forward movement, right button starts
rotation on elements that allow it.

Not thread-safe by design: a Mover is a single-threaded state machine;
callers serialize pointer events (ownership may migrate between threads,
concurrent calls may not).
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .cover import (
    Cover,
    CursorShape,
    DEFAULT_FRAME_WIDTH,
    MovementFreedom,
    ResizePolicy,
    cover_hit,
    frame_cover_roles,
    make_rect_frame_cover,
    resize_frame_rect,
)
from .geometry import Point, Rect, angle_of, require_finite

ElementId = int


class PointerButton(Enum):
    LEFT = "L"
    RIGHT = "R"


class Element(ABC):
    """Contract every moveable object fulfills.

    After any move / move_node the cover returned by define_cover must
    reflect the new geometry; the engine re-queries covers instead of
    caching them across events.
    """

    rotatable: bool = False
    id: Optional[ElementId] = None

    @abstractmethod
    def define_cover(self) -> Cover:
        """Current cover for this element's geometry."""

    @abstractmethod
    def move(self, dx: float, dy: float) -> None:
        """Forward-move the whole object."""

    @abstractmethod
    def move_node(self, i: int, dx: float, dy: float, pt: Point, button: PointerButton) -> bool:
        """Individual movement of node i; returns True iff geometry changed."""

    @abstractmethod
    def bounds(self) -> Rect:
        """Axis-aligned bounding box of the current geometry."""


@dataclass(frozen=True)
class AutoFrame:
    """Size limits for elements whose cover the engine synthesizes.

    An axis is resizable iff min < max on that axis; the resulting
    policy picks which handles the synthesized frame cover gets.
    """

    min_size: tuple[float, float]
    max_size: tuple[float, float]
    frame_width: float = DEFAULT_FRAME_WIDTH

    @property
    def policy(self) -> ResizePolicy:
        return ResizePolicy.from_limits(self.min_size, self.max_size)


class _AutoFramed(Element):
    """Adapter giving any rect-carrying object the standard frame cover
    and the predetermined handle reactions, so plain controls need no
    cover/move code of their own."""

    def __init__(self, target, frame: AutoFrame):
        if not isinstance(getattr(target, "rect", None), Rect):
            raise TypeError("auto-framed registration needs an object with a Rect 'rect' attribute")
        self.target = target
        self.frame = frame
        self._roles = frame_cover_roles(frame.policy)

    def define_cover(self) -> Cover:
        return make_rect_frame_cover(self.target.rect, self.frame.frame_width, self.frame.policy)

    def move(self, dx: float, dy: float) -> None:
        self.target.rect = self.target.rect.translated(dx, dy)

    def move_node(self, i: int, dx: float, dy: float, pt: Point, button: PointerButton) -> bool:
        if button is PointerButton.RIGHT:
            return False
        role = self._roles[i]
        if role.value.startswith("strip"):
            return False
        new = resize_frame_rect(self.target.rect, role, dx, dy, self.frame.min_size, self.frame.max_size)
        if new == self.target.rect:
            return False
        self.target.rect = new
        return True

    def bounds(self) -> Rect:
        return self.target.rect


class MoveMode(Enum):
    FORWARD = "forward"
    ROTATE = "rotate"


@dataclass
class Caught:
    """One-slot caught state: which element and node own the drag."""

    element_id: ElementId
    node: int
    last_point: Point
    mode: MoveMode
    button: PointerButton
    pivot: Optional[Point] = None        # rotate only: bbox center at catch
    grab_angle: Optional[float] = None   # rotate only: pivot->pointer at catch


class Mover:
    """Supervises every registered element through three pointer events."""

    def __init__(self) -> None:
        self._elements: list[Element] = []   # bottom to top
        self._ids = itertools.count(1)
        self._caught: Optional[Caught] = None

    # -- registry ------------------------------------------------------

    def register(self, element, auto_frame: Optional[AutoFrame] = None) -> ElementId:
        """Append an element on top of the z-order and give it an id.

        With auto_frame, any object holding a Rect `rect` attribute is
        accepted; the engine synthesizes its frame cover and handles the
        predefined resize reactions itself.
        """
        for existing in self._elements:
            if existing is element or getattr(existing, "target", None) is element:
                raise ValueError("element is already registered")
        entry: Element = _AutoFramed(element, auto_frame) if auto_frame is not None else element
        if not isinstance(entry, Element):
            raise TypeError("register() needs an Element (or auto_frame for a rect carrier)")
        entry.id = next(self._ids)
        self._elements.append(entry)
        return entry.id

    def unregister(self, element_id: ElementId) -> None:
        entry = self._find(element_id)
        if self._caught is not None and self._caught.element_id == element_id:
            self.release()
        self._elements.remove(entry)

    def bring_to_front(self, element_id: ElementId) -> None:
        """Raise to top; allowed mid-drag, the caught state keeps the id."""
        entry = self._find(element_id)
        self._elements.remove(entry)
        self._elements.append(entry)

    def elements(self) -> tuple[Element, ...]:
        """Snapshot in z-order, bottom to top."""
        return tuple(self._elements)

    def element_by_id(self, element_id: ElementId) -> Element:
        return self._find(element_id)

    def _find(self, element_id: ElementId) -> Element:
        for e in self._elements:
            if e.id == element_id:
                return e
        raise ValueError(f"unknown element id: {element_id}")

    # -- the three pointer events --------------------------------------

    def catch(self, p: Point, button: PointerButton) -> bool:
        """Hit-test topmost-first and grab the first hit node.

        A catch while something is caught releases first. The right
        button only starts rotation: on a non-rotatable element it
        catches nothing.
        """
        require_finite(p.x, p.y)
        if self._caught is not None:
            self.release()
        for element in reversed(self._elements):
            i = cover_hit(element.define_cover(), p)
            if i is None:
                continue
            if button is PointerButton.RIGHT:
                if not element.rotatable:
                    return False
                pivot = element.bounds().center
                self._caught = Caught(
                    element.id, i, p, MoveMode.ROTATE, button,
                    pivot=pivot, grab_angle=angle_of(pivot, p),
                )
            else:
                self._caught = Caught(element.id, i, p, MoveMode.FORWARD, button)
            return True
        return False

    def move(self, p: Point) -> bool:
        """Drive the caught element; True iff any geometry changed (gate
        repaints on it). Idle moves return False."""
        require_finite(p.x, p.y)
        st = self._caught
        if st is None:
            return False
        element = self._find(st.element_id)
        dx = p.x - st.last_point.x
        dy = p.y - st.last_point.y
        st.last_point = p

        if st.mode is MoveMode.ROTATE:
            return element.move_node(st.node, dx, dy, p, PointerButton.RIGHT)

        freedom = element.define_cover().nodes[st.node].freedom
        if freedom is MovementFreedom.NONE:
            if dx == 0.0 and dy == 0.0:
                return False
            element.move(dx, dy)
            return True
        if freedom is MovementFreedom.NS:
            dx = 0.0
        elif freedom is MovementFreedom.WE:
            dy = 0.0
        return element.move_node(st.node, dx, dy, p, st.button)

    def release(self) -> Optional[tuple[ElementId, int]]:
        """Drop the caught state; returns what was caught, None when idle."""
        st = self._caught
        self._caught = None
        if st is None:
            return None
        return (st.element_id, st.node)

    # -- queries --------------------------------------------------------

    @property
    def caught(self) -> Optional[Caught]:
        return self._caught

    def cursor(self, p: Point) -> CursorShape:
        """Cursor feedback: the caught node's cursor while dragging, else
        the topmost hit node's cursor, else Default."""
        require_finite(p.x, p.y)
        if self._caught is not None:
            element = self._find(self._caught.element_id)
            return element.define_cover().nodes[self._caught.node].cursor
        for element in reversed(self._elements):
            cover = element.define_cover()
            i = cover_hit(cover, p)
            if i is not None:
                return cover.nodes[i].cursor
        return CursorShape.DEFAULT
