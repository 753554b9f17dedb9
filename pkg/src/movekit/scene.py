"""Scene: an engine plus stable string tags for its elements.

Runtime element ids are allocation-ordered and worthless across runs;
scenes attach a stable tag to every element at construction so layouts
and traces can address elements by name.
"""

from __future__ import annotations

import re
from typing import Optional

from .mover import AutoFrame, Element, ElementId, Mover

_TAG_RE = re.compile(r"^[A-Za-z0-9_-]+$")


class Scene:
    def __init__(self, scene_id: str):
        if not _TAG_RE.match(scene_id):
            raise ValueError(f"invalid scene id: {scene_id!r}")
        self.scene_id = scene_id
        self.engine = Mover()
        self._element_by_tag: dict[str, Element] = {}
        self._tag_by_id: dict[ElementId, str] = {}

    def add(self, tag: str, element: Element, auto_frame: Optional[AutoFrame] = None) -> ElementId:
        """Register an element under a stable tag; later adds sit on top."""
        if not _TAG_RE.match(tag):
            raise ValueError(f"invalid element tag: {tag!r} (letters, digits, _, - only)")
        if tag in self._element_by_tag:
            raise ValueError(f"duplicate element tag: {tag!r}")
        eid = self.engine.register(element, auto_frame)
        registered = self.engine.element_by_id(eid)
        self._element_by_tag[tag] = registered
        self._tag_by_id[eid] = tag
        return eid

    def element(self, tag: str) -> Element:
        try:
            return self._element_by_tag[tag]
        except KeyError:
            raise KeyError(f"unknown element tag: {tag!r}") from None

    def has_tag(self, tag: str) -> bool:
        return tag in self._element_by_tag

    def tag_of(self, element: Element) -> str:
        return self._tag_by_id[element.id]

    def tags_in_z_order(self) -> list[str]:
        """Bottom to top, tracking any bring_to_front reordering."""
        return [self._tag_by_id[e.id] for e in self.engine.elements()]

    def bring_to_front(self, tag: str) -> None:
        self.engine.bring_to_front(self.element(tag).id)
