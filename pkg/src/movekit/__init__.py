"""movekit: turn arbitrary 2D screen elements into moveable, resizable,
rotatable objects.

Objects carry covers of sensitive nodes (circles, capsules, convex
polygons); one Mover supervises them all through the three pointer
events (down, move, up). Left button drags and resizes, right button
rotates. Ships an element library, layout persistence, a deterministic
trace-replay CLI and a browser demo boundary.
"""

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
    cover_hit,
    cursor_at,
    frame_cover_roles,
    make_n_node_border_cover,
    make_rect_frame_cover,
    node_contains,
    resize_frame_rect,
)
from .elements import (
    ChatoyantPolygon,
    CommentedControl,
    DependentFrame,
    Disc,
    FramedControl,
    Group,
    LinkedRectangles,
    PlotComment,
    PlotComposite,
    PlotScale,
    PlotSide,
    Ring,
)
from .geometry import (
    Point,
    Rect,
    bounds_union,
    dist_point_segment,
    normalize_angle,
    point_in_convex_polygon,
    rotate_point,
)
from .mover import AutoFrame, Element, ElementId, Mover, PointerButton
from .persistence import (
    LayoutDocument,
    LayoutError,
    LayoutRecord,
    parse_layout,
    restore_layout,
    save_layout,
    scene_document,
)
from .scene import Scene
from .scenes import build_scene, scene_names
from .trace import ReplayReport, TraceError, parse_trace, run_trace

__all__ = [
    "AutoFrame",
    "Capsule",
    "ChatoyantPolygon",
    "Circle",
    "CommentedControl",
    "ConvexPolygon",
    "Cover",
    "CoverNode",
    "CursorShape",
    "DEFAULT_FRAME_WIDTH",
    "DependentFrame",
    "Disc",
    "Element",
    "ElementId",
    "FrameRole",
    "FramedControl",
    "Group",
    "LayoutDocument",
    "LayoutError",
    "LayoutRecord",
    "LinkedRectangles",
    "MovementFreedom",
    "Mover",
    "Point",
    "PointerButton",
    "PlotComment",
    "PlotComposite",
    "PlotScale",
    "PlotSide",
    "Rect",
    "ReplayReport",
    "ResizePolicy",
    "Ring",
    "Scene",
    "TraceError",
    "bounds_union",
    "build_scene",
    "cover_hit",
    "cursor_at",
    "dist_point_segment",
    "frame_cover_roles",
    "make_n_node_border_cover",
    "make_rect_frame_cover",
    "node_contains",
    "normalize_angle",
    "parse_layout",
    "parse_trace",
    "point_in_convex_polygon",
    "restore_layout",
    "rotate_point",
    "run_trace",
    "save_layout",
    "scene_document",
    "scene_names",
    "resize_frame_rect",
]
