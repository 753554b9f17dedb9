"""Catalog of named demo scenes, each deterministic given its name.

Scenes target a nominal 800 x 600 canvas. Layout numbers are fixed here
so traces, goldens and the browser demo all see identical geometry.
"""

from __future__ import annotations

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
from .geometry import Point, Rect
from .scene import Scene

CANVAS_SIZE = (800.0, 600.0)

# Calculator button grid: 46x28 buttons, 62px column pitch, 42px row pitch.
_CALC_ROWS = (
    ("c", "ce", "mc", "mr"),
    ("7", "8", "9", "div"),
    ("4", "5", "6", "mul"),
    ("1", "2", "3", "sub"),
    ("0", "dot", "eq", "add"),
)
_CALC_LABELS = {"div": "/", "mul": "*", "sub": "-", "add": "+", "dot": ".", "eq": "=", "c": "C", "ce": "CE", "mc": "MC", "mr": "MR"}


def _calculator() -> Scene:
    scene = Scene("calculator")
    scene.add(
        "display",
        FramedControl(Rect(20, 20, 232, 28), min_size=(100, 28), max_size=(400, 28), payload="0."),
    )
    for row, labels in enumerate(_CALC_ROWS):
        for col, key in enumerate(labels):
            rect = Rect(20 + col * 62, 64 + row * 42, 46, 28)
            scene.add(f"btn_{key}", FramedControl(rect, payload=_CALC_LABELS.get(key, key)))
    return scene


def _selection_group_layout(frame: Rect) -> list[Rect]:
    return [
        Rect(frame.x + 12, frame.y + 24, frame.w - 24, frame.h - 70),
        Rect(frame.x + frame.w - 72, frame.y + frame.h - 34, 60, 24),
    ]


def _data_selection() -> Scene:
    scene = Scene("data-selection")
    for tag, x, title, action in (
        ("group_all", 20.0, "All items", "Add"),
        ("group_sel", 260.0, "Selected", "Remove"),
    ):
        children = [
            FramedControl(Rect(0, 0, 10, 10), min_size=(1, 1), max_size=(2000, 2000), payload="list"),
            FramedControl(Rect(0, 0, 10, 10), min_size=(1, 1), max_size=(2000, 2000), payload=action),
        ]
        scene.add(
            tag,
            Group(
                Rect(x, 20, 200, 280),
                title,
                frame_min=(140, 200),
                frame_max=(320, 420),
                children=children,
                layout=_selection_group_layout,
            ),
        )
    scene.add("btn_ok", FramedControl(Rect(200, 320, 64, 26), payload="OK"))
    return scene


def _personal_info() -> Scene:
    scene = Scene("personal-info")

    def cc(rect: Rect, text: str, resizable_to: float | None = None) -> CommentedControl:
        min_size = (120.0, rect.h) if resizable_to else None
        max_size = (resizable_to, rect.h) if resizable_to else None
        return CommentedControl(rect, text, anchor=(0.3, -0.6), min_size=min_size, max_size=max_size)

    scene.add("name", cc(Rect(80, 40, 200, 24), "Name", resizable_to=320))
    scene.add("family", cc(Rect(80, 90, 200, 24), "Family name", resizable_to=320))
    date_children = [
        cc(Rect(80, 150, 60, 24), "Day"),
        cc(Rect(160, 150, 60, 24), "Month"),
        cc(Rect(240, 150, 80, 24), "Year"),
    ]
    for tag, child in zip(("day", "month", "year"), date_children):
        scene.add(tag, child)
    scene.add("date_frame", DependentFrame(date_children, margin=8))
    addr_children = [
        cc(Rect(80, 230, 240, 24), "Street", resizable_to=360),
        cc(Rect(80, 280, 160, 24), "Town"),
        cc(Rect(260, 280, 80, 24), "ZIP"),
    ]
    for tag, child in zip(("street", "town", "zip"), addr_children):
        scene.add(tag, child)
    scene.add("addr_frame", DependentFrame(addr_children, margin=8))
    return scene


def _panels_group_layout(frame: Rect) -> list[Rect]:
    return [
        Rect(frame.x + 14, frame.y + 26, frame.w - 28, 28),
        Rect(frame.x + 14, frame.y + 62, frame.w - 28, 28),
    ]


def _panels() -> Scene:
    scene = Scene("panels")
    scene.add("fc", FramedControl(Rect(40, 40, 120, 32), min_size=(80, 24), max_size=(240, 64), payload="Run"))
    scene.add(
        "cc",
        CommentedControl(Rect(240, 40, 140, 24), "Input", anchor=(0.25, -0.6), min_size=(100, 24), max_size=(260, 24)),
    )
    scene.add(
        "grp",
        Group(
            Rect(460, 40, 220, 160),
            "Options",
            frame_min=(160, 120),
            frame_max=(320, 240),
            children=[
                FramedControl(Rect(0, 0, 10, 10), min_size=(1, 1), max_size=(2000, 2000), payload="first"),
                FramedControl(Rect(0, 0, 10, 10), min_size=(1, 1), max_size=(2000, 2000), payload="second"),
            ],
            layout=_panels_group_layout,
        ),
    )
    df_children = [
        FramedControl(Rect(60, 260, 100, 26), payload="alpha"),
        FramedControl(Rect(190, 300, 90, 26), payload="beta"),
    ]
    scene.add("df_a", df_children[0])
    scene.add("df_b", df_children[1])
    scene.add("df", DependentFrame(df_children, margin=8))
    scene.add(
        "lr",
        LinkedRectangles([Rect(380, 260, 70, 30), Rect(470, 300, 70, 30), Rect(380, 350, 160, 24)]),
    )
    scene.add("poly", ChatoyantPolygon.regular(Point(640, 330), sides=5, circumradius=70))
    scene.add("disc", Disc(Point(120, 480), 60))
    scene.add("ring", Ring(Point(300, 480), 30, 65))
    scene.add(
        "plot",
        PlotComposite(
            Rect(420, 430, 240, 130),
            scales=[PlotScale(PlotSide.LEFT, (-20.0, 0.0)), PlotScale(PlotSide.BOTTOM, (0.0, 6.0))],
            comments=[PlotComment(-1, "Overview", (0.5, 0.12))],
        ),
    )
    return scene


def _plots() -> Scene:
    scene = Scene("plots")
    scene.add(
        "plot_main",
        PlotComposite(
            Rect(60, 60, 300, 200),
            scales=[PlotScale(PlotSide.LEFT, (-24.0, 0.0)), PlotScale(PlotSide.BOTTOM, (0.0, 10.0))],
            comments=[
                PlotComment(-1, "Results", (0.5, 0.1)),
                PlotComment(1, "Time", (0.5, 1.8)),
            ],
        ),
    )
    scene.add(
        "plot_aux",
        PlotComposite(
            Rect(440, 80, 240, 160),
            scales=[PlotScale(PlotSide.LEFT, (-20.0, 0.0))],
            comments=[PlotComment(-1, "Aux", (0.5, 0.15))],
        ),
    )
    scene.add("run_btn", FramedControl(Rect(60, 380, 90, 28), payload="Run"))
    scene.add(
        "mode_box",
        CommentedControl(Rect(200, 380, 160, 26), "Mode", anchor=(0.3, -0.65), min_size=(120, 26), max_size=(300, 26)),
    )
    return scene


def _polygon() -> Scene:
    scene = Scene("polygon")
    scene.add("poly", ChatoyantPolygon.regular(Point(320, 240), sides=6, circumradius=120))
    return scene


def _nnode() -> Scene:
    scene = Scene("nnode")
    scene.add("disc", Disc(Point(180, 220), 90, count=24, node_radius=5))
    scene.add("ring", Ring(Point(500, 240), 50, 100, count=24, node_radius=5))
    return scene


_BUILDERS = {
    "calculator": _calculator,
    "data-selection": _data_selection,
    "personal-info": _personal_info,
    "panels": _panels,
    "plots": _plots,
    "polygon": _polygon,
    "nnode": _nnode,
}


def scene_names() -> list[str]:
    return list(_BUILDERS)


def build_scene(name: str) -> Scene:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"unknown scene: {name!r} (try one of {', '.join(_BUILDERS)})") from None
    return builder()
