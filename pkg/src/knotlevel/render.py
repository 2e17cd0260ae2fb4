"""SVG and ASCII drawings of levelings, rectilinear diagrams, arc presentations
and delta diagrams.

All coordinates are integers; SVG output is built from fixed-format strings
so the same input always yields the same bytes.  At a crossing the under
strand is drawn with a gap.
"""

from __future__ import annotations

from typing import Sequence

from .arc import ArcPresentation
from .delta import DeltaDiagram
from .diagram import LinkDiagram
from .geometry import N, Seg, curves_to_pd
from .leveling import Leveling, initial_frontier, place, _label_index
from .rectilinear import RectDiagram, rect_to_curves

UNIT = 20
MARGIN = 1
COLORS = {"D": "#000000", "S": "#1f5fbf", "J": "#c0392b"}

# a crossing as (x, y, horizontal strand is over)
Mark = tuple[int, int, bool]


def _header(w: int, h: int) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>',
    ]


class _Frame:
    """Maps lattice points to SVG pixels, y pointing up."""

    def __init__(self, xs: Sequence[int], ys: Sequence[int], unit: int = UNIT):
        self.x0, self.x1 = min(xs) - MARGIN, max(xs) + MARGIN
        self.y0, self.y1 = min(ys) - MARGIN, max(ys) + MARGIN
        self.unit = unit

    @property
    def size(self) -> tuple[int, int]:
        return (self.x1 - self.x0) * self.unit, (self.y1 - self.y0) * self.unit

    def px(self, x: int, y: int) -> tuple[int, int]:
        return (x - self.x0) * self.unit, (self.y1 - y) * self.unit


def _line(f: _Frame, x1, y1, x2, y2, color="#000000", width=2, extra="") -> str:
    a, b = f.px(x1, y1)
    c, e = f.px(x2, y2)
    return f'<line x1="{a}" y1="{b}" x2="{c}" y2="{e}" stroke="{color}" stroke-width="{width}"{extra}/>'


def segments_svg(segs: Sequence[Seg], marks: Sequence[Mark], tags: Sequence[str] | None = None,
                 unit: int = UNIT) -> str:
    xs = [p[0] for s in segs for p in s.ends]
    ys = [p[1] for s in segs for p in s.ends]
    f = _Frame(xs, ys, unit)
    out = _header(*f.size)
    tags = tags or ["D"] * len(segs)
    for s, t in zip(segs, tags):
        out.append(_line(f, s.x1, s.y1, s.x2, s.y2, COLORS.get(t, "#000000")))
    gap = max(unit // 4, 2)
    for x, y, h_over in marks:
        cx, cy = f.px(x, y)
        # blank the under strand, then restore the over strand
        if h_over:
            out.append(f'<line x1="{cx}" y1="{cy - gap}" x2="{cx}" y2="{cy + gap}" stroke="#ffffff" stroke-width="6"/>')
            out.append(f'<line x1="{cx - gap}" y1="{cy}" x2="{cx + gap}" y2="{cy}" stroke="#000000" stroke-width="2"/>')
        else:
            out.append(f'<line x1="{cx - gap}" y1="{cy}" x2="{cx + gap}" y2="{cy}" stroke="#ffffff" stroke-width="6"/>')
            out.append(f'<line x1="{cx}" y1="{cy - gap}" x2="{cx}" y2="{cy + gap}" stroke="#000000" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def segments_ascii(segs: Sequence[Seg], marks: Sequence[Mark]) -> str:
    """Character grid on ranked coordinates: ``-``/``|`` strands, ``+`` corners."""
    xs = sorted({p[0] for s in segs for p in s.ends} | {m[0] for m in marks})
    ys = sorted({p[1] for s in segs for p in s.ends} | {m[1] for m in marks})
    cx = {x: 2 * i for i, x in enumerate(xs)}
    cy = {y: i for i, y in enumerate(ys)}
    grid = [[" "] * (2 * len(xs) - 1) for _ in ys]
    for s in segs:
        if s.horizontal:
            a, b = sorted((cx[s.x1], cx[s.x2]))
            for c in range(a, b + 1):
                grid[cy[s.y1]][c] = "-"
        else:
            a, b = sorted((cy[s.y1], cy[s.y2]))
            for r in range(a, b + 1):
                grid[r][cx[s.x1]] = "|"
    for s in segs:
        for x, y in s.ends:
            grid[cy[y]][cx[x]] = "+"
    for x, y, h_over in marks:
        grid[cy[y]][cx[x]] = "-" if h_over else "|"
    return "\n".join("".join(row).rstrip() for row in reversed(grid)) + "\n"


# ---------------------------------------------------------------- per-object views

def rect_marks(r: RectDiagram) -> list[Mark]:
    cp = rect_to_curves(r)
    return [(x, y, c.under_entry == N) for (x, y), c in zip(cp.points, cp.diagram.crossings)]


def arc_segments(a: ArcPresentation) -> tuple[list[Seg], list[Mark]]:
    rows: dict[int, list[int]] = {}
    segs = []
    for i, (lo, hi) in enumerate(a.arcs):
        segs.append(Seg(lo, i + 1, hi, i + 1))
        rows.setdefault(lo, []).append(i + 1)
        rows.setdefault(hi, []).append(i + 1)
    for b in sorted(rows):
        y1, y2 = sorted(rows[b])
        segs.append(Seg(b, y1, b, y2))
    cp = curves_to_pd(segs, lambda h, v: False)
    return segs, [(x, y, False) for x, y in cp.points]


def delta_marks(dd: DeltaDiagram) -> list[Mark]:
    return [(x, y, c.under_entry == N) for (x, y), c in zip(dd.points, dd.pd.crossings)]


def leveling_svg(lv: Leveling, d: LinkDiagram, unit: int = UNIT) -> str:
    """Vertices on the half-integer lines y = k - 1/2; edges bend only at integer lines.

    Drawn at doubled scale so every point has integer coordinates.
    """
    pts, polylines = _leveling_geometry(lv, d)
    xs = [p[0] for p in pts.values()] + [p[0] for pl in polylines for p in pl]
    ys = [p[1] for p in pts.values()] + [0, 2 * len(lv.levels)]
    f = _Frame(xs, ys, unit)
    out = _header(*f.size)
    for k in range(len(lv.levels) + 1):
        out.append(_line(f, f.x0, 2 * k, f.x1, 2 * k, "#bbbbbb", 1, ' stroke-dasharray="4,4"'))
    for pl in polylines:
        coords = " ".join("{},{}".format(*f.px(x, y)) for x, y in pl)
        out.append(f'<polyline points="{coords}" fill="none" stroke="#000000" stroke-width="2"/>')
    for v in lv.order:
        cx, cy = f.px(*pts[v])
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{max(unit // 5, 2)}" fill="#000000"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _leveling_geometry(lv: Leveling, d: LinkDiagram):
    idx = _label_index(d)
    pts: dict[int, tuple[int, int]] = {}
    paths: dict[int, list[tuple[int, int]]] = {}
    first, frontier = initial_frontier(d, lv.order[0], lv.corner_slot)
    frames = [(first, frontier)]
    for v in lv.order[1:]:
        step = place(d, frontier, v, idx)
        if step is None:
            raise ValueError("leveling does not replay on this diagram")
        frames.append(step)
        frontier = step[1]
    width = max(len(fr) for _, fr in frames) or 1
    for k, (level, fr) in enumerate(frames):
        # frontier on the line y = k+1 (doubled: 2k+2), vertex on y = k+1/2 (doubled: 2k+1)
        if level.p:
            lo = level.position
            span = [2 * i + 2 for i in range(lo, lo + level.p)]
        else:
            span = [2 * i + 2 for i in range(level.position, level.position + level.q)]
        pts[level.vertex] = ((min(span) + max(span)) // 2 if span else width, 2 * k + 1)
        for i, lab in enumerate(fr):
            paths.setdefault(lab, []).append((2 * i + 2, 2 * k + 2))
    polylines = []
    for lab in sorted(paths):
        ends = sorted(idx[lab], key=lv.order.index)
        a, b = ends[0], ends[-1]
        polylines.append([pts[a]] + paths[lab] + [pts[b]])
    return pts, polylines


def leveling_ascii(lv: Leveling, d: LinkDiagram | None = None) -> str:
    lines = []
    for k in reversed(range(len(lv.levels))):
        level = lv.levels[k]
        lines.append(f"level {k + 1:<3} vertex {level.vertex:<3} {level.type:<6} block at {level.position}")
    return "\n".join(lines) + "\n"


def render(obj, fmt: str = "svg", diagram: LinkDiagram | None = None) -> str:
    if fmt not in ("svg", "ascii"):
        raise ValueError(f"unknown format {fmt!r}")
    svg = fmt == "svg"
    if isinstance(obj, Leveling):
        if svg:
            if diagram is None:
                raise ValueError("drawing a leveling needs its diagram")
            return leveling_svg(obj, diagram)
        return leveling_ascii(obj, diagram)
    if isinstance(obj, RectDiagram):
        segs, marks = obj.segments(), rect_marks(obj)
        return segments_svg(segs, marks) if svg else segments_ascii(segs, marks)
    if isinstance(obj, ArcPresentation):
        segs, marks = arc_segments(obj)
        return segments_svg(segs, marks) if svg else segments_ascii(segs, marks)
    if isinstance(obj, DeltaDiagram):
        segs = [s for _, s in obj.layout]
        tags = [t for t, _ in obj.layout]
        marks = delta_marks(obj)
        return segments_svg(segs, marks, tags, unit=8) if svg else segments_ascii(segs, marks)
    raise TypeError(f"cannot render {type(obj).__name__}")
