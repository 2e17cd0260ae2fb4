"""Rectilinear form of a leveled diagram.

Every level's vertex becomes one horizontal segment crossing one vertical
segment.  The first and last levels each contribute an extra horizontal that
crosses nothing, giving n+2 horizontals and n+2 verticals.  Vertical ``j``
sits at ``x = j`` and horizontal ``b_k`` at ``y = k`` (both 1-based).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import LinkDiagram
from .geometry import E, N, S, W, CurvePD, Seg, curves_to_pd
from .leveling import Leveling


@dataclass(frozen=True)
class HSeg:
    y: int
    x1: int
    x2: int
    crossing: int | None = None  # index into RectDiagram.crossings


@dataclass(frozen=True)
class VSeg:
    x: int
    y1: int
    y2: int


@dataclass(frozen=True)
class RectCrossing:
    h: int
    v: int
    h_over: bool
    vertex: int
    # source slot reached by leaving the crossing to the east, north, west, south
    slots: tuple[int, int, int, int]


@dataclass(frozen=True)
class RectDiagram:
    horizontals: tuple[HSeg, ...]
    verticals: tuple[VSeg, ...]
    crossings: tuple[RectCrossing, ...]

    @property
    def n(self) -> int:
        return len(self.crossings)

    def segments(self) -> list[Seg]:
        """Horizontals first (bottom to top), then verticals (left to right)."""
        out = [Seg(h.x1, h.y, h.x2, h.y) for h in self.horizontals]
        out += [Seg(v.x, v.y1, v.x, v.y2) for v in self.verticals]
        return out

    def rotated(self) -> "RectDiagram":
        """Rotate half a turn in the plane; crossing handedness is unchanged."""
        m = len(self.horizontals) + 1
        hs = tuple(HSeg(m - h.y, m - h.x2, m - h.x1, h.crossing) for h in reversed(self.horizontals))
        vs = tuple(VSeg(m - v.x, m - v.y2, m - v.y1) for v in reversed(self.verticals))
        last = len(self.horizontals) - 1
        xs = tuple(
            RectCrossing(last - c.h, last - c.v, c.h_over, c.vertex,
                         (c.slots[W], c.slots[S], c.slots[E], c.slots[N]))
            for c in self.crossings
        )
        return RectDiagram(hs, vs, xs)

    def to_json(self) -> dict:
        return {
            "horizontals": [[h.y, h.x1, h.x2] for h in self.horizontals],
            "verticals": [[v.x, v.y1, v.y2] for v in self.verticals],
            "crossings": [{"h": c.h, "v": c.v, "h_over": c.h_over, "vertex": c.vertex}
                          for c in self.crossings],
        }


class _Columns:
    """Vertical runs kept in a global left-to-right order."""

    def __init__(self):
        self.order: list[int] = []
        self.y1: dict[int, int] = {}
        self.y2: dict[int, int] = {}

    def new(self, y: int, before: int | None = None, after: int | None = None) -> int:
        cid = len(self.y1)
        self.y1[cid] = y
        if before is not None:
            self.order.insert(self.order.index(before), cid)
        elif after is not None:
            self.order.insert(self.order.index(after) + 1, cid)
        else:
            self.order.append(cid)
        return cid

    def end(self, cid: int, y: int):
        self.y2[cid] = y


def to_rectilinear(lv: Leveling, d: LinkDiagram) -> RectDiagram:
    n = d.n
    cols = _Columns()
    hs: list[tuple[int, int, int, int | None]] = []  # (y, col_a, col_b, crossing col)
    xinfo: list[tuple[int, int, tuple[int, int, int, int]]] = []  # (vertex, h index, dir slots)
    frontier: list[int] = []  # column ids, left to right
    for k, level in enumerate(lv.levels):
        v = level.vertex
        if k == 0:
            u = level.up_slots
            c1, c2, c3, c4 = (cols.new(y) for y in (2, 1, 2, 1))
            hs.append((1, c2, c4, None))
            hs.append((2, c1, c3, c2))
            xinfo.append((v, 1, (u[2], u[1], u[0], u[3])))
            frontier = [c1, c2, c3, c4]
            continue
        if k == n - 1:
            dn = level.down_slots
            a, b, c, e = frontier
            y = n + 1
            hs.append((y, a, c, b))
            hs.append((y + 1, b, e, None))
            for col, yy in ((a, y), (c, y), (b, y + 1), (e, y + 1)):
                cols.end(col, yy)
            xinfo.append((v, len(hs) - 2, (dn[2], dn[3], dn[0], dn[1])))
            frontier = []
            continue
        y = k + 2
        pos = level.position
        block = frontier[pos:pos + level.p]
        dn, up = level.down_slots, level.up_slots
        if (level.p, level.q) == (1, 3):
            (a,) = block
            cl = cols.new(y, before=a)
            cr = cols.new(y, after=a)
            hs.append((y, cl, cr, a))
            dirs = (up[2], up[1], up[0], dn[0])
            new = [cl, a, cr]
        elif (level.p, level.q) == (3, 1):
            a, b, c = block
            cols.end(a, y)
            cols.end(c, y)
            hs.append((y, a, c, b))
            dirs = (dn[2], up[0], dn[0], dn[1])
            new = [b]
        elif (level.p, level.q) == (2, 2):
            a, b = block
            cl = cols.new(y, before=a)
            cols.end(b, y)
            hs.append((y, cl, b, a))
            dirs = (dn[1], up[1], up[0], dn[0])
            new = [cl, a]
        else:
            raise ValueError(f"level {k + 1} has type {level.type}; only 4-valent interior types are supported")
        frontier = frontier[:pos] + new + frontier[pos + level.p:]
        xinfo.append((v, len(hs) - 1, dirs))
    x_of = {cid: i + 1 for i, cid in enumerate(cols.order)}
    vindex = {cid: i for i, cid in enumerate(cols.order)}
    verticals = tuple(VSeg(x_of[c], cols.y1[c], cols.y2[c]) for c in cols.order)
    crossings = []
    h_cross: dict[int, int] = {}
    for vtx, hi, dirs in xinfo:
        ccol = hs[hi][3]
        under = d.crossings[vtx]
        h_over = not under.is_under_slot(dirs[E])
        h_cross[hi] = len(crossings)
        crossings.append(RectCrossing(hi, vindex[ccol], h_over, vtx, dirs))
    horizontals = []
    for hi, (y, ca, cb, _) in enumerate(hs):
        xa, xb = sorted((x_of[ca], x_of[cb]))
        horizontals.append(HSeg(y, xa, xb, h_cross.get(hi)))
    return RectDiagram(tuple(horizontals), verticals, tuple(crossings))


def rect_to_curves(r: RectDiagram, name: str | None = None) -> CurvePD:
    nh = len(r.horizontals)
    over = {(c.h, nh + c.v): c.h_over for c in r.crossings}
    return curves_to_pd(r.segments(), lambda i, j: over[(i, j)], name)


def rect_to_pd(r: RectDiagram, name: str | None = None) -> LinkDiagram:
    return rect_to_curves(r, name).diagram


@dataclass
class RectReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_rectilinear(r: RectDiagram, source: LinkDiagram | None = None) -> RectReport:
    rep = RectReport()
    n = r.n
    if len(r.horizontals) != n + 2 or len(r.verticals) != n + 2:
        rep.failures.append(f"segment count: {len(r.horizontals)} horizontals, {len(r.verticals)} verticals for n={n}")
    hits: dict[int, list[int]] = {i: [] for i in range(len(r.horizontals))}
    for hi, h in enumerate(r.horizontals):
        for vi, v in enumerate(r.verticals):
            if h.x1 < v.x < h.x2 and v.y1 < h.y < v.y2:
                hits[hi].append(vi)
    for hi, vs in hits.items():
        if len(vs) > 1:
            rep.failures.append(f"crossing multiplicity: horizontal {hi + 1} crosses {len(vs)} verticals")
    top_bottom = {0, len(r.horizontals) - 1}
    for hi, vs in hits.items():
        if hi in top_bottom and vs:
            rep.failures.append(f"crossing multiplicity: extreme horizontal {hi + 1} crosses a vertical")
        if hi not in top_bottom and len(vs) != 1:
            rep.failures.append(f"crossing multiplicity: horizontal {hi + 1} crosses {len(vs)} verticals")
    recorded = {(c.h, c.v) for c in r.crossings}
    actual = {(hi, vi) for hi, vs in hits.items() for vi in vs}
    if recorded != actual:
        rep.failures.append("crossing records differ from the geometry")
    ends: dict[tuple[int, int], int] = {}
    for h in r.horizontals:
        for p in ((h.x1, h.y), (h.x2, h.y)):
            ends[p] = ends.get(p, 0) + 1
    vends: dict[tuple[int, int], int] = {}
    for v in r.verticals:
        for p in ((v.x, v.y1), (v.x, v.y2)):
            vends[p] = vends.get(p, 0) + 1
    if set(ends) != set(vends) or any(k != 1 for k in ends.values()) or any(k != 1 for k in vends.values()):
        rep.failures.append("corner condition: segment endpoints are not paired horizontal-to-vertical")
    if source is not None and not rep.failures:
        if sorted(c.vertex for c in r.crossings) != list(range(source.n)):
            rep.failures.append("crossing bijection with the source diagram fails")
        from .invariants import f_poly

        if f_poly(rect_to_pd(r)) != f_poly(source):
            rep.failures.append("f-polynomial differs from the source diagram")
    return rep
