"""Delta diagrams: every region has three, four or five sides.

The rectilinear diagram D is drawn on even coordinates.  Between consecutive
levels a horizontal line is laid across the whole drawing, under D, and the
lines are chained into one spiral S: each line leaves to the right, climbs
above D, comes back round the left and enters the next line up.  The last
line returns down the left side to the start of the first line, passing under
the lines in between, so S is a descending unknot lying below D.  Finally S
is spliced into D at the leftmost crossing of the first line, which cuts
every region of D down to three, four or five sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import LinkDiagram, trace_components, trace_faces
from .geometry import CurvePD, Seg, curves_to_pd
from .leveling import Leveling, widths
from .rectilinear import RectDiagram, to_rectilinear

F_POLY_LIMIT = 7


class DeltaError(ValueError):
    """Input outside the construction's preconditions."""


def delta_bound(n: int) -> int:
    """Largest crossing count allowed for an n-crossing input: floor(n^2/2 + 4n - 5)."""
    return n * n // 2 + 4 * n - 5


def delta_total(n: int, ws: list[int]) -> int:
    """Crossings of the construction for inner widths ``ws`` (one per line)."""
    return n + (n - 2) + sum(ws) - 1


@dataclass(frozen=True)
class DeltaCounts:
    d_self: int
    s_self: int
    ds_cross: int

    @property
    def total(self) -> int:
        return self.d_self + self.s_self + self.ds_cross


@dataclass
class DeltaDiagram:
    pd: LinkDiagram
    # tagged polylines: ("D" | "S" | "J", segment)
    layout: list[tuple[str, Seg]]
    counts: DeltaCounts
    # leveling widths w_1 .. w_{n-1}
    widths: list[int]
    join: tuple[int, int]
    mirrored: bool
    outer_face: int
    # crossing positions in the layout, in pd crossing order
    points: list[tuple[int, int]] = field(default_factory=list)
    smoothing: str = ""
    source_name: str | None = None

    def to_json(self) -> dict:
        return {
            "crossings": self.pd.n,
            "d_self": self.counts.d_self,
            "s_self": self.counts.s_self,
            "ds_cross": self.counts.ds_cross,
            "widths": self.widths,
            "join": list(self.join),
            "mirrored": self.mirrored,
            "smoothing": self.smoothing,
            "pd": self.pd.to_json(),
        }


def _spiral(n: int) -> list[Seg]:
    """Lines y = 2k+3 (k = 1..n-1) chained into one closed curve, before doubling."""
    right = {k: 2 * (n + 2) + 2 * (n - k) + 1 for k in range(1, n)}
    left = {k: (-1 if k == 1 else 1 - 2 * (n - k + 1)) for k in range(1, n)}
    y = {k: 2 * k + 3 for k in range(1, n)}
    segs = []
    for k in range(1, n):
        segs.append(Seg(left[k], y[k], right[k], y[k]))
        top = right[k]
        nxt_x = left[k + 1] if k < n - 1 else -1
        nxt_y = y[k + 1] if k < n - 1 else y[1]
        segs.append(Seg(right[k], y[k], right[k], top))
        segs.append(Seg(right[k], top, nxt_x, top))
        segs.append(Seg(nxt_x, top, nxt_x, nxt_y))
    return segs


def _check_preconditions(d: LinkDiagram):
    if d.n < 3:
        comps = trace_components(d).count if d.crossings else d.free_loops
        if d.n == 2 and comps == 2:
            raise DeltaError("the Hopf link is excluded from the delta construction")
        raise DeltaError(f"delta construction needs at least 3 crossings, got {d.n}")
    if d.free_loops:
        raise DeltaError("split diagram: crossing-free circles present")


def _smooth(segs: list[tuple[str, Seg]], h: int, v: int, point, joint: str) -> list[tuple[str, Seg]]:
    """Cut segments ``h`` and ``v`` at ``point`` and reconnect the four arms in pairs.

    ``joint`` "NW" joins west with north (and east with south); "NE" joins
    west with south (and east with north).  Coordinates must be spaced by at
    least 2 so the unit detour touches nothing else.
    """
    x, y = point
    out = [t for i, t in enumerate(segs) if i not in (h, v)]
    hs, vs = segs[h][1], segs[v][1]
    xl, xr = sorted((hs.x1, hs.x2))
    yb, yt = sorted((vs.y1, vs.y2))
    th, tv = segs[h][0], segs[v][0]
    out += [(th, Seg(xl, y, x - 1, y)), (th, Seg(x + 1, y, xr, y)),
            (tv, Seg(x, yb, x, y - 1)), (tv, Seg(x, y + 1, x, yt))]
    if joint == "NW":
        pieces = [Seg(x - 1, y, x - 1, y + 1), Seg(x - 1, y + 1, x, y + 1),
                  Seg(x + 1, y, x + 1, y - 1), Seg(x + 1, y - 1, x, y - 1)]
    else:
        pieces = [Seg(x - 1, y, x - 1, y - 1), Seg(x - 1, y - 1, x, y - 1),
                  Seg(x + 1, y, x + 1, y + 1), Seg(x + 1, y + 1, x, y + 1)]
    out += [("J", p) for p in pieces]
    return out


def _trace(tagged: list[tuple[str, Seg]], over) -> CurvePD:
    return curves_to_pd([s for _, s in tagged], over)


def to_delta(lv: Leveling, d: LinkDiagram, r: RectDiagram | None = None) -> DeltaDiagram:
    _check_preconditions(d)
    n = d.n
    r = r or to_rectilinear(lv, d)
    ws = widths(lv)[1:n]
    mirrored = lv.levels[1].position == 0
    span = 2 * (n + 3)

    def mx(x):
        return span - x if mirrored else x

    tagged: list[tuple[str, Seg]] = []
    for h in r.horizontals:
        a, b = sorted((mx(2 * h.x1), mx(2 * h.x2)))
        tagged.append(("D", Seg(a, 2 * h.y, b, 2 * h.y)))
    nh = len(r.horizontals)
    for v in r.verticals:
        tagged.append(("D", Seg(mx(2 * v.x), 2 * v.y1, mx(2 * v.x), 2 * v.y2)))
    d_count = len(tagged)
    tagged += [("S", s) for s in _spiral(n)]
    # double everything so the join detour fits between lattice points
    tagged = [(t, Seg(2 * s.x1, 2 * s.y1, 2 * s.x2, 2 * s.y2)) for t, s in tagged]
    dd_over = {(c.h, nh + c.v): c.h_over != mirrored for c in r.crossings}

    def over(i: int, j: int) -> bool:
        if i < d_count and j < d_count:
            return dd_over[(i, j)]
        if j < d_count:
            return False  # S runs under D
        return True  # spiral lines pass over its closing descent

    base = _trace(tagged, over)
    line1 = d_count  # first spiral segment is the bottom line
    hits = [(p, k) for k, (p, (i, _)) in enumerate(zip(base.points, base.pairs)) if i == line1]
    if not hits:
        raise RuntimeError("the first spiral line crosses nothing")
    (jx, jy), k = min(hits)
    hi, vi = base.pairs[k]

    def smoothed(joint):
        segs = _smooth(tagged, hi, vi, (jx, jy), joint)
        keep = [i for i in range(len(tagged)) if i not in (hi, vi)]
        # after the kept segments come the two halves of each cut segment
        first_cut = len(keep)
        origin = {first_cut: hi, first_cut + 1: hi, first_cut + 2: vi, first_cut + 3: vi}

        def over2(i, j):
            oi = keep[i] if i < first_cut else origin.get(i)
            oj = keep[j] if j < first_cut else origin.get(j)
            if oi is None or oj is None:
                raise RuntimeError("join detour crosses another strand")
            return over(oi, oj)

        return segs, curves_to_pd([s for _, s in segs], over2)

    best = None
    for joint in ("NW", "NE"):
        segs, cp = smoothed(joint)
        fs = trace_faces(cp.diagram)
        ok = all(3 <= k <= 5 for k in fs.sizes())
        if best is None or (ok and not best[3]):
            best = (joint, segs, cp, ok)
        if ok:
            break
    joint, segs, cp, _ = best
    fs = trace_faces(cp.diagram)
    outer = fs.face_of()[cp.outer_corner([s for _, s in segs])]
    counts = DeltaCounts(n, n - 2, sum(ws) - 1)
    pd = LinkDiagram(cp.diagram.crossings, f"{d.name}-delta" if d.name else None, cp.diagram.free_loops)
    return DeltaDiagram(pd, segs, counts, ws, (jx, jy), mirrored, outer, cp.points, joint, d.name)


@dataclass
class DeltaReport:
    failures: list[str] = field(default_factory=list)
    bounded_sizes_ok: bool = True
    unbounded_size: int = 0
    unbounded_ok: bool = True
    f_poly_checked: bool = False

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_delta(dd: DeltaDiagram, source: LinkDiagram | None = None,
                 f_poly_limit: int = F_POLY_LIMIT) -> DeltaReport:
    rep = DeltaReport()
    fs = trace_faces(dd.pd)
    sizes = fs.sizes()
    outer = dd.outer_face if 0 <= dd.outer_face < len(sizes) else fs.outer_face_index
    bad = [s for i, s in enumerate(sizes) if i != outer and not 3 <= s <= 5]
    if bad:
        rep.bounded_sizes_ok = False
        rep.failures.append(f"region size: bounded regions with {sorted(set(bad))} sides")
    rep.unbounded_size = sizes[outer]
    if not 3 <= sizes[outer] <= 5:
        rep.unbounded_ok = False
        rep.failures.append(f"region size: unbounded region has {sizes[outer]} sides")
    n = dd.counts.d_self
    c = dd.counts
    if c.s_self != n - 2 or c.ds_cross != sum(dd.widths) - 1 or dd.pd.n != c.total:
        rep.failures.append(
            f"crossing identity: {dd.pd.n} crossings, expected {n} + {n - 2} + ({sum(dd.widths)} - 1)")
    if dd.pd.n > delta_bound(n):
        rep.failures.append(f"bound: {dd.pd.n} crossings exceeds {delta_bound(n)}")
    if source is not None and source.n <= f_poly_limit:
        from .invariants import f_poly

        rep.f_poly_checked = True
        if f_poly(dd.pd) != f_poly(source):
            rep.failures.append("f-polynomial differs from the source diagram")
    return rep
