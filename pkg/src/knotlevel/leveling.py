"""Bisected vertex levelings of plane graphs.

The sweep line is modelled by a frontier: the left-to-right list of edges
that cross it.  Placing the next vertex replaces the contiguous block of its
pending (downward) edges with its remaining (upward) edges.  Around a vertex
the counterclockwise rotation reads the up-edges right to left followed by the
down-edges left to right, so a down block must occupy consecutive
counterclockwise slots and the up block is read clockwise from the block's
leftmost slot.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .diagram import DiagramError, LinkDiagram, adjacency, connected_subset, trace_faces, validate

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**6


class LevelingError(RuntimeError):
    def __init__(self, message: str, trace: list[str] | None = None):
        super().__init__(message)
        self.trace = trace or []


@dataclass(frozen=True)
class Level:
    vertex: int
    p: int
    q: int
    position: int
    down_slots: tuple[int, ...]
    up_slots: tuple[int, ...]

    @property
    def slot_map(self) -> tuple[int, ...]:
        """Rotation slots in leveled order: down block left to right, then up block."""
        return self.down_slots + self.up_slots

    @property
    def type(self) -> str:
        return f"T^{self.q}_{self.p}"


@dataclass(frozen=True)
class Leveling:
    order: tuple[int, ...]
    levels: tuple[Level, ...]
    outer_face: int
    v1: int
    vn: int
    corner_slot: int = 0
    retries: int = 0

    @property
    def types(self) -> list[tuple[int, int]]:
        return [(lv.p, lv.q) for lv in self.levels]

    def to_json(self) -> dict:
        return {
            "order": list(self.order),
            "levels": [
                {"vertex": lv.vertex, "p": lv.p, "q": lv.q, "position": lv.position,
                 "slot_map": list(lv.slot_map)}
                for lv in self.levels
            ],
            "outer_face": self.outer_face,
        }


def widths(lv: Leveling) -> list[int]:
    w = [0]
    for level in lv.levels:
        w.append(w[-1] - level.p + level.q)
    return w


# ---------------------------------------------------------------- frontier steps

def initial_frontier(d: LinkDiagram, v1: int, corner: int) -> tuple[Level, tuple[int, ...]]:
    """First level: all edges of ``v1`` go up, split at the corner from slot ``corner`` to ``corner+1``."""
    deg = len(d.crossings[v1].slots)
    ups = tuple((corner - i) % deg for i in range(deg))
    labels = tuple(d.crossings[v1].slots[s] for s in ups)
    return Level(v1, 0, deg, 0, (), ups), labels


def place(d: LinkDiagram, frontier: tuple[int, ...], w: int, ends: dict[int, set[int]]) -> tuple[Level, tuple[int, ...]] | None:
    """Try to place vertex ``w`` on the frontier; ``None`` if its pending edges are not a valid block."""
    slots = d.crossings[w].slots
    deg = len(slots)
    hits = [i for i, lab in enumerate(frontier) if w in ends[lab]]
    if not hits:
        return None
    lo, hi = hits[0], hits[-1]
    if hi - lo + 1 != len(hits):
        return None
    # slot at w of each frontier edge, left to right
    down = []
    for lab in frontier[lo:hi + 1]:
        s = _slot_at(d, w, lab)
        if s is None:
            return None
        down.append(s)
    for a, b in zip(down, down[1:]):
        if (a + 1) % deg != b:
            return None
    if len(set(down)) != len(down):
        return None
    p = len(down)
    ups = tuple((down[0] - 1 - i) % deg for i in range(deg - p))
    new = frontier[:lo] + tuple(slots[s] for s in ups) + frontier[hi + 1:]
    return Level(w, p, deg - p, lo, tuple(down), ups), new


def _slot_at(d: LinkDiagram, w: int, lab: int) -> int | None:
    slots = d.crossings[w].slots
    found = [s for s in range(len(slots)) if slots[s] == lab]
    return found[0] if len(found) == 1 else None


def _label_index(d: LinkDiagram) -> dict[int, set[int]]:
    """Edge label -> its endpoint vertices."""
    idx: dict[int, set[int]] = {}
    for v, c in enumerate(d.crossings):
        for lab in c.slots:
            idx.setdefault(lab, set()).add(v)
    return idx


# ---------------------------------------------------------------- search

@dataclass
class SearchOptions:
    budget: int = DEFAULT_BUDGET
    outer_face: int | None = None
    try_all_faces: bool = True


def compute_leveling(d: LinkDiagram, opts: SearchOptions | None = None) -> Leveling:
    """Find a bisected vertex leveling by depth-first search over sweep choices."""
    opts = opts or SearchOptions()
    report = validate(d)
    if not report.eligible:
        raise LevelingError(
            f"diagram is not leveling-eligible (connected={report.is_connected}, "
            f"loops={report.loop_vertices}, cut vertices={report.cut_vertices})"
        )
    fs = trace_faces(d)
    if opts.outer_face is not None:
        face_order = [opts.outer_face]
    else:
        face_order = [fs.outer_face_index]
        if opts.try_all_faces:
            rest = sorted((i for i in range(len(fs.faces)) if i != fs.outer_face_index),
                          key=lambda i: (-len(fs.faces[i]), min(fs.faces[i])))
            face_order += rest
    adj = adjacency(d)
    idx = _label_index(d)
    budget = [opts.budget]
    trace: list[str] = []
    for attempt, fi in enumerate(face_order):
        face = fs.faces[fi]
        verts = []
        for c, _ in face:
            if c not in verts:
                verts.append(c)
        for v1 in verts:
            corners = [s for c, s in face if c == v1]
            for vn in verts:
                if vn == v1:
                    continue
                for corner in corners:
                    result = _search(d, adj, idx, v1, vn, corner, budget)
                    if result is not None:
                        if attempt:
                            log.info("leveling of %s needed outer face retry (%d)", d.name, attempt)
                        order, levels = result
                        return Leveling(tuple(order), tuple(levels), fi, v1, vn, corner, attempt)
                    trace.append(f"face {fi}: v1={v1} vn={vn} corner={corner} failed")
                    if budget[0] <= 0:
                        raise LevelingError("search budget exhausted", trace)
    raise LevelingError("no bisected vertex leveling found", trace)


def _search(d, adj, idx, v1, vn, corner, budget):
    n = d.n
    if n == 1:
        return None
    first, frontier = initial_frontier(d, v1, corner)
    all_v = frozenset(range(n))
    failed: set = set()

    def rec(placed: frozenset, frontier, order, levels):
        budget[0] -= 1
        if budget[0] <= 0:
            return None
        remaining = all_v - placed
        if remaining == {vn}:
            step = place(d, frontier, vn, idx)
            if step is None or step[1]:
                return None
            return order + [vn], levels + [step[0]]
        key = (placed, frontier)
        if key in failed:
            return None
        cands = sorted({v for lab in frontier for v in idx[lab]} - placed - {vn})
        for w in cands:
            if not connected_subset(adj, remaining - {w}):
                continue
            step = place(d, frontier, w, idx)
            if step is None:
                continue
            level, new = step
            if level.q == 0:
                continue
            got = rec(placed | {w}, new, order + [w], levels + [level])
            if got is not None:
                return got
            if budget[0] <= 0:
                return None
        failed.add(key)
        return None

    return rec(frozenset([v1]), frontier, [v1], [first])


# ---------------------------------------------------------------- verification

@dataclass
class LevelingReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def conditions(self) -> dict[str, bool]:
        names = ["(1)", "(2)", "(3*)", "(4*)", "(5)", "(6*)"]
        return {c: not any(f.startswith(c) for f in self.failures) for c in names}


def verify_leveling(lv: Leveling, d: LinkDiagram) -> LevelingReport:
    """Recheck every leveling condition from scratch against the diagram."""
    rep = LevelingReport()
    n = d.n
    order = list(lv.order)
    if sorted(order) != list(range(n)) or len(lv.levels) != n:
        rep.failures.append("(1) vertices are not levelled one per line")
        return rep
    height = {v: k for k, v in enumerate(order)}
    oe = d.other_end()
    for k, (v, level) in enumerate(zip(order, lv.levels)):
        if level.vertex != v:
            rep.failures.append(f"(1) level {k + 1} records vertex {level.vertex}, order says {v}")
        down = up = 0
        for s in range(4):
            w = oe[(v, s)][0]
            if w == v:
                rep.failures.append(f"(2) loop edge at vertex {v}")
            elif height[w] < k:
                down += 1
            else:
                up += 1
        if (down, up) != (level.p, level.q):
            rep.failures.append(f"(2) level {k + 1} has {down} down / {up} up edges, recorded {level.p}/{level.q}")
    if rep.failures:
        return rep
    # (3*): replay the frontier
    first = lv.levels[0]
    if first.p != 0:
        rep.failures.append("(4*) first level is not of type T^q_0")
    if lv.levels[-1].q != 0:
        rep.failures.append("(4*) last level is not of type T^0_p")
    corner = first.up_slots[0] if first.up_slots else 0
    _, frontier = initial_frontier(d, order[0], corner)
    if tuple(first.up_slots) != tuple((corner - i) % 4 for i in range(4)):
        rep.failures.append("(3*) first level slots are not in rotation order")
    idx = _label_index(d)
    for k in range(1, n):
        level = lv.levels[k]
        step = place(d, frontier, order[k], idx)
        if step is None:
            rep.failures.append(f"(3*) level {k + 1}: pending edges of vertex {order[k]} are not a rotation-ordered block")
            break
        got, frontier = step
        if (got.position, got.down_slots, got.up_slots) != (level.position, level.down_slots, level.up_slots):
            rep.failures.append(f"(3*) level {k + 1}: recorded geometry differs from the replay")
    if frontier:
        rep.failures.append("(3*) frontier not empty after the last level")
    adj = adjacency(d)
    for k in range(1, n):
        if not connected_subset(adj, order[:k]):
            rep.failures.append(f"(5) part below line {k} is disconnected")
        if not connected_subset(adj, order[k:]):
            rep.failures.append(f"(5) part above line {k} is disconnected")
    for k in range(1, n - 1):
        level = lv.levels[k]
        if level.p == 0 or level.q == 0:
            rep.failures.append(f"(6*) interior level {k + 1} has type {level.type}")
    return rep
