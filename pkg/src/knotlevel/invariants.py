"""Kauffman bracket and the writhe-normalized f-polynomial.

Two independent evaluators are provided: a brute-force state sum over all
``2**n`` smoothings, and a sweep that adds crossings one at a time while
tracking how the open edge ends are paired (a Temperley-Lieb style transfer
over planar matchings).  Normalization: a single crossingless circle has
bracket 1, each further disjoint circle multiplies by ``-A^2 - A^-2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .diagram import Components, LinkDiagram, trace_components
from .poly import DELTA, LaurentPoly

NAIVE_CAP = 16
WIDTH_CAP = 24


class EvaluatorRangeError(RuntimeError):
    """Diagram is outside the configured size/width cap of an evaluator."""


def smoothing_pairs(d: LinkDiagram, i: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Edge-label pairs joined by the A- and the B-smoothing at crossing ``i``.

    The A-smoothing opens a channel between the two regions swept when the
    over-strand is turned counterclockwise.
    """
    c = d.crossings[i]
    u = c.under_entry
    s = c.slots
    a = [(s[u], s[(u + 1) % 4]), (s[(u + 2) % 4], s[(u + 3) % 4])]
    b = [(s[(u + 1) % 4], s[(u + 2) % 4]), (s[(u + 3) % 4], s[u])]
    return a, b


def _count_loops(labels: Sequence[int], pairs: Sequence[tuple[int, int]]) -> int:
    parent = {x: x for x in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = len(parent)
    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return comps


def _trivial_bracket(loops: int) -> LaurentPoly:
    return DELTA ** (loops - 1)


def bracket_naive(d: LinkDiagram, cap: int = NAIVE_CAP) -> LaurentPoly:
    if d.n > cap:
        raise EvaluatorRangeError(f"{d.n} crossings exceeds the state-sum cap {cap}")
    if not d.crossings:
        return _trivial_bracket(d.free_loops)
    labels = d.labels()
    options = [smoothing_pairs(d, i) for i in range(d.n)]
    terms: dict[tuple[int, int], int] = {}
    for state in range(1 << d.n):
        pairs = []
        a_count = 0
        for i, (pa, pb) in enumerate(options):
            if state >> i & 1:
                pairs.extend(pb)
            else:
                pairs.extend(pa)
                a_count += 1
        loops = _count_loops(labels, pairs) + d.free_loops
        key = (a_count - (d.n - a_count), loops)
        terms[key] = terms.get(key, 0) + 1
    total = LaurentPoly()
    powers: dict[int, LaurentPoly] = {}
    for (shift, loops), mult in terms.items():
        if loops not in powers:
            powers[loops] = DELTA ** (loops - 1)
        total = total + powers[loops].shift(shift) * mult
    return total


# ---------------------------------------------------------------- sweep evaluator

@dataclass(frozen=True)
class PlanarMatching:
    """Pairing of the open edge ends on the current sweep boundary."""

    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_map(cls, partner: dict[int, int]) -> "PlanarMatching":
        return cls(tuple(sorted((a, b) for a, b in partner.items() if a < b)))

    def is_noncrossing(self, order: Sequence[int]) -> bool:
        pos = {x: i for i, x in enumerate(order)}
        spans = sorted(tuple(sorted((pos[a], pos[b]))) for a, b in self.pairs)
        stack: list[int] = []
        for lo, hi in sorted(spans):
            while stack and stack[-1] < lo:
                stack.pop()
            if stack and hi > stack[-1]:
                return False
            stack.append(hi)
        return True


def _join(partner: dict[int, int], x: int, y: int) -> int:
    """Add a path piece between edge ends ``x`` and ``y``; returns closed loops (0 or 1)."""
    if x == y:
        return 1
    px = partner.get(x)
    if px is not None and px == y:
        del partner[x], partner[y]
        return 1
    if px is not None:
        del partner[x], partner[px]
        ex = px
    else:
        ex = x
    py = partner.get(y)
    if py is not None:
        del partner[y], partner[py]
        ey = py
    else:
        ey = y
    partner[ex] = ey
    partner[ey] = ex
    return 0


def sweep_order(d: LinkDiagram) -> list[int]:
    """Greedy crossing order keeping the number of open edge ends small."""
    if not d.crossings:
        return []
    occ = d.occurrences()
    best: tuple[int, list[int]] | None = None
    starts = sorted(range(d.n), key=lambda v: v)[: min(d.n, 8)]
    for start in starts:
        done: set[int] = set()
        open_count: dict[int, int] = {}
        order = []
        width = 0
        cur = start
        while True:
            order.append(cur)
            done.add(cur)
            for lab in d.crossings[cur].slots:
                open_count[lab] = open_count.get(lab, 0) + 1
            open_now = sum(1 for v in open_count.values() if v == 1)
            width = max(width, open_now)
            if len(done) == d.n:
                break
            frontier_labels = [lab for lab, k in open_count.items() if k == 1]
            cands = {c for lab in frontier_labels for c, _ in occ[lab] if c not in done}
            if not cands:
                cands = set(range(d.n)) - done

            def score(v):
                slots = d.crossings[v].slots
                closes = sum(1 for lab in slots if open_count.get(lab, 0) == 1)
                inner = sum(1 for lab in set(slots) if slots.count(lab) == 2)
                return (4 - 2 * closes - 2 * inner, -closes, v)

            cur = min(cands, key=score)
        if best is None or width < best[0]:
            best = (width, order)
    return best[1]


def max_width(d: LinkDiagram, order: Sequence[int]) -> int:
    open_count: dict[int, int] = {}
    width = 0
    for v in order:
        for lab in d.crossings[v].slots:
            open_count[lab] = open_count.get(lab, 0) + 1
        width = max(width, sum(1 for k in open_count.values() if k == 1))
    return width


def bracket_sweep(d: LinkDiagram, order: Sequence[int] | None = None, cap: int = WIDTH_CAP) -> LaurentPoly:
    if not d.crossings:
        return _trivial_bracket(d.free_loops)
    if order is None:
        order = sweep_order(d)
    if sorted(order) != list(range(d.n)):
        raise ValueError("sweep order must be a permutation of the crossings")
    w = max_width(d, order)
    if w > cap:
        raise EvaluatorRangeError(f"sweep width {w} exceeds cap {cap}")
    delta = DELTA.terms
    # state: matching (sorted pair tuple) -> {exponent: coefficient}
    states: dict[tuple, dict[int, int]] = {(): {0: 1}}
    for v in order:
        a_pairs, b_pairs = smoothing_pairs(d, v)
        nxt: dict[tuple, dict[int, int]] = {}
        for key, coeff in states.items():
            for pairs, shift in ((a_pairs, 1), (b_pairs, -1)):
                partner = {}
                for a, b in key:
                    partner[a] = b
                    partner[b] = a
                loops = 0
                for x, y in pairs:
                    loops += _join(partner, x, y)
                poly = {e + shift: c for e, c in coeff.items()}
                for _ in range(loops):
                    out: dict[int, int] = {}
                    for e, c in poly.items():
                        for de, dc in delta.items():
                            out[e + de] = out.get(e + de, 0) + c * dc
                    poly = out
                nkey = tuple(sorted((a, b) for a, b in partner.items() if a < b))
                acc = nxt.setdefault(nkey, {})
                for e, c in poly.items():
                    acc[e] = acc.get(e, 0) + c
        states = {}
        for k, p in nxt.items():
            p = {e: c for e, c in p.items() if c}
            if p:
                states[k] = p
    total = LaurentPoly(states.get((), {}))
    # every state closed at least one loop; the bracket counts loops minus one
    return total.divide_exact(DELTA) * _trivial_bracket(d.free_loops + 1)


# ---------------------------------------------------------------- normalization

def crossing_sign(d: LinkDiagram, i: int, comps: Components) -> int:
    c = d.crossings[i]
    u = c.under_entry
    under_in = u if comps.is_incoming(i, u, d) else (u + 2) % 4
    over_in = (u + 1) % 4 if comps.is_incoming(i, (u + 1) % 4, d) else (u + 3) % 4
    # over-strand entering just clockwise of the under entry is a positive crossing
    return 1 if over_in == (under_in - 1) % 4 else -1


def writhe(d: LinkDiagram, comps: Components | None = None) -> int:
    comps = comps or trace_components(d)
    return sum(crossing_sign(d, i, comps) for i in range(d.n))


def bracket(d: LinkDiagram) -> LaurentPoly:
    """Sweep evaluator when within its width cap, state sum otherwise."""
    try:
        return bracket_sweep(d)
    except EvaluatorRangeError:
        return bracket_naive(d)


def self_writhe(d: LinkDiagram, comps: Components | None = None) -> int:
    """Writhe over crossings whose two strands lie on the same component.

    Reversing a component flips both strands at each of its self-crossings,
    so this does not depend on the chosen orientations.
    """
    comps = comps or trace_components(d)
    total = 0
    for i, c in enumerate(d.crossings):
        if comps.component_of[c.slots[0]] == comps.component_of[c.slots[1]]:
            total += crossing_sign(d, i, comps)
    return total


def f_poly(d: LinkDiagram) -> LaurentPoly:
    """Bracket normalized by the self-writhe: an invariant of unoriented links.

    For knots this is the usual ``(-A^3)^-w <D>``.
    """
    w = self_writhe(d)
    factor = LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1)
    return factor * bracket(d)


class Verdict(str, Enum):
    CONSISTENT = "consistent"
    DISTINGUISHED = "distinguished"
    UNCHECKED = "unchecked"


def same_link(d1: LinkDiagram, d2: LinkDiagram) -> Verdict:
    """Sound distinguisher: component count and f-polynomial must agree."""
    if trace_components(d1).count != trace_components(d2).count:
        return Verdict.DISTINGUISHED
    try:
        p1, p2 = f_poly(d1), f_poly(d2)
    except EvaluatorRangeError:
        return Verdict.UNCHECKED
    return Verdict.CONSISTENT if p1 == p2 else Verdict.DISTINGUISHED
