"""Arc presentations from rectilinear diagrams.

Shrinking every vertical to a point on the binding axis turns each horizontal
into an arc between two binding indices.  Horizontals lying under their
vertical keep their place below the axis; those lying over are flipped round
the axis and stacked behind, in reverse.  The resulting page order doubles as
the row order of a grid diagram whose verticals always cross over.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import LinkDiagram
from .geometry import Seg, curves_to_pd
from .rectilinear import RectDiagram


class ArcError(ValueError):
    pass


@dataclass(frozen=True)
class ArcPresentation:
    # (lo, hi) binding indices, front page first
    arcs: tuple[tuple[int, int], ...]

    @property
    def binding_count(self) -> int:
        return max((hi for _, hi in self.arcs), default=0)

    def __str__(self) -> str:
        return "arcs: " + " ".join(f"({a},{b})" for a, b in self.arcs)

    @classmethod
    def parse(cls, text: str) -> "ArcPresentation":
        pairs = re.findall(r"\((\d+)\s*,\s*(\d+)\)", text)
        return cls(tuple(tuple(sorted((int(a), int(b)))) for a, b in pairs))

    def to_json(self) -> list[list[int]]:
        return [list(a) for a in self.arcs]

    def problems(self) -> list[str]:
        out = []
        m = len(self.arcs)
        if self.binding_count != m:
            out.append(f"binding count {self.binding_count} differs from arc count {m}")
        uses: dict[int, int] = {}
        for lo, hi in self.arcs:
            if lo == hi:
                out.append(f"arc ({lo},{hi}) has equal endpoints")
            if lo > hi:
                out.append(f"arc ({lo},{hi}) is not listed low end first")
            for b in (lo, hi):
                uses[b] = uses.get(b, 0) + 1
        for b in range(1, m + 1):
            if uses.get(b, 0) != 2:
                out.append(f"binding index {b} is used by {uses.get(b, 0)} arcs")
        extra = sorted(set(uses) - set(range(1, m + 1)))
        if extra:
            out.append(f"binding indices out of range: {extra}")
        return out

    def cycles(self) -> list[list[int]]:
        """Arc indices grouped into closed loops through shared binding indices."""
        at: dict[int, list[int]] = {}
        for i, (lo, hi) in enumerate(self.arcs):
            at.setdefault(lo, []).append(i)
            at.setdefault(hi, []).append(i)
        seen: set[int] = set()
        out = []
        for start in range(len(self.arcs)):
            if start in seen:
                continue
            loop = []
            i, b = start, self.arcs[start][0]
            while i not in seen:
                seen.add(i)
                loop.append(i)
                lo, hi = self.arcs[i]
                b = hi if b == lo else lo
                i = next((k for k in at[b] if k != i), i)
            out.append(loop)
        return out

    def grid(self) -> tuple[list[int], list[int]]:
        """Column of the X and of the O in each row (front page = bottom row), 1-based.

        Rows are travelled from O to X and columns from X to O, so every column
        also holds exactly one X and one O.
        """
        xs = [0] * len(self.arcs)
        os_ = [0] * len(self.arcs)
        for loop in self.cycles():
            b = self.arcs[loop[0]][0]
            for i in loop:
                lo, hi = self.arcs[i]
                os_[i] = b
                b = hi if b == lo else lo
                xs[i] = b
        return xs, os_


def to_arc(r: RectDiagram) -> ArcPresentation:
    over = {c.h: c.h_over for c in r.crossings}
    below = [k for k in range(len(r.horizontals)) if not over.get(k, False)]
    above = [k for k in range(len(r.horizontals)) if over.get(k, False)]
    order = below + above[::-1]
    return ArcPresentation(tuple((r.horizontals[k].x1, r.horizontals[k].x2) for k in order))


def arc_to_pd(a: ArcPresentation, name: str | None = None) -> LinkDiagram:
    """Grid diagram of the presentation, verticals over horizontals."""
    bad = a.problems()
    if bad:
        raise ArcError("; ".join(bad))
    rows: dict[int, list[int]] = {}
    segs = []
    for i, (lo, hi) in enumerate(a.arcs):
        segs.append(Seg(lo, i + 1, hi, i + 1))
        rows.setdefault(lo, []).append(i + 1)
        rows.setdefault(hi, []).append(i + 1)
    for b in range(1, a.binding_count + 1):
        y1, y2 = sorted(rows[b])
        segs.append(Seg(b, y1, b, y2))
    return curves_to_pd(segs, lambda h, v: False, name).diagram
