"""Axis-parallel closed curves on the integer lattice, and their PD codes.

Curves are unions of horizontal and vertical segments meeting at corners.
Two segments cross where a horizontal's interior meets a vertical's interior.
Directions around a crossing are numbered counterclockwise from east, which
makes them directly usable as PD slots.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .diagram import Crossing, DiagramError, LinkDiagram

E, N, W, S = 0, 1, 2, 3


@dataclass(frozen=True)
class Seg:
    x1: int
    y1: int
    x2: int
    y2: int

    def __post_init__(self):
        if (self.x1 != self.x2) == (self.y1 != self.y2):
            raise DiagramError(f"segment {self} is not axis-parallel")

    @property
    def horizontal(self) -> bool:
        return self.y1 == self.y2

    @property
    def ends(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.x1, self.y1), (self.x2, self.y2)


@dataclass(frozen=True)
class CurveEvent:
    crossing: int
    segment: int
    heading: int


@dataclass
class CurvePD:
    diagram: LinkDiagram
    points: list[tuple[int, int]]
    # crossing -> (horizontal segment, vertical segment)
    pairs: list[tuple[int, int]]
    # per component, the cyclic list of crossing passages in travel order
    components: list[list[CurveEvent]]
    # per component, the segments in travel order with their heading
    walks: list[list[tuple[int, int]]]
    # edge label -> (crossing, slot) it leaves from
    tails: dict[int, tuple[int, int]] = field(default_factory=dict)
    # segment -> edge label at the start of its travel
    seg_labels: dict[int, int] = field(default_factory=dict)

    def outer_corner(self, segs: Sequence[Seg]) -> tuple[int, int] | None:
        """A face corner of the unbounded region, or ``None`` without crossings.

        The region just above a topmost horizontal is unbounded; no vertical
        can cross such a horizontal, so it lies on a single edge.
        """
        if not self.diagram.crossings:
            return None
        top = max((i for i, sg in enumerate(segs) if sg.horizontal), key=lambda i: segs[i].y1)
        head = next(h for walk in self.walks for sg, h in walk if sg == top)
        c, t = self.tails[self.seg_labels[top]]
        # the corner from slot t to t+1 is on the left of travel
        return (c, t) if head == E else (c, (t - 1) % 4)


def _heading(seg: Seg, forward: bool) -> int:
    if seg.horizontal:
        right = (seg.x2 > seg.x1) == forward
        return E if right else W
    up = (seg.y2 > seg.y1) == forward
    return N if up else S


def find_crossings(segs: Sequence[Seg]) -> list[tuple[int, int, tuple[int, int]]]:
    hs = [i for i, s in enumerate(segs) if s.horizontal]
    vs = [i for i, s in enumerate(segs) if not s.horizontal]
    out = []
    for i in hs:
        h = segs[i]
        xl, xr = sorted((h.x1, h.x2))
        for j in vs:
            v = segs[j]
            yb, yt = sorted((v.y1, v.y2))
            if xl < v.x1 < xr and yb < h.y1 < yt:
                out.append((i, j, (v.x1, h.y1)))
    out.sort(key=lambda t: (t[2][1], t[2][0]))
    return out


def curves_to_pd(segs: Sequence[Seg], h_over: Callable[[int, int], bool], name: str | None = None) -> CurvePD:
    """Trace closed curves and emit a PD code.

    ``h_over(h, v)`` decides whether horizontal segment ``h`` passes over
    vertical segment ``v`` at their crossing.
    """
    at: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
    for i, s in enumerate(segs):
        for k, p in enumerate(s.ends):
            at[p].append((i, k))
    for p, lst in at.items():
        if len(lst) != 2:
            raise DiagramError(f"corner {p} is shared by {len(lst)} segment ends")
    cross = find_crossings(segs)
    on_seg: dict[int, list[tuple[int, tuple[int, int]]]] = defaultdict(list)
    for k, (i, j, p) in enumerate(cross):
        on_seg[i].append((k, p))
        on_seg[j].append((k, p))

    visited: set[int] = set()
    components: list[list[CurveEvent]] = []
    walks: list[list[tuple[int, int]]] = []
    for start in range(len(segs)):
        if start in visited:
            continue
        events: list[CurveEvent] = []
        walk = []
        seg, forward = start, True
        while seg not in visited:
            visited.add(seg)
            s = segs[seg]
            head = _heading(s, forward)
            walk.append((seg, head))
            origin = s.ends[0] if forward else s.ends[1]
            pts = sorted(on_seg[seg], key=lambda kp: abs(kp[1][0] - origin[0]) + abs(kp[1][1] - origin[1]))
            events.extend(CurveEvent(k, seg, head) for k, _ in pts)
            end_k = 1 if forward else 0
            point = s.ends[end_k]
            (a, ka), (b, kb) = at[point]
            nxt, nk = (b, kb) if (a, ka) == (seg, end_k) else (a, ka)
            seg, forward = nxt, nk == 0
        if seg != start:
            raise DiagramError("segments do not form closed curves")
        components.append(events)
        walks.append(walk)

    slots: list[list[int | None]] = [[None] * 4 for _ in cross]
    tails: dict[int, tuple[int, int]] = {}
    seg_labels: dict[int, int] = {}
    label = 0
    free = 0
    for events, walk in zip(components, walks):
        if not events:
            free += 1
            continue
        base = label
        m = len(events)
        for t, ev in enumerate(events):
            incoming = base + (t - 1) % m + 1
            outgoing = base + t + 1
            slots[ev.crossing][(ev.heading + 2) % 4] = incoming
            slots[ev.crossing][ev.heading] = outgoing
            tails[outgoing] = (ev.crossing, ev.heading)
        current, t = base + m, 0
        for seg, _ in walk:
            seg_labels[seg] = current
            while t < m and events[t].segment == seg:
                current = base + t + 1
                t += 1
        label += m
    crossings = []
    for k, (i, j, _) in enumerate(cross):
        under = N if h_over(i, j) else E
        crossings.append(Crossing(tuple(slots[k]), under))
    diagram = LinkDiagram(tuple(crossings), name, free)
    return CurvePD(diagram, [p for _, _, p in cross], [(i, j) for i, j, _ in cross], components, walks,
                   tails, seg_labels)
