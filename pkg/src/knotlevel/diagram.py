"""Link diagrams as 4-valent plane graphs given by PD codes.

A crossing lists its four incident edge labels counterclockwise.  The strand
through slots ``under_entry`` and ``under_entry + 2`` passes under, the other
strand passes over.  In the plain ``X[a,b,c,d]`` text form the under-strand is
always the one through slots 0 and 2.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator


class DiagramError(ValueError):
    """Malformed or unusable diagram input."""


class TrivialDiagramError(DiagramError):
    """The diagram reduces to a crossingless unknot."""


@dataclass(frozen=True)
class Crossing:
    slots: tuple[int, int, int, int]
    under_entry: int = 0

    def __post_init__(self):
        if len(self.slots) != 4:
            raise DiagramError(f"crossing needs 4 slots, got {self.slots!r}")
        if self.under_entry not in (0, 1, 2, 3):
            raise DiagramError(f"under_entry must be in 0..3, got {self.under_entry}")

    def is_under_slot(self, s: int) -> bool:
        return (s - self.under_entry) % 2 == 0

    def rotated(self, k: int) -> "Crossing":
        """Same crossing with slot ``k`` listed first."""
        k %= 4
        return Crossing(self.slots[k:] + self.slots[:k], (self.under_entry - k) % 4)

    def normalized(self) -> "Crossing":
        return self.rotated(self.under_entry)


@dataclass(frozen=True)
class LinkDiagram:
    """A link diagram: crossings plus a count of crossingless unknotted circles.

    Diagrams produced by braid or grid conversion may contain components
    without crossings; those are carried in ``free_loops``.  A diagram with no
    crossings is the explicit marker for a trivial (unlinked unknots) diagram.
    """

    crossings: tuple[Crossing, ...]
    name: str | None = None
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if not self.crossings and self.free_loops < 1:
            raise DiagramError("a diagram without crossings needs at least one free loop")
        counts: dict[int, int] = defaultdict(int)
        for c in self.crossings:
            for lab in c.slots:
                counts[lab] += 1
        bad = sorted(lab for lab, k in counts.items() if k != 2)
        if bad:
            raise DiagramError(f"labels {bad} do not appear exactly twice")

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def is_trivial(self) -> bool:
        return not self.crossings

    def labels(self) -> list[int]:
        return sorted({lab for c in self.crossings for lab in c.slots})

    def occurrences(self) -> dict[int, list[tuple[int, int]]]:
        """Map each edge label to its two ``(crossing, slot)`` ends, in listing order."""
        occ: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for i, c in enumerate(self.crossings):
            for s, lab in enumerate(c.slots):
                occ[lab].append((i, s))
        return dict(occ)

    def other_end(self) -> dict[tuple[int, int], tuple[int, int]]:
        """Involution pairing the two ends of every edge."""
        out = {}
        for a, b in self.occurrences().values():
            out[a] = b
            out[b] = a
        return out

    def neighbors(self, v: int) -> list[int]:
        oe = self.other_end()
        return [oe[(v, s)][0] for s in range(4)]

    def relabeled(self) -> "LinkDiagram":
        """Renumber edge labels to 1..2n in order of first appearance."""
        mapping: dict[int, int] = {}
        for c in self.crossings:
            for lab in c.slots:
                if lab not in mapping:
                    mapping[lab] = len(mapping) + 1
        return LinkDiagram(
            tuple(Crossing(tuple(mapping[x] for x in c.slots), c.under_entry) for c in self.crossings),
            self.name,
            self.free_loops,
        )

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "crossings": [list(c.slots) for c in self.crossings],
            "under_entry": [c.under_entry for c in self.crossings],
            "free_loops": self.free_loops,
        }


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"X\s*\[\s*([^\]]*)\]")


def parse_pd(text: str, name: str | None = None) -> LinkDiagram:
    """Parse ``X[a,b,c,d] X[...]`` text (optionally prefixed by ``name:``)."""
    body = text.split("#", 1)[0].strip()
    m = re.match(r"^([^:\[\]]+):(.*)$", body)
    if m:
        name = name or m.group(1).strip()
        body = m.group(2)
    crossings = []
    pos = 0
    for tok in _TOKEN.finditer(body):
        gap = body[pos:tok.start()]
        if gap.strip(" ,\t\n"):
            raise DiagramError(f"unexpected text {gap.strip()!r}")
        pos = tok.end()
        parts = [p.strip() for p in tok.group(1).split(",")]
        if len(parts) != 4 or not all(p.isdigit() for p in parts):
            raise DiagramError(f"malformed token {tok.group(0)!r}")
        labels = tuple(int(p) for p in parts)
        if min(labels) < 1:
            raise DiagramError(f"labels must be positive in {tok.group(0)!r}")
        crossings.append(Crossing(labels))
    if body[pos:].strip(" ,\t\n"):
        raise DiagramError(f"unexpected text {body[pos:].strip()!r}")
    if not crossings:
        raise DiagramError("no crossings found")
    return check_diagram(LinkDiagram(tuple(crossings), name))


def parse_pd_json(data: dict | str) -> LinkDiagram:
    if isinstance(data, str):
        data = json.loads(data)
    rows = data["crossings"]
    under = data.get("under_entry") or [0] * len(rows)
    if len(under) != len(rows):
        raise DiagramError("under_entry length differs from crossing count")
    crossings = tuple(Crossing(tuple(int(x) for x in r), int(u)) for r, u in zip(rows, under))
    if not crossings:
        raise DiagramError("no crossings found")
    return check_diagram(LinkDiagram(crossings, data.get("name")))


def check_diagram(d: LinkDiagram) -> LinkDiagram:
    """Raise ``DiagramError`` unless ``d`` is a connected sphere diagram."""
    if not is_connected(d):
        raise DiagramError("diagram is disconnected")
    nfaces = len(trace_faces(d).faces)
    if d.n - d.edge_count + nfaces != 2:
        raise DiagramError(f"rotation system is not planar (V-E+F = {d.n - d.edge_count + nfaces})")
    return d


def serialize_pd(d: LinkDiagram) -> str:
    """Text form; crossings rotated so the under-strand sits in slots 0/2, sorted by first label."""
    xs = sorted((c.normalized() for c in d.crossings), key=lambda c: c.slots)
    body = " ".join("X[%s]" % ",".join(map(str, c.slots)) for c in xs)
    return f"{d.name}: {body}" if d.name else body


def read_diagrams(text: str) -> Iterator[LinkDiagram]:
    """Read a corpus: one diagram per line (text form or JSON), ``#`` comments."""
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip() if not raw.lstrip().startswith("{") else raw.strip()
        if not line:
            continue
        try:
            if line.startswith("{"):
                yield parse_pd_json(line)
            else:
                yield parse_pd(line)
        except DiagramError as exc:
            raise DiagramError(f"line {lineno}: {exc}") from exc


# ---------------------------------------------------------------- faces

@dataclass(frozen=True)
class FaceSet:
    """Faces as cyclic lists of corners; corner ``(c, s)`` is the angle from slot s to s+1."""

    faces: tuple[tuple[tuple[int, int], ...], ...]
    outer_face_index: int

    def sizes(self) -> list[int]:
        return [len(f) for f in self.faces]

    def face_of(self) -> dict[tuple[int, int], int]:
        return {corner: i for i, f in enumerate(self.faces) for corner in f}


def trace_faces(d: LinkDiagram) -> FaceSet:
    oe = d.other_end()
    seen: set[tuple[int, int]] = set()
    faces = []
    for c in range(d.n):
        for s in range(4):
            if (c, s) in seen:
                continue
            face = []
            cur = (c, s)
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                cur = oe[(cur[0], (cur[1] + 1) % 4)]
            if cur != (c, s):
                raise DiagramError("inconsistent rotation system")
            faces.append(tuple(face))
    outer = default_outer_face(faces)
    return FaceSet(tuple(faces), outer)


def default_outer_face(faces) -> int:
    if not faces:
        return 0
    return min(range(len(faces)), key=lambda i: (-len(faces[i]), min(faces[i])))


# ---------------------------------------------------------------- components

@dataclass(frozen=True)
class Components:
    count: int
    component_of: dict[int, int]
    # edge label -> ((tail crossing, tail slot), (head crossing, head slot))
    direction: dict[int, tuple[tuple[int, int], tuple[int, int]]]

    def is_incoming(self, c: int, s: int, d: LinkDiagram) -> bool:
        return self.direction[d.crossings[c].slots[s]][1] == (c, s)

    def reversed(self) -> "Components":
        return Components(self.count, self.component_of,
                          {e: (h, t) for e, (t, h) in self.direction.items()})


def trace_components(d: LinkDiagram) -> Components:
    """Follow strands (slot i continues to slot i+2) and orient each component.

    Each component is directed so that its lowest edge label leaves the
    crossing where that label is listed first.
    """
    occ = d.occurrences()
    oe = d.other_end()
    comp: dict[int, int] = {}
    direction = {}
    for lab in sorted(occ):
        if lab in comp:
            continue
        cid = len(set(comp.values()))
        tail = occ[lab][0]
        while True:
            head = oe[tail]
            e = d.crossings[tail[0]].slots[tail[1]]
            if e in comp:
                break
            comp[e] = cid
            direction[e] = (tail, head)
            tail = (head[0], (head[1] + 2) % 4)
    return Components(len(set(comp.values())) + d.free_loops, comp, direction)


# ---------------------------------------------------------------- graph checks

def adjacency(d: LinkDiagram) -> dict[int, list[int]]:
    oe = d.other_end()
    adj: dict[int, list[int]] = {v: [] for v in range(d.n)}
    for (c, s), (c2, _) in oe.items():
        adj[c].append(c2)
    return adj


def connected_subset(adj: dict[int, list[int]], vertices: Iterable[int]) -> bool:
    vs = set(vertices)
    if not vs:
        return True
    start = next(iter(vs))
    stack, seen = [start], {start}
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def is_connected(d: LinkDiagram) -> bool:
    if d.free_loops and d.crossings:
        return False
    return connected_subset(adjacency(d), range(d.n))


def loop_vertices(d: LinkDiagram) -> list[int]:
    return sorted({i for i, c in enumerate(d.crossings) if len(set(c.slots)) < 4})


def cut_vertices(d: LinkDiagram) -> list[int]:
    """Articulation points via DFS low-link; loops and parallel edges are harmless."""
    adj = adjacency(d)
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts: set[int] = set()
    for root in range(d.n):
        if root in disc:
            continue
        disc[root] = low[root] = 0
        counter = 1
        root_children = 0
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == v:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                # a parallel edge back to the parent also counts as a back edge
                if adj[v].count(parent) > 1:
                    low[v] = min(low[v], disc[parent])
                low[parent] = min(low[parent], low[v])
                if parent == root:
                    root_children += 1
                elif low[v] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts)


@dataclass(frozen=True)
class ValidationReport:
    is_connected: bool
    has_loop: bool
    loop_vertices: list[int]
    cut_vertices: list[int]
    is_four_valent: bool
    euler_ok: bool

    @property
    def eligible(self) -> bool:
        return self.is_connected and not self.has_loop and not self.cut_vertices

    def to_json(self) -> dict:
        return {
            "is_connected": self.is_connected,
            "has_loop": self.has_loop,
            "loop_vertices": self.loop_vertices,
            "cut_vertices": self.cut_vertices,
            "is_four_valent": self.is_four_valent,
            "euler_ok": self.euler_ok,
            "eligible": self.eligible,
        }


def validate(d: LinkDiagram) -> ValidationReport:
    loops = loop_vertices(d)
    try:
        f = len(trace_faces(d).faces)
        euler = d.n - d.edge_count + f == 2
    except DiagramError:
        euler = False
    return ValidationReport(
        is_connected=is_connected(d),
        has_loop=bool(loops),
        loop_vertices=loops,
        cut_vertices=cut_vertices(d),
        is_four_valent=all(len(c.slots) == 4 for c in d.crossings),
        euler_ok=euler,
    )


# ---------------------------------------------------------------- nugatory removal

def _merge_labels(crossings: list[Crossing], pairs: list[tuple[int, int]]) -> list[Crossing]:
    parent: dict[int, int] = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return [Crossing(tuple(find(x) for x in c.slots), c.under_entry) for c in crossings]


def _flip(c: Crossing) -> Crossing:
    """Rotate a crossing half a turn about an in-plane axis: mirror the order, swap layers."""
    s = c.slots
    return Crossing((s[0], s[3], s[2], s[1]), (1 - c.under_entry) % 4)


def _side(d: LinkDiagram, v: int, start: int) -> set[int]:
    adj = adjacency(d)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y != v and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _remove_one(d: LinkDiagram) -> LinkDiagram | None:
    """Untwist one kink or nugatory crossing; ``None`` if there is none."""
    xs = list(d.crossings)
    for v, c in enumerate(xs):
        s = c.slots
        for i in range(4):
            if s[i] == s[(i + 1) % 4]:
                p, q = s[(i + 2) % 4], s[(i + 3) % 4]
                rest = xs[:v] + xs[v + 1:]
                if p == q:
                    # figure-eight curl: the whole component had just this crossing
                    return _rebuild(d, rest, [], extra_loops=1)
                return _rebuild(d, rest, [(p, q)])
    oe = d.other_end()
    for v in cut_vertices(d):
        ends = [oe[(v, s)][0] for s in range(4)]
        side = _side(d, v, ends[0])
        inside = [s for s in range(4) if ends[s] in side]
        if len(inside) != 2:
            raise DiagramError(f"crossing {v} is a cut vertex with an unbalanced split")
        a, b = inside
        if (b - a) % 4 == 2:
            raise DiagramError(f"crossing {v}: interleaved split, diagram not planar")
        flipped = [(_flip(x) if j in side else x) for j, x in enumerate(xs)]
        rest = flipped[:v] + flipped[v + 1:]
        s = xs[v].slots
        return _rebuild(d, rest, [(s[0], s[2]), (s[1], s[3])])
    return None


def _rebuild(d: LinkDiagram, rest, pairs, extra_loops: int = 0) -> LinkDiagram:
    loops = d.free_loops + extra_loops
    if not rest:
        # the crossing's two strands closed up into one or two circles
        return LinkDiagram((), d.name, max(loops, 1))
    merged = _merge_labels(rest, pairs)
    return LinkDiagram(tuple(merged), d.name, loops).relabeled()


def reduce_nugatory(d: LinkDiagram) -> LinkDiagram:
    """Untwist kinks and nugatory crossings until the graph is loop- and cut-vertex-free.

    Raises ``TrivialDiagramError`` when nothing is left.
    """
    cur = d
    while cur.crossings:
        nxt = _remove_one(cur)
        if nxt is None:
            return cur
        cur = nxt
    raise TrivialDiagramError(f"{d.name or 'diagram'} reduces to a crossingless diagram")
