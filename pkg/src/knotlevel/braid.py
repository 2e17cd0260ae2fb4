"""Braid words read off a rectilinear diagram.

Horizontals are oriented by the link's component directions.  Every
left-directed horizontal is replaced by two rays running to the far left and
far right; after that every strand travels rightward, so a left-to-right sweep
over the verticals reads a braid whose closure is the link.  Rays pass under
every vertical when their horizontal passed under its own vertical, over
otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Components, Crossing, DiagramError, LinkDiagram, trace_components
from .geometry import E, W
from .rectilinear import RectDiagram, rect_to_curves

RIGHT, LEFT = 1, -1


@dataclass(frozen=True)
class BraidWord:
    strings: int
    word: tuple[int, ...]

    def __post_init__(self):
        if self.strings < 1:
            raise ValueError("a braid needs at least one string")
        for g in self.word:
            if g == 0 or abs(g) >= self.strings:
                raise ValueError(f"generator {g} is out of range for {self.strings} strings")

    def __str__(self) -> str:
        return f"braid s={self.strings} word={','.join(map(str, self.word))}"

    def to_json(self) -> dict:
        return {"strings": self.strings, "word": list(self.word)}

    @classmethod
    def from_json(cls, data: dict) -> "BraidWord":
        return cls(int(data["strings"]), tuple(int(g) for g in data["word"]))

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        fields = dict(part.split("=", 1) for part in text.split()[1:])
        word = tuple(int(g) for g in fields.get("word", "").split(",") if g)
        return cls(int(fields["s"]), word)

    def permutation(self) -> list[int]:
        """Final position of the strand starting at each position (0-based)."""
        at = list(range(self.strings))  # position -> strand
        for g in self.word:
            i = abs(g) - 1
            at[i], at[i + 1] = at[i + 1], at[i]
        out = [0] * self.strings
        for pos, strand in enumerate(at):
            out[strand] = pos
        return out

    def cycle_count(self) -> int:
        perm = self.permutation()
        seen = set()
        cycles = 0
        for i in range(self.strings):
            if i in seen:
                continue
            cycles += 1
            while i not in seen:
                seen.add(i)
                i = perm[i]
        return cycles


def horizontal_headings(r: RectDiagram, d: LinkDiagram | None = None,
                        comps: Components | None = None) -> list[int]:
    """RIGHT or LEFT for each horizontal.

    With a source diagram the directions are transported from its components
    through the crossing records; otherwise the curve tracing order is used.
    """
    cp = rect_to_curves(r)
    nh = len(r.horizontals)
    heading: dict[int, int] = {}
    if d is not None:
        comps = comps or trace_components(d)
    by_h = {c.h: c for c in r.crossings}
    for walk in cp.walks:
        flip = False
        if d is not None:
            for seg, head in walk:
                if seg in by_h:
                    c = by_h[seg]
                    # entering from the east means travelling west
                    want = W if comps.is_incoming(c.vertex, c.slots[E], d) else E
                    flip = want != head
                    break
        for seg, head in walk:
            if seg < nh:
                h = RIGHT if head == E else LEFT
                heading[seg] = -h if flip else h
    return [heading[i] for i in range(nh)]


def to_braid(r: RectDiagram, d: LinkDiagram | None = None, comps: Components | None = None) -> BraidWord:
    heads = horizontal_headings(r, d, comps)
    if heads.count(LEFT) > heads.count(RIGHT):
        r = r.rotated()
        heads = [-h for h in reversed(heads)]
    s = heads.count(LEFT)
    if s == 0:
        raise RuntimeError("no left-directed horizontal; the curves cannot be closed")
    hs = r.horizontals
    over_of = {c.h: c.h_over for c in r.crossings}

    def ray_over(hi: int) -> bool:
        return over_of.get(hi, True)

    # active strands as (y, key); key = (kind, horizontal), kind in h/L/R
    active = sorted((hs[i].y, ("L", i)) for i in range(len(hs)) if heads[i] == LEFT)
    start_order = [k[1] for _, k in active]
    word: list[int] = []
    for v in r.verticals:
        j = v.x
        pieces = []
        for y in (v.y1, v.y2):
            hi = next(i for i, h in enumerate(hs) if h.y == y and j in (h.x1, h.x2))
            h = hs[hi]
            at_left_end = j == h.x1
            if heads[hi] == RIGHT:
                key, incoming = ("h", hi), not at_left_end
            else:
                key, incoming = ("L", hi) if at_left_end else ("R", hi), at_left_end
            pieces.append((y, key, incoming))
        if pieces[0][2] == pieces[1][2]:
            raise RuntimeError(f"vertical at x={j} does not join an incoming to an outgoing strand")
        (y_in, k_in, _), (y_out, k_out, _) = sorted(pieces, key=lambda p: not p[2])
        t = active.index((y_in, k_in))
        lo, hi_y = sorted((y_in, y_out))
        passed = [(y, key) for y, key in active if lo < y < hi_y]
        if y_out < y_in:
            passed.reverse()
        for _, (kind, idx) in passed:
            # the passed strand is over the vertical when its horizontal (or ray) is
            vertical_over = not (over_of[idx] if kind == "h" else ray_over(idx))
            if y_out > y_in:
                word.append(t + 1 if vertical_over else -(t + 1))
                t += 1
            else:
                word.append(-t if vertical_over else t)
                t -= 1
        active.remove((y_in, k_in))
        active.append((y_out, k_out))
        active.sort()
    if [k for _, k in active] != [("R", i) for i in start_order]:
        raise RuntimeError("sweep did not end on the right rays in their starting order")
    return BraidWord(s, tuple(word))


def braid_to_pd(b: BraidWord, name: str | None = None) -> LinkDiagram:
    """PD code of the standard closure; a word with no letters gives crossing-free loops."""
    if not b.word:
        return LinkDiagram((), name, b.strings)
    next_label = b.strings + 1
    pos = list(range(1, b.strings + 1))  # current label at each position
    raw = []
    for g in b.word:
        i = abs(g) - 1
        a, c = pos[i], pos[i + 1]
        lo, hi = next_label, next_label + 1
        next_label += 2
        # counterclockwise from the lower-left: SW, SE, NE, NW
        raw.append(((a, lo, hi, c), 1 if g > 0 else 0))
        pos[i], pos[i + 1] = lo, hi
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for start, end in zip(range(1, b.strings + 1), pos):
        parent[find(end)] = find(start)
    free = sum(1 for p, lab in enumerate(pos) if lab == p + 1)
    canon: dict[int, int] = {}
    crossings = []
    for slots, u in raw:
        mapped = []
        for lab in slots:
            root = find(lab)
            if root not in canon:
                canon[root] = len(canon) + 1
            mapped.append(canon[root])
        crossings.append(Crossing(tuple(mapped), u))
    try:
        return LinkDiagram(tuple(crossings), name, free)
    except DiagramError as exc:  # pragma: no cover - construction always pairs labels
        raise RuntimeError(f"closure produced an invalid diagram: {exc}") from exc
