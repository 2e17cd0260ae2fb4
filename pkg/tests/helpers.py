"""Diagram builders shared by several test modules."""

import itertools

from knotlevel.diagram import Crossing, DiagramError, LinkDiagram, check_diagram, cut_vertices


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Switch every crossing (over and under strands exchange)."""
    return LinkDiagram(tuple(Crossing(c.slots, (c.under_entry + 1) % 4) for c in d.crossings),
                       d.name, d.free_loops)


def add_kink(d: LinkDiagram, under: int = 0) -> LinkDiagram:
    """Put a one-crossing curl on edge 1."""
    top = d.edge_count
    a, b = top + 1, top + 2
    xs = [list(c.slots) for c in d.crossings]
    # edge 1 now runs: end0 -> a -> kink -> b -> end1, with the loop label top+3
    occ = [(i, s) for i, c in enumerate(xs) for s in range(4) if c[s] == 1]
    (i0, s0), (i1, s1) = occ
    xs[i0][s0], xs[i1][s1] = a, b
    loop = top + 3
    kink = Crossing((a, loop, loop, b), under)
    out = [Crossing(tuple(x), c.under_entry) for x, c in zip(xs, d.crossings)] + [kink]
    return LinkDiagram(tuple(out), d.name).relabeled()


def twisted_sum(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    """Join d1 and d2 along one edge each, the two joining strands crossing once.

    The extra crossing is nugatory: removing it disconnects the graph.
    """
    off = d1.edge_count
    xs = list(d1.crossings) + [Crossing(tuple(x + off for x in c.slots), c.under_entry) for c in d2.crossings]
    occ_a = [(i, s) for i, c in enumerate(xs) for s in range(4) if c.slots[s] == 1]
    occ_b = [(i, s) for i, c in enumerate(xs) for s in range(4) if c.slots[s] == 1 + off]
    top = 2 * off
    for swap, under in itertools.product((False, True), (0, 1)):
        ys = [list(c.slots) for c in xs]
        ends_b = occ_b[::-1] if swap else occ_b
        p1, p2, q1, q2 = top + 1, top + 2, top + 3, top + 4
        (i0, s0), (i1, s1) = occ_a
        (j0, t0), (j1, t1) = ends_b
        ys[i0][s0], ys[i1][s1], ys[j0][t0], ys[j1][t1] = p1, q1, p2, q2
        x = Crossing((p1, q1, p2, q2), under)
        d = LinkDiagram(tuple(Crossing(tuple(y), c.under_entry) for y, c in zip(ys, xs)) + (x,), "sum")
        try:
            check_diagram(d)
        except DiagramError:
            continue
        if cut_vertices(d):
            return d.relabeled()
    raise AssertionError("no planar wiring found")
