import dataclasses

import pytest

from conftest import corpus
from knotlevel.diagram import trace_components
from knotlevel.geometry import Seg, curves_to_pd
from knotlevel.invariants import f_poly
from knotlevel.leveling import compute_leveling
from knotlevel.rectilinear import HSeg, rect_to_pd, to_rectilinear, verify_rectilinear


def rect(d):
    return to_rectilinear(compute_leveling(d), d)


def test_trefoil_counts(trefoil):
    r = rect(trefoil)
    assert len(r.horizontals) == len(r.verticals) == 5
    assert r.n == 3
    assert [h.y for h in r.horizontals] == [1, 2, 3, 4, 5]
    assert [v.x for v in r.verticals] == [1, 2, 3, 4, 5]


def test_corpus_verifies_both_ways():
    for d in corpus():
        r = rect(d)
        assert verify_rectilinear(r, d).ok, d.name
        assert verify_rectilinear(r.rotated(), d).ok, d.name


def test_rotation_is_an_involution():
    for d in corpus()[:40]:
        r = rect(d)
        assert r.rotated().rotated() == r


def test_rotation_keeps_f_poly():
    for d in corpus()[:40]:
        r = rect(d)
        assert f_poly(rect_to_pd(r.rotated())) == f_poly(rect_to_pd(r)) == f_poly(d)


def test_extreme_horizontals_cross_nothing():
    for d in corpus()[:40]:
        r = rect(d)
        assert r.horizontals[0].crossing is None
        assert r.horizontals[-1].crossing is None
        assert all(h.crossing is not None for h in r.horizontals[1:-1])


def test_component_count_kept():
    for d in corpus():
        assert trace_components(rect_to_pd(rect(d))).count == trace_components(d).count


def test_flipped_crossing_detected():
    d = next(x for x in corpus() if x.name == "5_2")
    r = rect(d)
    c0 = r.crossings[0]
    bad = dataclasses.replace(r, crossings=(dataclasses.replace(c0, h_over=not c0.h_over),) + r.crossings[1:])
    rep = verify_rectilinear(bad, d)
    assert any("f-polynomial" in f for f in rep.failures)


def test_broken_geometry_detected(trefoil):
    r = rect(trefoil)
    h = r.horizontals[0]
    bad = dataclasses.replace(r, horizontals=(HSeg(h.y, h.x1, h.x2 + 1, h.crossing),) + r.horizontals[1:])
    assert not verify_rectilinear(bad).ok


def test_curves_reject_open_path():
    with pytest.raises(Exception):
        curves_to_pd([Seg(0, 0, 2, 0), Seg(2, 0, 2, 2)], lambda h, v: True)


def test_curves_square_is_free_loop():
    sq = [Seg(0, 0, 2, 0), Seg(2, 0, 2, 2), Seg(2, 2, 0, 2), Seg(0, 2, 0, 0)]
    cp = curves_to_pd(sq, lambda h, v: True)
    assert cp.diagram.n == 0 and cp.diagram.free_loops == 1
