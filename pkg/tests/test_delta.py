import dataclasses

import pytest
from hypothesis import assume, given, settings, strategies as st

from conftest import corpus, corpus_named
from knotlevel.delta import (DeltaCounts, DeltaError, delta_bound, delta_total, to_delta,
                             verify_delta)
from knotlevel.diagram import Crossing, LinkDiagram, trace_components, trace_faces
from knotlevel.invariants import f_poly
from knotlevel.leveling import Level, Leveling, compute_leveling, widths


def delta_of(d):
    return to_delta(compute_leveling(d), d)


def test_trefoil_eleven(trefoil):
    dd = delta_of(trefoil)
    assert dd.pd.n == 11 == delta_bound(3)
    assert dd.counts == DeltaCounts(3, 1, 7)
    rep = verify_delta(dd, trefoil)
    assert rep.ok and rep.f_poly_checked
    assert rep.unbounded_size in (3, 4, 5)


def test_bound_values():
    assert [delta_bound(n) for n in (3, 4, 5, 6)] == [11, 19, 27, 37]
    assert delta_total(4, [4, 6, 4]) == 19 == delta_bound(4)


def test_corpus_faces_identity_bound():
    for d in corpus():
        if d.n < 3:
            continue
        dd = delta_of(d)
        rep = verify_delta(dd, d, f_poly_limit=0)
        assert rep.ok, (d.name, rep.failures)
        assert all(3 <= k <= 5 for k in trace_faces(dd.pd).sizes())
        assert dd.pd.n == delta_total(d.n, dd.widths) <= delta_bound(d.n)


def test_small_corpus_f_poly():
    for d in corpus():
        if 3 <= d.n <= 6:
            dd = delta_of(d)
            assert f_poly(dd.pd) == f_poly(d), d.name
            assert trace_components(dd.pd).count == trace_components(d).count


def test_hopf_and_small_inputs_rejected(hopf):
    with pytest.raises(DeltaError, match="Hopf"):
        delta_of(hopf)
    # same shadow as the Hopf link, one crossing switched: a two-component unlink
    unlink = mirror_one(hopf)
    assert trace_components(unlink).count == 2
    with pytest.raises(DeltaError):
        delta_of(unlink)


def mirror_one(d):
    c = d.crossings[0]
    return LinkDiagram((Crossing(c.slots, (c.under_entry + 1) % 4),) + d.crossings[1:], None)


def test_large_region_reported(trefoil):
    dd = delta_of(trefoil)
    big = next(d for d in corpus() if max(trace_faces(d).sizes()) >= 6)
    bad = dataclasses.replace(dd, pd=big, outer_face=-1)
    rep = verify_delta(bad, f_poly_limit=0)
    assert any(f.startswith("region size") for f in rep.failures)
    assert not rep.bounded_sizes_ok


def test_tampered_count_reported(trefoil):
    dd = delta_of(trefoil)
    bad = dataclasses.replace(dd, counts=dataclasses.replace(dd.counts, ds_cross=dd.counts.ds_cross + 1))
    rep = verify_delta(bad)
    assert any(f.startswith("crossing identity") for f in rep.failures)


def test_unbounded_face_reported_separately():
    d = corpus_named("5_2")
    dd = delta_of(d)
    rep = verify_delta(dd)
    sizes = trace_faces(dd.pd).sizes()
    assert rep.unbounded_size == sizes[dd.outer_face]
    assert rep.unbounded_ok


def test_mirror_flag_follows_second_level():
    for d in corpus()[:30]:
        if d.n < 3:
            continue
        lv = compute_leveling(d)
        assert delta_of(d).mirrored == (lv.levels[1].position == 0)


def _synthetic(types):
    levels = tuple(Level(i, p, q, 0, tuple(range(p)), tuple(range(p, p + q))) for i, (p, q) in enumerate(types))
    return Leveling(tuple(range(len(types))), levels, 0, 0, len(types) - 1)


interior = st.lists(st.sampled_from([(1, 3), (2, 2), (3, 1)]), min_size=1, max_size=12)


@settings(max_examples=200, deadline=None)
@given(interior)
def test_width_sequences_respect_bound(mid):
    types = [(0, 4)] + mid + [(4, 0)]
    n = len(types)
    ws = widths(_synthetic(types))
    assume(all(w >= 2 for w in ws[1:n]) and ws[n] == 0)
    inner = ws[1:n]
    cap = [min(2 * k + 2, 2 * (n - k) + 2) for k in range(1, n)]
    assert all(w <= c for w, c in zip(inner, cap))
    total = delta_total(n, inner)
    assert total <= delta_bound(n)
    assert (total == delta_bound(n)) == (inner == cap)


@pytest.mark.parametrize("n", range(3, 16))
def test_extremal_pattern_attains_bound(n):
    # lower half T^3_1, upper half T^1_3, one balanced level in the middle when n is odd
    half = (n - 2) // 2
    types = [(0, 4)] + [(1, 3)] * half + [(2, 2)] * (n % 2) + [(3, 1)] * half + [(4, 0)]
    assert len(types) == n
    ws = widths(_synthetic(types))[1:n]
    assert ws == [min(2 * k + 2, 2 * (n - k) + 2) for k in range(1, n)]
    assert delta_total(n, ws) == delta_bound(n)
