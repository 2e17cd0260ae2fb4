import pytest
from hypothesis import given, settings, strategies as st

from conftest import corpus, corpus_named
from helpers import add_kink, mirror
from knotlevel.diagram import LinkDiagram, parse_pd, trace_components
from knotlevel.invariants import (EvaluatorRangeError, PlanarMatching, Verdict, bracket, bracket_naive,
                                  bracket_sweep, f_poly, same_link, self_writhe, sweep_order, writhe)
from knotlevel.poly import A, DELTA, LaurentPoly

# values below were computed with the state-sum evaluator and agree with the
# standard Jones polynomial tables under A = t^(-1/4)
TREFOIL_BRACKET = A ** 7 - A ** 3 - A ** -5
TREFOIL_F = -(A ** 16) + A ** 12 + A ** 4
FIGURE_EIGHT_F = A ** 8 - A ** 4 + 1 - A ** -4 + A ** -8
HOPF_BRACKET = -(A ** 4) - A ** -4


def test_unknot_marker_is_one():
    assert bracket_naive(LinkDiagram((), free_loops=1)) == LaurentPoly.const(1)
    assert bracket_sweep(LinkDiagram((), free_loops=1)) == LaurentPoly.const(1)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_disjoint_circles(k):
    d = LinkDiagram((), free_loops=k)
    assert bracket_naive(d) == DELTA ** (k - 1)
    assert bracket_sweep(d) == DELTA ** (k - 1)


def test_trefoil_values(trefoil):
    assert bracket_naive(trefoil) == TREFOIL_BRACKET
    assert bracket_sweep(trefoil) == TREFOIL_BRACKET
    assert writhe(trefoil) == -3
    assert f_poly(trefoil) == TREFOIL_F


def test_hopf_bracket(hopf):
    assert bracket_naive(hopf) == HOPF_BRACKET
    assert bracket_sweep(hopf) == HOPF_BRACKET


def test_figure_eight_is_amphichiral(figure_eight):
    assert f_poly(figure_eight) == FIGURE_EIGHT_F
    assert f_poly(mirror(figure_eight)) == FIGURE_EIGHT_F


def test_kinked_unknot_normalizes_to_one():
    for d in (parse_pd("X[1,1,2,2]"), parse_pd("X[2,1,1,2]")):
        assert f_poly(d) == LaurentPoly.const(1)


def test_writhe_unchanged_by_reversing_everything(trefoil):
    comps = trace_components(trefoil)
    assert writhe(trefoil, comps.reversed()) == writhe(trefoil, comps)


def test_writhe_of_cancelling_pair():
    # closure of sigma_1 sigma_1^-1: one positive and one negative crossing
    from knotlevel.braid import BraidWord, braid_to_pd
    d = braid_to_pd(BraidWord(2, (1, -1)))
    assert writhe(d) == 0


def test_self_writhe_ignores_orientation_of_one_component():
    d = corpus_named("L4a1")
    comps = trace_components(d)
    flip_one = type(comps)(comps.count, comps.component_of,
                           {e: ((h, t) if comps.component_of[e] == 0 else (t, h))
                            for e, (t, h) in comps.direction.items()})
    assert self_writhe(d, flip_one) == self_writhe(d, comps)
    assert writhe(d, flip_one) != writhe(d, comps)


def test_sweep_equals_naive_on_corpus():
    for d in corpus():
        if d.n <= 12:
            assert bracket_sweep(d) == bracket_naive(d), d.name


def test_sweep_with_arbitrary_order(trefoil):
    assert bracket_sweep(trefoil, order=[2, 0, 1]) == TREFOIL_BRACKET
    with pytest.raises(ValueError):
        bracket_sweep(trefoil, order=[0, 0, 1])


def test_caps():
    d = corpus_named("9_1")
    with pytest.raises(EvaluatorRangeError):
        bracket_naive(d, cap=8)
    with pytest.raises(EvaluatorRangeError):
        bracket_sweep(d, cap=2)
    assert bracket(d) == bracket_naive(d)


def test_sweep_order_is_permutation():
    for d in corpus()[:20]:
        assert sorted(sweep_order(d)) == list(range(d.n))


def test_planar_matching():
    assert PlanarMatching(((1, 4), (2, 3))).is_noncrossing([1, 2, 3, 4])
    assert not PlanarMatching(((1, 3), (2, 4))).is_noncrossing([1, 2, 3, 4])
    assert PlanarMatching.from_map({1: 2, 2: 1}).pairs == ((1, 2),)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([d.name for d in corpus() if d.n <= 8]))
def test_mirror_substitutes_inverse(name):
    d = corpus_named(name)
    assert bracket(mirror(d)) == bracket(d).mirror()


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([d.name for d in corpus() if d.n <= 8]), st.integers(0, 1))
def test_f_poly_kink_invariance(name, under):
    d = corpus_named(name)
    assert f_poly(add_kink(d, under)) == f_poly(d)


def test_same_link_verdicts(trefoil, hopf):
    assert same_link(trefoil, trefoil) is Verdict.CONSISTENT
    assert same_link(trefoil, mirror(trefoil)) is Verdict.DISTINGUISHED
    assert same_link(trefoil, hopf) is Verdict.DISTINGUISHED
    assert same_link(trefoil, corpus_named("3_1")) is Verdict.DISTINGUISHED  # opposite chirality
    assert same_link(mirror(trefoil), corpus_named("3_1")) is Verdict.CONSISTENT
