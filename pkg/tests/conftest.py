import functools

import pytest

from knotlevel.cli import corpus_text
from knotlevel.diagram import parse_pd, read_diagrams

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
HOPF = "X[2,3,1,4] X[4,1,3,2]"
FIGURE_EIGHT = "X[2,7,3,8] X[4,2,5,1] X[6,3,7,4] X[8,6,1,5]"


@functools.lru_cache(maxsize=None)
def corpus():
    return tuple(read_diagrams(corpus_text()))


def corpus_named(name):
    return next(d for d in corpus() if d.name == name)


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL, "trefoil")


@pytest.fixture
def hopf():
    return parse_pd(HOPF, "hopf")


@pytest.fixture
def figure_eight():
    return parse_pd(FIGURE_EIGHT, "4_1")
