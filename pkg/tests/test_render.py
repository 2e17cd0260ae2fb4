import re

import pytest

from conftest import corpus_named
from knotlevel.arc import to_arc
from knotlevel.delta import to_delta
from knotlevel.leveling import compute_leveling
from knotlevel.rectilinear import to_rectilinear
from knotlevel.render import render


@pytest.fixture
def built():
    d = corpus_named("5_2")
    lv = compute_leveling(d)
    r = to_rectilinear(lv, d)
    return d, lv, r, to_arc(r), to_delta(lv, d, r)


def test_svg_is_deterministic(built):
    d, lv, r, a, dd = built
    assert render(lv, "svg", d) == render(lv, "svg", d)
    for obj in (r, a, dd):
        first = render(obj)
        assert first == render(obj)
        assert first.startswith("<?xml") and first.rstrip().endswith("</svg>")


def test_leveling_vertices_between_lines(built):
    d, lv, *_ = built
    svg = render(lv, "svg", d)
    cys = [int(m) for m in re.findall(r'<circle cx="\d+" cy="(\d+)"', svg)]
    assert len(cys) == d.n
    # one vertex per level, each strictly between two dashed lines
    dashed = sorted({int(m) for m in re.findall(r'y1="(\d+)"[^>]*stroke-dasharray', svg)})
    assert len(dashed) == d.n + 1
    assert len(set(cys)) == d.n
    for cy in cys:
        below = [y for y in dashed if y > cy]
        above = [y for y in dashed if y < cy]
        assert below and above and cy - max(above) == min(below) - cy


def test_rect_ascii_rows(built):
    d, _, r, _, _ = built
    rows = render(r, "ascii").splitlines()
    assert len(rows) == d.n + 2
    assert all(set(row) <= set(" -|+") for row in rows)


def test_leveling_svg_needs_diagram(built):
    _, lv, *_ = built
    with pytest.raises(ValueError):
        render(lv, "svg")
    assert len(render(lv, "ascii").splitlines()) == len(lv.levels)


def test_delta_svg_uses_three_colours(built):
    *_, dd = built
    svg = render(dd)
    for colour in ("#000000", "#1f5fbf", "#c0392b"):
        assert colour in svg


def test_unknown_inputs(built):
    with pytest.raises(ValueError):
        render(built[2], "png")
    with pytest.raises(TypeError):
        render(object())
