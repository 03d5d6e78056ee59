import json
import xml.dom.minidom

import pytest

from hilbstair import io as hio
from hilbstair.errors import ParseError
from hilbstair.monomial import from_partition
from hilbstair.render import RenderSpec, UnsupportedRender, render

DOC_EXAMPLES = [
    {"dim": 2, "generators": [[6, 0], [5, 1], [2, 2], [0, 4]]},
    {"dim": 2, "partition": [6, 5, 2, 2]},
    {"dim": 3, "plane_partition": [[3, 3], [2, 2], [1]]},
]


def test_forms_agree():
    a, b, _ = (hio.parse_ideal(o) for o in DOC_EXAMPLES)
    assert a == b


def test_plane_partition_form():
    I = hio.parse_ideal(DOC_EXAMPLES[2])
    assert I.generators == ((3, 0, 0), (0, 2, 0), (2, 0, 1), (1, 0, 2), (0, 1, 2), (0, 0, 3))


@pytest.mark.parametrize("obj,needle", [
    ({"dim": 2, "generators": [[2, 0], [1, -1]]}, "generator #1"),
    ({"dim": 2, "generators": [[2, 0], [1]]}, "generator #1"),
    ({"dim": 2, "generators": [[2, 0], [1, 1]]}, "pure power"),
    ({"dim": 3, "plane_partition": [[1], [2]]}, "not contained"),
    ({"dim": 2, "partition": [1, 2]}, "decreasing"),
    ({"dim": 4, "generators": [[1, 0, 0, 0]]}, "dim"),
    ({"dim": 2}, "exactly one"),
    ([1, 2], "object"),
])
def test_diagnostics(obj, needle):
    with pytest.raises(ParseError, match=needle):
        hio.parse_ideal(obj)


def test_bad_json_text():
    with pytest.raises(ParseError, match="invalid JSON"):
        hio.loads("{")


def test_nested_form(tmp_path):
    p = tmp_path / "pair.json"
    p.write_text(json.dumps({"I": DOC_EXAMPLES[1], "J": {"dim": 2, "partition": [1]}}))
    I, J = hio.load(str(p))
    assert I.colength == 15 and J.colength == 1


def test_ascii_grid_no_arrows():
    out = render(from_partition([2, 2]), RenderSpec())
    lines = out.splitlines()
    assert lines[1:] == [" 2 a1  .  .", " 1 [ ][ ] .", " 0 [ ][ ]a0", "    0  1  2"]
    assert sum(line.count(" a") + line.count("]a") for line in lines[1:]) == 2


def test_svg_arrows_filtered():
    svg = render(from_partition([6, 5, 2, 2]), RenderSpec("svg", True, "P"))
    xml.dom.minidom.parseString(svg)
    assert svg.count('class="arrow') == 15
    all_ = render(from_partition([6, 5, 2, 2]), RenderSpec("svg", True, "all"))
    assert all_.count('class="arrow') == 30


def test_svg_origin_bottom_left():
    svg = render(from_partition([2, 1]), RenderSpec("svg"))
    doc = xml.dom.minidom.parseString(svg)
    rects = {(float(r.getAttribute("x")), float(r.getAttribute("y"))) for r in doc.getElementsByTagName("rect")}
    (x00, y00), = [(x, y) for x, y in rects if x == min(a for a, _ in rects) and y == max(b for _, b in rects)]
    assert len(rects) == 3 and y00 == max(y for _, y in rects)


def test_three_variable_layers():
    I = hio.parse_ideal({"dim": 3, "generators": [[1, 0, 0], [0, 1, 0], [0, 0, 2]]})
    out = render(I, RenderSpec())
    assert out.count("(1x1)") == 2
    with pytest.raises(UnsupportedRender):
        render(I, RenderSpec("svg", True, "type1"))
    arrows = render(I, RenderSpec("ascii", True, "type3"))
    assert "arrows (type3): 2" in arrows


def test_filter_dimension_mismatch():
    with pytest.raises(UnsupportedRender):
        render(from_partition([2]), RenderSpec("ascii", True, "type1"))


def test_doc_examples_round_trip():
    for obj in DOC_EXAMPLES:
        I = hio.parse_ideal(obj)
        assert render(I, RenderSpec("ascii", True, "all"))
        assert hio.parse_ideal(I.to_json()) == I
