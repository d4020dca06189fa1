import json

import pytest

from crosscap.brown import (
    BrownData,
    EdgeData,
    IncompleteData,
    NotDeterminable,
    TriangleData,
    brown_assembly,
    brown_from_json,
    eliminated_edges,
)
from crosscap.complex import Cell, Edge, QuotientComplex
from crosscap.presentation import Presentation, parse_expr as w
from crosscap.trees import determinability_closure


def pres(gens, *rels):
    return Presentation.build(gens.split(), rels)


def test_single_vertex():
    d = BrownData({0: pres("a", "a^2")})
    expected = Presentation(("a",), (w("a^2"),))
    assert brown_assembly(d) == expected
    assert brown_assembly(d, reduce=True) == expected


def test_tree_edge_gives_amalgam():
    d = BrownData(
        {0: pres("a"), 1: pres("b")},
        (EdgeData(0, 0, 1, True, ((w("a^2"), w("b^3")),)),),
    )
    full = brown_assembly(d)
    assert full.generators == ("a", "b", "g0")
    assert full.relators == (w("g0"), w("g0^-1 a^2 g0 b^-3"))
    red = brown_assembly(d, reduce=True)
    assert red == Presentation(("a", "b"), (w("a^2 b^-3"),))
    assert eliminated_edges(d) == {0}


def test_loop_edge_not_determinable():
    d = BrownData(
        {0: pres("a")},
        (EdgeData(0, 0, 0, False, ((w("a"), w("a^-1")),)),),
    )
    full = brown_assembly(d)
    assert full == Presentation(("a", "g0"), (w("g0^-1 a g0 a"),))
    with pytest.raises(NotDeterminable) as info:
        brown_assembly(d, reduce=True)
    assert info.value.stuck == [0]
    assert info.value.partial == full
    assert eliminated_edges(d) == set()


def triangle_toy(tree_edges):
    d = BrownData(
        {0: pres("x", "x^2"), 1: pres("y"), 2: pres("z", "z^3")},
        (
            EdgeData(0, 0, 1, 0 in tree_edges),
            EdgeData(1, 1, 2, 1 in tree_edges),
            EdgeData(2, 0, 2, 2 in tree_edges),
        ),
        (TriangleData((0, 1, 2), w("x"), w("y"), w("z"), w("x y")),),
    )
    x = QuotientComplex(
        0,
        0,
        [Cell(i, None) for i in range(3)],
        [Edge(0, 0, 1), Edge(1, 1, 2), Edge(2, 0, 2)],
        [(0, 1, 2)],
    )
    return d, x


@pytest.mark.parametrize("tree", [(0, 1), (0, 2), (1, 2)])
def test_triangle_solve(tree):
    d, x = triangle_toy(tree)
    full = brown_assembly(d)
    # vertex relators, R1, then the single triangle relator
    assert full.relators[:2] == (w("x^2"), w("z^3"))
    assert full.relators[-1] == w("x g0 y g1 z g2^-1 y^-1 x^-1")
    red = brown_assembly(d, reduce=True)
    assert red.generators == ("x", "y", "z")
    assert eliminated_edges(d) == set(determinability_closure(x, tree, ordered=True))
    # the quotient by the solved triangle is the free product
    assert red.relators == (w("x^2"), w("z^3"))


def test_triangle_with_one_tree_edge_is_stuck():
    d, x = triangle_toy((0,))
    with pytest.raises(NotDeterminable) as info:
        brown_assembly(d, reduce=True)
    assert info.value.stuck == [1, 2]
    assert eliminated_edges(d) == set(determinability_closure(x, [0], ordered=True)) == {0}


def test_edge_names_avoid_vertex_generators():
    d = BrownData({0: pres("g0")}, (EdgeData(0, 0, 0, False),))
    assert brown_assembly(d).generators == ("g0", "g0_")


def test_validation():
    with pytest.raises(IncompleteData):
        brown_assembly(BrownData({0: pres("a"), 1: pres("a")}))
    with pytest.raises(IncompleteData):
        brown_assembly(BrownData({0: pres("a")}, (EdgeData(0, 0, 5, True),)))
    with pytest.raises(IncompleteData):
        brown_assembly(BrownData({0: pres("a"), 1: pres("b")}, (EdgeData(0, 0, 1, True, ((w("b"), w("b")),)),)))
    d, _ = triangle_toy((0, 1))
    bad = BrownData(d.vertices, d.edges, (TriangleData((1, 0, 2)),))
    with pytest.raises(IncompleteData):
        brown_assembly(bad)


def test_json_loading():
    data = {
        "vertices": [{"id": 0, "generators": ["a"]}, {"id": 1, "generators": ["b"], "relators": ["b^2"]}],
        "edges": [{"id": 0, "src": 0, "dst": 1, "tree": True, "gens": [{"i": "a^2", "c": [["b", 1]]}]}],
    }
    d = brown_from_json(json.loads(json.dumps(data)))
    assert brown_assembly(d, reduce=True) == Presentation(("a", "b"), (w("b^2"), w("a^2 b^-1")))
    with pytest.raises(IncompleteData):
        brown_from_json({"edges": []})
    with pytest.raises(IncompleteData):
        brown_from_json({"vertices": [], "triangles": [{"edges": [0, 1]}]})
