import json
import warnings

import pytest

from crosscap import diagram as dg
from crosscap.surface import Surface
from conftest import N, diagram, nonorient, one, orient, two


def rules(d):
    return sorted({v.rule for v in dg.validate_generic(d)})


def b_k(k, g):
    """Separating curve cutting off an orientable genus-k piece of N_g."""
    return diagram(
        N(g),
        [orient(0, k, [0], [1]), nonorient(1, g - 2 * k, [1])],
        curves=[two(1, 0, 1)],
    )


def test_pants_target_orientable_is_r5():
    d = diagram(Surface(True, 0, 3), [orient(0, 0, [0, 1, 2], [1, 1, 1])], [(1, 0), (2, 1), (3, 2)])
    assert "R5" in rules(d)


def test_bk_is_generic():
    assert dg.validate_generic(b_k(1, 4)) == []


def test_moebius_glued_to_pants_is_r2():
    d = diagram(
        N(2, 2),
        [nonorient(0, 1, [0]), orient(1, 0, [1, 2, 3], [1, 1, 1])],
        [(1, 2), (2, 3)],
        [two(1, 0, 1)],
    )
    assert "R2" in rules(d)


def test_disk_and_annuli():
    disk = diagram(N(3), [orient(0, 0, [0], [1]), nonorient(1, 3, [1])], curves=[two(1, 0, 1)])
    assert "R1" in rules(disk)
    parallel = diagram(
        N(3, 1),
        [orient(0, 0, [0, 1], [1, -1]), nonorient(1, 3, [2])],
        [(1, 0)],
        [two(1, 1, 2)],
    )
    assert "R3" in rules(parallel)
    isotopic = diagram(
        N(3),
        [orient(0, 0, [0, 1], [1, -1]), nonorient(1, 3, [2, 3])],
        curves=[two(1, 0, 2), two(2, 1, 3)],
    )
    assert "R3" in rules(isotopic)


def test_moebius_on_one_sided_warns():
    # a Moebius band whose boundary is folded by the antipodal map
    d = diagram(N(2), [nonorient(0, 1, [0])], curves=[one(1, 0)])
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        dg.validate_generic(d)
    assert any("one-sided" in str(w.message) for w in caught)


def test_malformed():
    with pytest.raises(dg.MalformedDiagram):
        diagram(N(3), [nonorient(0, 3, [0, 1])], curves=[two(1, 0, 0)])
    with pytest.raises(dg.MalformedDiagram):
        diagram(N(3), [nonorient(0, 3, [0, 1])])
    with pytest.raises(dg.MalformedDiagram):
        diagram(N(3), [orient(0, 1, [0, 1], [1])], curves=[two(1, 0, 1)])


def test_glue_invariants():
    inv = dg.glue_invariants(b_k(1, 4))
    assert inv.connected and not inv.orientable and inv.genus == 4
    # two-sided nonseparating curve with compatible signs gives an orientable surface
    torus = diagram(Surface(True, 1, 0), [orient(0, 0, [0, 1], [1, -1])], curves=[two(1, 0, 1)])
    inv = dg.glue_invariants(torus)
    assert inv.orientable and inv.genus == 1
    klein = diagram(N(2), [orient(0, 0, [0, 1], [1, 1])], curves=[two(1, 0, 1)])
    inv = dg.glue_invariants(klein)
    assert not inv.orientable and inv.genus == 2
    # one-sided gluing adds a crosscap
    d = diagram(N(3), [nonorient(0, 2, [0])], curves=[one(1, 0)])
    assert dg.glue_invariants(d).genus == 3
    with pytest.raises(dg.MalformedDiagram):
        diagram(N(3), [nonorient(0, 1, [0]), nonorient(1, 2, [1])])


def test_disconnected_is_r4():
    d = diagram(N(4), [nonorient(0, 2, [0, 1]), nonorient(1, 2, [2, 3])], curves=[two(1, 0, 1), two(2, 2, 3)])
    assert "R4" in rules(d)


def test_cut_subfamily_roundtrip():
    d = diagram(
        N(4),
        [orient(0, 1, [0], [1]), nonorient(1, 1, [1, 2])],
        curves=[two(1, 0, 1), one(2, 2)],
    )
    assert dg.is_valid(d)
    one_curve = dg.cut_subfamily(d, [1])
    assert one_curve.r == 1 and dg.is_valid(one_curve)
    comps = sorted((c.orientable, c.genus) for c in one_curve.components)
    assert comps == [(False, 2), (True, 1)]
    other = dg.cut_subfamily(d, [2])
    assert [c.genus for c in other.components] == [3]
    assert other.curve(1).kind == dg.ONE_SIDED


def test_json_roundtrip():
    d = b_k(1, 5)
    data = dg.to_json(d)
    assert dg.from_json(json.loads(json.dumps(data))) == d
    assert set(data["components"][0]["orientation_class"]) == {"0"}


def test_from_json_rejects_bad_label():
    data = dg.to_json(dg.trivial_diagram(N(3, 1)))
    data["exterior"] = {"x1": 0}
    with pytest.raises(dg.MalformedDiagram):
        dg.from_json(data)


def test_orbit_equal_relabelled_slots():
    a = b_k(1, 5)
    b = diagram(N(5), [nonorient(7, 3, [9]), orient(3, 1, [4], [-1])], curves=[two(1, 4, 9)])
    m = dg.orbit_equal(a, b)
    assert m.equivalent and m.witness == (1,)


def test_orbit_equal_distinguishes():
    assert not dg.orbit_equal(b_k(1, 5), b_k(2, 5)).equivalent
    with pytest.raises(dg.MismatchedTarget):
        dg.orbit_equal(b_k(1, 4), b_k(1, 5))


def test_orbit_equal_ordered_vs_unordered():
    d = diagram(
        N(5),
        [orient(0, 1, [0], [1]), nonorient(1, 1, [1, 2]), orient(2, 1, [3], [1])],
        curves=[two(1, 0, 1), two(2, 2, 3)],
    )
    swapped = dg.relabel(d, {1: 2, 2: 1})
    assert dg.orbit_equal(d, swapped).equivalent
    # both pieces are one-holed tori, so even the ordered comparison agrees
    assert dg.orbit_equal(d, swapped, ordered=True).equivalent


def test_orbit_signature_flip_invariant():
    d = b_k(1, 4)
    flipped = diagram(N(4), [orient(0, 1, [0], [-1]), nonorient(1, 2, [1])], curves=[two(1, 0, 1)])
    assert dg.orbit_signature(d) == dg.orbit_signature(flipped)
    assert dg.canonical_form(d) == dg.canonical_form(flipped)


def test_orbit_equal_order_matters():
    d = diagram(
        N(5),
        [orient(0, 1, [0], [1]), nonorient(1, 2, [1, 2])],
        curves=[two(1, 0, 1), one(2, 2)],
    )
    assert dg.is_valid(d)
    swapped = dg.relabel(d, {1: 2, 2: 1})
    assert not dg.orbit_equal(d, swapped, ordered=True).equivalent
    m = dg.orbit_equal(d, swapped)
    assert m.equivalent and m.witness == (2, 1)
