"""Acceptance gate: one check per criterion, each reporting a PASS/FAIL line.

The report lines are collected by the ``pytest_terminal_summary`` hook in
conftest.py, so they appear at the end of every run.
"""

import contextlib
import io
import time

import pytest

from crosscap import catalog as cat, complex as cx, rs, snf, trees
from crosscap.brown import BrownData, EdgeData, NotDeterminable, brown_assembly, eliminated_edges
from crosscap.cli import EXIT_OK, run
from crosscap.complex import Cell, Edge, QuotientComplex
from crosscap.extension import direct_product, free_abelian
from crosscap.presentation import Presentation, free_reduce, letter, parse_expr
from crosscap.surface import euler, Surface
from crosscap.todd_coxeter import Index, OutOfBounds, todd_coxeter

REPORT: dict[int, str] = {}


@contextlib.contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        REPORT[number] = f"criterion {number} FAIL  {title}: {str(exc).splitlines()[0] if str(exc) else type(exc).__name__}"
        print(REPORT[number])
        raise
    took = time.perf_counter() - start
    REPORT[number] = f"criterion {number} PASS  {title} ({took:.1f}s)"
    print(REPORT[number])


def cli(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = run(list(argv))
    return code, buf.getvalue()


# ---------------------------------------------------------------- 1


def test_criterion_1_census_cross_check():
    expected = {(4, 0): 5, (5, 0): 5, (6, 0): 7, (1, 3): 10, (2, 1): 3}
    with criterion(1, "census formula vs enumeration, g+n <= 6"):
        start = time.perf_counter()
        totals, failures = {}, []
        for g in range(1, 7):
            for n in range(0, 7 - g):
                if euler(Surface(False, g, n)) >= 0:
                    continue
                code, out = cli("census", "--genus", str(g), "--boundary", str(n), "--dim", "1", "--method", "both")
                if code != EXIT_OK:
                    failures.append(f"({g},{n}) exit {code}")
                totals[g, n] = int(out.strip().splitlines()[-1].split()[-1]) if code == EXIT_OK else None
        assert time.perf_counter() - start < 60
        assert not failures, failures
        wrong = {k: (totals[k], v) for k, v in expected.items() if totals[k] != v}
        assert not wrong, f"(got, expected) per surface: {wrong}"


# ---------------------------------------------------------------- 2


def brute_g1_labels(n):
    """Genus-one vertex labels as plain unordered pairs of sets."""
    import itertools

    labels = range(1, n + 1)
    out = set()
    for assign in itertools.product((0, 1, 2), repeat=n):
        i = frozenset(k for k, a in zip(labels, assign) if a == 1)
        j = frozenset(k for k, a in zip(labels, assign) if a == 2)
        if 2 <= len(i) + len(j) <= n - 1:
            out.add(("sep", frozenset((i, j))))
    for mask in range(2**n):
        i = frozenset(k for k in labels if mask >> (k - 1) & 1)
        out.add(("one", frozenset((i, frozenset(labels) - i))))
    return out


def test_criterion_2_g1_symbolic_complex():
    with criterion(2, "genus-one complex n=5: 116 vertices, tree of 115, full closure"):
        start = time.perf_counter()
        x = cx.g1_symbolic_complex(5)
        assert len(x.vertices) == 116 == len(brute_g1_labels(5))
        code, out = cli("tree", "--genus", "1", "--boundary", "5")
        assert code == EXIT_OK
        assert out.strip() == f"determinable: ALL (edges={len(x.edges)}, tree=115)", out
        marks = trees.tree_and_closure(x, 1, 5)
        assert len(marks.tree) == 115 and len(marks.determinable) == len(x.edges)
        assert time.perf_counter() - start < 60


# ---------------------------------------------------------------- 3


def test_criterion_3_non_sporadic_closure():
    with criterion(3, "enumerated complexes (2,4) and (3,3): closure covers every edge"):
        start = time.perf_counter()
        for g, n in ((2, 4), (3, 3)):
            x = cx.build_quotient_complex(g, n)
            marks = trees.tree_and_closure(x, g, n)
            assert len(marks.tree) == len(x.vertices) - 1
            assert len(marks.determinable) == len(x.edges), f"({g},{n}): {len(marks.determinable)}/{len(x.edges)}"
        assert time.perf_counter() - start < 600


# ---------------------------------------------------------------- 4


def test_criterion_4_reidemeister_schreier():
    with criterion(4, "Reidemeister-Schreier: rank 2 -> 3, one relator -> 5/2, rank 2n-1"):
        free2 = Presentation(("x1", "x2"), ())
        q = rs.reidemeister_schreier_index2(free2, {"x1": -1, "x2": -1})
        assert len(q.generators) == 3 and not q.relators
        p = Presentation(("x1", "x2", "x3"), (parse_expr("x3^2 x2^2 x1^2"),))
        q = rs.reidemeister_schreier_index2(p, {"x1": -1, "x2": -1, "x3": -1})
        assert (len(q.generators), len(q.relators)) == (5, 2)
        for n in range(1, 9):
            gens = tuple(f"x{i}" for i in range(n))
            for first in range(n):
                sign = {x: (-1 if k == first else 1) for k, x in enumerate(gens)}
                q = rs.reidemeister_schreier_index2(Presentation(gens, ()), sign)
                assert len(q.generators) == 2 * n - 1 and not q.relators


# ---------------------------------------------------------------- 5


def test_criterion_5_abelianizations():
    with criterion(5, "abelianizations of the sporadic groups and their extensions"):
        ab = lambda p: snf.abelianization(p)
        assert str(ab(cat.surface_entry(2, 1).presentation)) == "Z x Z/2"
        # three central twists times the free pure group on three points
        m13 = direct_product(free_abelian(["C1", "C2", "C3"]), cat.get_entry("PM1.0.3").presentation)
        assert ab(m13) == snf.AbelianGroup((), 6)
        assert ab(cat.surface_entry(1, 3).presentation) == ab(m13)
        for entry in ("M2.2", "M3.1", "M3.2"):
            (claim,) = [c for c in cat.get_entry(entry).claims if isinstance(c, cat.IsomorphicToProductAb)]
            left = ab(cat.get_entry(entry).presentation)
            right = ab(cat.extension_for(claim))
            assert left == right, (entry, str(left), str(right))
        assert len(cat.get_entry("M2.2").claims[0].kernel) == 2
        assert len(cat.get_entry("M3.1").claims[0].kernel) == 1
        assert len(cat.get_entry("M3.2").claims[0].kernel) == 2


# ---------------------------------------------------------------- 6

ROMAN = [
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x",
    "xi", "xii", "xiii", "xiv", "xv", "xvi", "xvii", "xviii", "xix", "xx",
]


def test_criterion_6_derived_relations():
    with criterion(6, "derived relations hold in the abelianization"):
        start = time.perf_counter()
        checked = 0
        for entry in ("PM1.0.4", "PM2.0.3", "PM3.0.1", "PM3.0.2"):
            e = cat.get_entry(entry)
            for c in e.claims:
                assert isinstance(c, cat.RelationHoldsAb)
                r = cat.check_claim(e, c)
                assert r.status == cat.PASS, (entry, c.label, r.detail)
                checked += 1
        # every numbered relation of each list is present
        base = lambda e: {c.label.split(".")[0] for c in cat.get_entry(e).claims}
        assert set(ROMAN) <= base("PM2.0.3")
        assert set(ROMAN[:18]) <= base("PM3.0.1")
        assert set(ROMAN[:18]) <= base("PM3.0.2")
        assert base("PM1.0.4")
        assert checked >= 60
        assert time.perf_counter() - start < 30


# ---------------------------------------------------------------- 7


def test_criterion_7_coset_enumeration():
    with criterion(7, "coset enumeration: Z/2 x Z/2, Z/3, OutOfBounds"):
        k4 = Presentation.build(["a", "b"], ["a^2", "b^2", "a b a b"])
        assert todd_coxeter(k4, [], 100) == Index(4)
        assert todd_coxeter(Presentation.build(["a"], ["a^3"]), [], 100) == Index(3)
        m21 = cat.surface_entry(2, 1).presentation
        assert todd_coxeter(m21, [letter("A1")], 10**4) == OutOfBounds(10**4)


# ---------------------------------------------------------------- 8


def w(text):
    return parse_expr(text)


def test_criterion_8_brown_assembly():
    with criterion(8, "Brown assembly on the three toy complexes"):
        # one vertex, no edges
        v = Presentation.build(["a"], ["a^2"])
        d1 = BrownData({0: v})
        assert brown_assembly(d1) == v == brown_assembly(d1, reduce=True)
        assert eliminated_edges(d1) == set()

        # two vertices, one tree edge: hand instantiation of the formula
        d2 = BrownData(
            {0: Presentation.build(["a"], ["a^5"]), 1: Presentation.build(["b"], ["b^7"])},
            (EdgeData(0, 0, 1, True, ((w("a^2"), w("b^3")),)),),
        )
        hand = Presentation(
            ("a", "b", "g0"),
            tuple(free_reduce(r) for r in (w("a^5"), w("b^7"), w("g0"), w("g0^-1 a^2 g0 b^-3"))),
        )
        assert brown_assembly(d2) == hand
        assert brown_assembly(d2, reduce=True) == Presentation(("a", "b"), (w("a^5"), w("b^7"), w("a^2 b^-3")))

        # one vertex, a loop outside the tree
        d3 = BrownData({0: Presentation.build(["a"], [])}, (EdgeData(0, 0, 0, False, ((w("a"), w("a^-1")),)),))
        hand = Presentation(("a", "g0"), (w("g0^-1 a g0 a"),))
        assert brown_assembly(d3) == hand
        with pytest.raises(NotDeterminable) as info:
            brown_assembly(d3, reduce=True)
        assert info.value.stuck == [0] and info.value.partial == hand

        # reduce eliminates exactly the determinable edges
        for d, cells in ((d1, 1), (d2, 2), (d3, 1)):
            x = QuotientComplex(
                0, 0, [Cell(i, None) for i in range(cells)], [Edge(e.id, e.src, e.dst) for e in d.edges], []
            )
            tree = [e.id for e in d.edges if e.tree]
            assert eliminated_edges(d) == set(trees.determinability_closure(x, tree, ordered=True))


# ---------------------------------------------------------------- 9


def test_criterion_9_property_suites():
    """Runs the randomized suites in-process with their fixed seeds."""
    import test_properties as tp

    with criterion(9, "property suites: SNF, orbit axioms, Tietze, free_reduce"):
        start = time.perf_counter()
        tp.test_snf_properties()
        tp.test_orbit_equal_axioms()
        tp.test_tietze_preserves_abelianization()
        tp.test_free_reduce_idempotent()
        assert time.perf_counter() - start < 60
