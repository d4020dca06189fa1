import math
from functools import lru_cache

from hypothesis import given, settings, strategies as st

from crosscap import diagram as dg, rs, snf, tietze as tz
from crosscap.orbits import enumerate_orbit_simplices
from crosscap.presentation import Presentation, free_reduce, inverse, mul
from crosscap.todd_coxeter import Index, todd_coxeter


# ---------------------------------------------------------------- Smith normal form


def int_matrices(max_dim=8, bound=20):
    return st.integers(1, max_dim).flatmap(
        lambda m: st.integers(1, max_dim).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-bound, bound), min_size=n, max_size=n), min_size=m, max_size=m
            )
        )
    )


def det(m):
    """Exact determinant by fraction-free elimination (independent of the SNF code)."""
    from fractions import Fraction

    a = [[Fraction(x) for x in row] for row in m]
    n, d = len(a), Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            d = -d
        d *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return int(d)


@settings(max_examples=50)
@given(int_matrices(), st.randoms(use_true_random=False))
def test_snf_properties(a, rnd):
    res = snf.smith_normal_form(a)
    assert snf.matmul(snf.matmul(res.U, a), res.V) == res.D
    m, n = len(a), len(a[0])
    assert all(res.D[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    d = res.diagonal
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert d[: len(nz)] == nz  # zeros trail
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))
    assert abs(det(res.U)) == 1 and abs(det(res.V)) == 1
    # invariant under row and column permutations
    rows = list(range(m))
    cols = list(range(n))
    rnd.shuffle(rows)
    rnd.shuffle(cols)
    b = [[a[i][j] for j in cols] for i in rows]
    assert snf.smith_normal_form(b).diagonal == d
    # and under transposition
    t = [[a[i][j] for i in range(m)] for j in range(n)]
    assert snf.smith_normal_form(t).diagonal[: len(nz)] == nz


# ---------------------------------------------------------------- words

GENS = ("a", "b", "c")
letters = st.tuples(st.sampled_from(GENS), st.sampled_from((1, -1)))
words = st.lists(letters, max_size=12).map(tuple)


@settings(max_examples=1000)
@given(words)
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert all(not (x == y and e == -f) for (x, e), (y, f) in zip(r, r[1:]))
    assert free_reduce(mul(w, inverse(w))) == ()
    assert free_reduce(inverse(inverse(w))) == r


# ---------------------------------------------------------------- orbit equivalence


@lru_cache(maxsize=None)
def reps(g, n, r):
    return tuple(enumerate_orbit_simplices(g, n, r))


def disguise(d, rnd):
    """Same orbit, different bookkeeping: slot ids, component ids and order,
    curve numbering and the orientation of each orientable component."""
    slots = sorted({s for c in d.components for s in c.slots})
    fresh = list(range(100, 100 + len(slots)))
    rnd.shuffle(fresh)
    smap = dict(zip(slots, fresh))
    comps = []
    ids = list(range(50, 50 + len(d.components)))
    rnd.shuffle(ids)
    for k, c in enumerate(d.components):
        signs = c.signs
        if signs is not None and rnd.random() < 0.5:
            signs = tuple(-s for s in signs)
        order = list(range(len(c.slots)))
        rnd.shuffle(order)
        new_slots = tuple(smap[c.slots[i]] for i in order)
        new_signs = None if signs is None else tuple(signs[i] for i in order)
        comps.append(dg.ComponentSpec(ids[k], c.orientable, c.genus, new_slots, new_signs))
    rnd.shuffle(comps)
    exterior = tuple((lab, smap[s]) for lab, s in d.exterior)
    perm = list(range(1, d.r + 1))
    rnd.shuffle(perm)
    curves = tuple(
        dg.CurveGluing(perm[c.index - 1], c.kind, tuple(smap[s] for s in c.slots)) for c in d.curves
    )
    return dg.CutDiagram(d.target, tuple(comps), exterior, curves), perm


SURFACES = [(3, 1, 2), (4, 0, 2), (2, 2, 1), (2, 2, 2), (5, 0, 1)]


@settings(max_examples=200)
@given(st.sampled_from(SURFACES), st.data(), st.randoms(use_true_random=False))
def test_orbit_equal_axioms(surface, data, rnd):
    pool = reps(*surface)
    idx = data.draw(st.lists(st.integers(0, min(3, len(pool) - 1)), min_size=3, max_size=3))
    ds, undone = [], []
    for i in idx:
        d, perm = disguise(pool[i], rnd)
        ds.append(d)
        undone.append(dg.relabel(d, {p: k + 1 for k, p in enumerate(perm)}))
        # the witness recovers the curve renaming up to the stabiliser
        m = dg.orbit_equal(pool[i], d)
        assert m.equivalent
        assert dg.orbit_equal(relabel_back(d, m.witness), pool[i], ordered=True)
    a, b, c = ds
    for i, j in ((0, 1), (1, 2), (0, 2)):
        x, y = ds[i], ds[j]
        e = dg.orbit_equal(x, y).equivalent
        assert e == dg.orbit_equal(pool[idx[i]], pool[idx[j]]).equivalent
        assert e == dg.orbit_equal(y, x).equivalent
        # representatives of ordered families are pairwise inequivalent
        assert dg.orbit_equal(undone[i], undone[j], ordered=True).equivalent == (idx[i] == idx[j])
    if dg.orbit_equal(a, b) and dg.orbit_equal(b, c):
        assert dg.orbit_equal(a, c)


def relabel_back(d, witness):
    return dg.relabel(d, {s: i + 1 for i, s in enumerate(witness)})


# ---------------------------------------------------------------- Tietze moves

presentations = st.builds(
    lambda rels: Presentation(GENS, tuple(free_reduce(r) for r in rels)),
    st.lists(words, min_size=1, max_size=4),
)


@settings(max_examples=100)
@given(presentations, st.lists(st.integers(0, 3), min_size=1, max_size=6), st.data())
def test_tietze_preserves_abelianization(p, moves, data):
    ab = snf.abelianization(p)
    fresh = 0
    for kind in moves:
        if kind == 0 and p.generators:
            gens = p.generators
            w = data.draw(st.lists(st.tuples(st.sampled_from(gens), st.sampled_from((1, -1))), max_size=6))
            p = tz.tietze(p, tz.AddGen(f"n{fresh}", tuple(w)))
            fresh += 1
        elif kind == 1 and p.relators and p.generators:
            steps = data.draw(
                st.lists(
                    st.tuples(
                        st.lists(st.tuples(st.sampled_from(p.generators), st.sampled_from((1, -1))), max_size=3).map(tuple),
                        st.integers(0, len(p.relators) - 1),
                        st.sampled_from((1, -1)),
                    ),
                    min_size=1,
                    max_size=3,
                )
            )
            w = tz.evaluate_derivation(p.relators, steps)
            p = tz.tietze(p, tz.AddRelator(w, steps))
        elif kind == 2:
            for k, r in enumerate(p.relators):
                once = [n for n in p.generators if sum(1 for x, _ in r if x == n) == 1]
                if once:
                    p = tz.tietze(p, tz.RemoveGen(once[0], k))
                    break
        else:
            p = tz.tietze(p, tz.Simplify())
        assert not p.extended
        assert snf.abelianization(p) == ab


# ---------------------------------------------------------------- Reidemeister-Schreier


@settings(max_examples=60)
@given(st.integers(1, 8), st.data())
def test_nielsen_schreier(n, data):
    gens = tuple(f"x{i}" for i in range(n))
    signs = data.draw(st.lists(st.sampled_from((1, -1)), min_size=n, max_size=n).filter(lambda s: -1 in s))
    q = rs.reidemeister_schreier_index2(Presentation(gens, ()), dict(zip(gens, signs)))
    assert len(q.generators) == 2 * n - 1 and not q.relators


@settings(max_examples=60)
@given(presentations, st.data())
def test_rs_euler_law(p, data):
    signs = data.draw(st.lists(st.sampled_from((1, -1)), min_size=3, max_size=3).filter(lambda s: -1 in s))
    sign = dict(zip(GENS, signs))
    p = Presentation(p.generators, tuple(r for r in p.relators if rs.word_sign(r, sign) == 1))
    q = rs.reidemeister_schreier_index2(p, sign)
    assert rs.euler_defect(q) == 2 * rs.euler_defect(p) - 1
    # a finite-index subgroup has free rank at least that of the group
    assert snf.abelianization(q).free_rank >= snf.abelianization(p).free_rank


# ---------------------------------------------------------------- coset enumeration


def two_gen(p_, q_, r_, extra):
    rels = [(("a", 1),) * p_, (("b", 1),) * q_, (("a", 1), ("b", 1)) * r_] + [free_reduce(w) for w in extra]
    return Presentation(("a", "b"), tuple(rels))


two_words = st.lists(st.tuples(st.sampled_from(("a", "b")), st.sampled_from((1, -1))), max_size=8).map(tuple)


@settings(max_examples=60)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(1, 5), st.lists(two_words, max_size=2))
def test_order_divisible_by_abelianization(p_, q_, r_, extra):
    g = two_gen(p_, q_, r_, extra)
    res = todd_coxeter(g, [], 5000)
    if not isinstance(res, Index):
        return
    ab = snf.abelianization(g)
    assert ab.free_rank == 0
    assert res.value % math.prod(ab.torsion) == 0
