"""Maximal trees in the 1-skeleton of X and the determinability closure.

Each non-base vertex ``v = [b]`` is attached to the tree by one edge
``<a; b>`` whose auxiliary curve ``a`` is chosen by a rule depending on the
shape of ``F_b``.  The rules are predicates on the representative diagram of
an edge, where curve 1 is ``a`` and curve 2 is ``b``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from . import diagram as dg
from .complex import ONE_SIDED, QuotientComplex, VertexG1, g1_label
from .orbits import classify_vertex


class NotATree(RuntimeError):
    """The selected edges do not form a spanning tree (an implementation bug)."""


@dataclass(frozen=True)
class TreeAndMarks:
    tree: frozenset[int]
    determinable: frozenset[int]


# ----------------------------------------------------------------------------
# edge anatomy
# ----------------------------------------------------------------------------


@dataclass
class _EdgeView:
    """Where curve a (index 1) sits relative to the cut along b (index 2)."""

    e: dg.CutDiagram
    a_kind: str  # 'one', 'nonsep', 'sep'
    x: dg.ComponentSpec  # component of F_{a,b} carrying a's first slot
    fb: dg.CutDiagram
    host: int  # position in fb of the component containing a

    @property
    def host_comp(self) -> dg.ComponentSpec:
        return self.fb.components[self.host]

    def x_exterior_same_sign(self) -> bool:
        signs = {self.e.sign(s) for s in self.x.slots if self.e.role(s)[0] == "c"}
        return len(signs) <= 1


def _view(e: dg.CutDiagram) -> _EdgeView:
    a = e.curve(1)
    first = e.owner(a.slots[0])
    if not a.two_sided:
        kind = "one"
    elif e.owner(a.slots[1]) == first:
        kind = "nonsep"
    else:
        kind = "sep"
    fb, cmap = dg.cut_subfamily_with_map(e, [2], renumber=True)
    return _EdgeView(e, kind, e.components[first], fb, cmap[first])


def _has_label(comp: dg.ComponentSpec, d: dg.CutDiagram, label: int) -> bool:
    return any(d.role(s) == ("c", label) for s in comp.slots)


def _two_sided_nonsep(v: _EdgeView) -> bool:
    return v.a_kind == "nonsep"


# ----------------------------------------------------------------------------
# per-genus rules
# ----------------------------------------------------------------------------


def _rule_genus_ge3(g: int, n: int, v: _EdgeView) -> bool:
    fb = v.fb
    if len(fb.components) == 1:
        whole = fb.components[0]
        if whole.orientable:
            return _two_sided_nonsep(v)
        if g == 3:
            return _two_sided_nonsep(v) and v.x.orientable and v.x_exterior_same_sign()
        return _two_sided_nonsep(v) and not v.x.orientable
    p, q = fb.components
    if p.orientable or q.orientable:
        N, Np = (0, 1) if p.orientable else (1, 0)
        if fb.components[N].genus >= 1:
            return _two_sided_nonsep(v) and v.host == N
        return _two_sided_nonsep(v) and v.host == Np and not v.x.orientable
    if p.genus != q.genus:
        N = 0 if p.genus > q.genus else 1
    elif n >= 1:
        N = 0 if _has_label(p, fb, 1) else 1
    else:
        N = v.host
    if v.host != N or not _two_sided_nonsep(v):
        return False
    if fb.components[N].genus >= 3:
        return not v.x.orientable
    return v.x.orientable and v.x_exterior_same_sign()


def _rule_genus2(n: int, v: _EdgeView, dst_kind: str) -> bool:
    fb = v.fb
    if dst_kind == "nonsep_or":
        # a separates c_1, c_2 off in a pair of pants
        if v.a_kind != "sep":
            return False
        a = v.e.curve(1)
        for s in a.slots:
            comp = v.e.components[v.e.owner(s)]
            roles = sorted(v.e.role(t) for t in comp.slots)
            if comp.orientable and comp.genus == 0 and roles == [("c", 1), ("c", 2), ("t", 1)]:
                return True
        return False
    if v.a_kind != "one":
        return False
    p, q = fb.components
    if p.orientable or q.orientable:
        return not fb.components[v.host].orientable
    N = 0 if _has_label(p, fb, 1) else 1
    return v.host == N and v.x.orientable and v.x_exterior_same_sign()


# ----------------------------------------------------------------------------
# tree construction
# ----------------------------------------------------------------------------


def _base_vertex(x: QuotientComplex, g: int) -> int:
    want = "one" if g == 2 else "two"
    for c in x.vertices:
        d = c.rep
        if classify_vertex(d) == "nonsep_nonor" and (d.curve(1).two_sided == (want == "two")):
            return c.id
    raise NotATree("no base vertex in the complex")


def _check_tree(x: QuotientComplex, tree: Iterable[int]) -> None:
    tree = list(tree)
    parent = list(range(len(x.vertices)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for eid in tree:
        e = x.edges[eid]
        a, b = find(e.src), find(e.dst)
        if a == b:
            raise NotATree(f"edge {eid} closes a cycle")
        parent[a] = b
    if len(tree) != len(x.vertices) - 1:
        raise NotATree(f"{len(tree)} edges for {len(x.vertices)} vertices")


def _least(x: QuotientComplex, candidates: list[int]) -> int:
    if x.symbolic:
        return min(candidates)
    return min(candidates, key=lambda i: dg.canonical_form(x.edges[i].rep))


def _g1_tree(x: QuotientComplex, n: int) -> list[int]:
    label_of = {}
    for c in x.vertices:
        label_of[c.id] = c.label if c.label is not None else g1_label(c.rep)
    by_label = {lab: i for i, lab in label_of.items()}
    by_pair = defaultdict(list)
    for e in x.edges:
        by_pair[e.src, e.dst].append(e.id)
    tree = []
    for vid, lab in sorted(label_of.items()):
        if lab.kind == ONE_SIDED:
            if not lab.I:
                continue
            src = vid
            dst = by_label[VertexG1.separating((), lab.complement(n))]
            # the edge from v_I to v_{0,I'}
            tree.append(_least(x, by_pair[src, dst]))
        elif lab.I:
            src = by_label[VertexG1.one_sided(lab.I, n)]
            tree.append(_least(x, by_pair[src, vid]))
        else:
            src = by_label[VertexG1.one_sided((), n)]
            tree.append(_least(x, by_pair[src, vid]))
    return tree


def build_maximal_tree(x: QuotientComplex, g: int, n: int) -> TreeAndMarks:
    if g == 1:
        tree = _g1_tree(x, n)
    else:
        if x.symbolic:
            raise NotATree("symbolic complexes only exist for genus one")
        base = _base_vertex(x, g)
        kinds = {c.id: classify_vertex(c.rep) for c in x.vertices}
        incoming: dict[int, list[int]] = defaultdict(list)
        for e in x.edges:
            incoming[e.dst].append(e.id)
        tree = []
        for c in x.vertices:
            if c.id == base:
                continue
            picks = []
            for eid in incoming[c.id]:
                e = x.edges[eid]
                view = _view(e.rep)
                if g == 2:
                    if kinds[c.id] != "nonsep_or" and e.src != base:
                        continue
                    ok = _rule_genus2(n, view, kinds[c.id])
                else:
                    ok = e.src == base and _rule_genus_ge3(g, n, view)
                if ok:
                    picks.append(eid)
            if not picks:
                raise NotATree(f"no tree edge found for vertex {c.id}")
            tree.append(_least(x, picks))
    _check_tree(x, tree)
    tree = frozenset(tree)
    return TreeAndMarks(tree, tree)


def determinability_closure(x: QuotientComplex, tree: Iterable[int], ordered: bool = False) -> frozenset[int]:
    """Least set containing ``tree`` closed under the two-of-three triangle rule.

    By default an edge and its reverse are one class; ``ordered=True`` keeps
    them apart.
    """
    if ordered:
        key = lambda e: e
    else:
        key = lambda e: min(e, x.edges[e].reverse) if x.edges[e].reverse is not None else e
    marked = {key(e) for e in tree}
    tris = [tuple(key(e) for e in t) for t in x.triangles]
    by_edge = defaultdict(list)
    for i, t in enumerate(tris):
        for k in set(t):
            by_edge[k].append(i)
    work = list(marked)
    while work:
        k = work.pop()
        for i in by_edge[k]:
            t = tris[i]
            missing = {k2 for k2 in t if k2 not in marked}
            if len(missing) == 1 and sum(1 for k2 in t if k2 in marked) >= 2:
                new = missing.pop()
                marked.add(new)
                work.append(new)
    return frozenset(e.id for e in x.edges if key(e.id) in marked)


def tree_and_closure(x: QuotientComplex, g: int, n: int, ordered: bool = False) -> TreeAndMarks:
    t = build_maximal_tree(x, g, n)
    return TreeAndMarks(t.tree, determinability_closure(x, t.tree, ordered))
