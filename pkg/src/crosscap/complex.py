"""The quotient complex X of ordered curve families, up to dimension 2.

Vertices, edges and triangles are orbits of ordered families of 1, 2 and 3
curves.  A triangle <a_1, a_2, a_3> has edges a = <a_1, a_2> (u -> v),
b = <a_2, a_3> (v -> w) and c = <a_1, a_3> (u -> w), stored in that order.

For genus one there is also a purely combinatorial model whose vertices are
labels ``v_{I,J}`` (separating) and ``v_I`` (one-sided).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

from . import diagram as dg
from .orbits import DEFAULT_CANDIDATE_CAP, NotApplicable, enumerate_levels

SEPARATING = "separating"
ONE_SIDED = "one_sided"


@dataclass(frozen=True, order=True)
class VertexG1:
    """Genus-one vertex label in normalized form."""

    kind: str
    I: tuple[int, ...]
    J: tuple[int, ...] = ()

    @staticmethod
    def separating(I: Iterable[int], J: Iterable[int]) -> "VertexG1":
        I, J = tuple(sorted(I)), tuple(sorted(J))
        if set(I) & set(J):
            raise ValueError("I and J must be disjoint")
        if (len(I), I) > (len(J), J):
            I, J = J, I
        return VertexG1(SEPARATING, I, J)

    @staticmethod
    def one_sided(I: Iterable[int], n: int) -> "VertexG1":
        I = tuple(sorted(I))
        comp = tuple(k for k in range(1, n + 1) if k not in I)
        if 2 * len(I) > n or (2 * len(I) == n and 1 not in I):
            I = comp
        return VertexG1(ONE_SIDED, I)

    def complement(self, n: int) -> tuple[int, ...]:
        used = set(self.I) | set(self.J)
        return tuple(k for k in range(1, n + 1) if k not in used)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "I": list(self.I)}
        if self.kind == SEPARATING:
            out["J"] = list(self.J)
        return out

    @staticmethod
    def from_json(data: dict) -> "VertexG1":
        return VertexG1(data["kind"], tuple(data["I"]), tuple(data.get("J", ())))

    def __str__(self):
        fmt = lambda s: "{" + ",".join(map(str, s)) + "}"
        if self.kind == SEPARATING:
            return f"v_{fmt(self.I)},{fmt(self.J)}"
        return f"v_{fmt(self.I)}"


@dataclass
class Cell:
    id: int
    rep: Any
    label: Optional[VertexG1] = None


@dataclass
class Edge:
    id: int
    src: int
    dst: int
    rep: Any = None
    reverse: Optional[int] = None


@dataclass
class QuotientComplex:
    genus: int
    boundary: int
    vertices: list[Cell]
    edges: list[Edge]
    triangles: list[tuple[int, int, int]]
    symbolic: bool = False
    tree: list[int] = field(default_factory=list)
    determinable: list[int] = field(default_factory=list)

    def check_faces(self) -> None:
        """Structural check: every triangle composes head to tail."""
        nv = len(self.vertices)
        for e in self.edges:
            if not (0 <= e.src < nv and 0 <= e.dst < nv):
                raise ValueError(f"edge {e.id} has a dangling endpoint")
        for a, b, c in self.triangles:
            ea, eb, ec = self.edges[a], self.edges[b], self.edges[c]
            if not (ec.src == ea.src and ea.dst == eb.src and eb.dst == ec.dst):
                raise ValueError(f"triangle {(a, b, c)} does not compose")


def g1_label(d: dg.CutDiagram) -> VertexG1:
    """Genus-one label of a single-curve diagram."""
    n = d.target.boundary
    if len(d.components) == 1:
        comp = d.components[0]
        cls = [k for k, s in d.exterior if d.sign(s) == 1]
        return VertexG1.one_sided(cls, n)
    comp = next(c for c in d.components if c.orientable)
    ext = [(k, d.sign(s)) for k, s in d.exterior if s in comp.slots]
    return VertexG1.separating([k for k, sg in ext if sg == 1], [k for k, sg in ext if sg == -1])


def build_quotient_complex(g: int, n: int, cap: int = DEFAULT_CANDIDATE_CAP) -> QuotientComplex:
    levels = enumerate_levels(g, n, 3, cap)
    verts, edge_reps, tri_reps = levels
    vindex = {dg.orbit_signature(d): i for i, d in enumerate(verts)}
    eindex = {dg.orbit_signature(d): i for i, d in enumerate(edge_reps)}

    def lookup(table, d):
        sig = dg.orbit_signature(d)
        if sig not in table:
            raise RuntimeError("face of an enumerated simplex is missing from the level below")
        return table[sig]

    vertices = [Cell(i, d, g1_label(d) if g == 1 else None) for i, d in enumerate(verts)]
    edges = []
    for i, d in enumerate(edge_reps):
        src = lookup(vindex, dg.cut_subfamily(d, [1]))
        dst = lookup(vindex, dg.cut_subfamily(d, [2]))
        rev = lookup(eindex, dg.relabel(d, {1: 2, 2: 1}))
        edges.append(Edge(i, src, dst, d, rev))
    triangles = []
    for d in tri_reps:
        a = lookup(eindex, dg.cut_subfamily(d, [1, 2]))
        b = lookup(eindex, dg.cut_subfamily(d, [2, 3]))
        c = lookup(eindex, dg.cut_subfamily(d, [1, 3]))
        triangles.append((a, b, c))
    x = QuotientComplex(g, n, vertices, edges, triangles)
    x.check_faces()
    return x


# ----------------------------------------------------------------------------
# genus one, symbolic
# ----------------------------------------------------------------------------


def g1_vertices(n: int) -> list[VertexG1]:
    out = set()
    labels = range(1, n + 1)
    for s in range(2, n):
        for support in itertools.combinations(labels, s):
            for k in range(0, s + 1):
                for I in itertools.combinations(support, k):
                    J = [x for x in support if x not in I]
                    out.add(VertexG1.separating(I, J))
    for k in range(0, n + 1):
        for I in itertools.combinations(labels, k):
            out.add(VertexG1.one_sided(I, n))
    return sorted(out, key=lambda v: (v.kind != ONE_SIDED, len(v.I) + len(v.J), v.I, v.J))


def g1_adjacent(v: VertexG1, w: VertexG1, n: int) -> bool:
    if v.kind == ONE_SIDED and w.kind == ONE_SIDED:
        return False
    if v.kind == ONE_SIDED or w.kind == ONE_SIDED:
        if w.kind == ONE_SIDED:
            v, w = w, v
        I, Ic = set(v.I), set(v.complement(n))
        J, K = set(w.I), set(w.J)
        return (J <= I and K <= Ic) or (K <= I and J <= Ic)
    if v == w:
        return False
    I, J, K, L = map(set, (v.I, v.J, w.I, w.J))
    if not (I | J) & (K | L):
        return True
    for (p, q), (s, t) in (((I, J), (K, L)), ((K, L), (I, J))):
        if len(p) + len(q) < len(s) + len(t):
            if (p <= s and q <= t) or (p <= t and q <= s):
                return True
    return False


def g1_symbolic_complex(n: int) -> QuotientComplex:
    if n < 5:
        raise NotApplicable("the symbolic genus-one model needs n >= 5")
    labels = g1_vertices(n)
    vertices = [Cell(i, None, v) for i, v in enumerate(labels)]
    adj = {}
    edges = []
    for i, v in enumerate(labels):
        for j, w in enumerate(labels):
            if i != j and g1_adjacent(v, w, n):
                adj[i, j] = len(edges)
                edges.append(Edge(len(edges), i, j))
    for e in edges:
        e.reverse = adj[e.dst, e.src]
    nbrs: dict[int, set[int]] = {i: set() for i in range(len(labels))}
    for i, j in adj:
        nbrs[i].add(j)
    triangles = []
    for u in range(len(labels)):
        for v in sorted(nbrs[u]):
            for w in sorted(nbrs[u] & nbrs[v]):
                triangles.append((adj[u, v], adj[v, w], adj[u, w]))
    x = QuotientComplex(1, n, vertices, edges, triangles, symbolic=True)
    x.check_faces()
    return x


# ----------------------------------------------------------------------------
# JSON
# ----------------------------------------------------------------------------


def complex_to_json(x: QuotientComplex) -> dict:
    def vrep(c: Cell):
        out = {"id": c.id}
        if c.rep is not None:
            out["rep"] = dg.to_json(c.rep)
        if c.label is not None:
            out["label"] = c.label.to_json()
        return out

    return {
        "genus": x.genus,
        "boundary": x.boundary,
        "symbolic": x.symbolic,
        "vertices": [vrep(c) for c in x.vertices],
        "edges": [
            {
                "id": e.id,
                "src": e.src,
                "dst": e.dst,
                "rep": None if e.rep is None else dg.to_json(e.rep),
                "reverse": e.reverse,
            }
            for e in x.edges
        ],
        "triangles": [list(t) for t in x.triangles],
        "tree": sorted(x.tree),
        "determinable": sorted(x.determinable),
    }


def complex_from_json(data: dict) -> QuotientComplex:
    try:
        vertices = []
        for v in data["vertices"]:
            rep = dg.from_json(v["rep"]) if v.get("rep") is not None else None
            label = VertexG1.from_json(v["label"]) if v.get("label") is not None else None
            vertices.append(Cell(int(v["id"]), rep, label))
        edges = [
            Edge(
                int(e["id"]),
                int(e["src"]),
                int(e["dst"]),
                dg.from_json(e["rep"]) if e.get("rep") is not None else None,
                e.get("reverse"),
            )
            for e in data["edges"]
        ]
        triangles = [tuple(int(i) for i in t) for t in data["triangles"]]
        x = QuotientComplex(
            int(data.get("genus", 0)),
            int(data.get("boundary", 0)),
            vertices,
            edges,
            triangles,
            bool(data.get("symbolic", False)),
            list(data.get("tree", [])),
            list(data.get("determinable", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad complex JSON: {exc!r}") from None
    if [c.id for c in x.vertices] != list(range(len(x.vertices))) or [e.id for e in x.edges] != list(
        range(len(x.edges))
    ):
        raise ValueError("vertex and edge ids must be 0..k-1 in order")
    x.check_faces()
    return x


def dump_complex(x: QuotientComplex, path) -> None:
    with open(path, "w") as fh:
        json.dump(complex_to_json(x), fh, separators=(",", ":"))


def load_complex(path) -> QuotientComplex:
    with open(path) as fh:
        return complex_from_json(json.load(fh))
