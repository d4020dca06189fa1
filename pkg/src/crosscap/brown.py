"""Presentations of a group acting on a simply connected complex.

The input is the quotient complex data up to dimension 2: a presentation of
each vertex stabilizer, for each edge a generator ``g_e`` with the words
``i_e(s)`` (over the initial vertex) and ``c_e(s)`` (over the terminal
vertex) for each generator ``s`` of the edge stabilizer, the maximal tree,
and for each triangle the words ``h_a, h_b, h_c, h``.  The output has

* the vertex generators and relators,
* ``g_e = 1`` for tree edges,
* ``g_e^-1 i_e(s) g_e = c_e(s)`` for every edge and edge generator,
* ``h_a g_a h_b g_b h_c g_c^-1 = h`` for every triangle.

With ``reduce`` the edge generators are eliminated in determinability
order: tree edges first, then any triangle with exactly one unresolved edge
is solved for it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping, Optional

from .presentation import (
    Presentation,
    PresentationError,
    Word,
    inverse,
    letter,
    mul,
    parse_expr,
    substitute,
    word_from_json,
)


class IncompleteData(ValueError):
    pass


class NotDeterminable(RuntimeError):
    def __init__(self, partial: Presentation, stuck: list[int]):
        super().__init__(f"edges {stuck} are not determinable")
        self.partial = partial
        self.stuck = stuck


@dataclass(frozen=True)
class EdgeData:
    id: int
    src: int
    dst: int
    tree: bool
    # (i_e(s), c_e(s)) per edge-stabilizer generator s
    gens: tuple[tuple[Word, Word], ...] = ()
    name: Optional[str] = None


@dataclass(frozen=True)
class TriangleData:
    edges: tuple[int, int, int]
    h_a: Word = ()
    h_b: Word = ()
    h_c: Word = ()
    h: Word = ()


@dataclass(frozen=True)
class BrownData:
    vertices: Mapping[int, Presentation]
    edges: tuple[EdgeData, ...] = ()
    triangles: tuple[TriangleData, ...] = ()


def _edge_names(d: BrownData) -> dict[int, str]:
    taken = {g for p in d.vertices.values() for g in p.generators}
    names = {}
    for e in d.edges:
        name = e.name or f"g{e.id}"
        while name in taken:
            name += "_"
        taken.add(name)
        names[e.id] = name
    return names


def _check(d: BrownData) -> None:
    seen = set()
    for p in d.vertices.values():
        clash = seen & set(p.generators)
        if clash:
            raise IncompleteData(f"vertex generators {sorted(clash)} are shared between vertices")
        seen |= set(p.generators)

    def over(w: Word, gens, what):
        bad = [n for n, _ in w if n not in gens]
        if bad:
            raise IncompleteData(f"{what} uses {bad[0]!r} outside its generator set")

    edges = {}
    for e in d.edges:
        if e.id in edges:
            raise IncompleteData(f"duplicate edge {e.id}")
        if e.src not in d.vertices or e.dst not in d.vertices:
            raise IncompleteData(f"edge {e.id} has an unknown endpoint")
        for iw, cw in e.gens:
            over(iw, set(d.vertices[e.src].generators), f"i-word of edge {e.id}")
            over(cw, set(d.vertices[e.dst].generators), f"c-word of edge {e.id}")
        edges[e.id] = e
    for t in d.triangles:
        if any(k not in edges for k in t.edges):
            raise IncompleteData(f"triangle {t.edges} uses an unknown edge")
        a, b, c = (edges[k] for k in t.edges)
        if not (c.src == a.src and a.dst == b.src and b.dst == c.dst):
            raise IncompleteData(f"triangle {t.edges} does not compose")
        for w in (t.h_a, t.h_b, t.h_c, t.h):
            over(w, seen, f"triangle {t.edges}")


def _triangle_relator(t: TriangleData, g: Mapping[int, Word]) -> Word:
    a, b, c = t.edges
    return mul(t.h_a, g[a], t.h_b, g[b], t.h_c, inverse(g[c]), inverse(t.h))


def _solve(t: TriangleData, g: Mapping[int, Word], unknown: int) -> Word:
    a, b, c = t.edges
    if unknown == a:
        return mul(inverse(t.h_a), t.h, g[c], inverse(t.h_c), inverse(g[b]), inverse(t.h_b))
    if unknown == b:
        return mul(inverse(t.h_b), inverse(g[a]), inverse(t.h_a), t.h, g[c], inverse(t.h_c))
    return mul(inverse(t.h), t.h_a, g[a], t.h_b, g[b], t.h_c)


def brown_assembly(d: BrownData, reduce: bool = False) -> Presentation:
    _check(d)
    names = _edge_names(d)
    vgens = [g for v in sorted(d.vertices) for g in d.vertices[v].generators]
    vrels = [r for v in sorted(d.vertices) for r in d.vertices[v].relators]
    symbol = {e.id: letter(names[e.id]) for e in d.edges}

    def conj_relators(g):
        out = []
        for e in d.edges:
            for iw, cw in e.gens:
                out.append(mul(inverse(g[e.id]), iw, g[e.id], inverse(cw)))
        return out

    if not reduce:
        gens = vgens + [names[e.id] for e in d.edges]
        r1 = [symbol[e.id] for e in d.edges if e.tree]
        r3 = [_triangle_relator(t, symbol) for t in d.triangles]
        return Presentation(tuple(gens), tuple(vrels + r1 + conj_relators(symbol) + r3))

    resolved: dict[int, Word] = {e.id: () for e in d.edges if e.tree}
    changed = True
    while changed:
        changed = False
        for t in d.triangles:
            missing = [k for k in t.edges if k not in resolved]
            if len(missing) == 1:
                # solvable: the unknown occurs once in the relator
                resolved[missing[0]] = _solve(t, resolved, missing[0])
                changed = True
    images = {names[k]: w for k, w in resolved.items()}
    g = {e.id: resolved.get(e.id, symbol[e.id]) for e in d.edges}
    stuck = [e.id for e in d.edges if e.id not in resolved]
    gens = vgens + [names[k] for k in stuck]
    r3 = [substitute(_triangle_relator(t, symbol), images) for t in d.triangles]
    rels = vrels + conj_relators(g) + [r for r in r3 if r]
    out = Presentation(tuple(gens), tuple(rels))
    if stuck:
        raise NotDeterminable(out, stuck)
    return out


def eliminated_edges(d: BrownData) -> set[int]:
    """Edges whose generator ``reduce=True`` removes."""
    try:
        p = brown_assembly(d, reduce=True)
        kept = set(p.generators)
    except NotDeterminable as exc:
        return {e.id for e in d.edges} - set(exc.stuck)
    names = _edge_names(d)
    return {e.id for e in d.edges if names[e.id] not in kept}


# ----------------------------------------------------------------------------
# JSON
# ----------------------------------------------------------------------------


def _word(data: Any) -> Word:
    if isinstance(data, str):
        return parse_expr(data)
    return word_from_json(data)


def brown_from_json(data: Mapping) -> BrownData:
    try:
        vertices = {}
        for v in data["vertices"]:
            rels = tuple(_word(r) for r in v.get("relators", []))
            vertices[int(v["id"])] = Presentation(tuple(v.get("generators", [])), rels)
        edges = tuple(
            EdgeData(
                int(e["id"]),
                int(e["src"]),
                int(e["dst"]),
                bool(e.get("tree", False)),
                tuple((_word(s["i"]), _word(s["c"])) for s in e.get("gens", [])),
                e.get("name"),
            )
            for e in data.get("edges", [])
        )
        triangles = tuple(
            TriangleData(
                tuple(int(k) for k in t["edges"]),
                _word(t.get("h_a", [])),
                _word(t.get("h_b", [])),
                _word(t.get("h_c", [])),
                _word(t.get("h", [])),
            )
            for t in data.get("triangles", [])
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, PresentationError):
            raise
        raise IncompleteData(f"bad Brown data: {exc!r}") from None
    for t in triangles:
        if len(t.edges) != 3:
            raise IncompleteData("a triangle has exactly three edges")
    return BrownData(vertices, edges, triangles)


def load_brown(path: str) -> BrownData:
    with open(path) as fh:
        return brown_from_json(json.load(fh))
