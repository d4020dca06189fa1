"""Presentations of the sporadic mapping class groups, with checkable claims.

Entries are stored as relation strings in the expression syntax of
:func:`crosscap.presentation.parse_expr`, one string per numbered relation,
so a relation ``L = M = R`` keeps its number while lowering to two relators.
Generator names follow the twist symbols: ``A23`` is the twist about the curve
usually written with subscript 23, ``U`` is the crosscap-slide-like element of
the holed Klein bottle, ``C1`` the twist about the first boundary curve.

Entry ids:

* ``M<g>.<n>`` -- the mapping class group of the non-orientable surface of
  genus g with n boundary components;
* ``PM<g>.0.<k>`` -- the pure orientation-preserving group of the closed
  surface of genus g with k marked points;
* ``T3``, ``T2`` -- tori with three and two holes.

Claims are limited to decidable checks: abelianizations, lattice membership
of relations in the abelianization, bounded coset enumeration and freeness of
relator-free presentations.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Optional, Sequence, Union

from .extension import ExtensionData, extension_presentation, free_abelian
from .presentation import (
    Presentation,
    Word,
    parse_expr,
    parse_relations,
    substitute,
    to_text,
    word_to_str,
)
from .snf import AbelianGroup, abelian_consequence_check, abelianization
from .tietze import simplify
from .todd_coxeter import DEFAULT_MAX_COSETS, Index, todd_coxeter

# ----------------------------------------------------------------------------
# types
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    label: str
    text: str

    def words(self) -> list[Word]:
        return parse_relations(self.text)


@dataclass(frozen=True)
class AbelianizationEquals:
    torsion: tuple[int, ...]
    free_rank: int

    def describe(self) -> str:
        return f"abelianization is {AbelianGroup(self.torsion, self.free_rank)}"


@dataclass(frozen=True)
class IsomorphicToProductAb:
    """ab(entry) equals ab of a central extension of ``quotient`` by ``Z^k``.

    ``corrections`` lists ``(relation label, relator position, kernel word)``:
    the lifted relator is set equal to the kernel word.  With no corrections
    this is the abelianization of the direct product.
    """

    kernel: tuple[str, ...]
    quotient: str
    corrections: tuple[tuple[str, int, str], ...] = ()

    def describe(self) -> str:
        k = "Z" if len(self.kernel) == 1 else f"Z^{len(self.kernel)}"
        return f"ab agrees with central {k} extension of {self.quotient}"


@dataclass(frozen=True)
class RelationHoldsAb:
    label: str
    word: Word

    def describe(self) -> str:
        return f"relation {self.label} holds in the abelianization"


@dataclass(frozen=True)
class FiniteIndexEquals:
    subgroup: tuple[str, ...]
    index: int

    def describe(self) -> str:
        sub = ", ".join(self.subgroup) or "1"
        return f"<{sub}> has index {self.index}"


@dataclass(frozen=True)
class FreeOfRank:
    rank: int

    def describe(self) -> str:
        return f"free of rank {self.rank}"


Claim = Union[AbelianizationEquals, IsomorphicToProductAb, RelationHoldsAb, FiniteIndexEquals, FreeOfRank]


@dataclass(frozen=True)
class SporadicEntry:
    id: str
    surface: Union[tuple[int, int], str]
    theorem: str
    generators: tuple[str, ...]
    relations: tuple[Relation, ...]
    claims: tuple[Claim, ...] = ()
    # a formula from the statement the entry transcribes
    quote: str = ""

    @property
    def presentation(self) -> Presentation:
        rels = []
        for r in self.relations:
            rels.extend(r.words())
        return Presentation(self.generators, tuple(rels))

    def relators_of(self, label: str) -> list[Word]:
        for r in self.relations:
            if r.label == label:
                return r.words()
        raise KeyError(label)


# ----------------------------------------------------------------------------
# transcription helpers
# ----------------------------------------------------------------------------


def _rels(*pairs: tuple[str, str]) -> tuple[Relation, ...]:
    return tuple(Relation(label, text) for label, text in pairs)


def _commuting(label: str, xs: Sequence[str], ys: Sequence[str]) -> list[Relation]:
    """``x y = y x`` for each pair with ``x`` in xs, ``y`` in ys, ``x != y``."""
    out = []
    seen = set()
    for x in xs:
        for y in ys:
            if x == y or frozenset((x, y)) in seen:
                continue
            seen.add(frozenset((x, y)))
            out.append(Relation(label, f"{x} {y} = {y} {x}"))
    return out


def _derived(label: str, text: str, macros: Mapping[str, str]) -> list[RelationHoldsAb]:
    """Claims for a derived relation written with lower-case macro names for
    the images of loops; ``L = M = R`` gives one claim per equality."""
    images = {k: parse_expr(v) for k, v in macros.items()}
    words = [substitute(w, images) for w in parse_relations(text)]
    if len(words) == 1:
        return [RelationHoldsAb(label, words[0])]
    return [RelationHoldsAb(f"{label}.{k + 1}", w) for k, w in enumerate(words)]


def _claims_from(label_texts: Sequence[tuple[str, str]], macros: Mapping[str, str]) -> tuple[RelationHoldsAb, ...]:
    out: list[RelationHoldsAb] = []
    for label, text in label_texts:
        out.extend(_derived(label, text, macros))
    return tuple(out)


# ----------------------------------------------------------------------------
# genus one
# ----------------------------------------------------------------------------

_PM14_GENS = ("A3", "A4", "A23", "A24", "A34", "B23", "B24", "B34", "D")

_PM14_RELS = _rels(
    ("1", "A23 A4 = A4 A23"),
    ("1", "A24 A3 = A3 A24"),
    ("2", "A3^-1 A4 A34 B34 = B34 A3^-1 A4 A34"),
    ("3", "A4 A34 A24 B23 = B23 A4 A34 A24"),
    ("4", "A34 A3^-1 A23 B24 = B24 A34 A3^-1 A23"),
    ("5", "A34 A24 A23 = A24 A23 A34 = A23 A34 A24"),
    ("6", "B34 A23 B24 = A23 B24 B34 = B24 B34 A23"),
    ("7", "A4 A34 A3^-1 = A34 A3^-1 A4 = A3^-1 A4 A34"),
    ("8", "A34^-1 B24 B23 = B24 B23 A34^-1 = B23 A34^-1 B24"),
    ("9", "A24 B23 D^-1 = B23 D^-1 A24 = D^-1 A24 B23"),
    ("10", "D = A34^-1 A4^-1 B34 A4 A34"),
)

# conjugation identities used while building the four-point presentation
_PM14_DERIVED = (
    ("d1", "A23 A34 A23^-1 = A24^-1 A34 A24"),
    ("d2", "A23 A34 A24 A23^-1 = A34 A24"),
    ("d3", "A3 A34^-1 B24 A34 A3^-1 = A23 B24 A23^-1"),
)


def _genus_one() -> list[SporadicEntry]:
    pm13 = ("A3", "A23", "B23")
    m13_rels = tuple(_commuting("C", ("C1", "C2", "C3"), ("C1", "C2", "C3") + pm13))
    m14_rels = tuple(_commuting("C", ("C1", "C2", "C3", "C4"), ("C1", "C2", "C3", "C4") + _PM14_GENS))
    return [
        SporadicEntry(
            "M1.0", (1, 0), "M(N_1): trivial", (), (),
            (AbelianizationEquals((), 0),), "trivial",
        ),
        SporadicEntry(
            "M1.1", (1, 1), "M(N_1^1): trivial", (), (),
            (AbelianizationEquals((), 0),), "trivial",
        ),
        SporadicEntry(
            "M1.2", (1, 2), "M(N_1^2): boundary twists", ("C1", "C2"),
            _rels(("C", "C1 C2 = C2 C1")),
            (AbelianizationEquals((), 2),), "Z^2",
        ),
        SporadicEntry(
            "PM1.0.3", "PM+(N1, 3 points)", "PM+(N_1, 3 points): free", pm13, (),
            (FreeOfRank(3), AbelianizationEquals((), 3)), "free on A3, A23, B23",
        ),
        SporadicEntry(
            "M1.3", (1, 3), "M(N_1^3) = Z^3 x PM+(N_1, 3 points)",
            ("C1", "C2", "C3") + pm13, m13_rels,
            (AbelianizationEquals((), 6), IsomorphicToProductAb(("C1", "C2", "C3"), "PM1.0.3")),
            "Z^3 x PM+",
        ),
        SporadicEntry(
            "PM1.0.4", "PM+(N1, 4 points)", "PM+(N_1, 4 points)", _PM14_GENS, _PM14_RELS,
            _claims_from(_PM14_DERIVED, {}), "D = A34^-1 A4^-1 B34 A4 A34",
        ),
        SporadicEntry(
            "M1.4", (1, 4), "M(N_1^4) = Z^4 x PM+(N_1, 4 points)",
            ("C1", "C2", "C3", "C4") + _PM14_GENS, _PM14_RELS + m14_rels,
            (IsomorphicToProductAb(("C1", "C2", "C3", "C4"), "PM1.0.4"),),
            "Z^4 x PM+",
        ),
    ]


# ----------------------------------------------------------------------------
# genus two
# ----------------------------------------------------------------------------

_PM202_RELS = _rels(
    ("1", "A1 A2 = A2 A1"),
    ("2", "U A1 U^-1 = A1^-1"),
    ("3", "A2 U D2 = D2^-1 A2 U"),
    ("4", "(A2 U)^2 = (D2 U)^2 = 1"),
)

_PM203_RELS = _rels(
    ("1", "A1 A2 = A2 A1"),
    ("1", "A1 A3 = A3 A1"),
    ("1", "A2 A3 = A3 A2"),
    ("2", "U A1 U^-1 = A1^-1"),
    ("3", "A2 U D2 = D2^-1 A2 U"),
    ("4", "(A2 U)^2 = (D2 U)^2 = (U D2)^2"),
    ("5", "(U D3)^2 = (D3 U)^2"),
    ("6", "D3 U D2 U^-1 = U D2 U^-1 D3"),
    ("7", "A3 U D2 D3 = U D2 D3 A3^-1"),
    ("8", "(U A3)^2 = (U D2 D3)^-2"),
    ("9", "A2 (A3 U D2)^2 = (A3 U D2)^2 A2"),
    ("10", "A2 A1^-1 D3 A1 A2^-1 = A3 U D2 D3^-1 (A3 U D2)^-1"),
    ("11", "A1 (A3 U D2)^2 A1^-1 = (U D2)^-1 (A3 U D2)^2 U D2"),
)

# images of the loops generating the two-sided subgroup, three points
_PM203_MACROS = {
    "d23": "(U A3)^2",
    "d12": "(U D2)^-2 (U A3)^-2",
    "eps": "(A3 U D2)^2",
    "d3": "D3",
    "a3": "A3 A2^-1",
}

_PM203_DERIVED = (
    ("i", "U a3 U^-1 = d23 a3^-1 d12 d23"),
    ("ii", "U d3 U^-1 = d3^-1 d12"),
    ("iii", "U d23 U^-1 = d23"),
    ("iv", "U d12 U^-1 = d12"),
    ("v", "U eps U^-1 = d3^-1 d12 d23 a3^-1 eps a3 d23^-1 d12^-1 d3"),
    ("vi", "D2 a3 D2^-1 = d23^-1 d3^-1 eps d3 a3"),
    ("vii", "D2 d3 D2^-1 = d23^-1 d3 d23"),
    ("viii", "D2 d23 D2^-1 = D2 d3^-1 D2^-1 d3 d23"),
    ("ix", "D2 d12 D2^-1 = d12 d23 D2 d23^-1 D2^-1"),
    ("x", "D2 eps D2^-1 = D2 a3 D2^-1 a3^-1 d23"),
    ("xi", "A2 a3 A2^-1 = a3"),
    ("xii", "A2 d3 A2^-1 = d12 d23 a3^-1 eps d3 a3"),
    ("xiii", "A2 d23 A2^-1 = a3^-1 d23 a3"),
    ("xiv", "A2 d12 A2^-1 = d12 d23 A2 d23^-1 A2^-1"),
    ("xv", "A2 eps A2^-1 = eps"),
    ("xvi", "A1 a3 A1^-1 = a3"),
    ("xvii", "A1 d3 A1^-1 = d12 d23 a3^-1 d3 a3 d23^-1"),
    ("xviii", "A1 d23 A1^-1 = d23"),
    ("xix", "A1 d12 A1^-1 = d12"),
    ("xx", "A1 eps A1^-1 = (U D2)^-1 eps U D2"),
    ("K", "(A2 U)^2 = (D2 U)^2 = d23^-1 d12^-1"),
)


def _genus_two() -> list[SporadicEntry]:
    c3 = ("C1", "C2", "C3")
    pm23_gens = ("A1", "A2", "A3", "D2", "D3", "U")
    t23_rels = tuple(r for r in _PM203_RELS if r.label != "8") + (
        Relation("8'", "(U A3)^2 (U D2 D3)^2 = (C1 C2 C3)^2"),
    ) + tuple(_commuting("C", c3, c3 + pm23_gens))
    return [
        SporadicEntry(
            "M2.0", (2, 0), "M(N_2) = Z/2 x Z/2", ("a", "b"),
            _rels(("1", "a^2"), ("2", "b^2"), ("3", "a b a b")),
            (AbelianizationEquals((2, 2), 0), FiniteIndexEquals((), 4)),
            "Z/2 x Z/2",
        ),
        SporadicEntry(
            "M2.1", (2, 1), "M(K): holed Klein bottle", ("A1", "U"),
            _rels(("1", "U A1 U^-1 = A1^-1")),
            (AbelianizationEquals((2,), 1),),
            "U A1 U^-1 = A1^-1",
        ),
        SporadicEntry(
            "PM2.0.1", "PM+(N2, 1 point)", "PM+(N_2, 1 point)", ("A1", "U"),
            _rels(("1", "U A1 U^-1 = A1^-1"), ("2", "U^2 = 1")),
            (AbelianizationEquals((2, 2), 0), FiniteIndexEquals(("A1",), 2)),
            "U^2 = 1",
        ),
        SporadicEntry(
            "PM2.0.2", "PM+(N2, 2 points)", "PM+(N_2, 2 points)", ("A1", "A2", "D2", "U"),
            _PM202_RELS, (), "(A2 U)^2 = (D2 U)^2 = 1",
        ),
        SporadicEntry(
            "M2.2", (2, 2), "M(N_2^2)", ("C1", "A1", "A2", "D2", "U"),
            tuple(_commuting("C", ("C1",), ("A1", "A2", "D2", "U")))
            + _rels(
                ("1", "A1 A2 = A2 A1"),
                ("2", "U A1 U^-1 = A1^-1"),
                ("3", "A2 U D2 = D2^-1 A2 U"),
                ("4", "(A2 U)^2 = (D2 U)^2"),
            ),
            (
                IsomorphicToProductAb(("C1", "C2"), "PM2.0.2", (("4", 1, "C1 C2"),)),
                RelationHoldsAb("K2", parse_expr("(A2 U)^2 (D2 U)^-2")),
            ),
            "(A2 U)^2 = (D2 U)^2",
        ),
        SporadicEntry(
            "PM2.0.3", "PM+(N2, 3 points)", "PM+(N_2, 3 points)", pm23_gens, _PM203_RELS,
            _claims_from(_PM203_DERIVED, _PM203_MACROS), "(U A3)^2 = (U D2 D3)^-2",
        ),
        SporadicEntry(
            "M2.3", (2, 3), "M(N_2^3)", pm23_gens + c3, t23_rels, (),
            "(U A3)^2 (U D2 D3)^2 = (C1 C2 C3)^2",
        ),
    ]


# ----------------------------------------------------------------------------
# tori and genus three
# ----------------------------------------------------------------------------

_T3_GENS = ("C1", "C2", "C3", "A1", "A2", "A3", "B")


def _torus_relations() -> tuple[Relation, ...]:
    cs, as_ = ("C1", "C2", "C3"), ("A1", "A2", "A3")
    rels = _commuting("C", cs, cs + as_ + ("B",)) + _commuting("B", as_, as_)
    rels += [Relation("B", f"{a} B {a} = B {a} B") for a in as_]
    rels.append(Relation("S", "(A1 A2 A3 B)^3 = C1 C2 C3"))
    return tuple(rels)


_PM301_RELS = _rels(
    ("1", "A1 A2 = A2 A1"),
    ("2", "A1 B A1 = B A1 B"),
    ("2", "A2 B A2 = B A2 B"),
    ("3", "U A1 U^-1 = A1^-1"),
    ("4", "U B U^-1 = A2^-1 B^-1 A2"),
    ("5", "(U A2)^2 = 1"),
    ("6", "(A1 A2^2 B)^3 = 1"),
)

_PM301_MACROS = {
    "g": "U^2",
    "a": "A2 A1^-1",
    "b": "A1 A2^-1 B A2 A1^-1 B^-1",
    "d": "U^-1 B A2 A1^-1 B^-1 U B A1 A2^-1 B^-1 A2 A1^-1",
}

_PM301_DERIVED = (
    ("i", "A1 B A1 = B A1 B"),
    ("ii", "U A1 U^-1 = A1^-1"),
    ("iii", "U B U^-1 A1^-1 B A1 = b^-1 a^-1"),
    ("iv", "U^2 = g"),
    ("v", "(A1^3 B)^3 = b^-1 a b a^-1"),
    ("vi", "b^-1 d^-1 g^-1 a^-1 d a b g = 1"),
    ("vii", "A1 a A1^-1 = a"),
    ("viii", "A1 b A1^-1 = a^-1 b"),
    ("ix", "A1 g A1^-1 = g"),
    ("x", "A1 d A1^-1 = g^-1 a^-1 d a"),
    ("xi", "B a B^-1 = a b"),
    ("xii", "B b B^-1 = b"),
    ("xiii", "B g B^-1 = b^-1 g d b"),
    ("xiv", "B d B^-1 = d"),
    ("xv", "U a U^-1 = a^-1 g^-1"),
    ("xvi", "U b U^-1 = g d a b"),
    ("xvii", "U g U^-1 = g"),
    ("xviii", "U d U^-1 = d^-1 g^-1"),
)

_PM302_RELS = (
    tuple(_commuting("1", ("A1", "A2", "A3"), ("A1", "A2", "A3")))
    + tuple(Relation("2", f"{a} B {a} = B {a} B") for a in ("A1", "A2", "A3"))
    + _rels(
        ("3", "U A1 U^-1 = A1^-1"),
        ("4", "U B U^-1 = A3^-1 B^-1 A3"),
        ("5", "U D1 = D1 U"),
        ("6", "U D3 = D3 U"),
        ("7", "B D2 = D2 B"),
        ("8", "(U A2)^2 = D1"),
        ("9", "(A1^2 A3 B)^3 = (U A3)^2 = D3"),
        ("10", "A2^-1 U D2 U^-1 A2 = U B^-1 D1^-1 B U^-1"),
        ("11", "(U D2)^2 D1 D3 = U^2"),
        ("12", "(A1 A2 A3 B)^3 = 1"),
    )
)

_PM302_MACROS = {
    "a2": "A3 A2^-1",
    "b2": "A3^-1 A2 B A2^-1 A3 B^-1",
    "d1": "D1",
    "d2": "D2",
    "d3": "D3",
}

_PM302_DERIVED = (
    ("i", "U B U^-1 A2^-1 B A2 = b2^-1 a2^-1"),
    ("ii", "(U A2)^2 = d1"),
    ("iii", "(A1 A2^2 B)^3 = b2^-1 d3^-1 a2 b2 a2^-1"),
    ("iv", "A1 a2 A1^-1 = A2 a2 A2^-1 = a2"),
    ("v", "A1 b2 A1^-1 = a2^-1 d3 b2"),
    ("vi", "A1 d1 A1^-1 = A2 d1 A2^-1 = U d1 U^-1 = d1"),
    ("vii", "A1 d3 A1^-1 = B d3 B^-1 = U d3 U^-1 = d3"),
    ("viii", "A1 d2 A1^-1 = d3^-1 d1^-1 a2^-1 d3 d2 d3^-1 a2"),
    ("ix", "A2 b2 A2^-1 = a2^-1 b2"),
    ("x", "A2 d3 A2^-1 = a2^-1 d3 a2"),
    ("xi", "A2 d2 A2^-1 = a2^-1 d3^-1 a2 d3 d2 b2 d1^-1 b2^-1 a2^-1 d3 a2"),
    ("xii", "B a2 B^-1 = a2 b2"),
    ("xiii", "B b2 B^-1 = b2"),
    ("xiv", "B d1 B^-1 = b2^-1 d1 d3 d2 b2"),
    ("xv", "B d2 B^-1 = d2"),
    ("xvi", "U a2 U^-1 = d3 a2^-1 d1^-1"),
    ("xvii", "U b2 U^-1 = d1 d3 d2 d3^-1 a2 b2"),
    ("xviii", "U d2 U^-1 = d2^-1 d3^-1 d1^-1"),
)


def _genus_three() -> list[SporadicEntry]:
    pm32_gens = ("A1", "A2", "A3", "B", "D1", "D2", "D3", "U")
    c2 = ("C1", "C2")
    m31_rels = tuple(r for r in _PM301_RELS if r.label in ("1", "2", "3", "4")) + _rels(
        ("5", "(A2 U)^2 = (U A2)^2 = (A1^2 A2 B)^3"),
    )
    m32_rels = (
        tuple(r for r in _PM302_RELS if r.label not in ("8", "11", "12"))
        + _rels(
            ("8'", "(U A2)^2 = D1 C1"),
            ("11'", "(U D2)^2 D1 D3 = U^2 C1 C2^2"),
            ("12'", "(A1 A2 A3 B)^3 = C1 C2 = C2 C1"),
        )
        + tuple(_commuting("C", c2, pm32_gens))
    )
    torus = _torus_relations()
    return [
        SporadicEntry(
            "T3", "T3", "M(T_3): torus with three holes", _T3_GENS, torus, (),
            "(A1 A2 A3 B)^3 = C1 C2 C3",
        ),
        SporadicEntry(
            "T2", "T2", "M(T_2): torus with two holes", _T3_GENS,
            torus + _rels(("T2", "C2 = 1"), ("T2", "A2 = A3")), (),
            "(A1 A2^2 B)^3 = C1 C3",
        ),
        SporadicEntry(
            "M3.0", (3, 0), "M(N_3)", ("A1", "B", "U"),
            _rels(
                ("1", "A1 B A1 = B A1 B"),
                ("2", "U A1 U^-1 = A1^-1"),
                ("3", "U B U^-1 = A1^-1 B^-1 A1"),
                ("4", "U^2 = 1"),
                ("5", "(A1^3 B)^3 = 1"),
            ),
            (),
            "(A1^3 B)^3 = 1",
        ),
        SporadicEntry(
            "PM3.0.1", "PM+(N3, 1 point)", "PM+(N_3, 1 point)", ("A1", "A2", "B", "U"), _PM301_RELS,
            _claims_from(_PM301_DERIVED, _PM301_MACROS), "(A1 A2^2 B)^3 = 1",
        ),
        SporadicEntry(
            "M3.1", (3, 1), "M(N_3^1)", ("A1", "A2", "B", "U"), m31_rels,
            (IsomorphicToProductAb(("C1",), "PM3.0.1", (("5", 0, "C1"), ("6", 0, "C1"))),),
            "(A2 U)^2 = (U A2)^2 = (A1^2 A2 B)^3",
        ),
        SporadicEntry(
            "PM3.0.2", "PM+(N3, 2 points)", "PM+(N_3, 2 points)", pm32_gens, _PM302_RELS,
            _claims_from(_PM302_DERIVED, _PM302_MACROS), "(A1 A2 A3 B)^3 = 1",
        ),
        SporadicEntry(
            "M3.2", (3, 2), "M(N_3^2)", pm32_gens + c2, m32_rels,
            (
                IsomorphicToProductAb(
                    c2, "PM3.0.2", (("8", 0, "C1"), ("11", 0, "C1 C2^2"), ("12", 0, "C1 C2"))
                ),
            ),
            "(A1 A2 A3 B)^3 = C1 C2",
        ),
    ]


# ----------------------------------------------------------------------------
# catalog
# ----------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _entries() -> tuple[SporadicEntry, ...]:
    out = tuple(_genus_one() + _genus_two() + _genus_three())
    ids = [e.id for e in out]
    assert len(set(ids)) == len(ids)
    return out


def catalog_entries() -> list[SporadicEntry]:
    return list(_entries())


def get_entry(entry_id: str) -> SporadicEntry:
    for e in _entries():
        if e.id == entry_id:
            return e
    raise KeyError(f"no catalog entry {entry_id!r}")


# surfaces whose named presentation is of a finite-index or product factor
_SURFACE_OVERRIDES = {(1, 4): "PM1.0.4"}


def surface_entry(g: int, n: int) -> SporadicEntry:
    """The entry carrying the presentation stated for the surface ``(g, n)``.

    For ``(1, 4)`` this is the presentation of the pure orientation-preserving
    factor; the full group is ``M1.4``.
    """
    if (g, n) in _SURFACE_OVERRIDES:
        return get_entry(_SURFACE_OVERRIDES[g, n])
    for e in _entries():
        if e.surface == (g, n):
            return e
    raise KeyError(f"no catalog entry for ({g},{n})")


def lantern_star_relator_bank() -> list[tuple[str, Word, str]]:
    """Lantern, star and Klein-bottle relators, each specialised to the
    alphabet of the entry it is checked in.

    The generic forms use twist names that no entry shares with the same
    meaning, so every relator here is given with its context explicitly.
    """
    bank = [
        ("S", "(A1 A2 A3 B)^3 = C1 C2 C3", "T3"),
        ("S", "(A1 A2^2 B)^3 = C1 C3", "T2"),
        ("S", "(A1 A2^2 B)^3 = (A1^2 A2 B)^3", "T2"),
        ("S", "(A1 A2^2 B)^3 = 1", "PM3.0.1"),
        ("S", "(A1^2 A2 B)^3 = (U A2)^2", "M3.1"),
        ("S", "(A1 A2 A3 B)^3 = 1", "PM3.0.2"),
        ("S", "(A1 A2 A3 B)^3 = C1 C2", "M3.2"),
        ("L", "C1 C2 U^2 = (U D2)^2 C2^-1 D1 D3", "M3.2"),
        ("L1", "A34 A24 A23 = A24 A23 A34", "PM1.0.4"),
        ("L1", "A24 A23 A34 = A23 A34 A24", "PM1.0.4"),
        ("K2", "(A2 U)^2 = (D2 U)^2", "M2.2"),
        ("K2", "(A2 U)^2 = 1", "PM2.0.2"),
        ("K2", "(D2 U)^2 = 1", "PM2.0.2"),
        ("K2", "(A2 U)^2 = (D2 U)^2", "PM2.0.3"),
        ("K2", "(A2 U)^2 = (U A2)^2", "M3.1"),
    ]
    out = []
    for name, text, ctx in bank:
        (w,) = parse_relations(text)
        gens = set(get_entry(ctx).generators)
        if any(n not in gens for n, _ in w):
            raise AssertionError(f"{name} is not expressible over {ctx}")
        out.append((name, w, ctx))
    return out


# ----------------------------------------------------------------------------
# verification
# ----------------------------------------------------------------------------

PASS, FAIL, UNKNOWN = "pass", "fail", "unknown"


@dataclass(frozen=True)
class ClaimResult:
    entry: str
    claim: str
    status: str
    detail: str = ""


def extension_for(claim: IsomorphicToProductAb) -> Presentation:
    """The central extension named by an :class:`IsomorphicToProductAb` claim."""
    quotient = get_entry(claim.quotient)
    qp = quotient.presentation
    # relator positions of each relation label in the quotient's relator list
    offsets: dict[str, list[int]] = {}
    pos = 0
    for r in quotient.relations:
        n = len(r.words())
        offsets.setdefault(r.label, []).extend(range(pos, pos + n))
        pos += n
    correction = {}
    for label, k, text in claim.corrections:
        correction[offsets[label][k]] = parse_expr(text)
    kernel = free_abelian(claim.kernel)
    lift = {g: g for g in qp.generators}
    return extension_presentation(ExtensionData(kernel, qp, lift, correction=correction, kernel_central=True))


def check_claim(entry: SporadicEntry, claim: Claim, max_cosets: int = DEFAULT_MAX_COSETS) -> ClaimResult:
    p = entry.presentation
    desc = claim.describe()
    if isinstance(claim, AbelianizationEquals):
        got = abelianization(p)
        ok = got == AbelianGroup(tuple(claim.torsion), claim.free_rank)
        return ClaimResult(entry.id, desc, PASS if ok else FAIL, str(got))
    if isinstance(claim, IsomorphicToProductAb):
        left, right = abelianization(p), abelianization(extension_for(claim))
        return ClaimResult(entry.id, desc, PASS if left == right else FAIL, f"{left} vs {right}")
    if isinstance(claim, RelationHoldsAb):
        (ok,) = abelian_consequence_check(p, [claim.word])
        return ClaimResult(entry.id, desc, PASS if ok else FAIL, word_to_str(claim.word))
    if isinstance(claim, FiniteIndexEquals):
        sub = [parse_expr(w) for w in claim.subgroup]
        res = todd_coxeter(p, sub, max_cosets)
        if not isinstance(res, Index):
            return ClaimResult(entry.id, desc, UNKNOWN, f"more than {max_cosets} cosets")
        return ClaimResult(entry.id, desc, PASS if res.value == claim.index else FAIL, f"index {res.value}")
    if isinstance(claim, FreeOfRank):
        s = simplify(p)
        ok = not s.relators and len(s.generators) == claim.rank
        return ClaimResult(entry.id, desc, PASS if ok else FAIL, f"{len(s.generators)} gens, {len(s.relators)} rels")
    raise TypeError(f"unknown claim {claim!r}")


def _bank_claims() -> dict[str, list[RelationHoldsAb]]:
    out: dict[str, list[RelationHoldsAb]] = {}
    for name, w, ctx in lantern_star_relator_bank():
        out.setdefault(ctx, []).append(RelationHoldsAb(f"bank {name}", w))
    return out


def verify_catalog(entry: Optional[str] = None, max_cosets: int = DEFAULT_MAX_COSETS) -> list[ClaimResult]:
    entries = [get_entry(entry)] if entry else catalog_entries()
    bank = _bank_claims()
    report = []
    for e in entries:
        for c in tuple(e.claims) + tuple(bank.get(e.id, ())):
            report.append(check_claim(e, c, max_cosets))
    return report


# ----------------------------------------------------------------------------
# export
# ----------------------------------------------------------------------------


def _file_name(entry_id: str) -> str:
    return entry_id.replace("+", "p") + ".pres"


def entry_text(e: SporadicEntry) -> str:
    head = [f"# {e.id}: {e.theorem}"]
    return "\n".join(head) + "\n" + to_text(e.presentation)


def catalog_index() -> list[dict]:
    out = []
    for e in _entries():
        g, n = e.surface if isinstance(e.surface, tuple) else (None, None)
        out.append(
            {
                "entry-id": e.id,
                "g": g,
                "n": n,
                "surface": e.surface if isinstance(e.surface, str) else None,
                "theorem": e.theorem,
                "quote": e.quote,
                "file": _file_name(e.id),
                "relations": [[r.label, r.text] for r in e.relations],
            }
        )
    return out


def export_catalog(directory: str) -> list[str]:
    """Write one ``.pres`` file per entry plus ``catalog.json``; return the paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for e in _entries():
        path = os.path.join(directory, _file_name(e.id))
        with open(path, "w") as fh:
            fh.write(entry_text(e))
        paths.append(path)
    index = os.path.join(directory, "catalog.json")
    with open(index, "w") as fh:
        json.dump(catalog_index(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    paths.append(index)
    return paths
