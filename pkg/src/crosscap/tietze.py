"""Tietze transformations.

A derivation witnesses that a word lies in the normal closure of the
relators: it is a list of ``(conjugator, relator index, exponent)`` triples
whose product ``prod h r_i^e h^-1`` freely reduces to the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .presentation import (
    Presentation,
    Word,
    conj,
    cyclic_reduce,
    free_reduce,
    inverse,
    letter,
    mul,
    substitute,
)

Derivation = Sequence[tuple[Word, int, int]]


class InvalidMove(ValueError):
    pass


@dataclass(frozen=True)
class AddGen:
    name: str
    defining: Word


@dataclass(frozen=True)
class RemoveGen:
    name: str
    relator: int


@dataclass(frozen=True)
class AddRelator:
    word: Word
    witness: Optional[Derivation] = None


@dataclass(frozen=True)
class RemoveRedundantRelator:
    relator: int
    witness: Optional[Derivation] = None


@dataclass(frozen=True)
class Simplify:
    pass


Move = Union[AddGen, RemoveGen, AddRelator, RemoveRedundantRelator, Simplify]


def evaluate_derivation(rels: Sequence[Word], witness: Derivation) -> Word:
    parts = []
    for h, i, e in witness:
        if not 0 <= i < len(rels) or e not in (1, -1):
            raise InvalidMove(f"bad derivation step {(h, i, e)}")
        parts.append(conj(h, rels[i] if e == 1 else inverse(rels[i])))
    return mul(*parts)


def _solve_for(r: Word, name: str) -> Word:
    """If ``name`` occurs once in ``r``, return ``w`` with ``name = w`` modulo ``r``."""
    hits = [k for k, (n, _) in enumerate(r) if n == name]
    if len(hits) != 1:
        raise InvalidMove(f"{name} must occur exactly once in the relator")
    k = hits[0]
    e = r[k][1]
    before, after = r[:k], r[k + 1 :]
    # before x^e after = 1  =>  x^e = before^-1 after^-1
    w = mul(inverse(before), inverse(after))
    return w if e == 1 else inverse(w)


def tietze(p: Presentation, move: Move) -> Presentation:
    gens, rels = list(p.generators), list(p.relators)
    if isinstance(move, AddGen):
        if move.name in gens:
            raise InvalidMove(f"generator {move.name} already exists")
        if any(n not in gens for n, _ in move.defining):
            raise InvalidMove("defining word uses unknown generators")
        gens.append(move.name)
        rels.append(mul(letter(move.name), inverse(move.defining)))
        return Presentation(tuple(gens), tuple(rels), p.extended)
    if isinstance(move, RemoveGen):
        if move.name not in gens:
            raise InvalidMove(f"no generator {move.name}")
        if not 0 <= move.relator < len(rels):
            raise InvalidMove("relator index out of range")
        w = _solve_for(rels[move.relator], move.name)
        rest = [substitute(r, {move.name: w}) for k, r in enumerate(rels) if k != move.relator]
        gens.remove(move.name)
        return Presentation(tuple(gens), tuple(rest), p.extended)
    if isinstance(move, AddRelator):
        w = free_reduce(move.word)
        if any(n not in gens for n, _ in w):
            raise InvalidMove("relator uses unknown generators")
        extended = p.extended
        if move.witness is None:
            extended = True
        elif evaluate_derivation(rels, move.witness) != w:
            raise InvalidMove("witness does not derive the relator")
        rels.append(w)
        return Presentation(tuple(gens), tuple(rels), extended)
    if isinstance(move, RemoveRedundantRelator):
        if not 0 <= move.relator < len(rels):
            raise InvalidMove("relator index out of range")
        target = rels[move.relator]
        rest = rels[: move.relator] + rels[move.relator + 1 :]
        extended = p.extended
        if move.witness is None:
            # without a derivation only a trivial or duplicate relator may go
            if target and target not in rest and inverse(target) not in rest:
                raise InvalidMove("removing a relator needs a witness")
        else:
            # witness indices refer to the list with the relator removed
            if evaluate_derivation(rest, move.witness) != target:
                raise InvalidMove("witness does not derive the relator")
        return Presentation(tuple(gens), tuple(rest), extended)
    if isinstance(move, Simplify):
        return simplify(p)
    raise InvalidMove(f"unknown move {move!r}")


def _dedupe(rels: list[Word]) -> list[Word]:
    seen = set()
    out = []
    for r in rels:
        r = free_reduce(r)
        if not r:
            continue
        key = min(_rotations(r) + _rotations(inverse(r)))
        if key in seen:
            continue
        seen.add(key)
        out.append(r)
    return out


def _rotations(r: Word) -> list[Word]:
    c = cyclic_reduce(r)
    return [c[k:] + c[:k] for k in range(len(c))] or [()]


def simplify(p: Presentation) -> Presentation:
    """Free reduction, duplicate removal, and elimination of generators that
    occur exactly once in some relator (shortest such relator first)."""
    gens = list(p.generators)
    rels = _dedupe(list(p.relators))
    while True:
        best = None
        for k, r in enumerate(rels):
            for x in gens:
                if sum(1 for n, _ in r if n == x) == 1:
                    if best is None or len(r) < len(rels[best[0]]):
                        best = (k, x)
                    break
        if best is None:
            break
        k, x = best
        w = _solve_for(rels[k], x)
        rels = _dedupe([substitute(r, {x: w}) for j, r in enumerate(rels) if j != k])
        gens.remove(x)
    return Presentation(tuple(gens), tuple(rels), p.extended)
