"""Reidemeister-Schreier rewriting for the kernel of a sign map to Z/2."""

from __future__ import annotations

from typing import Mapping

from .presentation import Presentation, Word


class RelatorNotInSubgroup(ValueError):
    pass


class Index1(ValueError):
    pass


def word_sign(w: Word, sign: Mapping[str, int]) -> int:
    s = 1
    for name, _ in w:
        s *= sign[name]
    return s


def schreier_names(p: Presentation) -> dict[tuple[int, str], str]:
    """Names ``x_0`` / ``x_1`` for the Schreier generators at cosets 1 and t."""
    taken = set(p.generators)
    names = {}
    for coset in (0, 1):
        for x in p.generators:
            base = f"{x}_{coset}"
            name = base
            while name in taken:
                name += "_"
            taken.add(name)
            names[coset, x] = name
    return names


def reidemeister_schreier_index2(p: Presentation, sign: Mapping[str, int]) -> Presentation:
    """Presentation of the kernel of ``sign`` on the transversal ``{1, t}``.

    ``t`` is the first generator of sign -1.  Generator ``x_c`` stands for
    ``r_c x r_{c x}^-1``; the single trivial one, ``t_0 = t t^-1``, is dropped.
    Each relator is rewritten from both cosets, in the order (coset 1 for all
    relators, then coset t).
    """
    sign = {g: int(sign.get(g, 1)) for g in p.generators}
    if any(v not in (1, -1) for v in sign.values()):
        raise ValueError("signs must be +1 or -1")
    neg = [g for g in p.generators if sign[g] == -1]
    if not neg:
        raise Index1("every generator has sign +1; the subgroup is everything")
    for r in p.relators:
        if word_sign(r, sign) != 1:
            raise RelatorNotInSubgroup(f"relator {r} has sign -1")
    t = neg[0]
    names = schreier_names(p)
    trivial = names[0, t]

    def step(c: int, x: str) -> int:
        return c ^ (sign[x] == -1)

    def rewrite(w: Word, c: int) -> Word:
        out = []
        for x, e in w:
            if e == 1:
                gen = names[c, x]
                c = step(c, x)
                if gen != trivial:
                    out.append((gen, 1))
            else:
                c = step(c, x)
                gen = names[c, x]
                if gen != trivial:
                    out.append((gen, -1))
        return tuple(out)

    gens = [names[c, x] for c in (0, 1) for x in p.generators if names[c, x] != trivial]
    rels = [rewrite(r, 0) for r in p.relators] + [rewrite(r, 1) for r in p.relators]
    return Presentation(tuple(gens), tuple(rels))


def euler_defect(p: Presentation) -> int:
    return len(p.generators) - len(p.relators)

