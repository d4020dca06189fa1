"""Presentations of group extensions ``1 -> K -> G -> H -> 1``.

Given presentations of ``K`` and ``H``, lifts of the generators of ``H``,
the action of each lifted generator on ``K`` and the kernel value of each
lifted relator of ``H``, the group ``G`` is presented by the kernel
generators and relators, the lifted relators corrected by their kernel
values, and the conjugation relators ``h k h^-1 = w(k, h)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .presentation import Presentation, Word, conj, inverse, letter, mul, substitute


class MalformedData(ValueError):
    pass


@dataclass(frozen=True)
class ExtensionData:
    kernel: Presentation
    quotient: Presentation
    # quotient generator -> lifted generator name in G
    lift: Mapping[str, str]
    # (quotient gen, kernel gen) -> word over kernel gens; default: the kernel gen itself
    action: Mapping[tuple[str, str], Word] = field(default_factory=dict)
    # quotient relator index -> word over kernel gens; default: empty
    correction: Mapping[int, Word] = field(default_factory=dict)
    kernel_central: bool = False


def extension_presentation(x: ExtensionData) -> Presentation:
    kgens = set(x.kernel.generators)
    lifted = []
    for h in x.quotient.generators:
        if h not in x.lift:
            raise MalformedData(f"no lift for quotient generator {h}")
        name = x.lift[h]
        if not isinstance(name, str):
            if len(name) == 1 and name[0][1] == 1:
                name = name[0][0]
            else:
                raise MalformedData(f"lift of {h} must be a single new generator")
        if name in kgens or name in lifted:
            raise MalformedData(f"lift name {name} clashes")
        lifted.append(name)
    lift_map = {h: letter(n) for h, n in zip(x.quotient.generators, lifted)}

    def kernel_word(w: Word, what: str) -> Word:
        if any(n not in kgens for n, _ in w):
            raise MalformedData(f"{what} must be a word in the kernel generators")
        return tuple(w)

    for (h, k), w in x.action.items():
        if h not in lift_map or k not in kgens:
            raise MalformedData(f"action entry {(h, k)} names unknown generators")
        kernel_word(w, f"action of {h} on {k}")
        if x.kernel_central and tuple(w) != letter(k):
            raise MalformedData("a central kernel must be acted on trivially")
    for i, w in x.correction.items():
        if not 0 <= i < len(x.quotient.relators):
            raise MalformedData(f"correction for unknown quotient relator {i}")
        kernel_word(w, f"correction of relator {i}")

    gens = tuple(x.kernel.generators) + tuple(lifted)
    rels = list(x.kernel.relators)
    for i, r in enumerate(x.quotient.relators):
        rels.append(mul(substitute(r, lift_map), inverse(x.correction.get(i, ()))))
    for h in x.quotient.generators:
        for k in x.kernel.generators:
            w = x.action.get((h, k), letter(k))
            rels.append(mul(conj(lift_map[h], letter(k)), inverse(w)))
    return Presentation(gens, tuple(rels))


def direct_product(k: Presentation, h: Presentation) -> Presentation:
    """``K x H`` with the lifts named as in ``H``."""
    return extension_presentation(
        ExtensionData(k, h, {g: g for g in h.generators}, kernel_central=True)
    )


def free_abelian(names) -> Presentation:
    names = tuple(names)
    rels = [mul(letter(a), letter(b), letter(a, -1), letter(b, -1)) for i, a in enumerate(names) for b in names[i + 1 :]]
    return Presentation(names, tuple(rels))
