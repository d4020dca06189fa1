"""Orbits of curve families under the mapping class group.

Two routes count the vertex orbits: a closed formula by case analysis on the
cut surface, and brute enumeration of cut diagrams.  Enumeration works
inductively: every generic family of ``r`` curves is a generic family of
``r - 1`` curves plus one more curve living in a single component of the
cut surface, so splitting each component of each ``(r-1)``-representative in
every admissible way reaches every orbit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from .diagram import (
    ONE_SIDED,
    TWO_SIDED,
    ComponentSpec,
    CurveGluing,
    CutDiagram,
    canonical_form,
    orbit_signature,
    trivial_diagram,
    validate_generic,
)
from .surface import Surface, SurfaceError, classify_from_chi

DEFAULT_CANDIDATE_CAP = 10**6


class NotApplicable(ValueError):
    pass


class ResourceLimit(RuntimeError):
    pass


@dataclass(frozen=True)
class Census:
    nonsep_orientable_complement: int
    nonsep_nonorientable_complement: int
    separating: int

    @property
    def total(self) -> int:
        return self.nonsep_orientable_complement + self.nonsep_nonorientable_complement + self.separating


def _check_target(g: int, n: int) -> Surface:
    if g < 1 or n < 0:
        raise NotApplicable(f"no non-orientable surface with g={g}, n={n}")
    s = Surface(False, g, n)
    if s.euler >= 0:
        raise NotApplicable(f"F_{g}^{n} has non-negative Euler characteristic")
    return s


def _splits(s: int) -> int:
    """Unordered pairs {I, J} with I and J partitioning a fixed s-set."""
    return 2 ** (s - 1) if s else 1


def vertex_orbit_census(g: int, n: int, literal: bool = False) -> Census:
    """Count vertex orbits by the case-analysis formula.

    With ``literal=True`` the separating count with two non-orientable
    pieces takes every ``(l, I)`` with ``l + |I| >= 2``.  That overcounts
    when the other piece is a Moebius strip or when ``l = g - l`` makes
    ``(l, I)`` and ``(l, I')`` the same curve; the default applies both
    corrections.
    """
    _check_target(g, n)
    # closed surfaces here have g >= 3
    nonsep_or = 2 ** (n - 1) if n else 1
    nonor = {1: 0, 2: 1}.get(g, 2)
    sep = 0
    # one orientable piece of genus k holding the labels I u J
    for k in range(0, (g - 1) // 2 + 1):
        for s in range(0, n + 1):
            if 2 <= 2 * k + s <= g + n - 2:
                sep += comb(n, s) * _splits(s)
    # two non-orientable pieces of genera l and g - l, the first holding I
    for l in range(1, g // 2 + 1):
        for s in range(0, n + 1):
            if l + s < 2:
                continue
            if literal:
                sep += comb(n, s)
                continue
            if (g - l) + (n - s) < 2:
                continue
            if 2 * l == g:
                # (l, I) and (l, I') describe the same curve; count pairs once
                if 2 * s < n:
                    sep += comb(n, s)
                elif 2 * s == n:
                    sep += comb(n, s) // 2 if n else 1
            else:
                sep += comb(n, s)
    return Census(nonsep_or, nonor, sep)


# ----------------------------------------------------------------------------
# enumeration
# ----------------------------------------------------------------------------


def _sign_patterns(k: int) -> Iterator[tuple[int, ...]]:
    return itertools.product((1, -1), repeat=k)


def _piece(orientable: bool, chi: int, slots: list[int], signs) -> Optional[ComponentSpec]:
    try:
        surf = classify_from_chi(orientable, chi, len(slots))
    except SurfaceError:
        return None
    return ComponentSpec(0, orientable, surf.genus, tuple(slots), tuple(signs) if orientable else None)


def _component_splits(comp: ComponentSpec, s_new: int, t_new: int) -> Iterator[tuple[list[ComponentSpec], str, tuple]]:
    """All ways a new curve can sit in ``comp``: (pieces, kind, slots of the curve)."""
    chi = comp.euler
    old = list(comp.slots)
    b = len(old)
    inherited = comp.signs
    # one-sided
    if not comp.orientable:
        p = _piece(False, chi, old + [s_new], None)
        if p:
            yield [p], ONE_SIDED, (s_new,)
        if (2 - chi - b - 1) >= 0 and (2 - chi - b - 1) % 2 == 0:
            for pat in _sign_patterns(b):
                p = _piece(True, chi, old + [s_new], pat + (1,))
                if p:
                    yield [p], ONE_SIDED, (s_new,)
    # two-sided non-separating
    if comp.orientable:
        p = _piece(True, chi, old + [s_new, t_new], inherited + (1, -1))
        if p:
            yield [p], TWO_SIDED, (s_new, t_new)
    else:
        p = _piece(False, chi, old + [s_new, t_new], None)
        if p:
            yield [p], TWO_SIDED, (s_new, t_new)
        rest = 2 - chi - b - 2
        if rest >= 0 and rest % 2 == 0:
            for pat in _sign_patterns(b):
                p = _piece(True, chi, old + [s_new, t_new], pat + (1, 1))
                if p:
                    yield [p], TWO_SIDED, (s_new, t_new)
    # separating
    for mask in range(2 ** b):
        left = [old[i] for i in range(b) if mask >> i & 1]
        right = [old[i] for i in range(b) if not mask >> i & 1]
        if comp.orientable:
            lsig = tuple(inherited[i] for i in range(b) if mask >> i & 1)
            rsig = tuple(inherited[i] for i in range(b) if not mask >> i & 1)
            g = comp.genus
            for g1 in range(0, g + 1):
                p = _piece(True, 2 - 2 * g1 - len(left) - 1, left + [s_new], lsig + (1,))
                q = _piece(True, 2 - 2 * (g - g1) - len(right) - 1, right + [t_new], rsig + (-1,))
                if p and q:
                    yield [p, q], TWO_SIDED, (s_new, t_new)
            continue
        g = comp.genus
        # both pieces non-orientable
        for g1 in range(1, g):
            p = _piece(False, 2 - g1 - len(left) - 1, left + [s_new], None)
            q = _piece(False, 2 - (g - g1) - len(right) - 1, right + [t_new], None)
            if p and q:
                yield [p, q], TWO_SIDED, (s_new, t_new)
        # left orientable of genus k, right non-orientable
        for k in range(0, (g - 1) // 2 + 1):
            q = _piece(False, 2 - (g - 2 * k) - len(right) - 1, right + [t_new], None)
            if not q:
                continue
            for pat in _sign_patterns(len(left)):
                p = _piece(True, 2 - 2 * k - len(left) - 1, left + [s_new], pat + (1,))
                if p:
                    yield [p, q], TWO_SIDED, (s_new, t_new)


def extensions(d: CutDiagram) -> Iterator[CutDiagram]:
    """Diagrams obtained from ``d`` by adding curve ``r+1`` (not yet validated)."""
    idx = d.r + 1
    top = max((s for c in d.components for s in c.slots), default=-1)
    s_new, t_new = top + 1, top + 2
    for pos, comp in enumerate(d.components):
        for pieces, kind, slots in _component_splits(comp, s_new, t_new):
            comps = list(d.components[:pos]) + pieces + list(d.components[pos + 1 :])
            comps = tuple(
                ComponentSpec(i, c.orientable, c.genus, c.slots, c.signs) for i, c in enumerate(comps)
            )
            yield CutDiagram(d.target, comps, d.exterior, d.curves + (CurveGluing(idx, kind, slots),))


class _Budget:
    def __init__(self, cap: int):
        self.cap = cap
        self.used = 0

    def spend(self):
        self.used += 1
        if self.used > self.cap:
            raise ResourceLimit(f"more than {self.cap} candidate diagrams; raise the cap")


def _dedup_level(parents, budget: _Budget) -> list[CutDiagram]:
    best: dict[tuple, tuple[bytes, CutDiagram]] = {}
    for parent in parents:
        for cand in extensions(parent):
            budget.spend()
            if validate_generic(cand):
                continue
            sig = orbit_signature(cand)
            key = canonical_form(cand)
            cur = best.get(sig)
            if cur is None or key < cur[0]:
                best[sig] = (key, cand)
    return [best[s][1] for s in sorted(best, key=lambda s: best[s][0])]


def enumerate_levels(g: int, n: int, r: int, cap: int = DEFAULT_CANDIDATE_CAP) -> list[list[CutDiagram]]:
    """Orbit representatives of ordered families of 1..r curves, level by level."""
    if r not in (1, 2, 3):
        raise ValueError("r must be 1, 2 or 3")
    target = _check_target(g, n)
    budget = _Budget(cap)
    levels = []
    parents = [trivial_diagram(target)]
    for _ in range(r):
        parents = _dedup_level(parents, budget)
        levels.append(parents)
    return levels


def enumerate_orbit_simplices(g: int, n: int, r: int, cap: int = DEFAULT_CANDIDATE_CAP) -> list[CutDiagram]:
    """One representative per orbit of ordered r-curve generic families."""
    return enumerate_levels(g, n, r, cap)[-1]


def classify_vertex(d: CutDiagram) -> str:
    """'sep', 'nonsep_or' or 'nonsep_nonor' for a single-curve diagram."""
    if len(d.components) == 2:
        return "sep"
    return "nonsep_or" if d.components[0].orientable else "nonsep_nonor"


def enumerated_census(g: int, n: int, cap: int = DEFAULT_CANDIDATE_CAP) -> Census:
    reps = enumerate_orbit_simplices(g, n, 1, cap)
    kinds = [classify_vertex(d) for d in reps]
    return Census(kinds.count("nonsep_or"), kinds.count("nonsep_nonor"), kinds.count("sep"))
