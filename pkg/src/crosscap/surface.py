"""Compact surfaces up to homeomorphism, and the sporadic list.

Non-orientable genus counts crosscaps; orientable genus counts handles.
"""

from __future__ import annotations

from dataclasses import dataclass


class SurfaceError(ValueError):
    pass


class ParityError(SurfaceError):
    """Orientable data whose genus would not be an integer."""


class NegativeGenus(SurfaceError):
    pass


@dataclass(frozen=True, order=True)
class Surface:
    orientable: bool
    genus: int
    boundary: int = 0

    def __post_init__(self):
        if self.genus < 0 or self.boundary < 0:
            raise NegativeGenus(f"invalid surface data {self!r}")
        if not self.orientable and self.genus < 1:
            raise SurfaceError("a non-orientable surface has at least one crosscap")

    @property
    def euler(self) -> int:
        return euler(self)

    def __str__(self):
        letter = "S" if self.orientable else "N"
        return f"{letter}_{self.genus}^{self.boundary}"


def euler(s: Surface) -> int:
    if s.orientable:
        return 2 - 2 * s.genus - s.boundary
    return 2 - s.genus - s.boundary


def classify_from_chi(orientable: bool, chi: int, boundary: int) -> Surface:
    """Inverse of :func:`euler` for fixed orientability and boundary count."""
    rest = 2 - chi - boundary
    if orientable:
        if rest % 2:
            raise ParityError(f"chi={chi}, boundary={boundary}: odd orientable defect")
        if rest < 0:
            raise NegativeGenus(f"chi={chi}, boundary={boundary}")
        return Surface(True, rest // 2, boundary)
    if rest < 1:
        raise NegativeGenus(f"chi={chi}, boundary={boundary}: no crosscaps left")
    return Surface(False, rest, boundary)


SPORADIC_BOUNDS = {1: 4, 2: 3, 3: 2}


def is_sporadic(g: int, n: int) -> bool:
    """True for the non-orientable F_g^n whose curve complex may fail to be simply connected."""
    return n <= SPORADIC_BOUNDS.get(g, -1)
