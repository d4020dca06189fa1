"""Curve systems on non-orientable surfaces and presentations of their
mapping class groups.

Submodules:

* :mod:`crosscap.surface` -- surface invariants and the sporadic list;
* :mod:`crosscap.diagram` -- cut diagrams of curve families, orbit equality;
* :mod:`crosscap.orbits` -- orbit census and enumeration of curve families;
* :mod:`crosscap.complex`, :mod:`crosscap.trees` -- the quotient complex,
  maximal trees and determinability;
* :mod:`crosscap.presentation`, :mod:`crosscap.snf`, :mod:`crosscap.rs`,
  :mod:`crosscap.tietze`, :mod:`crosscap.todd_coxeter`,
  :mod:`crosscap.extension`, :mod:`crosscap.brown` -- the presentation engine;
* :mod:`crosscap.catalog` -- presentations of the sporadic groups.
"""

from .surface import Surface, classify_from_chi, euler, is_sporadic
from .presentation import Presentation, free_reduce, parse_expr
from .snf import abelianization, smith_normal_form

__all__ = [
    "Presentation",
    "Surface",
    "abelianization",
    "classify_from_chi",
    "euler",
    "free_reduce",
    "is_sporadic",
    "parse_expr",
    "smith_normal_form",
]
__version__ = "0.1.0"
