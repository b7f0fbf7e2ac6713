"""Knot Floer ranks of the lifted braid axis in branched double covers."""

from .braid import BraidWord, format_braid, parse_braid
from .floer import hfk_from_torsion, staircase_hfk, staircase_parse, torsion_coeffs
from .foxcalc import refined_torsion
from .laurent import LaurentPoly

__version__ = "0.1.0"

__all__ = ["BraidWord", "LaurentPoly", "format_braid", "hfk_from_torsion", "parse_braid",
           "refined_torsion", "staircase_hfk", "staircase_parse", "torsion_coeffs"]
