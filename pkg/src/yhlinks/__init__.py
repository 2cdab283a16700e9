"""HOMFLYPT polynomials and Yokonuma-Hecke link invariants T_d from braid words."""

from .braid import BraidWord, parse
from .hecke import homfly
from .invariants import td, td_via_matrix, td_via_sublinks
from .laurent import LaurentPoly

__all__ = ["BraidWord", "LaurentPoly", "homfly", "parse", "td", "td_via_matrix", "td_via_sublinks"]
