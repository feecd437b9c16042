"""Topology of real sextic curves cut on real cubic surfaces by quadrics.

Parsing and printing of arrangement codes, an exclusion rule engine, an
exhaustive candidate enumerator and an embedded ground-truth catalog.
"""
from .codes import OvalForest, PairCode, canonicalize_on_sphere, parse_forest, parse_pair, print_forest
from .enumerator import candidates, classify
from .restrictions import RULES, Verdict, evaluate, explain
from .schemes import Scheme, format_scheme, parse_scheme
from .surfaces import AMBIENTS, CompactSurface, CubicAmbient, ParseError, parse_surface

__version__ = "0.1.0"

__all__ = [
    "AMBIENTS", "CompactSurface", "CubicAmbient", "OvalForest", "PairCode", "ParseError",
    "RULES", "Scheme", "Verdict", "candidates", "canonicalize_on_sphere", "classify",
    "evaluate", "explain", "format_scheme", "parse_forest", "parse_pair", "parse_scheme",
    "parse_surface", "print_forest",
]
