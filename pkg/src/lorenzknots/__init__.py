"""Lorenz knots from Lyndon words, and their link with SL2(Z) conjugacy classes."""

from . import braid, errors, ghys, lyndon, poly, quad, skein, sl2, young
from .braid import MarkedBraid, bw_braid, genus, lorenz_braid, lorenz_permutation
from .errors import LorenzError
from .ghys import KnotSignature, knot_of_class, knot_signature
from .lyndon import canonical_rotation, enumerate_lyndon, parse_word, trip
from .poly import LaurentPoly
from .quad import class_group
from .skein import alexander, braid_index, homfly, j_poly, jones
from .sl2 import Mat2Z, canonical_class, enumerate_classes_by_trace

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "LorenzError",
    "KnotSignature",
    "MarkedBraid",
    "Mat2Z",
    "alexander",
    "braid",
    "braid_index",
    "bw_braid",
    "canonical_class",
    "canonical_rotation",
    "class_group",
    "enumerate_classes_by_trace",
    "enumerate_lyndon",
    "errors",
    "genus",
    "ghys",
    "homfly",
    "j_poly",
    "jones",
    "knot_of_class",
    "knot_signature",
    "lorenz_braid",
    "lorenz_permutation",
    "lyndon",
    "parse_word",
    "poly",
    "quad",
    "skein",
    "sl2",
    "trip",
    "young",
]
