"""Exact computations for Seifert fibered surgeries on a twisted knot family."""
from .exactarith import INF, INFINITE, ExtendedRational, cf_expand, cf_value, reduce
from .montesinos import MontesinosLink
from .seifert import LensSpace, SeifertManifold
from .surgery import FramedLink

__all__ = [
    "INF", "INFINITE", "ExtendedRational", "cf_expand", "cf_value", "reduce",
    "MontesinosLink", "LensSpace", "SeifertManifold", "FramedLink",
]
