"""Special-number triangles, scalar families and sequence tables."""

from .numbers import (
    ApostolFamily,
    ParamFamily,
    ParamFamilyQuery,
    apostol,
    bernoulli,
    bernoulli_poly,
    changhee,
    daehee,
    euler,
    euler_poly,
    euler_star,
    harmonic,
    peters,
    y_family,
)
from .triangles import TriangleFamily, even_central, triangle, triangle_row

__all__ = [
    "ApostolFamily",
    "ParamFamily",
    "ParamFamilyQuery",
    "TriangleFamily",
    "apostol",
    "bernoulli",
    "bernoulli_poly",
    "changhee",
    "daehee",
    "euler",
    "euler_poly",
    "euler_star",
    "even_central",
    "harmonic",
    "peters",
    "triangle",
    "triangle_row",
    "y_family",
]
