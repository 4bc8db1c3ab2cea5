"""Exact arithmetic in characteristic-two field towers."""

from .parse import parse_element, parse_field, parse_poly
from .tower import GF2, AlgebraicLayer, Field, FieldValue, RationalFunctionField
from .unipoly import UniPoly, is_irreducible, is_separable, poly_gcd

__all__ = [
    "GF2",
    "AlgebraicLayer",
    "Field",
    "FieldValue",
    "RationalFunctionField",
    "UniPoly",
    "is_irreducible",
    "is_separable",
    "parse_element",
    "parse_field",
    "parse_poly",
    "poly_gcd",
]
