"""Exact arithmetic: char-2 fields, presented quotient rings, homomorphisms."""

from stablyfree.algebra.fields import FieldElem, GF2n, RationalFunctionField, field_from_spec
from stablyfree.algebra.homs import Catalog, RingHom, catalog, factorization_checks, standard_homs
from stablyfree.algebra.parse import parse_element, parse_field_element
from stablyfree.algebra.rings import (
    Presentation,
    RingElem,
    divide_exact,
    is_unit,
    reinterpret,
    ring_inverse,
)
from stablyfree.algebra.sampling import random_element, random_field_element

__all__ = [
    "Catalog",
    "FieldElem",
    "GF2n",
    "Presentation",
    "RationalFunctionField",
    "RingElem",
    "RingHom",
    "catalog",
    "divide_exact",
    "factorization_checks",
    "field_from_spec",
    "is_unit",
    "parse_element",
    "parse_field_element",
    "random_element",
    "random_field_element",
    "reinterpret",
    "ring_inverse",
    "standard_homs",
]
