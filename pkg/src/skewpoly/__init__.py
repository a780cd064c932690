"""Exact computer algebra for skew polynomial rings over sigma-fields."""

from .fields import (
    FieldElement,
    FiniteField,
    GaussianRationals,
    PrimeField,
    RationalFunctionField,
    Rationals,
    SigmaField,
    are_conjugate,
    conjugacy_classes,
    conjugate,
    embedding,
    extension_field,
    parse_descriptor,
    sigma_norm,
    standard_fields,
)

__all__ = [
    "FieldElement",
    "FiniteField",
    "GaussianRationals",
    "PrimeField",
    "RationalFunctionField",
    "Rationals",
    "SigmaField",
    "are_conjugate",
    "conjugacy_classes",
    "conjugate",
    "embedding",
    "extension_field",
    "parse_descriptor",
    "sigma_norm",
    "standard_fields",
]
