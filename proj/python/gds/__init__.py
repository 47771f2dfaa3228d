"""Exact algebra on generalized Danielewski surfaces."""

from ._core import (
    Derivation,
    Element,
    GdsError,
    Morphism,
    ParseError,
    Surface,
    automorphism,
    canonical_derivation,
    center,
    example_check,
    fadic,
    identity,
    invariants,
    leading_form,
    unity_decompose,
    weight,
)

__all__ = [
    "Derivation",
    "Element",
    "GdsError",
    "Morphism",
    "ParseError",
    "Surface",
    "automorphism",
    "canonical_derivation",
    "center",
    "example_check",
    "fadic",
    "identity",
    "invariants",
    "leading_form",
    "unity_decompose",
    "weight",
]
