"""Nilpotent evolution algebras: series, classification and isomorphisms."""

from ._evoalg import (
    Algebra,
    EvoError,
    exhaustive_iso,
    family,
    randomized_iso,
    verify_hom,
    witness_isomorphism,
)

__all__ = [
    "Algebra",
    "EvoError",
    "exhaustive_iso",
    "family",
    "randomized_iso",
    "verify_hom",
    "witness_isomorphism",
]
