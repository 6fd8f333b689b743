"""Exact computer algebra for free brace algebras over the rationals."""

from .algebra import (
    BudgetExceeded,
    Homomorphism,
    Polynomial,
    apply_hom,
    leading,
    normalize,
    product,
    product_words,
    term_budget,
)
from .words import Brace, NormalWord, compare, enumerate_marked, enumerate_normal

__all__ = [
    "Brace",
    "BudgetExceeded",
    "Homomorphism",
    "NormalWord",
    "Polynomial",
    "apply_hom",
    "compare",
    "enumerate_marked",
    "enumerate_normal",
    "leading",
    "normalize",
    "product",
    "product_words",
    "term_budget",
]
