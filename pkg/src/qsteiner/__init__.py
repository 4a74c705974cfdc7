"""Large sets of q-Steiner systems LS(t, t+1, K)_q from linearized polynomials,
built and checked inside finite fields F_{q^M}."""

from .gf import Elem, Tower, build_tower, frobenius, subfield_test
from .moore import annihilator_bottom, annihilator_top, moore_det
from .qpoly import QPolynomial, conventional_gcd, kernel_intersection
from .steiner import (
    Block,
    ClassLabel,
    ConstructionParams,
    block,
    canonical_label,
    classify,
    cover,
    extract_aB,
    f_from_aB,
    recommended_ambient,
)
from .subspace import Subspace

__all__ = [
    "Block", "ClassLabel", "ConstructionParams", "Elem", "QPolynomial", "Subspace", "Tower",
    "annihilator_bottom", "annihilator_top", "block", "build_tower", "canonical_label",
    "classify", "conventional_gcd", "cover", "extract_aB", "f_from_aB", "frobenius",
    "kernel_intersection", "moore_det", "recommended_ambient", "subfield_test",
]
