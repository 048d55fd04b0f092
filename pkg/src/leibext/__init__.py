"""Exact abelian extensions of solvable Leibniz algebras over the rationals."""

from __future__ import annotations

from .algebra import AlgebraTable, fingerprint, leibniz_check, verify_nilradical
from .cohomology import BilinearMap, RepresentationPair, compute_B2, compute_H2, compute_Z2, rep_check
from .extension import ExtensionSpec, abelian_module, build_extension, nilradical_lemma_check, validity_check
from .orbit import Automorphism, OrbitElement, act, normalize_in_orbit

__version__ = "0.1.0"

__all__ = [
    "AlgebraTable",
    "Automorphism",
    "BilinearMap",
    "ExtensionSpec",
    "OrbitElement",
    "RepresentationPair",
    "abelian_module",
    "act",
    "build_extension",
    "compute_B2",
    "compute_H2",
    "compute_Z2",
    "fingerprint",
    "leibniz_check",
    "nilradical_lemma_check",
    "normalize_in_orbit",
    "rep_check",
    "validity_check",
    "verify_nilradical",
]
