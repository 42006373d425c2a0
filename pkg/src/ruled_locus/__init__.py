"""Exact computations on rational ruled surfaces in P3.

A surface of degree d is given by six binary forms of degree d, the
Pluecker coordinates of its generator lines.  The package computes the
curve of parameter pairs whose lines meet (two independent ways), the
quadratic form on S_d, splitting types, stability, Poncelet data and the
degree formulas for the rank strata.
"""

from .exact import GF, QQ, FieldMismatch
from .forms import BiForm, BinaryForm, PlaneCurve
from .lines import SurfaceMap, splitting_type, stability, validate
from .locus import check_main_theorem, phi, phi_rank, psi_biform, psi_determinantal

__version__ = "0.1.0"

__all__ = [
    "GF", "QQ", "FieldMismatch", "BiForm", "BinaryForm", "PlaneCurve", "SurfaceMap",
    "splitting_type", "stability", "validate", "check_main_theorem", "phi", "phi_rank",
    "psi_biform", "psi_determinantal",
]
