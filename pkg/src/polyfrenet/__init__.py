"""Polyharmonic Frenet curves in semi-Riemannian space forms and related space-times.

The main entry points are re-exported here; see the submodules for the
full API.
"""
from .classify import (
    ClassificationResult,
    classify_2frenet,
    classify_3frenet,
    classify_nfrenet_biharmonic,
    classify_nfrenet_triharmonic,
    classify_triharmonic_2frenet,
)
from .config import Tolerances
from .frenet import FrenetCurve, Helix, covariant_power
from .metric import Signature, SignatureError, gram_schmidt_nondegenerate, inner_product
from .spaceforms import SpaceForm
from .synthesize import SynthesisProblem, integrate_frenet, measured_tension, numeric_tension
from .tension import tension_field

__version__ = "0.1.0"

__all__ = [
    "ClassificationResult",
    "FrenetCurve",
    "Helix",
    "Signature",
    "SignatureError",
    "SpaceForm",
    "SynthesisProblem",
    "Tolerances",
    "classify_2frenet",
    "classify_3frenet",
    "classify_nfrenet_biharmonic",
    "classify_nfrenet_triharmonic",
    "classify_triharmonic_2frenet",
    "covariant_power",
    "gram_schmidt_nondegenerate",
    "inner_product",
    "integrate_frenet",
    "measured_tension",
    "numeric_tension",
    "tension_field",
]
