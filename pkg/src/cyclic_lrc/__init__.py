"""Cyclic and constacyclic locally repairable codes with r = 2.

Exact finite-field arithmetic, the explicit Singleton-optimal and perfect
families, independent verification of their parameters and a local-repair
simulator.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .gf import FieldElement, FieldError, FieldSpec, make_field
from .poly import Poly
from .codes import CodeError, ConstacyclicCode, build_code
from .constructions import (ConstructionParams, InadmissibleParameters, WitnessCodeword,
                            admissibility, construct)

__all__ = [
    "FieldElement", "FieldError", "FieldSpec", "make_field", "Poly", "CodeError",
    "ConstacyclicCode", "build_code", "ConstructionParams", "InadmissibleParameters",
    "WitnessCodeword", "admissibility", "construct",
]
