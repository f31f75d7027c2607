"""Exact classification engine for connected solvable spherical
subgroups of semisimple algebraic groups, driven by the combinatorial
triples (M, pi, ~) of decorated positive roots."""

from .rootsys import build_root_system, RootSystem
from .combdata import (make_triple, validate, largest_torus, make_torus,
                       is_reduced, check_reduced, codims)
from .build import build_subalgebra, verify_closure, check_sphericity
from .transform import elementary_transform, orbit, reduce_to_reduced
from .enumeration import enumerate_reduced, enumerate_valid, d0, d

__all__ = [
    "build_root_system", "RootSystem",
    "make_triple", "validate", "largest_torus", "make_torus",
    "is_reduced", "check_reduced", "codims",
    "build_subalgebra", "verify_closure", "check_sphericity",
    "elementary_transform", "orbit", "reduce_to_reduced",
    "enumerate_reduced", "enumerate_valid", "d0", "d",
]

__version__ = "0.1.0"
