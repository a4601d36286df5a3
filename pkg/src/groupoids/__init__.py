"""Finite groupoids: construction, orbit/isotropy analysis, morphisms, convolution algebras."""

from .algebra import AlgebraElement, convolve, convolve_symmetric, convolution_identity, delta, to_matrix
from .analysis import isotropy_group, orbit_decomposition, orbits, skeleton
from .core import (
    FiniteGroupoid,
    action_groupoid,
    build,
    disjoint_union,
    group_as_groupoid,
    pair_groupoid,
    restrict,
)
from .errors import GroupoidError
from .morphism import are_equivalent, canonical_pair_morphism, find_homotopy, validate_morphism

__all__ = [
    "AlgebraElement",
    "FiniteGroupoid",
    "GroupoidError",
    "action_groupoid",
    "are_equivalent",
    "build",
    "canonical_pair_morphism",
    "convolution_identity",
    "convolve",
    "convolve_symmetric",
    "delta",
    "disjoint_union",
    "find_homotopy",
    "group_as_groupoid",
    "isotropy_group",
    "orbit_decomposition",
    "orbits",
    "pair_groupoid",
    "restrict",
    "skeleton",
    "to_matrix",
    "validate_morphism",
]
