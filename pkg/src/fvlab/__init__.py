"""Exact face-count invariants of simplicial polytopes, general polytopes
and regular CW spheres: f/h/g-vector transforms, M-sequence recognition,
the polynomial-time membership decider, graded posets with flag vectors,
Gorenstein* verification, cd-index algebra, and the rank-5 diophantine
decider.
"""

from .cdalgebra import (AbPolynomial, CdPolynomial, StanleySphere, ab_index,
                        ab_to_cd, cd_expand, cd_mul, cd_to_flag, cd_words,
                        cone_coordinates, flag_to_ab, poset_cd_index,
                        stanley_sphere, word_degree)
from .config import Caps, load_caps
from .decider import (ACCEPTED, BOUNDARY, EXTREMAL_RAY, INTERIOR, REJECTED,
                      BoundaryClass, Decision, classify_boundary,
                      connected_sum_g, decide_simplicial_entries,
                      decide_simplicial_f, ray_density_witness)
from .errors import CapExceeded, CdInexpressibleError, PosetError
from .gorenstein import (CAP_EXCEEDED, NOT_REALIZABLE, REALIZABLE,
                         FlagDecision, GorensteinCheck,
                         decide_flag_gorenstein, is_gorenstein_star)
from .homology import SimplicialComplexData, is_sphere_pattern, rational_betti
from .macaulay import (MACAULAY_VIOLATION, NEGATIVE_ENTRY, MacaulayRep,
                       MSequenceCheck, OrthantPoint, approximate_point,
                       binomial, is_m_sequence, l1_distance,
                       least_msequence_with_coordinate, macaulay_rep,
                       pseudo_power)
from .posets import (FlagVector, GradedPoset, boolean_lattice, dihedral_sphere,
                     flag_vector, is_eulerian, join, order_complex, polygon)
from .vectors import (FVector, GVector, HVector, f_to_h, fatness, g_to_h,
                      h_to_f, h_to_g)

__version__ = "0.1.0"

__all__ = [
    "AbPolynomial", "CdPolynomial", "StanleySphere", "ab_index", "ab_to_cd",
    "cd_expand", "cd_mul", "cd_to_flag", "cd_words", "cone_coordinates",
    "flag_to_ab", "poset_cd_index", "stanley_sphere", "word_degree",
    "Caps", "load_caps",
    "ACCEPTED", "REJECTED", "INTERIOR", "BOUNDARY", "EXTREMAL_RAY",
    "BoundaryClass", "Decision", "classify_boundary", "connected_sum_g",
    "decide_simplicial_entries", "decide_simplicial_f", "ray_density_witness",
    "CapExceeded", "CdInexpressibleError", "PosetError",
    "CAP_EXCEEDED", "NOT_REALIZABLE", "REALIZABLE", "FlagDecision",
    "GorensteinCheck", "decide_flag_gorenstein", "is_gorenstein_star",
    "SimplicialComplexData", "is_sphere_pattern", "rational_betti",
    "MACAULAY_VIOLATION", "NEGATIVE_ENTRY", "MacaulayRep", "MSequenceCheck",
    "OrthantPoint", "approximate_point", "binomial", "is_m_sequence",
    "l1_distance", "least_msequence_with_coordinate", "macaulay_rep",
    "pseudo_power",
    "FlagVector", "GradedPoset", "boolean_lattice", "dihedral_sphere",
    "flag_vector", "is_eulerian", "join", "order_complex", "polygon",
    "FVector", "GVector", "HVector", "f_to_h", "fatness", "g_to_h",
    "h_to_f", "h_to_g",
]
