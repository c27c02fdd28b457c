"""Exact PASEP, PT chain and permutation-tableau machinery."""

from .algebra import LaurentPoly
from .analysis import build_system, partition_function, simulate, stationary_exact, verify_balance, verify_projection
from .involution import conjugate, invol_perm, invol_tableau
from .moves import pt_transitions, project
from .pasep import PasepParams, particle_hole, pasep_transitions
from .permutations import perm_stats, perm_transitions, phi, phi_inverse, project_perm
from .tableaux import PermutationTableau, enumerate_tableaux, f_lambda, tableau_stats, weight

__all__ = [
    "LaurentPoly",
    "PasepParams",
    "PermutationTableau",
    "build_system",
    "conjugate",
    "enumerate_tableaux",
    "f_lambda",
    "invol_perm",
    "invol_tableau",
    "particle_hole",
    "partition_function",
    "pasep_transitions",
    "perm_stats",
    "perm_transitions",
    "phi",
    "phi_inverse",
    "project",
    "project_perm",
    "pt_transitions",
    "simulate",
    "stationary_exact",
    "tableau_stats",
    "verify_balance",
    "verify_projection",
    "weight",
]
