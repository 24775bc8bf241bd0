"""Weighted tournaments as 2-dimensional Euclidean profiles, and exact Kemeny/Slater ranking."""

from ._backend import BACKEND
from .construct import construct, construct_l1, construct_l2, construct_linf, construct_mcgarvey
from .core import (
    Bipartition,
    Parity,
    Profile,
    WeightedTournament,
    check_bipartite,
    check_parity,
    kendall_tau,
    kt_to_profile,
    majority_tournament,
)
from .errors import (
    BipartitionError,
    CapacityError,
    EmptyProfile,
    InputError,
    ParityError,
    TieError,
    VerificationError,
)
from .geometry import (
    CircularEmbedding,
    CircularVoter,
    Norm,
    PlanarEmbedding,
    PlanarVoter,
    compare_l2_on_circle,
    derive_profile,
    dist_l1,
    dist_linf,
    verify_embedding,
)
from .pipeline import FasInstance, fas_brute_force, fas_to_tournament, run_pipeline, verify_inducibility
from .solve import KemenyResult, kemeny_brute_force, kemeny_dp, kemeny_lower_bound, slater_ranking

__version__ = "0.1.0"
