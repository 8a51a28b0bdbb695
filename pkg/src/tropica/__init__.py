"""Idempotent (tropical) linear algebra: semifields, free semimodules,
max-plus spectral theory and meet-subspaces of semicontinuous functions."""

from .errors import (
    DimensionMismatch,
    DivergentStar,
    EmptyInf,
    InversionOfZero,
    NoCycles,
    NotArchimedean,
    NotATopology,
    NotClosed,
    NotMember,
    ParseError,
    TooLarge,
    TropicaError,
    UnboundedCoordinate,
    VerificationFailed,
)
from .function_space import (
    FiniteTopology,
    MeetSubspace,
    all_topologies,
    archimedean_in_subspace,
    contains,
    discrete_topology,
    e_star,
    embed_free,
    is_usc,
    make_meet_subspace,
    make_topology,
    meet_join,
    meet_project,
    unit_function,
)
from .semifield import MAXTIMES, RMAX, ZMAX, Semifield, get_semifield
from .semimodule import (
    dual_apply,
    identity,
    is_archimedean,
    mat_apply,
    mat_mul,
    mat_residuate,
    scalar_mul,
    vec_leq,
    vec_oplus,
    zeros,
)
from .spectral import (
    EigenSolution,
    SpectrumReport,
    all_eigenvalues,
    critical_nodes,
    eigen_check,
    kleene_plus,
    kleene_star,
    max_cycle_mean,
    orbit_simulate,
    principal_eigenpair,
)

__version__ = "0.1.0"
