"""Exact and asymptotic evaluation of the partition function p(n)."""

__version__ = "0.1.0"

from .cumulants import (
    CumulantValue,
    LogFValue,
    Method,
    e_term,
    kappa,
    kappa_direct,
    kappa_direct_alt,
    log_f,
    log_f_direct,
    sigma,
)
from .errors import (
    ConvergenceError,
    DomainError,
    InputTooLargeError,
    PartitionError,
    ResourceLimitError,
    SolverError,
)
from .eulerian import EulerianPoly, eulerian_eval, eulerian_poly
from .exact import PartitionTable, partition_bruteforce, partition_exact, partition_table
from .expansion import (
    ExpansionResult,
    Kind,
    d_coeff,
    expansion_term_table,
    hardy_ramanujan,
    j_coeff,
    p_approx_full,
    p_approx_simple,
)
from .numerics import PrecisionContext, context_for_n, geometric_tail_bound
from .saddle import (
    BoundReport,
    SaddleState,
    log_tn_approx,
    r_of_n,
    solve_tn,
    verify_saddle_bounds,
)
