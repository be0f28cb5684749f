"""Generalized Frame-Stewart numbers and multi-peg Hanoi plans.

Parameter lists `pq` hold (p_i, q_i) pairs starting at i = 3, so a list of
length m describes G_k for k = m + 2 pegs.
"""

from ._core import (
    BudgetExceeded,
    IllegalMove,
    ParamError,
    ParseError,
    UnsupportedRegime,
    bfs_optimal,
    binomial,
    constant_case_closed_form,
    constant_p_term,
    gfs_diff,
    gfs_fast,
    gfs_oracle,
    gfs_prefix,
    optimal_split,
    plan,
    plan_moves,
    smooth_stream,
    smooth_terms,
    split_indices,
    validate,
)

__all__ = [
    "BudgetExceeded",
    "IllegalMove",
    "ParamError",
    "ParseError",
    "UnsupportedRegime",
    "bfs_optimal",
    "binomial",
    "constant_case_closed_form",
    "constant_p_term",
    "gfs_diff",
    "gfs_fast",
    "gfs_oracle",
    "gfs_prefix",
    "optimal_split",
    "plan",
    "plan_moves",
    "smooth_stream",
    "smooth_terms",
    "split_indices",
    "validate",
]
