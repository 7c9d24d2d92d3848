"""Covering codes in Hamming space.

Thin Python layer over the C++ core: words are strings in the same textual
form as code files (digits for q <= 10, comma-separated integers otherwise).
"""

import json

from ._covering import (  # noqa: F401
    ParseError,
    ball_volume,
    bounds_table_csv,
    corollary2_chain_check,
    corollary_bound_ksv,
    corollary_bound_new,
    density,
    enumerate_ball,
    feasibility,
    hamming_distance,
    index_word,
    limit_lemma_bound,
    optimize_theorem1,
    sphere_covering_lower_bound,
    theorem1_bound,
    theorem1_bound_closed,
    theorem15_bound,
    verify_covering,
    verify_covering_sampled,
    word_index,
)
from . import _covering


def minimal_covering_code(q, n, R, time_budget=60.0, node_budget=100_000_000):
    """Solve for a minimum covering code; returns the result as a dict."""
    return json.loads(_covering.minimal_covering_code(q, n, R, time_budget, node_budget))


def ksv_construct(q, n, R, x, y, seed=0, base_policy="auto"):
    """Run the recursive construction; returns (words, trace dict)."""
    words, trace = _covering.ksv_construct(q, n, R, x, y, seed, base_policy)
    return words, json.loads(trace)
