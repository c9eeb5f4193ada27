"""Partition function p(n) and smallest-parts function spt(n) calculators.

Exact combinatorial oracles, convergent Kloosterman/Bessel series, and
algebraic CM-trace evaluations, cross-validated against each other.
"""

from ._core import (  # noqa: F401
    __version__,
    P,
    a_direct,
    a_selberg,
    class_polynomial,
    class_reps,
    dedekind_sum,
    eta,
    eta_multiplier,
    f,
    k_classical,
    lehmer_bound,
    p,
    p_rademacher,
    p_trace,
    pentagonal_index,
    petersson_eta_norm,
    s_coeff,
    s_eta,
    s_trace,
    spt,
    spt_enum,
    spt_series,
    spt_trace,
    summatory,
)

__all__ = [
    "P",
    "a_direct",
    "a_selberg",
    "class_polynomial",
    "class_reps",
    "dedekind_sum",
    "eta",
    "eta_multiplier",
    "f",
    "k_classical",
    "lehmer_bound",
    "p",
    "p_rademacher",
    "p_trace",
    "pentagonal_index",
    "petersson_eta_norm",
    "s_coeff",
    "s_eta",
    "s_trace",
    "spt",
    "spt_enum",
    "spt_series",
    "spt_trace",
    "summatory",
]
