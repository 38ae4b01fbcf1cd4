"""Python access to the andopt C++ core."""

from ._core import (
    evaluate,
    friedman_ranks,
    hv,
    igd,
    reference_front,
    run,
    sde_density,
    select,
    variable_count,
    vector_angle,
    wilcoxon_rank_sum,
)

__all__ = [
    "evaluate",
    "friedman_ranks",
    "hv",
    "igd",
    "reference_front",
    "run",
    "sde_density",
    "select",
    "variable_count",
    "vector_angle",
    "wilcoxon_rank_sum",
]
