"""Multiplicities and decompositions for configuration spaces X[n]."""

from ._core import (
    BudgetExceeded,
    Error,
    InexactDivision,
    betti_of_fm,
    brute_bivariate,
    decompose_formal,
    egf_solve,
    enumerate_nests,
    h_poly,
    kunneth_rational,
    multiplicity_table,
    nest_stats,
    sigma,
    verify,
    x3_oracle,
)

__all__ = [
    "BudgetExceeded",
    "Error",
    "InexactDivision",
    "betti_of_fm",
    "brute_bivariate",
    "decompose_formal",
    "egf_solve",
    "enumerate_nests",
    "h_poly",
    "kunneth_rational",
    "multiplicity_table",
    "nest_stats",
    "sigma",
    "verify",
    "x3_oracle",
]
