"""Exact computation of the Hecke eigenvalue bound for mod-p Siegel modular forms."""

from ._core import (
    ConsistencyError,
    ConventionError,
    CutoffExceeded,
    DomainError,
    HypothesisError,
    asymptotic_exponents,
    bernoulli,
    ekedahl_mass,
    enumerate_order,
    factorize,
    hecke_bound,
    is_prime,
    mass_constant,
    mass_constant_bernoulli,
    max_irrep_dim_bound,
    num_irreps,
    order_gsp_modn,
    order_gsp_prime,
    order_gsp_prime_power,
    order_gu,
    rep_sum_bound,
    run_cli,
    sigma_count,
    sweep,
    sylow_p_bound,
    zeta_negative,
)

__version__ = "0.1.0"
