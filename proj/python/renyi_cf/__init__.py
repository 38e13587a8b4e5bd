from ._renyi_cf import (
    RenyiError,
    bounds_table,
    contraction_ratio,
    cylinder_weight,
    cylinder_weight_qpoly,
    expand,
    gk_lower_bound,
    gk_upper_bound,
    k_constant,
    limit_cdf,
    renyi_map,
    rho_cdf,
    run_cli,
    sup_error,
)

__all__ = [
    "RenyiError",
    "bounds_table",
    "contraction_ratio",
    "cylinder_weight",
    "cylinder_weight_qpoly",
    "expand",
    "gk_lower_bound",
    "gk_upper_bound",
    "k_constant",
    "limit_cdf",
    "renyi_map",
    "rho_cdf",
    "run_cli",
    "sup_error",
]
