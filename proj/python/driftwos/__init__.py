from ._core import (
    BoundaryFunction,
    Domain,
    Estimate,
    ProblemSpec,
    WalkConfig,
    bessel_i,
    estimate_grid,
    estimate_point,
    kappa,
    run_validation_suite,
    run_walk,
    sample_exit,
    sample_uniform_sphere,
    vmf_mean_resultant,
)

__all__ = [
    "BoundaryFunction",
    "Domain",
    "Estimate",
    "ProblemSpec",
    "WalkConfig",
    "bessel_i",
    "estimate_grid",
    "estimate_point",
    "kappa",
    "run_validation_suite",
    "run_walk",
    "sample_exit",
    "sample_uniform_sphere",
    "vmf_mean_resultant",
]
