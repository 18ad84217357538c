"""Information/disturbance tradeoff for spin-pair direction encodings."""

from ._core import (
    bound_curve,
    bound_distance,
    build_discrete,
    compare,
    d_min,
    evaluate,
    f_max,
    fg,
    information_max,
    mdm_seed,
    moments,
    monte_carlo,
    optimize,
    theta_max,
    validate_seed,
)

__all__ = [
    "bound_curve",
    "bound_distance",
    "build_discrete",
    "compare",
    "d_min",
    "evaluate",
    "f_max",
    "fg",
    "information_max",
    "mdm_seed",
    "moments",
    "monte_carlo",
    "optimize",
    "theta_max",
    "validate_seed",
]
