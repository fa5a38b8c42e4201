"""Riesz bounds for exponential systems on finite unions of arcs."""

from ._core import (
    DeltaSchedule,
    Error,
    InputError,
    IntervalSet,
    RieszReport,
    SearchError,
    block,
    build_adversarial_set,
    build_thm2,
    build_thm3,
    dirichlet_tail,
    dirichlet_tail_bound,
    divisor_counts,
    fourier_coeff,
    fourier_coeffs,
    good_n_search,
    gram,
    primes,
    quadrature_coeff,
    riesz_report,
    run_cli,
    scale_periodize,
    theorem1,
    uniform_rayleigh_progression,
)

__all__ = [
    "DeltaSchedule",
    "Error",
    "InputError",
    "IntervalSet",
    "RieszReport",
    "SearchError",
    "block",
    "build_adversarial_set",
    "build_thm2",
    "build_thm3",
    "dirichlet_tail",
    "dirichlet_tail_bound",
    "divisor_counts",
    "fourier_coeff",
    "fourier_coeffs",
    "good_n_search",
    "gram",
    "primes",
    "quadrature_coeff",
    "riesz_report",
    "run_cli",
    "scale_periodize",
    "theorem1",
    "uniform_rayleigh_progression",
]
