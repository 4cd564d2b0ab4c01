"""Distributions of 2-D random walks whose step angles are uniform on [-a, a]."""

from ._core import (
    ArcLaw,
    ConvergenceError,
    DomainError,
    EmptyInputError,
    ExactTwoStep,
    ExactTwoStepLaw,
    GeneralizedChiSquare,
    GridError,
    JointLaw,
    LargeNModel,
    PolarGridDistribution,
    SupportBoundary,
    WalkConfig,
    __version__,
    cdf_angle_approx,
    cdf_radius_recursive,
    clt_moments,
    compute_joint,
    config,
    is_radius_function_of_angle,
    ks_distance,
    min_radius,
    normal_cdf,
    normal_pdf,
    pdf_angle_approx,
    propagate,
    sample_walk,
    uniqueness_threshold,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
