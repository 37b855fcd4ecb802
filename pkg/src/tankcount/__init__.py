"""Serial-number production estimation.

Estimators for the size of a serial-numbered population from a uniform
without-replacement sample: the classical sample-maximum estimator, the
unknown-minimum spread estimator, a multi-factory total-production
estimator, and fixed-known-gap estimators, together with exact
miss-a-factory probabilities, exact combinatorial identities, and a
reproducible Monte Carlo harness with brute-force enumeration oracles.
"""

from .combinat import (
    binomial,
    hockey_stick_sides,
    identity_i_sides,
    identity_ii_sides,
    identity_iii_sides,
)
from .errors import (
    BudgetExceededError,
    DegenerateSplitError,
    EmptySampleError,
    InputError,
    InsufficientSampleError,
    InvalidSerialError,
    OversampleError,
    RegimeError,
    TooFewSamplesError,
)
from .estimators import (
    Estimate,
    Method,
    Sample,
    SpreadMoments,
    gtp_estimate,
    gtp_exact,
    gtp_um_estimate,
    gtp_um_exact,
    gtp_um_variance,
    gtp_variance,
    spread_moments,
    spread_pmf,
)
from .fixedgap import (
    FixedGapModel,
    approx_in_regime,
    expected_max_exact,
    expected_offset_approx,
    expected_offset_exact,
    fixed_gap_estimate,
    fixed_gap_estimate_invert,
    fixed_gap_estimate_k1,
    max_pmf,
)
from .missprob import (
    CurveMapping,
    CurvePoint,
    GrowthRegime,
    p_miss_exact,
    p_miss_limit,
    p_miss_limit_exact,
    q_expectation,
    q_variance,
    regime_curve,
)
from .multifactory import MfpSplit, mfp_estimate, split_at_largest_gaps
from .sampling import FactoryLayout, build_layout, draw_sample, trial_rng
from .simulate import (
    CSV_HEADER,
    EstimatorKind,
    SimulationConfig,
    SimulationReport,
    SimulationRow,
    enumerate_oracle,
    oracle_statistic,
    run_mse,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CSV_HEADER",
    "CurveMapping",
    "CurvePoint",
    "DegenerateSplitError",
    "EmptySampleError",
    "Estimate",
    "EstimatorKind",
    "FactoryLayout",
    "FixedGapModel",
    "GrowthRegime",
    "InputError",
    "InsufficientSampleError",
    "InvalidSerialError",
    "Method",
    "MfpSplit",
    "OversampleError",
    "RegimeError",
    "Sample",
    "SimulationConfig",
    "SimulationReport",
    "SimulationRow",
    "SpreadMoments",
    "TooFewSamplesError",
    "approx_in_regime",
    "binomial",
    "build_layout",
    "draw_sample",
    "enumerate_oracle",
    "expected_max_exact",
    "expected_offset_approx",
    "expected_offset_exact",
    "fixed_gap_estimate",
    "fixed_gap_estimate_invert",
    "fixed_gap_estimate_k1",
    "gtp_estimate",
    "gtp_exact",
    "gtp_um_estimate",
    "gtp_um_exact",
    "gtp_um_variance",
    "gtp_variance",
    "hockey_stick_sides",
    "identity_i_sides",
    "identity_ii_sides",
    "identity_iii_sides",
    "max_pmf",
    "mfp_estimate",
    "oracle_statistic",
    "p_miss_exact",
    "p_miss_limit",
    "p_miss_limit_exact",
    "q_expectation",
    "q_variance",
    "regime_curve",
    "run_mse",
    "spread_moments",
    "spread_pmf",
    "split_at_largest_gaps",
    "trial_rng",
]
