"""Monte Carlo MSE harness and exhaustive-enumeration oracle.

``run_mse`` draws independent samples from a true layout, applies a
configured estimator, and reports mean, bias, and mean squared error per
sample size.  Trials whose estimator legitimately cannot produce a value
(for example a split that needs more serials than were drawn) are excluded
and counted rather than aborting the sweep.

``enumerate_oracle`` is the brute-force ground truth: it visits every
size-k subset of the layout's serials exactly once and returns the exact
mean and variance of any statistic, staying in rational arithmetic whenever
the statistic does.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Callable

from .errors import BudgetExceededError, InputError
from .estimators import (
    Sample,
    gtp_estimate,
    gtp_exact,
    gtp_um_estimate,
    gtp_um_exact,
)
from .fixedgap import fixed_gap_estimate, fixed_gap_estimate_k1
from .multifactory import mfp_estimate
from .sampling import FactoryLayout, build_layout, draw_sample, trial_rng


class EstimatorKind(str, Enum):
    """Which estimator a simulation applies to each drawn sample."""

    GTP = "GTP"
    GTP_UM = "GTP_UM"
    MFP = "MFP"
    MFP_MIN_UNKNOWN = "MFP_MIN_UNKNOWN"
    FIXED_GAP = "FIXED_GAP"
    FIXED_GAP_K1 = "FIXED_GAP_K1"


_FIXED_GAP_KINDS = (EstimatorKind.FIXED_GAP, EstimatorKind.FIXED_GAP_K1)


@dataclass(frozen=True)
class SimulationConfig:
    """One Monte Carlo sweep: a layout, an estimator, sample sizes, seed."""

    layout: FactoryLayout
    estimator: EstimatorKind
    k_values: tuple[int, ...]
    trials: int
    seed: int
    config_id: str = ""

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise InputError(f"trials must be >= 1, got {self.trials}")
        if len(self.k_values) == 0:
            raise InputError("k_values must not be empty")
        bad = [k for k in self.k_values if not 1 <= k <= self.layout.n_tot]
        if bad:
            raise InputError(
                f"sample sizes {bad} outside 1..{self.layout.n_tot}"
            )
        if self.seed < 0:
            raise InputError("seed must be a non-negative integer")
        if self.estimator in _FIXED_GAP_KINDS:
            if len(set(self.layout.sizes)) != 1 or len(set(self.layout.gaps)) > 1:
                raise InputError(
                    "fixed-gap estimators need equal sizes and equal gaps, "
                    f"got sizes={self.layout.sizes}, gaps={self.layout.gaps}"
                )
        if not self.config_id:
            object.__setattr__(self, "config_id", self._derive_id())

    def _derive_id(self) -> str:
        blob = json.dumps(
            [
                list(self.layout.sizes),
                list(self.layout.gaps),
                self.layout.first_start,
                self.estimator.value,
                list(self.k_values),
                self.trials,
                self.seed,
            ]
        ).encode()
        return "cfg-" + hashlib.sha256(blob).hexdigest()[:8]

    @property
    def target(self) -> int:
        """The quantity the estimator is judged against.

        Total production for the total-production estimators; the common
        per-factory size for the fixed-gap family, which estimates exactly
        that.
        """
        if self.estimator in _FIXED_GAP_KINDS:
            return self.layout.sizes[0]
        return self.layout.n_tot

    @classmethod
    def from_dict(cls, raw: dict, seed_override: int | None = None):
        """Build a config from the JSON document schema.

        Expects ``layout`` (with ``sizes``, optional ``gaps`` and
        ``first_start``), ``estimator``, ``trials``, ``seed``, and either
        ``k_values`` or ``k_range`` with min/max and optional step.
        """
        try:
            layout_raw = raw["layout"]
            layout = build_layout(
                [int(s) for s in layout_raw["sizes"]],
                [int(g) for g in layout_raw.get("gaps", [])],
                int(layout_raw.get("first_start", 1)),
            )
            estimator = EstimatorKind(raw["estimator"])
            if "k_values" in raw:
                k_values = tuple(int(k) for k in raw["k_values"])
            else:
                kr = raw["k_range"]
                k_values = tuple(
                    range(int(kr["min"]), int(kr["max"]) + 1, int(kr.get("step", 1)))
                )
            trials = int(raw["trials"])
            seed = int(raw["seed"]) if seed_override is None else seed_override
            config_id = str(raw.get("config_id", ""))
        except KeyError as exc:
            raise InputError(f"config missing required field {exc}") from exc
        except ValueError as exc:
            raise InputError(f"malformed config value: {exc}") from exc
        return cls(layout, estimator, k_values, trials, seed, config_id)


@dataclass(frozen=True)
class SimulationRow:
    """Per-sample-size results of one sweep."""

    config_id: str
    k: int
    trials: int
    excluded: int
    mean_estimate: float
    bias: float
    mse: float
    mse_normalized: float


CSV_HEADER = "config_id,k,trials,excluded,mean_estimate,bias,mse,mse_normalized"


@dataclass(frozen=True)
class SimulationReport:
    """All rows of a sweep plus the config and seed that produced them."""

    rows: tuple[SimulationRow, ...]
    config: SimulationConfig
    seed: int

    def csv_lines(self) -> list[str]:
        lines = [CSV_HEADER]
        for r in self.rows:
            lines.append(
                f"{r.config_id},{r.k},{r.trials},{r.excluded},"
                f"{r.mean_estimate!r},{r.bias!r},{r.mse!r},{r.mse_normalized!r}"
            )
        return lines

    def write_csv(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(self.csv_lines()) + "\n")


def _make_estimator(
    kind: EstimatorKind, layout: FactoryLayout
) -> Callable[[Sample], float]:
    if kind is EstimatorKind.GTP:
        return lambda s: gtp_estimate(s).value
    if kind is EstimatorKind.GTP_UM:
        return lambda s: gtp_um_estimate(s).value
    if kind is EstimatorKind.MFP:
        l = layout.factories
        return lambda s: mfp_estimate(s, l, lower_known=True).value
    if kind is EstimatorKind.MFP_MIN_UNKNOWN:
        l = layout.factories
        return lambda s: mfp_estimate(s, l, lower_known=False).value
    l = layout.factories
    gap = layout.gaps[0] if layout.gaps else 0
    if kind is EstimatorKind.FIXED_GAP:
        return lambda s: fixed_gap_estimate(l, gap, s.size, s.maximum).value
    return lambda s: fixed_gap_estimate_k1(l, gap, s.maximum).value


def run_mse(config: SimulationConfig) -> SimulationReport:
    """Run the configured sweep and return its report, rows sorted by k.

    Every (k, trial) pair gets its own counter-based stream, so the report
    depends only on (config, seed), never on scheduling.  Excluded trials
    are those whose estimator raised an input-validity error on the drawn
    sample; their count is reported per row.
    """
    estimator = _make_estimator(config.estimator, config.layout)
    target = config.target
    rows = []
    for k in sorted(config.k_values):
        total = 0.0
        total_sq = 0.0
        kept = 0
        excluded = 0
        for trial in range(config.trials):
            rng = trial_rng(config.seed, k, trial)
            sample = draw_sample(config.layout, k, rng)
            try:
                value = estimator(sample)
            except InputError:
                excluded += 1
                continue
            kept += 1
            total += value
            total_sq += (value - target) ** 2
        if kept:
            mean = total / kept
            mse = total_sq / kept
            bias = mean - target
        else:
            mean = bias = mse = float("nan")
        rows.append(
            SimulationRow(
                config_id=config.config_id,
                k=k,
                trials=config.trials,
                excluded=excluded,
                mean_estimate=mean,
                bias=bias,
                mse=mse,
                mse_normalized=mse / target**2,
            )
        )
    return SimulationReport(rows=tuple(rows), config=config, seed=config.seed)


def enumerate_oracle(
    layout: FactoryLayout,
    sample_size: int,
    statistic: Callable[[Sample], Fraction | float | int],
    budget: int = 10_000_000,
):
    """Exact mean and variance of a statistic over every size-k subset.

    Visits each of the C(N_tot, k) subsets exactly once.  Accumulation
    starts rational and stays exact as long as the statistic returns
    Fractions or ints; a float-returning statistic demotes it to float.
    Raises :class:`BudgetExceededError` before enumerating more subsets
    than ``budget``.
    """
    n = layout.n_tot
    if not 1 <= sample_size <= n:
        raise InputError(
            f"need 1 <= sample_size <= {n}, got {sample_size}"
        )
    subsets = comb(n, sample_size)
    if subsets > budget:
        raise BudgetExceededError(subsets, budget)
    serials = layout.serials()
    total = Fraction(0)
    total_sq = Fraction(0)
    for combo in itertools.combinations(serials, sample_size):
        value = statistic(Sample(combo))
        total += value
        total_sq += value * value
    mean = total / subsets
    variance = total_sq / subsets - mean * mean
    return mean, variance, subsets


ORACLE_STATISTICS = ("gtp", "gtp-um", "mfp", "miss")


def oracle_statistic(
    name: str, layout: FactoryLayout
) -> Callable[[Sample], Fraction | float | int]:
    """Named statistics for the enumeration oracle.

    ``gtp`` and ``gtp-um`` are the exact-rational estimator values; ``mfp``
    is the multi-factory estimate with the layout's factory count; ``miss``
    is the 0/1 indicator that some factory contributed no serial.
    """
    if name == "gtp":
        return gtp_exact
    if name == "gtp-um":
        return gtp_um_exact
    if name == "mfp":
        l = layout.factories
        return lambda s: mfp_estimate(s, l, lower_known=True).value
    if name == "miss":
        l = layout.factories

        def missing(sample: Sample) -> int:
            covered = {layout.factory_of(s) for s in sample.serials}
            return 1 if len(covered) < l else 0

        return missing
    raise InputError(
        f"unknown statistic {name!r}; choose from {ORACLE_STATISTICS}"
    )
