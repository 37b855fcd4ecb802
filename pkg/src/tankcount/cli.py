"""Command-line front door.

Single computations print JSON (top-level ``schema: 1``) to stdout; sweeps
write CSV files.  Exit codes: 0 success, 2 input validation failure,
3 budget or regime errors.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import click

from .combinat import (
    hockey_stick_sides,
    identity_i_sides,
    identity_ii_sides,
    identity_iii_sides,
)
from .errors import BudgetExceededError, InputError, RegimeError
from .estimators import Estimate, Sample, gtp_estimate, gtp_um_estimate
from .fixedgap import (
    fixed_gap_estimate,
    fixed_gap_estimate_invert,
    fixed_gap_estimate_k1,
)
from .missprob import (
    CurveMapping,
    GrowthRegime,
    p_miss_exact,
    p_miss_limit_exact,
    regime_curve,
)
from .multifactory import MfpSplit, mfp_estimate
from .sampling import build_layout
from .simulate import (
    ORACLE_STATISTICS,
    SimulationConfig,
    enumerate_oracle,
    oracle_statistic,
    run_mse,
)

SCHEMA_VERSION = 1


class _Failure(click.ClickException):
    """ClickException with a configurable exit code."""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


def _guard(fn, *args, **kwargs):
    """Run a library call, mapping domain errors onto CLI exit codes."""
    try:
        return fn(*args, **kwargs)
    except InputError as exc:
        raise _Failure(str(exc), 2) from exc
    except (BudgetExceededError, RegimeError) as exc:
        raise _Failure(str(exc), 3) from exc


def _emit(payload: dict) -> None:
    click.echo(json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2))


def _rational_payload(value: Fraction) -> dict:
    return {
        "exact": f"{value.numerator}/{value.denominator}",
        "num": value.numerator,
        "den": value.denominator,
        "decimal": float(value),
    }


def _estimate_payload(estimate: Estimate) -> dict:
    diagnostics = estimate.diagnostics or {}
    diagnostics = {
        key: value.as_dict() if isinstance(value, MfpSplit) else value
        for key, value in diagnostics.items()
    }
    return {
        "value": estimate.value,
        "method": estimate.method.value,
        "diagnostics": diagnostics,
    }


def _parse_serials(serials: str | None, serials_file: str | None) -> Sample:
    if (serials is None) == (serials_file is None):
        raise _Failure("provide exactly one of --serials or --serials-file", 2)
    if serials is not None:
        flag, tokens = "--serials", [t for t in serials.split(",") if t.strip()]
    else:
        flag = "--serials-file"
        try:
            text = Path(serials_file).read_text(encoding="utf-8")
        except OSError as exc:
            raise _Failure(f"--serials-file: {exc}", 2) from exc
        tokens = text.split()
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise _Failure(f"{flag}: expected integers, {exc}", 2) from exc
    if not values:
        raise _Failure(f"{flag}: no serial numbers given", 2)
    try:
        return Sample.from_serials(values)
    except InputError as exc:
        raise _Failure(f"{flag}: {exc}", 2) from exc


@click.group()
@click.version_option()
def main() -> None:
    """Serial-number production estimation toolkit."""


@main.group()
def estimate() -> None:
    """Point estimates from an observed sample of serial numbers."""


_serials_option = click.option("--serials", default=None, help="Comma-separated serial numbers.")
_serials_file_option = click.option(
    "--serials-file",
    default=None,
    type=click.Path(),
    help="File with one serial number per line.",
)


@estimate.command("gtp")
@_serials_option
@_serials_file_option
def estimate_gtp(serials, serials_file) -> None:
    """Classical estimator: serials run upward from 1."""
    sample = _parse_serials(serials, serials_file)
    _emit(_estimate_payload(_guard(gtp_estimate, sample)))


@estimate.command("gtp-um")
@_serials_option
@_serials_file_option
def estimate_gtp_um(serials, serials_file) -> None:
    """Unknown-minimum estimator: serials run upward from an unknown start."""
    sample = _parse_serials(serials, serials_file)
    _emit(_estimate_payload(_guard(gtp_um_estimate, sample)))


@estimate.command("mfp")
@_serials_option
@_serials_file_option
@click.option("--factories", type=int, required=True, help="Number of factories.")
@click.option(
    "--min-unknown",
    is_flag=True,
    help="Do not assume the first factory starts at serial 1.",
)
def estimate_mfp(serials, serials_file, factories, min_unknown) -> None:
    """Multi-factory total production estimate."""
    sample = _parse_serials(serials, serials_file)
    result = _guard(mfp_estimate, sample, factories, lower_known=not min_unknown)
    _emit(_estimate_payload(result))


@estimate.command("fixed-gap")
@_serials_option
@_serials_file_option
@click.option("--factories", type=int, required=True, help="Number of factories.")
@click.option("--gap", type=int, required=True, help="Known gap between factories.")
@click.option(
    "--invert-exact",
    is_flag=True,
    help="Invert the exact expected maximum over integer sizes.",
)
def estimate_fixed_gap(serials, serials_file, factories, gap, invert_exact) -> None:
    """Common factory size estimate under equal sizes and a known gap."""
    sample = _parse_serials(serials, serials_file)
    k, m = sample.size, sample.maximum
    if invert_exact:
        result = _guard(fixed_gap_estimate_invert, factories, gap, k, m)
    elif k == 1:
        result = _guard(fixed_gap_estimate_k1, factories, gap, m)
    else:
        result = _guard(fixed_gap_estimate, factories, gap, k, m)
    _emit(_estimate_payload(result))


@main.group()
def prob() -> None:
    """Probabilities of missing one or more factories."""


@prob.command("miss")
@click.option("--factory-size", type=int, default=None, help="Serials per factory.")
@click.option("--factories", type=int, required=True)
@click.option("--samples", type=int, required=True)
@click.option(
    "--limit", is_flag=True, help="Use the large-factory limit instead of an exact size."
)
def prob_miss(factory_size, factories, samples, limit) -> None:
    """Probability that the sample misses at least one factory."""
    if limit:
        value = _guard(p_miss_limit_exact, factories, samples)
    else:
        if factory_size is None:
            raise _Failure("--factory-size is required unless --limit is set", 2)
        value = _guard(p_miss_exact, factory_size, factories, samples)
    _emit(_rational_payload(value))


@prob.command("curve")
@click.option("--A", "scale", type=float, required=True, help="Growth-law scale.")
@click.option("--exponent", type=float, required=True, help="Growth-law exponent.")
@click.option("--k-min", type=int, required=True)
@click.option("--k-max", type=int, required=True)
@click.option("--factory-size", type=int, default=None)
@click.option("--limit", is_flag=True)
@click.option("--out", type=click.Path(), required=True, help="Output CSV path.")
def prob_curve(scale, exponent, k_min, k_max, factory_size, limit, out) -> None:
    """Miss probability along l = floor(A * k**exponent), written as CSV."""
    if limit == (factory_size is not None):
        raise _Failure("provide exactly one of --factory-size or --limit", 2)
    if k_min < 1 or k_max < k_min:
        raise _Failure("--k-min/--k-max: need 1 <= k-min <= k-max", 2)
    regime = _guard(GrowthRegime, scale, exponent)
    points = _guard(
        regime_curve,
        regime,
        CurveMapping.L_OF_K,
        range(k_min, k_max + 1),
        factory_size,
    )
    with open(out, "w", encoding="utf-8") as fh:
        fh.write("k,l,p_miss\n")
        for point in points:
            fh.write(f"{point.samples},{point.factories},{point.p_miss!r}\n")
    _emit({"points": len(points), "out": str(out)})


@main.command("simulate")
@click.option(
    "--config", "config_path", type=click.Path(), required=True, help="JSON config file."
)
@click.option("--out", type=click.Path(), required=True, help="Output CSV path.")
@click.option("--seed", type=int, default=None, help="Override the config seed.")
def simulate_cmd(config_path, out, seed) -> None:
    """Run a Monte Carlo MSE sweep from a JSON config."""
    try:
        raw = json.loads(Path(config_path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise _Failure(f"--config: {exc}", 2) from exc
    except json.JSONDecodeError as exc:
        raise _Failure(f"--config: not valid JSON: {exc}", 2) from exc
    config = _guard(SimulationConfig.from_dict, raw, seed_override=seed)
    report = run_mse(config)
    report.write_csv(out)
    _emit(
        {
            "config_id": config.config_id,
            "estimator": config.estimator.value,
            "target": config.target,
            "seed": report.seed,
            "rows": len(report.rows),
            "excluded_total": sum(r.excluded for r in report.rows),
            "out": str(out),
        }
    )


@main.group()
def verify() -> None:
    """Exhaustive self-checks of the exact combinatorial layer."""


@verify.command("identities")
@click.option("--max-n", type=int, default=30, show_default=True)
def verify_identities(max_n) -> None:
    """Check the moment, convolution, and hockey-stick identities on a grid."""
    if max_n < 1:
        raise _Failure("--max-n must be >= 1", 2)
    mismatches = 0
    moment_triples = 0
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for b in range(1, k + 1):
                moment_triples += 1
                for sides in (identity_i_sides(n, k, b), identity_ii_sides(n, k, b)):
                    if sides[0] != sides[1]:
                        mismatches += 1
    convolution_triples = 0
    for a in range(0, 9):
        for b in range(0, 9):
            for k in range(0, 13):
                convolution_triples += 1
                lhs, rhs = identity_iii_sides(a, b, k)
                if lhs != rhs:
                    mismatches += 1
    hockey_pairs = 0
    for n in range(0, 2 * max_n + 1):
        for r in range(0, n + 1):
            hockey_pairs += 1
            lhs, rhs = hockey_stick_sides(n, r)
            if lhs != rhs:
                mismatches += 1
    _emit(
        {
            "moment_identity_triples": moment_triples,
            "convolution_identity_triples": convolution_triples,
            "hockey_stick_pairs": hockey_pairs,
            "mismatches": mismatches,
        }
    )
    if mismatches:
        raise _Failure(f"{mismatches} identity mismatches", 1)


@main.command("oracle")
@click.option(
    "--layout",
    "layout_spec",
    required=True,
    help='Inline JSON like {"sizes":[2,2],"gaps":[3]} or a path to a JSON file.',
)
@click.option("--k", type=int, required=True, help="Subset size to enumerate.")
@click.option(
    "--statistic",
    type=click.Choice(ORACLE_STATISTICS),
    required=True,
)
@click.option("--budget", type=int, default=10_000_000, show_default=True)
def oracle_cmd(layout_spec, k, statistic, budget) -> None:
    """Exact mean/variance of a statistic over every size-k subset."""
    text = layout_spec
    path = Path(layout_spec)
    if not layout_spec.lstrip().startswith("{") and path.exists():
        text = path.read_text(encoding="utf-8")
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _Failure(f"--layout: not valid JSON: {exc}", 2) from exc
    layout = _guard(
        build_layout,
        [int(s) for s in raw.get("sizes", [])],
        [int(g) for g in raw.get("gaps", [])],
        int(raw.get("first_start", 1)),
    )
    stat = _guard(oracle_statistic, statistic, layout)
    mean, variance, subsets = _guard(enumerate_oracle, layout, k, stat, budget)
    payload: dict = {"statistic": statistic, "k": k, "subsets": subsets}
    if isinstance(mean, Fraction):
        payload["mean"] = _rational_payload(mean)
        payload["variance"] = _rational_payload(variance)
    else:
        payload["mean"] = mean
        payload["variance"] = variance
    _emit(payload)


if __name__ == "__main__":
    main()
