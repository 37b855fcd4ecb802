"""Monte Carlo harness and enumeration-oracle tests."""

import json
import math
from fractions import Fraction

import pytest

from tankcount import (
    BudgetExceededError,
    EstimatorKind,
    InputError,
    SimulationConfig,
    build_layout,
    enumerate_oracle,
    gtp_exact,
    gtp_um_exact,
    gtp_variance,
    oracle_statistic,
    p_miss_exact,
    run_mse,
)


def make_config(**overrides):
    base = dict(
        layout=build_layout([100]),
        estimator=EstimatorKind.GTP,
        k_values=(10,),
        trials=100,
        seed=7,
    )
    base.update(overrides)
    return SimulationConfig(**base)


class TestConfig:
    def test_validation(self):
        with pytest.raises(InputError):
            make_config(trials=0)
        with pytest.raises(InputError):
            make_config(k_values=())
        with pytest.raises(InputError):
            make_config(k_values=(0,))
        with pytest.raises(InputError):
            make_config(k_values=(101,))

    def test_fixed_gap_requires_equal_layout(self):
        uneven = build_layout([10, 20], [5])
        with pytest.raises(InputError):
            make_config(layout=uneven, estimator=EstimatorKind.FIXED_GAP)
        ragged_gaps = build_layout([10, 10, 10], [5, 6])
        with pytest.raises(InputError):
            make_config(layout=ragged_gaps, estimator=EstimatorKind.FIXED_GAP)

    def test_targets(self):
        mfp = make_config(
            layout=build_layout([10, 20], [5]), estimator=EstimatorKind.MFP
        )
        assert mfp.target == 30
        fixed = make_config(
            layout=build_layout([10, 10], [5]), estimator=EstimatorKind.FIXED_GAP
        )
        assert fixed.target == 10

    def test_config_id_derived_and_stable(self):
        a, b = make_config(), make_config()
        assert a.config_id == b.config_id
        assert a.config_id.startswith("cfg-")
        assert make_config(seed=8).config_id != a.config_id

    def test_from_dict_with_k_range(self):
        raw = {
            "layout": {"sizes": [10, 10], "gaps": [5]},
            "estimator": "MFP",
            "k_range": {"min": 4, "max": 10, "step": 3},
            "trials": 50,
            "seed": 3,
        }
        config = SimulationConfig.from_dict(raw)
        assert config.k_values == (4, 7, 10)
        assert config.estimator is EstimatorKind.MFP

    def test_from_dict_seed_override(self):
        raw = {
            "layout": {"sizes": [10]},
            "estimator": "GTP",
            "k_values": [2],
            "trials": 5,
            "seed": 3,
        }
        assert SimulationConfig.from_dict(raw, seed_override=99).seed == 99

    def test_from_dict_missing_field(self):
        with pytest.raises(InputError):
            SimulationConfig.from_dict({"layout": {"sizes": [5]}})


class TestRunMse:
    def test_full_capture_has_zero_error(self):
        config = make_config(
            layout=build_layout([12]), k_values=(12,), trials=1
        )
        report = run_mse(config)
        assert report.rows[0].mse == 0.0
        assert report.rows[0].mean_estimate == 12.0

    def test_gtp_mse_matches_closed_form_variance(self):
        n, k, trials = 100, 10, 100_000
        config = make_config(trials=trials, k_values=(k,), seed=123)
        row = run_mse(config).rows[0]
        expected = float(gtp_variance(n, k))  # unbiased: MSE == variance
        # The estimate depends only on the maximum, whose pmf is
        # C(m-1, k-1)/C(n, k), so the sampling variance of the squared
        # error has an exact value to build the 3-sigma band from.
        denom = math.comb(n, k)
        second = fourth = Fraction(0)
        for m in range(k, n + 1):
            p = Fraction(math.comb(m - 1, k - 1), denom)
            err = Fraction(m * (k + 1) - k, k) - n
            second += p * err**2
            fourth += p * err**4
        se = math.sqrt(float(fourth - second**2) / trials)
        assert abs(row.mse - expected) < 3 * se

    def test_rows_sorted_and_normalized(self):
        config = make_config(k_values=(20, 5, 10), trials=30)
        report = run_mse(config)
        assert [r.k for r in report.rows] == [5, 10, 20]
        for row in report.rows:
            assert row.mse_normalized == row.mse / 100**2
            assert row.mse >= row.bias**2 - 1e-9

    def test_determinism_and_seed_sensitivity(self):
        a = run_mse(make_config(trials=500, seed=11))
        b = run_mse(make_config(trials=500, seed=11))
        c = run_mse(make_config(trials=500, seed=12))
        assert a.rows == b.rows
        assert a.rows != c.rows
        assert a.csv_lines() == b.csv_lines()

    def test_excluded_trials_counted_not_fatal(self):
        # The unknown-minimum estimator rejects singletons, so k=1 excludes
        # every trial; k=2 keeps them all.
        config = make_config(
            estimator=EstimatorKind.GTP_UM, k_values=(1, 2), trials=40
        )
        report = run_mse(config)
        first, second = report.rows
        assert first.excluded == 40
        assert math.isnan(first.mse)
        assert second.excluded == 0

    def test_mfp_mean_near_truth_with_plenty_of_samples(self):
        layout = build_layout([100] * 5, [900] * 4)
        config = make_config(
            layout=layout,
            estimator=EstimatorKind.MFP,
            k_values=(40,),
            trials=10_000,
            seed=20260811,
        )
        row = run_mse(config).rows[0]
        assert abs(row.mean_estimate - 500) / 500 < 0.05

    def test_fixed_gap_k1_runs(self):
        layout = build_layout([50, 50], [10])
        config = make_config(
            layout=layout,
            estimator=EstimatorKind.FIXED_GAP_K1,
            k_values=(1,),
            trials=2000,
            seed=5,
        )
        row = run_mse(config).rows[0]
        assert abs(row.mean_estimate - 50) < 10

    def test_csv_round_trip(self, tmp_path):
        report = run_mse(make_config(trials=20, k_values=(3, 7)))
        path = tmp_path / "out.csv"
        report.write_csv(path)
        lines = path.read_text().strip().split("\n")
        assert lines[0] == (
            "config_id,k,trials,excluded,mean_estimate,bias,mse,mse_normalized"
        )
        assert len(lines) == 3
        fields = lines[1].split(",")
        assert fields[1] == "3"
        float(fields[6])  # mse parses


class TestEnumerateOracle:
    def test_gtp_mean_is_population(self):
        mean, variance, subsets = enumerate_oracle(build_layout([5]), 2, gtp_exact)
        assert mean == 5
        assert variance == gtp_variance(5, 2)
        assert subsets == 10

    def test_gtp_um_on_shifted_interval(self):
        layout = build_layout([5], first_start=17)
        mean, variance, subsets = enumerate_oracle(layout, 3, gtp_um_exact)
        assert mean == 5
        assert variance == Fraction(12, 5)
        assert subsets == 10

    def test_miss_indicator_matches_exact_probability(self):
        layout = build_layout([2, 2], [3])
        stat = oracle_statistic("miss", layout)
        mean, _, _ = enumerate_oracle(layout, 2, stat)
        assert mean == p_miss_exact(2, 2, 2) == Fraction(1, 3)

    def test_subset_count_exact(self):
        layout = build_layout([4, 3], [2])
        _, _, subsets = enumerate_oracle(layout, 3, lambda s: 0)
        assert subsets == math.comb(7, 3)

    def test_budget_enforced(self):
        layout = build_layout([40])
        with pytest.raises(BudgetExceededError) as err:
            enumerate_oracle(layout, 20, gtp_exact, budget=1000)
        assert err.value.subsets == math.comb(40, 20)

    def test_float_statistic_demotes_gracefully(self):
        layout = build_layout([2, 2], [3])
        stat = oracle_statistic("mfp", layout)
        mean, variance, _ = enumerate_oracle(layout, 2, stat)
        assert isinstance(mean, float)
        assert variance >= 0

    def test_unknown_statistic(self):
        with pytest.raises(InputError):
            oracle_statistic("median", build_layout([5]))

    def test_invalid_sample_size(self):
        with pytest.raises(InputError):
            enumerate_oracle(build_layout([5]), 6, gtp_exact)


class TestJsonConfigFile:
    def test_file_round_trip(self, tmp_path):
        raw = {
            "config_id": "demo",
            "layout": {"sizes": [20, 20], "gaps": [100]},
            "estimator": "MFP",
            "k_values": [4, 8],
            "trials": 25,
            "seed": 99,
        }
        path = tmp_path / "config.json"
        path.write_text(json.dumps(raw))
        config = SimulationConfig.from_dict(json.loads(path.read_text()))
        report = run_mse(config)
        assert report.rows[0].config_id == "demo"
        assert len(report.rows) == 2
