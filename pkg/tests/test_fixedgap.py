"""Fixed-known-gap estimator tests.

The ground truth here is subset enumeration over the true serial set: the
maximum's pmf, the offset expectation, and single-sample unbiasedness are
all checked against exhaustive counts in exact rational arithmetic.
"""

import itertools
from fractions import Fraction

import pytest

from tankcount import (
    FixedGapModel,
    InputError,
    InvalidSerialError,
    approx_in_regime,
    expected_max_exact,
    expected_offset_approx,
    expected_offset_exact,
    fixed_gap_estimate,
    fixed_gap_estimate_invert,
    fixed_gap_estimate_k1,
    max_pmf,
)

SMALL_MODELS = [
    FixedGapModel(factories=l, factory_size=n, gap=g)
    for l in (1, 2, 3, 4)
    for n in (1, 2, 3, 5)
    if l * n <= 20
    for g in (0, 1, 3, 6)
]


def enumerated_max_counts(model: FixedGapModel, k: int) -> dict[int, int]:
    """How often each serial is the maximum, over all size-k subsets."""
    counts: dict[int, int] = {}
    for combo in itertools.combinations(model.serials(), k):
        m = combo[-1]
        counts[m] = counts.get(m, 0) + 1
    return counts


class TestModel:
    def test_serials_and_mapping(self):
        model = FixedGapModel(factories=2, factory_size=3, gap=4)
        assert model.serials() == [1, 2, 3, 8, 9, 10]
        assert model.total == 6
        assert model.factory_index(9) == 1
        assert model.gap_free(9) == 5
        assert model.offset(9) == 4
        assert model.offset(3) == 0

    def test_zero_gap_is_contiguous(self):
        model = FixedGapModel(factories=3, factory_size=2, gap=0)
        assert model.serials() == [1, 2, 3, 4, 5, 6]
        assert model.gap_free(5) == 5

    def test_gap_serial_rejected(self):
        model = FixedGapModel(factories=2, factory_size=3, gap=4)
        for bad in (4, 7, 11, 0, -2):
            with pytest.raises(InvalidSerialError):
                model.factory_index(bad)

    def test_validation(self):
        with pytest.raises(InputError):
            FixedGapModel(0, 3, 1)
        with pytest.raises(InputError):
            FixedGapModel(2, 3, -1)


class TestMaxPmf:
    def test_single_draw_is_uniform(self):
        model = FixedGapModel(2, 3, 4)
        for m in model.serials():
            assert max_pmf(model, 1, m) == Fraction(1, 6)

    def test_full_capture_pins_maximum(self):
        model = FixedGapModel(2, 3, 4)
        assert max_pmf(model, 6, 10) == 1
        assert max_pmf(model, 6, 9) == 0

    def test_enumerated_example(self):
        model = FixedGapModel(2, 2, 3)  # serials {1, 2, 6, 7}
        assert max_pmf(model, 2, 2) == Fraction(1, 6)
        assert max_pmf(model, 2, 6) == Fraction(2, 6)
        assert max_pmf(model, 2, 7) == Fraction(3, 6)

    @pytest.mark.parametrize("model", SMALL_MODELS, ids=str)
    def test_sums_to_one_for_every_sample_size(self, model):
        for k in range(1, model.total + 1):
            assert sum(max_pmf(model, k, m) for m in model.serials()) == 1

    def test_matches_enumeration(self):
        for model in SMALL_MODELS:
            if model.total > 12:
                continue
            for k in range(1, model.total + 1):
                counts = enumerated_max_counts(model, k)
                total = sum(counts.values())
                for m in model.serials():
                    expected = Fraction(counts.get(m, 0), total)
                    assert max_pmf(model, k, m) == expected, (model, k, m)

    def test_invalid_serial_and_size(self):
        model = FixedGapModel(2, 3, 4)
        with pytest.raises(InvalidSerialError):
            max_pmf(model, 2, 5)
        with pytest.raises(InputError):
            max_pmf(model, 7, 3)


class TestExpectedOffset:
    def test_single_draw_closed_form(self):
        assert expected_offset_exact(FixedGapModel(2, 3, 4), 1) == 2
        for model in SMALL_MODELS:
            expected = Fraction(model.gap * (model.factories - 1), 2)
            assert expected_offset_exact(model, 1) == expected

    def test_enumerated_example(self):
        model = FixedGapModel(2, 2, 3)
        assert expected_offset_exact(model, 2) == Fraction(15, 6)

    @pytest.mark.parametrize("model", SMALL_MODELS, ids=str)
    def test_matches_pmf_weighted_offsets(self, model):
        for k in range(1, model.total + 1):
            weighted = sum(
                max_pmf(model, k, m) * model.offset(m) for m in model.serials()
            )
            assert expected_offset_exact(model, k) == weighted, (model, k)

    @pytest.mark.parametrize("model", SMALL_MODELS, ids=str)
    def test_expected_max_decomposition(self, model):
        for k in range(1, model.total + 1):
            weighted = sum(max_pmf(model, k, m) * m for m in model.serials())
            assert expected_max_exact(model, k) == weighted, (model, k)

    def test_approximation_equals_exact_at_single_draw(self):
        for model in SMALL_MODELS:
            assert expected_offset_approx(model, 1) == float(
                expected_offset_exact(model, 1)
            )

    def test_approximation_close_in_regime(self):
        # The truncation error of the two-term power-sum approximation at
        # l=5, k=10 is 4.08% of E[H] (computed from the exact formula; it
        # does not shrink with N).  Against the full expected maximum the
        # approximation is within 0.2%, which is what matters for the
        # estimator built on it.
        model = FixedGapModel(factories=5, factory_size=1000, gap=50)
        exact = float(expected_offset_exact(model, 10))
        approx = expected_offset_approx(model, 10)
        assert approx == pytest.approx(exact, rel=0.045)
        assert approx_in_regime(model, 10)
        exact_max = float(expected_max_exact(model, 10))
        approx_max = exact_max - exact + approx
        assert approx_max == pytest.approx(exact_max, rel=0.002)

    def test_approximation_off_out_of_regime(self):
        model = FixedGapModel(factories=2, factory_size=3, gap=4)
        exact = float(expected_offset_exact(model, 6))  # full capture: H = G
        approx = expected_offset_approx(model, 6)
        assert not approx_in_regime(model, 6)
        assert abs(approx - exact) > 0.5  # intentionally out of regime

    def test_invalid_sample_size(self):
        with pytest.raises(InputError):
            expected_offset_exact(FixedGapModel(2, 3, 4), 0)
        with pytest.raises(InputError):
            expected_offset_exact(FixedGapModel(2, 3, 4), 7)


class TestSingleSampleEstimator:
    def test_direct_formula(self):
        assert fixed_gap_estimate_k1(2, 4, 10).value == 7.5

    def test_reduces_to_classical_at_one_factory(self):
        for m in (1, 5, 40):
            assert fixed_gap_estimate_k1(1, 99, m).value == 2 * m - 1

    def test_unbiased_by_enumeration(self):
        model = FixedGapModel(2, 3, 4)
        values = [
            fixed_gap_estimate_k1(2, 4, m).value for m in model.serials()
        ]
        assert sum(values) / len(values) == 3.0

    def test_unbiased_on_full_grid(self):
        for l in range(1, 5):
            for n in range(1, 6):
                for g in range(0, 7):
                    model = FixedGapModel(l, n, g)
                    mean = Fraction(
                        sum(
                            Fraction(2 * m - g * (l - 1) - 1, l)
                            for m in model.serials()
                        ),
                        model.total,
                    )
                    assert mean == n, (l, n, g)

    def test_negative_values_returned_raw_with_clamp_diagnostic(self):
        est = fixed_gap_estimate_k1(3, 10, 2)
        assert est.value < 0
        assert est.diagnostics["clamped"] == 1.0


class TestGeneralEstimator:
    def test_direct_formula(self):
        assert fixed_gap_estimate(5, 50, 10, 700).value == pytest.approx(109.3, abs=1e-9)

    def test_coincides_with_exact_at_single_sample(self):
        for l in range(1, 5):
            for g in range(0, 7):
                for m in (1, 3, 10, 57):
                    general = fixed_gap_estimate(l, g, 1, m).value
                    exact = fixed_gap_estimate_k1(l, g, m).value
                    assert general == pytest.approx(exact, abs=1e-12), (l, g, m)

    def test_method_tags(self):
        assert fixed_gap_estimate(2, 4, 3, 9).method.value == "FIXED_GAP_APPROX"
        assert fixed_gap_estimate_k1(2, 4, 9).method.value == "FIXED_GAP_EXACT_K1"

    def test_validation(self):
        with pytest.raises(InputError):
            fixed_gap_estimate(0, 4, 3, 9)
        with pytest.raises(InputError):
            fixed_gap_estimate(2, 4, 5, 3)  # maximum below sample size


class TestExactInversion:
    def test_recovers_size_when_expectation_hits_integer(self):
        model = FixedGapModel(3, 7, 5)
        for k in (1, 2, 4):
            target = expected_max_exact(model, k)
            est = fixed_gap_estimate_invert(3, 5, k, round(float(target)))
            assert abs(est.value - 7) <= 1, (k, target)

    def test_exact_on_grid_of_expectations(self):
        # Feed back E[M] rounded; the inverse should land within one size.
        for l in (2, 4):
            for n in (3, 8, 20):
                for g in (0, 5):
                    for k in (1, 3, 6):
                        model = FixedGapModel(l, n, g)
                        if k > model.total:
                            continue
                        m = max(k, round(float(expected_max_exact(model, k))))
                        est = fixed_gap_estimate_invert(l, g, k, m)
                        assert abs(est.value - n) <= 1, (l, n, g, k)

    def test_method_tag_and_diagnostics(self):
        est = fixed_gap_estimate_invert(2, 4, 2, 9)
        assert est.method.value == "FIXED_GAP_INVERT"
        assert "expected_max_at_value" in est.diagnostics
