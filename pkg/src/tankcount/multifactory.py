"""Total-production estimation when serials come from several factories.

The sample is split into one sub-sample per factory at the largest gaps
between consecutive ordered serials (ties broken leftmost).  The first
sub-sample is estimated with the classical estimator when the global minimum
serial is known to be 1, the rest with the unknown-minimum estimator.
Singleton sub-samples beyond the first cannot feed the unknown-minimum
estimator; they are "bad" and receive the patch estimate
``sum(good estimates) / sum(good sample sizes)``, which leans on sampling
being uniform: a factory's share of the sample is roughly its share of
production.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import DegenerateSplitError, InputError, TooFewSamplesError
from .estimators import (
    Estimate,
    Method,
    Sample,
    gtp_estimate,
    gtp_um_estimate,
)


@dataclass(frozen=True)
class MfpSplit:
    """A sample partitioned into per-factory sub-samples, plus bookkeeping.

    ``good_indices`` are the 0-based sub-samples that can be estimated
    directly: index 0 (when the global minimum is known) and any sub-sample
    with at least two serials.  ``chosen_gap_positions`` are the 0-based
    indices into the consecutive-gap sequence where the sample was cut.
    ``good_estimate_sum`` and ``good_sample_count`` stay ``None`` until an
    estimator fills them in.
    """

    sub_samples: tuple[Sample, ...]
    chosen_gap_positions: tuple[int, ...]
    good_indices: tuple[int, ...]
    bad_indices: tuple[int, ...]
    good_estimate_sum: float | None = None
    good_sample_count: int | None = None

    def as_dict(self) -> dict:
        """JSON-friendly form used by CLI diagnostics."""
        return {
            "sub_samples": [list(s.serials) for s in self.sub_samples],
            "chosen_gap_positions": list(self.chosen_gap_positions),
            "good_indices": list(self.good_indices),
            "bad_indices": list(self.bad_indices),
            "good_estimate_sum": self.good_estimate_sum,
            "good_sample_count": self.good_sample_count,
        }


def split_at_largest_gaps(sample: Sample, factories: int) -> MfpSplit:
    """Partition a sample at its ``factories - 1`` largest consecutive gaps.

    Gap i is ``serials[i+1] - serials[i]``.  Ties prefer the leftmost gap.
    Requires at least as many serials as factories, and at least two
    factories (splitting into one piece is the single-interval problem).
    """
    if factories < 2:
        raise InputError(
            f"need at least 2 factories to split, got {factories}"
        )
    if sample.size < factories:
        raise TooFewSamplesError(
            f"cannot split {sample.size} serials into {factories} sub-samples"
        )
    serials = sample.serials
    gaps = [serials[i + 1] - serials[i] for i in range(len(serials) - 1)]
    chosen = sorted(
        sorted(range(len(gaps)), key=lambda i: (-gaps[i], i))[: factories - 1]
    )
    pieces: list[Sample] = []
    start = 0
    for cut in chosen:
        pieces.append(Sample(serials[start : cut + 1]))
        start = cut + 1
    pieces.append(Sample(serials[start:]))
    good = tuple(i for i, p in enumerate(pieces) if i == 0 or p.size > 1)
    bad = tuple(i for i in range(len(pieces)) if i not in good)
    return MfpSplit(
        sub_samples=tuple(pieces),
        chosen_gap_positions=tuple(chosen),
        good_indices=good,
        bad_indices=bad,
    )


def mfp_estimate(
    sample: Sample, factories: int, lower_known: bool = True
) -> Estimate:
    """Estimate total production across ``factories`` factories.

    Splits the sample, estimates each good sub-sample (classical estimator
    for the first when ``lower_known``, unknown-minimum otherwise), patches
    each bad sub-sample with the good-estimate-per-good-sample ratio, and
    sums.  With ``lower_known=False`` a singleton first sub-sample is routed
    through the bad-factory patch as well, since the unknown-minimum
    estimator cannot process it; it then appears in ``bad_indices``.
    """
    split = split_at_largest_gaps(sample, factories)
    good = list(split.good_indices)
    bad = list(split.bad_indices)
    if not lower_known and split.sub_samples[0].size == 1:
        good.remove(0)
        bad.insert(0, 0)
    if not good:
        raise DegenerateSplitError(
            "every sub-sample is a singleton with unknown minimum; "
            "no estimate available to patch from"
        )

    estimates: dict[int, float] = {}
    for i in good:
        piece = split.sub_samples[i]
        if i == 0 and lower_known:
            estimates[i] = gtp_estimate(piece).value
        else:
            estimates[i] = gtp_um_estimate(piece).value
    good_sum = sum(estimates.values())
    good_count = sum(split.sub_samples[i].size for i in good)
    patch = good_sum / good_count
    total = good_sum + patch * len(bad)

    split = replace(
        split,
        good_indices=tuple(good),
        bad_indices=tuple(bad),
        good_estimate_sum=good_sum,
        good_sample_count=good_count,
    )
    return Estimate(value=total, method=Method.MFP, diagnostics={"split": split})
