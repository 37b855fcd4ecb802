"""Ground-truth serial layouts and uniform without-replacement sampling.

A layout is the true set of valid serials: consecutive runs (one per
factory) separated by gaps of missing integers.  Sampling maps a partial
Fisher-Yates draw over the virtual index space 0..N_tot-1 through the run
boundaries, so the full serial set is never materialized and a draw costs
O(k) memory.

Randomness comes from counter-based Philox streams keyed by
(seed, sample size) with the trial index in the counter block, so any
(seed, k, trial) triple names the same stream no matter how trials are
scheduled.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import InputError, OversampleError
from .estimators import Sample


@dataclass(frozen=True)
class FactoryLayout:
    """True serial structure: factory sizes, gaps between them, first start."""

    sizes: tuple[int, ...]
    gaps: tuple[int, ...]
    first_start: int = 1

    def __post_init__(self) -> None:
        if len(self.sizes) == 0:
            raise InputError("layout needs at least one factory size")
        if any(s < 1 for s in self.sizes):
            raise InputError(f"factory sizes must be >= 1, got {self.sizes}")
        if len(self.gaps) != len(self.sizes) - 1:
            raise InputError(
                f"need exactly {len(self.sizes) - 1} gaps for "
                f"{len(self.sizes)} factories, got {len(self.gaps)}"
            )
        if any(g < 0 for g in self.gaps):
            raise InputError(f"gaps must be >= 0, got {self.gaps}")
        if self.first_start < 1:
            raise InputError(f"first_start must be >= 1, got {self.first_start}")

    @property
    def factories(self) -> int:
        return len(self.sizes)

    @property
    def n_tot(self) -> int:
        """Total number of valid serials across all factories."""
        return sum(self.sizes)

    @property
    def span(self) -> int:
        """Width of the occupied serial range, including gaps."""
        return sum(self.sizes) + sum(self.gaps)

    @property
    def intervals(self) -> tuple[tuple[int, int], ...]:
        """Inclusive (start, end) serial range of each factory."""
        out = []
        start = self.first_start
        for i, size in enumerate(self.sizes):
            end = start + size - 1
            out.append((start, end))
            if i < len(self.gaps):
                start = end + self.gaps[i] + 1
        return tuple(out)

    def serial_at(self, index: int) -> int:
        """Serial of the ``index``-th smallest valid serial (0-based)."""
        if not 0 <= index < self.n_tot:
            raise InputError(f"index {index} out of range 0..{self.n_tot - 1}")
        for (start, _), size in zip(self.intervals, self.sizes):
            if index < size:
                return start + index
            index -= size
        raise AssertionError("unreachable")

    def serials(self) -> list[int]:
        """All valid serials, ascending.  Materializes N_tot integers."""
        out: list[int] = []
        for start, end in self.intervals:
            out.extend(range(start, end + 1))
        return out

    def factory_of(self, serial: int) -> int | None:
        """0-based factory containing ``serial``, or None if in a gap."""
        for i, (start, end) in enumerate(self.intervals):
            if start <= serial <= end:
                return i
        return None


def build_layout(
    sizes: list[int] | tuple[int, ...],
    gaps: list[int] | tuple[int, ...] = (),
    first_start: int = 1,
) -> FactoryLayout:
    """Validate and build a :class:`FactoryLayout`."""
    return FactoryLayout(tuple(sizes), tuple(gaps), first_start)


def trial_rng(seed: int, sample_size: int, trial: int) -> np.random.Generator:
    """Counter-based stream for one (seed, sample size, trial) triple.

    Philox keys on (seed, sample size) and carries the trial index in its
    counter block, so parallel and serial schedules see identical streams.
    """
    key = np.array([seed, sample_size], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(counter=[trial, 0, 0, 0], key=key))


@lru_cache(maxsize=64)
def _index_maps(layout: FactoryLayout) -> tuple[list[int], list[int]]:
    """Cumulative size boundaries and interval starts for index mapping."""
    cum = [0]
    for size in layout.sizes:
        cum.append(cum[-1] + size)
    starts = [iv[0] for iv in layout.intervals]
    return cum, starts


def draw_sample(
    layout: FactoryLayout, sample_size: int, rng: np.random.Generator
) -> Sample:
    """Draw ``sample_size`` distinct serials uniformly from the layout.

    Partial Fisher-Yates over virtual indices: every size-k subset of the
    valid serials is equally likely.  Raises when more serials are requested
    than exist.
    """
    n = layout.n_tot
    if sample_size < 1:
        raise InputError(f"sample_size must be >= 1, got {sample_size}")
    if sample_size > n:
        raise OversampleError(
            f"cannot draw {sample_size} distinct serials from {n}"
        )
    k = sample_size
    offsets = rng.integers(0, n - np.arange(k))  # offset i is uniform on [0, n-i)
    swaps: dict[int, int] = {}
    picked = []
    for i in range(k):
        j = i + int(offsets[i])
        picked.append(swaps.get(j, j))
        swaps[j] = swaps.get(i, i)
    picked.sort()

    # Map sorted virtual indices to serials through the cumulative sizes.
    cum, starts = _index_maps(layout)
    serials = tuple(
        starts[f] + (p - cum[f])
        for p in picked
        for f in (bisect_right(cum, p) - 1,)
    )
    return Sample(serials)
