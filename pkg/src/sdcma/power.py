"""Power-domain allocation and superposition."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

import numpy as np

from .constellation import Constellation
from .errors import InvalidGeometry, LengthMismatch, NonPositiveRatio


@dataclass(frozen=True)
class PowerAllocation:
    """Fractions of the total power, one per group, summing to one."""

    shares: tuple[float, ...]

    def __post_init__(self):
        if not self.shares or any(s <= 0 for s in self.shares):
            raise NonPositiveRatio("every share must be positive")
        if abs(sum(self.shares) - 1.0) > 1e-12:
            raise NonPositiveRatio(f"shares sum to {sum(self.shares)!r}, not 1")

    @property
    def g(self) -> int:
        return len(self.shares)

    @property
    def amplitudes(self) -> np.ndarray:
        return np.sqrt(np.asarray(self.shares))

    def decode_order(self) -> list[int]:
        """Group indices by descending share; equal shares keep index order."""
        return sorted(range(self.g), key=lambda i: (-self.shares[i], i))


def normalize_ratios(ratios: Sequence[float]) -> PowerAllocation:
    r = [float(x) for x in ratios]
    if not r or any(x <= 0 for x in r):
        raise NonPositiveRatio(f"ratios must all be positive, got {ratios}")
    total = sum(r)
    return PowerAllocation(tuple(x / total for x in r))


def superpose(signals: Sequence[np.ndarray], alloc: PowerAllocation) -> np.ndarray:
    """Sum of sqrt(share_i) * signal_i, elementwise."""
    if len(signals) != alloc.g:
        raise LengthMismatch(f"{len(signals)} signals for {alloc.g} shares")
    arrs = [np.asarray(s) for s in signals]
    if any(a.shape != arrs[0].shape for a in arrs):
        raise LengthMismatch("signals differ in length")
    out = np.zeros(arrs[0].shape, dtype=np.result_type(*arrs, float))
    for amp, a in zip(alloc.amplitudes, arrs):
        out += amp * a
    return out


def joint_constellation(
    groups: Sequence[tuple[Constellation, Sequence[int]]],
    alloc: PowerAllocation,
    P: int,
) -> tuple[np.ndarray, list[tuple[str, ...]]]:
    """Every power-weighted sum of one symbol per group, inside one P-dim subspace.

    Returns the (Π M_i, P) point array and, for each point, the tuple of group
    labels that produced it (first group's label varies slowest).
    """
    if len(groups) != alloc.g:
        raise InvalidGeometry(f"{len(groups)} groups for {alloc.g} shares")
    embedded = []
    for c, row in groups:
        row = tuple(int(d) for d in row)
        if len(row) != c.dim or len(set(row)) != len(row):
            raise InvalidGeometry(f"row {row} does not fit a {c.dim}-D constellation")
        if any(d < 1 or d > P for d in row):
            raise InvalidGeometry(f"row {row} outside [1, {P}]")
        pts = np.zeros((c.size, P))
        pts[:, [d - 1 for d in row]] = c.points
        embedded.append(pts)
    points, labels = [], []
    for combo in product(*(range(c.size) for c, _ in groups)):
        points.append(sum(a * e[i] for a, e, i in zip(alloc.amplitudes, embedded, combo)))
        labels.append(tuple(groups[k][0].labels[i] for k, i in enumerate(combo)))
    return np.array(points), labels
