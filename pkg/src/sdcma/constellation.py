"""2D and 3D constellations with fixed bit labels.

Labeling convention: point ``i`` carries the label ``format(i, f"0{b}b")``, so
the label of a point is its index written in binary. Square QAM splits the
label in half; the first half selects the in-phase level and the second half
the quadrature level through a per-axis Gray code (``00 -> +3, 01 -> +1,
11 -> -1, 10 -> -3`` for 16QAM and ``0 -> +1, 1 -> -1`` for QPSK). QPSK "00"
therefore sits at ``(+1, +1)/sqrt(2)``.

The tetrahedron uses the even-parity vertices of the cube
``{(1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1)}/sqrt(3)`` labeled 00, 01, 10, 11.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, LengthMismatch, TooFewPoints, UnsupportedOrder


@dataclass(frozen=True, eq=False)
class Constellation:
    """A labeled point set in a ``dim``-dimensional real signal space."""

    name: str
    points: np.ndarray  # (M, dim)
    labels: tuple[str, ...]

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim != 2:
            raise DimensionMismatch("points must be a 2-D array (M, dim)")
        m = pts.shape[0]
        if m < 1 or m & (m - 1):
            raise UnsupportedOrder(f"constellation size {m} is not a power of two")
        if len(self.labels) != m or len(set(self.labels)) != m:
            raise LengthMismatch("need one distinct label per point")
        b = int(np.log2(m))
        if any(len(lab) != b for lab in self.labels):
            raise LengthMismatch(f"labels must be {b} bits long")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    @property
    def size(self) -> int:
        return self.points.shape[0]

    @property
    def bits_per_symbol(self) -> int:
        return int(np.log2(self.size))

    @property
    def label_bits(self) -> np.ndarray:
        """(M, b) uint8 array of the label of every point."""
        return np.array([[int(ch) for ch in lab] for lab in self.labels], dtype=np.uint8)

    def average_power(self) -> float:
        return float(np.mean(np.sum(self.points**2, axis=1)))

    def scaled(self, amplitude: float) -> np.ndarray:
        return amplitude * self.points


def _binary_labels(m: int) -> tuple[str, ...]:
    b = int(np.log2(m))
    return tuple(format(i, f"0{b}b") for i in range(m))


def _normalize(points: np.ndarray) -> np.ndarray:
    return points / np.sqrt(np.mean(np.sum(points**2, axis=1)))


def _gray_pam_levels(bits: int) -> np.ndarray:
    """Amplitude for each Gray-coded axis label value, indexed by label value."""
    n = 1 << bits
    levels = np.empty(n)
    for k in range(n):
        gray = k ^ (k >> 1)
        levels[gray] = (n - 1) - 2 * k
    return levels


def make_qam(order: int) -> Constellation:
    """Gray-labeled square QAM with unit average power (QPSK or 16QAM)."""
    if order not in (4, 16):
        raise UnsupportedOrder(f"square QAM order {order} not supported (use 4 or 16)")
    half = int(np.log2(order)) // 2
    levels = _gray_pam_levels(half)
    mask = (1 << half) - 1
    idx = np.arange(order)
    pts = np.column_stack([levels[idx >> half], levels[idx & mask]])
    return Constellation("qpsk" if order == 4 else "16qam", _normalize(pts), _binary_labels(order))


def make_tetrahedron() -> Constellation:
    verts = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float)
    return Constellation("tetra", verts / np.sqrt(3.0), _binary_labels(4))


def by_name(name: str) -> Constellation:
    """Look up a constellation by its short name (qpsk, 16qam, tetra)."""
    key = name.strip().lower().replace("-", "")
    if key in ("qpsk", "4qam"):
        return make_qam(4)
    if key in ("16qam", "qam16"):
        return make_qam(16)
    if key in ("tetra", "tetrahedron"):
        return make_tetrahedron()
    raise UnsupportedOrder(f"unknown constellation {name!r}")


def _as_bits(bits: str | Sequence[int]) -> str:
    if isinstance(bits, str):
        return bits
    return "".join(str(int(b)) for b in bits)


def map_bits(c: Constellation, bits: str | Sequence[int]) -> np.ndarray:
    bits = _as_bits(bits)
    if len(bits) != c.bits_per_symbol:
        raise LengthMismatch(f"expected {c.bits_per_symbol} bits, got {len(bits)}")
    return c.points[c.labels.index(bits)].copy()


def bits_to_indices(c: Constellation, bits: np.ndarray) -> np.ndarray:
    """Vectorized label lookup: (..., n*b) bits -> (..., n) point indices."""
    b = c.bits_per_symbol
    bits = np.asarray(bits)
    if bits.shape[-1] % b:
        raise LengthMismatch(f"bit count {bits.shape[-1]} is not a multiple of {b}")
    grouped = bits.reshape(*bits.shape[:-1], -1, b).astype(np.int64)
    weights = 1 << np.arange(b - 1, -1, -1)
    return grouped @ weights


def indices_to_bits(c: Constellation, idx: np.ndarray) -> np.ndarray:
    """Inverse of :func:`bits_to_indices`."""
    out = c.label_bits[np.asarray(idx)]
    return out.reshape(*out.shape[:-2], -1)


def nearest_indices(points: np.ndarray, observed: np.ndarray) -> np.ndarray:
    """Index of the nearest point for every observation (ties -> lowest index).

    ``observed`` has shape (..., dim); the result has shape (...).
    """
    obs = np.asarray(observed, dtype=float)
    if obs.shape[-1] != points.shape[1]:
        raise DimensionMismatch(f"observation dim {obs.shape[-1]} != {points.shape[1]}")
    flat = obs.reshape(-1, points.shape[1])
    d2 = np.sum((flat[:, None, :] - points[None, :, :]) ** 2, axis=2)
    return np.argmin(d2, axis=1).reshape(obs.shape[:-1])


def demap_nearest(c: Constellation, observed: Sequence[float]) -> tuple[int, str]:
    obs = np.asarray(observed, dtype=float)
    if obs.shape != (c.dim,):
        raise DimensionMismatch(f"expected a length-{c.dim} vector, got shape {obs.shape}")
    d2 = np.sum((c.points - obs) ** 2, axis=1)
    i = int(np.argmin(d2))
    return i, c.labels[i]


def med(c: Constellation) -> float:
    """Minimum Euclidean distance between any two points."""
    if c.size < 2:
        raise TooFewPoints("MED needs at least two points")
    return min(float(np.linalg.norm(p - q)) for p, q in combinations(c.points, 2))
