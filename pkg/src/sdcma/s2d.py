"""Sparse dimension mapping: strategy matrices, subspace indexing, scatter/gather.

Dimensions are 1-based throughout, as in the strategy matrix. A frame of ``N``
real coordinates is cut into ``N // P`` subspaces of ``P`` consecutive
dimensions; the trailing ``N % P`` dimensions stay zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CountMismatch, IndexOutOfRange, InvalidGeometry, RowOutOfRange


@dataclass(frozen=True)
class S2DStrategy:
    """Assignment of subspace dimensions to access groups.

    ``rows[i]`` lists the local dimensions (1-based) that carry group ``i``'s
    symbol coordinates, first coordinate first.
    """

    P: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(d) for d in r) for r in self.rows))
        if self.P < 2:
            raise InvalidGeometry(f"subspace dimension P={self.P} must be >= 2")
        if not self.rows:
            raise InvalidGeometry("strategy needs at least one group")
        for r in self.rows:
            if len(set(r)) != len(r):
                raise InvalidGeometry(f"row {r} repeats a dimension")
            if any(d < 1 or d > self.P for d in r):
                raise RowOutOfRange(f"row {r} not within [1, {self.P}]")

    @property
    def g(self) -> int:
        return len(self.rows)

    def as_matrix(self) -> np.ndarray:
        return np.array(self.rows, dtype=int)


def make_strategy(g: int, P: int) -> S2DStrategy:
    """Cyclic strategy: row i is (i, i+1); the last row wraps to (g, 1) when g == P."""
    if g < 1:
        raise InvalidGeometry("need at least one group")
    if P < max(g, 2):
        raise InvalidGeometry(f"P={P} must satisfy P >= g={g} and P >= 2")
    rows = [(i, i + 1) for i in range(1, g)]
    rows.append((g, 1) if g == P else (g, g + 1))
    return S2DStrategy(P, tuple(rows))


def parse_strategy(text: str, P: int | None = None) -> S2DStrategy:
    """Parse the bracket notation ``"[1 2;2 3;3 1]"``.

    Without an explicit ``P`` the largest dimension mentioned is used (at least 2).
    """
    body = text.strip().strip("[]")
    rows = []
    for chunk in body.split(";"):
        chunk = chunk.replace(",", " ").split()
        if chunk:
            rows.append(tuple(int(x) for x in chunk))
    if not rows:
        raise InvalidGeometry(f"empty strategy {text!r}")
    if P is None:
        P = max(2, max(max(r) for r in rows))
    return S2DStrategy(P, tuple(rows))


def format_strategy(s: S2DStrategy) -> str:
    return "[" + ";".join(" ".join(str(d) for d in r) for r in s.rows) + "]"


@dataclass(frozen=True)
class SubspaceLayout:
    N: int
    P: int

    def __post_init__(self):
        if self.P < 2 or self.N < self.P:
            raise InvalidGeometry(f"cannot cut N={self.N} into subspaces of P={self.P}")

    @property
    def count(self) -> int:
        return self.N // self.P

    @property
    def residual(self) -> int:
        return self.N % self.P


def global_to_subspace(M: int, P: int) -> tuple[int, int]:
    """Global dimension M (1-based) -> (subspace i, local dimension m), both 1-based."""
    if M < 1:
        raise IndexOutOfRange(f"dimension index {M} < 1")
    if P < 2:
        raise InvalidGeometry(f"P={P} must be >= 2")
    i = math.ceil(M / P)
    return i, M - (i - 1) * P


def subspace_to_global(i: int, m: int, P: int) -> int:
    if i < 1 or not 1 <= m <= P:
        raise IndexOutOfRange(f"(i={i}, m={m}) invalid for P={P}")
    return (i - 1) * P + m


def _check_row(row, layout: SubspaceLayout) -> np.ndarray:
    r = np.asarray(row, dtype=int)
    if np.any(r < 1) or np.any(r > layout.P):
        raise RowOutOfRange(f"row {tuple(row)} outside [1, {layout.P}]")
    return r - 1


def reconstruct_symbols(symbols, row, layout: SubspaceLayout) -> np.ndarray:
    """Scatter one symbol per subspace into a zero frame.

    ``symbols`` has shape (..., count, k) with ``k == len(row)``; the result has
    shape (..., N). Coordinate j of the symbol lands on local dimension ``row[j]``.
    """
    sym = np.asarray(symbols)
    cols = _check_row(row, layout)
    if sym.shape[-2:] != (layout.count, len(cols)):
        raise CountMismatch(
            f"expected symbols of shape (..., {layout.count}, {len(cols)}), got {sym.shape}"
        )
    lead = sym.shape[:-2]
    blocks = np.zeros(lead + (layout.count, layout.P), dtype=sym.dtype)
    blocks[..., cols] = sym
    frame = np.zeros(lead + (layout.N,), dtype=sym.dtype)
    frame[..., : layout.count * layout.P] = blocks.reshape(lead + (-1,))
    return frame


def subspace_blocks(frame, layout: SubspaceLayout) -> np.ndarray:
    """View of a frame as (..., count, P); residual dimensions are dropped."""
    f = np.asarray(frame)
    if f.shape[-1] != layout.N:
        raise CountMismatch(f"frame length {f.shape[-1]} != N={layout.N}")
    return f[..., : layout.count * layout.P].reshape(f.shape[:-1] + (layout.count, layout.P))


def project_all(frame, row, layout: SubspaceLayout) -> np.ndarray:
    """Gather the row's dimensions from every subspace: (..., N) -> (..., count, k)."""
    cols = _check_row(row, layout)
    return subspace_blocks(frame, layout)[..., cols]


def project_subspace(frame, i: int, row, layout: SubspaceLayout) -> np.ndarray:
    """Coordinates of subspace ``i`` (1-based) on the row's dimensions."""
    if not 1 <= i <= layout.count:
        raise IndexOutOfRange(f"subspace {i} not in [1, {layout.count}]")
    return project_all(frame, row, layout)[..., i - 1, :]
