"""Projection-based successive interference cancellation and a joint-ML reference."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .constellation import Constellation, indices_to_bits, nearest_indices
from .errors import GeometryMismatch, LengthMismatch, ZeroGain
from .s2d import SubspaceLayout, subspace_blocks


@dataclass(frozen=True)
class GroupLink:
    """What the receiver knows about one access group."""

    constellation: Constellation
    row: tuple[int, ...]
    share: float
    id: int = 0

    def __post_init__(self):
        object.__setattr__(self, "row", tuple(int(d) for d in self.row))
        if not 0 < self.share <= 1:
            raise GeometryMismatch(f"share {self.share} not in (0, 1]")
        if len(self.row) != self.constellation.dim:
            raise GeometryMismatch(
                f"row {self.row} does not match a {self.constellation.dim}-D constellation"
            )

    @property
    def candidates(self) -> np.ndarray:
        return np.sqrt(self.share) * self.constellation.points


def equalize(X, gains) -> np.ndarray:
    """One-tap zero-forcing with known per-carrier gains."""
    X = np.asarray(X)
    g = np.asarray(gains)
    if X.shape[-1] != g.shape[-1]:
        raise LengthMismatch(f"{X.shape[-1]} carriers vs {g.shape[-1]} gains")
    if np.any(np.abs(g) == 0):
        raise ZeroGain("a carrier has zero gain")
    return X / g


def _blocks(frames, links: Sequence[GroupLink], P: int) -> tuple[np.ndarray, SubspaceLayout]:
    if not links:
        raise GeometryMismatch("no groups to decode")
    f = np.asarray(frames, dtype=float)
    if f.ndim == 1:
        f = f[None, :]
    if f.shape[-1] < P:
        raise GeometryMismatch(f"frame length {f.shape[-1]} shorter than P={P}")
    layout = SubspaceLayout(f.shape[-1], P)
    for link in links:
        if any(d < 1 or d > P for d in link.row):
            raise GeometryMismatch(f"row {link.row} outside [1, {P}]")
    return subspace_blocks(f, layout).copy(), layout


def sic_demodulate(frames, links: Sequence[GroupLink], P: int) -> list[np.ndarray]:
    """Decode every group, strongest first, cancelling each decision.

    ``links`` is processed in the given order (callers pass descending share).
    Returns one (F, count * b) bit array per link, in the order of ``links``.
    """
    residual, _ = _blocks(frames, links, P)
    out = []
    for link in links:
        cols = [d - 1 for d in link.row]
        cand = link.candidates
        idx = nearest_indices(cand, residual[..., cols])
        residual[..., cols] -= cand[idx]
        out.append(indices_to_bits(link.constellation, idx))
    return out


def projection_demodulate(frames, links: Sequence[GroupLink], P: int) -> list[np.ndarray]:
    """Single pass: each group is decided on its plane with no cancellation."""
    blocks, _ = _blocks(frames, links, P)
    out = []
    for link in links:
        idx = nearest_indices(link.candidates, blocks[..., [d - 1 for d in link.row]])
        out.append(indices_to_bits(link.constellation, idx))
    return out


def ml_joint_oracle(observed, joint_points: np.ndarray, joint_labels: Sequence[tuple[str, ...]]):
    """Labels of the joint point nearest to ``observed`` (ties -> lowest index).

    ``observed`` may be one P-vector or an array (..., P); in the batched case
    the joint-point indices are returned instead of label tuples.
    """
    obs = np.asarray(observed, dtype=float)
    idx = nearest_indices(np.asarray(joint_points, dtype=float), obs)
    if obs.ndim == 1:
        return joint_labels[int(idx)]
    return idx


def ml_demodulate(frames, links: Sequence[GroupLink], P: int, chunk: int = 4096) -> list[np.ndarray]:
    """Joint maximum-likelihood decisions per subspace over the full joint constellation."""
    from .power import PowerAllocation, joint_constellation

    blocks, _ = _blocks(frames, links, P)
    shares = tuple(link.share for link in links)
    total = sum(shares)
    # joint_constellation wants shares summing to one; rescale the grid back afterwards
    alloc = PowerAllocation(tuple(s / total for s in shares))
    points, _ = joint_constellation([(l.constellation, l.row) for l in links], alloc, P)
    points = points * np.sqrt(total)
    flat = blocks.reshape(-1, P)
    idx = np.empty(flat.shape[0], dtype=np.int64)
    for start in range(0, flat.shape[0], chunk):
        idx[start : start + chunk] = nearest_indices(points, flat[start : start + chunk])
    per_group = np.unravel_index(idx, [l.constellation.size for l in links])
    lead = blocks.shape[:-1]
    return [
        indices_to_bits(l.constellation, g.reshape(lead)) for l, g in zip(links, per_group)
    ]
