"""Scheme construction: PD-SDCMA and the PD-NOMA / 3D-NOMA baselines.

All three schemes run through the same pipeline; they differ only in the
subspace size, which dimensions each group occupies, and the constellation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .constellation import Constellation, by_name
from .errors import UnsupportedCombination
from .s2d import S2DStrategy, make_strategy


class SchemeKind(str, enum.Enum):
    PD_SDCMA = "PD_SDCMA"
    PD_NOMA = "PD_NOMA"
    NOMA_3D = "NOMA_3D"

    @classmethod
    def parse(cls, text: str) -> "SchemeKind":
        key = text.strip().upper().replace("-", "_")
        aliases = {"SDCMA": "PD_SDCMA", "NOMA": "PD_NOMA", "3D_NOMA": "NOMA_3D", "3DNOMA": "NOMA_3D"}
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise UnsupportedCombination(f"unknown scheme {text!r}") from None


@dataclass(frozen=True)
class Scheme:
    kind: SchemeKind
    P: int
    rows: tuple[tuple[int, ...], ...]
    constellations: tuple[Constellation, ...]

    @property
    def g(self) -> int:
        return len(self.rows)


def default_subspace_size(g: int) -> int:
    """P used by PD-SDCMA when no strategy is given.

    A single group has nothing to superpose and uses plain two-dimensional
    subspaces, so it coincides with PD-NOMA. Two groups use P = 3 (P = 2 would
    be full overlap); three or more use P = g.
    """
    return 2 if g == 1 else max(g, 3)


def _resolve(spec) -> Constellation:
    return spec if isinstance(spec, Constellation) else by_name(spec)


def build_scheme(
    kind: SchemeKind | str,
    g: int,
    constellation: str | Constellation | Sequence[str | Constellation],
    strategy: S2DStrategy | None = None,
) -> Scheme:
    """Lay out ``g`` groups for a scheme.

    ``constellation`` is either one spec shared by every group or a list with
    one entry per group. ``strategy`` overrides the PD-SDCMA default mapping.
    """
    kind = SchemeKind.parse(kind) if isinstance(kind, str) else kind
    if g < 1:
        raise UnsupportedCombination("need at least one group")
    if isinstance(constellation, (str, Constellation)):
        consts = [_resolve(constellation)] * g
    else:
        consts = [_resolve(c) for c in constellation]
        if len(consts) != g:
            raise UnsupportedCombination(f"{len(consts)} constellations for {g} groups")

    if kind is SchemeKind.NOMA_3D:
        if any(c.dim != 3 for c in consts):
            raise UnsupportedCombination("3D-NOMA needs 3-D constellations")
        return Scheme(kind, 3, ((1, 2, 3),) * g, tuple(consts))

    if any(c.dim != 2 for c in consts):
        raise UnsupportedCombination(f"{kind.value} needs 2-D constellations")
    if kind is SchemeKind.PD_NOMA:
        if strategy is not None:
            raise UnsupportedCombination("PD-NOMA does not take an S2D strategy")
        return Scheme(kind, 2, ((1, 2),) * g, tuple(consts))

    if strategy is None:
        strategy = make_strategy(g, default_subspace_size(g))
    elif strategy.g != g:
        raise UnsupportedCombination(f"strategy has {strategy.g} rows for {g} groups")
    return Scheme(kind, strategy.P, strategy.rows, tuple(consts))


def constellation_for(kind: SchemeKind, name: str) -> str:
    """Per-scheme constellation choice used by the harness.

    3D-NOMA replaces QPSK with the tetrahedron, which carries the same two bits
    per symbol; other 2-D constellations have no 3-D counterpart here.
    """
    if kind is SchemeKind.NOMA_3D:
        key = name.lower()
        if key in ("qpsk", "4qam", "tetra", "tetrahedron"):
            return "tetra"
        raise UnsupportedCombination(f"3D-NOMA has no counterpart for {name!r}")
    return name

