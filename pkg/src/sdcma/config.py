"""Scenario configuration: dataclass, INI-style file grammar and built-in presets.

File grammar (``configparser`` syntax, every key optional)::

    [scenario]
    name = fig5b
    schemes = PD_SDCMA, PD_NOMA, NOMA_3D
    receiver = sic                 ; sic | ml

    [groups]
    constellations = qpsk          ; one name for all groups, or a comma list
    ratios = 16:4:1                ; one positive number per group
    strategy = [1 2;2 3;3 1]       ; optional PD-SDCMA override
    subspace_dim = 3               ; optional P for the strategy override

    [ofdm]
    carriers = 256
    fft_size = 512
    cp_fraction = 0.125
    hermitian = false

    [channel]
    length_km = 25
    atten_db_per_km = 0.2
    dispersion_ps_nm_km = 16
    wavelength_nm = 1550
    noise_floor_dbm = -16
    bandwidth_hz = 10e9
    dispersion_enabled = true
    noise_enabled = true

    [sweep]
    unit = rop                     ; rop (dBm) | snr (dB)
    start = -16
    stop = -4
    step = 0.5
    symbols_per_point = 1000
    seeds = 1-10                   ; ranges and comma lists
"""

from __future__ import annotations

import configparser
import dataclasses
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .baselines import SchemeKind
from .channel import ChannelConfig
from .errors import ConfigError, SdcmaError
from .ofdm import OfdmConfig
from .s2d import S2DStrategy, format_strategy, parse_strategy


@dataclass(frozen=True)
class ScenarioConfig:
    name: str = "custom"
    schemes: tuple[SchemeKind, ...] = (SchemeKind.PD_SDCMA,)
    constellations: tuple[str, ...] = ("qpsk",)
    ratios: tuple[float, ...] = (1.0,)
    strategy: S2DStrategy | None = None
    receiver: str = "sic"
    ofdm: OfdmConfig = field(default_factory=OfdmConfig)
    channel: ChannelConfig = field(default_factory=ChannelConfig)
    sweep_unit: str = "rop"
    sweep_start: float = -16.0
    sweep_stop: float = -4.0
    sweep_step: float = 0.5
    symbols_per_point: int = 1000
    seeds: tuple[int, ...] = (1,)

    def __post_init__(self):
        if not self.schemes:
            raise ConfigError("[scenario] schemes: at least one scheme required")
        if len(self.constellations) == 1 and len(self.ratios) > 1:
            object.__setattr__(self, "constellations", self.constellations * len(self.ratios))
        if len(self.constellations) != len(self.ratios):
            raise ConfigError(
                f"[groups] {len(self.constellations)} constellations for {len(self.ratios)} ratios"
            )
        if any(r <= 0 for r in self.ratios):
            raise ConfigError(f"[groups] ratios: must be positive, got {self.ratios}")
        if self.strategy is not None and self.strategy.g != self.g:
            raise ConfigError(f"[groups] strategy: {self.strategy.g} rows for {self.g} groups")
        if self.receiver not in ("sic", "ml"):
            raise ConfigError(f"[scenario] receiver: expected sic or ml, got {self.receiver!r}")
        if self.sweep_unit not in ("rop", "snr"):
            raise ConfigError(f"[sweep] unit: expected rop or snr, got {self.sweep_unit!r}")
        if self.sweep_step <= 0:
            raise ConfigError("[sweep] step: must be positive")
        if self.sweep_stop < self.sweep_start:
            raise ConfigError(
                f"[sweep] empty range: start {self.sweep_start} > stop {self.sweep_stop}"
            )
        if self.symbols_per_point < 1:
            raise ConfigError("[sweep] symbols_per_point: must be >= 1")
        if not self.seeds:
            raise ConfigError("[sweep] seeds: at least one seed required")

    @property
    def g(self) -> int:
        return len(self.ratios)

    def sweep_values(self) -> list[float]:
        n = int(np.floor((self.sweep_stop - self.sweep_start) / self.sweep_step + 1e-9)) + 1
        return [round(self.sweep_start + k * self.sweep_step, 9) for k in range(n)]

    def replace(self, **changes) -> "ScenarioConfig":
        return dataclasses.replace(self, **changes)


PRESETS: dict[str, ScenarioConfig] = {
    "fig5a": ScenarioConfig(
        name="fig5a",
        schemes=(SchemeKind.PD_SDCMA, SchemeKind.PD_NOMA),
        constellations=("16qam",),
        ratios=(16.0, 1.0),
        seeds=tuple(range(1, 11)),
    ),
    "fig5b": ScenarioConfig(
        name="fig5b",
        schemes=(SchemeKind.PD_SDCMA, SchemeKind.PD_NOMA, SchemeKind.NOMA_3D),
        constellations=("qpsk",),
        ratios=(16.0, 4.0, 1.0),
        seeds=tuple(range(1, 11)),
    ),
    "fig5c": ScenarioConfig(
        name="fig5c",
        schemes=(SchemeKind.PD_SDCMA, SchemeKind.PD_NOMA, SchemeKind.NOMA_3D),
        constellations=("qpsk",),
        ratios=(256.0, 64.0, 16.0, 4.0, 1.0),
        # the weakest of five groups needs ~27 dB SNR, beyond -4 dBm at the default floor
        sweep_stop=0.0,
        seeds=tuple(range(1, 11)),
    ),
}


def parse_seeds(text: str) -> tuple[int, ...]:
    seeds: list[int] = []
    for part in text.replace(" ", "").split(","):
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            seeds.extend(range(int(lo), int(hi) + 1))
        else:
            seeds.append(int(part))
    if any(s < 0 for s in seeds):
        raise ValueError("seeds must be non-negative")
    return tuple(seeds)


def _format_seeds(seeds: tuple[int, ...]) -> str:
    if len(seeds) > 1 and list(seeds) == list(range(seeds[0], seeds[-1] + 1)):
        return f"{seeds[0]}-{seeds[-1]}"
    return ", ".join(str(s) for s in seeds)


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _ratios(text: str) -> tuple[float, ...]:
    sep = ":" if ":" in text else ","
    return tuple(float(x) for x in text.split(sep) if x.strip())


def _names(text: str) -> tuple[str, ...]:
    return tuple(x.strip().lower() for x in text.split(",") if x.strip())


_OFDM_KEYS = {"carriers": int, "fft_size": int, "cp_fraction": float, "hermitian": _bool}
_CHANNEL_KEYS = {
    "length_km": float,
    "atten_db_per_km": float,
    "dispersion_ps_nm_km": float,
    "wavelength_nm": float,
    "noise_floor_dbm": float,
    "bandwidth_hz": float,
    "dispersion_enabled": _bool,
    "noise_enabled": _bool,
}
_ALLOWED = {
    "scenario": {"name", "schemes", "receiver"},
    "groups": {"constellations", "constellation", "ratios", "strategy", "subspace_dim"},
    "ofdm": set(_OFDM_KEYS),
    "channel": set(_CHANNEL_KEYS),
    "sweep": {"unit", "start", "stop", "step", "symbols_per_point", "seeds"},
}


def _get(parser, section: str, key: str, conv, current: Any) -> Any:
    if not parser.has_option(section, key):
        return current
    raw = parser.get(section, key)
    try:
        return conv(raw)
    except (ValueError, SdcmaError) as exc:
        raise ConfigError(f"[{section}] {key} = {raw!r}: {exc}") from None


def apply_ini(text: str, base: ScenarioConfig | None = None, source: str = "<config>") -> ScenarioConfig:
    """Overlay an INI document on ``base`` (defaults when omitted)."""
    base = base or ScenarioConfig()
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        raise ConfigError(f"{source}: {exc}") from None

    for section in parser.sections():
        if section not in _ALLOWED:
            raise ConfigError(f"{source}: unknown section [{section}]")
        for key in parser.options(section):
            if key not in _ALLOWED[section]:
                raise ConfigError(f"{source}: unknown key {key!r} in [{section}]")

    schemes = _get(
        parser, "scenario", "schemes",
        lambda t: tuple(SchemeKind.parse(x) for x in t.split(",") if x.strip()), base.schemes,
    )
    consts = base.constellations
    consts = _get(parser, "groups", "constellation", _names, consts)
    consts = _get(parser, "groups", "constellations", _names, consts)
    ratios = _get(parser, "groups", "ratios", _ratios, base.ratios)
    if parser.has_option("groups", "ratios") and not (
        parser.has_option("groups", "constellations") or parser.has_option("groups", "constellation")
    ):
        consts = (consts[0],)
    P = _get(parser, "groups", "subspace_dim", int, None)
    strategy = base.strategy
    if parser.has_option("groups", "strategy"):
        raw = parser.get("groups", "strategy").strip()
        strategy = None if raw.lower() in ("", "default", "none") else _get(
            parser, "groups", "strategy", lambda t: parse_strategy(t, P), None
        )
    elif parser.has_option("groups", "ratios"):
        strategy = None

    try:
        ofdm = dataclasses.replace(
            base.ofdm,
            **{k: _get(parser, "ofdm", k, conv, getattr(base.ofdm, k)) for k, conv in _OFDM_KEYS.items()},
        ) if parser.has_section("ofdm") else base.ofdm
        channel = dataclasses.replace(
            base.channel,
            **{k: _get(parser, "channel", k, conv, getattr(base.channel, k)) for k, conv in _CHANNEL_KEYS.items()},
        ) if parser.has_section("channel") else base.channel

        return base.replace(
            name=_get(parser, "scenario", "name", str.strip, base.name),
            schemes=schemes,
            receiver=_get(parser, "scenario", "receiver", lambda t: t.strip().lower(), base.receiver),
            constellations=consts,
            ratios=ratios,
            strategy=strategy,
            ofdm=ofdm,
            channel=channel,
            sweep_unit=_get(parser, "sweep", "unit", lambda t: t.strip().lower(), base.sweep_unit),
            sweep_start=_get(parser, "sweep", "start", float, base.sweep_start),
            sweep_stop=_get(parser, "sweep", "stop", float, base.sweep_stop),
            sweep_step=_get(parser, "sweep", "step", float, base.sweep_step),
            symbols_per_point=_get(parser, "sweep", "symbols_per_point", int, base.symbols_per_point),
            seeds=_get(parser, "sweep", "seeds", parse_seeds, base.seeds),
        )
    except ConfigError:
        raise
    except SdcmaError as exc:
        raise ConfigError(f"{source}: {exc}") from None


def load_config(path: str, base: ScenarioConfig | None = None) -> ScenarioConfig:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc}") from None
    return apply_ini(text, base, source=path)


def preset(name: str) -> ScenarioConfig:
    try:
        return PRESETS[name]
    except KeyError:
        raise ConfigError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None


def _fmt(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def to_ini(cfg: ScenarioConfig) -> str:
    """Fully resolved configuration in the file grammar; re-parses to ``cfg``."""
    ch = cfg.channel
    lines = [
        "[scenario]",
        f"name = {cfg.name}",
        f"schemes = {', '.join(s.value for s in cfg.schemes)}",
        f"receiver = {cfg.receiver}",
        "",
        "[groups]",
        f"constellations = {', '.join(cfg.constellations)}",
        f"ratios = {':'.join(_fmt(r) for r in cfg.ratios)}",
    ]
    if cfg.strategy is not None:
        lines += [f"strategy = {format_strategy(cfg.strategy)}", f"subspace_dim = {cfg.strategy.P}"]
    lines += ["", "[ofdm]"]
    lines += [f"{k} = {_fmt(getattr(cfg.ofdm, k))}" for k in _OFDM_KEYS]
    lines += ["", "[channel]"]
    lines += [f"{k} = {_fmt(getattr(ch, k))}" for k in _CHANNEL_KEYS]
    lines += [
        "",
        "[sweep]",
        f"unit = {cfg.sweep_unit}",
        f"start = {_fmt(cfg.sweep_start)}",
        f"stop = {_fmt(cfg.sweep_stop)}",
        f"step = {_fmt(cfg.sweep_step)}",
        f"symbols_per_point = {cfg.symbols_per_point}",
        f"seeds = {_format_seeds(cfg.seeds)}",
    ]
    return "\n".join(lines) + "\n"
