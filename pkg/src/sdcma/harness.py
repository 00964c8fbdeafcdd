"""End-to-end Monte-Carlo runner: one sweep point, whole sweeps, CSV and summary."""

from __future__ import annotations

import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .baselines import Scheme, SchemeKind, build_scheme, constellation_for
from .channel import link_gains, rop_to_snr, snr_to_rop, transmit
from .config import ScenarioConfig, to_ini
from .constellation import bits_to_indices
from .errors import NoCrossing, SdcmaError
from .metrics import HD_FEC_THRESHOLD, BERRecord, count_ber, crossing_of
from .ofdm import demodulate, frame_to_subcarriers, modulate, subcarriers_to_frame
from .power import normalize_ratios, superpose
from .s2d import SubspaceLayout, reconstruct_symbols
from .sic import GroupLink, equalize, ml_demodulate, sic_demodulate

CSV_HEADER = "scheme,group,sweep_dbm,snr_db,bits,errors,ber"


def scheme_for(cfg: ScenarioConfig, kind: SchemeKind) -> Scheme:
    consts = [constellation_for(kind, c) for c in cfg.constellations]
    strategy = cfg.strategy if kind is SchemeKind.PD_SDCMA else None
    return build_scheme(kind, cfg.g, consts, strategy)


def _seed_key(value: float) -> int:
    # SeedSequence entropy must be non-negative
    return int(round(value * 1000)) + 10**9


def point_channel(cfg: ScenarioConfig, value: float, seed: int):
    """Channel config for one sweep value (ROP in dBm or SNR in dB)."""
    ch = cfg.channel
    if cfg.sweep_unit == "snr":
        return replace(ch, snr_db=value, rop_dbm=snr_to_rop(value, ch), seed=seed)
    return replace(ch, rop_dbm=value, snr_db=None, seed=seed)


@dataclass
class Reception:
    """Everything one scheme produced at one sweep point, before detection."""

    scheme: Scheme
    links: list[GroupLink]  # in decode order
    tx_bits: list[np.ndarray]  # per group, in configuration order
    rx_frames: np.ndarray  # equalized dimension frames (F, N)
    snr_db: float


def receive(cfg: ScenarioConfig, kind: SchemeKind, value: float, seed: int) -> Reception:
    """Transmit random bits for every group and return the equalized frames."""
    scheme = scheme_for(cfg, kind)
    alloc = normalize_ratios(cfg.ratios)
    ofdm = cfg.ofdm
    layout = SubspaceLayout(ofdm.dimensions, scheme.P)
    F = cfg.symbols_per_point
    ss = np.random.SeedSequence([seed, _seed_key(value)])
    bit_rng, noise_rng = (np.random.default_rng(s) for s in ss.spawn(2))

    tx_bits, frames = [], []
    for c, row in zip(scheme.constellations, scheme.rows):
        bits = bit_rng.integers(0, 2, size=(F, layout.count * c.bits_per_symbol), dtype=np.uint8)
        symbols = c.points[bits_to_indices(c, bits)]
        tx_bits.append(bits)
        frames.append(reconstruct_symbols(symbols, row, layout))
    # power is applied to the frames; the transforms are linear so this equals
    # superposing the time-domain signals of each group
    composite = superpose(frames, alloc)
    tx = modulate(frame_to_subcarriers(composite), ofdm).reshape(-1)

    ch = point_channel(cfg, value, seed)
    tx_power = float(np.mean(np.abs(tx) ** 2))
    rx = transmit(tx, ch, ofdm, noise_rng)
    Y = demodulate(rx.reshape(F, ofdm.symbol_length), ofdm)
    rx_frames = subcarriers_to_frame(equalize(Y, link_gains(tx_power, ch, ofdm)))

    links = [
        GroupLink(scheme.constellations[i], scheme.rows[i], alloc.shares[i], i + 1)
        for i in alloc.decode_order()
    ]
    return Reception(scheme, links, tx_bits, rx_frames, ch.effective_snr_db)


def detect(rec: Reception, receiver: str = "sic") -> list[np.ndarray]:
    """Decided bits per group, in configuration order."""
    fn = ml_demodulate if receiver == "ml" else sic_demodulate
    decided = fn(rec.rx_frames, rec.links, rec.scheme.P)
    out: list[np.ndarray] = [None] * len(rec.links)  # type: ignore[list-item]
    for link, bits in zip(rec.links, decided):
        out[link.id - 1] = bits
    return out


def run_point(cfg: ScenarioConfig, value: float, seed: int) -> list[BERRecord]:
    """Per-scheme, per-group error counts at one sweep value for one seed."""
    records = []
    for kind in cfg.schemes:
        try:
            rec = receive(cfg, kind, value, seed)
            rx_bits = detect(rec, cfg.receiver)
        except SdcmaError as exc:
            raise type(exc)(f"{cfg.name}/{kind.value} at {value:g}, seed {seed}: {exc}") from exc
        for gid, (t, r) in enumerate(zip(rec.tx_bits, rx_bits), start=1):
            total, errors, _ = count_ber(t, r)
            records.append(BERRecord(kind.value, gid, value, rec.snr_db, total, errors))
    return records


def _task(args):
    cfg, value, seed = args
    return run_point(cfg, value, seed)


def accumulate(batches) -> list[BERRecord]:
    """Sum counts over seeds, keyed by (scheme, group, sweep value)."""
    merged: dict[tuple, BERRecord] = {}
    for batch in batches:
        for rec in batch:
            key = (rec.scheme, rec.group_id, rec.sweep_value)
            merged[key] = merged[key].merged(rec) if key in merged else rec
    return list(merged.values())


@dataclass
class SweepResult:
    config: ScenarioConfig
    records: list[BERRecord]
    csv: str
    summary: str
    crossings: dict[tuple[str, int], float | None]


def run_sweep(cfg: ScenarioConfig, workers: int = 1) -> SweepResult:
    tasks = [(cfg, v, s) for v in cfg.sweep_values() for s in cfg.seeds]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_task, tasks))
    else:
        batches = [_task(t) for t in tasks]
    records = accumulate(batches)
    scheme_rank = {k.value: i for i, k in enumerate(cfg.schemes)}
    records.sort(key=lambda r: (scheme_rank[r.scheme], r.group_id, r.sweep_value))
    crossings = group_crossings(records)
    return SweepResult(cfg, records, format_csv(cfg, records), format_summary(cfg, crossings), crossings)


def group_crossings(records, threshold: float = HD_FEC_THRESHOLD) -> dict[tuple[str, int], float | None]:
    """HD-FEC crossing per (scheme, group); None marks NoCrossing."""
    by_key: dict[tuple[str, int], list[BERRecord]] = {}
    for r in records:
        by_key.setdefault((r.scheme, r.group_id), []).append(r)
    out = {}
    for key, recs in by_key.items():
        try:
            out[key] = crossing_of(recs, threshold)
        except NoCrossing:
            out[key] = None
    return out


def format_csv(cfg: ScenarioConfig, records) -> str:
    buf = io.StringIO()
    for line in to_ini(cfg).splitlines():
        buf.write(f"# {line}\n" if line else "#\n")
    buf.write(CSV_HEADER + "\n")
    for r in records:
        rop = r.sweep_value if cfg.sweep_unit == "rop" else snr_to_rop(r.sweep_value, cfg.channel)
        buf.write(
            f"{r.scheme},{r.group_id},{rop:.3f},{r.snr_db:.3f},{r.bits_total},{r.bits_error},{r.ber:.6e}\n"
        )
    return buf.getvalue()


def format_summary(cfg: ScenarioConfig, crossings) -> str:
    unit = "dBm" if cfg.sweep_unit == "rop" else "dB SNR"
    lines = [f"HD-FEC ({HD_FEC_THRESHOLD:g}) crossings for {cfg.name}:"]
    for (scheme, gid), x in crossings.items():
        where = f"{x:.2f} {unit}" if x is not None else "NoCrossing"
        lines.append(f"  {scheme:<9} group {gid}: {where}")
    return "\n".join(lines) + "\n"


def ebn0_to_snr_db(ebn0_db: float, bits_per_symbol: int, count: int, ofdm) -> float:
    """Channel SNR giving ``ebn0_db`` for a single unit-power group.

    ``count`` symbols of ``bits_per_symbol`` bits fill one frame of
    ``2 * carriers`` dimensions. After the unscaled FFT and zero-forcing the
    noise per real dimension is ``E_frame / (2 N snr)`` in complex mode and
    twice that in hermitian mode, with ``E_frame = count`` and ``N = fft_size``.
    """
    ratio = bits_per_symbol * count / ofdm.fft_size
    if ofdm.hermitian:
        ratio *= 2.0
    return ebn0_db + 10.0 * np.log10(ratio)


def expected_snr(cfg: ScenarioConfig, value: float) -> float:
    return value if cfg.sweep_unit == "snr" else rop_to_snr(value, cfg.channel)


def gnuplot_script(csv_path: str, cfg: ScenarioConfig) -> str:
    """Companion gnuplot script drawing BER against the sweep axis."""
    xlabel = "ROP (dBm)" if cfg.sweep_unit == "rop" else "SNR (dB)"
    col = 3 if cfg.sweep_unit == "rop" else 4
    plots = []
    for kind in cfg.schemes:
        for gid in range(1, cfg.g + 1):
            sel = f'(strcol(1) eq "{kind.value}" && $2 == {gid} ? ${col} : 1/0)'
            plots.append(f"'{csv_path}' using {sel}:7 with linespoints title '{kind.value} G{gid}'")
    return "\n".join(
        [
            "set datafile separator ','",
            "set datafile commentschars '#'",
            "set logscale y",
            f"set xlabel '{xlabel}'",
            "set ylabel 'BER'",
            f"set arrow from graph 0, first {HD_FEC_THRESHOLD} to graph 1, first {HD_FEC_THRESHOLD} nohead dt 2",
            "plot " + ", \\\n     ".join(plots),
            "",
        ]
    )
