"""Physical-layer simulation of power-domain sparse dimensional constellation
multiple access (PD-SDCMA) over an OFDM passive optical network link."""

from .baselines import Scheme, SchemeKind, build_scheme
from .channel import ChannelConfig, fiber_gains, rop_to_snr, transmit
from .config import PRESETS, ScenarioConfig, apply_ini, load_config, preset, to_ini
from .constellation import (
    Constellation,
    demap_nearest,
    make_qam,
    make_tetrahedron,
    map_bits,
    med,
)
from .harness import run_point, run_sweep
from .metrics import HD_FEC_THRESHOLD, BERRecord, count_ber, hd_fec_crossing, qpsk_awgn_ber
from .ofdm import OfdmConfig, demodulate, modulate
from .power import PowerAllocation, joint_constellation, normalize_ratios, superpose
from .s2d import S2DStrategy, SubspaceLayout, global_to_subspace, make_strategy
from .sic import GroupLink, equalize, ml_joint_oracle, sic_demodulate

__version__ = "0.1.0"

__all__ = [
    "BERRecord",
    "ChannelConfig",
    "Constellation",
    "GroupLink",
    "HD_FEC_THRESHOLD",
    "OfdmConfig",
    "PRESETS",
    "PowerAllocation",
    "S2DStrategy",
    "ScenarioConfig",
    "Scheme",
    "SchemeKind",
    "SubspaceLayout",
    "apply_ini",
    "build_scheme",
    "count_ber",
    "demap_nearest",
    "demodulate",
    "equalize",
    "fiber_gains",
    "global_to_subspace",
    "hd_fec_crossing",
    "joint_constellation",
    "load_config",
    "make_qam",
    "make_strategy",
    "make_tetrahedron",
    "map_bits",
    "med",
    "ml_joint_oracle",
    "modulate",
    "normalize_ratios",
    "preset",
    "qpsk_awgn_ber",
    "rop_to_snr",
    "run_point",
    "run_sweep",
    "sic_demodulate",
    "superpose",
    "to_ini",
    "transmit",
]
