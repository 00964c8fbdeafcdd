"""Compare single-group QPSK BER through the full OFDM chain with Q(sqrt(2 Eb/N0))."""

from __future__ import annotations

import argparse

from sdcma.baselines import SchemeKind
from sdcma.channel import ChannelConfig
from sdcma.config import ScenarioConfig
from sdcma.harness import ebn0_to_snr_db, run_point
from sdcma.metrics import binomial_sigma, qpsk_awgn_ber
from sdcma.ofdm import OfdmConfig


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ebn0", type=float, nargs="+", default=[4.0, 6.0, 8.0])
    ap.add_argument("--symbols", type=int, default=400)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    ofdm = OfdmConfig()
    cfg = ScenarioConfig(
        name="awgn",
        schemes=(SchemeKind.PD_SDCMA,),
        constellations=("qpsk",),
        ratios=(1.0,),
        ofdm=ofdm,
        channel=ChannelConfig(dispersion_enabled=False),
        sweep_unit="snr",
        symbols_per_point=args.symbols,
    )
    count = ofdm.dimensions // 2
    print(f"{'Eb/N0':>6} {'SNR':>7} {'measured':>11} {'theory':>11} {'z':>6}")
    for ebn0 in args.ebn0:
        snr = ebn0_to_snr_db(ebn0, 2, count, ofdm)
        (rec,) = run_point(cfg, snr, args.seed)
        ref = qpsk_awgn_ber(ebn0)
        z = (rec.ber - ref) / binomial_sigma(ref, rec.bits_total)
        print(f"{ebn0:6.1f} {snr:7.2f} {rec.ber:11.4e} {ref:11.4e} {z:6.2f}")


if __name__ == "__main__":
    main()
