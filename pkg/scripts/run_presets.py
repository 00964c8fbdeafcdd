"""Run the built-in sweep presets and write CSV, gnuplot and summary files.

    python3 scripts/run_presets.py --out results --seeds 2 --symbols 200
"""

from __future__ import annotations

import argparse
import os

from sdcma.config import PRESETS, preset
from sdcma.harness import gnuplot_script, run_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("names", nargs="*", default=sorted(PRESETS), help="preset names (default: all)")
    ap.add_argument("--out", default="results")
    ap.add_argument("--seeds", type=int, help="use seeds 1..N instead of the preset's")
    ap.add_argument("--symbols", type=int, help="OFDM symbols per point and seed")
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    os.makedirs(args.out, exist_ok=True)
    for name in args.names:
        cfg = preset(name)
        if args.seeds:
            cfg = cfg.replace(seeds=tuple(range(1, args.seeds + 1)))
        if args.symbols:
            cfg = cfg.replace(symbols_per_point=args.symbols)
        result = run_sweep(cfg, workers=args.workers)
        csv_path = os.path.join(args.out, f"{name}.csv")
        with open(csv_path, "w", newline="") as fh:
            fh.write(result.csv)
        with open(os.path.join(args.out, f"{name}.gp"), "w") as fh:
            fh.write(gnuplot_script(csv_path, cfg))
        with open(os.path.join(args.out, f"{name}_summary.txt"), "w") as fh:
            fh.write(result.summary)
        print(result.summary, end="")


if __name__ == "__main__":
    main()
