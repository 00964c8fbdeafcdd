"""Command-line entry point: ``sdcma simulate | med | joint``.

Exit codes: 0 success, 2 configuration error, 3 runtime error.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import logging
import sys

from .config import PRESETS, ScenarioConfig, load_config, preset, to_ini
from .constellation import by_name, med
from .errors import ConfigError, SdcmaError
from .harness import gnuplot_script, run_sweep
from .power import joint_constellation, normalize_ratios

log = logging.getLogger("sdcma")

EXIT_CONFIG = 2
EXIT_RUNTIME = 3


def _resolve(args) -> ScenarioConfig:
    cfg = preset(args.preset) if args.preset else ScenarioConfig()
    if args.config:
        cfg = load_config(args.config, cfg)
    if args.seeds is not None:
        if args.seeds < 1:
            raise ConfigError("--seeds must be >= 1")
        cfg = cfg.replace(seeds=tuple(range(1, args.seeds + 1)))
    if args.symbols is not None:
        cfg = cfg.replace(symbols_per_point=args.symbols)
    if args.no_noise:
        cfg = cfg.replace(channel=dataclasses.replace(cfg.channel, noise_enabled=False))
    return cfg


def cmd_simulate(args) -> int:
    if not args.config and not args.preset:
        raise ConfigError("simulate needs --config and/or --preset")
    cfg = _resolve(args)
    if args.print_config:
        sys.stdout.write(to_ini(cfg))
        return 0
    log.info("running %s: %d points x %d seeds", cfg.name, len(cfg.sweep_values()), len(cfg.seeds))
    result = run_sweep(cfg, workers=args.workers)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(result.csv)
        if args.plot:
            with open(args.plot, "w") as fh:
                fh.write(gnuplot_script(args.out, cfg))
    else:
        sys.stdout.write(result.csv)
    sys.stderr.write(result.summary)
    return 0


def cmd_med(args) -> int:
    c = by_name(args.constellation)
    print(f"{c.name}: MED = {med(c):.6f} (average power {c.average_power():.6f})")
    return 0


def _parse_group(text: str):
    """``name:ratio:d1,d2[,d3]`` -> (constellation, ratio, row)."""
    try:
        name, ratio, dims = text.split(":")
        return by_name(name), float(ratio), tuple(int(d) for d in dims.split(","))
    except ValueError:
        raise ConfigError(f"bad --groups entry {text!r}; expected name:ratio:d1,d2") from None


def cmd_joint(args) -> int:
    groups = [_parse_group(g) for g in args.groups]
    P = args.P or max(max(row) for _, _, row in groups)
    alloc = normalize_ratios([r for _, r, _ in groups])
    points, labels = joint_constellation([(c, row) for c, _, row in groups], alloc, P)
    distinct = len({tuple(p) for p in points.round(12)})
    print(f"{len(points)} joint points in {P} dimensions ({distinct} distinct)")
    if args.dump:
        with open(args.dump, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(
                ["index"] + [f"g{k + 1}" for k in range(len(groups))] + [f"d{d + 1}" for d in range(P)]
            )
            for i, (p, lab) in enumerate(zip(points, labels)):
                w.writerow([i, *lab, *(f"{x:.12g}" for x in p)])
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sdcma", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run a BER sweep")
    sim.add_argument("--config", help="scenario file (INI grammar, see README)")
    sim.add_argument("--preset", choices=sorted(PRESETS))
    sim.add_argument("--out", help="CSV output path (stdout when omitted)")
    sim.add_argument("--plot", help="also write a gnuplot script for --out")
    sim.add_argument("--seeds", type=int, help="use seeds 1..N")
    sim.add_argument("--symbols", type=int, help="OFDM symbols per sweep point and seed")
    sim.add_argument("--no-noise", action="store_true")
    sim.add_argument("--workers", type=int, default=1)
    sim.add_argument("--print-config", action="store_true", help="echo the resolved config and exit")
    sim.set_defaults(func=cmd_simulate)

    m = sub.add_parser("med", help="minimum Euclidean distance of a constellation")
    m.add_argument("--constellation", required=True, choices=["qpsk", "16qam", "tetra"])
    m.set_defaults(func=cmd_med)

    j = sub.add_parser("joint", help="enumerate a joint constellation")
    j.add_argument("--groups", nargs="+", required=True, metavar="NAME:RATIO:DIMS")
    j.add_argument("--P", type=int, help="subspace dimension (default: largest dim used)")
    j.add_argument("--dump", help="write the points to CSV")
    j.set_defaults(func=cmd_joint)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (SdcmaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
