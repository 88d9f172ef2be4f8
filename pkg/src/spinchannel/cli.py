"""Command-line entry point: ``spinchannel --preset fig1 --out fig1.csv``.

Exit codes: 0 success, 2 usage or parse error, 3 numeric or domain error,
4 I/O error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .sweep import PRESETS, ConfigError, PresetError, emit_table, parse_config, preset_spec, run_timeseries

EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinchannel",
        description="Time series of negativity, coherence, entropic uncertainty, entropy and fidelity.",
    )
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--preset", help="figure preset id (see --list-presets)")
    source.add_argument("--config", help="path to a sweep configuration file")
    parser.add_argument("--out", default="-", help="output path (default: standard output)")
    parser.add_argument("--format", choices=("csv", "json"), help="output format (default: csv)")
    parser.add_argument("--tmax", type=float, help="end of the time grid")
    parser.add_argument("--steps", type=int, help="number of time points")
    parser.add_argument(
        "--set", action="append", default=[], metavar="SECTION.KEY=VALUE", help="override one setting (repeatable)"
    )
    parser.add_argument("--list-presets", action="store_true", help="print preset ids and exit")
    return parser


def _overrides(args) -> str:
    lines = []
    for item in args.set:
        target, sep, value = item.partition("=")
        section, dot, key = target.strip().partition(".")
        if not sep or not dot:
            raise ConfigError(f"--set expects SECTION.KEY=VALUE, got {item!r}")
        lines.append(f"[{section}]\n{key} = {value.strip()}")
    if args.tmax is not None:
        lines.append(f"[sweep]\nt_max = {args.tmax!r}")
    if args.steps is not None:
        lines.append(f"[sweep]\nsteps = {args.steps}")
    return "\n" + "\n".join(lines) + "\n" if lines else ""


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.list_presets:
        print("\n".join(PRESETS))
        return 0
    if not args.preset and not args.config:
        parser.print_usage(sys.stderr)
        print("spinchannel: error: one of --preset or --config is required", file=sys.stderr)
        return EXIT_USAGE

    try:
        overrides = _overrides(args)
        if args.preset:
            spec = preset_spec(args.preset, overrides)
        else:
            try:
                with open(args.config, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as err:
                print(f"spinchannel: cannot read {args.config}: {err.strerror}", file=sys.stderr)
                return EXIT_IO
            spec = parse_config(text + overrides)
    except (ConfigError, PresetError) as err:
        print(f"spinchannel: error: {err}", file=sys.stderr)
        return EXIT_USAGE

    try:
        data = run_timeseries(spec)
    except (ValueError, ArithmeticError, np.linalg.LinAlgError) as err:
        print(f"spinchannel: numeric error: {err}", file=sys.stderr)
        return EXIT_DOMAIN

    try:
        emit_table(data, args.format or spec.output_format, args.out)
    except OSError as err:
        print(f"spinchannel: {err}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
