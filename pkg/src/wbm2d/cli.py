"""Command line front end.

Three subcommands:

* ``wbm run --config FILE [--out DIR]`` runs one experiment from a key=value
  config file and writes ``<name>.csv``, where ``<name>`` is the file stem.
* ``wbm preset NAME [--out DIR]`` runs a named preset group and writes one
  CSV per variant.
* ``wbm list-presets`` prints the available group names with their variants.

Exit status: 0 on success, 1 on a configuration problem (bad file, unknown
preset), 2 when a sweep lost cells to numerical failure (fewer records than
formulations x T values).
"""

import argparse
import pathlib
import sys
from typing import List, Optional, Sequence, Tuple

from .experiments import (
    ConfigError,
    ExperimentConfig,
    parse_config,
    presets,
    run_sweep,
    write_csv,
)


def _expected_cells(cfg: ExperimentConfig) -> int:
    return len(cfg.formulations) * len(cfg.t_values)


def _run_configs(
    named: Sequence[Tuple[str, ExperimentConfig]], out_dir: pathlib.Path
) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    complete = True
    for filename, cfg in named:
        records = run_sweep(cfg)
        path = out_dir / f"{filename}.csv"
        write_csv(records, path)
        status = "" if len(records) == _expected_cells(cfg) else " (incomplete)"
        print(f"wrote {path} ({len(records)} records){status}")
        if len(records) < _expected_cells(cfg):
            complete = False
    return 0 if complete else 2


def _cmd_run(args: argparse.Namespace) -> int:
    path = pathlib.Path(args.config)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return 1
    try:
        cfg = parse_config(text, path.stem)
    except ConfigError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return 1
    return _run_configs([(cfg.name, cfg)], pathlib.Path(args.out))


def _cmd_preset(args: argparse.Namespace) -> int:
    groups = presets()
    if args.name not in groups:
        known = ", ".join(sorted(groups))
        print(f"error: unknown preset {args.name!r} (known: {known})", file=sys.stderr)
        return 1
    named = [(cfg.name, cfg) for cfg in groups[args.name]]
    return _run_configs(named, pathlib.Path(args.out))


def _cmd_list_presets(_: argparse.Namespace) -> int:
    for name, cfgs in presets().items():
        variants = ", ".join(cfg.name for cfg in cfgs)
        print(f"{name}: {variants}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wbm", description="Wave-expansion Helmholtz experiment runner"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run one experiment from a config file")
    p_run.add_argument("--config", required=True, help="path to a key=value config")
    p_run.add_argument("--out", default=".", help="output directory (default: .)")
    p_run.set_defaults(func=_cmd_run)

    p_preset = sub.add_parser("preset", help="run a named preset group")
    p_preset.add_argument("name", help="preset group name (see list-presets)")
    p_preset.add_argument("--out", default=".", help="output directory (default: .)")
    p_preset.set_defaults(func=_cmd_preset)

    p_list = sub.add_parser("list-presets", help="print preset groups and variants")
    p_list.set_defaults(func=_cmd_list_presets)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
