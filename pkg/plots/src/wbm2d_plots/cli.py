"""plot_figures command line entry point.

Usage: plot_figures <csv...> --x {N|T} --out <dir>

Exit status 0 on success, 1 on unreadable input or a CSV that does not
match the experiment output schema.
"""

import argparse
import sys
from typing import List, Optional

from .figures import FigureSpec, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot_figures",
        description="Render convergence figures from experiment CSV files",
    )
    parser.add_argument("csvs", nargs="+", metavar="csv", help="input CSV files")
    parser.add_argument(
        "--x", choices=("N", "T"), default="N", help="x axis column (default: N)"
    )
    parser.add_argument("--out", default=".", help="output directory (default: .)")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        figspec = FigureSpec(csv_paths=tuple(args.csvs), x=args.x)
        written = render(figspec, args.out)
    except (OSError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
