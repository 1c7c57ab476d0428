"""CLI: plot --kind <kind> --in <paths...> --out <file>."""

from __future__ import annotations

import argparse
import sys

from plotkit.figures import FIGURE_KINDS, PlotSpec, render
from plotkit.schema import SchemaMismatch


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot", description="Render safelift run artifacts into figures."
    )
    parser.add_argument("--kind", required=True, choices=FIGURE_KINDS)
    parser.add_argument("--in", dest="inputs", required=True, nargs="+",
                        help="run directories or artifact files")
    parser.add_argument("--out", required=True, help="output image path")
    args = parser.parse_args(argv)
    try:
        path = render(PlotSpec(kind=args.kind, inputs=tuple(args.inputs), output=args.out))
    except SchemaMismatch as exc:
        print(f"schema mismatch: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
