"""Command line entry point: ``figviz --panel spec.json``."""
from __future__ import annotations

import argparse
import sys

from .render import PanelSpec, PanelSpecError, render


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="figviz",
        description="Render bounds-sweep CSV files into a multi-panel line chart.",
    )
    parser.add_argument("--panel", required=True, help="path to a panel spec JSON file")
    args = parser.parse_args(argv)
    try:
        out = render(PanelSpec.from_json(args.panel))
    except PanelSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
