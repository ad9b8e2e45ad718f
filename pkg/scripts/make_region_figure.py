#!/usr/bin/env python3
"""Produce the example rate-region artifacts (CSV + SVG + manifest).

Usage: python scripts/make_region_figure.py [OUT_DIR]
"""

import sys

from mudr import cli
from mudr.scenario import bundled_scenario_path


def main() -> int:
    out = sys.argv[1] if len(sys.argv) > 1 else "out/region"
    return cli.main(
        [
            "region",
            "--scenario",
            str(bundled_scenario_path()),
            "--alpha-points",
            "400",
            "--out",
            out,
        ]
    )


if __name__ == "__main__":
    raise SystemExit(main())
