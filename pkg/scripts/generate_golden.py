#!/usr/bin/env python3
"""Regenerate the golden structure files shipped with the package.

Run from the repository root:  python3 scripts/generate_golden.py
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from qhopf.catalog import BUILTIN_NAMES, load_builtin
from qhopf.structfile import load_entry, render_entry, save_entry


def main() -> int:
    out_dir = os.path.join(os.path.dirname(__file__), "..", "src", "qhopf", "data")
    os.makedirs(out_dir, exist_ok=True)
    for name in BUILTIN_NAMES:
        entry = load_builtin(name)
        path = os.path.join(out_dir, f"{name}.qh")
        save_entry(entry, path)
        again = load_entry(path)
        assert render_entry(again) == render_entry(entry), name
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
