"""Rewrite every CLI golden listed in goldens/manifest.json.

Run after an intentional output change, then review the diff:

    python3 scripts/regen_goldens.py && git diff goldens/
"""

import contextlib
import io
import json
from pathlib import Path

from atype_fillings.cli import main

GOLDENS = Path(__file__).resolve().parent.parent / "goldens"


def run(argv: list[str]) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


if __name__ == "__main__":
    manifest = json.loads((GOLDENS / "manifest.json").read_text())
    for name, argv in sorted(manifest.items()):
        code, out = run(argv)
        (GOLDENS / name).write_text(out)
        print(f"{name}: exit {code}")
