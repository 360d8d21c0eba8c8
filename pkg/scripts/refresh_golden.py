"""Regenerate the expected stdout files for the CLI golden corpus.

Run from the repository root after a deliberate output change:

    python3 scripts/refresh_golden.py

Review the diff before committing; every byte of these files is load-bearing.
"""

import os
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))

from test_cli import CASES, GOLDEN, run_case  # noqa: E402


def main() -> None:
    os.chdir(GOLDEN)
    for name, argv, stdin_file in CASES:
        out, code = run_case(argv, stdin_file)
        if code != 0:
            raise SystemExit(f"{name}: exit {code}, refusing to record a failure")
        (GOLDEN / f"{name}.out").write_text(out)
        print(f"wrote {name}.out ({len(out)} bytes)")


if __name__ == "__main__":
    main()
