"""Rewrite the CLI golden files under tests/golden/ from the current build.

Review the diff before committing: the golden files are the contract.
"""

import json
from pathlib import Path

from ordfield.cli import run_command

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def main():
    cases = json.loads((GOLDEN / "cases.json").read_text())
    for name, argv in cases.items():
        for fmt, ext in (("text", "txt"), ("json", "json")):
            res = run_command(argv + ["--format", fmt])
            if res.code != 0:
                raise SystemExit(f"{name} ({fmt}) exited {res.code}: {res.error}")
            (GOLDEN / f"{name}.{ext}").write_text(res.output)
    print(f"wrote {2 * len(cases)} golden files")


if __name__ == "__main__":
    main()
