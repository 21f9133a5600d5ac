"""Run the worked-example fixtures and print one line per check."""

from __future__ import annotations

import argparse
import json
from dataclasses import dataclass, field

from gradloci.fixtures import FIXTURES, run_fixture


@dataclass
class FixtureRunConfig:
    names: list = field(default_factory=lambda: list(FIXTURES))
    output: str | None = None
    show_passing: bool = True


def main(cfg: FixtureRunConfig) -> int:
    reports = []
    for name in cfg.names:
        rep = run_fixture(name)
        reports.append(rep)
        print(f"{name}: {'PASS' if rep.passed else 'FAIL'} ({rep.seconds:.2f}s)")
        for c in rep.checks:
            if cfg.show_passing or not c.passed:
                print(f"  [{'ok' if c.passed else 'FAIL'}] {c.label}")
    if cfg.output:
        with open(cfg.output, "w") as fh:
            json.dump([r.as_dict() for r in reports], fh, indent=2)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", default=list(FIXTURES))
    ap.add_argument("--output")
    ap.add_argument("--failures-only", action="store_true")
    a = ap.parse_args()
    raise SystemExit(main(FixtureRunConfig(a.names, a.output, not a.failures_only)))
