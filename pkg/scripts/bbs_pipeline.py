"""Border basis scheme pipeline for a single order ideal.

Builds the scheme, reembeds it along a Z-separating tuple, extracts minimal
generators and prints the degree blocks of the resulting positive algebra.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from gradloci.bbscheme import build_scheme, validate_order_ideal
from gradloci.fixtures import EX7_3_Z, EX7_4_Z, reembedded_algebra
from gradloci.ideals import Budget, BudgetExceeded, minimal_generators
from gradloci.posalg import degree_blocks

PRESETS = {
    "zz": (("1", "x", "y", "z", "z^2"), EX7_3_Z),
    "yz": (("1", "x", "y", "z", "y*z"), EX7_4_Z),
}


@dataclass
class PipelineConfig:
    terms: tuple
    z: tuple
    max_seconds: float = 1800.0
    blocks: bool = True


def run(cfg: PipelineConfig) -> int:
    t0 = time.perf_counter()
    data = build_scheme(validate_order_ideal(list(cfg.terms)))
    s = data.summary()
    print(f"O = {s['order_ideal']}  border = {s['border']}")
    print(f"generators of I(B_O): {s['num_generators']}  C0 = {len(s['C0'])}  C+ = {len(s['C+'])}")
    PA = reembedded_algebra(data, cfg.z)
    print(f"reembedding: {PA.ring.n} Y-variables ({len(PA.ring.params)} of weight zero)")
    try:
        F = minimal_generators(PA.ideal, Budget(max_seconds=cfg.max_seconds))
    except BudgetExceeded as exc:
        print(f"minimal generators: budget exceeded ({exc})")
        return 3
    print(f"minimal generators: {len(F)}")
    if cfg.blocks:
        for d, M in sorted(degree_blocks(PA, F).items()):
            r, c = M.shape
            print(f"block of degree {d} ({r}x{c}):\n{M}")
    print(f"done in {time.perf_counter() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("preset", choices=sorted(PRESETS))
    ap.add_argument("--max-seconds", type=float, default=1800.0)
    ap.add_argument("--no-blocks", action="store_true")
    a = ap.parse_args()
    terms, z = PRESETS[a.preset]
    raise SystemExit(run(PipelineConfig(terms, z, a.max_seconds, not a.no_blocks)))
