#!/usr/bin/env python3
"""Build separating Bockstein functions for pairs of admissible groups.

For each sampled (G, F, m) the script tries the infinite-gap construction
(dimension m on G, infinite on F) and the unit-gap construction (m on G,
m+1 on F with covering dimension m+1), printing whichever apply.  A single
explicit pair can be given instead of sampling.
"""

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from extcalc import (
    DomainError,
    coef_dimension,
    covering_dimension,
    format_group,
    infinite_gap_witness,
    parse_group,
    unit_gap_witness,
)


@dataclass
class Config:
    samples: int = 10
    seed: int = 0
    max_m: int = 3
    pair: tuple[str, str, int] | None = None


def random_group_text(rng: random.Random) -> str:
    pool = ["Z", "Q", "Z/2", "Z/4", "Z/9", "Z/2^oo", "Z/3^oo", "Z_(2)", "Z_(3)", "Z[1/2]", "Z + Z/2", "Z/2 + Z/3"]
    return rng.choice(pool)


def show(g_text: str, f_text: str, m: int) -> None:
    g, f = parse_group(g_text), parse_group(f_text)
    print(f"G = {format_group(g)}, F = {format_group(f)}, m = {m}")
    try:
        alpha = infinite_gap_witness(g, f, m)
    except DomainError as exc:
        print(f"  infinite gap: n/a ({exc.code})")
    else:
        print(f"  infinite gap: dim(G) = {coef_dimension(alpha, g)}, dim(F) = {coef_dimension(alpha, f)}")
        print(f"    alpha = {json.dumps(alpha.to_json())}")
    try:
        alpha, case = unit_gap_witness(g, f, m)
    except DomainError as exc:
        print(f"  unit gap: n/a ({exc.code})")
    else:
        print(
            f"  unit gap (case {case}): dim(G) = {coef_dimension(alpha, g)}, "
            f"dim(F) = {coef_dimension(alpha, f)}, covdim = {covering_dimension(alpha)}"
        )
        print(f"    alpha = {json.dumps(alpha.to_json())}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=10)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--pair", nargs=3, metavar=("G", "F", "M"), help="one explicit G F m instead of sampling")
    ns = parser.parse_args()
    cfg = Config(ns.samples, ns.seed, ns.max_m, tuple(ns.pair) if ns.pair else None)

    if cfg.pair is not None:
        g_text, f_text, m = cfg.pair
        show(g_text, f_text, int(m))
        return 0

    rng = random.Random(cfg.seed)
    for _ in range(cfg.samples):
        show(random_group_text(rng), random_group_text(rng), rng.randint(1, cfg.max_m))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
