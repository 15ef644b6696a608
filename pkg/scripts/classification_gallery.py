#!/usr/bin/env python3
"""Walk a gallery of small complexes and tabulate their extension-type
verdicts: finite classification, compactness, and mod-p triviality.

Add your own rows with --extra '{1: Z/2, 3: Q}' (repeatable).
"""

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from extcalc import (
    classify_finite_type,
    format_graded,
    has_compact_type,
    mod_p_trivial,
    parse_graded,
)

GALLERY = [
    "{1: Z}",
    "{1: Z_(2)}",
    "{1: Z[1/3]}",
    "{1: Q}",
    "{2: Q}",
    "{1: Z/2}",
    "{2: Z/3}",
    "{1: Z + Z/2}",
    "{1: Z, 4: Q}",
    "{1: Z_(2), 4: Z/3}",
    "{1: Z/2, 2: Z/2}",
    "{3: Q^2}",
]


@dataclass
class Config:
    primes: tuple[int, ...] = (2, 3, 5)
    extra: list[str] = field(default_factory=list)


def describe(kind_json) -> str:
    kind = kind_json["kind"]
    if kind == "localization":
        ps = kind_json["primes"]
        if ps["kind"] == "cofinite" and not ps["primes"]:
            return "circle"
        tilde = "~" if ps["kind"] == "cofinite" else ""
        return "circle at " + tilde + "{" + ",".join(map(str, ps["primes"])) + "}"
    if kind == "rational":
        return f"K(Q,{kind_json['degree']})"
    return "none"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5], help="mod-p columns")
    parser.add_argument("--extra", action="append", default=[], help="additional graded literal")
    ns = parser.parse_args()
    cfg = Config(primes=tuple(ns.primes), extra=list(ns.extra))

    rows = []
    for text in GALLERY + cfg.extra:
        k = parse_graded(text)
        verdict = classify_finite_type(k)
        rows.append(
            (
                format_graded(k),
                describe(verdict.to_json()),
                "yes" if has_compact_type(k) else "no",
                " ".join("yes" if mod_p_trivial(k, p) else "no" for p in cfg.primes),
            )
        )

    headers = ("complex", "finite type", "compact", " ".join(f"mod{p}" for p in cfg.primes))
    widths = [max(len(r[i]) for r in rows + [headers]) for i in range(4)]
    for row in [headers] + rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
