"""Compare the skeleton decision with the brute-force functor search on the corpus."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from groupoids.corpus import load_all
from groupoids.morphism import are_equivalent, brute_force_equivalence


@dataclass
class Config:
    max_elements: int = 12
    show_pairs: bool = False


def survey(cfg: Config) -> int:
    family = load_all(max_elements=cfg.max_elements)
    names = list(family)
    disagreements = 0
    equivalent = 0
    start = time.perf_counter()
    for a in names:
        for b in names:
            decision = bool(are_equivalent(family[a], family[b], cross_check=False))
            brute = brute_force_equivalence(family[a], family[b]) is not None
            equivalent += decision
            if decision != brute:
                disagreements += 1
                print(f"disagree {a} {b} skeleton={decision} search={brute}")
            elif cfg.show_pairs and decision and a < b:
                print(f"equivalent {a} {b}")
    elapsed = time.perf_counter() - start
    print(
        f"groupoids={len(names)} pairs={len(names) ** 2} equivalent={equivalent} "
        f"disagreements={disagreements} time={elapsed:.2f}s"
    )
    return disagreements


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-elements", type=int, default=Config.max_elements)
    ap.add_argument("--show-pairs", action="store_true")
    args = ap.parse_args()
    raise SystemExit(1 if survey(Config(args.max_elements, args.show_pairs)) else 0)


if __name__ == "__main__":
    main()
