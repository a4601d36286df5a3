"""Time the fibre and factorization convolution routes on random sparse elements."""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from groupoids.algebra import AlgebraElement, convolve, convolve_symmetric
from groupoids.corpus import load_all


@dataclass
class Config:
    trials: int = 20
    density: float = 0.3
    seed: int = 0


def random_element(G, rnd, density):
    return AlgebraElement(
        G, {g: Fraction(rnd.randint(-9, 9), rnd.randint(1, 9)) for g in G.elements if rnd.random() < density}
    )


def run(cfg: Config) -> None:
    rnd = random.Random(cfg.seed)
    print(f"{'groupoid':24} {'elements':>8} {'fibre ms':>9} {'factor ms':>9} agree")
    for name, G in load_all().items():
        if len(G) == 0:
            continue
        pairs = [(random_element(G, rnd, cfg.density), random_element(G, rnd, cfg.density)) for _ in range(cfg.trials)]
        t = time.perf_counter()
        fibre = [convolve(G, a, b) for a, b in pairs]
        t_fibre = time.perf_counter() - t
        t = time.perf_counter()
        factor = [convolve_symmetric(G, a, b) for a, b in pairs]
        t_factor = time.perf_counter() - t
        agree = fibre == factor
        print(f"{name:24} {len(G):8d} {1e3 * t_fibre / cfg.trials:9.3f} {1e3 * t_factor / cfg.trials:9.3f} {agree}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--density", type=float, default=Config.density)
    ap.add_argument("--seed", type=int, default=Config.seed)
    a = ap.parse_args()
    run(Config(a.trials, a.density, a.seed))


if __name__ == "__main__":
    main()
