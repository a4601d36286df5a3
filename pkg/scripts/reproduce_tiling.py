"""Reproduce the tiled-floor symmetry data.

Prints the corner-groupoid skeleton for every room up to the configured size,
the local orbit census on the standard sample, and isotropy at each point of
the restricted-action sample.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from groupoids.analysis import isotropy_group, skeleton
from groupoids.textio import token
from groupoids.tiling import (
    STANDARD_CENSUS_SAMPLE,
    STANDARD_RESTRICTED_SAMPLE,
    TiledRectangle,
    in_half_lattice,
    local_groupoid_on_corners,
    local_orbit_census,
    on_mirror_axis,
    restricted_action_groupoid,
)


@dataclass
class Config:
    max_m: int = 5
    max_n: int = 5
    census_m: int = 2
    census_n: int = 2


def corner_table(cfg: Config) -> None:
    print("# corner groupoid: (orbit size, isotropy) per room")
    for m in range(1, cfg.max_m + 1):
        for n in range(1, cfg.max_n + 1):
            t = time.perf_counter()
            G = local_groupoid_on_corners(TiledRectangle(m, n))
            classes = skeleton(G).classes()
            dt = time.perf_counter() - t
            shown = " ".join(f"{k}:{name}" for k, name in classes)
            print(f"room {m}x{n} corners={len(G.objects)} arrows={len(G)} orbits={len(classes)} {shown} ({dt:.3f}s)")


def census(cfg: Config) -> None:
    print("# local orbit census")
    for c in local_orbit_census(TiledRectangle(cfg.census_m, cfg.census_n), STANDARD_CENSUS_SAMPLE):
        print(c.line())


def restricted(cfg: Config) -> None:
    print("# restricted action groupoid isotropy")
    G = restricted_action_groupoid(TiledRectangle(cfg.census_m, cfg.census_n), STANDARD_RESTRICTED_SAMPLE)
    for p in G.objects:
        kind = "half-lattice" if in_half_lattice(p) else "mirror-axis" if on_mirror_axis(p) else "generic"
        print(f"point {token(p)} kind={kind} isotropy={isotropy_group(G, p).name}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=Config.max_m)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    args = ap.parse_args()
    cfg = Config(max_m=args.max_m, max_n=args.max_n)
    corner_table(cfg)
    census(cfg)
    restricted(cfg)


if __name__ == "__main__":
    main()
