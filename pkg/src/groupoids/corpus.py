"""Built-in test corpus of small groupoids, including the tiled-floor examples."""

from __future__ import annotations

from typing import Callable

from . import groups
from .core import (
    FiniteGroupoid,
    action_groupoid,
    disjoint_union,
    empty_groupoid,
    equivalence_relation_groupoid,
    group_as_groupoid,
    identity_groupoid,
    pair_groupoid,
)
from .tiling import (
    STANDARD_RESTRICTED_SAMPLE,
    TiledRectangle,
    local_groupoid_on_corners,
    restricted_action_groupoid,
)


def _swap(g, x):
    return x if g == 0 else 3 - x


def _swap_fixing_three(g, x):
    return x if g == 0 or x == 3 else 3 - x


CORPUS: dict[str, Callable[[], FiniteGroupoid]] = {
    "empty": empty_groupoid,
    "trivial": lambda: group_as_groupoid(groups.cyclic(1)),
    "pair1": lambda: pair_groupoid([1]),
    "pair2": lambda: pair_groupoid([1, 2]),
    "pair3": lambda: pair_groupoid([1, 2, 3]),
    "pair5": lambda: pair_groupoid(range(1, 6)),
    "discrete3": lambda: identity_groupoid([1, 2, 3]),
    "Z2": lambda: group_as_groupoid(groups.cyclic(2)),
    "Z3": lambda: group_as_groupoid(groups.cyclic(3)),
    "Z4": lambda: group_as_groupoid(groups.cyclic(4)),
    "Z2xZ2": lambda: group_as_groupoid(groups.klein()),
    "S3": lambda: group_as_groupoid(groups.symmetric(3)),
    "D4": lambda: group_as_groupoid(groups.dihedral_square()),
    "Q8": lambda: group_as_groupoid(groups.quaternion()),
    "swap-action": lambda: action_groupoid(groups.cyclic(2), [1, 2], _swap),
    "swap-fix3-action": lambda: action_groupoid(groups.cyclic(2), [1, 2, 3], _swap_fixing_three),
    "partition-12-3": lambda: equivalence_relation_groupoid([[1, 2], [3]]),
    "pair2+Z2": lambda: disjoint_union(pair_groupoid([1, 2]), group_as_groupoid(groups.cyclic(2))),
    "D4+Z2+Z2": lambda: disjoint_union(
        group_as_groupoid(groups.dihedral_square()),
        group_as_groupoid(groups.cyclic(2)),
        group_as_groupoid(groups.cyclic(2)),
    ),
    "tiling-corners-2x2": lambda: local_groupoid_on_corners(TiledRectangle(2, 2)),
    "tiling-corners-3x2": lambda: local_groupoid_on_corners(TiledRectangle(3, 2)),
    "tiling-restricted-2x2": lambda: restricted_action_groupoid(
        TiledRectangle(2, 2), STANDARD_RESTRICTED_SAMPLE
    ),
}


def load(name: str) -> FiniteGroupoid:
    return CORPUS[name]()


def load_all(max_elements: int | None = None) -> dict[str, FiniteGroupoid]:
    out = {name: make() for name, make in CORPUS.items()}
    if max_elements is not None:
        out = {k: G for k, G in out.items() if len(G) <= max_elements}
    return out
