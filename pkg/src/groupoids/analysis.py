"""Orbits, isotropy groups, skeletons and orbit decomposition."""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteGroupoid, restrict
from .errors import ObjectNotFound
from .groups import GroupTable, group_label, identify_group
from .textio import token


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


@dataclass(frozen=True)
class OrbitPartition:
    """Orbits as blocks in object order; blocks sorted by their least object."""

    blocks: tuple[tuple, ...]

    @property
    def representatives(self) -> tuple:
        return tuple(b[0] for b in self.blocks)

    def block_of(self, x) -> tuple:
        for b in self.blocks:
            if x in b:
                return b
        raise ObjectNotFound(object=x)

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class IsotropyGroup:
    base: object
    elements: tuple
    table: GroupTable
    name: str

    @property
    def order(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class SkeletonEntry:
    representative: object
    size: int
    isotropy: str


@dataclass(frozen=True)
class Skeleton:
    entries: tuple[SkeletonEntry, ...]

    def classes(self) -> list[tuple[int, str]]:
        return [(e.size, e.isotropy) for e in self.entries]

    def lines(self) -> list[str]:
        return [
            f"orbit {token(e.representative)} size={e.size} isotropy={e.isotropy}"
            for e in self.entries
        ]

    def __len__(self) -> int:
        return len(self.entries)


def orbits(G: FiniteGroupoid) -> OrbitPartition:
    uf = UnionFind(G.objects)
    for g in G.elements:
        uf.union(G.alpha[g], G.beta[g])
    blocks: dict = {}
    for x in G.objects:
        blocks.setdefault(uf.find(x), []).append(x)
    return OrbitPartition(tuple(tuple(b) for b in blocks.values()))


def isotropy_table(G: FiniteGroupoid, x) -> GroupTable:
    loops = G.hom(x, x)
    return GroupTable(loops, {(g, h): G.compose(g, h) for g in loops for h in loops})


def isotropy_group(G: FiniteGroupoid, x) -> IsotropyGroup:
    if x not in G.identity_at:
        raise ObjectNotFound(object=x)
    table = isotropy_table(G, x)
    return IsotropyGroup(x, table.elements, table, group_label(table))


def transport(G: FiniteGroupoid, g) -> dict:
    """Conjugation h -> g h g^-1 from the isotropy at beta(g) to that at alpha(g)."""
    gi = G.inverse[g]
    return {h: G.compose(G.compose(g, h), gi) for h in G.hom(G.beta[g], G.beta[g])}


def is_group_isomorphism(phi: dict, source: GroupTable, target: GroupTable) -> bool:
    if set(phi) != set(source.elements) or len(set(phi.values())) != len(phi):
        return False
    if set(phi.values()) != set(target.elements):
        return False
    return all(
        phi[source.mul(a, b)] == target.mul(phi[a], phi[b])
        for a in source.elements
        for b in source.elements
    )


def orbit_decomposition(G: FiniteGroupoid) -> list[FiniteGroupoid]:
    return [restrict(G, block) for block in orbits(G).blocks]


def skeleton(G: FiniteGroupoid) -> Skeleton:
    """Per-orbit (size, isotropy class), sorted by size, class, then representative.

    Where an orbit has a second object, the class is recomputed there and the
    conjugation along a connecting arrow is checked to be an isomorphism.
    """
    entries = []
    for block in orbits(G).blocks:
        rep = block[0]
        iso = isotropy_group(G, rep)
        if len(block) > 1:
            other = block[1]
            iso2 = isotropy_group(G, other)
            arrow = G.hom(rep, other)[0]
            if iso2.name != iso.name or not is_group_isomorphism(
                transport(G, arrow), iso2.table, iso.table
            ):
                raise AssertionError(f"isotropy differs across orbit of {rep!r}")
        entries.append(SkeletonEntry(rep, len(block), iso.name))
    order = {x: i for i, x in enumerate(G.objects)}
    entries.sort(key=lambda e: (e.size, e.isotropy, order[e.representative]))
    return Skeleton(tuple(entries))


__all__ = [
    "OrbitPartition",
    "IsotropyGroup",
    "Skeleton",
    "SkeletonEntry",
    "orbits",
    "isotropy_group",
    "identify_group",
    "orbit_decomposition",
    "skeleton",
    "transport",
]
