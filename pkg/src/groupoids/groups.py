"""Finite groups given by multiplication tables, and their identification.

Groups here are small (isotropy groups of desk-scale groupoids), so every law is
checked exhaustively over the table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .errors import NotAGroup, OrderTooLarge


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group as an ordered element tuple plus a full product table."""

    elements: tuple
    product: Mapping[tuple, Hashable] = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "product", dict(self.product))
        check_group(self.elements, self.product)

    def mul(self, a, b):
        return self.product[(a, b)]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self):
        return _find_identity(self.elements, self.product)

    def inverse(self, a):
        e = self.identity
        for b in self.elements:
            if self.product[(a, b)] == e:
                return b
        raise AssertionError("validated table has no inverse")

    def element_order(self, a) -> int:
        e = self.identity
        x, k = a, 1
        while x != e:
            x = self.product[(x, a)]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(
            self.product[(a, b)] == self.product[(b, a)]
            for a, b in itertools.combinations(self.elements, 2)
        )

    def order_profile(self) -> tuple[int, ...]:
        """Sorted multiset of element orders."""
        return tuple(sorted(self.element_order(a) for a in self.elements))

    def __eq__(self, other):
        if not isinstance(other, GroupTable):
            return NotImplemented
        return set(self.elements) == set(other.elements) and self.product == other.product

    def __hash__(self):
        return hash(frozenset(self.elements))


def _find_identity(elements, product):
    for e in elements:
        if all(product.get((e, a)) == a and product.get((a, e)) == a for a in elements):
            return e
    return None


def check_group(elements: Sequence, product: Mapping) -> None:
    """Raise NotAGroup naming the first failing law."""
    elements = tuple(elements)
    members = set(elements)
    if not elements:
        raise NotAGroup("empty table", law="nonempty")
    for a in elements:
        for b in elements:
            c = product.get((a, b))
            if c is None or c not in members:
                raise NotAGroup("product undefined or outside the set", law="closure", a=a, b=b)
    for a, b, c in itertools.product(elements, repeat=3):
        if product[(product[(a, b)], c)] != product[(a, product[(b, c)])]:
            raise NotAGroup(law="associativity", a=a, b=b, c=c)
    e = _find_identity(elements, product)
    if e is None:
        raise NotAGroup(law="identity")
    for a in elements:
        if not any(product[(a, b)] == e and product[(b, a)] == e for b in elements):
            raise NotAGroup(law="inverse", a=a)


# Order <= 8 groups are separated by (order, abelian, element-order multiset).
_CATALOG_INVARIANTS: dict[tuple, str] = {
    (1, True, (1,)): "trivial",
    (2, True, (1, 2)): "Z2",
    (3, True, (1, 3, 3)): "Z3",
    (4, True, (1, 2, 4, 4)): "Z4",
    (4, True, (1, 2, 2, 2)): "Z2×Z2",
    (5, True, (1, 5, 5, 5, 5)): "Z5",
    (6, True, (1, 2, 3, 3, 6, 6)): "Z6",
    (6, False, (1, 2, 2, 2, 3, 3)): "S3",
    (7, True, (1,) + (7,) * 6): "Z7",
    (8, True, (1, 2) + (4,) * 2 + (8,) * 4): "Z8",
    (8, True, (1, 2, 2, 2, 4, 4, 4, 4)): "Z4×Z2",
    (8, True, (1,) + (2,) * 7): "Z2³",
    (8, False, (1, 2, 2, 2, 2, 2, 4, 4)): "D4",
    (8, False, (1, 2, 4, 4, 4, 4, 4, 4)): "Q8",
}

GROUP_NAMES = tuple(_CATALOG_INVARIANTS.values())


def group_invariants(group: GroupTable) -> tuple:
    return (group.order, group.is_abelian(), group.order_profile())


def identify_group(group: GroupTable) -> str:
    """Name the isomorphism class of a group of order at most 8."""
    if group.order > 8:
        raise OrderTooLarge(group.order, group.is_abelian())
    key = group_invariants(group)
    try:
        return _CATALOG_INVARIANTS[key]
    except KeyError:
        raise AssertionError(f"no group of order <= 8 has invariants {key}") from None


def degraded_label(exc: OrderTooLarge) -> str:
    return f"order{exc.order}-{'abelian' if exc.abelian else 'nonabelian'}"


def group_label(group: GroupTable) -> str:
    try:
        return identify_group(group)
    except OrderTooLarge as exc:
        return degraded_label(exc)


def label_order(label: str) -> int:
    """Group order encoded in a class name or degraded label."""
    if label.startswith("order"):
        return int(label[5:].split("-")[0])
    return _LABEL_ORDERS[label]


_LABEL_ORDERS = {name: key[0] for key, name in _CATALOG_INVARIANTS.items()}


# -- standard tables -------------------------------------------------------


def from_function(elements: Iterable, mul: Callable) -> GroupTable:
    elements = tuple(elements)
    return GroupTable(elements, {(a, b): mul(a, b) for a in elements for b in elements})


def cyclic(n: int) -> GroupTable:
    return from_function(range(n), lambda a, b: (a + b) % n)


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    elements = tuple(itertools.product(g.elements, h.elements))
    return from_function(elements, lambda a, b: (g.mul(a[0], b[0]), h.mul(a[1], b[1])))


def klein() -> GroupTable:
    return direct_product(cyclic(2), cyclic(2))


def symmetric(n: int) -> GroupTable:
    perms = tuple(itertools.permutations(range(n)))
    # (a*b)(i) = a(b(i))
    return from_function(perms, lambda a, b: tuple(a[b[i]] for i in range(n)))


# Symmetries of the square as integer matrices ((a, b), (c, d)) acting on
# column vectors. Names: rotations r0..r3 (counterclockwise by k quarter
# turns), reflections across the x-axis, y-axis, diagonal y=x, antidiagonal.
SQUARE_SYMMETRIES: dict[str, tuple[tuple[int, int], tuple[int, int]]] = {
    "r0": ((1, 0), (0, 1)),
    "r1": ((0, -1), (1, 0)),
    "r2": ((-1, 0), (0, -1)),
    "r3": ((0, 1), (-1, 0)),
    "sx": ((1, 0), (0, -1)),
    "sy": ((-1, 0), (0, 1)),
    "sd": ((0, 1), (1, 0)),
    "sa": ((0, -1), (-1, 0)),
}
_MATRIX_NAMES = {m: k for k, m in SQUARE_SYMMETRIES.items()}


def matmul2(p, q):
    return tuple(
        tuple(sum(p[i][k] * q[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def apply2(m, v):
    return tuple(m[i][0] * v[0] + m[i][1] * v[1] for i in range(2))


def dihedral_square() -> GroupTable:
    """D4 with named elements; product is matrix product (apply right factor first)."""
    return from_function(
        SQUARE_SYMMETRIES,
        lambda a, b: _MATRIX_NAMES[matmul2(SQUARE_SYMMETRIES[a], SQUARE_SYMMETRIES[b])],
    )


def quaternion() -> GroupTable:
    # unit quaternions (sign, basis) with basis in 1, i, j, k
    basis_mul = {
        ("1", x): (1, x) for x in "1ijk"
    } | {
        (x, "1"): (1, x) for x in "1ijk"
    } | {
        ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
        ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
    }

    def mul(a, b):
        s, x = basis_mul[(a[1], b[1])]
        return (a[0] * b[0] * s, x)

    return from_function([(s, x) for x in "1ijk" for s in (1, -1)], mul)


def relabel(group: GroupTable, mapping: Mapping) -> GroupTable:
    inv = {v: k for k, v in mapping.items()}
    return from_function(
        (mapping[a] for a in group.elements),
        lambda a, b: mapping[group.mul(inv[a], inv[b])],
    )


def cayley_rows(group: GroupTable) -> list[list[int]]:
    """Index form of the table, rows and columns in element order."""
    idx = {a: i for i, a in enumerate(group.elements)}
    return [[idx[group.mul(a, b)] for b in group.elements] for a in group.elements]


def from_rows(rows: Sequence[Sequence[int]]) -> GroupTable:
    n = len(rows)
    return GroupTable(range(n), {(a, b): rows[a][b] for a in range(n) for b in range(n)})


__all__ = [
    "GroupTable",
    "check_group",
    "identify_group",
    "group_label",
    "group_invariants",
    "cyclic",
    "klein",
    "symmetric",
    "dihedral_square",
    "quaternion",
    "direct_product",
    "SQUARE_SYMMETRIES",
]
