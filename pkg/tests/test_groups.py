"""Small-group tables and identification by (order, abelian, element orders)."""

import itertools
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import (
    AbelianGroup,
    CyclicGroup,
    DihedralGroup,
    SymmetricGroup,
)

from groupoids import groups
from groupoids.errors import NotAGroup, OrderTooLarge


def _table_from_perm_group(G):
    elements = [tuple(p.array_form) for p in G.elements]
    return groups.from_function(
        elements, lambda a, b: tuple((Permutation(list(a)) * Permutation(list(b))).array_form)
    )


def _quaternion_matrices():
    """Q8 as the closure of two 2x2 complex matrices."""
    i = np.array([[1j, 0], [0, -1j]])
    j = np.array([[0, 1], [-1, 0]], dtype=complex)
    key = lambda m: tuple(np.round(m, 9).flatten().tolist())
    found = {key(np.eye(2, dtype=complex)): np.eye(2, dtype=complex)}
    frontier = list(found.values())
    while frontier:
        nxt = []
        for m in frontier:
            for g in (i, j):
                p = m @ g
                if key(p) not in found:
                    found[key(p)] = p
                    nxt.append(p)
        frontier = nxt
    mats = dict(found)
    return groups.from_function(list(mats), lambda a, b: key(mats[a] @ mats[b]))


def oracle_catalog():
    """Every group of order <= 8, built without the package's own constructors."""
    return {
        "trivial": _table_from_perm_group(CyclicGroup(1)),
        "Z2": _table_from_perm_group(CyclicGroup(2)),
        "Z3": _table_from_perm_group(CyclicGroup(3)),
        "Z4": _table_from_perm_group(CyclicGroup(4)),
        "Z2×Z2": _table_from_perm_group(AbelianGroup(2, 2)),
        "Z5": _table_from_perm_group(CyclicGroup(5)),
        "Z6": _table_from_perm_group(CyclicGroup(6)),
        "S3": _table_from_perm_group(SymmetricGroup(3)),
        "Z7": _table_from_perm_group(CyclicGroup(7)),
        "Z8": _table_from_perm_group(CyclicGroup(8)),
        "Z4×Z2": _table_from_perm_group(AbelianGroup(4, 2)),
        "Z2³": _table_from_perm_group(AbelianGroup(2, 2, 2)),
        "D4": _table_from_perm_group(DihedralGroup(4)),
        "Q8": _quaternion_matrices(),
    }


def _isomorphic(g, h):
    """Brute-force isomorphism search (orders <= 8)."""
    if g.order != h.order:
        return False
    ge, he = list(g.elements), list(h.elements)
    for perm in itertools.permutations(he):
        phi = dict(zip(ge, perm))
        if all(phi[g.mul(a, b)] == h.mul(phi[a], phi[b]) for a in ge for b in ge):
            return True
    return False


CATALOG = oracle_catalog()


@pytest.mark.parametrize("name", list(CATALOG))
def test_identify_matches_oracle_catalog(name):
    assert groups.identify_group(CATALOG[name]) == name


def test_oracle_catalog_is_pairwise_non_isomorphic_for_order_8():
    eights = [n for n, g in CATALOG.items() if g.order == 8]
    assert len(eights) == 5
    for a, b in itertools.combinations(eights, 2):
        assert not _isomorphic(CATALOG[a], CATALOG[b]), (a, b)


def test_invariants_separate_the_catalog():
    keys = [groups.group_invariants(g) for g in CATALOG.values()]
    assert len(set(keys)) == len(keys)


def test_package_constructors_match_oracle_up_to_isomorphism():
    own = {
        "Z4": groups.cyclic(4),
        "Z2×Z2": groups.klein(),
        "S3": groups.symmetric(3),
        "D4": groups.dihedral_square(),
        "Q8": groups.quaternion(),
        "Z4×Z2": groups.direct_product(groups.cyclic(4), groups.cyclic(2)),
    }
    for name, g in own.items():
        assert _isomorphic(g, CATALOG[name]), name


@given(st.sampled_from(list(CATALOG)), st.randoms(use_true_random=False))
def test_identification_is_relabeling_invariant(name, rnd):
    g = CATALOG[name]
    fresh = list(range(100, 100 + g.order))
    rnd.shuffle(fresh)
    h = groups.relabel(g, dict(zip(g.elements, fresh)))
    assert groups.identify_group(h) == name


def test_spec_examples():
    v4 = groups.klein()
    assert sorted(v4.order_profile()) == [1, 2, 2, 2]
    assert groups.identify_group(v4) == "Z2×Z2"
    d4 = groups.dihedral_square()
    assert not d4.is_abelian() and d4.order_profile().count(2) == 5
    assert groups.identify_group(d4) == "D4"
    q8 = groups.quaternion()
    assert q8.order_profile().count(2) == 1
    assert groups.identify_group(q8) == "Q8"


def test_order_above_eight_degrades():
    g = groups.cyclic(9)
    with pytest.raises(OrderTooLarge) as info:
        groups.identify_group(g)
    assert groups.degraded_label(info.value) == "order9-abelian"
    assert groups.group_label(groups.symmetric(4)) == "order24-nonabelian"
    assert groups.label_order("order24-nonabelian") == 24
    assert groups.label_order("D4") == 8


def test_non_associative_magma_rejected():
    # x*y = x - y mod 3 has identity-free, non-associative structure
    with pytest.raises(NotAGroup) as info:
        groups.from_function(range(3), lambda a, b: (a - b) % 3)
    assert info.value.witness["law"] in {"associativity", "identity"}


def test_non_closed_table_rejected():
    with pytest.raises(NotAGroup):
        groups.GroupTable((0, 1), {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 2})


def test_square_symmetries_close_under_composition():
    mats = set(groups.SQUARE_SYMMETRIES.values())
    for a, b in itertools.product(mats, repeat=2):
        assert groups.matmul2(a, b) in mats


def test_cayley_rows_round_trip():
    g = groups.dihedral_square()
    h = groups.from_rows(groups.cayley_rows(g))
    assert groups.identify_group(h) == "D4"
