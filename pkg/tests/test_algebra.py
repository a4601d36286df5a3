"""Convolution algebra: fibre and factorization routes, the matrix bridge."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import rationals, sparse_coefficients
from groupoids import groups
from groupoids.algebra import (
    AlgebraElement,
    ComplexRational,
    DenseMatrix,
    convolution_identity,
    convolve,
    convolve_symmetric,
    delta,
    from_matrix,
    to_matrix,
    zero,
)
from groupoids.core import equivalence_relation_groupoid, group_as_groupoid, pair_groupoid
from groupoids.corpus import load
from groupoids.errors import GroupoidMismatch, NotAPairGroupoid

P2 = pair_groupoid([1, 2])
P5 = pair_groupoid(range(1, 6))
Z2 = group_as_groupoid(groups.cyclic(2))
CORNERS = load("tiling-corners-2x2")


def definition_convolution(G, a, b):
    """(a*b)(g) = sum over every k with alpha(k) = alpha(g) of a(k) b(k^-1 g), dense."""
    out = {}
    for g in G.elements:
        total = Fraction(0)
        for k in G.elements:
            if G.alpha[k] == G.alpha[g]:
                total += a[k] * b[G.compose(G.inverse[k], g)]
        out[g] = total
    return AlgebraElement(G, out)


def sympy_matrix(M):
    return sympy.Matrix([[sympy.Rational(q.numerator, q.denominator) for q in r] for r in M.rows])


def element(G, coeffs):
    return AlgebraElement(G, coeffs)


def test_two_by_two_matrix_example():
    a = from_matrix(P2, DenseMatrix([[1, 2], [3, 4]]))
    b = from_matrix(P2, DenseMatrix([[5, 6], [7, 8]]))
    assert a[(1, 2)] == 2 and a[(2, 1)] == 3
    prod = convolve(P2, a, b)
    assert to_matrix(prod) == DenseMatrix([[19, 22], [43, 50]])
    assert prod == from_matrix(P2, DenseMatrix([[19, 22], [43, 50]]))
    assert sympy_matrix(to_matrix(a)) * sympy_matrix(to_matrix(b)) == sympy.Matrix([[19, 22], [43, 50]])


def test_group_algebra_of_z2():
    assert convolve(Z2, delta(Z2, 1), delta(Z2, 1)) == delta(Z2, 0)


@given(rationals, rationals, rationals, rationals)
def test_z2_closed_form(a0, a1, b0, b1):
    a, b = element(Z2, {0: a0, 1: a1}), element(Z2, {0: b0, 1: b1})
    expected = element(Z2, {0: a0 * b0 + a1 * b1, 1: a0 * b1 + a1 * b0})
    assert convolve(Z2, a, b) == expected
    assert convolve_symmetric(Z2, a, b) == expected


def test_complex_coefficients():
    i = ComplexRational(0, 1)
    a = element(Z2, {0: i, 1: 1})
    b = element(Z2, {0: i})
    prod = convolve(Z2, a, b)
    assert prod[0] == -1 and prod[1] == i
    assert convolve_symmetric(Z2, a, b) == prod


def test_zero_and_identity():
    a = element(P5, {(1, 2): 3, (4, 4): Fraction(-1, 2)})
    assert convolve(P5, zero(P5), a) == zero(P5)
    assert convolve_symmetric(P5, a, zero(P5)) == zero(P5)
    e = convolution_identity(P5)
    assert to_matrix(e) == DenseMatrix.identity(5)
    assert convolution_identity(Z2) == delta(Z2, 0)


def test_mismatched_groupoids():
    with pytest.raises(GroupoidMismatch):
        convolve(P2, delta(P2, (1, 1)), delta(Z2, 0))
    with pytest.raises(GroupoidMismatch):
        delta(P2, (1, 1)) + delta(Z2, 0)


def test_zero_coefficients_not_stored():
    a = element(P2, {(1, 1): 0, (1, 2): 1})
    assert a.support == {(1, 2)}
    assert len(a - a) == 0


def test_matrix_bridge_rejects_non_pair_groupoids():
    with pytest.raises(NotAPairGroupoid):
        to_matrix(delta(Z2, 1))
    with pytest.raises(NotAPairGroupoid):
        to_matrix(convolution_identity(load("partition-12-3")))


@pytest.mark.parametrize("seed", range(5))
def test_three_routes_agree_on_random_pairs_over_pair5(seed):
    rnd = random.Random(seed)
    for _ in range(20):
        a = _random_element(P5, rnd)
        b = _random_element(P5, rnd)
        fibre = convolve(P5, a, b)
        assert fibre == convolve_symmetric(P5, a, b)
        assert fibre == definition_convolution(P5, a, b)


def _random_element(G, rnd, density=0.3):
    return AlgebraElement(
        G,
        {
            g: Fraction(rnd.randint(-9, 9), rnd.randint(1, 6))
            for g in G.elements
            if rnd.random() < density
        },
    )


@pytest.mark.parametrize("n", range(2, 9))
def test_matrix_bridge_against_sympy(n):
    G = pair_groupoid(range(n))
    rnd = random.Random(n)
    for _ in range(10):
        a, b = _random_element(G, rnd), _random_element(G, rnd)
        expected = sympy_matrix(to_matrix(a)) * sympy_matrix(to_matrix(b))
        assert sympy_matrix(to_matrix(convolve(G, a, b))) == expected
        assert from_matrix(G, to_matrix(a)) == a


def test_matrix_bridge_respects_object_order():
    G = pair_groupoid([1, 2, 3])
    a = element(G, {(1, 3): 1})
    assert to_matrix(a).rows[0][2] == 1
    assert to_matrix(a, order=[3, 2, 1]).rows[2][0] == 1


def test_noncommutativity_witness_over_pair2():
    a, b = delta(P2, (1, 2)), delta(P2, (2, 2))
    assert convolve(P2, a, b) != convolve(P2, b, a)


@given(st.data())
def test_commutative_over_discrete_relations(data):
    G = equivalence_relation_groupoid([[1], [2], [3]])
    a = element(G, data.draw(sparse_coefficients(G.elements)))
    b = element(G, data.draw(sparse_coefficients(G.elements)))
    assert convolve(G, a, b) == convolve(G, b, a)


GROUPOIDS = {
    "pair3": pair_groupoid([1, 2, 3]),
    "S3": group_as_groupoid(groups.symmetric(3)),
    "Q8": group_as_groupoid(groups.quaternion()),
    "swap-fix3": load("swap-fix3-action"),
    "corners": CORNERS,
}


@given(st.sampled_from(sorted(GROUPOIDS)), st.data())
def test_associativity_and_bilinearity(name, data):
    G = GROUPOIDS[name]
    a, b, c = (element(G, data.draw(sparse_coefficients(G.elements))) for _ in range(3))
    s = data.draw(rationals)
    assert convolve(G, convolve(G, a, b), c) == convolve(G, a, convolve(G, b, c))
    assert convolve(G, a, b + c) == convolve(G, a, b) + convolve(G, a, c)
    assert convolve(G, a + b, c) == convolve(G, a, c) + convolve(G, b, c)
    assert convolve(G, a * s, b) == convolve(G, a, b) * s == convolve(G, a, b * s)


@given(st.sampled_from(sorted(GROUPOIDS)), st.data())
def test_support_bound_and_route_agreement(name, data):
    G = GROUPOIDS[name]
    a = element(G, data.draw(sparse_coefficients(G.elements)))
    b = element(G, data.draw(sparse_coefficients(G.elements)))
    prod = convolve(G, a, b)
    assert prod == convolve_symmetric(G, a, b)
    reachable = {G.compose(k, l) for k in a.support for l in b.support if G.composable(k, l)}
    assert prod.support <= reachable


@given(st.data())
def test_unit_law_on_corner_groupoid(data):
    a = element(CORNERS, data.draw(sparse_coefficients(CORNERS.elements)))
    e = convolution_identity(CORNERS)
    assert convolve(CORNERS, e, a) == a == convolve(CORNERS, a, e)
