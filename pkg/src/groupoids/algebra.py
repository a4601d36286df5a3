"""Convolution algebra of a finite groupoid over exact rationals.

Elements are finitely supported functions on arrows. The product is

    (a * b)(g) = sum over k in the alpha-fibre of g of a(k) b(k^-1 g)

and, equivalently, the sum of a(k) b(l) over factorizations g = k l. Over the
pair groupoid of {1..n} this is n x n matrix multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .core import FiniteGroupoid
from .errors import GroupoidMismatch, NotAPairGroupoid


@dataclass(frozen=True)
class ComplexRational:
    """re + i*im with exact rational parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def _lift(x):
        return x if isinstance(x, ComplexRational) else ComplexRational(Fraction(x))

    def __add__(self, other):
        o = self._lift(other)
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return ComplexRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self):
        return ComplexRational(self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)


def _coerce(c):
    return c if isinstance(c, ComplexRational) else Fraction(c)


class AlgebraElement:
    """Sparse function on the arrows of a groupoid; zero coefficients are dropped."""

    __slots__ = ("groupoid", "_coeffs")

    def __init__(self, groupoid: FiniteGroupoid, coeffs: Mapping | Iterable = ()):
        self.groupoid = groupoid
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict = {}
        for g, c in items:
            if g not in groupoid.alpha:
                raise KeyError(f"{g!r} is not an element of the groupoid")
            acc[g] = acc.get(g, 0) + _coerce(c)
        self._coeffs = {
            g: acc[g] for g in sorted(acc, key=groupoid.element_index) if acc[g]
        }

    def __getitem__(self, g):
        if g not in self.groupoid.alpha:
            raise KeyError(g)
        return self._coeffs.get(g, Fraction(0))

    def items(self):
        """Nonzero coefficients in element order."""
        return self._coeffs.items()

    @property
    def support(self) -> frozenset:
        return frozenset(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __repr__(self) -> str:
        return f"AlgebraElement({dict(self._coeffs)!r})"

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if not (self.groupoid is other.groupoid or self.groupoid == other.groupoid):
            raise GroupoidMismatch("operands live over different groupoids")
        return other

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.groupoid == other.groupoid and self._coeffs == other._coeffs

    __hash__ = None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return AlgebraElement(self.groupoid, list(self._coeffs.items()) + list(other._coeffs.items()))

    def __neg__(self):
        return AlgebraElement(self.groupoid, {g: -c for g, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, AlgebraElement):
            return NotImplemented
        s = _coerce(scalar)
        return AlgebraElement(self.groupoid, {g: c * s for g, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __matmul__(self, other):
        return convolve(self.groupoid, self, other)


def delta(G: FiniteGroupoid, g, coefficient=1) -> AlgebraElement:
    return AlgebraElement(G, {g: coefficient})


def zero(G: FiniteGroupoid) -> AlgebraElement:
    return AlgebraElement(G)


def _operands(G, a, b):
    for x in (a, b):
        if not (x.groupoid is G or x.groupoid == G):
            raise GroupoidMismatch("operand is not over the given groupoid")


def convolve(G: FiniteGroupoid, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Fibre form: for each k in supp(a), run over the alpha-fibre of alpha(k)."""
    _operands(G, a, b)
    out: dict = {}
    for k, ak in a.items():
        kinv = G.inverse[k]
        for g in G.heads_at(G.alpha[k]):
            bl = b._coeffs.get(G.compose(kinv, g))
            if bl is not None:
                out[g] = out.get(g, 0) + ak * bl
    return AlgebraElement(G, out)


def convolve_symmetric(G: FiniteGroupoid, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Factorization form: sum a(k) b(l) over composable k in supp(a), l in supp(b)."""
    _operands(G, a, b)
    out: dict = {}
    by_head: dict = {}
    for l, bl in b.items():
        by_head.setdefault(G.alpha[l], []).append((l, bl))
    for k, ak in a.items():
        for l, bl in by_head.get(G.beta[k], ()):
            g = G.compose(k, l)
            out[g] = out.get(g, 0) + ak * bl
    return AlgebraElement(G, out)


def convolution_identity(G: FiniteGroupoid) -> AlgebraElement:
    return AlgebraElement(G, {e: 1 for e in G.identity_at.values()})


# -- matrices ------------------------------------------------------------------


class DenseMatrix:
    def __init__(self, rows: Sequence[Sequence]):
        self.rows = tuple(tuple(_coerce(q) for q in r) for r in rows)
        if any(len(r) != len(self.rows) for r in self.rows):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        n = self.n
        cols = list(zip(*other.rows))
        return DenseMatrix([[sum((r[k] * c[k] for k in range(n)), Fraction(0)) for c in cols] for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"DenseMatrix({[[str(q) for q in r] for r in self.rows]})"


def pair_coordinates(G: FiniteGroupoid, order: Sequence | None = None) -> dict:
    """Element at (i, j) for a groupoid with exactly one arrow between any two objects."""
    objects = list(G.objects if order is None else order)
    if set(objects) != set(G.objects) or len(objects) != len(G.objects):
        raise NotAPairGroupoid("order is not a permutation of the objects")
    coords = {}
    for i, x in enumerate(objects):
        for j, y in enumerate(objects):
            arrows = G.hom(x, y)
            if len(arrows) != 1:
                raise NotAPairGroupoid(f"{len(arrows)} arrows between two objects", head=x, tail=y)
            coords[(i, j)] = arrows[0]
    return coords


def to_matrix(a: AlgebraElement, order: Sequence | None = None) -> DenseMatrix:
    coords = pair_coordinates(a.groupoid, order)
    n = len(a.groupoid.objects)
    return DenseMatrix([[a[coords[(i, j)]] for j in range(n)] for i in range(n)])


def from_matrix(G: FiniteGroupoid, M: DenseMatrix, order: Sequence | None = None) -> AlgebraElement:
    coords = pair_coordinates(G, order)
    if M.n != len(G.objects):
        raise NotAPairGroupoid(f"matrix of size {M.n} for {len(G.objects)} objects")
    return AlgebraElement(G, {coords[(i, j)]: M.rows[i][j] for i in range(M.n) for j in range(M.n)})
