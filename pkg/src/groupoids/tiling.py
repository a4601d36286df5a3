"""The tiled floor: 2x1 tiles with grout X = (R x Z) u (2Z x R), cut to a rectangle.

Two groupoids are built here over finite point sets:

* the transformation groupoid of the tiling group restricted to sample points,
  where the group is every map (x, y) -> (ex + a, dy + b) with e, d = +-1,
  a in 2Z and b in Z (exactly the axis-preserving isometries carrying the
  vertical lines 2Z x R and the horizontal lines R x Z to themselves);
* the local symmetry groupoid on tile corners, where an arrow y -> x is a
  symmetry of the square carrying the local pattern at y onto the one at x.

All coordinates are Fractions, so lattice membership tests are exact.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import FiniteGroupoid, build
from .errors import NotALatticePoint, PointOutsideB
from .groups import SQUARE_SYMMETRIES, GroupTable, apply2, dihedral_square, identify_group
from .textio import sort_key, token


class Point(tuple):
    """Exact (x, y) pair; equal to the plain tuple, with its hash computed once."""

    def __new__(cls, x, y):
        self = super().__new__(cls, (Fraction(x), Fraction(y)))
        self._hash = tuple.__hash__(self)
        return self

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (Point, tuple(self))


PROBE_RADIUS = Fraction(1, 4)

RAYS = {"N": (0, 1), "E": (1, 0), "S": (0, -1), "W": (-1, 0)}
QUADRANTS = {"NE": (1, 1), "NW": (-1, 1), "SE": (1, -1), "SW": (-1, -1)}

D4 = dihedral_square()


def point(x, y) -> Point:
    return Point(x, y)


def _is_int(q: Fraction) -> bool:
    return q.denominator == 1


def _is_even(q: Fraction) -> bool:
    return q.denominator == 1 and q.numerator % 2 == 0


@dataclass(frozen=True, order=True)
class PlaneIsometry:
    """(x, y) -> (eps*x + a, delta*y + b)."""

    eps: int
    delta: int
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.eps not in (1, -1) or self.delta not in (1, -1):
            raise ValueError("eps and delta must be +1 or -1")
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "_hash", hash((self.eps, self.delta, self.a, self.b)))

    def __hash__(self):
        return self._hash

    def __call__(self, p) -> Point:
        return Point(self.eps * p[0] + self.a, self.delta * p[1] + self.b)

    def __mul__(self, other: "PlaneIsometry") -> "PlaneIsometry":
        # self after other
        return PlaneIsometry(
            self.eps * other.eps,
            self.delta * other.delta,
            self.eps * other.a + self.a,
            self.delta * other.b + self.b,
        )

    def inverse(self) -> "PlaneIsometry":
        return PlaneIsometry(self.eps, self.delta, -self.eps * self.a, -self.delta * self.b)

    @property
    def linear_part(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.eps, 0), (0, self.delta))

    @classmethod
    def identity(cls) -> "PlaneIsometry":
        return cls(1, 1, 0, 0)

    @classmethod
    def translation(cls, a, b) -> "PlaneIsometry":
        return cls(1, 1, a, b)

    def sort_key(self):
        return (self.eps, self.delta, self.a, self.b)

    def token(self) -> str:
        return f"<{self.eps},{self.delta},{token(self.a)},{token(self.b)}>"


def gamma_contains(iso: PlaneIsometry) -> bool:
    """Membership in the symmetry group of the infinite tiling."""
    return _is_even(iso.a) and _is_int(iso.b)


class Region(str, enum.Enum):
    GROUT = "P1"
    TILE = "P2"
    EXTERIOR = "P3"


@dataclass(frozen=True)
class TiledRectangle:
    """B = [0, 2m] x [0, n], tiled by m x n tiles."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")

    def contains(self, p) -> bool:
        return 0 <= p[0] <= 2 * self.m and 0 <= p[1] <= self.n

    def lattice_points(self) -> list[Point]:
        """Tile corners: the lattice 2Z x Z inside B, sorted."""
        return [point(2 * i, j) for i in range(self.m + 1) for j in range(self.n + 1)]

    def symmetries(self) -> list[PlaneIsometry]:
        """Elements of the tiling group mapping B onto itself."""
        out = []
        for eps in (1, -1):
            for delta in (1, -1):
                a = 0 if eps == 1 else 2 * self.m
                b = 0 if delta == 1 else self.n
                out.append(PlaneIsometry(eps, delta, a, b))
        return out


def classify_point(rect: TiledRectangle, p) -> Region:
    p = point(*p)
    if not rect.contains(p):
        return Region.EXTERIOR
    if _is_int(p[1]) or _is_even(p[0]):
        return Region.GROUT
    return Region.TILE


def _require_inside(rect, points) -> list[Point]:
    out = []
    for p in points:
        p = point(*p)
        if not rect.contains(p):
            raise PointOutsideB(point=p)
        out.append(p)
    return out


# -- the restricted transformation groupoid -------------------------------------


def gamma_arrows(x: Point, y: Point) -> list[PlaneIsometry]:
    """All elements of the tiling group sending y to x."""
    out = []
    for eps in (1, -1):
        for delta in (1, -1):
            iso = PlaneIsometry(eps, delta, x[0] - eps * y[0], x[1] - delta * y[1])
            if gamma_contains(iso):
                out.append(iso)
    return out


def restricted_action_groupoid(rect: TiledRectangle, sample: Iterable) -> FiniteGroupoid:
    """Triples (x, gamma, y) with x = gamma(y), x and y in the sample."""
    points = sorted(dict.fromkeys(_require_inside(rect, sample)), key=sort_key)
    elements = [(x, iso, y) for x in points for y in points for iso in gamma_arrows(x, y)]
    elements.sort(key=sort_key)
    return build(
        points,
        elements,
        alpha={t: t[0] for t in elements},
        beta={t: t[2] for t in elements},
        compose=lambda s, t: (s[0], s[1] * t[1], t[2]),
        inverse={t: (t[2], t[1].inverse(), t[0]) for t in elements},
        identity_at={x: (x, PlaneIsometry.identity(), x) for x in points},
    )


def in_half_lattice(p) -> bool:
    """p in Z x (1/2)Z, the centres of the point reflections."""
    return _is_int(Fraction(p[0])) and _is_int(2 * Fraction(p[1]))


def on_mirror_axis(p) -> bool:
    """p lies on at least one reflection line of the tiling group."""
    return _is_int(Fraction(p[0])) or _is_int(2 * Fraction(p[1]))


# -- stencils and the local groupoid ---------------------------------------------


@dataclass(frozen=True)
class Stencil:
    """Local pattern at a point: grout rays and tile quadrants (others are exterior)."""

    rays: frozenset
    tiles: frozenset

    def transform(self, name: str) -> "Stencil":
        m = SQUARE_SYMMETRIES[name]
        return Stencil(
            frozenset(apply2(m, v) for v in self.rays),
            frozenset(apply2(m, q) for q in self.tiles),
        )

    def key(self) -> tuple:
        return (tuple(sorted(self.rays)), tuple(sorted(self.tiles)))

    def ray_names(self) -> list[str]:
        return [k for k, v in RAYS.items() if v in self.rays]

    def tile_names(self) -> list[str]:
        return [k for k, v in QUADRANTS.items() if v in self.tiles]

    def exterior_names(self) -> list[str]:
        return [k for k, v in QUADRANTS.items() if v not in self.tiles]

    def symmetries(self) -> tuple[str, ...]:
        return tuple(d for d in D4.elements if self.transform(d) == self)

    def canonical(self) -> tuple:
        return min(self.transform(d).key() for d in D4.elements)

    def describe(self) -> str:
        return f"rays={''.join(self.ray_names()) or '-'} tiles={','.join(self.tile_names()) or '-'}"


def _gap_to_next(t: Fraction, step: int) -> Fraction:
    """Distance from t to the nearest multiple of step other than t itself."""
    below = math.floor(t / step) * step
    if below == t:
        return Fraction(step)
    return min(t - below, below + step - t)


def germ_radius(p) -> Fraction:
    """Probe radius below half the distance to every grout line missing p."""
    p = point(*p)
    return min(PROBE_RADIUS, _gap_to_next(p[0], 2) / 2, _gap_to_next(p[1], 1) / 2)


def germ(rect: TiledRectangle, p) -> Stencil:
    """Stencil at any point of B, probing at the adaptive radius."""
    p = _require_inside(rect, [p])[0]
    r = germ_radius(p)
    rays, tiles = set(), set()
    for v in RAYS.values():
        if classify_point(rect, (p[0] + r * v[0], p[1] + r * v[1])) is Region.GROUT:
            rays.add(v)
    for q in QUADRANTS.values():
        region = classify_point(rect, (p[0] + r * q[0], p[1] + r * q[1]))
        assert region is not Region.GROUT
        if region is Region.TILE:
            tiles.add(q)
    return Stencil(frozenset(rays), frozenset(tiles))


def is_lattice_point(rect: TiledRectangle, p) -> bool:
    p = point(*p)
    return _is_even(p[0]) and _is_int(p[1]) and rect.contains(p)


def stencil(rect: TiledRectangle, p) -> Stencil:
    """Stencil at a tile corner, probing at distance 1/4."""
    if not is_lattice_point(rect, p):
        raise NotALatticePoint(point=point(*p))
    assert germ_radius(p) == PROBE_RADIUS
    return germ(rect, p)


def local_groupoid_on_corners(rect: TiledRectangle) -> FiniteGroupoid:
    """Arrows (x, d, y) with d in D4 and d.stencil(y) == stencil(x)."""
    # integer pairs equal and hash like the Fraction points, but hash in C
    corners = [(int(p[0]), int(p[1])) for p in rect.lattice_points()]
    stencils = {p: stencil(rect, p) for p in corners}
    by_stencil: dict = {}
    for x in corners:
        by_stencil.setdefault(stencils[x], []).append(x)
    rank = {p: i for i, p in enumerate(corners)}
    d_rank = {d: i for i, d in enumerate(D4.elements)}
    elements = [
        (x, d, y)
        for y in corners
        for d in D4.elements
        for x in by_stencil.get(stencils[y].transform(d), ())
    ]
    elements.sort(key=lambda t: (rank[t[0]], d_rank[t[1]], rank[t[2]]))
    e, mul = D4.identity, D4.product
    return build(
        corners,
        elements,
        alpha={t: t[0] for t in elements},
        beta={t: t[2] for t in elements},
        compose=lambda s, t: (s[0], mul[(s[1], t[1])], t[2]),
        inverse={t: (t[2], D4.inverse(t[1]), t[0]) for t in elements},
        identity_at={x: (x, e, x) for x in corners},
    )


# -- orbit census over arbitrary points --------------------------------------------

ORBIT_DESCRIPTIONS = {
    "O1": "interior points of tiles",
    "O2": "interior edge points",
    "O3": "interior crossing points",
    "O4": "boundary edge points",
    "O5": "boundary T points",
    "O6": "boundary corner points",
}

CONTINUOUS_ISOTROPY = "O(2)"


def orbit_label(s: Stencil) -> str | None:
    rays = s.rays
    opposite = len(rays) == 2 and all((-v[0], -v[1]) in rays for v in rays)
    shape = (len(rays), len(s.tiles))
    if shape == (0, 4):
        return "O1"
    if shape == (2, 4) and opposite:
        return "O2"
    if shape == (4, 4):
        return "O3"
    if shape == (2, 2) and opposite:
        return "O4"
    if shape == (3, 2):
        return "O5"
    if shape == (2, 1) and not opposite:
        return "O6"
    return None


def stabilizer_table(s: Stencil) -> GroupTable:
    syms = s.symmetries()
    return GroupTable(syms, {(a, b): D4.mul(a, b) for a in syms for b in syms})


@dataclass(frozen=True)
class CensusClass:
    label: str | None
    stencil: Stencil
    points: tuple
    isotropy: str  # D4 stabilizer class, or the continuous tag for tile interiors
    d4_isotropy: str

    def line(self) -> str:
        label = self.label or "unclassified"
        pts = ",".join(token(p) for p in self.points)
        extra = f" d4={self.d4_isotropy}" if self.isotropy != self.d4_isotropy else ""
        return f"class {label} size={len(self.points)} isotropy={self.isotropy}{extra} points={pts}"


def local_orbit_census(rect: TiledRectangle, sample: Iterable) -> list[CensusClass]:
    """Group sample points of B by their local pattern up to D4."""
    points = sorted(dict.fromkeys(_require_inside(rect, sample)), key=sort_key)
    groups: dict = {}
    for p in points:
        s = germ(rect, p)
        groups.setdefault(s.canonical(), []).append((p, s))
    classes = []
    for members in groups.values():
        s = members[0][1]
        label = orbit_label(s)
        d4_name = identify_group(stabilizer_table(s))
        iso = CONTINUOUS_ISOTROPY if label == "O1" else d4_name
        classes.append(CensusClass(label, s, tuple(p for p, _ in members), iso, d4_name))
    classes.sort(key=lambda c: (c.label is None, c.label or "", sort_key(c.points[0])))
    return classes


# Two representatives per type where B has two; the single interior crossing
# of the 2 x 2 room is balanced by a third interior edge point.
STANDARD_CENSUS_SAMPLE: tuple[Point, ...] = tuple(
    point(x, y)
    for x, y in [
        (Fraction(1, 2), Fraction(1, 2)),
        (3, Fraction(3, 2)),
        (Fraction(1, 2), 1),
        (2, Fraction(1, 2)),
        (3, 1),
        (2, 1),
        (Fraction(1, 2), 0),
        (4, Fraction(3, 2)),
        (2, 0),
        (0, 1),
        (0, 0),
        (4, 2),
    ]
)

STANDARD_RESTRICTED_SAMPLE: tuple[Point, ...] = tuple(
    point(x, y)
    for x, y in [
        (1, Fraction(1, 2)),
        (0, 0),
        (2, 1),
        (3, Fraction(3, 2)),
        (Fraction(1, 2), Fraction(1, 4)),
        (Fraction(3, 2), Fraction(1, 4)),
        (Fraction(5, 2), Fraction(3, 4)),
        (1, Fraction(1, 4)),
        (Fraction(1, 2), Fraction(1, 2)),
    ]
)


def render_points(points: Sequence) -> str:
    return ",".join(token(p) for p in points)
