"""Finite groupoids: representation, axiom validation, standard constructors.

Convention: an element ``g`` is an arrow from ``beta(g)`` (tail) to ``alpha(g)``
(head), and ``gh`` is defined exactly when ``beta(g) == alpha(h)``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence, Union

import numpy as np

from .errors import (
    AssociativityError,
    DomainError,
    EmptyBase,
    IdentifierError,
    IdentityError,
    InverseError,
    NotAnAction,
    NotAPartition,
    ObjectNotFound,
)
from .groups import GroupTable, from_rows
from .textio import sort_key

Composition = Union[Mapping[tuple, Hashable], Callable[[Hashable, Hashable], Hashable]]

POINT = "•"


class FiniteGroupoid:
    """An immutable, validated finite groupoid. Construct with :func:`build`.

    Composition is stored per object y as an integer array whose rows are the
    arrows ending at y (beta == y) and whose columns are the arrows starting
    there (alpha == y); entry [r, c] is the index of row * column.
    """

    def __init__(self, objects, elements, alpha, beta, inverse, identity_at, index):
        self.objects: tuple = objects
        self.elements: tuple = elements
        self.alpha: dict = alpha
        self.beta: dict = beta
        self.inverse: dict = inverse
        self.identity_at: dict = identity_at
        self._index = index
        self._eidx = index.eidx
        self._hom: dict[tuple, list] = {}
        for g in elements:
            self._hom.setdefault((alpha[g], beta[g]), []).append(g)
        self._identities = frozenset(identity_at.values())

    # -- structure ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"<FiniteGroupoid objects={len(self.objects)} elements={len(self.elements)}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroupoid):
            return NotImplemented
        return (
            set(self.objects) == set(other.objects)
            and set(self.elements) == set(other.elements)
            and self.alpha == other.alpha
            and self.beta == other.beta
            and self.inverse == other.inverse
            and self.identity_at == other.identity_at
            and dict(self.composition_pairs()) == dict(other.composition_pairs())
        )

    def __hash__(self) -> int:
        return hash((frozenset(self.objects), frozenset(self.elements)))

    def composable(self, g, h) -> bool:
        return self.beta[g] == self.alpha[h]

    def compose(self, g, h):
        ix = self._index
        i, j = self._eidx[g], self._eidx[h]
        y = ix.beta_i[i]
        if y != ix.alpha_i[j]:
            raise DomainError("composite undefined", g=g, h=h)
        return self.elements[ix.tables[y][ix.tail_pos[i], ix.head_pos[j]]]

    def composition_pairs(self) -> Iterator[tuple[tuple, Hashable]]:
        """All defined composites ((g, h), gh) in deterministic order."""
        ix, els = self._index, self.elements
        for i, g in enumerate(els):
            y = ix.beta_i[i]
            row = ix.tables[y][ix.tail_pos[i]]
            for j, k in zip(ix.heads[y], row.tolist()):
                yield (g, els[j]), els[k]

    def heads_at(self, x) -> tuple:
        """Elements g with alpha(g) == x (the alpha-fibre over x)."""
        ix = self._index
        return tuple(self.elements[j] for j in ix.heads[ix.oidx[x]])

    def tails_at(self, x) -> tuple:
        ix = self._index
        return tuple(self.elements[j] for j in ix.tails[ix.oidx[x]])

    def hom(self, x, y) -> tuple:
        """Arrows from y to x, i.e. alpha(g) == x and beta(g) == y."""
        return tuple(self._hom.get((x, y), ()))

    def is_identity(self, g) -> bool:
        return g in self._identities

    def object_index(self, x) -> int:
        return self._index.oidx[x]

    def element_index(self, g) -> int:
        return self._eidx[g]

    def relabel(self, on_elements: Callable | Mapping, on_objects: Callable | Mapping):
        """Rebuild under bijective relabelings of elements and objects."""
        fe = on_elements.__getitem__ if isinstance(on_elements, Mapping) else on_elements
        fo = on_objects.__getitem__ if isinstance(on_objects, Mapping) else on_objects
        return build(
            objects=[fo(x) for x in self.objects],
            elements=[fe(g) for g in self.elements],
            alpha={fe(g): fo(x) for g, x in self.alpha.items()},
            beta={fe(g): fo(x) for g, x in self.beta.items()},
            compose={(fe(g), fe(h)): fe(gh) for (g, h), gh in self.composition_pairs()},
            inverse={fe(g): fe(i) for g, i in self.inverse.items()},
            identity_at={fo(x): fe(e) for x, e in self.identity_at.items()},
        )

    def tables(self) -> dict:
        """Raw tables suitable for passing back to :func:`build`."""
        return dict(
            objects=list(self.objects),
            elements=list(self.elements),
            alpha=dict(self.alpha),
            beta=dict(self.beta),
            compose=dict(self.composition_pairs()),
            inverse=dict(self.inverse),
            identity_at=dict(self.identity_at),
        )


class _Index:
    """Integer form of the tables, shared by validation and lookups."""

    def __init__(self, objects, elements, alpha, beta):
        self.oidx = {x: i for i, x in enumerate(objects)}
        self.eidx = {g: i for i, g in enumerate(elements)}
        n = len(elements)
        self.alpha_i = np.fromiter((self.oidx[alpha[g]] for g in elements), np.int64, n)
        self.beta_i = np.fromiter((self.oidx[beta[g]] for g in elements), np.int64, n)
        self.heads: list[list[int]] = [[] for _ in objects]
        self.tails: list[list[int]] = [[] for _ in objects]
        for i in range(n):
            self.heads[self.alpha_i[i]].append(i)
            self.tails[self.beta_i[i]].append(i)
        self.head_pos = np.zeros(n, dtype=np.int64)
        self.tail_pos = np.zeros(n, dtype=np.int64)
        for hs in self.heads:
            self.head_pos[hs] = np.arange(len(hs))
        for ts in self.tails:
            self.tail_pos[ts] = np.arange(len(ts))
        self.tables = [np.full((len(t), len(h)), -1, dtype=np.int64) for t, h in zip(self.tails, self.heads)]
        self.alpha_i = self.alpha_i.tolist()
        self.beta_i = self.beta_i.tolist()


# -- validation --------------------------------------------------------------


def build(
    objects: Iterable,
    elements: Iterable,
    alpha: Mapping,
    beta: Mapping,
    compose: Composition,
    inverse: Mapping,
    identity_at: Mapping,
) -> FiniteGroupoid:
    """Validate raw tables against the groupoid axioms and freeze them.

    ``compose`` is either a mapping ``(g, h) -> gh`` listing exactly the
    composable pairs, or a callable rule; a rule is materialized over every
    composable pair before checking. The first violation, in element order,
    is raised.
    """
    objects = tuple(objects)
    elements = tuple(elements)
    _check_identifiers(objects, elements, alpha, beta)
    ix = _Index(objects, elements, alpha, beta)
    _materialize(elements, ix, compose)
    ident = _check_identities(objects, elements, ix, identity_at)
    inv = _check_inverses(elements, ix, inverse, ident)
    _check_associativity(elements, ix)
    return FiniteGroupoid(
        objects,
        elements,
        {g: alpha[g] for g in elements},
        {g: beta[g] for g in elements},
        {g: elements[inv[i]] for i, g in enumerate(elements)},
        {x: elements[ident[k]] for k, x in enumerate(objects)},
        ix,
    )


def _check_identifiers(objects, elements, alpha, beta):
    if len(set(objects)) != len(objects):
        dup = next(x for i, x in enumerate(objects) if x in objects[:i])
        raise IdentifierError("duplicate object", object=dup)
    if len(set(elements)) != len(elements):
        dup = next(g for i, g in enumerate(elements) if g in elements[:i])
        raise IdentifierError("duplicate element", element=dup)
    known = set(objects)
    for g in elements:
        for name, m in (("alpha", alpha), ("beta", beta)):
            if g not in m:
                raise IdentifierError(f"{name} undefined", element=g)
            if m[g] not in known:
                raise IdentifierError(f"{name} is not an object", element=g, value=m[g])
    extra = (set(alpha) | set(beta)) - set(elements)
    if extra:
        raise IdentifierError("map defined on an undeclared element", element=min(extra, key=sort_key))


def _materialize(elements, ix: _Index, compose) -> None:
    eidx, tables = ix.eidx, ix.tables
    if callable(compose):
        heads = [[elements[j] for j in hs] for hs in ix.heads]
        for i, g in enumerate(elements):
            y = ix.beta_i[i]
            row = [eidx.get(compose(g, h), -1) for h in heads[y]]
            if -1 in row:
                h = heads[y][row.index(-1)]
                gh = compose(g, h)
                if gh is None:
                    raise DomainError("composite undefined on beta(g)=alpha(h)", g=g, h=h)
                raise IdentifierError("composite is not an element", g=g, h=h, gh=gh)
            tables[y][ix.tail_pos[i]] = row
    else:
        for (g, h), gh in compose.items():
            i, j, k = eidx.get(g), eidx.get(h), eidx.get(gh)
            if i is None or j is None:
                raise IdentifierError("composite of undeclared elements", g=g, h=h)
            y = ix.beta_i[i]
            if y != ix.alpha_i[j]:
                raise DomainError("composite declared off beta(g)=alpha(h)", g=g, h=h)
            if k is None:
                raise IdentifierError("composite is not an element", g=g, h=h, gh=gh)
            tables[y][ix.tail_pos[i], ix.head_pos[j]] = k
    alpha_a, beta_a = np.asarray(ix.alpha_i), np.asarray(ix.beta_i)
    bad = []
    for y, M in enumerate(tables):
        if M.size == 0:
            continue
        rows, cols = np.asarray(ix.tails[y]), np.asarray(ix.heads[y])
        missing = np.argwhere(M < 0)
        if missing.size:
            r, c = missing[0]
            bad.append((rows[r], cols[c], "missing"))
            continue
        wrong = (alpha_a[M] != alpha_a[rows][:, None]) | (beta_a[M] != beta_a[cols][None, :])
        hits = np.argwhere(wrong)
        if hits.size:
            r, c = hits[0]
            bad.append((rows[r], cols[c], "ends"))
    if bad:
        i, j, kind = min(bad)
        g, h = elements[i], elements[j]
        if kind == "missing":
            raise DomainError("composite undefined on beta(g)=alpha(h)", g=g, h=h)
        raise DomainError("composite has wrong ends", g=g, h=h, gh=elements[_lookup(ix, i, j)])


def _lookup(ix: _Index, i: int, j: int) -> int:
    return int(ix.tables[ix.beta_i[i]][ix.tail_pos[i], ix.head_pos[j]])


def _check_identities(objects, elements, ix: _Index, identity_at) -> list[int]:
    ident = []
    seen: dict = {}
    for k, x in enumerate(objects):
        if x not in identity_at:
            raise IdentityError("no identity", object=x)
        e = ix.eidx.get(identity_at[x])
        if e is None:
            raise IdentityError("identity is not an element", object=x, element=identity_at[x])
        if ix.alpha_i[e] != k or ix.beta_i[e] != k:
            raise IdentityError("identity is not a loop at its object", object=x, element=elements[e])
        if e in seen:
            raise IdentityError("identity shared by two objects", object=x, element=elements[e])
        seen[e] = x
        ident.append(e)
    for i, g in enumerate(elements):
        if _lookup(ix, ident[ix.alpha_i[i]], i) != i:
            raise IdentityError("left identity fails", element=g)
        if _lookup(ix, i, ident[ix.beta_i[i]]) != i:
            raise IdentityError("right identity fails", element=g)
    return ident


def _check_inverses(elements, ix: _Index, inverse, ident) -> list[int]:
    inv = []
    for i, g in enumerate(elements):
        if g not in inverse:
            raise InverseError("missing", element=g)
        j = ix.eidx.get(inverse[g])
        if j is None:
            raise InverseError("inverse is not an element", element=g)
        if ix.alpha_i[j] != ix.beta_i[i] or ix.beta_i[j] != ix.alpha_i[i]:
            raise InverseError("inverse has wrong ends", element=g)
        if _lookup(ix, i, j) != ident[ix.alpha_i[i]] or _lookup(ix, j, i) != ident[ix.beta_i[i]]:
            raise InverseError("product with inverse is not an identity", element=g)
        inv.append(j)
    return inv


def _check_associativity(elements, ix: _Index) -> None:
    # For all middle factors h with alpha(h) = y and beta(h) = z at once,
    # compare (g h) k with g (h k) over every g ending at y and k starting at
    # z, using fancy-index gathers on the per-object tables.
    by_ends: dict = {}
    for hi in range(len(elements)):
        by_ends.setdefault((ix.alpha_i[hi], ix.beta_i[hi]), []).append(hi)
    tables, tail_pos, head_pos = ix.tables, ix.tail_pos, ix.head_pos
    failures = []
    for (y, z), hs in by_ends.items():
        My, Mz = tables[y], tables[z]
        hs = np.asarray(hs)
        gh = My[:, head_pos[hs]]  # g, h
        left = Mz[tail_pos[gh], :]  # g, h, k
        hk = Mz[tail_pos[hs], :]  # h, k
        right = My[:, head_pos[hk]]  # g, h, k
        bad = left != right
        if bad.any():
            r, c, k = np.argwhere(bad)[0]
            failures.append((ix.tails[y][r], int(hs[c]), ix.heads[z][k]))
    if failures:
        gi, hi, ki = min(failures)
        raise AssociativityError(g=elements[gi], h=elements[hi], k=elements[ki])


# -- constructors ------------------------------------------------------------


def _sorted(items) -> list:
    return sorted(items, key=sort_key)


def empty_groupoid() -> FiniteGroupoid:
    return build([], [], {}, {}, {}, {}, {})


def pair_groupoid(objects: Iterable) -> FiniteGroupoid:
    """B x B with (x, y)(y, z) = (x, z)."""
    objects = list(dict.fromkeys(objects))
    if not objects:
        raise EmptyBase("pair groupoid needs at least one object")
    elements = [(x, y) for x in objects for y in objects]
    return build(
        objects,
        elements,
        alpha={g: g[0] for g in elements},
        beta={g: g[1] for g in elements},
        compose=lambda g, h: (g[0], h[1]),
        inverse={g: (g[1], g[0]) for g in elements},
        identity_at={x: (x, x) for x in objects},
    )


def identity_groupoid(objects: Iterable) -> FiniteGroupoid:
    """Only identity arrows."""
    return equivalence_relation_groupoid([[x] for x in dict.fromkeys(objects)])


def group_as_groupoid(group: GroupTable | Sequence[Sequence[int]], point=POINT) -> FiniteGroupoid:
    """A group as a groupoid over a single object.

    Accepts a :class:`GroupTable` or an index-form Cayley table (list of rows);
    either way the group laws are checked and ``NotAGroup`` raised on failure.
    """
    if not isinstance(group, GroupTable):
        group = from_rows(group)
    elements = list(group.elements)
    e = group.identity
    return build(
        [point],
        elements,
        alpha=dict.fromkeys(elements, point),
        beta=dict.fromkeys(elements, point),
        compose=group.mul,
        inverse={g: group.inverse(g) for g in elements},
        identity_at={point: e},
    )


def action_groupoid(group: GroupTable, points: Iterable, act: Callable) -> FiniteGroupoid:
    """Transformation groupoid of a left action: triples (x, g, y) with x = g.y."""
    points = list(dict.fromkeys(points))
    members = set(points)
    e = group.identity
    for x in points:
        if act(e, x) != x:
            raise NotAnAction("identity moves a point", point=x)
    for g in group.elements:
        for x in points:
            if act(g, x) not in members:
                raise NotAnAction("image outside the set", group_element=g, point=x)
    for g, h in itertools.product(group.elements, repeat=2):
        gh = group.mul(g, h)
        for x in points:
            if act(g, act(h, x)) != act(gh, x):
                raise NotAnAction("not compatible with the product", g=g, h=h, point=x)

    gpos = {g: i for i, g in enumerate(group.elements)}
    ppos = {x: i for i, x in enumerate(points)}
    elements = sorted(
        ((act(g, y), g, y) for y in points for g in group.elements),
        key=lambda t: (ppos[t[0]], gpos[t[1]], ppos[t[2]]),
    )
    return build(
        points,
        elements,
        alpha={t: t[0] for t in elements},
        beta={t: t[2] for t in elements},
        compose=lambda s, t: (s[0], group.mul(s[1], t[1]), t[2]),
        inverse={t: (t[2], group.inverse(t[1]), t[0]) for t in elements},
        identity_at={x: (x, e, x) for x in points},
    )


def restrict(G: FiniteGroupoid, subset: Iterable) -> FiniteGroupoid:
    """The arrows of G with both ends in ``subset``."""
    keep = set(subset)
    missing = keep - set(G.objects)
    if missing:
        raise ObjectNotFound(object=min(missing, key=sort_key))
    objects = [x for x in G.objects if x in keep]
    elements = [g for g in G.elements if G.alpha[g] in keep and G.beta[g] in keep]
    kept = set(elements)
    return build(
        objects,
        elements,
        alpha={g: G.alpha[g] for g in elements},
        beta={g: G.beta[g] for g in elements},
        compose={k: v for k, v in G.composition_pairs() if k[0] in kept and k[1] in kept},
        inverse={g: G.inverse[g] for g in elements},
        identity_at={x: G.identity_at[x] for x in objects},
    )


def equivalence_relation_groupoid(blocks: Iterable[Iterable], base: Iterable | None = None) -> FiniteGroupoid:
    """Wide subgroupoid of the pair groupoid: pairs lying in a common block."""
    blocks = [list(dict.fromkeys(b)) for b in blocks]
    seen: dict = {}
    for i, b in enumerate(blocks):
        if not b:
            raise NotAPartition("empty block", block=i)
        for x in b:
            if x in seen:
                raise NotAPartition("blocks overlap", object=x)
            seen[x] = i
    if base is not None:
        base = set(base)
        if base != set(seen):
            stray = (base ^ set(seen))
            raise NotAPartition("blocks do not cover the base", object=min(stray, key=sort_key))
    objects = _sorted(seen)
    elements = [(x, y) for x in objects for y in objects if seen[x] == seen[y]]
    return build(
        objects,
        elements,
        alpha={g: g[0] for g in elements},
        beta={g: g[1] for g in elements},
        compose=lambda g, h: (g[0], h[1]),
        inverse={g: (g[1], g[0]) for g in elements},
        identity_at={x: (x, x) for x in objects},
    )


def disjoint_union(*parts: FiniteGroupoid) -> FiniteGroupoid:
    """Coproduct; identifiers of the i-th summand are tagged ``(i, id)``."""
    objects, elements = [], []
    alpha, beta, compose, inverse, identity_at = {}, {}, {}, {}, {}
    for i, G in enumerate(parts):
        objects += [(i, x) for x in G.objects]
        elements += [(i, g) for g in G.elements]
        for g in G.elements:
            alpha[(i, g)] = (i, G.alpha[g])
            beta[(i, g)] = (i, G.beta[g])
            inverse[(i, g)] = (i, G.inverse[g])
        for (g, h), gh in G.composition_pairs():
            compose[((i, g), (i, h))] = (i, gh)
        for x, e in G.identity_at.items():
            identity_at[(i, x)] = (i, e)
    return build(objects, elements, alpha, beta, compose, inverse, identity_at)


def is_wide_subgroupoid(G: FiniteGroupoid, subset: Iterable) -> bool:
    """Closed under product and inversion, and containing every identity."""
    s = set(subset)
    if not s <= set(G.elements):
        raise IdentifierError("subset contains non-elements")
    if not set(G.identity_at.values()) <= s:
        return False
    if any(G.inverse[g] not in s for g in s):
        return False
    return all(gh in s for (g, h), gh in G.composition_pairs() if g in s and h in s)
