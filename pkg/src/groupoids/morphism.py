"""Groupoid morphisms, homotopies between them, and equivalence of groupoids.

A morphism is a functor: it preserves alpha, beta, composition and identities
(preservation of inverses then follows). A homotopy from f1 to f2 assigns to
each source object x an arrow h(x) from f2(x) to f1(x) with
h(alpha(g)) f2(g) = f1(g) h(beta(g)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .analysis import orbits, skeleton
from .core import FiniteGroupoid, build, empty_groupoid, pair_groupoid
from .errors import NotAMorphism, NotHomotopic, SearchTooLarge, ShapeMismatch
from .groups import label_order
from .textio import token

SEARCH_LIMIT = 10**6
CROSS_CHECK_MAX_ELEMENTS = 12


@dataclass(frozen=True, eq=False)
class GroupoidMorphism:
    source: FiniteGroupoid
    target: FiniteGroupoid
    on_elements: Mapping = field(repr=False)
    on_objects: Mapping = field(repr=False)

    def __call__(self, g):
        return self.on_elements[g]

    def __eq__(self, other):
        if not isinstance(other, GroupoidMorphism):
            return NotImplemented
        return (
            _same(self.source, other.source)
            and _same(self.target, other.target)
            and dict(self.on_elements) == dict(other.on_elements)
            and dict(self.on_objects) == dict(other.on_objects)
        )

    __hash__ = None

    def lines(self) -> list[str]:
        out = [f"fB: {token(x)} -> {token(self.on_objects[x])}" for x in self.source.objects]
        out += [f"fG: {token(g)} -> {token(self.on_elements[g])}" for g in self.source.elements]
        return out


@dataclass(frozen=True, eq=False)
class Homotopy:
    first: GroupoidMorphism
    second: GroupoidMorphism
    components: Mapping

    def lines(self) -> list[str]:
        return [f"h: {token(x)} -> {token(self.components[x])}" for x in self.first.source.objects]


@dataclass(frozen=True)
class PairMorphismReport:
    morphism: GroupoidMorphism
    image: FiniteGroupoid
    kernel: frozenset


@dataclass(frozen=True, eq=False)
class FunctorPair:
    """Morphisms f: G -> H, g: H -> G with g.f ~ id_G and f.g ~ id_H."""

    forward: GroupoidMorphism
    backward: GroupoidMorphism
    unit: Homotopy
    counit: Homotopy


@dataclass(frozen=True, eq=False)
class EquivalenceVerdict:
    verdict: str  # "equivalent" | "not-equivalent" | "inconclusive"
    matching: tuple = ()
    sizes: tuple = ()
    certificate: FunctorPair | None = None
    cross_checked: bool = False

    def __bool__(self) -> bool:
        return self.verdict == "equivalent"

    def lines(self) -> list[str]:
        out = [f"verdict {self.verdict}"]
        for (a, b, name), (sa, sb) in zip(self.matching, self.sizes):
            out.append(f"match {token(a)} {token(b)} isotropy={name} sizes={sa},{sb}")
        if self.cross_checked:
            out.append(f"functor-pair {'found' if self.certificate else 'none'}")
        return out


def _same(G: FiniteGroupoid, H: FiniteGroupoid) -> bool:
    return G is H or G == H


# -- morphisms -----------------------------------------------------------------


def validate_morphism(
    source: FiniteGroupoid,
    target: FiniteGroupoid,
    on_elements: Mapping,
    on_objects: Mapping,
) -> GroupoidMorphism:
    fG, fB = dict(on_elements), dict(on_objects)
    target_elements, target_objects = set(target.elements), set(target.objects)
    for x in source.objects:
        if x not in fB or fB[x] not in target_objects:
            raise NotAMorphism("object map not total into the target", law="total", object=x)
    for g in source.elements:
        if g not in fG or fG[g] not in target_elements:
            raise NotAMorphism("element map not total into the target", law="total", element=g)
    for g in source.elements:
        if target.alpha[fG[g]] != fB[source.alpha[g]]:
            raise NotAMorphism(law="alpha", element=g)
        if target.beta[fG[g]] != fB[source.beta[g]]:
            raise NotAMorphism(law="beta", element=g)
    for x in source.objects:
        if fG[source.identity_at[x]] != target.identity_at[fB[x]]:
            raise NotAMorphism(law="identity", object=x)
    for (g, h), gh in source.composition_pairs():
        if fG[gh] != target.compose(fG[g], fG[h]):
            raise NotAMorphism(law="composition", g=g, h=h)
    for g in source.elements:
        assert fG[source.inverse[g]] == target.inverse[fG[g]]
    return GroupoidMorphism(source, target, fG, fB)


def identity_morphism(G: FiniteGroupoid) -> GroupoidMorphism:
    return GroupoidMorphism(G, G, {g: g for g in G.elements}, {x: x for x in G.objects})


def _compose_unchecked(f: GroupoidMorphism, g: GroupoidMorphism) -> GroupoidMorphism:
    return GroupoidMorphism(
        f.source,
        g.target,
        {a: g.on_elements[b] for a, b in f.on_elements.items()},
        {x: g.on_objects[y] for x, y in f.on_objects.items()},
    )


def compose_morphisms(f: GroupoidMorphism, g: GroupoidMorphism) -> GroupoidMorphism:
    """``g`` after ``f``."""
    if not _same(f.target, g.source):
        raise ShapeMismatch("target of f differs from source of g")
    h = _compose_unchecked(f, g)
    return validate_morphism(h.source, h.target, h.on_elements, h.on_objects)


def _pair_target(G: FiniteGroupoid) -> FiniteGroupoid:
    return pair_groupoid(G.objects) if G.objects else empty_groupoid()


def canonical_pair_morphism(G: FiniteGroupoid) -> PairMorphismReport:
    """(alpha, beta): G -> B x B, with its image and kernel."""
    P = _pair_target(G)
    f = validate_morphism(
        G,
        P,
        {g: (G.alpha[g], G.beta[g]) for g in G.elements},
        {x: x for x in G.objects},
    )
    image_set = set(f.on_elements.values())
    image_elements = [p for p in P.elements if p in image_set]
    image = build(
        P.objects,
        image_elements,
        alpha={p: p[0] for p in image_elements},
        beta={p: p[1] for p in image_elements},
        compose={k: v for k, v in P.composition_pairs() if k[0] in image_set and k[1] in image_set},
        inverse={p: (p[1], p[0]) for p in image_elements},
        identity_at=dict(P.identity_at),
    )
    kernel = frozenset(g for g in G.elements if P.is_identity(f(g)))
    return PairMorphismReport(f, image, kernel)


# -- homotopies ----------------------------------------------------------------


def _check_shape(f1: GroupoidMorphism, f2: GroupoidMorphism) -> None:
    if not (_same(f1.source, f2.source) and _same(f1.target, f2.target)):
        raise ShapeMismatch("morphisms do not share source and target")


def homotopy_violation(f1: GroupoidMorphism, f2: GroupoidMorphism, h: Mapping) -> str | None:
    """Describe the first failed homotopy condition, or None if h is a homotopy."""
    _check_shape(f1, f2)
    G, T = f1.source, f1.target
    for x in G.objects:
        if x not in h or h[x] not in T.alpha:
            return f"h undefined at object={token(x)}"
        if T.alpha[h[x]] != f1.on_objects[x]:
            return f"alpha condition fails at object={token(x)}"
        if T.beta[h[x]] != f2.on_objects[x]:
            return f"beta condition fails at object={token(x)}"
    for g in G.elements:
        lhs = T.compose(h[G.alpha[g]], f2(g))
        rhs = T.compose(f1(g), h[G.beta[g]])
        if lhs != rhs:
            return f"naturality fails at element={token(g)}"
    return None


def is_homotopy(f1: GroupoidMorphism, f2: GroupoidMorphism, h: Mapping) -> bool:
    return homotopy_violation(f1, f2, h) is None


def find_homotopy(f1: GroupoidMorphism, f2: GroupoidMorphism, limit: int = SEARCH_LIMIT) -> Homotopy:
    """Backtracking search; objects in order, candidates in element order.

    Raises NotHomotopic once the search space is exhausted.
    """
    _check_shape(f1, f2)
    G, T = f1.source, f1.target
    objects = G.objects
    candidates = [T.hom(f1.on_objects[x], f2.on_objects[x]) for x in objects]
    if math.prod(len(c) for c in candidates) > limit:
        raise SearchTooLarge(candidates=math.prod(len(c) for c in candidates), limit=limit)
    pos = {x: i for i, x in enumerate(objects)}
    # each naturality square is checked once both of its ends are assigned
    due: list[list] = [[] for _ in objects]
    for g in G.elements:
        due[max(pos[G.alpha[g]], pos[G.beta[g]])].append(g)

    h: dict = {}
    explored = 0

    def extend(i: int) -> bool:
        nonlocal explored
        if i == len(objects):
            return True
        x = objects[i]
        for c in candidates[i]:
            explored += 1
            h[x] = c
            if all(
                T.compose(h[G.alpha[g]], f2(g)) == T.compose(f1(g), h[G.beta[g]]) for g in due[i]
            ) and extend(i + 1):
                return True
        h.pop(x, None)
        return False

    if not extend(0):
        raise NotHomotopic("search exhausted", explored=explored)
    return Homotopy(f1, f2, dict(h))


# -- brute-force functor search --------------------------------------------------


def enumerate_morphisms(G: FiniteGroupoid, H: FiniteGroupoid) -> Iterator[GroupoidMorphism]:
    """Every morphism G -> H, by backtracking with forced-product propagation."""
    ident_H = list(H.identity_at.items())
    order = [G.identity_at[x] for x in G.objects]
    order += [g for g in G.elements if not G.is_identity(g)]
    fG: dict = {}
    fB: dict = {}

    def assign(g, v, trail) -> bool:
        stack = [(g, v)]
        while stack:
            a, va = stack.pop()
            if a in fG:
                if fG[a] != va:
                    return False
                continue
            fG[a] = va
            trail.append(a)
            inv = G.inverse[a]
            stack.append((inv, H.inverse[va]))
            for b in list(fG):
                if G.beta[a] == G.alpha[b]:
                    stack.append((G.compose(a, b), H.compose(va, fG[b])))
                if G.beta[b] == G.alpha[a]:
                    stack.append((G.compose(b, a), H.compose(fG[b], va)))
        return True

    def undo(trail):
        for a in trail:
            del fG[a]

    def search(i: int):
        if i == len(order):
            yield GroupoidMorphism(G, H, dict(fG), dict(fB))
            return
        g = order[i]
        if g in fG:
            yield from search(i + 1)
            return
        if G.is_identity(g):
            x = G.alpha[g]
            choices = [(e, y) for y, e in ident_H]
        else:
            choices = [(c, None) for c in H.hom(fB[G.alpha[g]], fB[G.beta[g]])]
        for value, y in choices:
            if y is not None:
                fB[G.alpha[g]] = y
            trail: list = []
            if assign(g, value, trail):
                yield from search(i + 1)
            undo(trail)
            if y is not None:
                del fB[x]

    yield from search(0)


def _try_homotopy(f1, f2):
    try:
        return find_homotopy(f1, f2)
    except NotHomotopic:
        return None


def _faithful(f: GroupoidMorphism) -> bool:
    G = f.source
    seen: dict = {}
    for g in G.elements:
        key = (G.alpha[g], G.beta[g], f(g))
        if key in seen:
            return False
        seen[key] = g
    return True


def _essentially_surjective(f: GroupoidMorphism, target_orbits) -> bool:
    hit = {target_orbits.block_of(y)[0] for y in f.on_objects.values()}
    return len(hit) == len(target_orbits)


def brute_force_equivalence(G: FiniteGroupoid, H: FiniteGroupoid) -> FunctorPair | None:
    """Search all functor pairs for an equivalence; None if there is none.

    Candidates are pre-filtered by two necessary conditions: if g.f ~ id then
    g.f acts on each hom-set by conjugation with homotopy arrows, so f is
    injective on hom-sets; and if f.g ~ id every object of H is joined by an
    arrow to some f(x).
    """
    id_G, id_H = identity_morphism(G), identity_morphism(H)
    orbits_G, orbits_H = orbits(G), orbits(H)
    backwards = [
        g for g in enumerate_morphisms(H, G) if _faithful(g) and _essentially_surjective(g, orbits_G)
    ]
    if not backwards:
        return None
    for f in enumerate_morphisms(G, H):
        if not (_faithful(f) and _essentially_surjective(f, orbits_H)):
            continue
        for g in backwards:
            unit = _try_homotopy(_compose_unchecked(f, g), id_G)
            if unit is None:
                continue
            counit = _try_homotopy(_compose_unchecked(g, f), id_H)
            if counit is not None:
                return FunctorPair(f, g, unit, counit)
    return None


def are_equivalent(G: FiniteGroupoid, H: FiniteGroupoid, cross_check: bool = True) -> EquivalenceVerdict:
    """Decide equivalence by matching isotropy classes orbit for orbit.

    Orbit sizes are reported but do not enter the decision. Groupoids with at
    most 12 elements are also run through the brute-force functor search,
    which must agree.
    """
    sG, sH = skeleton(G), skeleton(H)
    names_G = sorted(e.isotropy for e in sG.entries)
    names_H = sorted(e.isotropy for e in sH.entries)
    degraded = any(n.startswith("order") for n in names_G + names_H)
    if degraded:
        same_orders = sorted(map(label_order, names_G)) == sorted(map(label_order, names_H))
        verdict = "inconclusive" if same_orders else "not-equivalent"
    else:
        verdict = "equivalent" if names_G == names_H else "not-equivalent"

    matching, sizes = (), ()
    if verdict == "equivalent":
        rank_G = {x: i for i, x in enumerate(G.objects)}
        rank_H = {x: i for i, x in enumerate(H.objects)}
        eg = sorted(sG.entries, key=lambda e: (e.isotropy, rank_G[e.representative]))
        eh = sorted(sH.entries, key=lambda e: (e.isotropy, rank_H[e.representative]))
        matching = tuple((a.representative, b.representative, a.isotropy) for a, b in zip(eg, eh))
        sizes = tuple((a.size, b.size) for a, b in zip(eg, eh))

    certificate, checked = None, False
    if cross_check and max(len(G), len(H)) <= CROSS_CHECK_MAX_ELEMENTS:
        certificate = brute_force_equivalence(G, H)
        checked = True
        if verdict != "inconclusive" and (certificate is not None) != (verdict == "equivalent"):
            raise AssertionError("skeleton decision disagrees with the functor search")
    return EquivalenceVerdict(verdict, matching, sizes, certificate, checked)


def maps_orbits_to_orbits(f: GroupoidMorphism) -> bool:
    target_orbits = orbits(f.target)
    for block in orbits(f.source).blocks:
        image = {f.on_objects[x] for x in block}
        if not image <= set(target_orbits.block_of(next(iter(image)))):
            return False
    return True
