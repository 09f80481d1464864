"""Orbit and fusion categories of a subgroup collection and the series
Lefschetz invariants of the subgroup and centralizer decomposition categories.

The decomposition categories themselves have infinite nerves and are never
built. Their invariants come from three finite routes that the tests play
against each other:

* closed-form weights from poset Möbius functions,
* the weighted sum of a generic Grothendieck construction, using weights
  obtained by linear algebra on the orbit / fusion category,
* mark-by-mark Euler characteristics of the fixed-point posets.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from typing import Iterable, Literal, Mapping

from .burnside import BurnsideElement
from .fincat import FinCat, skeletal_coweighting, skeletal_weighting
from .permgroup import GroupError, PermGroup, Subgroup, SubgroupClass
from .poset import (
    BOTTOM,
    TOP,
    Poset,
    augment_bottom,
    augment_top,
    euler_char,
    interval,
    mobius_column,
    mobius_row,
    reduced_euler_char,
)

Which = Literal["subgroup", "centralizer"]


class SubgroupCollection:
    """A set of subgroups of G closed under G-conjugation."""

    def __init__(self, group: PermGroup, members: Iterable[Subgroup]):
        self.group = group
        uniq = {H.mask: group.canonical(H) for H in members}
        self.members: tuple[Subgroup, ...] = tuple(sorted(uniq.values(), key=lambda H: (H.order, H.key)))
        self._masks = frozenset(uniq)
        for cls in self.classes:
            if any(K.mask not in self._masks for K in cls.members):
                raise GroupError("collection is not closed under conjugation")

    @classmethod
    def closed(cls, group: PermGroup, members: Iterable[Subgroup], warn: bool = True) -> "SubgroupCollection":
        """Close ``members`` under conjugation, warning if anything was added."""
        given = {H.mask for H in members}
        out = []
        for c in group.conjugacy_classes_of_subgroups():
            if any(K.mask in given for K in c.members):
                out.extend(c.members)
        if warn and len(out) != len(given):
            warnings.warn(f"conjugation closure added {len(out) - len(given)} subgroups", stacklevel=2)
        return cls(group, out)

    @classmethod
    def from_classes(cls, group: PermGroup, classes: Iterable[SubgroupClass]) -> "SubgroupCollection":
        return cls(group, [K for c in classes for K in c.members])

    def __contains__(self, H: Subgroup) -> bool:
        return H.mask in self._masks

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        return isinstance(other, SubgroupCollection) and other.group is self.group and other._masks == self._masks

    def __hash__(self) -> int:
        return hash(self._masks)

    def __repr__(self) -> str:
        return f"<SubgroupCollection {len(self.classes)} classes, {len(self)} subgroups>"

    @property
    def classes(self) -> list[SubgroupClass]:
        seen: dict[int, SubgroupClass] = {}
        for H in self.members:
            c = self.group.class_of(H)
            seen.setdefault(c.number, c)
        return [seen[k] for k in sorted(seen)]

    def poset(self) -> Poset:
        return Poset.from_relation(list(self.members), _subgroup_leq)


def _subgroup_leq(a, b) -> bool:
    return a <= b


def orbit_category(E: SubgroupCollection) -> FinCat:
    """Objects E, morphisms H -> K the G-maps G/H -> G/K, counted as |(G/K)^H|."""
    G = E.group
    objs = list(E.members)
    zeta = [[G.marks(K, H) if H.order <= K.order else 0 for K in objs] for H in objs]
    return FinCat(objs, zeta, _iso_partition(E), ei=True)


def fusion_category(E: SubgroupCollection) -> FinCat:
    """Objects E, morphisms H -> K the homomorphisms induced by conjugation in G."""
    G = E.group
    objs = list(E.members)
    zeta = []
    for H in objs:
        cent = G.centralizer(H).order
        gens = H.gens
        row = []
        for K in objs:
            if H.order > K.order:
                row.append(0)
                continue
            count = sum(
                1 for g in range(G.order) if all(K.mask >> G.conj_index(g, h) & 1 for h in gens)
            )
            row.append(count // cent)
        zeta.append(row)
    return FinCat(objs, zeta, _iso_partition(E), ei=True)


def _iso_partition(E: SubgroupCollection) -> list[list[int]]:
    pos = {H.mask: i for i, H in enumerate(E.members)}
    return [[pos[K.mask] for K in c.members] for c in E.classes]


def orbit_weighting(E: SubgroupCollection) -> dict[Subgroup, Fraction]:
    """Skeletal weighting of the orbit category: -mu_{E+}(H, top) / |G:H|."""
    G = E.group
    mu = mobius_column(augment_top(E.poset(), TOP), TOP)
    return {H: Fraction(-mu[H], G.order // H.order) for H in E.members}


def fusion_coweighting(E: SubgroupCollection) -> dict[Subgroup, Fraction]:
    """Skeletal coweighting of the fusion category: -mu_{E-}(bottom, K) / |G:C_G(K)|."""
    G = E.group
    mu = mobius_row(augment_bottom(E.poset(), BOTTOM), BOTTOM)
    return {K: Fraction(-mu[K], G.order // G.centralizer(K).order) for K in E.members}


def orbit_weighting_by_intervals(E: SubgroupCollection) -> dict[Subgroup, Fraction]:
    """Same weights as :func:`orbit_weighting`, via -reduced_chi(E_{>H}) / |G:H|."""
    G = E.group
    P = E.poset()
    return {H: Fraction(-reduced_euler_char(interval(P, H, ">")), G.order // H.order) for H in E.members}


def fusion_coweighting_by_intervals(E: SubgroupCollection) -> dict[Subgroup, Fraction]:
    G = E.group
    P = E.poset()
    return {
        K: Fraction(-reduced_euler_char(interval(P, K, "<")), G.order // G.centralizer(K).order)
        for K in E.members
    }


def _gset_element(G: PermGroup, value) -> BurnsideElement:
    if isinstance(value, (SubgroupClass, Subgroup)):
        value = [value]
    out = BurnsideElement.zero(G)
    for v in value:
        H = v.representative if isinstance(v, SubgroupClass) else v
        out = out + BurnsideElement.transitive(G, H)
    return out


def grothendieck_lefschetz(G: PermGroup, C: FinCat, F: Mapping) -> BurnsideElement:
    """Series Lefschetz invariant of the Grothendieck construction of F: C -> G-sets.

    ``F`` maps each object of C to a subgroup class (the transitive G-set
    G/K), a subgroup, or a list of those (a disjoint union). The result is
    the sum of the skeletal weights of C times the classes [F(x)].
    """
    k = skeletal_weighting(C)
    out = BurnsideElement.zero(G)
    for x in C.objects:
        out = out + _gset_element(G, F[x]).scale(k[x])
    return out


def lefschetz_subgroup(E: SubgroupCollection) -> BurnsideElement:
    """Unreduced invariant of the subgroup decomposition category, sum of k(H) [G/H]."""
    G = E.group
    k = orbit_weighting(E)
    coords: dict[int, Fraction] = {}
    for H, w in k.items():
        n = G.class_of(H).number
        coords[n] = coords.get(n, 0) + w
    return BurnsideElement(G, coords)


def lefschetz_centralizer(E: SubgroupCollection) -> BurnsideElement:
    """Unreduced invariant of the centralizer decomposition category, sum of t(H) [G/C_G(H)]."""
    G = E.group
    t = fusion_coweighting(E)
    coords: dict[int, Fraction] = {}
    for H, w in t.items():
        n = G.class_of(G.centralizer(H)).number
        coords[n] = coords.get(n, 0) + w
    return BurnsideElement(G, coords)


def lefschetz_subgroup_via_category(E: SubgroupCollection) -> BurnsideElement:
    C = orbit_category(E)
    return grothendieck_lefschetz(E.group, C, {H: H for H in E.members})


def lefschetz_centralizer_via_category(E: SubgroupCollection) -> BurnsideElement:
    # a weighting on the opposite fusion category is a coweighting on the fusion category
    G = E.group
    C = fusion_category(E).opposite()
    return grothendieck_lefschetz(G, C, {K: G.centralizer(K) for K in E.members})


def lefschetz(E: SubgroupCollection, which: Which) -> BurnsideElement:
    if which == "subgroup":
        return lefschetz_subgroup(E)
    if which == "centralizer":
        return lefschetz_centralizer(E)
    raise ValueError(f"unknown decomposition {which!r}")


def reduced(x: BurnsideElement) -> BurnsideElement:
    return x - BurnsideElement.one(x.group)


def idempotent_expansion_reduced(E: SubgroupCollection, which: Which) -> list[int]:
    """Idempotent coordinates of the reduced invariant, from poset Euler characteristics alone."""
    G = E.group
    P = E.poset()
    out = []
    for cls in G.conjugacy_classes_of_subgroups():
        K = cls.representative
        if which == "subgroup":
            out.append(0 if K in E else reduced_euler_char(interval(P, K, ">")))
        elif which == "centralizer":
            C = G.centralizer(K)
            out.append(0 if C in E else reduced_euler_char(interval(P, C, "<")))
        else:
            raise ValueError(f"unknown decomposition {which!r}")
    return out


def fixed_point_poset(E: SubgroupCollection, which: Which, H: Subgroup) -> Poset:
    """A poset equivalent to the H-fixed subcategory of the decomposition category."""
    P = E.poset()
    if which == "subgroup":
        return interval(P, H, ">=")
    if which == "centralizer":
        return interval(P, E.group.centralizer(H), "<=")
    raise ValueError(f"unknown decomposition {which!r}")


def marks_by_fixed_points(E: SubgroupCollection, which: Which) -> list[int]:
    G = E.group
    return [euler_char(fixed_point_poset(E, which, c.representative)) for c in G.conjugacy_classes_of_subgroups()]

