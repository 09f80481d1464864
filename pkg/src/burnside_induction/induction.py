"""Induction formulae 1_G = sum of rational multiples of ind_H^G(1_H).

Formulae come from the series Lefschetz invariants of the subgroup and
centralizer decomposition categories. Correctness is certified in the complex
character ring (fixed-point counts at every element class) and, for rings with
non-invertible primes, by the idempotent-support check on the Burnside ring.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .burnside import (
    BurnsideElement,
    marks_of,
    restrict,
    subgroup_key,
    translate,
)
from .decomposition import (
    SubgroupCollection,
    Which,
    fusion_coweighting,
    lefschetz_centralizer,
    lefschetz_subgroup,
)
from .exactnum import fmt_rational, parse_rational
from .permgroup import GroupError, PermGroup, Permutation, Subgroup, SubgroupClass, is_prime


@dataclass(frozen=True)
class RingSpec:
    """Which primes are not invertible in the coefficient ring.

    ``all_primes=True`` models the integers: every prime is non-invertible,
    and ``noninvertible_primes`` is ignored.
    """

    noninvertible_primes: frozenset[int] = frozenset()
    all_primes: bool = False

    def __post_init__(self):
        object.__setattr__(self, "noninvertible_primes", frozenset(self.noninvertible_primes))
        for p in self.noninvertible_primes:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")

    @classmethod
    def parse(cls, text: str | None) -> "RingSpec":
        """``"none"``/empty, ``"all"`` or a comma separated list like ``"2,3"``."""
        text = (text or "").strip().lower()
        if text in ("", "none"):
            return cls()
        if text == "all":
            return cls(all_primes=True)
        try:
            primes = [int(x) for x in text.split(",") if x.strip()]
        except ValueError as exc:
            raise ValueError(f"malformed ring primes: {text!r}") from exc
        return cls(frozenset(primes))

    def primes_for(self, G: PermGroup) -> list[int]:
        """The non-invertible primes that can matter for subgroups of G."""
        divisors = [p for p in range(2, G.order + 1) if G.order % p == 0 and is_prime(p)]
        if self.all_primes:
            return divisors
        return sorted(p for p in self.noninvertible_primes if G.order % p == 0)

    def label(self) -> str | list[int]:
        return "all" if self.all_primes else sorted(self.noninvertible_primes)


# -- collections --------------------------------------------------------------


def cyclic_subgroups(G: PermGroup) -> SubgroupCollection:
    return SubgroupCollection(G, [H for H in G.all_subgroups() if G.is_cyclic(H)])


def all_subgroups(G: PermGroup) -> SubgroupCollection:
    return SubgroupCollection(G, G.all_subgroups())


def quotient_is_cyclic(G: PermGroup, H: Subgroup, N: Subgroup) -> bool:
    """Whether H/N is cyclic for N normal in H.

    Looks for an h whose coset generates the regular action of H on H/N,
    i.e. whose powers first land in N after exactly |H:N| steps.
    """
    n = H.order // N.order
    mul = G.mul
    for h in H.indices:
        x, k = h, 1
        while not N.mask >> x & 1:
            x = mul[x][h]
            k += 1
        if k == n:
            return True
    return False


def is_primordial(G: PermGroup, H: Subgroup, ring: RingSpec) -> bool:
    # cyclic subgroups are kept for every ring, which is harmless when some p is non-invertible
    if G.is_cyclic(H):
        return True
    return any(quotient_is_cyclic(G, H, G.p_core(H, p)) for p in ring.primes_for(G))


def primordial_subgroups(G: PermGroup, ring: RingSpec) -> SubgroupCollection:
    return SubgroupCollection(G, [H for H in G.all_subgroups() if is_primordial(G, H, ring)])


def centralizer_collection(E: SubgroupCollection) -> SubgroupCollection:
    G = E.group
    return SubgroupCollection.closed(G, [G.centralizer(H) for H in E], warn=False)


def subgroup_closure(E: SubgroupCollection) -> SubgroupCollection:
    G = E.group
    masks = [H.mask for H in E]
    return SubgroupCollection(G, [K for K in G.all_subgroups() if any(K.mask & ~m == 0 for m in masks)])


def contains_required(E: SubgroupCollection, ring: RingSpec, which: Which) -> bool:
    """Hypothesis of the induction theorems: E holds the primordial subgroups
    (subgroup case) or their centralizers (centralizer case)."""
    G = E.group
    P = primordial_subgroups(G, ring)
    if which == "subgroup":
        return all(H in E for H in P)
    return all(G.centralizer(H) in E for H in P)


# -- formulae -----------------------------------------------------------------


@dataclass
class InductionFormula:
    """1_G = sum over terms of coefficient * ind_H^G(1_H), collected per class of H."""

    group: PermGroup
    element: BurnsideElement
    decomposition: Which
    collection: SubgroupCollection | None = None
    ring: RingSpec = field(default_factory=RingSpec)
    hypothesis_ok: bool | None = None

    @property
    def terms(self) -> list[tuple[SubgroupClass, Fraction]]:
        return self.element.terms()

    def same_terms(self, other: "InductionFormula") -> bool:
        return self.group is other.group and self.element == other.element

    def display(self) -> str:
        """Human form, with class multiplicities split out as in ``3*(1/6)``."""
        if not self.terms:
            return "1 = 0"
        parts = []
        for cls, c in self.terms:
            H = cls.representative
            name = _subgroup_name(H)
            if cls.size > 1:
                parts.append(f"{cls.size}*({fmt_rational(c / cls.size)}) ind[{name}]")
            else:
                parts.append(f"{fmt_rational(c)} ind[{name}]")
        return "1 = " + " + ".join(parts)

    def to_dict(self, verified: bool | None = None) -> dict:
        G = self.group
        return {
            "group": {"name": G.name, "degree": G.degree, "generators": [str(g) for g in G.generators], "order": G.order},
            "decomposition": self.decomposition,
            "ring_primes": self.ring.label(),
            "terms": [
                {
                    "subgroup": {
                        "generators": [str(g) for g in cls.representative.generators],
                        "order": cls.order,
                        "key": subgroup_key(cls.representative),
                    },
                    "class_size": cls.size,
                    "coefficient": fmt_rational(c),
                    "per_member": fmt_rational(c / cls.size),
                }
                for cls, c in self.terms
            ],
            "verified": verified,
            "hypothesis_ok": self.hypothesis_ok,
        }

    def to_json(self, verified: bool | None = None) -> str:
        return json.dumps(self.to_dict(verified), indent=2, sort_keys=True)


def _subgroup_name(H: Subgroup) -> str:
    gens = ",".join(str(g) for g in H.generators) or "1"
    return f"<{gens}>|{H.order}"


def formula_from_json(text: str | dict, group: PermGroup | None = None) -> InductionFormula:
    """Rebuild a formula written by :meth:`InductionFormula.to_json`."""
    d = json.loads(text) if isinstance(text, str) else text
    g = d["group"]
    if group is None:
        gens = [Permutation.parse(g["degree"], s) for s in g["generators"]]
        group = PermGroup(gens, g["degree"], name=g.get("name"))
        if group.order != g["order"]:
            raise GroupError("group order in the formula does not match its generators")
    coords: dict[int, Fraction] = {}
    for t in d["terms"]:
        H = group.subgroup([Permutation.parse(group.degree, s) for s in t["subgroup"]["generators"]])
        if H.order != t["subgroup"]["order"]:
            raise GroupError("subgroup order in the formula does not match its generators")
        n = group.class_of(H).number
        coords[n] = coords.get(n, 0) + parse_rational(t["coefficient"])
    rp = d.get("ring_primes", [])
    ring = RingSpec(all_primes=True) if rp == "all" else RingSpec(frozenset(rp))
    return InductionFormula(
        group, BurnsideElement(group, coords), d["decomposition"], None, ring, d.get("hypothesis_ok")
    )


def formula_subgroup(G: PermGroup, E: SubgroupCollection, ring: RingSpec | None = None) -> InductionFormula:
    """Coefficients -chi~(E_{>H}) / |G:H|, collected per class."""
    if E.group is not G:
        raise GroupError("collection belongs to a different group")
    ok = None
    if ring is not None:
        ok = contains_required(E, ring, "subgroup")
        if not ok:
            warnings.warn("collection does not contain all primordial subgroups", stacklevel=2)
    return InductionFormula(G, lefschetz_subgroup(E), "subgroup", E, ring or RingSpec(), ok)


def formula_centralizer(G: PermGroup, E: SubgroupCollection, ring: RingSpec | None = None) -> InductionFormula:
    """Coefficients -chi~(E_{<H}) / |G:C_G(H)| on ind from C_G(H), merged per centralizer class."""
    if E.group is not G:
        raise GroupError("collection belongs to a different group")
    ok = None
    if ring is not None:
        ok = contains_required(E, ring, "centralizer")
        if not ok:
            warnings.warn("collection misses the centralizer of some primordial subgroup", stacklevel=2)
    return InductionFormula(G, lefschetz_centralizer(E), "centralizer", E, ring or RingSpec(), ok)


def formula(G: PermGroup, E: SubgroupCollection, which: Which, ring: RingSpec | None = None) -> InductionFormula:
    if which == "subgroup":
        return formula_subgroup(G, E, ring)
    if which == "centralizer":
        return formula_centralizer(G, E, ring)
    raise ValueError(f"unknown decomposition {which!r}")


# -- verification -------------------------------------------------------------


@dataclass
class CharacterReport:
    ok: bool
    residuals: list[tuple[Permutation, Fraction]]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "residuals": [{"element": str(g), "residual": fmt_rational(r)} for g, r in self.residuals]}


def verify_character(f: InductionFormula) -> CharacterReport:
    """Check sum(coefficient * |(G/H)^g|) = 1 at one element of every conjugacy class."""
    G = f.group
    terms = f.terms
    residuals = []
    for g, _ in G.element_classes():
        total = sum((c * G.fixed_points(g, cls.representative) for cls, c in terms), Fraction(0))
        residuals.append((G.elements[g], total - 1))
    return CharacterReport(all(r == 0 for _, r in residuals), residuals)


@dataclass
class SupportReport:
    ok: bool
    required: list[SubgroupClass]
    marks: list[Fraction]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "required_classes": [subgroup_key(c.representative) for c in self.required],
            "marks": [fmt_rational(m) for m in self.marks],
        }


def verify_idempotent_support(G: PermGroup, E: SubgroupCollection, which: Which) -> SupportReport:
    """Marks of the invariant must be 1 on K in E (subgroup case) or on K with C_G(K) in E."""
    if which == "subgroup":
        x = lefschetz_subgroup(E)
        required = [c for c in G.conjugacy_classes_of_subgroups() if c.representative in E]
    elif which == "centralizer":
        x = lefschetz_centralizer(E)
        required = [c for c in G.conjugacy_classes_of_subgroups() if G.centralizer(c.representative) in E]
    else:
        raise ValueError(f"unknown decomposition {which!r}")
    m = marks_of(x)
    return SupportReport(all(m[c.number] == 1 for c in required), required, m)


def sum_rule(f: InductionFormula) -> Fraction:
    """Value of the formula at the identity, sum of coefficient * |G:H|; 1 for a true formula."""
    G = f.group
    return sum((c * (G.order // cls.order) for cls, c in f.terms), Fraction(0))


# -- restriction and canonicity ---------------------------------------------


def mackey_restrict_formula(f: InductionFormula, K: Subgroup | PermGroup) -> InductionFormula:
    """Restrict every ind_H^G(1) to K by the Mackey formula and collect like terms."""
    x = restrict(f.element, K)
    return InductionFormula(x.group, x, f.decomposition, None, f.ring, None)


Builder = Callable[[PermGroup], SubgroupCollection]


def _centralizers_of_cyclic(G: PermGroup) -> SubgroupCollection:
    return centralizer_collection(cyclic_subgroups(G))


def _subgroup_closed_cyclic(G: PermGroup) -> SubgroupCollection:
    return subgroup_closure(cyclic_subgroups(G))


BUILDERS: dict[str, tuple[Builder, Which]] = {
    "subgroup-closed-cyclic": (_subgroup_closed_cyclic, "subgroup"),
    "centralizers-of-cyclic": (_centralizers_of_cyclic, "centralizer"),
    "cyclic": (cyclic_subgroups, "subgroup"),
    "all": (all_subgroups, "subgroup"),
}


@dataclass
class CanonicityReport:
    canonical: bool
    restricted: InductionFormula
    direct: InductionFormula


def canonicity_check(G: PermGroup, builder: str | tuple[Builder, Which], K: Subgroup | PermGroup) -> CanonicityReport:
    """Compare the Mackey restriction of G's formula with the formula the same
    recipe produces directly for K."""
    build, which = BUILDERS[builder] if isinstance(builder, str) else builder
    KG = G.as_group(K) if isinstance(K, Subgroup) else K
    restricted = mackey_restrict_formula(formula(G, build(G), which), KG)
    direct = formula(KG, build(KG), which)
    return CanonicityReport(restricted.same_terms(direct), restricted, direct)


# -- formal wedge decomposition ----------------------------------------------


def wedge_report(f: InductionFormula, p: int) -> dict:
    """Coefficient list of the formal wedge splitting of the p-completed BG
    into p-completed classifying spaces of centralizers.

    No topology is computed. The hypothesis (E contains C_G(K) whenever
    K/O_p(K) is cyclic) is checked and reported.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if f.decomposition != "centralizer":
        raise ValueError("wedge reports need a centralizer-decomposition formula")
    G = f.group
    if f.collection is None:
        ok = None
    else:
        ok = contains_required(f.collection, RingSpec(frozenset([p])), "centralizer")
    terms = f.terms
    denom = math.lcm(*(c.denominator for _, c in terms)) if terms else 1
    left, right = [], []
    for cls, c in terms:
        n = c * denom
        entry = {"centralizer": _subgroup_name(cls.representative), "multiplicity": fmt_rational(abs(n))}
        (right if n > 0 else left).append(entry)
    return {
        "group": G.name,
        "prime": p,
        "hypothesis_ok": ok,
        "warning": None if ok else "collection does not contain the centralizers required for this prime",
        "wedge": [
            {"centralizer": _subgroup_name(cls.representative), "order": cls.order, "coefficient": fmt_rational(c)}
            for cls, c in terms
        ],
        "cleared": {"scale": denom, "lhs_extra": left, "rhs": right},
    }


def centralizer_weights_by_class(E: SubgroupCollection) -> list[tuple[SubgroupClass, Fraction, Fraction]]:
    """Per class of H in E: (class, t(H), class_size * t(H))."""
    t = fusion_coweighting(E)
    return [(c, t[c.representative], c.size * t[c.representative]) for c in E.classes]


def translate_formula(f: InductionFormula, target: PermGroup) -> InductionFormula:
    """The same formula for an equal group given by a different PermGroup object."""
    coords: dict[int, Fraction] = {}
    for cls, c in f.terms:
        n = target.class_of(translate(cls.representative, target)).number
        coords[n] = coords.get(n, 0) + c
    return InductionFormula(target, BurnsideElement(target, coords), f.decomposition, None, f.ring, f.hypothesis_ok)
