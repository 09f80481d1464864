"""Shared fixtures data: small groups, collections and categories."""

from __future__ import annotations

from burnside_induction.decomposition import SubgroupCollection, fusion_category, orbit_category
from burnside_induction.fincat import FinCat, discrete, from_poset, one_object
from burnside_induction.induction import (
    RingSpec,
    all_subgroups,
    centralizer_collection,
    cyclic_subgroups,
    primordial_subgroups,
    subgroup_closure,
)
from burnside_induction.permgroup import PermGroup, Permutation, named_group
from burnside_induction.poset import antichain, boolean_lattice, chain

SMALL_GROUPS = ["C1", "C2", "C3", "C4", "V4", "C6", "S3", "D8", "Q8", "C12", "A4", "D10", "D12", "S4"]

RINGS = [RingSpec(), RingSpec(frozenset([2])), RingSpec(frozenset([3])), RingSpec(frozenset([2, 3]))]


def perm(degree: int, text: str) -> Permutation:
    return Permutation.parse(degree, text)


def s4_named_subgroups(G: PermGroup) -> dict:
    """The subgroups of S4 used in the worked example, on points 0..3."""
    p = lambda s: perm(4, s)  # noqa: E731
    return {
        "C2'": G.subgroup([p("(0 1)")]),
        "C2''": G.subgroup([p("(0 1)(2 3)")]),
        "C3": G.subgroup([p("(0 1 2)")]),
        "C4": G.subgroup([p("(0 1 2 3)")]),
        "V4'": G.subgroup([p("(0 1)"), p("(2 3)")]),
        "V4''": G.subgroup([p("(0 1)(2 3)"), p("(0 2)(1 3)")]),
        "D8": G.subgroup([p("(0 1)"), p("(0 2 1 3)")]),
        "A4": G.subgroup([p("(0 1 2)"), p("(0 1)(2 3)")]),
    }


def collection_recipes(G: PermGroup) -> list[tuple[str, SubgroupCollection]]:
    """A spread of conjugation-closed collections of G, deduplicated."""
    out: list[tuple[str, SubgroupCollection]] = []
    seen = set()

    def add(name, E):
        if len(E) and E not in seen:
            seen.add(E)
            out.append((name, E))

    cyc = cyclic_subgroups(G)
    add("cyclic", cyc)
    add("all", all_subgroups(G))
    add("centralizers-of-cyclic", centralizer_collection(cyc))
    for R in RINGS:
        P = primordial_subgroups(G, R)
        add(f"primordial{R.label()}", P)
        add(f"centralizers-of-primordial{R.label()}", centralizer_collection(P))
    nontrivial = SubgroupCollection(G, [H for H in G.all_subgroups() if H.order > 1])
    add("nontrivial", nontrivial)
    proper = SubgroupCollection(G, [H for H in G.all_subgroups() if H.order < G.order])
    add("proper", proper)
    for c in G.conjugacy_classes_of_subgroups():
        add(f"class{c.number}", SubgroupCollection.from_classes(G, [c]))
        add(f"below-class{c.number}", subgroup_closure(SubgroupCollection.from_classes(G, [c])))
    return out


def category_corpus() -> list[tuple[str, FinCat]]:
    cats: list[tuple[str, FinCat]] = []
    for n in range(1, 7):
        cats.append((f"group{n}", one_object(n)))
    cats.append(("monoid3", one_object(3, is_group=False)))
    cats += [("discrete1", discrete(1)), ("discrete4", discrete(4))]
    cats += [("chain2", from_poset(chain(2))), ("chain4", from_poset(chain(4)))]
    cats += [("antichain3", from_poset(antichain(3))), ("B2", from_poset(boolean_lattice(2))), ("B3", from_poset(boolean_lattice(3)))]
    cats.append(("groupoid2", FinCat(["a", "b"], [[1, 1], [1, 1]], [[0, 1]], ei=True)))
    cats.append(("groupoid2xC3", FinCat(["a", "b"], [[3, 3], [3, 3]], [[0, 1]], ei=True)))
    for name in ["C2", "S3", "V4", "A4", "S4"]:
        G = named_group(name)
        for label, E in [("cyclic", cyclic_subgroups(G)), ("all", all_subgroups(G))]:
            cats.append((f"orbit-{name}-{label}", orbit_category(E)))
            cats.append((f"fusion-{name}-{label}", fusion_category(E)))
    return cats
