from fractions import Fraction

import pytest

from burnside_induction.burnside import BurnsideElement, collection_idempotent, marks_of, restrict, translate
from burnside_induction.decomposition import (
    SubgroupCollection,
    fixed_point_poset,
    fusion_category,
    fusion_coweighting,
    fusion_coweighting_by_intervals,
    grothendieck_lefschetz,
    idempotent_expansion_reduced,
    lefschetz_centralizer,
    lefschetz_centralizer_via_category,
    lefschetz_subgroup,
    lefschetz_subgroup_via_category,
    marks_by_fixed_points,
    orbit_category,
    orbit_weighting,
    orbit_weighting_by_intervals,
    reduced,
)
from burnside_induction.fincat import euler_char, skeletal_coweighting, skeletal_weighting
from burnside_induction.induction import all_subgroups, centralizer_collection, cyclic_subgroups
from burnside_induction.permgroup import GroupError, named_group
from burnside_induction.poset import euler_char as poset_chi
from corpus import collection_recipes, s4_named_subgroups

GROUPS = ["C2", "C6", "V4", "S3", "D8", "Q8", "A4", "D12", "S4"]


def test_collection_must_be_closed():
    G = named_group("S4")
    H = s4_named_subgroups(G)["C2'"]
    with pytest.raises(GroupError):
        SubgroupCollection(G, [H])
    with pytest.warns(UserWarning):
        E = SubgroupCollection.closed(G, [H])
    assert len(E) == 6


def test_orbit_category_examples():
    G = named_group("C2")
    assert orbit_category(SubgroupCollection(G, [G.whole])).zeta == [[1]]
    assert orbit_category(SubgroupCollection(G, [G.trivial])).zeta == [[2]]
    assert orbit_category(all_subgroups(G)).zeta == [[2, 1], [0, 1]]


def test_fusion_category_examples():
    G = named_group("S4")
    assert fusion_category(SubgroupCollection(G, [G.trivial])).zeta == [[1]]
    E = SubgroupCollection.closed(G, [s4_named_subgroups(G)["C2'"]], warn=False)
    C = fusion_category(E)
    # N_G(<(0 1)>) = C_G(<(0 1)>) has order 4, and a group of order 2 has no automorphisms
    assert all(C.zeta[i][i] == 1 for i in range(len(C)))
    assert G.normalizer(E.members[0]).order == 4
    for name in ["C3", "C4", "V4''", "D8"]:
        D = fusion_category(SubgroupCollection.closed(G, [s4_named_subgroups(G)[name]], warn=False))
        for i, H in enumerate(D.objects):
            assert D.zeta[i][i] == G.normalizer(H).order // G.centralizer(H).order
    V = fusion_category(SubgroupCollection(G, [s4_named_subgroups(G)["V4''"]]))
    assert V.zeta == [[6]]


def test_orbit_weighting_examples():
    G = named_group("S4")
    assert orbit_weighting(SubgroupCollection(G, [G.whole])) == {G.whole: 1}
    V4 = named_group("V4")
    k = orbit_weighting(cyclic_subgroups(V4))
    assert k[V4.trivial] == Fraction(-1, 2)
    assert [v for H, v in k.items() if H.order == 2] == [Fraction(1, 2)] * 3
    C5 = named_group("C5")
    assert orbit_weighting(cyclic_subgroups(C5)) == {C5.trivial: 0, C5.whole: 1}


def test_fusion_coweighting_worked_example():
    G = named_group("S4")
    sub = s4_named_subgroups(G)
    E = centralizer_collection(cyclic_subgroups(G))
    t = fusion_coweighting(E)
    expected = {"D8": Fraction(-1, 12), "V4'": Fraction(1, 6), "C4": Fraction(1, 6), "C3": Fraction(1, 8)}
    assert t[G.whole] == Fraction(-6, 24)
    for name, v in expected.items():
        for K in G.class_of(sub[name]).members:
            assert t[K] == v


def test_fusion_coweighting_a4():
    A4 = named_group("A4")
    E = SubgroupCollection.from_classes(A4, [c for c in A4.conjugacy_classes_of_subgroups() if c.order in (3, 4, 12)])
    t = fusion_coweighting(E)
    assert {H.order: v for H, v in t.items()} == {12: Fraction(-4, 12), 4: Fraction(1, 3), 3: Fraction(1, 4)}


def test_minimal_members_have_simple_coweight():
    for name in GROUPS:
        G = named_group(name)
        E = cyclic_subgroups(G)
        t = fusion_coweighting(E)
        assert t[G.trivial] == Fraction(1, 1)


def test_grothendieck_constant_functor():
    G = named_group("S3")
    E = cyclic_subgroups(G)
    C = orbit_category(E)
    x = grothendieck_lefschetz(G, C, {H: G.whole for H in E})
    assert x == BurnsideElement.one(G).scale(euler_char(C))
    # a two-point G-set is a disjoint union of two one-point sets
    y = grothendieck_lefschetz(G, C, {H: [G.whole, G.whole] for H in E})
    assert y == x.scale(2)


def test_lefschetz_examples():
    G = named_group("S4")
    sub = s4_named_subgroups(G)
    one = BurnsideElement.one(G)
    assert lefschetz_subgroup(SubgroupCollection(G, [G.whole])) == one
    assert lefschetz_subgroup(all_subgroups(G)) == one
    C6 = named_group("C6")
    assert lefschetz_centralizer(SubgroupCollection(C6, [C6.whole])) == BurnsideElement.one(C6)
    L = lefschetz_centralizer(centralizer_collection(cyclic_subgroups(G)))
    expected = {
        G.trivial: Fraction(-1, 4), sub["C2''"]: Fraction(-1, 4), sub["V4'"]: Fraction(1, 2),
        sub["C4"]: Fraction(1, 2), sub["C3"]: Fraction(1, 2),
    }
    assert L == BurnsideElement(G, {G.class_of(H).number: v for H, v in expected.items()})
    # C_G(1) = G lies in E, C_G(G) = 1 does not
    assert marks_of(L)[0] == 1
    assert marks_of(L)[-1] == 0


def test_lefschetz_v4_cyclic():
    V4 = named_group("V4")
    L = lefschetz_subgroup(cyclic_subgroups(V4))
    assert L.coefficient(V4.trivial) == Fraction(-1, 2)
    assert [c for cls, c in L.terms() if cls.order == 2] == [Fraction(1, 2)] * 3


def test_idempotent_expansion_examples():
    G = named_group("S4")
    sub = s4_named_subgroups(G)
    E = cyclic_subgroups(G)
    v = idempotent_expansion_reduced(E, "subgroup")
    classes = G.conjugacy_classes_of_subgroups()
    for c in classes:
        if c.representative in E:
            assert v[c.number] == 0
    assert v[G.class_of(sub["V4'"]).number] == -1
    F = centralizer_collection(E)
    w = idempotent_expansion_reduced(F, "centralizer")
    for c in classes:
        if G.centralizer(c.representative) in F:
            assert w[c.number] == 0


def test_fixed_point_poset_examples():
    G = named_group("S4")
    sub = s4_named_subgroups(G)
    E = cyclic_subgroups(G)
    assert len(fixed_point_poset(E, "subgroup", G.trivial)) == len(E)
    assert poset_chi(fixed_point_poset(E, "subgroup", sub["C4"])) == 1
    F = centralizer_collection(E)
    P = fixed_point_poset(F, "centralizer", sub["C2''"])
    assert {H.mask for H in P.labels} == {H.mask for H in F if H <= sub["D8"]}
    assert sorted(H.order for H in P.labels) == [4, 4, 8]


def _all_cases():
    for name in GROUPS:
        G = named_group(name)
        for label, E in collection_recipes(G):
            yield name, label, E


CASES = list(_all_cases())
IDS = [f"{n}-{l}" for n, l, _ in CASES]


@pytest.mark.parametrize("name,label,E", CASES, ids=IDS)
def test_closed_forms_equal_linear_algebra(name, label, E):
    assert orbit_weighting(E) == skeletal_weighting(orbit_category(E))
    assert fusion_coweighting(E) == skeletal_coweighting(fusion_category(E))
    assert orbit_weighting(E) == orbit_weighting_by_intervals(E)
    assert fusion_coweighting(E) == fusion_coweighting_by_intervals(E)
    assert lefschetz_subgroup(E) == lefschetz_subgroup_via_category(E)
    assert lefschetz_centralizer(E) == lefschetz_centralizer_via_category(E)


@pytest.mark.parametrize("name,label,E", CASES, ids=IDS)
@pytest.mark.parametrize("which", ["subgroup", "centralizer"])
def test_dual_path_marks(name, label, E, which):
    x = lefschetz_subgroup(E) if which == "subgroup" else lefschetz_centralizer(E)
    m = marks_of(x)
    assert m == marks_by_fixed_points(E, which)
    assert [v - 1 for v in m] == idempotent_expansion_reduced(E, which)
    assert marks_of(reduced(x)) == idempotent_expansion_reduced(E, which)


def _subgroup_closed(E):
    return all(K in E for H in E for K in E.group.subgroups_of(H))


@pytest.mark.parametrize("name,label,E", [c for c in CASES if _subgroup_closed(c[2])], ids=[i for i, c in zip(IDS, CASES) if _subgroup_closed(c[2])])
def test_subgroup_closed_collections(name, label, E):
    G = E.group
    L = lefschetz_subgroup(E)
    assert L == collection_idempotent(G, E.members)
    for K in G.all_subgroups():
        KG = G.as_group(K)
        EK = SubgroupCollection(KG, [translate(H, KG) for H in E if H <= K])
        assert restrict(L, KG) == lefschetz_subgroup(EK)
