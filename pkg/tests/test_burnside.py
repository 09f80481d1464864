import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burnside_induction.burnside import (
    BurnsideElement,
    collection_idempotent,
    from_idempotent_coords,
    induce,
    marks_of,
    primitive_idempotent,
    restrict,
    table_of_marks,
    to_idempotent_coords,
    translate,
)
from burnside_induction.permgroup import named_group
from corpus import SMALL_GROUPS, s4_named_subgroups


def test_c2_marks():
    G = named_group("C2")
    assert table_of_marks(G).marks == ((2, 0), (1, 1))


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_table_of_marks_shape(name):
    G = named_group(name)
    tom = table_of_marks(G)
    M = tom.marks
    reps = [c.representative for c in tom.classes]
    n = len(reps)
    assert all(v == 1 for v in M[-1])
    assert [M[i][0] for i in range(n)] == [G.order // H.order for H in reps]
    for i in range(n):
        assert M[i][i] > 0
        for j in range(n):
            if reps[i].order % reps[j].order:
                assert M[i][j] == 0
            if j > i:
                assert M[i][j] == 0


def test_basic_elements():
    G = named_group("S4")
    n = len(table_of_marks(G).classes)
    assert marks_of(BurnsideElement.one(G)) == [1] * n
    assert marks_of(BurnsideElement.transitive(G, G.trivial)) == [24] + [0] * (n - 1)
    assert to_idempotent_coords(BurnsideElement.one(G)) == [1] * n


def test_c2_idempotents():
    G = named_group("C2")
    e1 = primitive_idempotent(G, 0)
    e2 = primitive_idempotent(G, 1)
    assert e1 == BurnsideElement(G, {0: Fraction(1, 2)})
    assert e2 == BurnsideElement(G, {0: Fraction(-1, 2), 1: 1})
    assert marks_of(e2) == [0, 1]
    assert collection_idempotent(G, [G.trivial]) == e1


def test_collection_idempotent_extremes():
    for name in ["S3", "A4", "S4"]:
        G = named_group(name)
        assert collection_idempotent(G, G.all_subgroups()) == BurnsideElement.one(G)
        assert collection_idempotent(G, []) == BurnsideElement.zero(G)


def random_element(G, rng):
    n = len(G.conjugacy_classes_of_subgroups())
    return BurnsideElement(G, {i: Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for i in range(n) if rng.random() < 0.6})


@pytest.mark.parametrize("name", ["C6", "S3", "D8", "A4", "S4"])
def test_idempotent_round_trip(name):
    G = named_group(name)
    rng = random.Random(name)
    for _ in range(100):
        x = random_element(G, rng)
        assert from_idempotent_coords(G, to_idempotent_coords(x)) == x


@pytest.mark.parametrize("name", ["S3", "A4", "S4"])
def test_multiplication_is_pointwise_on_marks(name):
    G = named_group(name)
    rng = random.Random(name)
    for _ in range(20):
        x, y = random_element(G, rng), random_element(G, rng)
        assert marks_of(x * y) == [a * b for a, b in zip(marks_of(x), marks_of(y))]


def test_transitive_products_are_integral():
    G = named_group("S4")
    sub = s4_named_subgroups(G)
    x = BurnsideElement.transitive(G, sub["D8"]) * BurnsideElement.transitive(G, sub["C3"])
    assert all(c.denominator == 1 and c > 0 for c in x.coords.values())
    # |G/D8 x G/C3| = 3 * 8
    assert sum(c * (24 // cls.order) for cls, c in x.terms()) == 24


def test_collection_idempotent_squares_to_itself():
    G = named_group("S4")
    for c in G.conjugacy_classes_of_subgroups():
        below = [K for K in G.all_subgroups() if any(K <= H for H in c.members)]
        e = collection_idempotent(G, below)
        assert e * e == e


def test_restrict_examples():
    G = named_group("S4")
    sub = s4_named_subgroups(G)
    A4 = G.as_group(sub["A4"])
    r = restrict(BurnsideElement.transitive(G, sub["D8"]), A4)
    assert r == BurnsideElement.transitive(A4, translate(sub["V4''"], A4))
    assert restrict(BurnsideElement.one(G), A4) == BurnsideElement.one(A4)
    assert restrict(BurnsideElement.transitive(G, G.trivial), A4) == BurnsideElement.transitive(A4, A4.trivial).scale(2)


def test_induce_examples():
    G = named_group("S4")
    sub = s4_named_subgroups(G)
    K = G.as_group(sub["D8"])
    assert induce(BurnsideElement.one(K), G) == BurnsideElement.transitive(G, sub["D8"])
    assert induce(BurnsideElement.transitive(K, K.trivial), G) == BurnsideElement.transitive(G, G.trivial)


@pytest.mark.parametrize("name", ["S3", "D8", "A4", "S4", "D12"])
def test_restriction_preserves_marks(name):
    G = named_group(name)
    rng = random.Random(name)
    for K in rng.sample(G.all_subgroups(), 5):
        KG = G.as_group(K)
        x = random_element(G, rng)
        r = restrict(x, KG)
        mG = marks_of(x)
        mK = marks_of(r)
        for c in KG.conjugacy_classes_of_subgroups():
            L = translate(c.representative, G)
            assert mK[c.number] == mG[G.class_of(L).number]


def _orbit_oracle(G, K, H):
    """Stabilizer-class multiset of K acting on G/H, by explicit orbit search on cosets."""
    cosets = {frozenset(g * h for h in H.elements) for g in G.elements}
    seen = set()
    KG = G.as_group(K)
    out = {}
    for c in sorted(cosets, key=lambda s: min(x.images for x in s)):
        if c in seen:
            continue
        orbit = {frozenset(k * x for x in c) for k in K.elements}
        seen |= orbit
        stab = [k for k in K.elements if frozenset(k * x for x in c) == c]
        n = KG.class_of(KG.subgroup_from_elements(stab)).number
        out[n] = out.get(n, 0) + 1
    return BurnsideElement(KG, out), KG


def test_mackey_against_orbit_oracle():
    rng = random.Random(7)
    names = ["S3", "D8", "Q8", "A4", "S4", "D12", "C12", "D24"]
    for _ in range(20):
        G = named_group(rng.choice(names))
        K = rng.choice(G.all_subgroups())
        L = rng.choice(G.all_subgroups())
        expected, KG = _orbit_oracle(G, K, L)
        assert restrict(BurnsideElement.transitive(G, L), KG) == expected


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["S3", "A4", "S4"]), st.lists(st.fractions(max_denominator=5, min_value=-4, max_value=4), min_size=11, max_size=11))
def test_round_trip_from_idempotents(name, values):
    G = named_group(name)
    n = len(G.conjugacy_classes_of_subgroups())
    v = values[:n]
    assert to_idempotent_coords(from_idempotent_coords(G, v)) == v


def test_json_records():
    G = named_group("S3")
    x = BurnsideElement(G, {0: Fraction(-1, 2), 3: 1})
    recs = x.to_records()
    assert [r["coefficient"] for r in recs] == ["-1/2", "1"]
    assert recs[0]["order"] == 1 and recs[1]["index"] == 1
