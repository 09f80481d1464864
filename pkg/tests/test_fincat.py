from fractions import Fraction

import pytest

from burnside_induction.exactnum import Polynomial, RationalFunction
from burnside_induction.fincat import (
    FinCat,
    NoSkeletalInversion,
    NotInLocalization,
    discrete,
    euler_char,
    from_poset,
    idempotent_e,
    mat_mul,
    nerve_count,
    one_object,
    series_euler,
    series_generating,
    skeletal_coweighting,
    skeletal_nu,
    skeletal_weighting,
)
from burnside_induction.poset import boolean_lattice, chain, chain_euler_char, mobius
from corpus import category_corpus

t = Polynomial.t()
CORPUS = category_corpus()


def test_validation():
    with pytest.raises(ValueError):
        FinCat(["a"], [[0]])
    with pytest.raises(ValueError):
        FinCat(["a", "b"], [[1, 2], [1, 1]], [[0, 1]])
    with pytest.raises(ValueError):
        FinCat(["a", "b"], [[1, 0], [0, 1]], [[0]])


def test_idempotent_e():
    assert idempotent_e(discrete(2)) == [[1, 0], [0, 1]]
    g = FinCat(["a", "b"], [[1, 1], [1, 1]], [[0, 1]])
    assert idempotent_e(g) == [[Fraction(1, 2)] * 2] * 2


@pytest.mark.parametrize("name,C", CORPUS, ids=[n for n, _ in CORPUS])
def test_e_zeta_invariance(name, C):
    e = idempotent_e(C)
    assert mat_mul(e, C.zeta) == mat_mul(C.zeta, e) == [[Fraction(v) for v in row] for row in C.zeta]


def test_skeletal_nu_examples():
    assert skeletal_nu(one_object(1)) == [[1]]
    g = FinCat(["a", "b"], [[1, 1], [1, 1]], [[0, 1]])
    assert skeletal_nu(g) == [[Fraction(1, 4)] * 2] * 2
    P = boolean_lattice(2)
    assert skeletal_nu(from_poset(P)) == mobius(P)


def test_no_inversion():
    C = FinCat(["a", "b"], [[1, 1], [1, 1]])
    with pytest.raises(NoSkeletalInversion):
        skeletal_nu(C)


def test_weightings():
    assert set(skeletal_weighting(discrete(3)).values()) == {1}
    assert skeletal_weighting(one_object(6)) == {"*": Fraction(1, 6)}
    assert euler_char(one_object(6)) == Fraction(1, 6)
    assert euler_char(discrete(5)) == 5
    g = FinCat(["a", "b"], [[1, 1], [1, 1]], [[0, 1]])
    assert euler_char(g) == euler_char(one_object(1)) == 1


@pytest.mark.parametrize("name,C", CORPUS, ids=[n for n, _ in CORPUS])
def test_weighting_equations(name, C):
    k = skeletal_weighting(C)
    c = skeletal_coweighting(C)
    n = len(C)
    obj = C.objects
    assert all(sum(C.zeta[x][y] * k[obj[y]] for y in range(n)) == 1 for x in range(n))
    assert all(sum(c[obj[x]] * C.zeta[x][y] for x in range(n)) == 1 for y in range(n))
    assert skeletal_weighting(C.opposite()) == c
    assert sum(k.values()) == sum(c.values()) == euler_char(C)


def test_series_examples():
    for n in range(1, 25):
        C = one_object(n)
        assert series_generating(C) == RationalFunction(1, 1 - (n - 1) * t)
        assert series_euler(C) == Fraction(1, n)
    assert series_generating(from_poset(chain(2))) == RationalFunction(t + 2)
    assert series_generating(discrete(4)) == RationalFunction(4)


def test_series_pole():
    # hom-size data with f = (2 + 3t) / ((1 - 3t)(1 + t))
    C = FinCat(["a", "b"], [[2, 1], [4, 2]], ei=False)
    f = series_generating(C)
    assert f == RationalFunction(2 + 3 * t, (1 - 3 * t) * (1 + t))
    assert not f.regular_at(-1)
    with pytest.raises(NotInLocalization):
        series_euler(C)


def test_nerve_counts():
    assert nerve_count(one_object(3), 4) == 16
    assert nerve_count(discrete(5), 0) == 5
    assert nerve_count(from_poset(boolean_lattice(2)), 2) == 2


@pytest.mark.parametrize("name,C", CORPUS, ids=[n for n, _ in CORPUS])
def test_taylor_matches_nerve_counts(name, C):
    coeffs = series_generating(C).taylor(20)
    assert coeffs == [nerve_count(C, n) for n in range(21)]


@pytest.mark.parametrize("name,C", CORPUS, ids=[n for n, _ in CORPUS])
def test_series_euler_equals_euler(name, C):
    assert series_euler(C) == euler_char(C)


def test_poset_series_is_chain_sum():
    for P in [chain(3), boolean_lattice(2), boolean_lattice(3)]:
        f = series_generating(from_poset(P))
        assert f.den == Polynomial.const(1)
        assert series_euler(from_poset(P)) == chain_euler_char(P)


def test_json_round_trip():
    C = FinCat(["a", "b"], [[2, 2], [2, 2]], [[0, 1]], ei=True)
    D = FinCat.from_json(C.to_json())
    assert D.zeta == C.zeta and D.iso_classes == C.iso_classes
