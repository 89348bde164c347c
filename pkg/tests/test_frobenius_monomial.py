import math
from fractions import Fraction as F
from itertools import product

import pytest
from hypothesis import given, strategies as st

from hkmult.errors import CapacityError, DomainError, InfiniteColengthError
from hkmult.frobenius import (
    MonomialIdeal,
    frobenius_power,
    ideal_product,
    monomial_colength,
    ordinary_power,
    ordinary_power_colength,
    staircase_enumeration,
    standard_monomials,
)


@st.composite
def primary_ideals(draw, max_vars=4, max_exp=6):
    n = draw(st.integers(1, max_vars))
    gens = [tuple(draw(st.integers(1, max_exp)) if j == i else 0 for j in range(n)) for i in range(n)]
    extra = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * n), max_size=5))
    gens += [g for g in extra if any(g)]
    return MonomialIdeal(n, tuple(gens))


def test_reference_colengths():
    i = MonomialIdeal.of((2, 0), (1, 1), (0, 3))
    assert monomial_colength(i) == 4
    assert set(standard_monomials(i)) == {(0, 0), (1, 0), (0, 1), (0, 2)}
    assert frobenius_power(i, 2).generators == ((0, 6), (2, 2), (4, 0))
    assert monomial_colength(frobenius_power(i, 2)) == 16
    assert monomial_colength(MonomialIdeal.maximal(3)) == 1


def test_frobenius_identity_and_maximal():
    i = MonomialIdeal.of((2, 1), (0, 3), (5, 0))
    assert frobenius_power(i, 1) == i
    assert frobenius_power(MonomialIdeal.maximal(2), 3).generators == ((0, 3), (3, 0))
    with pytest.raises(DomainError):
        frobenius_power(i, 0)


def test_minimal_generators():
    i = MonomialIdeal.of((2, 0), (3, 1), (2, 2), (0, 1))
    assert i.generators == ((0, 1), (2, 0))
    assert i.contains((5, 0)) and not i.contains((1, 0))
    with pytest.raises(DomainError):
        MonomialIdeal(2, ((1, 2, 3),))


def test_infinite_colength():
    with pytest.raises(InfiniteColengthError):
        monomial_colength(MonomialIdeal.of((2, 0), (1, 1)))
    with pytest.raises(InfiniteColengthError):
        ordinary_power_colength(MonomialIdeal.of((1, 1)), 2)


@given(primary_ideals())
def test_recursion_matches_enumeration(ideal):
    assert monomial_colength(ideal) == staircase_enumeration(ideal) == len(standard_monomials(ideal))


@given(primary_ideals(), st.sampled_from([2, 3, 4, 5, 8, 9]))
def test_scaling_law(ideal, q):
    assert monomial_colength(frobenius_power(ideal, q)) == q ** ideal.nvars * monomial_colength(ideal)


def test_enumeration_cap():
    with pytest.raises(CapacityError):
        staircase_enumeration(MonomialIdeal.of((1000, 0), (0, 1000)), max_points=10)


def test_ordinary_powers():
    m3 = MonomialIdeal.maximal(3)
    for n in range(1, 8):
        assert ordinary_power_colength(m3, n) == math.comb(n + 2, 3)
    assert ordinary_power_colength(MonomialIdeal.maximal(2), 5) == 15
    assert ordinary_power_colength(MonomialIdeal.of((2, 0), (0, 1)), 2) == 6
    assert ordinary_power(MonomialIdeal.of((2, 0), (0, 1)), 2).generators == ((0, 2), (2, 1), (4, 0))


@given(primary_ideals(max_vars=3, max_exp=4), st.integers(1, 4))
def test_ordinary_power_fast_path_matches_product(ideal, n):
    direct = ideal
    for _ in range(n - 1):
        direct = ideal_product(direct, ideal)
    assert ordinary_power_colength(ideal, n) == monomial_colength(direct)


@pytest.mark.parametrize("s", [F(1), F(3, 2), F(2)])
@pytest.mark.parametrize("q", [16, 64])
def test_ordinary_power_asymptotics(s, q):
    d = 3
    n = math.ceil(s * q)
    ratio = F(ordinary_power_colength(MonomialIdeal.maximal(d), n), q ** d)
    assert abs(ratio - s ** d / 6) <= F(2 * d, q)


def test_brute_standard_count():
    i = MonomialIdeal.of((3, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 1))
    brute = sum(1 for m in product(range(3), range(2), range(2)) if not i.contains(m))
    assert monomial_colength(i) == brute == 10
