import math
from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, strategies as st

from hkmult.arith import poly_antiderivative, poly_eval, poly_from_shift
from hkmult.errors import DomainError
from hkmult.volumes import (
    SlabSpec,
    beta,
    beta_numeric,
    beta_via_volume,
    box_simplex_complement,
    box_simplex_volume,
    slab_grid_count,
    weighted_slab_volume,
)

# beta(6) from the alternating sum, the slab volume and a 30-digit quadrature
BETA = [F(1), F(1), F(3, 4), F(2, 3), F(115, 192), F(11, 20), F(5887, 11520), F(151, 315), F(259723, 573440)]


def irwin_hall_cdf(d, s):
    """P(U_1 + ... + U_d <= s) by exact repeated convolution of densities."""
    # density pieces on [j, j+1), polynomials in x
    dens = [(F(1),)]
    for k in range(1, d):
        cdf_pieces, acc = [], F(0)
        for j, piece in enumerate(dens):
            anti = poly_antiderivative(piece)
            shift = acc - poly_eval(anti, F(j))
            cdf_pieces.append(tuple(c + (shift if i == 0 else 0) for i, c in enumerate(anti)) or (shift,))
            acc = poly_eval(cdf_pieces[-1], F(j + 1))

        def cdf(x, pieces=cdf_pieces, top=k):
            if x <= 0:
                return F(0)
            if x >= top:
                return F(1)
            return poly_eval(pieces[math.floor(x)], x)

        new = []
        for j in range(k + 1):
            # density of the next sum on [j, j+1) is CDF(x) - CDF(x - 1)
            lo = cdf_pieces[j] if j < k else (F(1),)
            hi = poly_from_shift(cdf_pieces[j - 1], 1) if j >= 1 else ()
            n = max(len(lo), len(hi))
            new.append(tuple((lo[i] if i < len(lo) else 0) - (hi[i] if i < len(hi) else 0) for i in range(n)))
        dens = new
    if s <= 0:
        return F(0)
    if s >= d:
        return F(1)
    total = F(0)
    for j in range(math.floor(s) + 1):
        anti = poly_antiderivative(dens[j])
        total += poly_eval(anti, min(s, F(j + 1))) - poly_eval(anti, F(j))
    return total


def test_reference_values():
    assert box_simplex_volume(3, 1) == F(1, 6)
    assert box_simplex_volume(4, 2) == F(1, 2)
    assert box_simplex_volume(4, F(3, 2)) == F(77, 384)
    assert box_simplex_complement(3, F(3, 2)) == F(1, 2)
    assert box_simplex_volume(2, -1) == 0
    assert box_simplex_volume(2, 7) == 1


@pytest.mark.parametrize("d", range(1, 7))
def test_box_simplex_matches_convolution(d):
    for k in range(0, 4 * d + 1):
        s = F(k, 4)
        assert box_simplex_volume(d, s) == irwin_hall_cdf(d, s)


rat_in = st.fractions(min_value=0, max_value=8, max_denominator=50)


@given(st.integers(1, 8), rat_in)
def test_volume_identities(d, s):
    s = min(s, F(d))
    assert box_simplex_volume(d, s) + box_simplex_complement(d, s) == 1
    assert box_simplex_complement(d, d - s) == box_simplex_volume(d, s)
    if s <= 1:
        assert box_simplex_volume(d, s) == s ** d / math.factorial(d)


@given(st.integers(1, 8), rat_in, rat_in)
def test_volume_monotone(d, a, b):
    a, b = sorted((a, b))
    assert box_simplex_volume(d, a) <= box_simplex_volume(d, b)


def test_half_dimension():
    for d in range(1, 9):
        assert box_simplex_volume(d, F(d, 2)) == F(1, 2)


def test_weighted_slab_reference():
    assert weighted_slab_volume(SlabSpec((F(1, 2), F(1, 2), F(1, 2), F(1, 3)), F(2, 3))) == F(237, 1296)
    assert weighted_slab_volume(SlabSpec((F(1, 3),) * 3, F(1, 4))) == F(9, 128)


@given(st.integers(1, 6), rat_in)
def test_unit_weights_give_box_simplex(d, t):
    assert weighted_slab_volume(SlabSpec((F(1),) * d, t)) == box_simplex_volume(d, t)


@pytest.mark.parametrize(
    "weights, t",
    [((F(1, 2), F(1, 2), F(1, 2), F(1, 3)), F(2, 3)), ((F(1, 3),) * 3, F(1, 4)), ((F(1), F(2), F(1, 5)), F(6, 5))],
)
def test_weighted_slab_against_grid(weights, t):
    exact = weighted_slab_volume(SlabSpec(weights, t))
    m = 60 if len(weights) == 4 else 200
    approx = slab_grid_count(weights, t, m)
    assert abs(float(exact - approx)) < 4 * len(weights) / m


def test_slab_validation():
    with pytest.raises(DomainError):
        SlabSpec((F(1), F(0)), F(1))
    with pytest.raises(DomainError):
        SlabSpec((), F(1))
    with pytest.raises(DomainError):
        weighted_slab_volume(SlabSpec((F(1),) * 25, F(3)))


@pytest.mark.parametrize("d", range(0, 9))
def test_beta_alternating_sum(d):
    assert beta(d) == BETA[d]


@pytest.mark.parametrize("d", range(1, 9))
def test_beta_routes_agree(d):
    assert beta_via_volume(d) == beta(d)


@pytest.mark.parametrize("d", range(0, 9))
def test_beta_numeric(d):
    assert abs(beta_numeric(d) - float(beta(d))) < 1e-9


@pytest.mark.parametrize("d", [1, 2, 4, 6])
def test_beta_against_mpmath(d):
    mpmath.mp.dps = 30
    m = d + 1
    val = 2 * mpmath.quadosc(lambda t: mpmath.sinc(t) ** m, [0, mpmath.inf], period=2 * mpmath.pi) / mpmath.pi
    assert abs(val - mpmath.mpf(beta(d).numerator) / beta(d).denominator) < mpmath.mpf(10) ** -20


def test_beta_domain():
    with pytest.raises(DomainError):
        beta(-1)
    with pytest.raises(DomainError):
        beta_via_volume(0)
    with pytest.raises(DomainError):
        beta_numeric(2, steps=10)
