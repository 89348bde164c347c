import pytest
from hypothesis import given, strategies as st

from hkmult.errors import SpecParseError
from hkmult.frobenius import FpPoly, RingKind, discover_variables, parse_poly, parse_ring_spec


def test_parse_forms():
    names = ["x", "y", "z"]
    a = parse_poly("x^2 - 3*y*z + yz", 5, names)
    assert a.terms == {(2, 0, 0): 1, (0, 1, 1): 3}
    assert parse_poly("2x^2y", 7, names).terms == {(2, 1, 0): 2}
    assert parse_poly("-1", 3, names).terms == {(0, 0, 0): 2}
    assert parse_poly("x0x1 + x1^3", 3, ["x0", "x1"]).terms == {(1, 1): 1, (0, 3): 1}
    assert not parse_poly("3x", 3, names)


@pytest.mark.parametrize("bad", ["", "x^", "x + (y)", "x ^ y", "w"])
def test_parse_errors(bad):
    with pytest.raises(SpecParseError):
        parse_poly(bad, 3, ["x", "y"])


def test_discover_variables():
    assert discover_variables(["y^2 + x", "z*x"]) == ["y", "x", "z"]


polys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-10, 10), max_size=6).map(
    lambda d: FpPoly(5, 2, d)
)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == FpPoly(5, 2)


@given(polys, polys, st.integers(1, 6))
def test_truncated_product(a, b, q):
    assert a.mul(b, q) == (a * b).truncate(q) == a.truncate(q).mul(b.truncate(q), q)


@given(polys, st.integers(0, 5), st.integers(1, 6))
def test_truncated_power(a, e, q):
    direct = FpPoly.monomial(5, (0, 0))
    for _ in range(e):
        direct = direct * a
    assert a.pow(e, q) == direct.truncate(q)


@given(polys)
def test_format_roundtrip(a):
    assert parse_poly(a.format(["x", "y"]), 5, ["x", "y"]) == a


def test_properties():
    f = parse_poly("x^2 + y^3", 5, ["x", "y"])
    assert f.degree == 3 and f.order == 2
    assert not f.is_homogeneous() and f.is_homogeneous((3, 2))
    with pytest.raises(ValueError):
        f + FpPoly(7, 2, {(1, 0): 1})
    with pytest.raises(ValueError):
        FpPoly(3, 2, {(1,): 1})


def test_spec_examples():
    s = parse_ring_spec("monomial{p=3; vars=x,y; gens=x^2, x*y, y^3}")
    assert s.kind is RingKind.MONOMIAL and s.dim == 2 and s.payload.generators == ((0, 3), (1, 1), (2, 0))
    s = parse_ring_spec("quadric{p=3; d=3; phi=y^2+z^2+w^2}")
    assert s.kind is RingKind.QUADRIC and s.dim == 3 and s.names == ("y", "z", "w")
    s = parse_ring_spec("hypersurface{p=5; f=x0^2+x1^3+x2^3+x3^3}")
    assert s.kind is RingKind.HYPERSURFACE and s.dim == 3 and s.variables == 4
    s = parse_ring_spec("scroll{n=1}")
    assert s.kind is RingKind.SCROLL and s.payload == 1 and s.p is None and s.dim == 3


def test_spec_whitespace_and_padding():
    a = parse_ring_spec("  quadric {\n p = 3 ;d=3;  phi = y ^ 2 + z*w ; }")
    b = parse_ring_spec("quadric{p=3;d=3;phi=y^2+zw}")
    assert a == b
    padded = parse_ring_spec("quadric{p=5; d=3; phi=yz}")
    assert padded.variables == 3 and len(padded.names) == 3


@pytest.mark.parametrize(
    "text",
    [
        "monomial{p=3; gens=x^2+y}",
        "monomial{p=4; gens=x}",
        "monomial{p=2; gens=x}",
        "quadric{p=3; d=1; phi=y^2+z^2}",
        "quadric{p=3; d=2; phi=x0^2+y^2}",
        "quadric{p=3; phi=y^2}",
        "torus{n=1}",
        "scroll{n=-1}",
        "scroll{n=1; q=3}",
        "scroll{n=1; n=2}",
        "hypersurface{p=3; f=3x}",
        "hypersurface p=3",
        "monomial{p=3; vars=x,x; gens=x}",
    ],
)
def test_spec_errors(text):
    with pytest.raises(SpecParseError):
        parse_ring_spec(text)


@pytest.mark.parametrize(
    "text",
    [
        "monomial{p=3; vars=x,y; gens=x^2, x*y, y^3}",
        "quadric{p=3; d=3; phi=y^2+z^2+w^2}",
        "hypersurface{p=5; f=x0^2+x1^3+x2^3+x3^3}",
        "scroll{n=2}",
        "scroll{n=2; p=5}",
    ],
)
def test_spec_format_roundtrip(text):
    s = parse_ring_spec(text)
    assert parse_ring_spec(str(s)) == s
