import pytest
from hypothesis import given
from hypothesis import strategies as st

from merozeta.parser import GermSupport, ParseError, VariableMap, parse_polynomial

XY = VariableMap(("x", "y"))
XYZ = VariableMap(("x", "y", "z"))


def pts(text, vars=XY):
    return set(parse_polynomial(text, vars).points)


def test_example1_numerator():
    assert pts("x^3 - x*y") == {(3, 0), (1, 1)}


def test_example1_denominator():
    assert pts("y") == {(0, 1)}


def test_example2_numerator():
    assert pts("x*y*z + x^7 + y^6 + z^5", XYZ) == {(1, 1, 1), (7, 0, 0), (0, 6, 0), (0, 0, 5)}


def test_exact_cancellation_is_an_error():
    with pytest.raises(ParseError, match="empty support"):
        parse_polynomial("x*y - x*y", XY)


def test_ambient_dim_follows_vars():
    s = parse_polynomial("x", XYZ)
    assert s.ambient_dim == 3
    assert s.points == ((1, 0, 0),)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("2*x + 3*y", {(1, 0), (0, 1)}),
        ("x - 5*y", {(1, 0), (0, 1)}),
        ("-x", {(1, 0)}),
        ("x*x*y", {(2, 1)}),
        ("x^2*y^0", {(2, 0)}),
        ("x + y - x", {(0, 1)}),
        ("1 + x - 1", {(1, 0)}),
        ("  x ^ 2 +\ty  ", {(2, 0), (0, 1)}),
        ("x - -y", {(1, 0), (0, 1)}),
        ("123456789012345678901234567890*x - 123456789012345678901234567890*x + y", {(0, 1)}),
    ],
)
def test_accepted_forms(text, expected):
    assert pts(text) == expected


@pytest.mark.parametrize(
    "text, message",
    [
        ("x + w", "unknown variable 'w'"),
        ("x^-1", "negative exponents"),
        ("x^1.5", "non-integer exponent"),
        ("2.5*x", "non-integer coefficient"),
        ("1 + x", "does not vanish at origin"),
        ("7", "does not vanish at origin"),
        ("x^0", "does not vanish at origin"),
        ("x +", "expected a variable"),
        ("x y", r"expected '\+' or '-'"),
        ("x $ y", "unexpected character"),
        ("", "expected a variable"),
        ("x^", "expected exponent"),
    ],
)
def test_rejected_forms(text, message):
    with pytest.raises(ParseError, match=message):
        parse_polynomial(text, XY)


def test_syntax_error_reports_position():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x + * y", XY)
    assert err.value.position == 4


@pytest.mark.parametrize("names", [(), ("x", "x"), ("1x",), ("",)])
def test_bad_variable_maps(names):
    with pytest.raises(ValueError):
        VariableMap(names)


def test_variable_map_from_text():
    assert VariableMap.parse("x, y ,z").names == ("x", "y", "z")


def test_germ_support_invariants():
    with pytest.raises(ValueError):
        GermSupport(2, ())
    with pytest.raises(ValueError):
        GermSupport(2, ((1, 0), (1, 0)))
    with pytest.raises(ValueError):
        GermSupport(2, ((-1, 2),))


exponents = st.lists(
    st.tuples(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6)).filter(any),
    min_size=1,
    max_size=8,
    unique=True,
)


@given(exponents)
def test_round_trip(points):
    s = GermSupport.of(points)
    assert parse_polynomial(s.to_text(XYZ), XYZ) == s


@given(exponents, st.randoms(use_true_random=False), st.lists(st.integers(1, 99), min_size=8, max_size=8))
def test_order_and_coefficients_do_not_matter(points, rnd, coeffs):
    s = GermSupport.of(points)
    terms = s.to_text(XYZ).split(" + ")
    rnd.shuffle(terms)
    text = " + ".join(f"{c}*{t}" for c, t in zip(coeffs, terms))
    assert parse_polynomial(text, XYZ) == s
