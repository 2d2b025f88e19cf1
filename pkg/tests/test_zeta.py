import pytest
from hypothesis import given
from hypothesis import strategies as st

from merozeta.zeta import ZetaFactorization, cyclotomic_factor, expand_series, mul, one, pow

zetas = st.dictionaries(st.integers(1, 8), st.integers(-3, 3), max_size=4).map(ZetaFactorization.from_factors)


def test_one():
    assert one().is_one()
    assert str(one()) == "1"


@given(zetas)
def test_one_is_neutral(z):
    assert mul(one(), z) == z


def test_cyclotomic_factor():
    assert cyclotomic_factor(1, -1).factors == {1: -1}
    assert cyclotomic_factor(1, 16).factors == {1: 16}
    assert cyclotomic_factor(5, 0) == one()
    with pytest.raises(ValueError):
        cyclotomic_factor(0, 1)


def test_mul_and_pow():
    assert mul(cyclotomic_factor(1, 3), cyclotomic_factor(1, -3)) == one()
    z = cyclotomic_factor(2, 1) * cyclotomic_factor(3, 1)
    assert pow(z, -1) == ZetaFactorization.from_factors({2: -1, 3: -1})
    assert mul(cyclotomic_factor(1, 1), pow(cyclotomic_factor(1, 1), -1)) == one()


def test_printing():
    assert str(cyclotomic_factor(1, -1)) == "(1-t)^-1"
    assert str(ZetaFactorization.from_factors({3: 1, 1: 1, 2: 1})) == "(1-t)(1-t^2)(1-t^3)"
    assert str(cyclotomic_factor(1, 16)) == "(1-t)^16"


def test_json_round_trip():
    z = ZetaFactorization.from_factors({3: 1, 1: -2})
    assert z.to_json() == {"factors": [{"m": 1, "e": -2}, {"m": 3, "e": 1}]}
    assert ZetaFactorization.from_json(z.to_json()) == z
    with pytest.raises(ValueError):
        ZetaFactorization.from_json({"factors": [{"m": 1}]})
    with pytest.raises(ValueError):
        ZetaFactorization.from_json({"factors": [{"m": 0, "e": 1}]})
    with pytest.raises(ValueError):
        ZetaFactorization.from_json([])


def test_expand_series():
    assert expand_series(cyclotomic_factor(1, -1), 4) == [1, 1, 1, 1, 1]
    assert expand_series(cyclotomic_factor(1, 1) * cyclotomic_factor(1, -1), 3) == [1, 0, 0, 0]
    assert expand_series(cyclotomic_factor(2, 1), 3) == [1, 0, -1, 0]
    assert expand_series(one(), 0) == [1]
    with pytest.raises(ValueError):
        expand_series(one(), -1)


@given(zetas, zetas, zetas)
def test_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * a**-1 == one()
    assert (a * b) ** 2 == a**2 * b**2
    assert all(e != 0 for _, e in (a * b).terms)


@given(zetas, zetas)
def test_series_is_multiplicative(a, b):
    order = 12
    sa, sb = expand_series(a, order), expand_series(b, order)
    cauchy = [sum(sa[i] * sb[k - i] for i in range(k + 1)) for k in range(order + 1)]
    assert expand_series(a * b, order) == cauchy


def test_series_binomial_check():
    # (1 - t^2)^-3 = sum C(k+2, 2) t^{2k}
    assert expand_series(cyclotomic_factor(2, -3), 6) == [1, 0, 3, 0, 6, 0, 10]
