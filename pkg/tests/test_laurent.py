import json

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from foxchi.errors import DivisionByZero, MultivariateInput, NotDivisible, PolynomialSyntaxError, RingMismatch
from foxchi.laurent import (
    LaurentPoly,
    associates,
    canonical_form,
    exact_divide,
    gcd,
    geometric_truncation,
    involution,
    parse_poly,
)

from helpers import from_sympy, laurent_polys, monomials, nonzero_polys, to_sympy


def P(text, n=None):
    return parse_poly(text, n)


# --- construction and formatting ----------------------------------------------


def test_zero_coefficients_dropped():
    p = LaurentPoly(1, {(1,): 0, (0,): 3})
    assert dict(p.terms) == {(0,): 3}


def test_wrong_arity_rejected():
    with pytest.raises(ValueError):
        LaurentPoly(2, {(1,): 1})


def test_equality_is_term_equality():
    assert P("t - 1") == P("-1 + t")
    assert P("t - 1") != P("1 - t")
    assert P("t1", 2) != P("t", 1)


@pytest.mark.parametrize(
    "text, n, shown",
    [
        ("t - 1 + t^-1", 1, "t - 1 + t^-1"),
        ("-t2 + 2*t1*t2^-1", 2, "2*t1*t2^-1 - t2"),
        ("0", 1, "0"),
        ("t^2 - 3*t + 1", 1, "t^2 - 3*t + 1"),
    ],
)
def test_format_round_trip(text, n, shown):
    p = P(text, n)
    assert str(p) == shown
    assert P(str(p), n) == p


@pytest.mark.parametrize("bad", ["t +", "t^", "2**t", "x + 1", "t^1.5"])
def test_parse_errors(bad):
    with pytest.raises(PolynomialSyntaxError):
        P(bad, 1)


def test_json_round_trip_and_order():
    p = P("2*t1*t2^-1 - t2 + 5", 2)
    data = json.loads(p.to_json())
    assert data == {"vars": 2, "terms": [[[1, -1], 2], [[0, 1], -1], [[0, 0], 5]]}
    assert LaurentPoly.from_json(p.to_json()) == p


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        P("t", 1) + P("t1", 2)


def test_negative_power_only_for_units():
    assert P("t") ** -2 == P("t^-2")
    assert P("-t") ** -1 == P("-t^-1")
    with pytest.raises(NotDivisible):
        P("t + 1") ** -1


# --- canonical form -----------------------------------------------------------


@pytest.mark.parametrize(
    "text, n, expected",
    [("-t^2 + t^3", 1, "t - 1"), ("0", 1, "0"), ("t1^-1*t2 - t1", 2, "t1^2 - t2")],
)
def test_canonical_form_examples(text, n, expected):
    assert canonical_form(P(text, n)) == P(expected, n)


@given(laurent_polys(3), monomials(3))
def test_canonical_form_unit_invariant(p, u):
    c = canonical_form(p)
    assert canonical_form(u * p) == c
    assert canonical_form(c) == c
    if not p.is_zero():
        assert min(c.min_exponents()) == 0 and all(x == 0 for x in c.min_exponents())
        assert c.leading_term()[1] > 0
        assert associates(c, p)


# --- gcd ------------------------------------------------------------------------


@pytest.mark.parametrize(
    "a, b, n, expected",
    [
        ("t^2 - 1", "t^3 - 1", 1, "t - 1"),
        ("t1*t2 - t1 - t2 + 1", "t1*t2 - t2", 2, "t1 - 1"),
        ("0", "0", 1, "0"),
    ],
)
def test_gcd_examples(a, b, n, expected):
    assert gcd(P(a, n), P(b, n)) == P(expected, n)


@given(laurent_polys(2))
def test_gcd_with_zero(p):
    assert gcd(p, LaurentPoly.zero(2)) == canonical_form(p)
    assert gcd(LaurentPoly.zero(2), p) == canonical_form(p)


def _sympy_gcd(p, q):
    ep, syms = to_sympy(canonical_form(p))
    eq, _ = to_sympy(canonical_form(q))
    return canonical_form(from_sympy(sympy.gcd(ep, eq), syms))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(nonzero_polys(n, max_terms=4), nonzero_polys(n, max_terms=4), nonzero_polys(n, max_terms=3))))
def test_gcd_against_sympy(triple):
    g, a, b = triple
    p, q = g * a, g * b
    assert gcd(p, q) == _sympy_gcd(p, q)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(nonzero_polys(n, max_terms=3), nonzero_polys(n, max_terms=3), nonzero_polys(n, max_terms=3))))
def test_gcd_multiplicative(triple):
    g, p, q = triple
    assert gcd(g * p, g * q) == canonical_form(g * gcd(p, q))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(nonzero_polys(n), nonzero_polys(n))))
def test_gcd_divides_both(pair):
    p, q = pair
    g = gcd(p, q)
    exact_divide(p, g)
    exact_divide(q, g)


# --- exact division -------------------------------------------------------------


def test_exact_divide_examples():
    assert exact_divide(P("t^3 - 1"), P("t - 1")) == P("1 + t + t^2")
    p = P("t1^2 - t2", 2)
    assert exact_divide(p, p) == LaurentPoly.one(2)
    with pytest.raises(NotDivisible):
        exact_divide(P("t + 1"), P("t - 1"))
    with pytest.raises(DivisionByZero):
        exact_divide(P("t"), P("0"))


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(laurent_polys(n), nonzero_polys(n))))
def test_exact_divide_inverts_product(pair):
    p, q = pair
    assert exact_divide(p * q, q) == p


@given(laurent_polys(2), laurent_polys(2), laurent_polys(2))
def test_multiplication_against_sympy(p, q, r):
    e1, syms = to_sympy(p * q + r)
    ep, _ = to_sympy(p)
    eq, _ = to_sympy(q)
    er, _ = to_sympy(r)
    assert sympy.expand(e1 - (ep * eq + er)) == 0


# --- involution -----------------------------------------------------------------


def test_involution_examples():
    assert involution(P("t - 1 + t^-1")) == P("t - 1 + t^-1")
    assert involution(P("t^2")) == P("t^-2")
    assert involution(P("2*t1*t2^-1", 2)) == P("2*t1^-1*t2", 2)


@given(laurent_polys(2), laurent_polys(2))
def test_involution_ring_map(p, q):
    assert involution(involution(p)) == p
    assert involution(p * q) == involution(p) * involution(q)
    assert involution(p + q) == involution(p) + involution(q)


# --- geometric truncation -------------------------------------------------------


def test_truncation_examples():
    s = geometric_truncation(P("1"), 2)
    assert s.series == P("1 + t^-1 + t^-2")
    assert s.stable_floor == -2
    s = geometric_truncation(P("t - 1 + t^-1"), 3)
    assert s.series == P("t + t^-1 + t^-2 + t^-4")
    assert s.stable_coefficients() == {1: 1, 0: 0, -1: 1, -2: 1}
    assert geometric_truncation(P("0"), 5).series.is_zero()
    with pytest.raises(MultivariateInput):
        geometric_truncation(P("t1", 2), 3)


@given(nonzero_polys(1), st.integers(0, 8))
def test_truncation_stable_region(p, n):
    a = geometric_truncation(p, n)
    b = geometric_truncation(p, n + 1)
    top = p.max_exponents()[0]
    for d in range(a.stable_floor, top + 1):
        assert a.coefficient(d) == b.coefficient(d)
