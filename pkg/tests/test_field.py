"""Field arithmetic tests.

The main oracle is deliberately dumb: rational functions as unreduced
(num, den) pairs with schoolbook add/mul and cross-multiplied equality.
Every RatFunc operation is compared against it.  sympy provides a second,
independent implementation for gcd and simplification spot checks.
"""

import random
from fractions import Fraction

import pytest
import sympy

from refleq.field import (
    H,
    Poly,
    RatFunc,
    U,
    U1,
    U2,
    VARS,
    expand_at_infinity,
    format_ratfunc,
    parse_poly,
    parse_ratfunc,
    poly_div_exact,
    poly_gcd,
)


class Naive:
    """Unreduced rational pair; the trusted-but-slow reference."""

    def __init__(self, num, den):
        self.num = num
        self.den = den

    def add(self, o):
        return Naive(self.num * o.den + o.num * self.den, self.den * o.den)

    def sub(self, o):
        return Naive(self.num * o.den - o.num * self.den, self.den * o.den)

    def mul(self, o):
        return Naive(self.num * o.num, self.den * o.den)

    def div(self, o):
        return Naive(self.num * o.den, self.den * o.num)

    def agrees_with(self, rf):
        return self.num * rf.den == rf.num * self.den


def random_poly(rng, vars_=("h", "u", "u1"), max_terms=3, max_deg=2, zero_ok=True):
    p = Poly()
    for _ in range(rng.randint(0 if zero_ok else 1, max_terms)):
        exps = [0] * len(VARS)
        for v in vars_:
            exps[VARS.index(v)] = rng.randint(0, max_deg)
        c = rng.randint(-3, 3)
        p = p + Poly({tuple(exps): Fraction(c)})
    return p


def random_ratfunc(rng):
    num = random_poly(rng)
    den = Poly()
    while den.is_zero():
        den = random_poly(rng, zero_ok=False)
    return num, den


def test_field_laws_against_naive_oracle():
    rng = random.Random(20260816)
    checked = 0
    while checked < 260:
        n1, d1 = random_ratfunc(rng)
        n2, d2 = random_ratfunc(rng)
        a = RatFunc(n1, d1)
        b = RatFunc(n2, d2)
        na = Naive(n1, d1)
        nb = Naive(n2, d2)
        assert na.add(nb).agrees_with(a + b)
        assert na.sub(nb).agrees_with(a - b)
        assert na.mul(nb).agrees_with(a * b)
        if not b.is_zero():
            assert na.div(nb).agrees_with(a / b)
            assert (a / b) * b == a
        # ring laws on the reduced side
        c = RatFunc(*random_ratfunc(rng))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        checked += 1


def test_additive_and_multiplicative_identities():
    rng = random.Random(7)
    for _ in range(50):
        a = RatFunc(*random_ratfunc(rng))
        assert a + RatFunc.zero() == a
        assert a * RatFunc.one() == a
        assert a - a == RatFunc.zero()
        if not a.is_zero():
            assert a * a.inv() == RatFunc.one()


def _to_sympy(p, syms):
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        t = sympy.Rational(c.numerator, c.denominator)
        for s, x in zip(syms, e):
            if x:
                t *= s ** x
        expr += t
    return expr


def test_gcd_against_sympy():
    syms = sympy.symbols(" ".join(VARS))
    rng = random.Random(99)
    for _ in range(40):
        f = random_poly(rng, max_terms=3, max_deg=2)
        g = random_poly(rng, max_terms=3, max_deg=2)
        w = random_poly(rng, max_terms=2, max_deg=1, zero_ok=False)
        fw, gw = f * w, g * w
        if fw.is_zero() or gw.is_zero():
            continue
        ours = poly_gcd(fw, gw)
        theirs = sympy.gcd(_to_sympy(fw, syms), _to_sympy(gw, syms))
        # associates over Q: the quotient must simplify to a rational constant
        ratio = sympy.simplify(_to_sympy(ours, syms) / theirs)
        assert ratio.is_Rational and ratio != 0, f"gcd mismatch: {ours} vs {theirs}"
        # and the common factor must divide both
        assert poly_div_exact(fw, ours) * ours == fw
        assert poly_div_exact(gw, ours) * ours == gw


def test_exact_division_frozen_example():
    u, h = Poly.var("u"), Poly.var("h")
    q = poly_div_exact(u * u - h * h, u - h)
    assert q == u + h


def test_reduction_cancels_common_factor():
    u, h = Poly.var("u"), Poly.var("h")
    r = RatFunc(u * u - h * h, u - h)
    assert r == RatFunc(u + h)
    assert str(r) == "u + h"


def test_eval_after_reduction_has_no_pole():
    u, h = Poly.var("u"), Poly.var("h")
    r = RatFunc(u * u - h * h, u - h)
    point = {v: Fraction(1) for v in VARS}
    point["u"] = Fraction(3)
    assert r.eval(point) == 4
    # the unreduced den vanishes at u = h; the reduced form must not care
    point["u"] = Fraction(1)
    assert r.eval(point) == 2


def test_eval_reports_genuine_pole():
    u, h = Poly.var("u"), Poly.var("h")
    r = RatFunc(h, u + h)
    point = {v: Fraction(1) for v in VARS}
    point["u"] = Fraction(-1)
    with pytest.raises(ZeroDivisionError):
        r.eval(point)


def test_canonical_string_matches_contract():
    # h / (2u1 + 2h): joint content stays 1, den printed largest-first
    r = RatFunc(Poly.var("h"), Poly.var("u1").scale(2) + Poly.var("h").scale(2))
    assert str(r) == "h / (2*u1 + 2*h)"
    assert parse_ratfunc(str(r)) == r


def test_canonical_form_is_scaling_invariant():
    u, h = Poly.var("u"), Poly.var("h")
    a = RatFunc(h, u + h)
    b = RatFunc(h.scale(Fraction(3, 7)), (u + h).scale(Fraction(3, 7)))
    c = RatFunc(-h, (u + h).scale(-1))
    assert a == b == c
    assert str(a) == "h / (u + h)"


def test_den_leading_coefficient_positive():
    rng = random.Random(5)
    for _ in range(60):
        n, d = random_ratfunc(rng)
        r = RatFunc(n, d)
        if r.is_zero():
            assert r.den == Poly.const(1)
            continue
        _, lc = r.den.leading()
        assert lc > 0
        # canonical coefficients are integers with joint content 1
        coeffs = list(r.num.terms.values()) + list(r.den.terms.values())
        assert all(c.denominator == 1 for c in coeffs)
        from math import gcd

        g = 0
        for c in coeffs:
            g = gcd(g, abs(c.numerator))
        assert g == 1


def test_serialization_round_trip_random():
    rng = random.Random(31337)
    for _ in range(80):
        r = RatFunc(*random_ratfunc(rng))
        assert parse_ratfunc(format_ratfunc(r)) == r


def test_parse_poly_handles_powers_and_fractions():
    p = parse_poly("3/2*h^2*u - u1 + 7")
    expected = (
        Poly.var("h", 2) * Poly.var("u").scale(Fraction(3, 2))
        - Poly.var("u1")
        + Poly.const(7)
    )
    assert p == expected


def test_laurent_q_cleared_at_boundary():
    q = Poly.var("q")
    qinv = Poly({tuple(-1 if v == "q" else 0 for v in VARS): Fraction(1)})
    r = RatFunc(qinv + q)  # q^-1 + q  ->  (1 + q^2) / q
    assert r.num == Poly.const(1) + Poly.var("q", 2)
    assert r.den == q
    assert str(r) == "(q^2 + 1) / q"


def test_expand_at_infinity_frozen_examples():
    h = RatFunc.var("h")
    f = H / (U + H)
    cs = expand_at_infinity(f, "u", 3)
    assert cs == [RatFunc.zero(), h, -(h * h), h * h * h]
    g = U / (U + H)
    cs2 = expand_at_infinity(g, "u", 2)
    assert cs2 == [RatFunc.one(), -h, h * h]


def test_expand_reconstructs_truncation():
    # sum of c_r u^-r matches f modulo u^-(order+1): check by clearing powers
    rng = random.Random(11)
    for _ in range(25):
        num = random_poly(rng, vars_=("h",), max_terms=2, max_deg=2)
        den = random_poly(rng, vars_=("h",), max_terms=2, max_deg=2)
        den = den + Poly.var("u")  # ensure deg_u(den) = 1 >= deg_u(num) = 0
        f = RatFunc(num, den)
        order = 4
        cs = expand_at_infinity(f, "u", order)
        # tail := f - sum_r c_r u^-r must have u-valuation > order at infinity:
        # u^order * tail must still vanish at u = infinity.
        acc = f
        upow = RatFunc.one()
        uinv = RatFunc.one() / U
        for c in cs:
            acc = acc - c * upow
            upow = upow * uinv
        if acc.is_zero():
            continue
        scaled = acc * _upow(order)
        dn = scaled.num.degree("u")
        dd = scaled.den.degree("u")
        assert dn < dd, f"tail too fat: {scaled}"


def _upow(k):
    r = RatFunc.one()
    for _ in range(k):
        r = r * U
    return r


def test_expand_rejects_growing_function():
    f = (U * U) / (U + H)
    with pytest.raises(ValueError):
        expand_at_infinity(f, "u", 2)


def test_expand_in_one_variable_keeps_others():
    f = H / (U1 - U2 + H)
    cs = expand_at_infinity(f, "u1", 2)
    assert cs[0] == RatFunc.zero()
    assert cs[1] == H
    assert cs[2] == -H * (H - U2)


def test_pow_and_string_of_negative_leading():
    u, h = Poly.var("u"), Poly.var("h")
    r = RatFunc(-h, u)
    assert str(r) == "-h / u"
    assert parse_ratfunc("-h / u") == r
