"""Exact rational functions in h, q, u, u1, u2, u3, u4 over Q.

Polynomials are dicts mapping exponent tuples to Fraction coefficients.  The
variable order is fixed once and for all:

    VARS = (h, q, u, u1, u2, u3, u4)

Only q is allowed a negative exponent (Laurent direction, used by the K-theory
layer); RatFunc clears q-denominators on construction so num and den are honest
polynomials.  Monomial comparison is graded lexicographic with later variables
dominating, so the monomial u1 beats h and `2*u1 + 2*h` is the canonical print
order for descending terms.

Canonical RatFunc form: num/den reduced by their gcd, then scaled by a single
rational so all coefficients are integers with joint content 1 and the leading
coefficient of den is positive.  Equality is plain data equality on that form.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd
from math import lcm as int_lcm

VARS = ("h", "q", "u", "u1", "u2", "u3", "u4")
NVARS = len(VARS)
VAR_INDEX = {name: i for i, name in enumerate(VARS)}
Q_INDEX = VAR_INDEX["q"]

ZERO_EXP = (0,) * NVARS


def _mono_key(exps):
    # graded lex, later variables dominate
    return (sum(exps), tuple(reversed(exps)))


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Poly:
    """Multivariate polynomial (Laurent in q) with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for exps, c in terms.items():
                c = Fraction(c)
                if c:
                    t[tuple(exps)] = c
        self.terms = t

    @staticmethod
    def zero():
        return Poly()

    @staticmethod
    def const(c):
        c = Fraction(c)
        return Poly({ZERO_EXP: c}) if c else Poly()

    @staticmethod
    def var(name, power=1):
        exps = [0] * NVARS
        exps[VAR_INDEX[name]] = power
        return Poly({tuple(exps): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_const(self):
        return not self.terms or (len(self.terms) == 1 and ZERO_EXP in self.terms)

    def const_value(self):
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and ZERO_EXP in self.terms:
            return self.terms[ZERO_EXP]
        raise ValueError("not a constant polynomial")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, Fraction(0)) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        p = Poly()
        p.terms = t
        return p

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.terms or not other.terms:
            return Poly()
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _mono_mul(e1, e2)
                s = t.get(e, Fraction(0)) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        p = Poly()
        p.terms = t
        return p

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Poly")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return Poly()
        return Poly({e: cc * c for e, cc in self.terms.items()})

    def leading(self):
        """(exponent tuple, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=_mono_key)
        return e, self.terms[e]

    def degree(self, name=None):
        """Total degree, or degree in one variable.  Zero poly -> -1."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(e) for e in self.terms)
        i = VAR_INDEX[name]
        return max(e[i] for e in self.terms)

    def min_degree(self, name):
        if not self.terms:
            return 0
        i = VAR_INDEX[name]
        return min(e[i] for e in self.terms)

    def variables(self):
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(VARS[i])
        return used

    def shift(self, name, power):
        """Multiply by name**power (power may be negative; Laurent shift)."""
        if not power:
            return self
        i = VAR_INDEX[name]
        t = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i] += power
            t[tuple(e2)] = c
        p = Poly()
        p.terms = t
        return p

    def coeff_of(self, name, power):
        """Coefficient of name**power, a Poly in the remaining variables."""
        i = VAR_INDEX[name]
        t = {}
        for e, c in self.terms.items():
            if e[i] == power:
                e2 = list(e)
                e2[i] = 0
                t[tuple(e2)] = c
        p = Poly()
        p.terms = t
        return p

    def subs(self, assignment):
        """Evaluate at a full assignment {var: Fraction} -> Fraction."""
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for i, x in enumerate(e):
                if x:
                    v *= Fraction(assignment[VARS[i]]) ** x
            total += v
        return total

    def subs_poly(self, assignment):
        """Substitute some variables by Polys, keep the rest."""
        result = Poly()
        for e, c in self.terms.items():
            term = Poly.const(c)
            for i, x in enumerate(e):
                if not x:
                    continue
                name = VARS[i]
                if name in assignment:
                    rep = assignment[name]
                    if x < 0:
                        raise ValueError("negative exponent in subs_poly")
                    term = term * rep ** x
                else:
                    term = term.shift(name, x)
            result = result + term
        return result

    def content_and_integers(self):
        """Return (r, P) with self = r * P, P integer coefficients, content 1.

        The sign convention here is r > 0: P keeps the sign of self.
        Zero poly -> (Fraction(1), zero).
        """
        if not self.terms:
            return Fraction(1), Poly()
        denom = int_lcm(*(c.denominator for c in self.terms.values()))
        numer = int_gcd(*(abs(c.numerator) for c in self.terms.values()))
        r = Fraction(numer, denom)
        p = Poly({e: c / r for e, c in self.terms.items()})
        return r, p

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def _format_mono(exps, star_prefix):
    parts = []
    for i, x in enumerate(exps):
        if x == 0:
            continue
        if x == 1:
            parts.append(VARS[i])
        else:
            parts.append(f"{VARS[i]}^{x}")
    if not parts:
        return ""
    s = "*".join(parts)
    return ("*" + s) if star_prefix else s


def _format_coeff(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_poly(p):
    if not p.terms:
        return "0"
    items = sorted(p.terms.items(), key=lambda kv: _mono_key(kv[0]), reverse=True)
    out = []
    for n, (e, c) in enumerate(items):
        neg = c < 0
        mag = -c if neg else c
        mono = _format_mono(e, star_prefix=(mag != 1))
        if mag == 1 and mono:
            body = mono.lstrip("*") if mono.startswith("*") else mono
        elif mono:
            body = _format_coeff(mag) + mono
        else:
            body = _format_coeff(mag)
        if n == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# gcd machinery
#
# Recursive content/primitive-part reduction to a univariate subresultant
# pseudo-remainder sequence (Cohen alg. 3.2.11).  Primitive PRS recomputes a
# multivariate content gcd at every step and blows up on dense inputs; the
# subresultant beta-factors avoid that while keeping all divisions exact.


def _to_univariate(p, name):
    """Represent p as {degree: Poly-in-other-vars} in the chosen variable."""
    out = {}
    i = VAR_INDEX[name]
    for e, c in p.terms.items():
        d = e[i]
        e2 = list(e)
        e2[i] = 0
        coeff = out.setdefault(d, Poly())
        coeff.terms[tuple(e2)] = coeff.terms.get(tuple(e2), Fraction(0)) + c
    return {d: c for d, c in out.items() if c.terms}


def _from_univariate(coeffs, name):
    p = Poly()
    for d, c in coeffs.items():
        p = p + c.shift(name, d)
    return p


def poly_div_exact(f, g):
    """Exact division f/g; raises ValueError if g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("poly division by zero")
    if f.is_zero():
        return Poly()
    if g.is_const():
        return f.scale(1 / g.const_value())
    q = Poly()
    r = f
    ge, gc = g.leading()
    while r.terms:
        re, rc = r.leading()
        diff = tuple(a - b for a, b in zip(re, ge))
        if any(d < 0 for d in diff):
            raise ValueError("not an exact polynomial division")
        t = Poly({diff: rc / gc})
        q = q + t
        r = r - t * g
    return q


def _pseudo_rem_uni(fu, gu):
    """True pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g."""
    dg = max(gu)
    df = max(fu)
    lg = gu[dg]
    needed = df - dg + 1
    done = 0
    r = dict(fu)
    while r and max(r) >= dg:
        dr = max(r)
        lr = r[dr]
        # r <- lg * r - lr * x^(dr-dg) * g
        new = {}
        for d, c in r.items():
            new[d] = c * lg
        done += 1
        for d, c in gu.items():
            dd = d + dr - dg
            val = new.get(dd, Poly()) - c * lr
            if val.terms:
                new[dd] = val
            else:
                new.pop(dd, None)
        r = {d: c for d, c in new.items() if c.terms}
    if r and done < needed:
        scale = lg ** (needed - done)
        r = {d: c * scale for d, c in r.items()}
    return r


def _content_wrt(p, name):
    coeffs = sorted(
        _to_univariate(p, name).values(), key=lambda c: len(c.terms)
    )
    c = Poly()
    for co in coeffs:
        c = poly_gcd(c, co)
        if c.is_const() and not c.is_zero():
            return Poly.const(1)
    return c


def _normalize_primitive(p):
    """Scale to integer coefficients, content 1, positive leading coeff."""
    if p.is_zero():
        return p
    _, q = p.content_and_integers()
    _, lc = q.leading()
    if lc < 0:
        q = -q
    return q


def _mono_content(p):
    """Exponentwise min over terms: the largest monomial dividing p."""
    it = iter(p.terms)
    first = next(it)
    mins = list(first)
    for e in it:
        for i, x in enumerate(e):
            if x < mins[i]:
                mins[i] = x
    return tuple(mins)


def _try_div(f, g):
    try:
        return poly_div_exact(f, g)
    except ValueError:
        return None


_GCD_CACHE = {}
_GCD_CACHE_MAX = 1 << 15


def poly_gcd(f, g):
    """gcd over Q[h..u4], normalized to integer content 1, positive lead."""
    if f.is_zero():
        return _normalize_primitive(g)
    if g.is_zero():
        return _normalize_primitive(f)
    if f.is_const() or g.is_const():
        return Poly.const(1)
    # pull out the common monomial factor first
    mf = _mono_content(f)
    mg = _mono_content(g)
    common = tuple(min(a, b) for a, b in zip(mf, mg))
    if any(common):
        f = Poly({tuple(a - b for a, b in zip(e, common)): c for e, c in f.terms.items()})
        g = Poly({tuple(a - b for a, b in zip(e, common)): c for e, c in g.terms.items()})
        return _normalize_primitive(Poly({common: Fraction(1)}) * poly_gcd(f, g))
    if len(f.terms) == 1 or len(g.terms) == 1:
        # monomial gcd already extracted: nothing further in common
        return Poly.const(1)
    fv = f.variables()
    gv = g.variables()
    both = fv & gv
    if not both:
        return Poly.const(1)
    # cheap wins: equal up to scale, or one divides the other
    fn = _normalize_primitive(f)
    gn = _normalize_primitive(g)
    if fn == gn:
        return fn
    key = (frozenset(fn.terms.items()), frozenset(gn.terms.items()))
    hit = _GCD_CACHE.get(key)
    if hit is not None:
        return hit
    if f.degree() >= g.degree() and _try_div(fn, gn) is not None:
        result = gn
    elif g.degree() > f.degree() and _try_div(gn, fn) is not None:
        result = fn
    else:
        result = _gcd_heuristic(fn, gn)
        if result is None:
            name = sorted(both, key=lambda n: VAR_INDEX[n])[-1]
            cf = _content_wrt(f, name)
            cg = _content_wrt(g, name)
            a = poly_div_exact(f, cf) if not cf.is_const() else f
            b = poly_div_exact(g, cg) if not cg.is_const() else g
            c = poly_gcd(cf, cg)
            h = _subresultant_gcd(a, b, name)
            result = _normalize_primitive(h * c)
    if len(_GCD_CACHE) >= _GCD_CACHE_MAX:
        _GCD_CACHE.clear()
    _GCD_CACHE[key] = result
    return result


def _eval_var_int(p, name, xi):
    """Evaluate one variable at an integer; coefficients stay exact."""
    i = VAR_INDEX[name]
    out = {}
    for e, c in p.terms.items():
        e2 = list(e)
        d = e2[i]
        e2[i] = 0
        key = tuple(e2)
        out[key] = out.get(key, Fraction(0)) + c * xi ** d
    q = Poly()
    q.terms = {e: c for e, c in out.items() if c}
    return q


def _mods(c, xi):
    r = c % xi
    if r > xi // 2:
        r -= xi
    return r


def _gcd_heuristic(f, g, depth=0):
    """GCDHEU: evaluate at a big integer, reconstruct digits, verify by
    trial division.  Inputs integer-primitive; returns None if unlucky."""
    fvars = sorted(f.variables() & g.variables(), key=lambda n: VAR_INDEX[n])
    if not fvars:
        return Poly.const(1)
    name = fvars[-1]
    max_f = max(abs(c) for c in f.terms.values())
    max_g = max(abs(c) for c in g.terms.values())
    xi = 2 * min(max_f, max_g) + 29
    xi = int(xi)
    for _ in range(6):
        fe = _eval_var_int(f, name, xi)
        ge = _eval_var_int(g, name, xi)
        if fe.is_zero() or ge.is_zero():
            xi = xi * 4019 + 3
            continue
        if fe.is_const() and ge.is_const():
            gamma = Poly.const(int_gcd(int(fe.const_value()), int(ge.const_value())))
        else:
            _, fe_i = fe.content_and_integers()
            _, ge_i = ge.content_and_integers()
            sub = _gcd_heuristic(fe_i, ge_i, depth + 1) if depth < 8 else None
            if sub is None:
                xi = xi * 4019 + 3
                continue
            cont = int_gcd(
                int(fe.content_and_integers()[0]), int(ge.content_and_integers()[0])
            )
            gamma = sub.scale(cont)
        # digit reconstruction of the candidate in `name`
        cand = Poly()
        power = 0
        while not gamma.is_zero():
            digit = Poly(
                {e: Fraction(_mods(int(c), xi)) for e, c in gamma.terms.items()}
            )
            cand = cand + digit.shift(name, power)
            gamma = Poly(
                {
                    e: (c - Fraction(_mods(int(c), xi))) / xi
                    for e, c in gamma.terms.items()
                }
            )
            power += 1
            if power > 64:
                break
        if not cand.is_zero():
            cand = _normalize_primitive(cand)
            if _try_div(f, cand) is not None and _try_div(g, cand) is not None:
                return cand
        xi = xi * 4019 + 3
    return None


def _subresultant_gcd(a, b, name):
    """gcd of polynomials primitive w.r.t. `name`, via subresultant PRS."""
    au = _to_univariate(a, name)
    bu = _to_univariate(b, name)
    if max(au) < max(bu):
        au, bu = bu, au
    g_coef = Poly.const(1)
    h_coef = Poly.const(1)
    while True:
        if max(bu) == 0:
            # nonzero, primitive, and free of the main variable
            return Poly.const(1)
        delta = max(au) - max(bu)
        ru = _pseudo_rem_uni(au, bu)
        if not ru:
            break
        divisor = g_coef * h_coef ** delta
        r = _from_univariate(ru, name)
        if not divisor.is_const() or divisor.const_value() != 1:
            r = poly_div_exact(r, divisor)
        au = bu
        g_coef = au[max(au)]
        if delta == 1:
            h_coef = g_coef
        elif delta >= 2:
            h_coef = poly_div_exact(g_coef ** delta, h_coef ** (delta - 1))
        bu = _to_univariate(r, name)
    # gcd is the primitive part of the last nonzero remainder (now in bu)
    last = _from_univariate(bu, name)
    cont = _content_wrt(last, name)
    if not cont.is_const():
        last = poly_div_exact(last, cont)
    return _normalize_primitive(last)


# ---------------------------------------------------------------------------


class RatFunc:
    """Reduced rational function num/den in canonical form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, Fraction)):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1)
        elif isinstance(den, (int, Fraction)):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        # clear Laurent q-powers so num, den are real polynomials
        qmin = min(num.min_degree("q"), den.min_degree("q"))
        if qmin < 0:
            num = num.shift("q", -qmin)
            den = den.shift("q", -qmin)
        if num.is_zero():
            self.num = Poly()
            self.den = Poly.const(1)
            return
        g = poly_gcd(num, den)
        if not g.is_const():
            num = poly_div_exact(num, g)
            den = poly_div_exact(den, g)
        # joint integer normalization with positive leading den coefficient
        rn, pn = num.content_and_integers()
        rd, pd = den.content_and_integers()
        # num = rn*pn, den = rd*pd; divide both by r = rn/gcd-like joint scale
        joint = Fraction(
            int_gcd(rn.numerator * rd.denominator, rd.numerator * rn.denominator),
            rn.denominator * rd.denominator,
        )
        num = num.scale(1 / joint)
        den = den.scale(1 / joint)
        _, lc = den.leading()
        if lc < 0:
            num = -num
            den = -den
        self.num = num
        self.den = den

    @staticmethod
    def zero():
        return RatFunc(Poly())

    @staticmethod
    def one():
        return RatFunc(Poly.const(1))

    @staticmethod
    def const(c):
        return RatFunc(Poly.const(c))

    @staticmethod
    def var(name, power=1):
        if power >= 0:
            return RatFunc(Poly.var(name, power))
        return RatFunc(Poly.const(1), Poly.var(name, -power))

    def is_zero(self):
        return self.num.is_zero()

    def is_const(self):
        return self.num.is_const() and self.den.is_const()

    def const_value(self):
        return self.num.const_value() / self.den.const_value()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num = -self.num
        r.den = self.den
        return r

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc.const(other)
        if isinstance(other, Poly):
            return RatFunc(other)
        if isinstance(other, RatFunc):
            return other
        return None

    def _add_signed(self, o, sign):
        # cancel the common den factor first: keeps the final gcd small
        g = poly_gcd(self.den, o.den)
        if g.is_const():
            num = self.num * o.den + o.num.scale(sign) * self.den
            return RatFunc(num, self.den * o.den)
        da = poly_div_exact(self.den, g)
        db = poly_div_exact(o.den, g)
        num = self.num * db + o.num.scale(sign) * da
        return RatFunc(num, da * o.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._add_signed(o, 1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._add_signed(o, -1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.num.is_zero() or o.num.is_zero():
            return RatFunc.zero()
        # cross-cancel before multiplying out
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num if g1.is_const() else poly_div_exact(self.num, g1)
        d2 = o.den if g1.is_const() else poly_div_exact(o.den, g1)
        n2 = o.num if g2.is_const() else poly_div_exact(o.num, g2)
        d1 = self.den if g2.is_const() else poly_div_exact(self.den, g2)
        return RatFunc(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def inv(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def degree(self, name):
        return max(self.num.degree(name), self.den.degree(name))

    def variables(self):
        return self.num.variables() | self.den.variables()

    def eval(self, assignment):
        """Evaluate at {var: Fraction}; raises on a pole of the REDUCED form."""
        d = self.den.subs(assignment)
        if d == 0:
            raise ZeroDivisionError(
                f"pole of rational function at {assignment}"
            )
        return self.num.subs(assignment) / d

    def subs_poly(self, assignment):
        """Substitute variables by Polys (e.g. u -> u1 - u2)."""
        return RatFunc(self.num.subs_poly(assignment), self.den.subs_poly(assignment))

    def __str__(self):
        return format_ratfunc(self)

    def __repr__(self):
        return f"RatFunc({format_ratfunc(self)})"


def format_ratfunc(r):
    num_s = format_poly(r.num)
    if r.den.is_const() and r.den.const_value() == 1:
        return num_s
    den_s = format_poly(r.den)
    if len(r.num.terms) > 1:
        num_s = f"({num_s})"
    if len(r.den.terms) > 1 or _den_needs_parens(r.den):
        den_s = f"({den_s})"
    return f"{num_s} / {den_s}"


def _den_needs_parens(den):
    # single term: parenthesize unless it's a bare power like u, h^2
    ((e, c),) = den.terms.items()
    if c != 1:
        return True
    return sum(1 for x in e if x) > 1


# ---------------------------------------------------------------------------
# parsing (exact inverse of format_ratfunc / format_poly)


class _ParseError(ValueError):
    pass


def parse_ratfunc(s):
    """Parse the canonical string form back into a RatFunc."""
    s = s.strip()
    depth = 0
    split = None
    i = 0
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and s.startswith(" / ", i):
            split = i
            break
        i += 1
    if split is None:
        return RatFunc(parse_poly(s))
    return RatFunc(parse_poly(s[:split]), parse_poly(s[split + 3:]))


def parse_poly(s):
    """Parse a polynomial string (terms joined by ' + ' / ' - ')."""
    s = s.strip()
    if s.startswith("(") and s.endswith(")") and _balanced_interior(s):
        s = s[1:-1].strip()
    if not s:
        raise _ParseError("empty polynomial string")
    out = Poly()
    for sign, term in _split_terms(s):
        out = out + _parse_term(term).scale(sign)
    return out


def _balanced_interior(s):
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0 and i != len(s) - 1:
                return False
    return depth == 0


def _split_terms(s):
    terms = []
    sign = 1
    if s.startswith("-"):
        sign = -1
        s = s[1:]
    cur = []
    i = 0
    while i < len(s):
        if s.startswith(" + ", i):
            terms.append((sign, "".join(cur)))
            sign, cur, i = 1, [], i + 3
        elif s.startswith(" - ", i):
            terms.append((sign, "".join(cur)))
            sign, cur, i = -1, [], i + 3
        else:
            cur.append(s[i])
            i += 1
    terms.append((sign, "".join(cur)))
    return terms


def _parse_term(t):
    t = t.strip()
    if not t:
        raise _ParseError("empty term")
    coeff = Fraction(1)
    exps = [0] * NVARS
    for factor in t.split("*"):
        factor = factor.strip()
        if not factor:
            raise _ParseError(f"bad term {t!r}")
        if factor[0].isdigit() or factor[0] == "-" or "/" in factor and factor[0] not in VAR_INDEX:
            coeff *= Fraction(factor)
            continue
        if "^" in factor:
            name, _, p = factor.partition("^")
            power = int(p)
        else:
            name, power = factor, 1
        if name not in VAR_INDEX:
            raise _ParseError(f"unknown variable {name!r}")
        exps[VAR_INDEX[name]] += power
    return Poly({tuple(exps): coeff})


# ---------------------------------------------------------------------------
# expansion at infinity


def expand_at_infinity(f, name, order):
    """Coefficients of the expansion of f in powers of 1/name at infinity.

    Requires deg_name(num) <= deg_name(den); returns a list of RatFuncs
    [c_0, c_1, ..., c_order] in the remaining variables with
    f = sum c_r * name**(-r) + O(name**-(order+1)).
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    num, den = f.num, f.den
    dn = num.degree(name)
    dd = den.degree(name)
    if dn > dd:
        raise ValueError(
            f"expansion at infinity needs deg({name}) of num <= den, got {dn} > {dd}"
        )
    d = dd
    N = [RatFunc(num.coeff_of(name, d - r)) for r in range(order + 1)]
    D = [RatFunc(den.coeff_of(name, d - r)) for r in range(order + 1)]
    coeffs = []
    for r in range(order + 1):
        acc = N[r]
        for s in range(r):
            acc = acc - coeffs[s] * D[r - s]
        coeffs.append(acc / D[0])
    return coeffs


# convenient pre-built generators
H = RatFunc.var("h")
Qv = RatFunc.var("q")
U = RatFunc.var("u")
U1 = RatFunc.var("u1")
U2 = RatFunc.var("u2")
U3 = RatFunc.var("u3")
U4 = RatFunc.var("u4")
