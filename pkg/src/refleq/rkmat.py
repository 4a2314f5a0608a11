"""Rational R- and K-matrices and the boundary transfer products built from them.

Single sites are copies of C^l with labels 1..l.  Tensor factors get tuple
labels via LabeledMatrix.kron / embed_on_slots, so the two-site matrices
below carry pair labels (s, t) with s the first (major) factor.

Four scenario kinds are supported:

  spInstanton, soInstanton : boundary matrices on the instanton side
  flagPlus, flagMinus      : boundary matrices on the flag side

Every boundary matrix tends to an involutive constant matrix as the
spectral parameter grows; sigma_matrix returns that limit directly.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .field import H, Poly, RatFunc, expand_at_infinity
from .matrix import LabeledMatrix, embed_on_slots, swap_conjugate

KINDS = ("spInstanton", "soInstanton", "flagPlus", "flagMinus")


def _as_rat(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc(x)
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to a rational function")


def site_labels(l):
    return tuple(range(1, l + 1))


def pair_labels(l):
    return tuple((s, t) for s in site_labels(l) for t in site_labels(l))


def yang_r(l, u):
    """(u * Id + h * P) / (u + h) on the two-site space."""
    u = _as_rat(u)
    labels = pair_labels(l)
    m = LabeledMatrix(labels, labels)
    denom = u + H
    stay = u / denom
    hop = H / denom
    one = RatFunc.one()
    for s in site_labels(l):
        for t in site_labels(l):
            if s == t:
                m.set((s, s), (s, s), one)
            else:
                m.set((s, t), (s, t), stay)
                m.set((t, s), (s, t), hop)
    return m


def r_bullet_sigma(l, u):
    """Identity except on span{(i, i)}, where it is Id - h/(u + l*h/2) * J."""
    u = _as_rat(u)
    labels = pair_labels(l)
    m = LabeledMatrix.identity(labels)
    c = H / (u + H * RatFunc.const(Fraction(l, 2)))
    for i in site_labels(l):
        for j in site_labels(l):
            prev = m.get((i, i), (j, j))
            m.set((i, i), (j, j), prev - c)
    return m


def r_bullet_sigma_opposite(l, u):
    """r_bullet_sigma with the off-diagonal block entries negated.

    The sign of the block entries is a convention (it tracks which of the
    two halves of each dual weight pair the construction keeps).  The
    boundary matrix k_matrix('spInstanton') is written in the convention
    where its own off-diagonal entries are -h/(2u + l*h/2); the two-site
    matrix that is exchange-compatible with that boundary matrix must then
    carry the opposite sign on its block.  At l = 2 this variant is unitary
    and the reflection identity holds with it; at l >= 3 no sign convention
    makes the pair compatible (see relations.check_reflection), and this
    variant is not even unitary, so it is exposed for experiments only.
    """
    u = _as_rat(u)
    labels = pair_labels(l)
    m = LabeledMatrix.identity(labels)
    c = H / (u + H * RatFunc.const(Fraction(l, 2)))
    for i in site_labels(l):
        for j in site_labels(l):
            if i == j:
                m.set((i, i), (i, i), RatFunc.one() - c)
            else:
                m.set((i, i), (j, j), c)
    return m


def k_matrix(kind, l, u):
    """Single-site boundary matrix for the given scenario kind."""
    u = _as_rat(u)
    labels = site_labels(l)
    if kind == "soInstanton":
        return LabeledMatrix.identity(labels)
    if kind == "spInstanton":
        m = LabeledMatrix.identity(labels)
        c = H / (u + u + H * RatFunc.const(Fraction(l, 2)))
        for i in labels:
            for j in labels:
                prev = m.get(i, j)
                m.set(i, j, prev - c)
        return m
    if kind == "flagPlus":
        m = LabeledMatrix(labels, labels)
        one = RatFunc.one()
        for i in labels:
            m.set(l + 1 - i, i, one)
        return m
    if kind == "flagMinus":
        m = LabeledMatrix(labels, labels)
        denom = u + u + H
        diag = H / denom
        anti = (u + u) / denom
        for i in labels:
            if l + 1 - i == i:
                m.set(i, i, RatFunc.one())
            else:
                m.set(i, i, diag)
                m.set(l + 1 - i, i, anti)
        return m
    raise ValueError(f"unknown kind {kind!r}")


def k_matrix_opposite_placement(l, u):
    """flagMinus boundary matrix with diagonal and anti-diagonal exchanged.

    Puts the u-dependent entry on the diagonal and the constant-order entry
    on the anti-diagonal, the placement k_matrix('flagMinus') rejects.  Kept
    as a foil: relations.check_reflection must fail with this variant, which
    pins down the placement in k_matrix as the correct one.
    """
    u = _as_rat(u)
    labels = site_labels(l)
    m = LabeledMatrix(labels, labels)
    denom = u + u + H
    diag = (u + u) / denom
    anti = H / denom
    for i in labels:
        if l + 1 - i == i:
            m.set(i, i, RatFunc.one())
        else:
            m.set(i, i, diag)
            m.set(l + 1 - i, i, anti)
    return m


def sigma_matrix(kind, l):
    """Limit of k_matrix at large spectral parameter: an involutive constant."""
    labels = site_labels(l)
    if kind in ("spInstanton", "soInstanton"):
        return LabeledMatrix.identity(labels)
    if kind in ("flagPlus", "flagMinus"):
        m = LabeledMatrix(labels, labels)
        one = RatFunc.one()
        for i in labels:
            m.set(l + 1 - i, i, one)
        return m
    raise ValueError(f"unknown kind {kind!r}")


def cross_r(kind, l, u):
    """Two-site R with one twisted factor (acts as R before index flipping).

    spInstanton at l = 2 uses the opposite-sign bullet variant: that is the
    unique sign convention under which the boundary matrix satisfies the
    reflection identity (and it exists only at l = 2, matching the
    polarization dichotomy).  Larger l fall back to the plain convention.
    """
    if kind == "spInstanton":
        if l == 2:
            return r_bullet_sigma_opposite(l, u)
        return r_bullet_sigma(l, u)
    if kind == "soInstanton":
        return r_bullet_sigma(l, u)
    if kind in ("flagPlus", "flagMinus"):
        return yang_r(l, u)
    raise ValueError(f"unknown kind {kind!r}")


def cross_r_flipped(kind, l, u):
    """The flipped-index variant P * cross_r * P."""
    return swap_conjugate(cross_r(kind, l, u))


def sigma_sigma_r(kind, l, u):
    """Two-site R with both factors twisted; plain Yangian R in every kind."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    return yang_r(l, u)


def constant_term_matrix(m, name="u"):
    """Entrywise limit as name -> infinity (order-zero expansion)."""
    out = LabeledMatrix(m.row_labels, m.col_labels)
    for (i, j), v in m.entries.items():
        c0 = expand_at_infinity(v, name, 0)[0]
        if not c0.num.is_zero():
            out.entries[(i, j)] = c0
    return out


def _chain_slot_labels(l, n):
    return [site_labels(l)] * (n + 1)


def monodromy_t(l, u, us):
    """T(u) = R_{0,n}(u - u_n) ... R_{0,1}(u - u_1) on slots (aux, 1..n)."""
    u = _as_rat(u)
    n = len(us)
    slots = _chain_slot_labels(l, n)
    if n == 0:
        full = [tuple(t) for t in itertools.product(*slots)]
        return LabeledMatrix.identity(full)
    prod = None
    for k in range(n, 0, -1):
        factor = embed_on_slots(yang_r(l, u - _as_rat(us[k - 1])), (0, k), slots)
        prod = factor if prod is None else prod * factor
    return prod


def twisted_monodromy(l, u, us, kind):
    """T_twist(-u) = R'_{0,n}(-u - u_n) ... R'_{0,1}(-u - u_1), R' = cross_r."""
    u = _as_rat(u)
    n = len(us)
    slots = _chain_slot_labels(l, n)
    if n == 0:
        full = [tuple(t) for t in itertools.product(*slots)]
        return LabeledMatrix.identity(full)
    prod = None
    zero = RatFunc.zero()
    for k in range(n, 0, -1):
        arg = zero - u - _as_rat(us[k - 1])
        factor = embed_on_slots(cross_r(kind, l, arg), (0, k), slots)
        prod = factor if prod is None else prod * factor
    return prod


def s_matrix(kind, l, u, us):
    """Boundary transfer product in factored form.

    Left factors are the flipped twisted R at u + u_k for k = 1..n (k = 1
    leftmost), then the boundary matrix at u on the auxiliary slot, then
    the plain R at u - u_k for k = n..1.
    """
    u = _as_rat(u)
    n = len(us)
    slots = _chain_slot_labels(l, n)
    prod = None
    for k in range(1, n + 1):
        factor = embed_on_slots(cross_r_flipped(kind, l, u + _as_rat(us[k - 1])), (0, k), slots)
        prod = factor if prod is None else prod * factor
    k0 = embed_on_slots(k_matrix(kind, l, u), (0,), slots)
    prod = k0 if prod is None else prod * k0
    for k in range(n, 0, -1):
        factor = embed_on_slots(yang_r(l, u - _as_rat(us[k - 1])), (0, k), slots)
        prod = prod * factor
    return prod


def s_matrix_via_transfer(kind, l, u, us):
    """Same boundary transfer, computed as Ttwist(-u)^-1 K(u) T(u)."""
    u = _as_rat(u)
    n = len(us)
    slots = _chain_slot_labels(l, n)
    k0 = embed_on_slots(k_matrix(kind, l, u), (0,), slots)
    return twisted_monodromy(l, u, us, kind).inverse() * k0 * monodromy_t(l, u, us)
