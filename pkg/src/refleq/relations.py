"""Verification of the exchange identities between the R- and K-matrices.

Five families of identities are checked here, all as exact statements about
matrices over the rational-function field:

  * the quantum Yang-Baxter identity for a two-site R-matrix family,
  * unitarity, both for R-families (R(w) R(-w) = 1) and for the one-site
    boundary matrices (K(-u) K(u) = 1),
  * the boundary reflection identity tying a scenario's boundary matrix to
    its plain and twisted two-site R-matrices,
  * the exchange relations between auxiliary-space monodromies over a finite
    chain (plain/plain through twisted/twisted),
  * the chain-level reflection identity satisfied by the dressed boundary
    operator built in rkmat.s_matrix.

Every check returns a plain-dict verdict with at least the keys "identity",
"l", "holds", "mode" and "detail"; failing symbolic checks also carry a
"counterexample" with the first mismatching entry and both values.  Verdicts
are JSON-serializable so the CLI can emit them unchanged.

The symbolic mode compares canonical forms and is preferred wherever the
matrices stay small.  For the Yang-Baxter identity at larger site dimensions
the products are never formed symbolically: check_ybe evaluates the six
factors on an integer grid large enough to pin down the cleared difference
polynomial (see _verify_product_identity) and multiplies numerically, which
is still a proof, not a sample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .field import U, U1, U2, U3, U4, format_ratfunc, poly_div_exact, poly_gcd, RatFunc
from .matrix import (
    GridError,
    LabeledMatrix,
    _active_vars,
    _build_grid,
    _label_to_json,
    embed_on_slots,
    swap_conjugate,
    verify_identity,
)
from .rkmat import (
    KINDS,
    constant_term_matrix,
    cross_r,
    cross_r_flipped,
    k_matrix,
    k_matrix_opposite_placement,
    s_matrix,
    s_matrix_via_transfer,
    sigma_matrix,
    sigma_sigma_r,
    site_labels,
    yang_r,
)

EXCHANGE_VARIANTS = ("plainPlain", "plainTwisted", "twistedPlain", "twistedTwisted")

BOUNDARY_VARIANTS = ("standard", "oppositePlacement")

# total tensor dimension cap for any single check; symbolic Yang-Baxter and
# reflection checks keep their own tighter limits on the site dimension
DIMENSION_BOUND = 256
SYMBOLIC_YBE_MAX_L = 3
REFLECTION_MAX_L = 5


def _require_dim(dim):
    if dim > DIMENSION_BOUND:
        raise ValueError(f"tensor dimension {dim} exceeds the bound {DIMENSION_BOUND}")


# ---------------------------------------------------------------------------
# scenarios and verdicts


@dataclass(frozen=True)
class Scenario:
    """The matrix builders entering one boundary scenario's identities.

    Each builder takes the spectral argument only; the site dimension is
    baked in.  cross builds the two-site R with the second factor twisted,
    cross_flipped the one with the first factor twisted, and
    twisted_pair_flipped the order-flipped R with both factors twisted.
    """

    kind: str
    l: int
    chain_r: Callable[[object], LabeledMatrix]
    cross: Callable[[object], LabeledMatrix]
    cross_flipped: Callable[[object], LabeledMatrix]
    twisted_pair_flipped: Callable[[object], LabeledMatrix]
    boundary_k: Callable[[object], LabeledMatrix]


def make_scenario(kind, l, boundary="standard"):
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if boundary not in BOUNDARY_VARIANTS:
        raise ValueError(f"unknown boundary variant {boundary!r}")
    if boundary == "oppositePlacement":
        if kind != "flagMinus":
            raise ValueError("oppositePlacement only applies to flagMinus")
        k_builder = lambda spec: k_matrix_opposite_placement(l, spec)
    else:
        k_builder = lambda spec: k_matrix(kind, l, spec)
    return Scenario(
        kind=kind,
        l=l,
        chain_r=lambda w: yang_r(l, w),
        cross=lambda w: cross_r(kind, l, w),
        cross_flipped=lambda w: cross_r_flipped(kind, l, w),
        twisted_pair_flipped=lambda w: swap_conjugate(sigma_sigma_r(kind, l, w)),
        boundary_k=k_builder,
    )


def _first_mismatch(lhs, rhs):
    keys = sorted(set(lhs.entries) | set(rhs.entries))
    zero = RatFunc.zero()
    for k in keys:
        a = lhs.entries.get(k, zero)
        b = rhs.entries.get(k, zero)
        if a != b:
            i, j = k
            return {
                "row": _label_to_json(lhs.row_labels[i]),
                "col": _label_to_json(lhs.col_labels[j]),
                "lhs": format_ratfunc(a),
                "rhs": format_ratfunc(b),
            }
    return None


def _compare(lhs, rhs, mode="symbolic"):
    res = verify_identity(lhs, rhs, mode=mode)
    out = {"holds": res["holds"], "mode": res["mode"], "detail": res.get("detail")}
    if not res["holds"]:
        ce = _first_mismatch(lhs, rhs)
        if ce is not None:
            out["counterexample"] = ce
    return out


def _verdict(identity, l, cmp, **extra):
    v = {
        "identity": identity,
        "l": l,
        "holds": cmp["holds"],
        "mode": cmp["mode"],
        "detail": cmp.get("detail"),
    }
    for key in ("counterexample", "gridSize", "degreeBounds"):
        if key in cmp:
            v[key] = cmp[key]
    v.update(extra)
    return v


def _identity_on(slots):
    full = [tuple(t) for t in itertools.product(*slots)]
    return LabeledMatrix.identity(full)


# ---------------------------------------------------------------------------
# multipoint product verification

# Verifying A1 A2 A3 = B1 B2 B3 symbolically means normalizing every entry of
# both six-factor products.  The grid route below avoids that: the cleared
# difference of the two sides is a polynomial whose per-variable degree we can
# bound from the factors alone, so agreement on a large enough integer grid
# already forces it to vanish identically.


def _den_lcm(mat):
    lcm = None
    for val in mat.entries.values():
        d = val.den
        if d.is_const():
            continue
        if lcm is None:
            lcm = d
        else:
            g = poly_gcd(lcm, d)
            lcm = lcm * poly_div_exact(d, g)
    return lcm


def _degree_zero_homogeneous(mat):
    for val in mat.entries.values():
        dn = {sum(exps) for exps in val.num.terms}
        dd = {sum(exps) for exps in val.den.terms}
        if len(dn) > 1 or len(dd) > 1:
            return False
        if dn and dd and next(iter(dn)) != next(iter(dd)):
            return False
    return True


def _product_degree_bounds(lhs_factors, rhs_factors, variables):
    """Per-variable degree bound for the cleared difference of two products.

    Scaling a factor by the lcm D of its entry denominators makes it a
    polynomial matrix; a product entry is a sum of path terms over the common
    denominator prod(D_f), so after clearing, the difference has numerator
    degree at most max over the two sides of (sum of scaled numerator degree
    bounds on one side + sum of lcm degrees on the other).
    """
    sides = []
    for factors in (lhs_factors, rhs_factors):
        num_deg = {v: 0 for v in variables}
        den_deg = {v: 0 for v in variables}
        for mat in factors:
            lcm = _den_lcm(mat)
            for v in variables:
                ld = max(lcm.degree(v), 0) if lcm is not None else 0
                dn = 0
                for val in mat.entries.values():
                    cleared = max(val.num.degree(v), 0) + ld - max(val.den.degree(v), 0)
                    dn = max(dn, cleared)
                num_deg[v] += dn
                den_deg[v] += ld
        sides.append((num_deg, den_deg))
    (ln, ld), (rn, rd) = sides
    return {v: max(ln[v] + rd[v], rn[v] + ld[v]) for v in variables}


def _rows_of(evaluated):
    rows = {}
    for (i, j), val in evaluated.items():
        if val:
            rows.setdefault(i, {})[j] = val
    return rows


def _matmul_rows(a, b):
    out = {}
    for i, arow in a.items():
        acc = {}
        for k, av in arow.items():
            brow = b.get(k)
            if not brow:
                continue
            for j, bv in brow.items():
                cur = acc.get(j)
                cur = av * bv if cur is None else cur + av * bv
                acc[j] = cur
        row = {j: v for j, v in acc.items() if v}
        if row:
            out[i] = row
    return out


def _product_at_point(factors, assignment):
    rows = None
    for mat in factors:
        cur = _rows_of(mat.eval_entries(assignment))
        rows = cur if rows is None else _matmul_rows(rows, cur)
    return rows or {}


def _verify_product_identity(lhs_factors, rhs_factors):
    """Grid proof that two ordered matrix products agree, factor by factor.

    All factors must share the same (square) label set.  Entries are
    evaluated per grid point and multiplied as sparse matrices of Fractions;
    the grid has (degree bound + 1) points per variable, which makes full
    agreement equivalent to the symbolic identity.  When every factor entry
    is homogeneous of degree zero (jointly in h and the spectral variables),
    the h = 1 slice is faithful and h is dropped from the grid.
    """
    mats = list(lhs_factors) + list(rhs_factors)
    active = _active_vars(mats)
    drop_h = "h" in active and all(_degree_zero_homogeneous(m) for m in mats)
    if drop_h:
        active = [v for v in active if v != "h"]
    if not active:
        lhs = _product_at_point(lhs_factors, {})
        rhs = _product_at_point(rhs_factors, {})
        return {"holds": lhs == rhs, "mode": "multipoint", "detail": "constant factors", "gridSize": 1}
    bounds = _product_degree_bounds(lhs_factors, rhs_factors, active)
    points = _build_grid(mats, active, bounds)
    ref = lhs_factors[0]
    n_points = 0
    for combo in itertools.product(*(points[v] for v in active)):
        assignment = dict(zip(active, combo))
        assignment.setdefault("h", Fraction(1))
        n_points += 1
        lhs = _product_at_point(lhs_factors, assignment)
        rhs = _product_at_point(rhs_factors, assignment)
        if lhs != rhs:
            i, j = _first_row_col_diff(lhs, rhs)
            return {
                "holds": False,
                "mode": "multipoint",
                "detail": f"product mismatch at grid point {_point_str(assignment)}",
                "gridSize": n_points,
                "counterexample": {
                    "row": _label_to_json(ref.row_labels[i]),
                    "col": _label_to_json(ref.col_labels[j]),
                    "lhs": str(lhs.get(i, {}).get(j, Fraction(0))),
                    "rhs": str(rhs.get(i, {}).get(j, Fraction(0))),
                    "point": _point_str(assignment),
                },
            }
    slice_note = "on the h = 1 slice (degree-zero homogeneous factors)" if drop_h else ""
    return {
        "holds": True,
        "mode": "multipoint",
        "detail": (
            f"products agree on the full grid ({n_points} points"
            f", bounds {dict(sorted(bounds.items()))}) {slice_note}".rstrip()
        ),
        "gridSize": n_points,
        "degreeBounds": dict(sorted(bounds.items())),
    }


def _first_row_col_diff(lhs, rhs):
    rows = sorted(set(lhs) | set(rhs))
    for i in rows:
        cols = sorted(set(lhs.get(i, {})) | set(rhs.get(i, {})))
        for j in cols:
            if lhs.get(i, {}).get(j, 0) != rhs.get(i, {}).get(j, 0):
                return i, j
    raise AssertionError("products compared unequal but no entry differs")


def _point_str(assignment):
    return "{" + ", ".join(f"{k}={v}" for k, v in sorted(assignment.items())) + "}"


# ---------------------------------------------------------------------------
# Yang-Baxter and unitarity


def check_ybe(l, r_builder=None, mode="symbolic", family="chain"):
    """Yang-Baxter identity R12 R13 R23 = R23 R13 R12 for a difference family.

    r_builder(l, w) must produce the two-site matrix; the default is the
    rational chain R-matrix.  In symbolic mode the three spectral parameters
    stay independent.  In multipoint mode the factors are built on the slice
    u3 = 0; since each argument is a pairwise difference, that slice is a
    faithful linear reparametrization of the identity, not a specialization.
    """
    builder = r_builder or (lambda ll, w: yang_r(ll, w))
    _require_dim(l ** 3)
    if mode == "symbolic" and l > SYMBOLIC_YBE_MAX_L:
        raise ValueError(
            f"symbolic Yang-Baxter is limited to l <= {SYMBOLIC_YBE_MAX_L}; use multipoint"
        )
    labels = site_labels(l)
    slots = [labels] * 3
    if mode == "symbolic":
        args = (U1 - U2, U1 - U3, U2 - U3)
    else:
        args = (U1 - U2, U1, U2)
    r12 = embed_on_slots(builder(l, args[0]), (0, 1), slots)
    r13 = embed_on_slots(builder(l, args[1]), (0, 2), slots)
    r23 = embed_on_slots(builder(l, args[2]), (1, 2), slots)
    if mode == "symbolic":
        cmp = _compare(r12 * r13 * r23, r23 * r13 * r12, mode="symbolic")
    elif mode == "multipoint":
        cmp = _verify_product_identity([r12, r13, r23], [r23, r13, r12])
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return _verdict("yangBaxter", l, cmp, family=family)


def check_r_unitarity(l, r_builder=None, family="chain", kind=None):
    """R(w) R(-w) = 1 together with flip symmetry of the family.

    Flip symmetry (conjugation by the tensor swap leaves R unchanged) is what
    lets the order-flipped matrix R21 be identified with R itself, so it is
    asserted as part of the same verdict.
    """
    if r_builder is None:
        if family == "chain":
            r_builder = lambda ll, w: yang_r(ll, w)
        elif family == "cross":
            r_builder = lambda ll, w: cross_r(kind, ll, w)
        else:
            raise ValueError(f"unknown family {family!r}")
    d = U1 - U2
    fwd = r_builder(l, d)
    bwd = r_builder(l, -d)
    ident = LabeledMatrix.identity(fwd.row_labels)
    cmp = _compare(fwd * bwd, ident, mode="symbolic")
    if cmp["holds"]:
        flip = _compare(swap_conjugate(fwd), fwd, mode="symbolic")
        if not flip["holds"]:
            cmp = {
                "holds": False,
                "mode": "symbolic",
                "detail": "product is the identity but the family is not flip-symmetric",
                "counterexample": flip.get("counterexample"),
            }
    return _verdict("rUnitarity", l, cmp, family=family, kind=kind)


def check_k_unitarity(kind, l, k_builder=None):
    """Boundary unitarity K(-u) K(u) = 1 for the scenario's one-site matrix.

    k_builder(u) overrides the scenario matrix when given, so ad-hoc boundary
    candidates can be screened with the same verdict plumbing.
    """
    builder = k_builder or (lambda spec: k_matrix(kind, l, spec))
    fwd = builder(U)
    bwd = builder(-U)
    ident = LabeledMatrix.identity(fwd.row_labels)
    cmp = _compare(bwd * fwd, ident, mode="symbolic")
    return _verdict("kUnitarity", l, cmp, kind=kind)


# ---------------------------------------------------------------------------
# reflection


def reflection_sides(kind, l, boundary="standard", k_builder=None):
    """Build the two sides of the reflection identity without comparing them.

    Exposed separately so invariance tests can evaluate the sides at chosen
    points (for instance h = 0, where both must become the same permutation
    matrix).  k_builder(u) overrides the scenario boundary matrix.
    """
    sc = make_scenario(kind, l, boundary=boundary)
    boundary_k = k_builder or sc.boundary_k
    labels = site_labels(l)
    slots = [labels, labels]
    k1 = embed_on_slots(boundary_k(U1), (0,), slots)
    k2 = embed_on_slots(boundary_k(U2), (1,), slots)
    x = U1 + U2
    d = U1 - U2
    lhs = k2 * sc.cross_flipped(x) * k1 * sc.chain_r(d)
    rhs = sc.twisted_pair_flipped(d) * k1 * sc.cross(x) * k2
    return lhs, rhs


def check_reflection(kind, l, mode="symbolic", boundary="standard", k_builder=None):
    """Two-site reflection identity for a scenario's boundary matrix.

    With K_a the boundary matrix on tensor slot a, C the twisted-factor cross
    R and Y the plain chain R, the identity reads

        K2(u2) C21(u1+u2) K1(u1) Y(u1-u2)
            = Y21(u1-u2) K1(u1) C(u1+u2) K2(u2)

    where the subscript 21 marks conjugation by the tensor swap.  The
    boundary argument selects the standard matrix or, for flagMinus, the
    rejected opposite-placement variant that this identity is expected to
    rule out; k_builder substitutes an arbitrary boundary candidate instead.
    """
    if l > REFLECTION_MAX_L:
        raise ValueError(f"reflection checks are limited to l <= {REFLECTION_MAX_L}")
    lhs, rhs = reflection_sides(kind, l, boundary=boundary, k_builder=k_builder)
    cmp = _compare(lhs, rhs, mode=mode)
    return _verdict("reflection", l, cmp, kind=kind, boundary=boundary)


def reflection_expectation(kind, l, boundary="standard"):
    """Expected outcome of check_reflection: True, False, or None (reported).

    The table pins the outcomes that are treated as regressions when they
    change.  spInstanton above l = 2 is deliberately unpinned: the identity
    fails there for every sign convention of the cross matrix, matching the
    failure of the corresponding polarization instances, and the suite
    reports it without letting it affect the exit status.
    """
    if boundary == "oppositePlacement":
        return False
    pinned = {
        "flagPlus": (2, 3, 4, 5),
        "flagMinus": (2, 3, 4),
        "soInstanton": (2, 3),
        "spInstanton": (2,),
    }
    if l in pinned[kind]:
        return True
    return None


# ---------------------------------------------------------------------------
# monodromy exchange over a chain


def _chain_product(builder, l, spect, shifts, aux_pos, slots):
    """Ordered product of aux-to-site couplings, site n factor leftmost.

    builder(l, w) gives the two-site matrix; the factor at chain site k
    (living on tensor slots (aux_pos, 1 + k)) gets argument spect - shifts[k-1].
    """
    prod = None
    for k in range(len(shifts), 0, -1):
        mat = builder(l, spect - shifts[k - 1])
        factor = embed_on_slots(mat, (aux_pos, 1 + k), slots)
        prod = factor if prod is None else prod * factor
    return prod if prod is not None else _identity_on(slots)


def check_monodromy_exchange(l, n, variant, kind="soInstanton"):
    """Exchange relation between two auxiliary monodromies over an n-site chain.

    T_a(w) is the plain monodromy on auxiliary slot a (chain R-matrices), and
    S_a(w) the twisted one (cross R-matrices).  The four variants, with u the
    first and v the second auxiliary parameter, are:

      plainPlain      Y(u-v)  T1(u)  T2(v)  = T2(v)  T1(u)  Y(u-v)
      plainTwisted    C(u+v)  T1(u)  S2(-v) = S2(-v) T1(u)  C(u+v)
      twistedPlain    C(-u-v) S1(-u) T2(v)  = T2(v)  S1(-u) C(-u-v)
      twistedTwisted  Z(v-u)  S1(-u) S2(-v) = S2(-v) S1(-u) Z(v-u)

    where Y is the chain R, C the cross R (flipped when the twisted factor
    sits first) and Z the R-matrix for two twisted factors.
    """
    if variant not in EXCHANGE_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    _require_dim(l ** (2 + n))
    labels = site_labels(l)
    slots = [labels, labels] + [labels] * n
    shifts = (U1, U2)[:n]
    u, v = U, U4
    plain = lambda ll, w: yang_r(ll, w)
    crossb = lambda ll, w: cross_r(kind, ll, w)
    if variant == "plainPlain":
        t1 = _chain_product(plain, l, u, shifts, 0, slots)
        t2 = _chain_product(plain, l, v, shifts, 1, slots)
        r = embed_on_slots(yang_r(l, u - v), (0, 1), slots)
    elif variant == "plainTwisted":
        t1 = _chain_product(plain, l, u, shifts, 0, slots)
        t2 = _chain_product(crossb, l, -v, shifts, 1, slots)
        r = embed_on_slots(cross_r(kind, l, u + v), (0, 1), slots)
    elif variant == "twistedPlain":
        t1 = _chain_product(crossb, l, -u, shifts, 0, slots)
        t2 = _chain_product(plain, l, v, shifts, 1, slots)
        r = embed_on_slots(cross_r_flipped(kind, l, -u - v), (0, 1), slots)
    else:
        t1 = _chain_product(crossb, l, -u, shifts, 0, slots)
        t2 = _chain_product(crossb, l, -v, shifts, 1, slots)
        r = embed_on_slots(sigma_sigma_r(kind, l, v - u), (0, 1), slots)
    cmp = _compare(r * t1 * t2, t2 * t1 * r, mode="symbolic")
    return _verdict("monodromyExchange", l, cmp, kind=kind, variant=variant, sites=n)


def check_twisted_plain_derivation(l, n, kind="soInstanton"):
    """Consistency of the two routes to the twistedPlain exchange relation.

    The twistedPlain relation can be checked directly, or derived from
    plainTwisted by conjugating with the auxiliary swap, renaming the two
    spectral parameters, and then moving the cross matrix across with
    unitarity.  This runs both routes and confirms they agree: the direct
    check, the swap-conjugated intermediate, and cross unitarity must all
    hold, and the sandwiched form must reproduce the direct one entrywise.
    """
    labels = site_labels(l)
    slots = [labels, labels] + [labels] * n
    shifts = (U1, U2)[:n]
    u, v = U, U4
    plain = lambda ll, w: yang_r(ll, w)
    crossb = lambda ll, w: cross_r(kind, ll, w)
    direct = check_monodromy_exchange(l, n, "twistedPlain", kind=kind)
    # swap-conjugated plainTwisted with the parameter names exchanged:
    #   C21(u+v) T2(v) S1(-u) = S1(-u) T2(v) C21(u+v)
    t2 = _chain_product(plain, l, v, shifts, 1, slots)
    s1 = _chain_product(crossb, l, -u, shifts, 0, slots)
    c21 = embed_on_slots(cross_r_flipped(kind, l, u + v), (0, 1), slots)
    inter_lhs = c21 * t2 * s1
    inter_rhs = s1 * t2 * c21
    inter = _compare(inter_lhs, inter_rhs, mode="symbolic")
    unit = check_r_unitarity(l, family="cross", kind=kind)
    # sandwiching the intermediate between two copies of C21(u+v)^{-1}
    # = C21(-u-v) must reproduce the direct relation's sides verbatim (the
    # intermediate's rhs turns into the direct lhs and vice versa)
    c21_inv = embed_on_slots(cross_r_flipped(kind, l, -u - v), (0, 1), slots)
    direct_lhs = c21_inv * s1 * t2
    direct_rhs = t2 * s1 * c21_inv
    bridge_a = _compare(c21_inv * inter_rhs * c21_inv, direct_lhs, mode="symbolic")
    bridge_b = _compare(c21_inv * inter_lhs * c21_inv, direct_rhs, mode="symbolic")
    holds = (
        direct["holds"]
        and inter["holds"]
        and unit["holds"]
        and bridge_a["holds"]
        and bridge_b["holds"]
    )
    detail = (
        f"direct={direct['holds']} swapped-intermediate={inter['holds']} "
        f"cross-unitarity={unit['holds']} "
        f"sandwich={bridge_a['holds'] and bridge_b['holds']}"
    )
    cmp = {"holds": holds, "mode": "symbolic", "detail": detail}
    return _verdict("twistedPlainDerivation", l, cmp, kind=kind, sites=n)


# ---------------------------------------------------------------------------
# chain-level reflection for the dressed boundary operator


def check_chain_reflection(kind, l, n=1):
    """Reflection identity for the dressed boundary operator on an n-site chain.

    S_a(w) is rkmat.s_matrix acting on auxiliary slot a and the shared chain
    sites; the cross and chain R-matrices act on the two auxiliary slots.
    The identity has the same shape as check_reflection with each K replaced
    by the dressed S.  At n = 0 the dressed operator is the boundary matrix
    itself (s_matrix with no chain sites), so the check delegates.
    """
    if n == 0:
        v = check_reflection(kind, l)
        v["identity"] = "chainReflection"
        v["sites"] = 0
        return v
    _require_dim(l ** (2 + n))
    labels = site_labels(l)
    slots = [labels, labels] + [labels] * n
    shifts = (U3,)[:n] if n <= 1 else (U3, U4)[:n]
    chain_positions = tuple(range(2, 2 + n))
    s1 = embed_on_slots(s_matrix(kind, l, U1, shifts), (0,) + chain_positions, slots)
    s2 = embed_on_slots(s_matrix(kind, l, U2, shifts), (1,) + chain_positions, slots)
    sc = make_scenario(kind, l)
    x = U1 + U2
    d = U1 - U2
    c21 = embed_on_slots(sc.cross_flipped(x), (0, 1), slots)
    c = embed_on_slots(sc.cross(x), (0, 1), slots)
    y = embed_on_slots(sc.chain_r(d), (0, 1), slots)
    z21 = embed_on_slots(sc.twisted_pair_flipped(d), (0, 1), slots)
    lhs = s2 * c21 * s1 * y
    rhs = z21 * s1 * c * s2
    cmp = _compare(lhs, rhs, mode="symbolic")
    return _verdict("chainReflection", l, cmp, kind=kind, sites=n)


def check_boundary_factorization(kind, l, n=1):
    """The dressed boundary operator equals its transfer-style factorization.

    s_matrix builds the operator as an ordered product of cross factors, the
    boundary matrix and chain factors; s_matrix_via_transfer instead inverts
    the twisted monodromy.  The two must agree as matrices.
    """
    shifts = (U1, U2)[:n]
    direct = s_matrix(kind, l, U, shifts)
    transfer = s_matrix_via_transfer(kind, l, U, shifts)
    cmp = _compare(direct, transfer, mode="symbolic")
    return _verdict("boundaryFactorization", l, cmp, kind=kind, sites=n)


def check_boundary_constant_term(kind, l, n=1):
    """Large-spectral-parameter limit of the dressed boundary operator.

    The limit must be the scenario's involutive constant matrix on the
    auxiliary slot, extended by the identity over the chain sites.
    """
    labels = site_labels(l)
    slots = [labels] * (1 + n)
    shifts = (U1, U2)[:n]
    dressed = s_matrix(kind, l, U, shifts)
    limit = constant_term_matrix(dressed, "u")
    expected = embed_on_slots(sigma_matrix(kind, l), (0,), slots)
    cmp = _compare(limit, expected, mode="symbolic")
    return _verdict("boundaryConstantTerm", l, cmp, kind=kind, sites=n)


# ---------------------------------------------------------------------------
# suites


def suite_items(suite="all", l=None):
    """Descriptor list for run_suite, in a fixed deterministic order.

    Every descriptor carries the expected outcome: True or False for pinned
    results, None for reported-only experiments that never affect the suite
    verdict.  The default sizes are l = 2 and 3; passing l restricts to one.
    """
    known = ("all", "ybe", "unitarity", "reflection", "exchange", "boundary")
    if suite not in known:
        raise ValueError(f"unknown suite {suite!r} (expected one of {known})")
    sizes = (l,) if l is not None else (2, 3)
    items = []

    def want(group):
        return suite in ("all", group)

    for size in sizes:
        if want("ybe"):
            mode = "symbolic" if size <= 3 else "multipoint"
            items.append({"check": "yangBaxter", "l": size, "mode": mode, "expected": True})
        if want("unitarity"):
            items.append({"check": "rUnitarity", "l": size, "family": "chain", "expected": True})
            for kind in KINDS:
                items.append(
                    {"check": "rUnitarity", "l": size, "family": "cross", "kind": kind, "expected": True}
                )
            for kind in KINDS:
                items.append({"check": "kUnitarity", "l": size, "kind": kind, "expected": True})
        if want("reflection"):
            for kind in KINDS:
                items.append(
                    {
                        "check": "reflection",
                        "l": size,
                        "kind": kind,
                        "boundary": "standard",
                        "expected": reflection_expectation(kind, size),
                    }
                )
            items.append(
                {
                    "check": "reflection",
                    "l": size,
                    "kind": "flagMinus",
                    "boundary": "oppositePlacement",
                    "expected": False,
                }
            )
        if want("exchange") and size == 2:
            for kind in KINDS:
                for variant in EXCHANGE_VARIANTS:
                    for sites in (1, 2):
                        items.append(
                            {
                                "check": "monodromyExchange",
                                "l": size,
                                "kind": kind,
                                "variant": variant,
                                "sites": sites,
                                "expected": True,
                            }
                        )
                items.append(
                    {"check": "twistedPlainDerivation", "l": size, "kind": kind, "sites": 1, "expected": True}
                )
        if want("boundary") and size <= 3:
            for kind in KINDS:
                # the spInstanton chain reflection above l = 2 is a slow
                # reported-only failure; the plain reflection item already
                # covers it, so the suite leaves the dressed version out
                if not (kind == "spInstanton" and size > 2):
                    items.append({"check": "chainReflection", "l": size, "kind": kind, "sites": 1,
                                  "expected": reflection_expectation(kind, size)})
                items.append({"check": "boundaryFactorization", "l": size, "kind": kind, "sites": 1,
                              "expected": True})
                items.append({"check": "boundaryConstantTerm", "l": size, "kind": kind, "sites": 1,
                              "expected": True})
    return items


def run_suite_item(item):
    check = item["check"]
    l = item["l"]
    if check == "yangBaxter":
        v = check_ybe(l, mode=item.get("mode", "symbolic"))
    elif check == "rUnitarity":
        v = check_r_unitarity(l, family=item["family"], kind=item.get("kind"))
    elif check == "kUnitarity":
        v = check_k_unitarity(item["kind"], l)
    elif check == "reflection":
        v = check_reflection(item["kind"], l, boundary=item.get("boundary", "standard"))
    elif check == "monodromyExchange":
        v = check_monodromy_exchange(l, item["sites"], item["variant"], kind=item["kind"])
    elif check == "twistedPlainDerivation":
        v = check_twisted_plain_derivation(l, item["sites"], kind=item["kind"])
    elif check == "chainReflection":
        v = check_chain_reflection(item["kind"], l, n=item["sites"])
    elif check == "boundaryFactorization":
        v = check_boundary_factorization(item["kind"], l, n=item["sites"])
    elif check == "boundaryConstantTerm":
        v = check_boundary_constant_term(item["kind"], l, n=item["sites"])
    else:
        raise ValueError(f"unknown check {check!r}")
    v["expected"] = item.get("expected")
    return v


def run_suite(suite="all", l=None, jobs=1):
    """Run a verification suite and aggregate the verdicts.

    The suite passes when every pinned expectation is met; reported-only
    items (expected None) are included in the output but never fail it.
    """
    items = suite_items(suite=suite, l=l)
    if jobs and jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = list(pool.map(run_suite_item, items))
    else:
        verdicts = [run_suite_item(it) for it in items]
    ok = all(v["holds"] == v["expected"] for v in verdicts if v["expected"] is not None)
    return {"suite": suite, "ok": ok, "verdicts": verdicts}
