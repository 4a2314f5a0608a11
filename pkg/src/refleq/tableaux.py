"""Fixed-point tableaux for the involution-twisted instanton and flag setups.

Instanton side: a tableau has one row per index k in {-w1..-1, 1..w1}.
Positive rows have a single entry from 1..l; the row at -k holds the
complement of row k's entry, in increasing order (length l-1).  A local
combinatorial condition on ordered row pairs produces two charge counts
(the symplectic and orthogonal ones), which drive Betti numbers via
t^(2*charge).

Flag side: rows are indexed by +-1..+-floor(w/2) (plus a center row 0 when
w is odd), each of length one, with entry(-k) = l+1-entry(k).  The content
of a tableau determines the dimension vector it contributes to.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class InstantonTableau:
    l: int
    w1: int
    rows: tuple  # ((k, entries), ...) sorted by k

    @staticmethod
    def from_positive_entries(l, w1, entries):
        """Build the tableau whose positive rows carry the given entries.

        entries[k-1] is the single entry of row k; row -k gets the
        complement of that entry in 1..l, increasing.
        """
        if len(entries) != w1:
            raise ValueError(f"need {w1} positive-row entries, got {len(entries)}")
        rows = {}
        for k in range(1, w1 + 1):
            e = entries[k - 1]
            if not 1 <= e <= l:
                raise ValueError(f"entry {e} out of range 1..{l}")
            rows[k] = (e,)
            rows[-k] = tuple(x for x in range(1, l + 1) if x != e)
        return InstantonTableau(l, w1, tuple(sorted(rows.items())))

    def row(self, k):
        for kk, entries in self.rows:
            if kk == k:
                return entries
        raise KeyError(k)

    def row_indices(self):
        return tuple(k for k, _ in self.rows)

    def entry(self, k, a):
        """T(k, a), 1-based column; None when the node does not exist."""
        r = self.row(k)
        if 1 <= a <= len(r):
            return r[a - 1]
        return None

    def positive_entry(self, k):
        """The single entry of row |k|."""
        return self.row(abs(k))[0]

    def to_json(self):
        return {
            "rows": {str(k): list(es) for k, es in self.rows},
            "spCharge": sp_charge(self),
            "soCharge": so_charge(self),
        }


def enumerate_instanton(l, w1):
    """All fixed-point tableaux, one per choice of positive-row entries."""
    if l < 2:
        raise ValueError("need at least two entry values")
    return [
        InstantonTableau.from_positive_entries(l, w1, entries)
        for entries in itertools.product(range(1, l + 1), repeat=w1)
    ]


def condition_met(t, k, l_row, a):
    """The pair condition at node (k, a) against row l_row.

    Holds when the entry T(k, a) beats row l_row in the staggered sense
    (same column for rows below, next column for rows above) and does not
    already appear in row l_row.  Missing nodes fail the comparison.
    """
    val = t.entry(k, a)
    if val is None or l_row == k:
        return False
    if l_row < k:
        other = t.entry(l_row, a)
        beats = other is not None and other < val
    else:
        other = t.entry(l_row, a + 1)
        beats = other is not None and other < val
    return beats and val not in t.row(l_row)


def charge_pair_counts(t):
    """(A, B): satisfied triples (k, l, a) split by l == -k vs l != -k."""
    a_diag = 0
    b_off = 0
    for k in t.row_indices():
        for a in range(1, len(t.row(k)) + 1):
            for l_row in t.row_indices():
                if l_row == k:
                    continue
                if condition_met(t, k, l_row, a):
                    if l_row == -k:
                        a_diag += 1
                    else:
                        b_off += 1
    return a_diag, b_off


def sp_charge(t):
    a_diag, b_off = charge_pair_counts(t)
    if b_off % 2:
        raise AssertionError(f"off-diagonal count {b_off} is odd")
    return a_diag + b_off // 2


def so_charge(t):
    _, b_off = charge_pair_counts(t)
    if b_off % 2:
        raise AssertionError(f"off-diagonal count {b_off} is odd")
    return b_off // 2


def charge(t, kind):
    if kind == "sp":
        return sp_charge(t)
    if kind == "so":
        return so_charge(t)
    raise ValueError(f"unknown kind {kind!r}")


def dim_h1_pair(t, k, l_row):
    """Deformation-space dimension for the ordered row pair (k, l_row).

    Depends only on whether k and l_row have the same sign and whether the
    two positive-row entries coincide.
    """
    same_entry = t.positive_entry(k) == t.positive_entry(l_row)
    if k * l_row > 0:
        return 0 if same_entry else 1
    return 1 if same_entry else 0


def tangent_dimension(t, kind):
    """Tangent dimension at the fixed point.

    Ordered pairs (k, -k) count fully in the symplectic case and not at
    all in the orthogonal one; all other ordered pairs contribute half.
    """
    idx = t.row_indices()
    diag = 0
    off = 0
    for k in idx:
        for l_row in idx:
            if l_row == k:
                continue
            d = dim_h1_pair(t, k, l_row)
            if l_row == -k:
                diag += d
            else:
                off += d
    if off % 2:
        raise AssertionError(f"off-diagonal tangent sum {off} is odd")
    half = off // 2
    if kind == "sp":
        return diag + half
    if kind == "so":
        return half
    raise ValueError(f"unknown kind {kind!r}")


def poincare_polynomial(kind, l, w1):
    """Betti generating function as {exponent: coefficient} in t."""
    poly = {}
    for t in enumerate_instanton(l, w1):
        e = 2 * charge(t, kind)
        poly[e] = poly.get(e, 0) + 1
    return poly


def format_tpoly(poly):
    if not poly:
        return "0"
    parts = []
    for e in sorted(poly):
        c = poly[e]
        if e == 0:
            parts.append(str(c))
        elif e == 1:
            parts.append("t" if c == 1 else f"{c}*t")
        else:
            parts.append(f"t^{e}" if c == 1 else f"{c}*t^{e}")
    return " + ".join(parts)


def betti_report(kind, l, w1):
    """Count, Betti polynomial, and common tangent dimension."""
    tabs = enumerate_instanton(l, w1)
    dims = {tangent_dimension(t, kind) for t in tabs}
    if len(dims) != 1:
        raise AssertionError(f"tangent dimension not constant: {sorted(dims)}")
    poly = {}
    for t in tabs:
        e = 2 * charge(t, kind)
        poly[e] = poly.get(e, 0) + 1
    return {
        "count": len(tabs),
        "poincare": format_tpoly(poly),
        "dimension": dims.pop(),
    }


def so_component_report(l, w1):
    """Structure of the orthogonal fixed locus.

    Always reports the number of zero-charge points.  For l = 2 the points
    split by the parity of how many positive rows carry entry 2; both
    parity classes are reported with their sizes.
    """
    tabs = enumerate_instanton(l, w1)
    zero = sum(1 for t in tabs if so_charge(t) == 0)
    report = {"count": len(tabs), "zeroChargeCount": zero}
    if l == 2:
        sizes = {0: 0, 1: 0}
        for t in tabs:
            twos = sum(1 for k in range(1, w1 + 1) if t.positive_entry(k) == 2)
            sizes[twos % 2] += 1
        report["parityComponents"] = [sizes[0], sizes[1]]
    return report


@dataclass(frozen=True)
class FlagTableau:
    l: int
    w: int
    entries: tuple  # ((k, entry), ...) sorted by k

    def entry(self, k):
        for kk, e in self.entries:
            if kk == k:
                return e
        raise KeyError(k)

    def row_indices(self):
        return tuple(k for k, _ in self.entries)

    def content(self):
        """Dimension vector (v_1..v_{l-1}) determined by the entry counts."""
        counts = [0] * (self.l + 1)
        for _, e in self.entries:
            counts[e] += 1
        v = []
        running = self.w
        for i in range(1, self.l):
            running -= counts[i]
            v.append(running)
        return tuple(v)

    def to_json(self):
        return {"rows": {str(k): [e] for k, e in self.entries}, "v": list(self.content())}


def _flag_row_indices(w):
    m = w // 2
    ks = list(range(-m, 0)) + list(range(1, m + 1))
    if w % 2:
        ks.append(0)
    return sorted(ks)


def flag_fixed_points(sign, l, w, v=None):
    """Flag fixed-point tableaux for the given twist sign.

    Returns (points, diagnostics).  With v = None the enumeration runs over
    every admissible dimension vector; otherwise only tableaux whose
    content equals v are kept.  An incompatible request yields no points
    plus a human-readable diagnostic instead of an exception.
    """
    if sign not in ("plus", "minus"):
        raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")
    diagnostics = []
    if sign == "minus" and w % 2:
        diagnostics.append(
            f"the minus twist needs an even total framing dimension, got w = {w}"
        )
        return [], diagnostics
    if w % 2 and l % 2 == 0:
        diagnostics.append(
            f"a center row needs the middle entry value (l+1)/2, but l = {l} is even"
        )
        return [], diagnostics
    if v is not None:
        v = tuple(v)
        if len(v) != l - 1:
            diagnostics.append(f"dimension vector must have length {l - 1}, got {len(v)}")
            return [], diagnostics
        full = (w,) + v + (0,)
        bad = [i for i in range(l + 1) if full[i] + full[l - i] != w]
        if bad:
            i = bad[0]
            diagnostics.append(
                f"dimension vector incompatible with the twist: "
                f"v_{i} + v_{l - i} = {full[i] + full[l - i]} != w = {w}"
            )
            return [], diagnostics
        steps = [full[i - 1] - full[i] for i in range(1, l + 1)]
        if any(s < 0 for s in steps):
            diagnostics.append(
                "dimension vector is not a valid content profile "
                f"(some v_i-1 - v_i is negative): {v}"
            )
            return [], diagnostics
    m = w // 2
    points = []
    for choice in itertools.product(range(1, l + 1), repeat=m):
        entries = {}
        for k in range(1, m + 1):
            entries[k] = choice[k - 1]
            entries[-k] = l + 1 - choice[k - 1]
        if w % 2:
            entries[0] = (l + 1) // 2
        tab = FlagTableau(l, w, tuple(sorted(entries.items())))
        if v is None or tab.content() == v:
            points.append(tab)
    return points, diagnostics
