"""Labeled sparse matrices over the exact rational-function field.

Rows and columns carry label sequences (ints, strings, or nested tuples from
Kronecker products); all operations check label compatibility instead of bare
dimensions.  Storage is dict-of-keys on (row_index, col_index) with zeros
dropped, since the big tensor-product matrices in the relation checks are
overwhelmingly sparse.

verify_identity has two modes:

  symbolic   entrywise equality of canonical forms (a proof in itself)
  multipoint entrywise evaluation on a rational grid with enough points per
             variable to exceed the degree of the cleared difference, which
             again is a proof, not a sampling heuristic

Both report a Verdict-style dict so callers can log what was checked.
"""

from __future__ import annotations

from fractions import Fraction

from .field import RatFunc, VARS, format_ratfunc, parse_ratfunc


def _label_to_json(label):
    if isinstance(label, tuple):
        return [_label_to_json(x) for x in label]
    return label


class LabeledMatrix:
    __slots__ = ("row_labels", "col_labels", "entries", "_row_index", "_col_index")

    def __init__(self, row_labels, col_labels, entries=None):
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        if len(set(self.row_labels)) != len(self.row_labels):
            raise ValueError("duplicate row labels")
        if len(set(self.col_labels)) != len(self.col_labels):
            raise ValueError("duplicate column labels")
        self._row_index = {lab: i for i, lab in enumerate(self.row_labels)}
        self._col_index = {lab: j for j, lab in enumerate(self.col_labels)}
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                self.set(r, c, v)

    @property
    def shape(self):
        return (len(self.row_labels), len(self.col_labels))

    def set(self, row_label, col_label, value):
        i = self._row_index[row_label]
        j = self._col_index[col_label]
        if isinstance(value, (int, Fraction)):
            value = RatFunc.const(value)
        if value.is_zero():
            self.entries.pop((i, j), None)
        else:
            self.entries[(i, j)] = value

    def get(self, row_label, col_label):
        i = self._row_index[row_label]
        j = self._col_index[col_label]
        return self.entries.get((i, j), RatFunc.zero())

    def copy(self):
        m = LabeledMatrix(self.row_labels, self.col_labels)
        m.entries = dict(self.entries)
        return m

    @staticmethod
    def identity(labels):
        m = LabeledMatrix(labels, labels)
        one = RatFunc.one()
        for i in range(len(m.row_labels)):
            m.entries[(i, i)] = one
        return m

    @staticmethod
    def from_function(row_labels, col_labels, fn):
        m = LabeledMatrix(row_labels, col_labels)
        for r in m.row_labels:
            for c in m.col_labels:
                v = fn(r, c)
                if v is not None:
                    m.set(r, c, v)
        return m

    def __eq__(self, other):
        if not isinstance(other, LabeledMatrix):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and self.entries == other.entries
        )

    def __add__(self, other):
        if self.row_labels != other.row_labels or self.col_labels != other.col_labels:
            raise ValueError("label mismatch in matrix addition")
        m = self.copy()
        for (i, j), v in other.entries.items():
            s = m.entries.get((i, j), RatFunc.zero()) + v
            if s.is_zero():
                m.entries.pop((i, j), None)
            else:
                m.entries[(i, j)] = s
        return m

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        if isinstance(c, (int, Fraction)):
            c = RatFunc.const(c)
        m = LabeledMatrix(self.row_labels, self.col_labels)
        if c.is_zero():
            return m
        m.entries = {k: v * c for k, v in self.entries.items()}
        return m

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, LabeledMatrix):
            return NotImplemented
        if self.col_labels != other.row_labels:
            raise ValueError(
                "label mismatch in matrix product: "
                f"{self.col_labels[:3]}... vs {other.row_labels[:3]}..."
            )
        by_row = {}
        for (i, k), v in other.entries.items():
            by_row.setdefault(i, []).append((k, v))
        m = LabeledMatrix(self.row_labels, other.col_labels)
        acc = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                prod = a * b
                if key in acc:
                    acc[key] = acc[key] + prod
                else:
                    acc[key] = prod
        m.entries = {k: v for k, v in acc.items() if not v.is_zero()}
        return m

    def kron(self, other):
        rows = [(a, b) for a in self.row_labels for b in other.row_labels]
        cols = [(a, b) for a in self.col_labels for b in other.col_labels]
        m = LabeledMatrix(rows, cols)
        nr2 = len(other.row_labels)
        nc2 = len(other.col_labels)
        for (i1, j1), v1 in self.entries.items():
            for (i2, j2), v2 in other.entries.items():
                m.entries[(i1 * nr2 + i2, j1 * nc2 + j2)] = v1 * v2
        return m

    def transpose(self):
        m = LabeledMatrix(self.col_labels, self.row_labels)
        m.entries = {(j, i): v for (i, j), v in self.entries.items()}
        return m

    def inverse(self):
        """Gauss-Jordan inverse; raises ValueError if singular."""
        if self.row_labels != self.col_labels:
            raise ValueError("inverse needs identical row and column labels")
        n = len(self.row_labels)
        a = [[RatFunc.zero()] * n for _ in range(n)]
        for (i, j), v in self.entries.items():
            a[i][j] = v
        inv = [
            [RatFunc.one() if i == j else RatFunc.zero() for j in range(n)]
            for i in range(n)
        ]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if not a[r][col].is_zero():
                    piv = r
                    break
            if piv is None:
                raise ValueError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            p = a[col][col].inv()
            a[col] = [x * p for x in a[col]]
            inv[col] = [x * p for x in inv[col]]
            for r in range(n):
                if r == col or a[r][col].is_zero():
                    continue
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
        m = LabeledMatrix(self.row_labels, self.col_labels)
        for i in range(n):
            for j in range(n):
                if not inv[i][j].is_zero():
                    m.entries[(i, j)] = inv[i][j]
        return m

    def eval_entries(self, assignment):
        """Evaluate every entry at {var: Fraction} -> dict keyed like entries."""
        return {k: v.eval(assignment) for k, v in self.entries.items()}

    def to_json(self):
        n_rows = len(self.row_labels)
        n_cols = len(self.col_labels)
        dense = [["0"] * n_cols for _ in range(n_rows)]
        for (i, j), v in self.entries.items():
            dense[i][j] = format_ratfunc(v)
        return {
            "rows": [_label_to_json(lab) for lab in self.row_labels],
            "cols": [_label_to_json(lab) for lab in self.col_labels],
            "entries": dense,
        }

    @staticmethod
    def from_json(data):
        def fix(lab):
            return tuple(fix(x) for x in lab) if isinstance(lab, list) else lab

        rows = [fix(lab) for lab in data["rows"]]
        cols = [fix(lab) for lab in data["cols"]]
        m = LabeledMatrix(rows, cols)
        for i, row in enumerate(data["entries"]):
            for j, s in enumerate(row):
                v = parse_ratfunc(s)
                if not v.is_zero():
                    m.entries[(i, j)] = v
        return m

    def __repr__(self):
        return f"<LabeledMatrix {len(self.row_labels)}x{len(self.col_labels)}, {len(self.entries)} nonzero>"


def embed_on_slots(mat, positions, slot_labels):
    """Extend mat (acting on the chosen tensor slots, in order) by identity.

    slot_labels: list of label sequences, one per tensor slot.  positions:
    which slots mat acts on; mat's labels must be tuples over those slots
    (or bare labels if it acts on a single slot).  The result acts on the
    full product with tuple labels.
    """
    import itertools

    n = len(slot_labels)
    full_rows = [tuple(t) for t in itertools.product(*slot_labels)]
    m = LabeledMatrix(full_rows, full_rows)
    others = [i for i in range(n) if i not in positions]
    single = len(positions) == 1

    def sub_label(full):
        picked = tuple(full[p] for p in positions)
        return picked[0] if single else picked

    row_of = {lab: i for i, lab in enumerate(full_rows)}
    sub_rows = mat.row_labels
    sub_cols = mat.col_labels
    other_choices = list(itertools.product(*(slot_labels[i] for i in others)))
    for (si, sj), v in mat.entries.items():
        r_sub = sub_rows[si]
        c_sub = sub_cols[sj]
        r_parts = (r_sub,) if single else r_sub
        c_parts = (c_sub,) if single else c_sub
        for rest in other_choices:
            full_r = [None] * n
            full_c = [None] * n
            for p, x in zip(positions, r_parts):
                full_r[p] = x
            for p, x in zip(positions, c_parts):
                full_c[p] = x
            for o, x in zip(others, rest):
                full_r[o] = x
                full_c[o] = x
            m.entries[(row_of[tuple(full_r)], row_of[tuple(full_c)])] = v
    return m


def swap_matrix(labels_a, labels_b):
    """The flip P: a (x) b -> b (x) a as a LabeledMatrix on pair labels."""
    rows = [(b, a) for b in labels_b for a in labels_a]
    cols = [(a, b) for a in labels_a for b in labels_b]
    m = LabeledMatrix(rows, cols)
    one = RatFunc.one()
    for a in labels_a:
        for b in labels_b:
            m.set((b, a), (a, b), one)
    return m


def swap_conjugate(mat):
    """P * mat * P for mat on a flip-closed set of pair labels."""
    m = LabeledMatrix(mat.row_labels, mat.col_labels)
    for (i, j), v in mat.entries.items():
        a, b = mat.row_labels[i]
        c, d = mat.col_labels[j]
        m.set((b, a), (d, c), v)
    return m


# ---------------------------------------------------------------------------
# identity verification


class GridError(RuntimeError):
    pass


_PRIMES = (97, 101, 103, 107, 109, 113, 127, 131)


def _degree_bounds(mats):
    """Per-variable degree bound of the cleared difference of two matrices."""
    bounds = {v: 0 for v in VARS}
    per_side = []
    for m in mats:
        side = {v: 0 for v in VARS}
        for val in m.entries.values():
            for v in VARS:
                dn = max(val.num.degree(v), 0)
                dd = max(val.den.degree(v), 0)
                side[v] = max(side[v], dn, dd)
        per_side.append(side)
    for v in VARS:
        bounds[v] = sum(s[v] for s in per_side)
    return bounds


def _active_vars(mats):
    used = set()
    for m in mats:
        for val in m.entries.values():
            used |= val.variables()
    return [v for v in VARS if v in used]


def _build_grid(mats, active, bounds, max_retries=8):
    """Per-variable point lists such that no entry denominator vanishes
    anywhere on the product grid.  Retries with shifted offsets."""
    import itertools

    offsets = {v: _PRIMES[i % len(_PRIMES)] ** (i + 1) for i, v in enumerate(active)}
    for attempt in range(max_retries):
        points = {
            v: [Fraction(offsets[v] + k) for k in range(bounds[v] + 1)]
            for v in active
        }
        bad_var = None
        for combo in itertools.product(*(points[v] for v in active)):
            assignment = dict(zip(active, combo))
            for v in VARS:
                assignment.setdefault(v, Fraction(1))
            for m in mats:
                for val in m.entries.values():
                    if val.den.subs(assignment) == 0:
                        bad_var = active[0] if active else None
                        break
                if bad_var:
                    break
            if bad_var:
                break
        if not bad_var:
            return points
        offsets[bad_var] += _PRIMES[attempt] * 1000
    raise GridError("could not build a pole-free evaluation grid")


def verify_identity(lhs, rhs, mode="symbolic"):
    """Check lhs == rhs.  Returns a dict verdict; never raises on inequality.

    mode='symbolic' compares canonical forms entrywise.  mode='multipoint'
    evaluates on a rational grid with (degree bound + 1) points per active
    variable; agreement on the full grid is an interpolation-style proof.
    """
    if lhs.row_labels != rhs.row_labels or lhs.col_labels != rhs.col_labels:
        return {
            "holds": False,
            "mode": mode,
            "detail": "label mismatch between the two sides",
        }
    if mode == "symbolic":
        if lhs.entries == rhs.entries:
            return {"holds": True, "mode": "symbolic", "detail": "entrywise canonical equality"}
        keys = set(lhs.entries) | set(rhs.entries)
        bad = sorted(k for k in keys if lhs.entries.get(k) != rhs.entries.get(k))
        i, j = bad[0]
        return {
            "holds": False,
            "mode": "symbolic",
            "detail": f"first mismatch at row {lhs.row_labels[i]!r}, col {lhs.col_labels[j]!r}",
            "mismatches": len(bad),
        }
    if mode != "multipoint":
        raise ValueError(f"unknown mode {mode!r}")
    import itertools

    mats = [lhs, rhs]
    active = _active_vars(mats)
    bounds = _degree_bounds(mats)
    if not active:
        holds = lhs.entries == rhs.entries
        return {"holds": holds, "mode": "multipoint", "detail": "constant matrices", "points": 0}
    points = _build_grid(mats, active, bounds)
    n_points = 0
    for combo in itertools.product(*(points[v] for v in active)):
        assignment = dict(zip(active, combo))
        for v in VARS:
            assignment.setdefault(v, Fraction(1))
        n_points += 1
        le = lhs.eval_entries(assignment)
        re_ = rhs.eval_entries(assignment)
        keys = set(le) | set(re_)
        for k in keys:
            if le.get(k, Fraction(0)) != re_.get(k, Fraction(0)):
                i, j = k
                return {
                    "holds": False,
                    "mode": "multipoint",
                    "detail": (
                        f"mismatch at row {lhs.row_labels[i]!r}, col {lhs.col_labels[j]!r}"
                        f" for {assignment}"
                    ),
                    "points": n_points,
                }
    return {
        "holds": True,
        "mode": "multipoint",
        "detail": f"agreement on full grid ({n_points} points, bounds {dict(sorted((v, bounds[v]) for v in active))})",
        "points": n_points,
    }
