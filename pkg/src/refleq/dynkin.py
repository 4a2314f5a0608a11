"""ADE Cartan data, Weyl longest words, and diagram involutions.

Vertex numbering is 1-based.  Type A_n is the chain 1-2-...-n.  Type D_n is
the chain 1-...-(n-2) with both n-1 and n attached to n-2.  Type E6 is the
chain 1-2-3-4-5 with vertex 6 attached to 3, so the diagram flip fixes 3 and
6 and swaps the arms (1,5) and (2,4).

Weights are tuples of fundamental-weight coordinates; roots are tuples of
simple-root coordinates.  Everything is exact integer/Fraction arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

_TYPE_RE = re.compile(r"^([ADE])(\d+)$")


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family == "A":
            if self.rank < 1:
                raise ValueError("type A needs rank >= 1")
        elif self.family == "D":
            if self.rank < 4:
                raise ValueError("type D needs rank >= 4")
        elif self.family == "E":
            if self.rank != 6:
                raise ValueError("only E6 is supported")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    @staticmethod
    def parse(s):
        m = _TYPE_RE.match(s.strip())
        if not m:
            raise ValueError(f"cannot parse Dynkin type {s!r}")
        return DynkinType(m.group(1), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.rank}"

    @property
    def vertices(self):
        return tuple(range(1, self.rank + 1))


def adjacency(t):
    """Set of undirected edges as frozenset pairs."""
    n = t.rank
    if t.family == "A":
        edges = {(i, i + 1) for i in range(1, n)}
    elif t.family == "D":
        edges = {(i, i + 1) for i in range(1, n - 2)}
        edges |= {(n - 2, n - 1), (n - 2, n)}
    else:  # E6
        edges = {(1, 2), (2, 3), (3, 4), (4, 5), (3, 6)}
    return {frozenset(e) for e in edges}


def neighbors(t):
    out = {i: set() for i in t.vertices}
    for e in adjacency(t):
        a, b = tuple(e)
        out[a].add(b)
        out[b].add(a)
    return out


def cartan_matrix(t):
    """Symmetric ADE Cartan matrix as a tuple of tuples (1-based vertices)."""
    n = t.rank
    nb = neighbors(t)
    return tuple(
        tuple(2 if i == j else (-1 if j in nb[i] else 0) for j in t.vertices)
        for i in t.vertices
    )


def coxeter_number(t):
    if t.family == "A":
        return t.rank + 1
    if t.family == "D":
        return 2 * t.rank - 2
    return 12  # E6


def invast(t):
    """The diagram involution -w0: vertex -> vertex, as a dict."""
    n = t.rank
    if t.family == "A":
        return {i: n + 1 - i for i in t.vertices}
    if t.family == "D":
        if n % 2 == 1:
            m = {i: i for i in t.vertices}
            m[n - 1], m[n] = n, n - 1
            return m
        return {i: i for i in t.vertices}
    # E6 in our labeling: flip the two arms
    return {1: 5, 2: 4, 3: 3, 4: 2, 5: 1, 6: 6}


def positive_roots(t):
    """All positive roots in simple-root coordinates, by reflection closure."""
    n = t.rank
    cartan = cartan_matrix(t)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(n):
            pairing = sum(beta[j] * cartan[i][j] for j in range(n))
            new = list(beta)
            new[i] -= pairing
            new = tuple(new)
            if new not in seen:
                seen.add(new)
                frontier.append(new)
    return sorted(r for r in seen if all(x >= 0 for x in r))


def reflect_weight(t, lam, i):
    """s_i acting on fundamental-weight coordinates (1-based vertex i)."""
    cartan = cartan_matrix(t)
    c = lam[i - 1]
    return tuple(x - c * cartan[i - 1][j] for j, x in enumerate(lam))


def reflect_root(t, beta, i):
    cartan = cartan_matrix(t)
    pairing = sum(beta[j] * cartan[i - 1][j] for j in range(t.rank))
    new = list(beta)
    new[i - 1] -= pairing
    return tuple(new)


def longest_word(t, prefer_high=False):
    """A reduced word for w0, rightmost letter acting first.

    Greedy descent of the staircase weight rho: repeatedly reflect at a
    vertex with positive coordinate.  prefer_high picks the largest such
    vertex instead of the smallest, giving a second reduced word.
    """
    n = t.rank
    lam = (1,) * n
    applied = []
    while True:
        pos = [i for i in range(1, n + 1) if lam[i - 1] > 0]
        if not pos:
            break
        i = max(pos) if prefer_high else min(pos)
        applied.append(i)
        lam = reflect_weight(t, lam, i)
    if lam != tuple(-1 for _ in range(n)):
        raise AssertionError("greedy descent failed to reach -rho")
    expected = len(positive_roots(t))
    if len(applied) != expected:
        raise AssertionError(
            f"longest word has length {len(applied)}, expected {expected}"
        )
    # applied[0] acted first; as a composition word the first letter applied
    # sits rightmost
    return tuple(reversed(applied))


def weight_action(t, word, lam):
    """Apply a Weyl word (rightmost letter first) to a weight."""
    for i in reversed(word):
        lam = reflect_weight(t, lam, i)
    return lam


def w0_on_weight(t, lam):
    return weight_action(t, longest_word(t), lam)


def minus_invast_weight(t, lam):
    iv = invast(t)
    out = [0] * t.rank
    for i in t.vertices:
        out[iv[i] - 1] = -lam[i - 1]
    return tuple(out)


def apply_vertex_perm(perm, vec):
    """Permute coordinate positions: result[perm[i]] = vec[i]."""
    out = [0] * len(vec)
    for i, x in enumerate(vec, start=1):
        out[perm[i] - 1] = x
    return tuple(out)


def weights_from_dims(t, v, w):
    """(lambda, mu) in fundamental-weight coordinates from dimension vectors."""
    n = t.rank
    if len(v) != n or len(w) != n:
        raise ValueError("dimension vectors must match the rank")
    cartan = cartan_matrix(t)
    lam = tuple(w)
    cv = [sum(cartan[i][j] * v[j] for j in range(n)) for i in range(n)]
    mu = tuple(w[i] - cv[i] for i in range(n))
    return lam, mu


def dim_quiver_variety(t, v, w):
    """v . (2w - Cv), the dimension of the associated symplectic variety."""
    n = t.rank
    cartan = cartan_matrix(t)
    cv = [sum(cartan[i][j] * v[j] for j in range(n)) for i in range(n)]
    return sum(v[i] * (2 * w[i] - cv[i]) for i in range(n))


def w0_star(t, v, w):
    """The dimension vector v' with w - Cv' = w0(w - Cv).

    Solves the Cartan system exactly; raises ValueError if the solution is
    not a nonnegative integer vector, which signals inconsistent input data.
    """
    n = t.rank
    cartan = cartan_matrix(t)
    _, mu = weights_from_dims(t, v, w)
    target_mu = minus_invast_weight(t, mu)  # w0 acts as -invast on weights
    rhs = [Fraction(w[i] - target_mu[i]) for i in range(n)]
    a = [[Fraction(cartan[i][j]) for j in range(n)] for i in range(n)]
    sol = _solve_exact(a, rhs)
    out = []
    for x in sol:
        if x.denominator != 1:
            raise ValueError(f"w0* dimension vector is not integral: {sol}")
        if x < 0:
            raise ValueError(f"w0* dimension vector has a negative entry: {sol}")
        out.append(int(x))
    return tuple(out)


def _solve_exact(a, b):
    n = len(b)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("Cartan matrix unexpectedly singular")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def sigma_on_weights(t, lam, mu, sigma_prime):
    """(sigma lambda, sigma mu) for the involution built from sigma_prime.

    sigma_prime is a vertex permutation dict (an involutive diagram
    automorphism).  sigma acts on lambda through sigma' o invast and on mu
    through -sigma'.
    """
    iv = invast(t)
    sigma_lam = apply_vertex_perm(sigma_prime, apply_vertex_perm(iv, lam))
    sigma_mu = tuple(-x for x in apply_vertex_perm(sigma_prime, mu))
    return sigma_lam, sigma_mu


@dataclass
class EpsilonAssignment:
    """Form types on the framing spaces fixed or paired by the involution.

    signs: vertex -> +1/-1 for vertices whose framing carries a form.
    pairs: (i, j) vertex pairs whose framings are dual to each other; the
    shared sign of the pairing is type_sign.
    """

    type_sign: int
    signs: dict
    pairs: list


def epsilon_assignment(t, sigma_prime_is_invast, type_sign):
    """Assign form types to framing spaces, type A only.

    sigma_prime_is_invast=True is the case sigma' = invast (so sigma' o invast
    is the identity and every vertex is fixed): the signs alternate along the
    chain starting from type_sign at vertex 1.

    sigma_prime_is_invast=False is sigma' = id: vertex i pairs with n+1-i;
    for odd rank the middle vertex keeps type_sign.
    """
    if type_sign not in (1, -1):
        raise ValueError("type_sign must be +1 or -1")
    if t.family != "A":
        raise NotImplementedError(
            "epsilon assignment is defined here for type A only; D/E mixed "
            "involutions are not supported"
        )
    n = t.rank
    if sigma_prime_is_invast:
        signs = {i: type_sign * (-1) ** (i - 1) for i in t.vertices}
        return EpsilonAssignment(type_sign, signs, [])
    signs = {}
    pairs = []
    for i in t.vertices:
        j = n + 1 - i
        if i < j:
            pairs.append((i, j))
        elif i == j:
            signs[i] = type_sign
    return EpsilonAssignment(type_sign, signs, pairs)


def info_dict(t):
    """The JSON payload for the CLI info command."""
    return {
        "type": str(t),
        "cartan": [list(row) for row in cartan_matrix(t)],
        "coxeter": coxeter_number(t),
        "invast": {str(i): j for i, j in sorted(invast(t).items())},
        "longestWordLength": len(positive_roots(t)),
    }
