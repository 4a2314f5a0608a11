import random
from fractions import Fraction

import pytest

from refleq.field import Poly, RatFunc, parse_ratfunc
from refleq.matrix import (
    GridError,
    LabeledMatrix,
    embed_on_slots,
    swap_conjugate,
    swap_matrix,
    verify_identity,
)


def rf(s):
    return parse_ratfunc(s)


def random_matrix(rng, labels, density=0.6):
    m = LabeledMatrix(labels, labels)
    for r in labels:
        for c in labels:
            if rng.random() < density:
                m.set(r, c, RatFunc.const(rng.randint(-4, 4)))
    return m


def test_labels_checked_on_multiply():
    a = LabeledMatrix([1, 2], ["x", "y"])
    b = LabeledMatrix([1, 2], [1, 2])
    with pytest.raises(ValueError):
        a * a
    assert (b * b).shape == (2, 2)


def test_identity_and_multiplication():
    labels = [1, 2, 3]
    ident = LabeledMatrix.identity(labels)
    rng = random.Random(4)
    m = random_matrix(rng, labels)
    assert ident * m == m
    assert m * ident == m


def test_addition_and_scaling():
    labels = ["a", "b"]
    m = LabeledMatrix(labels, labels, {("a", "b"): rf("h"), ("b", "a"): rf("u")})
    two = m + m
    assert two == m.scale(2)
    assert (m - m).entries == {}


def test_kron_labels_and_values():
    a = LabeledMatrix([1, 2], [1, 2], {(1, 1): rf("h"), (2, 2): rf("u")})
    b = LabeledMatrix(["x"], ["x"], {("x", "x"): rf("2")})
    k = a.kron(b)
    assert k.row_labels == ((1, "x"), (2, "x"))
    assert k.get((1, "x"), (1, "x")) == rf("2*h")
    assert k.get((2, "x"), (2, "x")) == rf("2*u")


def test_kron_agrees_with_embedding():
    rng = random.Random(9)
    a = random_matrix(rng, [1, 2])
    ident = LabeledMatrix.identity([1, 2, 3])
    left = a.kron(ident)
    emb = embed_on_slots(a, [0], [[1, 2], [1, 2, 3]])
    assert left == emb
    right = ident.kron(a)
    # embedding into slot 1 keeps slot-0 labels first in the tuples
    emb2 = embed_on_slots(a, [1], [[1, 2, 3], [1, 2]])
    assert emb2 == right


def test_embed_two_slots_of_three():
    rng = random.Random(10)
    labels = [1, 2]
    pair = [(i, j) for i in labels for j in labels]
    m = LabeledMatrix(pair, pair)
    for r in pair:
        for c in pair:
            if rng.random() < 0.5:
                m.set(r, c, RatFunc.const(rng.randint(1, 5)))
    full = embed_on_slots(m, [0, 2], [labels, labels, labels])
    # entry ((a, x, b), (c, x, d)) must equal m[(a,b),(c,d)]
    for (a, b) in pair:
        for (c, d) in pair:
            for x in labels:
                assert full.get((a, x, b), (c, x, d)) == m.get((a, b), (c, d))
    # off-identity in the middle slot must vanish
    assert full.get((1, 1, 1), (1, 2, 1)).is_zero()


def test_swap_matrix_is_involution():
    p = swap_matrix([1, 2, 3], [1, 2, 3])
    ident = LabeledMatrix.identity(p.col_labels)
    assert p * p == ident


def test_swap_conjugate_moves_entries():
    pair = [(i, j) for i in [1, 2] for j in [1, 2]]
    m = LabeledMatrix(pair, pair, {((1, 2), (2, 1)): rf("h")})
    c = swap_conjugate(m)
    assert c.get((2, 1), (1, 2)) == rf("h")
    assert c.get((1, 2), (2, 1)).is_zero()


def test_inverse_round_trip():
    rng = random.Random(21)
    labels = [0, 1, 2, 3]
    # unipotent + diagonal: invertible by construction
    m = LabeledMatrix.identity(labels)
    for i in labels:
        for j in labels:
            if i < j and rng.random() < 0.7:
                m.set(i, j, RatFunc.var("h") * RatFunc.const(rng.randint(1, 3)))
    m.set(2, 2, rf("u + h"))
    inv = m.inverse()
    assert m * inv == LabeledMatrix.identity(labels)
    assert inv * m == LabeledMatrix.identity(labels)


def test_inverse_rejects_singular():
    m = LabeledMatrix([1, 2], [1, 2], {(1, 1): rf("h"), (2, 2): rf("0")})
    with pytest.raises(ValueError):
        m.inverse()


def test_json_round_trip():
    pair = [(i, j) for i in [1, 2] for j in [1, 2]]
    m = LabeledMatrix(pair, pair)
    m.set((1, 1), (1, 1), rf("u / (u + h)"))
    m.set((1, 2), (2, 1), rf("h / (u + h)"))
    data = m.to_json()
    assert data["rows"][0] == [1, 1]
    assert data["entries"][0][0] == "u / (u + h)"
    m2 = LabeledMatrix.from_json(data)
    assert m2 == m


def _square_pair(rng, labels):
    a = random_matrix(rng, labels, density=0.5)
    b = random_matrix(rng, labels, density=0.5)
    h = RatFunc.var("h")
    u = RatFunc.var("u")
    for lab in labels:
        a.set(lab, lab, a.get(lab, lab) + h)
        b.set(lab, lab, b.get(lab, lab) + u / (u + h))
    return a, b


def test_verify_identity_symbolic_and_multipoint_agree_on_truth():
    rng = random.Random(77)
    labels = [1, 2, 3]
    a, b = _square_pair(rng, labels)
    lhs = (a + b) * (a + b)
    rhs = a * a + a * b + b * a + b * b
    v1 = verify_identity(lhs, rhs, mode="symbolic")
    v2 = verify_identity(lhs, rhs, mode="multipoint")
    assert v1["holds"] and v2["holds"]
    assert v2["points"] >= 1


def test_verify_identity_detects_failure_in_both_modes():
    labels = [1, 2]
    a = LabeledMatrix.identity(labels)
    b = a.copy()
    b.set(1, 2, rf("h / (u + h)"))
    for mode in ("symbolic", "multipoint"):
        v = verify_identity(a, b, mode=mode)
        assert not v["holds"]
        assert "detail" in v


def test_verify_identity_label_mismatch():
    a = LabeledMatrix.identity([1, 2])
    b = LabeledMatrix.identity([2, 1])
    v = verify_identity(a, b)
    assert not v["holds"]


def test_multipoint_grid_avoids_poles():
    # denominators vanish on naive small grids; the builder must dodge them
    labels = [1]
    m = LabeledMatrix(labels, labels)
    m.set(1, 1, rf("h") / (RatFunc.var("u1") - RatFunc.var("u2")))
    v = verify_identity(m, m.copy(), mode="multipoint")
    assert v["holds"]


def test_eval_entries():
    labels = [1, 2]
    m = LabeledMatrix(labels, labels, {(1, 1): rf("u / (u + h)")})
    from refleq.field import VARS

    vals = m.eval_entries({v: Fraction(1) for v in VARS})
    assert vals[(0, 0)] == Fraction(1, 2)
