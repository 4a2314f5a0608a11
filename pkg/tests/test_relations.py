"""Tests for the exchange-identity verdicts in refleq.relations."""

from fractions import Fraction

import pytest

from refleq.field import H, RatFunc
from refleq.matrix import LabeledMatrix
from refleq.relations import (
    EXCHANGE_VARIANTS,
    check_boundary_constant_term,
    check_boundary_factorization,
    check_chain_reflection,
    check_k_unitarity,
    check_monodromy_exchange,
    check_r_unitarity,
    check_reflection,
    check_twisted_plain_derivation,
    check_ybe,
    make_scenario,
    reflection_expectation,
    reflection_sides,
    run_suite,
    run_suite_item,
    suite_items,
)
from refleq.rkmat import (
    KINDS,
    pair_labels,
    r_bullet_sigma_opposite,
    site_labels,
    yang_r,
)


class TestYangBaxter:
    @pytest.mark.parametrize("l", [2, 3])
    def test_chain_family_symbolic(self, l):
        v = check_ybe(l)
        assert v["holds"] and v["mode"] == "symbolic"
        assert v["identity"] == "yangBaxter" and v["l"] == l

    @pytest.mark.parametrize("l", [2, 3, 4])
    def test_chain_family_multipoint(self, l):
        v = check_ybe(l, mode="multipoint")
        assert v["holds"] and v["mode"] == "multipoint"
        assert v["gridSize"] >= 1 and "degreeBounds" in v

    def test_modes_agree_at_l3(self):
        assert check_ybe(3)["holds"] == check_ybe(3, mode="multipoint")["holds"]

    def test_constant_identity_builder(self):
        builder = lambda l, w: LabeledMatrix.identity(pair_labels(l))
        assert check_ybe(2, r_builder=builder)["holds"]
        assert check_ybe(2, r_builder=builder, mode="multipoint")["holds"]

    def test_shifted_family_fails_both_modes(self):
        # shifting every spectral argument by h breaks the additivity the
        # identity depends on, so this must fail in both modes
        builder = lambda l, w: yang_r(l, w + H)
        sym = check_ybe(2, r_builder=builder)
        assert not sym["holds"]
        assert "row" in sym["counterexample"] and "lhs" in sym["counterexample"]
        mp = check_ybe(2, r_builder=builder, mode="multipoint")
        assert not mp["holds"]
        assert "point" in mp["counterexample"]

    def test_symbolic_size_limit(self):
        with pytest.raises(ValueError):
            check_ybe(4)
        with pytest.raises(ValueError):
            check_ybe(7, mode="multipoint")

    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError):
            check_ybe(2, mode="numeric")


class TestUnitarity:
    @pytest.mark.parametrize("l", [2, 3, 4])
    def test_chain_r(self, l):
        assert check_r_unitarity(l)["holds"]

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("l", [2, 3])
    def test_cross_r(self, kind, l):
        v = check_r_unitarity(l, family="cross", kind=kind)
        assert v["holds"], f"{kind} l={l}: {v['detail']}"

    def test_non_unitary_builder_detected(self):
        builder = lambda l, w: r_bullet_sigma_opposite(l, w)
        assert not check_r_unitarity(3, r_builder=builder)["holds"]

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("l", [2, 3, 4, 5])
    def test_boundary_k(self, kind, l):
        assert check_k_unitarity(kind, l)["holds"]

    def test_identity_boundary_trivially_unitary(self):
        builder = lambda u: LabeledMatrix.identity(site_labels(3))
        assert check_k_unitarity("soInstanton", 3, k_builder=builder)["holds"]


class TestReflection:
    @pytest.mark.parametrize(
        "kind,l",
        [("flagPlus", l) for l in (2, 3, 4, 5)]
        + [("flagMinus", l) for l in (2, 3, 4)]
        + [("soInstanton", l) for l in (2, 3)]
        + [("spInstanton", 2)],
    )
    def test_pinned_holds(self, kind, l):
        v = check_reflection(kind, l)
        assert v["holds"], f"{kind} l={l}: {v['detail']}"
        assert reflection_expectation(kind, l) is True

    def test_sp_instanton_above_two_fails_and_is_unpinned(self):
        v = check_reflection("spInstanton", 3)
        assert not v["holds"]
        assert v["counterexample"]["lhs"] != v["counterexample"]["rhs"]
        assert reflection_expectation("spInstanton", 3) is None

    @pytest.mark.parametrize("l", [2, 3, 4])
    def test_opposite_placement_fails(self, l):
        v = check_reflection("flagMinus", l, boundary="oppositePlacement")
        assert not v["holds"]
        assert reflection_expectation("flagMinus", l, boundary="oppositePlacement") is False

    def test_opposite_placement_restricted_to_flag_minus(self):
        with pytest.raises(ValueError):
            make_scenario("flagPlus", 2, boundary="oppositePlacement")

    def test_size_limit(self):
        with pytest.raises(ValueError):
            check_reflection("flagPlus", 6)

    @pytest.mark.parametrize("kind", KINDS)
    def test_h_zero_sides_become_the_same_permutation(self, kind):
        # with h = 0 every R reduces to the identity and the boundary
        # matrices to involutive constants, so both sides must collapse to
        # one and the same permutation matrix
        lhs, rhs = reflection_sides(kind, 3)
        point = {"h": Fraction(0), "u1": Fraction(5), "u2": Fraction(3)}
        le = {k: v for k, v in lhs.eval_entries(point).items() if v}
        re_ = {k: v for k, v in rhs.eval_entries(point).items() if v}
        assert le == re_
        assert all(v == 1 for v in le.values())
        rows = [i for i, _ in le]
        cols = [j for _, j in le]
        assert sorted(rows) == sorted(set(rows)) and sorted(cols) == sorted(set(cols))

    def test_every_involutive_permutation_boundary_works_for_flag_plus(self):
        # the mechanism behind the flagPlus scenario is K^2 = Id alone, so
        # any involutive permutation matrix must satisfy the identity, and a
        # non-involutive one must not
        labels = site_labels(3)

        def perm_matrix(perm):
            mat = LabeledMatrix(labels, labels)
            for i, target in zip(labels, perm):
                mat.set(target, i, RatFunc.one())
            return mat

        involutions = [(1, 2, 3), (2, 1, 3), (3, 2, 1), (1, 3, 2)]
        for perm in involutions:
            mat = perm_matrix(perm)
            v = check_reflection("flagPlus", 3, k_builder=lambda u, m=mat: m)
            assert v["holds"], f"involution {perm} rejected"
        cycle = perm_matrix((2, 3, 1))
        assert not check_reflection("flagPlus", 3, k_builder=lambda u: cycle)["holds"]


class TestMonodromyExchange:
    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("variant", EXCHANGE_VARIANTS)
    def test_single_site_all_kinds(self, kind, variant):
        v = check_monodromy_exchange(2, 1, variant, kind=kind)
        assert v["holds"], f"{kind}/{variant}: {v['detail']}"

    @pytest.mark.parametrize("kind", ["soInstanton", "spInstanton"])
    @pytest.mark.parametrize("variant", EXCHANGE_VARIANTS)
    def test_two_sites(self, kind, variant):
        assert check_monodromy_exchange(2, 2, variant, kind=kind)["holds"]

    def test_empty_chain_trivial(self):
        for variant in EXCHANGE_VARIANTS:
            assert check_monodromy_exchange(2, 0, variant)["holds"]

    def test_rejects_unknown_variant(self):
        with pytest.raises(ValueError):
            check_monodromy_exchange(2, 1, "plain")

    @pytest.mark.parametrize("kind", KINDS)
    def test_twisted_plain_agrees_with_its_derivation(self, kind):
        v = check_twisted_plain_derivation(2, 1, kind=kind)
        assert v["holds"], v["detail"]


class TestChainReflection:
    @pytest.mark.parametrize("kind", KINDS)
    def test_single_site_l2(self, kind):
        v = check_chain_reflection(kind, 2, n=1)
        assert v["holds"], f"{kind}: {v['detail']}"

    def test_so_instanton_l3(self):
        assert check_chain_reflection("soInstanton", 3, n=1)["holds"]

    def test_no_chain_degenerates_to_reflection(self):
        v = check_chain_reflection("flagPlus", 2, n=0)
        assert v["holds"] and v["identity"] == "chainReflection" and v["sites"] == 0


class TestBoundaryOperator:
    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("l", [2, 3])
    def test_factorization_routes_agree(self, kind, l):
        assert check_boundary_factorization(kind, l, n=1)["holds"]

    @pytest.mark.parametrize("kind", KINDS)
    @pytest.mark.parametrize("l", [2, 3])
    def test_constant_term_is_involution_on_aux_slot(self, kind, l):
        assert check_boundary_constant_term(kind, l, n=1)["holds"]


class TestSuites:
    def test_items_carry_expectations(self):
        items = suite_items("all", l=2)
        assert items and all("check" in it and "expected" in it for it in items)
        assert any(it["expected"] is False for it in items)

    def test_reflection_suite_passes(self):
        out = run_suite(suite="reflection", l=2)
        assert out["ok"]
        kinds = {v.get("kind") for v in out["verdicts"]}
        assert kinds == set(KINDS)

    def test_suite_includes_unpinned_report_without_failing(self):
        out = run_suite(suite="reflection", l=3)
        assert out["ok"]
        sp = [v for v in out["verdicts"] if v.get("kind") == "spInstanton"]
        assert sp and not sp[0]["holds"] and sp[0]["expected"] is None

    def test_parallel_matches_serial(self):
        serial = run_suite(suite="unitarity", l=2)
        parallel = run_suite(suite="unitarity", l=2, jobs=2)
        assert serial == parallel

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError):
            suite_items("everything")

    def test_run_suite_item_dispatch(self):
        v = run_suite_item({"check": "kUnitarity", "l": 2, "kind": "soInstanton", "expected": True})
        assert v["holds"] and v["expected"] is True
        with pytest.raises(ValueError):
            run_suite_item({"check": "nope", "l": 2})
