"""Exact divisor-class calculus checks."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from scl.picard import (
    DivisorClass,
    check_recombination,
    express_class,
    generator_symbols,
    known_relations,
    prym_phi_coefficient_variants,
)
from scl.errors import OutOfRange


def rel(n, g, name):
    return {r.name: r for r in known_relations(n, g)}[name]


class TestKnownRelations:
    def test_discriminant_class_n2(self):
        # [PD_W] = 72*lambda - 20(g-1)*phi - 6*delta for n=2, any g
        for g in range(1, 8):
            r = rel(2, g, "discriminant_class")
            full = r.right.scale(2)  # left is PD_W / (n(n-1)) with n(n-1)=2
            assert full.coefficient("lambda") == 72
            assert full.coefficient("phi") == -20 * (g - 1)
            assert full.coefficient("delta") == -6

    def test_degenerate_cover_class_n2(self):
        # [PD_v] = 24*lambda_hat - 24(g-1)*phi - 4*delta for n=2
        for g in range(1, 8):
            r = rel(2, g, "degenerate_cover_class")
            ghat = 4 * g - 3
            assert r.right.coefficient("lambda_hat") == 24
            assert r.right.coefficient("phi") == -6 * (ghat - 1) == -24 * (g - 1)
            assert r.right.coefficient("delta") == -4

    def test_hodge_vs_discriminant_rearranges_exactly(self):
        # substituting psi = n(n-1)phi into the psi-form identity must
        # reproduce the solved discriminant-class form with zero residual
        for n in range(2, 11):
            for g in range(1, 11):
                rs = {r.name: r for r in known_relations(n, g)}
                N = n * (n - 1)
                hodge = rs["hodge_vs_discriminant"]
                # rewrite psi -> N*phi in the right-hand side
                coeffs = dict(hodge.right.coeffs)
                psi = coeffs.pop("psi", Fraction(0))
                coeffs["phi"] = coeffs.get("phi", Fraction(0)) + psi * N
                rewritten = DivisorClass(coeffs, n, g)
                # solve for PD_W: PD_W = (n^2-n+1) * (12N lambda - rest)
                k = n * n - n + 1
                lhs = hodge.left  # 12N lambda
                pd_w = (lhs - (rewritten - DivisorClass(
                    {"PD_W": rewritten.coefficient("PD_W")}, n, g))).scale(k)
                direct = rs["discriminant_class"].right.scale(N)
                assert (pd_w - direct).is_zero()

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            known_relations(1, 2)
        with pytest.raises(OutOfRange):
            check_recombination(2, 2)

    def test_component_formulas_gated(self):
        names = {r.name for r in known_relations(2, 2)}
        assert "caustic_component" not in names
        names3 = {r.name for r in known_relations(3, 2)}
        assert {"caustic_component", "maxwell_component",
                "boundary_component", "hodge_cover_vs_base"} <= names3


class TestExpressClass:
    def test_identity(self):
        lam = DivisorClass({"lambda": 1}, 2, 2)
        expr, res = express_class(lam, ["lambda"], [])
        assert res.is_zero()
        assert expr.coeffs == {"lambda": Fraction(1)}

    def test_express_discriminant_in_lambda_phi_delta(self):
        g = 5
        rels = known_relations(2, g)
        target = DivisorClass({"PD_W": 1}, 2, g)
        expr, res = express_class(target, ["lambda", "phi", "delta"], rels)
        assert res.is_zero()
        assert expr.coefficient("lambda") == 72
        assert expr.coefficient("phi") == -20 * (g - 1)
        assert expr.coefficient("delta") == -6

    def test_prym_delta_coefficient_vanishes(self):
        # delta-coefficient of lambda_P - lambda_hat + lambda is exactly zero
        # after substituting the discriminant and cover-differential classes
        for n in range(2, 8):
            for g in range(1, 6):
                rels = {r.name: r for r in known_relations(n, g)}
                lam_p = rels["prym_class"].right
                pv = rels["degenerate_cover_class"].right
                pw = rels["discriminant_class"].right.scale(n * (n - 1))
                expanded = (
                    lam_p
                    + pv.scale(lam_p.coefficient("PD_v"))
                    - DivisorClass({"PD_v": lam_p.coefficient("PD_v")}, n, g).scale(0)
                )
                # substitute PD_v and PD_W by their expansions
                coeffs = dict(lam_p.coeffs)
                cv = coeffs.pop("PD_v", Fraction(0))
                cw = coeffs.pop("PD_W", Fraction(0))
                expanded = DivisorClass(coeffs, n, g) + pv.scale(cv) + pw.scale(cw)
                probe = expanded - DivisorClass({"lambda_hat": 1}, n, g) \
                    + DivisorClass({"lambda": 1}, n, g)
                assert probe.coefficient("delta") == 0

    def test_obstructed_target_returns_residual(self):
        target = DivisorClass({"lambda_P": 1}, 2, 2)
        expr, res = express_class(target, ["lambda"], [])
        assert expr is None
        assert res.coefficient("lambda_P") == 1


class TestRecombination:
    def test_n3_residual_zero(self):
        for g in range(1, 11):
            assert check_recombination(3, g).is_zero()

    def test_n4_g2_residual(self):
        res = check_recombination(4, 2)
        assert res.coeffs == {"phi": Fraction(192)}

    def test_residual_is_pure_phi_multiple(self):
        for n in range(3, 11):
            for g in range(1, 11):
                res = check_recombination(n, g)
                assert set(res.coeffs) <= {"phi"}
                assert res.coefficient("lambda") == 0
                assert res.coefficient("delta") == 0
                expected = Fraction(8 * n * (n - 1) * (n - 2) * (n - 3) * (g - 1))
                assert res.coefficient("phi") == expected


class TestDeterminismAndSerialization:
    def test_bit_identical_recomputation(self):
        a = check_recombination(5, 4)
        b = check_recombination(5, 4)
        assert a.to_strings() == b.to_strings()

    def test_string_serialization_rationals(self):
        r = rel(3, 2, "hodge_ndiff_moduli")
        s = r.right.to_strings()
        assert s["delta"] == "1/12"
        N = 6
        assert s["delta_deg"] == str(Fraction(1, 12 * N * (N + 1)))

    def test_prym_variant_query(self):
        v = prym_phi_coefficient_variants(2, 2)
        assert v["as_printed"] == Fraction(1, 3) * (4 - Fraction(5, 14))
        assert v["n2_minus_n_plus_1_variant"] == Fraction(1, 3) * (4 - Fraction(5, 6))


@given(
    n=st.integers(min_value=2, max_value=9),
    g=st.integers(min_value=1, max_value=9),
    c1=st.fractions(min_value=-5, max_value=5),
    c2=st.fractions(min_value=-5, max_value=5),
)
def test_linearity_of_class_arithmetic(n, g, c1, c2):
    syms = generator_symbols(g)
    a = DivisorClass({syms[0]: c1, syms[3]: c2}, n, g)
    b = DivisorClass({syms[3]: c1}, n, g)
    lhs = (a + b).scale(2)
    rhs = a.scale(2) + b.scale(2)
    assert (lhs - rhs).is_zero()
