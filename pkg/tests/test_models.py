"""Entropy models, potentials, Young pairs and the expression parser."""

import math

import numpy as np
import pytest

from wassineq import (
    DomainError,
    EntropyModel,
    Grid1D,
    PotentialPair,
    admissibility_check,
    make_young,
    modulus_check,
    numeric_conjugate,
    parse_expression,
)


class TestEntropyModel:
    def test_boltzmann_pressure_is_identity(self):
        m = EntropyModel.boltzmann()
        x = np.array([0.3, 1.0, 2.5])
        assert np.allclose(m.PF(x), x)
        assert m.F(np.array([0.0]))[0] == 0.0

    def test_power2_pressure_by_hand(self):
        m = EntropyModel.power(2.0)
        x = np.array([0.5, 1.0, 3.0])
        # x F' - F = 2x^2 - x^2 = x^2
        assert np.allclose(m.PF(x), x**2)

    def test_boltzmann_gf(self):
        m = EntropyModel.boltzmann(dim_n=3)
        x = np.array([0.4, 1.7])
        assert np.allclose(m.GF(x), x * np.log(x) + 3 * x)

    def test_derivative_domain(self):
        m = EntropyModel.boltzmann()
        with pytest.raises(DomainError):
            m.dF(np.array([0.0]))
        with pytest.raises(DomainError):
            m.F(np.array([-1.0]))

    def test_inv_df_inverts(self):
        for m in (EntropyModel.boltzmann(), EntropyModel.power(2.0), EntropyModel.power(0.75)):
            x = np.array([0.2, 0.9, 3.1])
            assert np.allclose(m.inv_dF(m.dF(x)), x)

    def test_gamma_window_enforced(self):
        with pytest.raises(DomainError):
            EntropyModel.power(1.0)
        with pytest.raises(DomainError):
            EntropyModel.power(0.4, dim_n=2)  # below 1 - 1/n = 0.5
        EntropyModel.power(0.4, dim_n=1)  # 1 - 1/1 = 0: admissible in 1D


class TestAdmissibility:
    def test_boltzmann_passes(self):
        ok, diag = admissibility_check(EntropyModel.boltzmann())
        assert ok, diag

    def test_power2_passes(self):
        ok, _ = admissibility_check(EntropyModel.power(2.0))
        assert ok

    def test_inadmissible_custom_power_fails(self):
        # gamma = 0.4 with n = 2 violates gamma >= 1 - 1/n; the sampled map
        # x -> x^n F(x^-n) is then concave somewhere
        gamma = 0.4
        bad = EntropyModel(
            "custom",
            dim_n=2,
            f=lambda x: np.power(x, gamma) / (gamma - 1.0),
            df=lambda x: gamma / (gamma - 1.0) * np.power(x, gamma - 1.0),
        )
        ok, diag = admissibility_check(bad)
        assert not ok
        assert diag["min_slope_increase"] < -1e-9


class TestPotentials:
    def test_modulus_check_quadratic(self):
        g = Grid1D(-5.0, 5.0, 257)
        assert modulus_check(lambda x: 0.5 * x**2, 1.0, g)
        assert not modulus_check(lambda x: 0.5 * x**2, 1.1, g)
        assert modulus_check(lambda x: x**4, 0.0, g)

    def test_interaction_must_be_even(self):
        with pytest.raises(DomainError):
            PotentialPair(W=lambda x: x**3, nu=0.0)
        PotentialPair(W=lambda x: x**2, nu=0.0)

    def test_validate_on_grid(self):
        g = Grid1D(-5.0, 5.0, 257)
        pot = PotentialPair(V=lambda x: 0.5 * x**2, lam=1.0, W=lambda x: x**4, nu=0.0)
        assert pot.validate(g)
        bad = PotentialPair(V=lambda x: 0.5 * x**2, lam=2.0)
        assert not bad.validate(g)


class TestYoungPairs:
    def test_quadratic_self_dual(self):
        yp = make_young("quadratic", sigma=1.0)
        y = np.linspace(-3, 3, 7)
        assert np.allclose(yp.c(y), yp.c_star(y))

    def test_power_pls_conjugate(self):
        yp = make_young("power_pls", p=2.0)
        y = np.linspace(-3, 3, 13)
        assert np.allclose(yp.c(y), np.abs(y) ** 2)
        assert np.allclose(yp.c_star(y), np.abs(y) ** 2 / 4.0)

    def test_numeric_conjugate_quadratic(self):
        assert numeric_conjugate(lambda z: z**2 / 2, 3.0) == pytest.approx(4.5, abs=1e-6)

    def test_numeric_conjugate_abs_square(self):
        # closed form y^2/4
        assert numeric_conjugate(lambda z: np.abs(z) ** 2, 2.0) == pytest.approx(
            1.0, abs=1e-6
        )

    @pytest.mark.parametrize("kind,params", [
        ("quadratic", {"sigma": 0.7}),
        ("power_pls", {"p": 2.0}),
        ("power_pls", {"p": 3.0}),
        ("power_gn", {"p": 2.0, "rgamma": 3.0}),
    ])
    def test_closed_form_matches_numeric_conjugate(self, kind, params):
        yp = make_young(kind, **params)
        for y in np.linspace(-3, 3, 13):
            assert numeric_conjugate(yp.c, float(y)) == pytest.approx(
                float(yp.c_star(np.array([y]))[0]), abs=1e-6
            )

    def test_biconjugation(self):
        yp = make_young("power_pls", p=2.0)
        for x in (-1.0, 0.5, 2.0):
            # c**(x) = sup_y (x y - c*(y)) must recover c(x) for convex c
            val = numeric_conjugate(lambda z: np.asarray(yp.c_star(z)), x)
            assert val == pytest.approx(float(yp.c(np.array([x]))[0]), abs=1e-5)

    def test_young_inequality_with_equality_at_gradient(self):
        yp = make_young("power_pls", p=3.0)
        rng = np.random.default_rng(0)
        ys = rng.uniform(-4, 4, size=100)
        zs = rng.uniform(-4, 4, size=100)
        lhs = ys * zs
        rhs = np.asarray(yp.c(zs)) + np.asarray(yp.c_star(ys))
        assert np.all(lhs <= rhs + 1e-10)
        z_star = np.asarray(yp.grad_c_star(ys))
        gap = np.asarray(yp.c(z_star)) + np.asarray(yp.c_star(ys)) - ys * z_star
        assert np.max(np.abs(gap)) < 1e-6

    def test_homogeneity_exact(self):
        yp = make_young("power_pls", p=2.5)
        y = np.linspace(-2, 2, 9)
        for t in (0.5, 2.0):
            assert np.allclose(
                yp.c_star(t * y), t**yp.p * np.asarray(yp.c_star(y)), atol=1e-10
            )

    def test_convexity_inequality_cstar(self):
        # c*(z) <= z . grad c*(z): the mechanism behind Iscr <= Ibig
        for yp in (make_young("quadratic", sigma=1.3), make_young("power_pls", p=2.0)):
            z = np.linspace(-4, 4, 101)
            assert np.all(
                np.asarray(yp.c_star(z)) <= z * np.asarray(yp.grad_c_star(z)) + 1e-12
            )

    def test_pressure_identity_numeric(self):
        # d/dx P_F = x F''(x), both sides via central differences on a log lattice
        m = EntropyModel.power(1.7)
        xs = np.logspace(-1, 1, 401)
        mid = xs[1:-1]
        dP = (m.PF(xs[2:]) - m.PF(xs[:-2])) / (xs[2:] - xs[:-2])
        ddF = (m.dF(xs[2:]) - m.dF(xs[:-2])) / (xs[2:] - xs[:-2])
        assert np.allclose(dP, mid * ddF, rtol=1e-3)

    def test_sublinear_rejected(self):
        with pytest.raises(DomainError):
            numeric_conjugate(lambda z: np.abs(z), 2.0)


class TestExpressions:
    def test_quadratic_with_modulus_parameter(self):
        fn = parse_expression("0.5*l*x^2", l=2.0)
        x = np.array([1.0, 2.0])
        assert np.allclose(fn(x), [1.0, 4.0])

    def test_functions(self):
        fn = parse_expression("abs(x) + exp(x) - ln(abs(x) + 1)")
        x = np.array([0.5])
        assert fn(x)[0] == pytest.approx(0.5 + math.exp(0.5) - math.log(1.5))

    def test_rejects_unknown_names_and_calls(self):
        with pytest.raises(DomainError):
            parse_expression("y + 1")
        with pytest.raises(DomainError):
            parse_expression("__import__('os')")
        with pytest.raises(DomainError):
            parse_expression("sin(x)")
