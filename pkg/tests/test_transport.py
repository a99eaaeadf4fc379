"""1D optimal transport: distances, maps, interpolation, energy inequalities."""

import math
import warnings

import numpy as np
import pytest

from wassineq import (
    EntropyModel,
    Grid1D,
    MonotonicityError,
    PotentialPair,
    Quantile,
    check_displacement_convexity,
    discrete_w2_oracle,
    displacement_interpolate,
    integrate,
    internal_energy,
    lemma22_slacks,
    normalize,
    optimal_map,
    random_smooth_density,
    w2_distance,
)
from wassineq.errors import DomainError


def gaussian(grid, mean, sigma=1.0, floor=0.0):
    vals = np.exp(-((grid.x - mean) ** 2) / (2 * sigma**2))
    return normalize(vals, grid, floor)


@pytest.fixture(scope="module")
def wide():
    return Grid1D(-16.0, 16.0, 4097)


class TestW2:
    def test_self_distance_zero(self, wide):
        rho = gaussian(wide, 0.3)
        assert w2_distance(rho, rho) <= 1e-10

    def test_translation(self, wide):
        assert w2_distance(gaussian(wide, 0.0), gaussian(wide, 1.5)) == pytest.approx(
            1.5, abs=1e-6
        )

    def test_gaussian_closed_form(self, wide):
        # W2^2(N(0,1), N(1,4)) = (0-1)^2 + (1-2)^2 = 2
        val = w2_distance(gaussian(wide, 0.0, 1.0), gaussian(wide, 1.0, 2.0))
        assert val**2 == pytest.approx(2.0, abs=1e-4)

    def test_refinement_guard(self, wide):
        r0, r1 = gaussian(wide, 0.0, 1.0), gaussian(wide, 1.0, 2.0)
        assert abs(
            w2_distance(r0, r1, points_per_node=8) - w2_distance(r0, r1)
        ) < 1e-6

    def test_metric_axioms_seeded(self):
        g = Grid1D(-9.0, 9.0, 1025)
        for seed in (1, 5, 9):
            a = random_smooth_density(seed, g, 1e-8)
            b = random_smooth_density(seed + 100, g, 1e-8)
            c = random_smooth_density(seed + 200, g, 1e-8)
            assert w2_distance(a, b) == pytest.approx(w2_distance(b, a), abs=1e-10)
            assert w2_distance(a, c) <= w2_distance(a, b) + w2_distance(b, c) + 1e-8
            assert w2_distance(a, a) <= 1e-10


class TestOptimalMap:
    def test_identity(self, wide):
        rho = gaussian(wide, 0.0)
        plan = optimal_map(rho, rho)
        core = rho.values > 1e-12
        assert np.max(np.abs(plan.map_values - wide.x)[core]) < 1e-8

    def test_uniform_stretch_exact(self):
        g1, g2 = Grid1D(0.0, 1.0, 1025), Grid1D(0.0, 2.0, 1025)
        u1 = normalize(np.ones(g1.n), g1)
        u2 = normalize(np.ones(g2.n), g2)
        plan = optimal_map(u1, u2)
        assert np.max(np.abs(plan.map_values - 2 * g1.x)) < 1e-8

    def test_gaussian_shift(self):
        g = Grid1D(-10.0, 10.0, 8193)
        plan = optimal_map(gaussian(g, 0.0), gaussian(g, 0.8))
        core = np.abs(g.x) < 6
        assert np.max(np.abs(plan.map_values - (g.x + 0.8))[core]) < 1e-5

    def test_map_monotone_and_w2_consistent(self, wide):
        r0 = gaussian(wide, -0.5, 1.2)
        r1 = gaussian(wide, 1.0, 0.7)
        plan = optimal_map(r0, r1)
        assert np.all(np.diff(plan.map_values) >= -1e-12)
        # pushforward-form cost agrees with the quantile form at O(h^2)
        xcost = math.sqrt(
            integrate(r0.values * (wide.x - plan.map_values) ** 2, wide)
        )
        assert xcost == pytest.approx(plan.w2, abs=50 * wide.h**2)

    def test_pushforward_mass_conservation(self, wide):
        r0 = gaussian(wide, -0.5, 1.2)
        r1 = gaussian(wide, 1.0, 0.7)
        plan = optimal_map(r0, r1)
        c0, c1 = r0.cdf_values(), r1.cdf_values()
        rng = np.random.default_rng(0)
        for _ in range(10):
            i, j = sorted(rng.integers(1200, 2900, size=2))
            if i == j:
                continue
            mass_src = c0[j] - c0[i]
            mass_img = np.interp(plan.map_values[j], wide.x, c1) - np.interp(
                plan.map_values[i], wide.x, c1
            )
            assert mass_img == pytest.approx(mass_src, abs=1e-6)

    def test_interior_vacuum_warns(self):
        g = Grid1D(-3.0, 3.0, 513)
        src = gaussian(g, 0.0, 0.6)
        twin = np.exp(-((np.abs(g.x) - 1.5) ** 2) / 0.05)
        twin[np.abs(g.x) < 1.0] = 0.0
        tgt = normalize(twin, g)
        with pytest.warns(RuntimeWarning):
            optimal_map(src, tgt)


class TestDisplacementInterpolation:
    def test_endpoints(self, wide):
        plan = optimal_map(gaussian(wide, 0.0), gaussian(wide, 2.0))
        for t, ref in ((0.0, plan.source), (1.0, plan.target)):
            resampled = displacement_interpolate(plan, t)
            err = integrate(np.abs(resampled.values - ref.values), wide)
            assert err < 1e-6

    def test_midpoint_between_translates(self, wide):
        plan = optimal_map(gaussian(wide, 0.0), gaussian(wide, 2.0))
        mid = displacement_interpolate(plan, 0.5)
        err = integrate(np.abs(mid.values - gaussian(wide, 1.0).values), wide)
        assert err < 1e-4

    def test_t_out_of_range(self, wide):
        plan = optimal_map(gaussian(wide, 0.0), gaussian(wide, 2.0))
        with pytest.raises(DomainError):
            displacement_interpolate(plan, 1.5)


class TestDisplacementConvexity:
    def test_constant_when_equal(self):
        g = Grid1D(-9.0, 9.0, 1025)
        rho = random_smooth_density(1, g, 1e-8)
        rep = check_displacement_convexity(rho, rho, EntropyModel.boltzmann(), [0, 0.5, 1])
        assert max(rep.energies) - min(rep.energies) < 1e-10

    @pytest.mark.parametrize("model", [EntropyModel.boltzmann(), EntropyModel.power(2.0)])
    def test_seeded_pairs_convex(self, model):
        g = Grid1D(-9.0, 9.0, 1025)
        ts = [0.0, 0.25, 0.5, 0.75, 1.0]
        for seed in range(1, 21):
            r0 = random_smooth_density(seed, g, 1e-8)
            r1 = random_smooth_density(seed + 500, g, 1e-8)
            rep = check_displacement_convexity(r0, r1, model, ts)
            scale = max(1.0, max(abs(e) for e in rep.energies))
            assert rep.min_slack >= -1e-5 * scale, (seed, rep.min_slack)


class TestLemma22:
    def test_zero_at_identity(self):
        g = Grid1D(-9.0, 9.0, 2049)
        rho = random_smooth_density(1, g, 1e-8)
        pot = PotentialPair(V=lambda x: 0.5 * x**2, lam=1.0)
        slacks = lemma22_slacks(rho, rho, EntropyModel.boltzmann(), pot)
        assert all(abs(s) < 1e-6 for s in slacks)

    def test_seeded_confinement_only(self):
        g = Grid1D(-9.0, 9.0, 1025)
        m = EntropyModel.boltzmann()
        pot = PotentialPair(V=lambda x: 0.5 * x**2, lam=1.0)
        for seed in range(1, 51):
            r0 = random_smooth_density(seed, g, 1e-8)
            r1 = random_smooth_density(seed + 500, g, 1e-8)
            s_int, s_pot, s_w = lemma22_slacks(r0, r1, m, pot)
            scale = max(1.0, abs(s_int), abs(s_pot))
            assert s_int >= -1e-4 * scale, seed
            assert s_pot >= -1e-4 * scale, seed

    def test_seeded_interaction_only(self):
        g = Grid1D(-9.0, 9.0, 1025)
        m = EntropyModel.boltzmann()
        pot = PotentialPair(W=lambda z: 0.5 * z**2, nu=1.0)
        for seed in range(1, 21):
            r0 = random_smooth_density(seed, g, 1e-8)
            r1 = random_smooth_density(seed + 500, g, 1e-8)
            _, _, s_w = lemma22_slacks(r0, r1, m, pot)
            assert s_w >= -1e-4, seed


class TestDiscreteOracle:
    def test_single_atoms(self):
        assert discrete_w2_oracle([0.0], [1.0], [3.0], [1.0]) == pytest.approx(3.0)

    def test_two_atom_matching(self):
        val = discrete_w2_oracle([0.0, 1.0], [0.5, 0.5], [2.0, 3.0], [0.5, 0.5])
        assert val == pytest.approx(2.0, abs=1e-12)  # sqrt((4+4)/2)

    def test_weight_validation(self):
        with pytest.raises(DomainError):
            discrete_w2_oracle([0.0], [0.5], [1.0], [1.0])
        with pytest.raises(DomainError):
            discrete_w2_oracle(np.zeros(65), np.full(65, 1 / 65), [0.0], [1.0])

    def test_grid_vs_atomized(self, wide):
        r0 = gaussian(wide, 0.0, 1.0)
        r1 = gaussian(wide, 1.0, 2.0)
        u = (np.arange(64) + 0.5) / 64
        xs0 = np.asarray(Quantile(r0)(u))
        xs1 = np.asarray(Quantile(r1)(u))
        w = np.full(64, 1 / 64)
        assert discrete_w2_oracle(xs0, w, xs1, w) == pytest.approx(
            w2_distance(r0, r1), abs=2e-2
        )
