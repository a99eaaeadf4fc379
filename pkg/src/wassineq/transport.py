"""Quadratic-cost optimal transport between 1D grid densities.

In one dimension the optimal quadratic-cost coupling is the monotone
rearrangement: T = Q1 o C0 where C0 is the CDF of the source and Q1 the
quantile function of the target, and

    W2^2(rho0, rho1) = int_0^1 (Q0(u) - Q1(u))^2 du.

Displacement interpolation pushes rho0 through T_t = (1-t) id + t T; the
internal energy of admissible integrands is convex along that path, which
is the mechanism behind every inequality this library checks.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, MonotonicityError
from .functionals import internal_energy
from .measures import Grid1D, GridDensity, Quantile, barycenter, gradient, integrate, normalize
from .models import EntropyModel, PotentialPair

__all__ = [
    "TransportPlan1D",
    "w2_distance",
    "optimal_map",
    "displacement_interpolate",
    "check_displacement_convexity",
    "ConvexityReport",
    "lemma22_slacks",
    "discrete_w2_oracle",
]


def _u_lattice(num: int) -> tuple[np.ndarray, np.ndarray]:
    """Midpoint lattice in s with the smoothstep substitution u = s^2 (3 - 2s).

    Quantile differences of densities with fast-decaying tails grow like
    sqrt(log 1/u) near u in {0, 1}; the substitution's vanishing Jacobian
    6 s (1-s) removes that endpoint singularity so midpoint quadrature
    converges at second order.
    """
    s = (np.arange(num) + 0.5) / num
    u = s * s * (3.0 - 2.0 * s)
    weights = 6.0 * s * (1.0 - s) / num
    return u, weights


def w2_distance(rho0: GridDensity, rho1: GridDensity, points_per_node: int = 4) -> float:
    """Quadratic Wasserstein distance via quadrature in quantile space."""
    num = points_per_node * max(rho0.grid.n, rho1.grid.n)
    u, weights = _u_lattice(num)
    q0 = np.asarray(Quantile(rho0)(u), dtype=float)
    q1 = np.asarray(Quantile(rho1)(u), dtype=float)
    return float(np.sqrt(np.sum(weights * (q0 - q1) ** 2)))


@dataclass(frozen=True)
class TransportPlan1D:
    """Monotone optimal map sampled at the source nodes, with its cost."""

    source: GridDensity
    target: GridDensity
    map_values: np.ndarray
    w2: float

    def __post_init__(self):
        mv = np.asarray(self.map_values, dtype=float)
        if np.any(np.diff(mv) < -1e-12):
            raise MonotonicityError("optimal map must be nondecreasing")
        mv = mv.copy()
        mv.setflags(write=False)
        object.__setattr__(self, "map_values", mv)


def optimal_map(rho0: GridDensity, rho1: GridDensity) -> TransportPlan1D:
    """Monotone map T = Q1 o C0 pushing rho0 forward to rho1.

    Warns when the target has flat CDF stretches strictly inside its support
    (the inverse is then regularized by taking the left-most preimage).
    """
    c0 = rho0.cdf_values()
    q1 = Quantile(rho1)
    lo = int(np.argmax(rho1.values > 0))
    hi = len(rho1.values) - 1 - int(np.argmax(rho1.values[::-1] > 0))
    if np.any(rho1.values[lo : hi + 1] <= 0):
        warnings.warn(
            "target density vanishes inside its support; quantile inverse regularized",
            RuntimeWarning,
        )
    tvals = np.asarray(q1(np.clip(c0, 0.0, 1.0)), dtype=float)
    tvals = np.maximum.accumulate(tvals)  # guard rounding-level dips
    return TransportPlan1D(rho0, rho1, tvals, w2_distance(rho0, rho1))


def displacement_interpolate(plan: TransportPlan1D, t: float) -> GridDensity:
    """Density of the push-forward of the source under T_t = (1-t) id + t T.

    Uses the 1D change of variables rho_t(T_t(x)) T_t'(x) = rho0(x) along the
    monotone map, then resamples to the source grid.
    """
    if not 0.0 <= t <= 1.0:
        raise DomainError("interpolation parameter t must lie in [0, 1]")
    grid = plan.source.grid
    x = grid.x
    y = (1.0 - t) * x + t * plan.map_values
    dT = gradient(plan.map_values, grid)
    dTt = (1.0 - t) + t * dT
    src = plan.source.values
    carries_mass = src > 1e-13 * src.max()
    if np.any(dTt[carries_mass] <= 0):
        raise MonotonicityError("interpolated map is not increasing (dT_t <= 0)")
    # flat map stretches occur only where the source carries no mass (tail
    # plateaus of the target quantile); no density lands there
    vals_on_y = np.where(carries_mass, src / np.maximum(dTt, 1e-300), 0.0)
    resampled = np.interp(x, y, vals_on_y, left=0.0, right=0.0)
    return normalize(resampled, grid, floor=0.0)


@dataclass(frozen=True)
class ConvexityReport:
    ts: tuple
    energies: tuple
    min_slack: float
    violations: tuple

    @property
    def ok(self) -> bool:
        return len(self.violations) == 0


def check_displacement_convexity(
    rho0: GridDensity,
    rho1: GridDensity,
    m: EntropyModel,
    ts,
    slack_tol: float = 1e-5,
) -> ConvexityReport:
    """Internal energy along displacement interpolation is convex for admissible F.

    Checks chord-midpoint convexity on consecutive triples of ``ts``; a slack
    below ``-slack_tol * scale`` is recorded as a violation.
    """
    ts = sorted(float(t) for t in ts)
    plan = optimal_map(rho0, rho1)
    energies = [internal_energy(displacement_interpolate(plan, t), m) for t in ts]
    scale = max(1.0, max(abs(e) for e in energies))
    slacks = []
    violations = []
    for i in range(1, len(ts) - 1):
        w = (ts[i + 1] - ts[i]) / (ts[i + 1] - ts[i - 1])
        chord = w * energies[i - 1] + (1.0 - w) * energies[i + 1]
        slack = chord - energies[i]
        slacks.append(slack)
        if slack < -slack_tol * scale:
            violations.append((ts[i], slack))
    return ConvexityReport(
        ts=tuple(ts),
        energies=tuple(energies),
        min_slack=min(slacks) if slacks else 0.0,
        violations=tuple(violations),
    )


def lemma22_slacks(
    rho0: GridDensity,
    rho1: GridDensity,
    m: EntropyModel,
    pot: PotentialPair,
) -> tuple[float, float, float]:
    """Slacks of the three energy inequalities along the optimal transport.

    With T the optimal map, D = T - id, and moduli (lam, nu):

      internal:    E_F(rho1) - E_F(rho0) - int rho0 D . grad F'(rho0)          >= 0
      potential:   E_V(rho1) - E_V(rho0) - int rho0 D . grad V - lam/2 W2^2    >= 0
      interaction: E_W(rho1) - E_W(rho0) - int rho0 D . grad(W*rho0)
                     - nu/2 (W2^2 - |b0 - b1|^2)                               >= 0
    """
    from .errors import PositivityError
    from .functionals import ConvolutionKernel, interaction_energy, potential_energy

    if rho0.floor <= 0:
        raise PositivityError("lemma22_slacks needs a source density with floor > 0")
    grid = rho0.grid
    plan = optimal_map(rho0, rho1)
    disp = plan.map_values - grid.x
    # transport cost and barycentre displacement in the same (source-side)
    # quadrature as the displacement integrals, so that quadratic potentials,
    # which saturate their inequalities, land at rounding-level slack
    w2sq = integrate(rho0.values * disp**2, grid)
    b_gap = integrate(rho0.values * disp, grid)

    dF = m.dF(rho0.values)
    slack_internal = (
        internal_energy(rho1, m)
        - internal_energy(rho0, m)
        - integrate(rho0.values * disp * gradient(dF, grid), grid)
    )

    v_vals = np.asarray(pot.V(grid.x), dtype=float)
    slack_potential = (
        potential_energy(rho1, pot.V)
        - potential_energy(rho0, pot.V)
        - integrate(rho0.values * disp * gradient(v_vals, grid), grid)
        - 0.5 * pot.lam * w2sq
    )

    if pot.W is not None:
        kernel = ConvolutionKernel(pot.W, grid)
        conv0 = kernel.apply(rho0.values)
        slack_interaction = (
            interaction_energy(rho1, pot.W, kernel)
            - interaction_energy(rho0, pot.W, kernel)
            - integrate(rho0.values * disp * gradient(conv0, grid), grid)
            - 0.5 * pot.nu * (w2sq - b_gap**2)
        )
    else:
        slack_interaction = 0.0
    return float(slack_internal), float(slack_potential), float(slack_interaction)


def discrete_w2_oracle(xs0, ws0, xs1, ws1) -> float:
    """Exact W2 between small atomic measures by the sorted monotone coupling.

    Independent cross-check for :func:`w2_distance`: sort both supports and
    sweep, splitting atoms so matched mass moves between same-rank quantiles.
    """
    xs0 = np.asarray(xs0, dtype=float)
    xs1 = np.asarray(xs1, dtype=float)
    ws0 = np.asarray(ws0, dtype=float)
    ws1 = np.asarray(ws1, dtype=float)
    if len(xs0) > 64 or len(xs1) > 64:
        raise DomainError("oracle is for small instances (<= 64 atoms)")
    if abs(ws0.sum() - 1.0) > 1e-8 or abs(ws1.sum() - 1.0) > 1e-8:
        raise DomainError("atom weights must sum to 1")
    o0 = np.argsort(xs0, kind="stable")
    o1 = np.argsort(xs1, kind="stable")
    xs0, ws0 = xs0[o0], ws0[o0].copy()
    xs1, ws1 = xs1[o1], ws1[o1].copy()
    i = j = 0
    cost = 0.0
    while i < len(xs0) and j < len(xs1):
        mass = min(ws0[i], ws1[j])
        cost += mass * (xs0[i] - xs1[j]) ** 2
        ws0[i] -= mass
        ws1[j] -= mass
        if ws0[i] <= 1e-15:
            i += 1
        if ws1[j] <= 1e-15:
            j += 1
    return float(np.sqrt(cost))
