"""Reference (stationary/extremal) densities and closed-form sharp constants.

A reference density for ingredients (F, V, c, W) solves the first-order
condition

    F'(rho) + V + c + W * rho = K   on {rho > 0},   int rho = 1,

which makes the entropy production vanish and turns the comparison
inequalities into equalities.  Special cases: the Boltzmann weight
e^(-V)/Z, the Barenblatt-Prattle profile of the confined porous-medium
flow, and the decaying power-law profiles extremizing Gagliardo-Nirenberg
and Sobolev inequalities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.optimize import brentq
from scipy.special import gammaln

from .errors import ConfinementError, ConvergenceError, DomainError
from .functionals import ConvolutionKernel
from .measures import Grid1D, GridDensity, integrate
from .models import EntropyModel, PotentialPair, YoungPair

__all__ = [
    "ReferenceDensity",
    "solve_reference",
    "sigma_c",
    "plsi_extremal",
    "gn_extremal",
    "GNExtremal",
    "sobolev_constants",
    "radial_integral",
]


@dataclass(frozen=True)
class ReferenceDensity:
    density: GridDensity
    K: float
    residual: float


def _first_order_residual(
    values: np.ndarray,
    grid: Grid1D,
    m: EntropyModel,
    phi: np.ndarray,
    threshold: float,
) -> float:
    """max |grad(F'(rho) + phi)| over nodes whose full central stencil has rho > threshold.

    Restricting to the stencil interior of the support keeps the kink at a
    compact support edge from polluting the residual.
    """
    pos = values > threshold
    mask = pos.copy()
    mask[1:-1] &= pos[:-2] & pos[2:]
    mask[0] = mask[-1] = False
    if not np.any(mask):
        return 0.0
    xi = np.array(phi, dtype=float)
    xi[pos] += m.dF(values[pos])
    grad = np.gradient(xi, grid.h, edge_order=2)
    return float(np.max(np.abs(grad[mask])))


def _solve_no_interaction(
    m: EntropyModel, phi: np.ndarray, grid: Grid1D
) -> tuple[np.ndarray, float]:
    """Solve F'(rho) = K - phi with unit mass by bisection on K (mass is monotone)."""
    phi_min = float(np.min(phi))
    fast_diffusion = m.kind == "power" and m.gamma < 1

    def mass(K: float) -> float:
        vals = m.inv_dF(K - phi)
        if not np.all(np.isfinite(vals)):
            return 1e30  # finite sentinel keeps the bracketing root-finder happy
        return min(integrate(vals, grid), 1e30)

    if fast_diffusion:
        hi = phi_min - 1e-13 * max(1.0, abs(phi_min))
        lo = phi_min - 50.0
    else:
        lo, hi = phi_min - 50.0, phi_min + 50.0
    for _ in range(60):
        if mass(lo) < 1.0:
            break
        lo -= 2 * abs(lo - phi_min) + 1.0
    else:
        raise ConfinementError("could not bracket the normalization constant from below")
    for _ in range(60):
        if mass(hi) > 1.0:
            break
        if fast_diffusion:
            hi = phi_min - 0.5 * (phi_min - hi)  # approach phi_min geometrically
        else:
            hi += 2 * abs(hi - phi_min) + 1.0
    else:
        raise ConfinementError(
            "potential does not confine unit mass on this grid (bracket failure)"
        )
    K = brentq(lambda k: mass(k) - 1.0, lo, hi, xtol=1e-15, rtol=8.9e-16, maxiter=300)
    vals = m.inv_dF(K - phi)
    return vals, float(K)


def solve_reference(
    m: EntropyModel,
    pot: PotentialPair,
    yp: Optional[YoungPair],
    grid: Grid1D,
    max_iter: int = 500,
    fp_tol: float = 1e-10,
    damping: float = 0.5,
) -> ReferenceDensity:
    """Reference density for (F, V, c, W): F'(rho) + V + c + W*rho = K, unit mass.

    Without interaction this is a single monotone bisection for K; with W a
    damped fixed-point iteration rho <- solve(V + c + W*rho) is run until the
    L1 change drops below ``fp_tol``.
    """
    x = grid.x
    base = np.asarray(pot.V(x), dtype=float)
    if yp is not None:
        base = base + np.asarray(yp.c(x), dtype=float)

    if pot.W is None:
        vals, K = _solve_no_interaction(m, base, grid)
        conv_term = np.zeros(grid.n)
    else:
        kernel = ConvolutionKernel(pot.W, grid)
        vals = np.exp(-base - np.max(-base))
        vals /= integrate(vals, grid)
        K = 0.0
        for it in range(max_iter):
            conv_term = kernel.apply(vals)
            new_vals, K = _solve_no_interaction(m, base + conv_term, grid)
            step = damping * (new_vals - vals)
            l1 = integrate(np.abs(step), grid)
            vals = vals + step
            vals = np.maximum(vals, 0.0)
            vals /= integrate(vals, grid)
            if l1 < fp_tol:
                break
        else:
            raise ConvergenceError(
                f"interaction fixed point not converged in {max_iter} iterations"
            )
        conv_term = kernel.apply(vals)
        vals, K = _solve_no_interaction(m, base + conv_term, grid)

    mass = integrate(vals, grid)
    vals = vals / mass
    positive_min = float(vals[vals > 0].min()) if np.any(vals > 0) else 0.0
    floor = positive_min if np.all(vals > 0) else 0.0
    density = GridDensity(grid, vals, floor)
    residual = _first_order_residual(vals, grid, m, base + conv_term, threshold=0.0)
    return ReferenceDensity(density=density, K=K, residual=residual)


def sigma_c(p: float, q: float, n: int) -> float:
    """Closed-form int exp(-(p-1)|x|^q) over R^n via log-Gamma.

        sigma = pi^(n/2) Gamma(n/q + 1) / ((p-1)^(n/q) Gamma(n/2 + 1))
    """
    if p <= 1 or n < 1:
        raise DomainError("sigma_c needs p > 1 and n >= 1")
    if abs(1.0 / p + 1.0 / q - 1.0) > 1e-12:
        raise DomainError("q must be the conjugate exponent of p")
    return float(
        math.exp(
            0.5 * n * math.log(math.pi)
            + gammaln(n / q + 1.0)
            - (n / q) * math.log(p - 1.0)
            - gammaln(n / 2 + 1.0)
        )
    )


def plsi_extremal(p: float, lam: float, grid: Grid1D) -> GridDensity:
    """Normalized exp(-lam^q (p-1) |x|^q): the equality case of the p-log-Sobolev bound."""
    if p <= 1 or lam <= 0:
        raise DomainError("plsi_extremal needs p > 1 and lam > 0")
    q = p / (p - 1.0)
    vals = np.exp(-(lam**q) * (p - 1.0) * np.abs(grid.x) ** q)
    mass = integrate(vals, grid)
    vals = vals / mass
    return GridDensity(grid, vals, float(vals.min()))


@dataclass(frozen=True)
class GNExtremal:
    """Extremal pair for the Gagliardo-Nirenberg-type inequality in 1D.

    ``h`` solves -h' = x |x|^(q-2) h^(r/p) with int h^r = 1;
    ``density`` is h^r, and ``K`` is the constant value of F'(h^r) + c
    on the support (F power of exponent gamma = 1/r + 1/q,
    c = (r gamma / q)|x|^q).
    """

    density: GridDensity
    h: np.ndarray
    K: float
    ode_residual: float


def _gradient4(f: np.ndarray, h: float) -> np.ndarray:
    """Fourth-order central first derivative (second-order at the 2-node margins)."""
    g = np.gradient(f, h, edge_order=2)
    g[2:-2] = (f[:-4] - 8 * f[1:-3] + 8 * f[3:-1] - f[4:]) / (12 * h)
    return g


def gn_extremal(p: float, r: float, grid: Grid1D) -> GNExtremal:
    """Closed-form solution of -h' = x|x|^(q-2) h^(r/p), normalized so int h^r = 1.

    Separating variables gives h^beta linear in |x|^q with beta = 1 - r/p:
    a decaying power-law profile for r > p, a compactly supported
    Barenblatt-type profile for r < p.
    """
    if p <= 1:
        raise DomainError("gn_extremal needs p > 1")
    if r <= 0 or r == p:
        raise DomainError("gn_extremal needs r > 0, r != p")
    q = p / (p - 1.0)
    gamma = 1.0 / r + 1.0 / q
    if gamma == 1.0:
        raise DomainError("exponent window requires gamma != 1")
    beta = 1.0 - r / p
    x = grid.x

    def h_of(A: float) -> np.ndarray:
        base = A - beta * np.abs(x) ** q / q
        if beta > 0:
            return np.power(np.maximum(base, 0.0), 1.0 / beta)
        return np.power(base, 1.0 / beta)  # base = A + |beta||x|^q/q > 0

    def mass(A: float) -> float:
        with np.errstate(over="ignore"):
            vals = h_of(A) ** r
        if not np.all(np.isfinite(vals)):
            return 1e30
        return min(float(np.trapezoid(vals, dx=grid.h)), 1e30)

    # mass is monotone in A (increasing for beta > 0, decreasing for beta < 0);
    # expand the bracket until the residual changes sign between its ends
    lo, hi = 1e-6, 1.0
    for _ in range(100):
        if (mass(lo) - 1.0) * (mass(hi) - 1.0) < 0:
            break
        lo /= 8.0
        hi *= 8.0
    else:
        raise ConfinementError("gn_extremal profile is not normalizable on this grid")
    A = brentq(lambda a: mass(a) - 1.0, lo, hi, xtol=1e-15, rtol=8.9e-16, maxiter=300)
    h = h_of(A)
    dens_vals = h**r
    dens_vals = dens_vals / integrate(dens_vals, grid)
    floor = float(dens_vals.min()) if np.all(dens_vals > 0) else 0.0
    density = GridDensity(grid, dens_vals, floor)
    K = gamma / (gamma - 1.0) * A

    rhs = -x * np.abs(x) ** (q - 2.0) * h ** (r / p)
    dh = _gradient4(h, grid.h)
    pos = h > 1e-9 * h.max()
    mask = pos.copy()
    mask[2:-2] &= pos[:-4] & pos[1:-3] & pos[3:-1] & pos[4:]
    mask[:2] = mask[-2:] = False
    residual = float(np.max(np.abs((dh - rhs)[mask]))) if np.any(mask) else 0.0
    return GNExtremal(density=density, h=h, K=K, ode_residual=residual)


def radial_integral(fn, n: int, num: int = 20001) -> float:
    """int_{R^n} fn(|x|) dx for radial fn, by midpoint rule in r/(1+r) coordinates.

    The surface factor is n omega_n r^(n-1) with omega_n the unit-ball volume.
    """
    omega_n = math.pi ** (n / 2) / math.exp(gammaln(n / 2 + 1.0))
    u = (np.arange(num) + 0.5) / num
    r = u / (1.0 - u)
    jac = 1.0 / (1.0 - u) ** 2
    vals = np.asarray(fn(r), dtype=float) * r ** (n - 1) * jac
    return float(n * omega_n * np.sum(vals) / num)


def sobolev_constants(p: float, n: int, num: int = 20001) -> tuple[float, float]:
    """Sharp constant of |f|_{p*} <= C |grad f|_p together with its additive constant.

    Built from the decaying radial profile rho(x) = (a|x|^q + b)^(-n) with
    a = p*/(n q); b is fixed by unit mass, the additive constant is
    C_inf = (1-n) b (negative for n >= 2), and

        C(p, n) = ( p*(n-1) / (n p [E_P(rho) - C_inf]) )^(1/p)

    where E_P(rho) = int rho^(1-1/n) is the pressure energy of the profile.
    """
    if not 1 < p < n:
        raise DomainError("sobolev_constants needs 1 < p < n")
    q = p / (p - 1.0)
    pstar = n * p / (n - p)
    a = pstar / (n * q)
    S = radial_integral(lambda rr: (a * rr**q + 1.0) ** (-n), n, num)
    b = S ** (p / n)
    c_inf = (1.0 - n) * b
    e_pressure = radial_integral(lambda rr: (a * rr**q + b) ** (-(n - 1.0)), n, num)
    c_pn = (pstar * (n - 1.0) / (n * p * (e_pressure - c_inf))) ** (1.0 / p)
    return float(c_pn), float(c_inf)
