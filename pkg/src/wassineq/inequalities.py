"""Inequality checkers: every check reports lhs, rhs, slack = rhs - lhs.

Conventions shared by all checkers:

* every inequality is oriented as lhs <= rhs;
* scale = max(|lhs|, |rhs|, 1), pass means slack >= -tol * scale;
* an equality case is flagged when |slack| <= tol_eq * scale;
* reports carry a digest of their inputs so reruns are byte-comparable.

The registry at the bottom maps checker names to seeded suite runners used
by the batch runner; the checker functions themselves are pure and can be
called directly with explicit ingredients.
"""

from __future__ import annotations

import dataclasses
import hashlib
import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.special import gammaln, xlogy

from .errors import DomainError, HypothesisError
from .functionals import (
    ConvolutionKernel,
    entropy_production_I2,
    entropy_production_Icstar,
    free_energy,
    grad_potential_term,
    internal_energy,
    relative_energy,
)
from .measures import (
    Grid1D,
    GridDensity,
    barycenter,
    gradient,
    integrate,
    normalize,
    random_smooth_density,
)
from .models import EntropyModel, PotentialPair, YoungPair, make_young
from .stationary import ReferenceDensity, gn_extremal, plsi_extremal, solve_reference
from .transport import (
    check_displacement_convexity,
    lemma22_slacks,
    w2_distance,
)

__all__ = [
    "IneqReport",
    "CheckContext",
    "REGISTRY",
    "check_master",
    "check_general_sobolev",
    "check_euclidean_lsi",
    "plsi_constant",
    "check_plsi",
    "check_gagliardo_nirenberg",
    "check_general_lsi",
    "check_hwbi",
    "check_lsi_interaction",
    "check_talagrand",
    "check_boltzmann_lsi",
    "check_poincare",
    "check_concentration",
    "check_duality",
    "recenter_to",
]

DEFAULT_TOL = 1e-4
DEFAULT_TOL_EQ = 1e-3


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------


def _digest(*parts) -> str:
    h = hashlib.sha256()
    for part in parts:
        if isinstance(part, GridDensity):
            h.update(part.values.tobytes())
        elif isinstance(part, np.ndarray):
            h.update(np.ascontiguousarray(part).tobytes())
        elif isinstance(part, float):
            h.update(repr(part).encode())
        else:
            h.update(str(part).encode())
    return h.hexdigest()[:16]


@dataclass(frozen=True)
class IneqReport:
    name: str
    lhs: float
    rhs: float
    slack: float
    scale: float
    tol: float
    tol_eq: float
    passed: bool
    equality_case: bool
    inputs_digest: str
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "slack": self.slack,
            "scale": self.scale,
            "tol": self.tol,
            "tol_eq": self.tol_eq,
            "pass": self.passed,
            "equality_case": self.equality_case,
            "inputs_digest": self.inputs_digest,
            "notes": self.notes,
        }


def _report(
    name: str,
    lhs: float,
    rhs: float,
    tol: float,
    tol_eq: float,
    digest_parts: tuple,
    notes: str = "",
) -> IneqReport:
    lhs = float(lhs)
    rhs = float(rhs)
    slack = rhs - lhs
    scale = max(abs(lhs), abs(rhs), 1.0)
    return IneqReport(
        name=name,
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        scale=scale,
        tol=tol,
        tol_eq=tol_eq,
        passed=slack >= -tol * scale,
        equality_case=abs(slack) <= tol_eq * scale,
        inputs_digest=_digest(name, *digest_parts),
        notes=notes,
    )


def _require_padding(rho: GridDensity, cells: int = 2):
    tol = max(10.0 * rho.floor, 1e-8)
    edge = max(float(np.max(rho.values[:cells])), float(np.max(rho.values[-cells:])))
    if edge > tol:
        raise HypothesisError(
            f"density needs {cells} cells of near-zero padding at the boundary "
            f"(edge value {edge:.3e})"
        )


def _conjugate_exponent(p: float) -> float:
    return p / (p - 1.0)


def integrate_between(vals: np.ndarray, grid: Grid1D, lo: float, hi: float) -> float:
    """Trapezoid integral of nodal values over [lo, hi] with partial end cells."""
    lo = max(lo, grid.a)
    hi = min(hi, grid.b)
    if hi <= lo:
        return 0.0
    x = grid.x
    i0 = int(np.searchsorted(x, lo, side="left"))
    i1 = int(np.searchsorted(x, hi, side="right")) - 1
    total = 0.0
    if i1 > i0:
        total += float(np.trapezoid(vals[i0 : i1 + 1], dx=grid.h))
    v_lo = float(np.interp(lo, x, vals))
    v_hi = float(np.interp(hi, x, vals))
    if i0 > 0 and x[i0] > lo:
        total += 0.5 * (v_lo + vals[i0]) * (x[i0] - lo)
    if i1 < grid.n - 1 and x[i1] < hi:
        total += 0.5 * (vals[i1] + v_hi) * (hi - x[i1])
    return total


def recenter_to(rho: GridDensity, target_b: float, iters: int = 80) -> GridDensity:
    """Shift a density (by resampling) until its barycentre matches target_b to 1e-9.

    Convergence is geometric rather than one-shot because each shift clips a
    little mass at the grid boundary, which the renormalization redistributes.
    """
    out = rho
    for _ in range(iters):
        delta = barycenter(out) - target_b
        if abs(delta) <= 1e-9:
            break
        x = out.grid.x
        shifted = np.interp(x + delta, x, out.values, left=out.floor, right=out.floor)
        out = normalize(shifted, out.grid, out.floor)
    return out


# ---------------------------------------------------------------------------
# master comparison principle
# ---------------------------------------------------------------------------


def _rhs_mixed_functional(
    rho0: GridDensity,
    m: EntropyModel,
    pot: PotentialPair,
    c_vals: np.ndarray,
    conv: Optional[ConvolutionKernel],
) -> float:
    """int [ -n P_F(rho0) + rho0 (c + x . grad V) + rho0 x . grad(W * rho0) ].

    This is the derivative-side functional produced by integrating
    x . grad(F'(rho0) + V + W*rho0) by parts against rho0.
    """
    grid = rho0.grid
    x = grid.x
    n = m.dim_n
    out = -n * integrate(m.PF(rho0.values), grid)
    grad_v = gradient(np.asarray(pot.V(x), dtype=float), grid)
    out += integrate(rho0.values * (c_vals + x * grad_v), grid)
    if pot.W is not None:
        kernel = conv if conv is not None else ConvolutionKernel(pot.W, grid)
        conv_vals = kernel.apply(rho0.values)
        out += integrate(rho0.values * x * gradient(conv_vals, grid), grid)
    return out


def check_master(
    rho0: GridDensity,
    rho1: GridDensity,
    m: EntropyModel,
    pot: PotentialPair,
    yp: YoungPair,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_master",
    conv: Optional[ConvolutionKernel] = None,
) -> list[IneqReport]:
    """Master comparison principle between two configurations.

    relative free energy (potential V + c) + (lam+nu)/2 W2^2 - nu/2 |b0-b1|^2
      <= mixed derivative-side functional + int rho0 c*(-grad(F'(rho0)+V+W*rho0))

    Equality when rho0 = rho1 = the reference density of (F, V+c, W).
    """
    _require_padding(rho0)
    grid = rho0.grid
    c_vals = np.asarray(yp.c(grid.x), dtype=float)
    w2 = w2_distance(rho0, rho1)
    b_gap = barycenter(rho0) - barycenter(rho1)
    lhs = (
        relative_energy(rho0, rho1, m, pot, conv, extra_potential=c_vals)
        + 0.5 * (pot.lam + pot.nu) * w2**2
        - 0.5 * pot.nu * b_gap**2
    )
    iscr, _ = entropy_production_Icstar(rho0, m, pot, yp, conv)
    rhs = _rhs_mixed_functional(rho0, m, pot, c_vals, conv) + iscr
    return [
        _report(name, lhs, rhs, tol, tol_eq, (rho0, rho1, yp.label, pot.lam, pot.nu))
    ]


# ---------------------------------------------------------------------------
# Sobolev family
# ---------------------------------------------------------------------------


def check_general_sobolev(
    rho: GridDensity,
    m: EntropyModel,
    pot: PotentialPair,
    yp: YoungPair,
    ref_vc: Optional[ReferenceDensity] = None,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_general_sobolev",
    conv: Optional[ConvolutionKernel] = None,
) -> list[IneqReport]:
    """General Sobolev inequality (V, W convex): free energy with tilted slots
    is controlled by entropy production plus the reference constant.

    With no potentials the sharp form reads
       int (F + n P_F)(rho) <= int rho c*(-grad F'(rho)) - int P_F(rho_c) + K_c,
    and a weaker simplified variant drops the (nonnegative) pressure term.
    """
    if pot.lam < 0 or pot.nu < 0:
        raise HypothesisError("general Sobolev form needs convex V and W (lam, nu >= 0)")
    grid = rho.grid
    x = grid.x
    if ref_vc is None:
        ref_vc = solve_reference(m, pot, yp, grid)
    v_vals = np.asarray(pot.V(x), dtype=float)
    grad_v = gradient(v_vals, grid)
    n = m.dim_n

    lhs = integrate(m.F(rho.values) + n * m.PF(rho.values), grid)
    lhs += integrate(rho.values * (v_vals - x * grad_v), grid)
    kernel = None
    if pot.W is not None:
        kernel = conv if conv is not None else ConvolutionKernel(pot.W, grid)
        conv_vals = kernel.apply(rho.values)
        lhs += 0.5 * integrate(rho.values * conv_vals, grid)
        lhs -= integrate(rho.values * x * gradient(conv_vals, grid), grid)

    iscr, _ = entropy_production_Icstar(rho, m, pot, yp, kernel)
    ref_rho = ref_vc.density
    pressure_ref = integrate(m.PF(ref_rho.values), grid)
    if pot.W is not None:
        pressure_ref += 0.5 * integrate(
            ref_rho.values * kernel.apply(ref_rho.values), grid
        )
    rhs = iscr - pressure_ref + ref_vc.K
    digest = (rho, yp.label, pot.lam, pot.nu, ref_vc.K)
    reports = [_report(name, lhs, rhs, tol, tol_eq, digest)]

    no_potentials = float(np.max(np.abs(v_vals))) == 0.0 and pot.W is None
    if no_potentials:
        rhs_simple = iscr + ref_vc.K
        reports.append(
            _report(
                name + "_simple",
                integrate(m.GF(rho.values), grid),
                rhs_simple,
                tol,
                tol_eq,
                digest,
                notes="weaker variant without the reference pressure term",
            )
        )
    return reports


def check_euclidean_lsi(
    rho: GridDensity,
    yp: YoungPair,
    n: int = 1,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_euclidean_lsi",
) -> list[IneqReport]:
    """Euclidean log-Sobolev inequality for p-homogeneous conjugates:

        int rho ln rho <= (n/p) ln( p / (n e^(p-1) sigma^(p/n)) * G ),
        G = int rho c*(-grad rho / rho),   sigma = int e^(-c).

    Saturated by rho proportional to exp(-lam^q c).
    """
    if yp.p is None:
        raise HypothesisError("Euclidean LSI needs a Young pair with homogeneity degree p")
    if n != 1:
        raise DomainError("grid evaluation is one-dimensional (n = 1)")
    grid = rho.grid
    p = yp.p
    c_vals = np.asarray(yp.c(grid.x), dtype=float)
    weight = np.exp(-c_vals)
    if max(weight[0], weight[-1]) > 1e-12:
        raise HypothesisError("grid too narrow to evaluate sigma = int exp(-c)")
    sigma = integrate(weight, grid)
    if rho.floor <= 0:
        raise HypothesisError("density must be bounded away from zero (floor > 0)")
    lhs = integrate(xlogy(rho.values, rho.values), grid)
    g = gradient(rho.values, grid) / rho.values
    gamma_term = integrate(rho.values * np.asarray(yp.c_star(-g), dtype=float), grid)
    rhs = (n / p) * math.log(p / (n * math.e ** (p - 1.0) * sigma ** (p / n)) * gamma_term)
    return [_report(name, lhs, rhs, tol, tol_eq, (rho, yp.label, n))]


def plsi_constant(p: float, n: int) -> float:
    """Sharp constant of the Euclidean p-log-Sobolev inequality.

    C_p = (p/n) ((p-1)/e)^(p-1) pi^(-p/2) [Gamma(n/2+1)/Gamma(n/q+1)]^(p/n)
    for p > 1, with the p = 1 value the limit of C_p as p -> 1.
    """
    if p < 1 or n < 1:
        raise DomainError("plsi_constant needs p >= 1 and n >= 1")
    if p == 1.0:
        return float((1.0 / (n * math.sqrt(math.pi))) * math.exp(gammaln(n / 2 + 1.0) / n))
    q = _conjugate_exponent(p)
    log_c = (
        math.log(p / n)
        + (p - 1.0) * math.log((p - 1.0) / math.e)
        - (p / 2.0) * math.log(math.pi)
        + (p / n) * (gammaln(n / 2 + 1.0) - gammaln(n / q + 1.0))
    )
    return float(math.exp(log_c))


def check_plsi(
    f: np.ndarray,
    grid: Grid1D,
    p: float,
    n: int = 1,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_plsi",
) -> list[IneqReport]:
    """Optimal p-log-Sobolev: int |f|^p ln|f|^p <= (n/p) ln(C_p int |grad f|^p)."""
    f = np.asarray(f, dtype=float)
    if p <= 1:
        raise DomainError("check_plsi needs p > 1")
    fp = np.abs(f) ** p
    norm = integrate(fp, grid)
    if abs(norm - 1.0) > 1e-8:
        raise HypothesisError(f"f must be L^p-normalized (got int |f|^p = {norm!r})")
    lhs = integrate(xlogy(fp, fp), grid)
    grad_f = gradient(f, grid)
    rhs = (n / p) * math.log(
        plsi_constant(p, n) * integrate(np.abs(grad_f) ** p, grid)
    )
    return [_report(name, lhs, rhs, tol, tol_eq, (f, p, n))]


def _golden_min(fn: Callable[[float], float], lo: float, hi: float, iters: int = 120):
    """Golden-section minimum of a unimodal function on [lo, hi]."""
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = fn(d)
        if abs(b - a) < 1e-12:
            break
    xm = 0.5 * (a + b)
    return xm, fn(xm)


def check_gagliardo_nirenberg(
    f: np.ndarray,
    grid: Grid1D,
    p: float,
    r: float,
    n: int = 1,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_gagliardo_nirenberg",
) -> list[IneqReport]:
    """Gagliardo-Nirenberg-type interpolation built on the power entropy.

    Three reports: the energy-form inequality

        (1/(gamma-1) + n) int |f|^(r gamma)
            <= (r gamma / p) int |grad f|^p - int rho_inf^gamma + K,

    its scaling-optimized version (minimized over dilations, hence
    scale-invariant), and the norm form |f|_r <= C(p,r) |grad f|_p^theta
    |f|_(r gamma)^(1-theta) with C(p,r) read off the extremal profile.
    """
    f = np.asarray(f, dtype=float)
    if p <= 1:
        raise DomainError("needs p > 1")
    q = _conjugate_exponent(p)
    gamma = 1.0 / r + 1.0 / q
    if r <= 0 or r == p or gamma == 1.0 or gamma <= 1.0 - 1.0 / n:
        raise HypothesisError(
            f"exponent window violated: r={r}, p={p} give gamma={gamma}"
        )
    norm_r = integrate(np.abs(f) ** r, grid) ** (1.0 / r)
    if abs(norm_r - 1.0) > 1e-8:
        raise HypothesisError(f"f must be L^r-normalized (got |f|_r = {norm_r!r})")

    ext = gn_extremal(p, r, grid)
    k_gamma = 1.0 / (gamma - 1.0) + n
    hpf_inf = integrate(ext.density.values**gamma, grid)
    grad_f = gradient(f, grid)
    int_grad_p = integrate(np.abs(grad_f) ** p, grid)
    int_f_rgamma = integrate(np.abs(f) ** (r * gamma), grid)

    lhs_energy = k_gamma * int_f_rgamma
    rhs_energy = (r * gamma / p) * int_grad_p - hpf_inf + ext.K
    digest = (f, p, r, n)
    reports = [_report(name + "_energy", lhs_energy, rhs_energy, tol, tol_eq, digest)]

    # dilation family f_s(x) = f(s x), renormalized in L^r
    alpha = p - n + n * p / r
    beta = n * (gamma - 1.0)
    x_term = int_grad_p / norm_r**p
    y_term = int_f_rgamma / norm_r ** (r * gamma)

    def dilation_value(log_s: float) -> float:
        s = math.exp(log_s)
        return (r * gamma / p) * s**alpha * x_term - k_gamma * s**beta * y_term

    _, m_f = _golden_min(dilation_value, -5.0, 5.0)
    c_const = hpf_inf - ext.K
    reports.append(
        _report(
            name + "_scaling",
            c_const,
            m_f,
            tol,
            tol_eq,
            digest,
            notes="dilation-minimized energy form; scale-invariant",
        )
    )

    pstar = n * p / (n - p)  # formal in 1D (negative for p > n); balances scaling
    theta = (1.0 / r - 1.0 / (r * gamma)) / (1.0 / pstar - 1.0 / (r * gamma))
    grad_h = gradient(ext.h, grid)
    c_pr = 1.0 / (
        integrate(np.abs(grad_h) ** p, grid) ** (theta / p)
        * integrate(np.abs(ext.h) ** (r * gamma), grid) ** ((1.0 - theta) / (r * gamma))
    )
    rhs_norm = (
        c_pr
        * int_grad_p ** (theta / p)
        * int_f_rgamma ** ((1.0 - theta) / (r * gamma))
    )
    reports.append(
        _report(
            name + "_norm",
            norm_r,
            rhs_norm,
            tol,
            tol_eq,
            digest,
            notes=f"theta={theta!r}, C(p,r)={c_pr!r}",
        )
    )
    return reports


# ---------------------------------------------------------------------------
# logarithmic Sobolev / transport family (quadratic cost)
# ---------------------------------------------------------------------------


def check_general_lsi(
    rho0: GridDensity,
    rho1: GridDensity,
    m: EntropyModel,
    pot: PotentialPair,
    sigma: float,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_general_lsi",
    conv: Optional[ConvolutionKernel] = None,
) -> list[IneqReport]:
    """General log-Sobolev inequality, quadratic cost with width sigma:

    H(rho0|rho1) + 1/2 (mu + nu - 1/sigma) W2^2 - nu/2 |b0-b1|^2
        <= sigma/2 I2(rho0).
    """
    if sigma <= 0:
        raise HypothesisError("sigma must be positive")
    w2 = w2_distance(rho0, rho1)
    b_gap = barycenter(rho0) - barycenter(rho1)
    lhs = (
        relative_energy(rho0, rho1, m, pot, conv)
        + 0.5 * (pot.lam + pot.nu - 1.0 / sigma) * w2**2
        - 0.5 * pot.nu * b_gap**2
    )
    rhs = 0.5 * sigma * entropy_production_I2(rho0, m, pot, conv)
    return [_report(name, lhs, rhs, tol, tol_eq, (rho0, rho1, sigma, pot.lam, pot.nu))]


def check_hwbi(
    rho0: GridDensity,
    rho1: GridDensity,
    m: EntropyModel,
    pot: PotentialPair,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_hwbi",
    conv: Optional[ConvolutionKernel] = None,
) -> list[IneqReport]:
    """HWBI: H(rho0|rho1) <= W2 sqrt(I2) - (mu+nu)/2 W2^2 + nu/2 |b0-b1|^2.

    With no interaction this is the HWI inequality, reported additionally.
    """
    w2 = w2_distance(rho0, rho1)
    b_gap = barycenter(rho0) - barycenter(rho1)
    H = relative_energy(rho0, rho1, m, pot, conv)
    I2 = entropy_production_I2(rho0, m, pot, conv)
    rhs = w2 * math.sqrt(max(I2, 0.0)) - 0.5 * (pot.lam + pot.nu) * w2**2
    rhs += 0.5 * pot.nu * b_gap**2
    digest = (rho0, rho1, pot.lam, pot.nu)
    reports = [_report(name, H, rhs, tol, tol_eq, digest)]
    if pot.W is None:
        reports.append(
            _report(
                "check_hwi",
                H,
                w2 * math.sqrt(max(I2, 0.0)) - 0.5 * pot.lam * w2**2,
                tol,
                tol_eq,
                digest,
                notes="no-interaction specialization",
            )
        )
    return reports


def check_lsi_interaction(
    rho0: GridDensity,
    rho1: GridDensity,
    m: EntropyModel,
    pot: PotentialPair,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_lsi_interaction",
    conv: Optional[ConvolutionKernel] = None,
) -> list[IneqReport]:
    """Log-Sobolev bounds with interaction (requires mu + nu > 0):

      (a) H - nu/2 |b0-b1|^2 <= I2 / (2 (mu+nu))          always;
      (b) H <= I2 / (2 (mu+nu))                           matched barycentres;
      (c) H <= I2 / (2 mu)                                convex W, mu > 0.
    """
    mu, nu = pot.lam, pot.nu
    if mu + nu <= 0:
        raise HypothesisError("needs mu + nu > 0")
    H = relative_energy(rho0, rho1, m, pot, conv)
    I2 = entropy_production_I2(rho0, m, pot, conv)
    b_gap = barycenter(rho0) - barycenter(rho1)
    digest = (rho0, rho1, mu, nu)
    reports = [
        _report(
            name, H - 0.5 * nu * b_gap**2, I2 / (2 * (mu + nu)), tol, tol_eq, digest
        )
    ]
    if abs(b_gap) <= 1e-8:
        reports.append(
            _report(
                name + "_matched_barycentre",
                H,
                I2 / (2 * (mu + nu)),
                tol,
                tol_eq,
                digest,
            )
        )
    if nu >= 0 and mu > 0:
        reports.append(
            _report(name + "_convex_interaction", H, I2 / (2 * mu), tol, tol_eq, digest)
        )
    return reports


def check_talagrand(
    rho: GridDensity,
    m: EntropyModel,
    pot: PotentialPair,
    ref: Optional[ReferenceDensity] = None,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_talagrand",
    conv: Optional[ConvolutionKernel] = None,
) -> list[IneqReport]:
    """Talagrand-type transport bounds against the stationary reference:

      (a) (mu+nu)/2 W2^2 - nu/2 |b - b_ref|^2 <= H(rho|rho_ref)   (mu+nu > 0);
      (b) W2 <= sqrt(2 H / (mu+nu))                               matched barycentres;
      (c) W2 <= sqrt(2 H / mu)                                    convex W, mu > 0;
      (d) the Boltzmann special case of (c) when F = x ln x, W = 0.
    """
    mu, nu = pot.lam, pot.nu
    if mu + nu <= 0:
        raise HypothesisError("needs mu + nu > 0")
    if ref is None:
        ref = solve_reference(m, pot, None, rho.grid)
    rho_ref = ref.density
    H = max(relative_energy(rho, rho_ref, m, pot, conv), 0.0)
    w2 = w2_distance(rho, rho_ref)
    b_gap = barycenter(rho) - barycenter(rho_ref)
    digest = (rho, rho_ref, mu, nu)
    reports = [
        _report(
            name, 0.5 * (mu + nu) * w2**2 - 0.5 * nu * b_gap**2, H, tol, tol_eq, digest
        )
    ]
    if abs(b_gap) <= 1e-8:
        reports.append(
            _report(
                name + "_matched_barycentre",
                w2,
                math.sqrt(2 * H / (mu + nu)),
                tol,
                tol_eq,
                digest,
            )
        )
    if nu >= 0 and mu > 0:
        reports.append(
            _report(
                name + "_convex_interaction",
                w2,
                math.sqrt(2 * H / mu),
                tol,
                tol_eq,
                digest,
            )
        )
        if m.kind == "boltzmann" and pot.W is None:
            reports.append(
                _report(
                    name + "_original",
                    w2,
                    math.sqrt(2 * H / mu),
                    tol,
                    tol_eq,
                    digest,
                    notes="Boltzmann reference measure form",
                )
            )
    return reports


# ---------------------------------------------------------------------------
# Boltzmann-reference family: LSI, HWI, Poincare, concentration
# ---------------------------------------------------------------------------


def _boltzmann_reference(pot: PotentialPair, grid: Grid1D) -> ReferenceDensity:
    if pot.W is not None:
        raise HypothesisError("Boltzmann-measure checks need W = 0")
    return solve_reference(EntropyModel.boltzmann(), pot, None, grid)


def check_boltzmann_lsi(
    f: np.ndarray,
    grid: Grid1D,
    pot: PotentialPair,
    sigma: Optional[float] = None,
    ref: Optional[ReferenceDensity] = None,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_boltzmann_lsi",
) -> list[IneqReport]:
    """Log-Sobolev family for the Boltzmann measure rho_U = e^(-U)/Z.

    For a tilt f >= 0 with int f rho_U = 1 (so rho0 = f rho_U is a density):

      (a) with width sigma:  Ent + 1/2 (mu - 1/sigma) W2^2 <= sigma/2 Fisher;
      (b) HWI:               Ent <= W2 sqrt(Fisher) - mu/2 W2^2;
      (c) original LSI:      Ent <= (2/mu) int |grad sqrt(f)|^2 rho_U  (mu > 0),

    where Ent = int f ln f rho_U and Fisher = int (|grad f|^2/f) rho_U.
    """
    f = np.asarray(f, dtype=float)
    if np.any(f < 0):
        raise HypothesisError("tilt f must be nonnegative")
    if ref is None:
        ref = _boltzmann_reference(pot, grid)
    rho_u = ref.density.values
    mean = integrate(f * rho_u, grid)
    if abs(mean - 1.0) > 1e-8:
        raise HypothesisError(f"int f rho_U must be 1 (got {mean!r})")
    mu = pot.lam
    ent = integrate(xlogy(f, f) * rho_u, grid)
    rho0 = normalize(f * rho_u, grid, floor=0.0)
    w2 = w2_distance(rho0, ref.density)
    grad_f = gradient(f, grid)
    f_safe = np.maximum(f, 1e-300)
    fisher = integrate(grad_f**2 / f_safe * rho_u, grid)
    digest = (f, mu, sigma if sigma is not None else "none")
    reports = []
    if sigma is not None:
        if sigma <= 0:
            raise HypothesisError("sigma must be positive")
        reports.append(
            _report(
                name,
                ent + 0.5 * (mu - 1.0 / sigma) * w2**2,
                0.5 * sigma * fisher,
                tol,
                tol_eq,
                digest,
            )
        )
    reports.append(
        _report(
            name + "_hwi",
            ent,
            w2 * math.sqrt(max(fisher, 0.0)) - 0.5 * mu * w2**2,
            tol,
            tol_eq,
            digest,
        )
    )
    if mu > 0:
        g = np.sqrt(f)
        grad_g = gradient(g, grid)
        reports.append(
            _report(
                name + "_original",
                ent,
                (2.0 / mu) * integrate(grad_g**2 * rho_u, grid),
                tol,
                tol_eq,
                digest,
                notes="squared-tilt form",
            )
        )
    return reports


def check_poincare(
    f: np.ndarray,
    grid: Grid1D,
    pot: PotentialPair,
    ref: Optional[ReferenceDensity] = None,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_poincare",
) -> list[IneqReport]:
    """Poincare inequality for the Boltzmann measure:
    int f^2 rho_U <= (1/mu) int |grad f|^2 rho_U for mean-zero f, mu > 0."""
    if pot.lam <= 0:
        raise HypothesisError("Poincare inequality needs mu > 0")
    f = np.asarray(f, dtype=float)
    if ref is None:
        ref = _boltzmann_reference(pot, grid)
    rho_u = ref.density.values
    mean = integrate(f * rho_u, grid)
    notes = ""
    if abs(mean) > 1e-8:
        f = f - mean
        notes = f"auto-centred (original mean {mean!r})"
    lhs = integrate(f**2 * rho_u, grid)
    rhs = integrate(gradient(f, grid) ** 2 * rho_u, grid) / pot.lam
    return [_report(name, lhs, rhs, tol, tol_eq, (f, pot.lam), notes=notes)]


def check_concentration(
    interval: tuple[float, float],
    eps: float,
    pot: PotentialPair,
    ref: Optional[ReferenceDensity] = None,
    grid: Optional[Grid1D] = None,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_concentration",
) -> list[IneqReport]:
    """Concentration for the Boltzmann measure gamma = rho_U dx:

    gamma(B_eps) >= 1 - exp(-mu/2 (eps - sqrt((2/mu) ln(1/gamma(B))))^2)
    whenever eps clears the threshold sqrt((2/mu) ln(1/gamma(B))).
    """
    mu = pot.lam
    if mu <= 0:
        raise HypothesisError("concentration needs mu > 0")
    if ref is None:
        if grid is None:
            raise DomainError("need a grid when no reference is supplied")
        ref = _boltzmann_reference(pot, grid)
    grid = ref.density.grid
    lo, hi = float(interval[0]), float(interval[1])
    gamma_b = integrate_between(ref.density.values, grid, lo, hi)
    if gamma_b <= 0:
        raise HypothesisError("gamma(B) must be positive")
    threshold = math.sqrt(2.0 / mu * math.log(1.0 / gamma_b))
    if eps < threshold - 1e-12:
        raise HypothesisError(
            f"eps = {eps} below the admissible threshold {threshold}"
        )
    gamma_beps = integrate_between(ref.density.values, grid, lo - eps, hi + eps)
    bound = 1.0 - math.exp(-0.5 * mu * (eps - threshold) ** 2)
    return [
        _report(
            name,
            bound,
            gamma_beps,
            tol,
            tol_eq,
            (lo, hi, eps, mu),
            notes=f"gamma(B)={gamma_b!r}, threshold={threshold!r}",
        )
    ]


# ---------------------------------------------------------------------------
# energy / entropy-production duality
# ---------------------------------------------------------------------------


def check_duality(
    rho: GridDensity,
    f: np.ndarray,
    variant: str,
    p: Optional[float] = None,
    r: Optional[float] = None,
    mu: float = 1.0,
    m: Optional[EntropyModel] = None,
    yp: Optional[YoungPair] = None,
    n: int = 1,
    tol: float = DEFAULT_TOL,
    tol_eq: float = DEFAULT_TOL_EQ,
    name: str = "check_duality",
) -> list[IneqReport]:
    """Duality J(rho) <= I(f) between a free-energy-type supremum over
    densities and an entropy-production-type infimum over functions.

    variant "plog" (Boltzmann entropy, p-homogeneous cost, |f|_p = 1):
        J = -int rho ln rho - (p-1) mu^q int |x|^q rho
        I = -int |f|^p ln |f|^p + mu^(-p) int |grad f|^p - n
    variant "gn" (power entropy, |f|_r = 1, gamma = 1/r + 1/q):
        J = -1/(gamma-1) int rho^gamma - (r gamma mu^q / q) int |x|^q rho
        I = -(1/(gamma-1) + n) int |f|^(r gamma) + (r gamma/(p mu^p)) int |grad f|^p
    variant "general" (explicit entropy m and Young pair yp; f read as a density):
        J = -int [F(rho) + c rho],  I = -int (F + n P_F)(rho0) + int rho0 c*(-grad F'(rho0)).
    """
    grid = rho.grid
    x = grid.x
    f = np.asarray(f, dtype=float)
    if variant == "plog":
        if p is None or p <= 1:
            raise DomainError("plog duality needs p > 1")
        q = _conjugate_exponent(p)
        fp = np.abs(f) ** p
        if abs(integrate(fp, grid) - 1.0) > 1e-8:
            raise HypothesisError("f must be L^p-normalized")
        j_val = -integrate(xlogy(rho.values, rho.values), grid)
        j_val -= (p - 1.0) * mu**q * integrate(np.abs(x) ** q * rho.values, grid)
        i_val = (
            -integrate(xlogy(fp, fp), grid)
            + mu ** (-p) * integrate(np.abs(gradient(f, grid)) ** p, grid)
            - n
        )
        return [_report(name, j_val, i_val, tol, tol_eq, (rho, f, p, mu))]
    if variant == "gn":
        if p is None or r is None or p <= 1 or r <= 0 or r == p:
            raise DomainError("gn duality needs p > 1 and r > 0, r != p")
        q = _conjugate_exponent(p)
        gamma = 1.0 / r + 1.0 / q
        if gamma == 1.0 or gamma <= 1.0 - 1.0 / n:
            raise HypothesisError("exponent window violated")
        if abs(integrate(np.abs(f) ** r, grid) - 1.0) > 1e-8:
            raise HypothesisError("f must be L^r-normalized")
        j_val = -1.0 / (gamma - 1.0) * integrate(rho.values**gamma, grid)
        j_val -= (r * gamma * mu**q / q) * integrate(np.abs(x) ** q * rho.values, grid)
        i_val = -(1.0 / (gamma - 1.0) + n) * integrate(np.abs(f) ** (r * gamma), grid)
        i_val += (r * gamma / (p * mu**p)) * integrate(
            np.abs(gradient(f, grid)) ** p, grid
        )
        return [_report(name, j_val, i_val, tol, tol_eq, (rho, f, p, r, mu))]
    if variant == "general":
        if m is None or yp is None:
            raise DomainError("general duality needs an entropy model and a Young pair")
        rho0 = normalize(f, grid, floor=1e-12)
        c_vals = np.asarray(yp.c(x), dtype=float)
        j_val = -integrate(m.F(rho.values) + c_vals * rho.values, grid)
        g = gradient(m.dF(rho0.values), grid)
        i_val = -integrate(m.GF(rho0.values), grid) + integrate(
            rho0.values * np.asarray(yp.c_star(-g), dtype=float), grid
        )
        return [_report(name, j_val, i_val, tol, tol_eq, (rho, f, yp.label))]
    raise DomainError(f"unknown duality variant {variant!r}")


# ---------------------------------------------------------------------------
# registry of config-driven suite runners
# ---------------------------------------------------------------------------


@dataclass
class CheckContext:
    """Shared ingredients a batch run hands to every suite runner."""

    grid: Grid1D
    m: EntropyModel
    pot: PotentialPair
    yp: YoungPair
    seeds: Sequence[int]
    floor: float = 1e-8
    tol: float = DEFAULT_TOL
    tol_eq: float = DEFAULT_TOL_EQ

    def __post_init__(self):
        self._conv = None
        self._refs = {}

    def conv(self) -> Optional[ConvolutionKernel]:
        if self.pot.W is not None and self._conv is None:
            self._conv = ConvolutionKernel(self.pot.W, self.grid)
        return self._conv

    def reference(self, with_young: bool) -> ReferenceDensity:
        key = bool(with_young)
        if key not in self._refs:
            self._refs[key] = solve_reference(
                self.m, self.pot, self.yp if with_young else None, self.grid
            )
        return self._refs[key]

    def seeded_density(self, seed: int) -> GridDensity:
        return random_smooth_density(seed, self.grid, self.floor)

    def seeded_pair(self, seed: int) -> tuple[GridDensity, GridDensity]:
        return self.seeded_density(seed), self.seeded_density(seed + 500)

    def seeded_lp_function(self, seed: int, exponent: float) -> np.ndarray:
        """Unit-L^exponent nonnegative function derived from a seeded density."""
        rho = self.seeded_density(seed)
        return rho.values ** (1.0 / exponent)


def _run_master(ctx: CheckContext, params: dict) -> list[IneqReport]:
    reports = []
    ref = ctx.reference(with_young=True)
    reports += check_master(
        ref.density,
        ref.density,
        ctx.m,
        ctx.pot,
        ctx.yp,
        tol=ctx.tol_eq,
        tol_eq=ctx.tol_eq,
        name="check_master[equality]",
        conv=ctx.conv(),
    )
    for seed in ctx.seeds:
        rho0, rho1 = ctx.seeded_pair(seed)
        reports += check_master(
            rho0,
            rho1,
            ctx.m,
            ctx.pot,
            ctx.yp,
            tol=ctx.tol,
            tol_eq=ctx.tol_eq,
            name=f"check_master[seed={seed}]",
            conv=ctx.conv(),
        )
    return reports


def _run_general_sobolev(ctx: CheckContext, params: dict) -> list[IneqReport]:
    ref = ctx.reference(with_young=True)
    reports = []
    for seed in ctx.seeds:
        rho = ctx.seeded_density(seed)
        reports += check_general_sobolev(
            rho,
            ctx.m,
            ctx.pot,
            ctx.yp,
            ref_vc=ref,
            tol=ctx.tol,
            tol_eq=ctx.tol_eq,
            name=f"check_general_sobolev[seed={seed}]",
            conv=ctx.conv(),
        )
    return reports


def _run_euclidean_lsi(ctx: CheckContext, params: dict) -> list[IneqReport]:
    reports = []
    lam_eq = float(params.get("equality_lambda", 1.0))
    if ctx.yp.p is not None and ctx.yp.label.startswith("power_pls"):
        extremal = plsi_extremal(ctx.yp.p, lam_eq, ctx.grid)
        reports += check_euclidean_lsi(
            extremal,
            ctx.yp,
            tol=ctx.tol_eq,
            tol_eq=ctx.tol_eq,
            name="check_euclidean_lsi[equality]",
        )
    for seed in ctx.seeds:
        reports += check_euclidean_lsi(
            ctx.seeded_density(seed),
            ctx.yp,
            tol=ctx.tol,
            tol_eq=ctx.tol_eq,
            name=f"check_euclidean_lsi[seed={seed}]",
        )
    return reports


def _run_plsi(ctx: CheckContext, params: dict) -> list[IneqReport]:
    p = float(params.get("p", ctx.yp.p or 2.0))
    reports = []
    extremal = plsi_extremal(p, float(params.get("equality_lambda", 1.0)), ctx.grid)
    f_eq = extremal.values ** (1.0 / p)
    f_eq /= integrate(f_eq**p, ctx.grid) ** (1.0 / p)
    reports += check_plsi(
        f_eq,
        ctx.grid,
        p,
        tol=ctx.tol_eq,
        tol_eq=ctx.tol_eq,
        name="check_plsi[equality]",
    )
    for seed in ctx.seeds:
        f = ctx.seeded_lp_function(seed, p)
        reports += check_plsi(
            f, ctx.grid, p, tol=ctx.tol, tol_eq=ctx.tol_eq, name=f"check_plsi[seed={seed}]"
        )
    return reports


def _run_gn(ctx: CheckContext, params: dict) -> list[IneqReport]:
    p = float(params.get("p", 2.0))
    r = float(params.get("r", 4.0))
    reports = []
    ext = gn_extremal(p, r, ctx.grid)
    reports += check_gagliardo_nirenberg(
        ext.h / integrate(np.abs(ext.h) ** r, ctx.grid) ** (1.0 / r),
        ctx.grid,
        p,
        r,
        tol=ctx.tol_eq,
        tol_eq=ctx.tol_eq,
        name="check_gagliardo_nirenberg[equality]",
    )
    for seed in ctx.seeds:
        f = ctx.seeded_lp_function(seed, r)
        reports += check_gagliardo_nirenberg(
            f,
            ctx.grid,
            p,
            r,
            tol=ctx.tol,
            tol_eq=ctx.tol_eq,
            name=f"check_gagliardo_nirenberg[seed={seed}]",
        )
    return reports


def _run_general_lsi(ctx: CheckContext, params: dict) -> list[IneqReport]:
    sigmas = params.get("sigmas", [0.5, 1.0, 2.0])
    reports = []
    for seed in ctx.seeds:
        rho0, rho1 = ctx.seeded_pair(seed)
        for sigma in sigmas:
            reports += check_general_lsi(
                rho0,
                rho1,
                ctx.m,
                ctx.pot,
                float(sigma),
                tol=ctx.tol,
                tol_eq=ctx.tol_eq,
                name=f"check_general_lsi[seed={seed},sigma={sigma}]",
                conv=ctx.conv(),
            )
    return reports


def _run_hwbi(ctx: CheckContext, params: dict) -> list[IneqReport]:
    reports = []
    for seed in ctx.seeds:
        rho0, rho1 = ctx.seeded_pair(seed)
        for rep in check_hwbi(
            rho0,
            rho1,
            ctx.m,
            ctx.pot,
            tol=ctx.tol,
            tol_eq=ctx.tol_eq,
            name=f"check_hwbi[seed={seed}]",
            conv=ctx.conv(),
        ):
            if rep.name == "check_hwi":
                rep = dataclasses.replace(rep, name=f"check_hwi[seed={seed}]")
            reports.append(rep)
    return reports


def _run_lsi_interaction(ctx: CheckContext, params: dict) -> list[IneqReport]:
    reports = []
    for seed in ctx.seeds:
        rho0, rho1 = ctx.seeded_pair(seed)
        rho1 = recenter_to(rho1, barycenter(rho0))
        reports += check_lsi_interaction(
            rho0,
            rho1,
            ctx.m,
            ctx.pot,
            tol=ctx.tol,
            tol_eq=ctx.tol_eq,
            name=f"check_lsi_interaction[seed={seed}]",
            conv=ctx.conv(),
        )
    return reports


def _run_talagrand(ctx: CheckContext, params: dict) -> list[IneqReport]:
    ref = ctx.reference(with_young=False)
    reports = []
    for seed in ctx.seeds:
        reports += check_talagrand(
            ctx.seeded_density(seed),
            ctx.m,
            ctx.pot,
            ref=ref,
            tol=ctx.tol,
            tol_eq=ctx.tol_eq,
            name=f"check_talagrand[seed={seed}]",
            conv=ctx.conv(),
        )
    return reports


def _run_boltzmann_lsi(ctx: CheckContext, params: dict) -> list[IneqReport]:
    ref = _boltzmann_reference(ctx.pot, ctx.grid)
    sigma = params.get("sigma")
    reports = []
    mshift = float(params.get("equality_shift", 0.5))
    x = ctx.grid.x
    tilt = np.exp(mshift * x - 0.5 * mshift**2)
    tilt /= integrate(tilt * ref.density.values, ctx.grid)
    reports += check_boltzmann_lsi(
        tilt,
        ctx.grid,
        ctx.pot,
        sigma=None,
        ref=ref,
        tol=ctx.tol_eq,
        tol_eq=ctx.tol_eq,
        name="check_boltzmann_lsi[equality]",
    )
    for seed in ctx.seeds:
        f = ctx.seeded_density(seed).values / ref.density.values
        reports += check_boltzmann_lsi(
            f,
            ctx.grid,
            ctx.pot,
            sigma=float(sigma) if sigma is not None else None,
            ref=ref,
            tol=ctx.tol,
            tol_eq=ctx.tol_eq,
            name=f"check_boltzmann_lsi[seed={seed}]",
        )
    return reports


def _run_poincare(ctx: CheckContext, params: dict) -> list[IneqReport]:
    ref = _boltzmann_reference(ctx.pot, ctx.grid)
    reports = []
    for seed in ctx.seeds:
        f = ctx.seeded_density(seed).values
        reports += check_poincare(
            f,
            ctx.grid,
            ctx.pot,
            ref=ref,
            tol=ctx.tol,
            tol_eq=ctx.tol_eq,
            name=f"check_poincare[seed={seed}]",
        )
    return reports


def _run_concentration(ctx: CheckContext, params: dict) -> list[IneqReport]:
    ref = _boltzmann_reference(ctx.pot, ctx.grid)
    interval = params.get("interval", [0.0, float(ctx.grid.b)])
    eps_list = params.get("eps", [1.5, 2.0, 3.0])
    reports = []
    for eps in eps_list:
        reports += check_concentration(
            (float(interval[0]), float(interval[1])),
            float(eps),
            ctx.pot,
            ref=ref,
            tol=ctx.tol,
            tol_eq=ctx.tol_eq,
            name=f"check_concentration[eps={eps}]",
        )
    return reports


def _run_duality(ctx: CheckContext, params: dict) -> list[IneqReport]:
    variant = params.get("variant", "plog")
    p = float(params.get("p", 2.0))
    r = float(params.get("r", 4.0)) if "r" in params else None
    mu = float(params.get("mu", 1.0))
    reports = []
    if variant == "plog":
        q = _conjugate_exponent(p)
        h = np.exp(-(mu**q) * np.abs(ctx.grid.x) ** q / q)
        h /= integrate(h**p, ctx.grid) ** (1.0 / p)
        rho_eq = normalize(h**p, ctx.grid, floor=0.0)
        reports += check_duality(
            rho_eq,
            h,
            "plog",
            p=p,
            mu=mu,
            tol=ctx.tol_eq,
            tol_eq=ctx.tol_eq,
            name="check_duality[equality]",
        )
    elif variant == "gn" and r is not None:
        ext = gn_extremal(p, r, ctx.grid)  # mu = 1 profile
        h = ext.h / integrate(np.abs(ext.h) ** r, ctx.grid) ** (1.0 / r)
        reports += check_duality(
            ext.density,
            h,
            "gn",
            p=p,
            r=r,
            mu=1.0,
            tol=ctx.tol_eq,
            tol_eq=ctx.tol_eq,
            name="check_duality[equality]",
        )
    for seed in ctx.seeds:
        rho = ctx.seeded_density(seed)
        if variant == "plog":
            f = ctx.seeded_lp_function(seed + 500, p)
            reports += check_duality(
                rho,
                f,
                "plog",
                p=p,
                mu=mu,
                tol=ctx.tol,
                tol_eq=ctx.tol_eq,
                name=f"check_duality[seed={seed}]",
            )
        elif variant == "gn":
            f = ctx.seeded_lp_function(seed + 500, r)
            reports += check_duality(
                rho,
                f,
                "gn",
                p=p,
                r=r,
                mu=mu,
                tol=ctx.tol,
                tol_eq=ctx.tol_eq,
                name=f"check_duality[seed={seed}]",
            )
        else:
            f = ctx.seeded_density(seed + 500).values
            reports += check_duality(
                rho,
                f,
                "general",
                m=ctx.m,
                yp=ctx.yp,
                tol=ctx.tol,
                tol_eq=ctx.tol_eq,
                name=f"check_duality[seed={seed}]",
            )
    return reports


def _run_lemma22(ctx: CheckContext, params: dict) -> list[IneqReport]:
    reports = []
    for seed in ctx.seeds:
        rho0, rho1 = ctx.seeded_pair(seed)
        slacks = lemma22_slacks(rho0, rho1, ctx.m, ctx.pot)
        for part, slack in zip(("internal", "potential", "interaction"), slacks):
            reports.append(
                _report(
                    f"check_lemma22[{part},seed={seed}]",
                    0.0,
                    slack,
                    ctx.tol,
                    ctx.tol_eq,
                    (rho0, rho1, part),
                    notes="slack of the energy inequality along optimal transport",
                )
            )
    return reports


def _run_displacement_convexity(ctx: CheckContext, params: dict) -> list[IneqReport]:
    ts = params.get("ts", [0.0, 0.25, 0.5, 0.75, 1.0])
    reports = []
    for seed in ctx.seeds:
        rho0, rho1 = ctx.seeded_pair(seed)
        rep = check_displacement_convexity(rho0, rho1, ctx.m, ts)
        reports.append(
            _report(
                f"check_displacement_convexity[seed={seed}]",
                0.0,
                rep.min_slack,
                1e-5,
                ctx.tol_eq,
                (rho0, rho1, tuple(ts)),
                notes="minimal chord-midpoint slack of the internal energy",
            )
        )
    return reports


@dataclass(frozen=True)
class RegisteredChecker:
    anchor: str
    runner: Callable[[CheckContext, dict], list]


REGISTRY: dict[str, RegisteredChecker] = {
    "check_master": RegisteredChecker(
        "master comparison principle for interacting gases", _run_master
    ),
    "check_general_sobolev": RegisteredChecker(
        "general Sobolev inequality (free energy vs entropy production)",
        _run_general_sobolev,
    ),
    "check_euclidean_lsi": RegisteredChecker(
        "Euclidean log-Sobolev inequality, p-homogeneous conjugate cost",
        _run_euclidean_lsi,
    ),
    "check_plsi": RegisteredChecker(
        "optimal Euclidean p-log-Sobolev inequality with sharp constant", _run_plsi
    ),
    "check_gagliardo_nirenberg": RegisteredChecker(
        "Gagliardo-Nirenberg interpolation inequality", _run_gn
    ),
    "check_general_lsi": RegisteredChecker(
        "general logarithmic Sobolev inequality (quadratic cost)", _run_general_lsi
    ),
    "check_hwbi": RegisteredChecker(
        "HWBI bound: entropy by transport cost, barycentre and information", _run_hwbi
    ),
    "check_lsi_interaction": RegisteredChecker(
        "log-Sobolev inequalities with interaction potentials", _run_lsi_interaction
    ),
    "check_talagrand": RegisteredChecker(
        "generalized Talagrand transport inequality", _run_talagrand
    ),
    "check_boltzmann_lsi": RegisteredChecker(
        "Gross/Bakry-Emery log-Sobolev family for Boltzmann measures",
        _run_boltzmann_lsi,
    ),
    "check_poincare": RegisteredChecker(
        "Poincare spectral-gap inequality", _run_poincare
    ),
    "check_concentration": RegisteredChecker(
        "Gaussian-type concentration of measure", _run_concentration
    ),
    "check_duality": RegisteredChecker(
        "energy vs entropy-production duality", _run_duality
    ),
    "check_lemma22": RegisteredChecker(
        "energy inequalities along optimal transport", _run_lemma22
    ),
    "check_displacement_convexity": RegisteredChecker(
        "displacement convexity of the internal energy", _run_displacement_convexity
    ),
}
