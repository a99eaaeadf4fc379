"""Probability densities on uniform 1D grids.

Everything downstream (energies, transport, flows) is built from nodal
samples on a uniform grid, trapezoid quadrature, and second-order finite
differences.  Using one quadrature everywhere keeps the discrete analogues
of integration by parts accurate to O(h^2), which is what makes equality
cases of the inequalities land at discretization level instead of drifting.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateDensityError,
    DimensionError,
    DomainError,
    NumericError,
)

__all__ = [
    "Grid1D",
    "GridDensity",
    "Quantile",
    "integrate",
    "gradient",
    "normalize",
    "barycenter",
    "quantile",
    "random_smooth_density",
]

MASS_TOL = 1e-10


@dataclass(frozen=True)
class Grid1D:
    """Uniform grid of ``n`` nodes on [a, b] with spacing h = (b-a)/(n-1)."""

    a: float
    b: float
    n: int

    def __post_init__(self):
        if not self.a < self.b:
            raise DomainError(f"need a < b, got [{self.a}, {self.b}]")
        if self.n < 16:
            raise DomainError(f"need n >= 16 nodes, got {self.n}")

    @property
    def h(self) -> float:
        return (self.b - self.a) / (self.n - 1)

    @property
    def x(self) -> np.ndarray:
        xs = np.linspace(self.a, self.b, self.n)
        xs.setflags(write=False)
        return xs

    @property
    def trapezoid_weights(self) -> np.ndarray:
        w = np.full(self.n, self.h)
        w[0] = w[-1] = 0.5 * self.h
        w.setflags(write=False)
        return w

    def refine(self) -> "Grid1D":
        """Grid with doubled resolution (2n-1 nodes, same endpoints)."""
        return Grid1D(self.a, self.b, 2 * self.n - 1)


def _as_grid_array(f, grid: Grid1D) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if f.shape != (grid.n,):
        raise DimensionError(f"expected {grid.n} values, got shape {f.shape}")
    return f


def integrate(f, grid: Grid1D) -> float:
    """Trapezoid-rule integral of nodal values over the grid."""
    f = _as_grid_array(f, grid)
    if not np.all(np.isfinite(f)):
        raise NumericError("non-finite integrand")
    return float(np.trapezoid(f, dx=grid.h))


def gradient(f, grid: Grid1D) -> np.ndarray:
    """Second-order derivative: central stencils inside, one-sided at ends."""
    f = _as_grid_array(f, grid)
    if grid.n < 3:
        raise DimensionError("gradient needs at least 3 nodes")
    return np.gradient(f, grid.h, edge_order=2)


@dataclass(frozen=True)
class GridDensity:
    """Nonnegative, unit-mass nodal samples; ``floor > 0`` certifies min(values) >= floor."""

    grid: Grid1D
    values: np.ndarray
    floor: float = 0.0

    def __post_init__(self):
        vals = _as_grid_array(self.values, self.grid)
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        if self.floor < 0:
            raise DomainError("floor must be >= 0")
        if np.any(vals < 0):
            raise DomainError("density values must be nonnegative")
        if self.floor > 0 and vals.min() < self.floor:
            raise DomainError(
                f"min value {vals.min():.3e} below declared floor {self.floor:.3e}"
            )
        mass = integrate(vals, self.grid)
        if abs(mass - 1.0) > MASS_TOL:
            raise DegenerateDensityError(f"mass {mass!r} not within {MASS_TOL} of 1")

    @property
    def x(self) -> np.ndarray:
        return self.grid.x

    def mass(self) -> float:
        return integrate(self.values, self.grid)

    def cdf_values(self) -> np.ndarray:
        """Trapezoid cumulative distribution at the nodes, pinned to [0, 1]."""
        v = self.values
        h = self.grid.h
        c = np.concatenate(([0.0], np.cumsum(0.5 * h * (v[1:] + v[:-1]))))
        c /= c[-1]
        c[-1] = 1.0
        return c

    def shifted(self, cells: int) -> "GridDensity":
        """Translate by an integer number of cells (values rolled, ends padded)."""
        v = np.roll(self.values, cells)
        if cells > 0:
            v[:cells] = self.values[0]
        elif cells < 0:
            v[cells:] = self.values[-1]
        return normalize(v, self.grid, self.floor)

    # -- serialization -----------------------------------------------------

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["x", "rho"])
        for xi, vi in zip(self.grid.x, self.values):
            w.writerow([repr(float(xi)), repr(float(vi))])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str, floor: float = 0.0) -> "GridDensity":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0] != ["x", "rho"]:
            raise DomainError('CSV must start with header "x,rho"')
        xs = np.array([float(r[0]) for r in rows[1:]])
        vs = np.array([float(r[1]) for r in rows[1:]])
        grid = Grid1D(float(xs[0]), float(xs[-1]), len(xs))
        return cls(grid, vs, floor)

    def to_json(self) -> str:
        return json.dumps(
            {
                "a": self.grid.a,
                "b": self.grid.b,
                "n": self.grid.n,
                "values": [float(v) for v in self.values],
            }
        )

    @classmethod
    def from_json(cls, text: str, floor: float = 0.0) -> "GridDensity":
        obj = json.loads(text)
        grid = Grid1D(obj["a"], obj["b"], obj["n"])
        return cls(grid, np.array(obj["values"], dtype=float), floor)


def normalize(f, grid: Grid1D, floor: float = 0.0) -> GridDensity:
    """Clip at ``floor``, rescale to unit mass; iterate until both hold exactly.

    A single clip-then-rescale can leave min(values) a hair under the floor;
    the loop converges geometrically (clipped mass is tiny) and terminates
    once the rescaling factor is 1.0 to machine precision.
    """
    f = _as_grid_array(f, grid)
    if not np.all(np.isfinite(f)):
        raise NumericError("non-finite values")
    if floor == 0.0 and np.any(f < 0):
        raise DomainError("negative values with floor=0")
    v = np.maximum(f, floor)
    for _ in range(64):
        mass = integrate(v, grid)
        if mass <= 0:
            raise DegenerateDensityError("cannot normalize: total mass is zero")
        v = v / mass
        if floor > 0:
            v = np.maximum(v, floor)
        if abs(integrate(v, grid) - 1.0) <= 1e-14:
            break
    return GridDensity(grid, v, floor)


def barycenter(rho: GridDensity) -> float:
    """Centre of mass, the first moment of the density."""
    return integrate(rho.grid.x * rho.values, rho.grid)


class Quantile:
    """Piecewise-linear inverse of the trapezoid CDF of a density.

    Realizes the monotone rearrangement: in 1D the optimal quadratic-cost
    coupling of two densities is Q1(C0(x)).
    """

    def __init__(self, density: GridDensity):
        self.density = density
        self.cdf = density.cdf_values()

    def __call__(self, u) -> np.ndarray:
        u = np.asarray(u, dtype=float)
        if np.any(u < 0) or np.any(u > 1):
            raise DomainError("quantile argument must lie in [0, 1]")
        xs = self.density.grid.x
        c = self.cdf
        # first node with cdf >= u; for u>0 this makes the denominator positive
        j = np.searchsorted(c, u, side="left")
        j = np.clip(j, 1, len(c) - 1)
        denom = c[j] - c[j - 1]
        num = u - c[j - 1]
        with np.errstate(invalid="ignore", divide="ignore"):
            t = np.where(denom > 0, num / np.where(denom > 0, denom, 1.0), 1.0)
        out = xs[j - 1] + t * (xs[j] - xs[j - 1])
        # u == 0 maps to the left edge of the support, not the grid edge
        if np.any(u == 0):
            first_pos = int(np.argmax(c > 0))
            out = np.where(u == 0, xs[max(first_pos - 1, 0)], out)
        return out if out.shape else float(out)


def quantile(rho: GridDensity, u) -> float:
    """Quantile of ``rho`` at level ``u`` in [0, 1]."""
    q = Quantile(rho)(u)
    return float(q) if np.ndim(q) == 0 else q


def random_smooth_density(seed: int, grid: Grid1D, floor: float) -> GridDensity:
    """Seeded smooth density, bounded below by ``floor``, negligible at the edges.

    exp of a low-order trigonometric polynomial, multiplied by a steep smooth
    wall so the support is effectively padded away from the boundary.  The
    construction keeps log-density Lipschitz on the grid, which is the
    discrete form of the Lipschitz-pressure hypothesis the entropy-production
    integrals need.
    """
    if floor <= 0:
        raise DomainError("random_smooth_density requires floor > 0")
    rng = np.random.default_rng(seed)
    s = (grid.x - grid.a) / (grid.b - grid.a)  # in [0, 1]
    g = np.zeros(grid.n)
    for k in range(1, 5):
        amp = 1.4 / k
        g += amp * rng.uniform(-1.0, 1.0) * np.cos(2 * np.pi * k * s)
        g += amp * rng.uniform(-1.0, 1.0) * np.sin(2 * np.pi * k * s)
    mid = 0.5 * (grid.a + grid.b)
    wall = ((grid.x - mid) / (0.40 * (grid.b - grid.a))) ** 16
    return normalize(np.exp(g - wall), grid, floor)
