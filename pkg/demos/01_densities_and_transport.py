"""Grid densities and one-dimensional optimal transport.

Build probability densities on a uniform grid, couple them through the
monotone rearrangement, and watch mass interpolate along displacement
geodesics.  Everything downstream (energies, inequalities, flows) is built
on these primitives.
"""

import numpy as np

from wassineq import (
    Grid1D,
    barycenter,
    displacement_interpolate,
    discrete_w2_oracle,
    integrate,
    normalize,
    optimal_map,
    quantile,
    random_smooth_density,
    w2_distance,
    Quantile,
)

# ---------------------------------------------------------------------------
# a grid, two Gaussians, and the distance between them
# ---------------------------------------------------------------------------

grid = Grid1D(-10.0, 10.0, 2049)
rho0 = normalize(np.exp(-grid.x**2 / 2), grid)
rho1 = normalize(np.exp(-((grid.x - 2.0) ** 2) / 2), grid)

print("mass(rho0) =", rho0.mass())
print("barycentres:", barycenter(rho0), barycenter(rho1))
print("W2 between unit Gaussians two apart:", w2_distance(rho0, rho1))
print("median of rho1:", quantile(rho1, 0.5))

# ---------------------------------------------------------------------------
# the optimal map is a translation here; halfway along the geodesic the
# density is the Gaussian centred at 1
# ---------------------------------------------------------------------------

plan = optimal_map(rho0, rho1)
core = np.abs(grid.x) < 5
print("max |T(x) - (x + 2)| on the core:",
      np.abs(plan.map_values - (grid.x + 2.0))[core].max())

halfway = displacement_interpolate(plan, 0.5)
target = normalize(np.exp(-((grid.x - 1.0) ** 2) / 2), grid)
print("L1 gap between the midpoint and N(1,1):",
      integrate(np.abs(halfway.values - target.values), grid))

# ---------------------------------------------------------------------------
# a seeded random density, and a small-instance discrete cross-check
# ---------------------------------------------------------------------------

bumpy = random_smooth_density(seed=7, grid=grid, floor=1e-8)
print("seeded density: min =", bumpy.values.min(), " b =", barycenter(bumpy))

u = (np.arange(64) + 0.5) / 64
atoms0 = np.asarray(Quantile(rho0)(u))
atoms1 = np.asarray(Quantile(bumpy)(u))
w = np.full(64, 1 / 64)
print("grid W2 vs 64-atom oracle:",
      w2_distance(rho0, bumpy), "vs", discrete_w2_oracle(atoms0, w, atoms1, w))
