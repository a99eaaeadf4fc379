"""Free energies and entropy production.

The total free energy of a density splits into internal, potential and
interaction parts; its dissipation along the associated gradient flow is
the entropy production I2.  Against a general Young cost the production
comes in a pair (Iscr, Ibig) with Iscr <= Ibig, which collapse to I2/2 and
I2 for the quadratic cost.
"""

import numpy as np

from wassineq import (
    EntropyModel,
    Grid1D,
    PotentialPair,
    entropy_production_I2,
    entropy_production_Icstar,
    free_energy,
    make_young,
    normalize,
    random_smooth_density,
    solve_reference,
)

grid = Grid1D(-10.0, 10.0, 2049)
boltzmann = EntropyModel.boltzmann()
pot = PotentialPair(V=lambda x: 0.5 * x**2, lam=1.0,
                    W=lambda z: 0.25 * z**2, nu=0.5)

rho = random_smooth_density(seed=3, grid=grid, floor=1e-8)
breakdown = free_energy(rho, boltzmann, pot)
print("internal   :", breakdown.internal)
print("potential  :", breakdown.potential)
print("interaction:", breakdown.interaction)
print("total      :", breakdown.total)

# the stationary state has (numerically) zero entropy production
ref = solve_reference(boltzmann, pot, None, grid)
print("I2 at the stationary state:", entropy_production_I2(ref.density, boltzmann, pot))
print("I2 at the seeded density  :", entropy_production_I2(rho, boltzmann, pot))

# quadratic Young cost: Ibig = I2 and Iscr = I2/2 exactly at quadrature level
quad_pair = make_young("quadratic", sigma=1.0)
iscr, ibig = entropy_production_Icstar(rho, boltzmann, pot, quad_pair)
i2 = entropy_production_I2(rho, boltzmann, pot)
print("quadratic cost: I2 =", i2, " Ibig =", ibig, " 2*Iscr =", 2 * iscr)

# a non-quadratic cost keeps the one-sided ordering
cubic_pair = make_young("power_pls", p=3.0)
iscr3, ibig3 = entropy_production_Icstar(rho, boltzmann, pot, cubic_pair)
print("cubic-conjugate cost: Iscr =", iscr3, "<= Ibig =", ibig3)
