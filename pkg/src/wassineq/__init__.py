"""wassineq: numerical verification of mass-transport inequalities.

Grid densities, free-energy functionals, 1D optimal transport, stationary
reference profiles, an inequality-checker registry (log-Sobolev, Talagrand,
HWBI, Sobolev/Gagliardo-Nirenberg, concentration, duality), and a
finite-volume Fokker-Planck flow with decay-rate diagnostics.
"""

from .errors import (
    ConfigError,
    ConfinementError,
    ConvergenceError,
    DegenerateDensityError,
    DimensionError,
    DomainError,
    HypothesisError,
    MonotonicityError,
    NumericError,
    PositivityError,
    StabilityError,
    WassineqError,
    WindowError,
)
from .measures import (
    Grid1D,
    GridDensity,
    Quantile,
    barycenter,
    gradient,
    integrate,
    normalize,
    quantile,
    random_smooth_density,
)
from .models import (
    EntropyModel,
    PotentialPair,
    YoungPair,
    admissibility_check,
    make_young,
    modulus_check,
    numeric_conjugate,
    parse_expression,
)
from .functionals import (
    ConvolutionKernel,
    EnergyBreakdown,
    entropy_production_I2,
    entropy_production_Icstar,
    free_energy,
    interaction_energy,
    internal_energy,
    potential_energy,
    relative_energy,
)
from .transport import (
    TransportPlan1D,
    check_displacement_convexity,
    discrete_w2_oracle,
    displacement_interpolate,
    lemma22_slacks,
    optimal_map,
    w2_distance,
)
from .stationary import (
    GNExtremal,
    ReferenceDensity,
    gn_extremal,
    plsi_extremal,
    sigma_c,
    sobolev_constants,
    solve_reference,
)
from .inequalities import (
    REGISTRY,
    CheckContext,
    IneqReport,
    check_boltzmann_lsi,
    check_concentration,
    check_duality,
    check_euclidean_lsi,
    check_gagliardo_nirenberg,
    check_general_lsi,
    check_general_sobolev,
    check_hwbi,
    check_lsi_interaction,
    check_master,
    check_plsi,
    check_poincare,
    check_talagrand,
    plsi_constant,
)
from .flow import (
    FlowTrace,
    check_dissipation,
    dt_max,
    estimate_rate,
    evolve,
    step,
)

__version__ = "0.1.0"
