"""fermat_lab: reduction types of Y^p = X^s(1-X) via Fermat quotients.

Classifier, exact censuses by three algorithms, orbit structure under
s -> -1-s and s -> 1/s, a quasi-Monte Carlo sampler driven by the unit
equation r*v - l*u = 1, and statistical summaries of census sweeps.
"""

from .counting import (CountRecord, count, count_orbitwise, count_streaming,
                       count_table, read_csv, wieferich_scan, write_csv)
from .modmath import (is_prime, inv_mod, jacobi, legendre, mul_mod, pow_mod,
                      primes_in_range, roots_of_unity3, solve_unit_equation)
from .orbits import (Orbit, OrbitDecomposition, apply_F, apply_G, decompose,
                     expected_orbit_count, orbit_of)
from .quotient import (QuotientTable, build_table, fermat_quotient,
                       quotient_of_rational, shift_identity)
from .sampler import (Sample, SampleBatch, SamplerParams, check_distinctness,
                      default_params, draw_sample, run_batch, star_discrepancy)
from .stats import (MomentsReport, PoissonReport, moments, normalize_n1,
                    n0_growth_diagnostic, poisson_prediction, poisson_table)
from .sweep import Checkpoint, SweepConfig, run_sweep
from .theta import (ReductionType, reduction_type, theta, theta_direct,
                    theta_extended, theta_oracle)

__version__ = "0.1.0"

__all__ = [
    "CountRecord", "count", "count_orbitwise", "count_streaming",
    "count_table", "read_csv", "wieferich_scan", "write_csv",
    "is_prime", "inv_mod", "jacobi", "legendre", "mul_mod", "pow_mod",
    "primes_in_range", "roots_of_unity3", "solve_unit_equation",
    "Orbit", "OrbitDecomposition", "apply_F", "apply_G", "decompose",
    "expected_orbit_count", "orbit_of",
    "QuotientTable", "build_table", "fermat_quotient",
    "quotient_of_rational", "shift_identity",
    "Sample", "SampleBatch", "SamplerParams", "check_distinctness",
    "default_params", "draw_sample", "run_batch", "star_discrepancy",
    "MomentsReport", "PoissonReport", "moments", "normalize_n1",
    "n0_growth_diagnostic", "poisson_prediction", "poisson_table",
    "Checkpoint", "SweepConfig", "run_sweep",
    "ReductionType", "reduction_type", "theta", "theta_direct",
    "theta_extended", "theta_oracle",
]
