"""Toric classification and FM/AFM duality of two-mode magnon Hamiltonians."""

from .errors import (ConvergenceError, DegenerateTorusError, DimensionError, DomainError,
                     InfeasibleDualError, InstabilityError, MagnonTorusError, OutputError,
                     SizeError, ValidationError)
from .expansion import EigenstateExpansion, entanglement_entropy
from .lattice import LatticeSpec, bz_path, coordination_number, gamma_k, preset
from .magnon_model import (CouplingSet, GaugeFixedParams, MagnonParams, Regime,
                           build_magnon_params, canonical_params, gauge_fix)
from .splitting import (SplittingSolution, solve_splitting, splitting_angle,
                        splitting_dispersions, splitting_eigenstate, splitting_entropy)
from .squeezing import (RecursionTable, SqueezingSolution, recursion_q, solve_squeezing,
                        squeezing_dispersions, squeezing_eigenstate, squeezing_entropy,
                        squeezing_parameter, vacuum_entropy)
from .toric_geometry import (CurvatureInvariants, ToricClass, classify, curvature, dual_of,
                             orbit_point, same_class)

__version__ = "0.1.0"
