"""Recurrences, continued fractions, spectral measures and asymptotic zero
distributions for generalized Hermite, generalized ultraspherical and sieved
ultraspherical polynomials."""

from .asymptotics import (CDFReport, EmpiricalCDF, HermiteLimit, LimitDensity,
                          SupportRegion, compare, density_hermite,
                          density_sieved, discrete_part, empirical_cdf,
                          general_continuous_cdf, general_density,
                          limit_cdf, limit_cdf_grid, linear_schedule)
from .cfrac import (BranchedSqrt, JFraction, branched_sqrt, eval_terminated,
                    kappa_mu, phi_star, reverse, sieve_contract)
from .errors import (DomainError, NumericalError, OnCutError, PatternError,
                     PoleError)
from .polycore import (ChainSequence, CoefficientSequence, FamilySpec,
                       degree_dependent_coeffs, hermite_coeffs, sieved_chain,
                       sieved_coeffs, sieved_ultraspherical_An,
                       ultraspherical_chain, ultraspherical_coeffs)
from .specfun import (WeightFunction, adaptive_integrate, chebyshev_T,
                      chebyshev_U, jacobi_P, tk_zeros, uk1_zeros, weight_eval,
                      weight_for)
from .spectral import (DiscreteMeasure, JacobiMatrix, MassGroup, MassPattern,
                       PatternReport, check_pattern, pattern_catalog,
                       residue_masses, zeros_and_masses, zeros_only)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
