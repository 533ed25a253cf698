"""Finite elasticity with the logarithmic Biot-stress law.

Library layout:

- :mod:`logstrain.tensors` -- 3x3 symmetric eigendecomposition and matrix
  functions (log, exp, sqrt, real powers), tensor operators.
- :mod:`logstrain.kinematics` -- polar decomposition, pure shear and simple
  glide, planes of no distortion.
- :mod:`logstrain.moduli` -- consistent elastic constants.
- :mod:`logstrain.stresses` -- stress measures and conversions.
- :mod:`logstrain.constitutive` -- the logarithmic law, its inverse, the
  Hencky and finite-Hooke relatives, energies, closed forms.
- :mod:`logstrain.shear_statics` -- Mohr circle, pond stresses, traction
  decomposition, failure criteria.
- :mod:`logstrain.decomposition` -- additive stress / multiplicative
  stretch decompositions and the per-force strain tables.
- :mod:`logstrain.verify` -- executable axiom and inequality checks.
- :mod:`logstrain.fitting` -- data ingestion and modulus fits.
- :mod:`logstrain.cli` -- the ``logstrain`` command.
"""

from .constitutive import (becker_biot, becker_cauchy, becker_energy_nu0,
                           becker_inverse, becker_kirchhoff, becker_pk1,
                           becker_pk2, hencky_cauchy, hencky_energy,
                           hencky_kirchhoff, hooke_biot, hooke_cauchy,
                           incompressible_uniaxial_hyper,
                           incompressible_uniaxial_limit, linearized_law,
                           uniaxial_response, LawId)
from .errors import (DegenerateData, InvalidModuli, LambdaNotZero,
                     LogstrainError, NonInvertible, NoSuchPlane,
                     NotPositiveDefinite)
from .kinematics import (PolarFactors, PondPair, glide_principal_stretches,
                         planes_of_no_distortion, polar_decompose,
                         pure_shear_F, simple_glide_F)
from .moduli import Moduli
from .shear_statics import (FailureTriple, MohrState, TractionDecomposition,
                            cauchy_quadrics, failure_criteria, mohr_circle,
                            pond_stress_components, traction_on_line)
from .stresses import StressState, stress_convert
from .tensors import (Spectral3, cofactor, dev3, eig_sym, fro_norm, inner,
                      mat_exp, mat_log, mat_pow, mat_sqrt, tr)

__version__ = "0.1.0"
