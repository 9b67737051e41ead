"""Finite-mode laboratory for gauge transformations of massless Dirac
fermions on a circle: the one-particle current is gauge invariant, while the
second-quantized current operator picks up a computable c-number anomaly.
"""

from .lattice import Mode, MomentumLattice, make_lattice
from .trigpoly import (TrigPolynomial, integrate_product,
                       periodic_fourier_coefficients, trig_derivative)
from .spinor import SpinorState, free_mode, from_coefficients, mode_overlap
from .blockop import BlockOperator, identity_operator, multiplication_operator
from .evolution import (CurrentProfile, GaugeFunction, PotentialPair,
                        apply_gauge_solution, current_density, dirac_residual,
                        evolve_free, gauge_invariance_report,
                        solve_characteristics)
from .anomaly import (AnomalyReport, GaugeUnitary, ProjectorPair,
                      anomaly_closed_form, anomaly_delta, appendix_double_sum,
                      build_projectors, gauge_unitary, hs_offdiagonal,
                      minimum_cutoff, transformed_projectors)
from .fock import (FockSpace, IdentityResidual, LiftedUnitary, build_fock,
                   charge_operator, conjugation_identity_check,
                   field_transformation_residual, finite_delta, lift_unitary,
                   mode_window, restrict_operator)

__version__ = "0.1.0"

__all__ = [
    "Mode", "MomentumLattice", "make_lattice",
    "TrigPolynomial", "integrate_product", "periodic_fourier_coefficients",
    "trig_derivative",
    "SpinorState", "free_mode", "from_coefficients", "mode_overlap",
    "BlockOperator", "identity_operator", "multiplication_operator",
    "CurrentProfile", "GaugeFunction", "PotentialPair",
    "apply_gauge_solution", "current_density", "dirac_residual",
    "evolve_free", "gauge_invariance_report", "solve_characteristics",
    "AnomalyReport", "GaugeUnitary", "ProjectorPair", "anomaly_closed_form",
    "anomaly_delta", "appendix_double_sum", "build_projectors",
    "gauge_unitary", "hs_offdiagonal", "minimum_cutoff",
    "transformed_projectors",
    "FockSpace", "IdentityResidual", "LiftedUnitary", "build_fock",
    "charge_operator", "conjugation_identity_check",
    "field_transformation_residual", "finite_delta", "lift_unitary",
    "mode_window", "restrict_operator",
]
