"""Bound states and continuous-variable separability of two Coulomb-bound charged scalars."""

from .criteria import (
    CriterionReport,
    Verdict,
    VerdictValue,
    classify_both,
    classify_state,
    criterion_nonrelativistic,
    criterion_reduced,
    criterion_relativistic_asymptotic,
    total_variance,
    y_general,
)
from .moments import ClosedFormMoments, CriterionCoefficients, closed_form_moments, criterion_coefficients
from .specfun import DomainError
from .spectrum import CriticalCouplingError, SpectralParams, StateLabel, SystemConfig, binding_energy, bound_mass
from .wavefunction import Mode, RadialMoments, RadialState, build_state, moments_oracle

__version__ = "0.1.0"
