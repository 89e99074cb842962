"""Gaussian quantum correlations of dynamical-Casimir-effect radiation.

Models the two-mode microwave state radiated by a SQUID-terminated
superconducting waveguide under sinusoidal boundary modulation, and
quantifies its EPR steering, interferometric power, and entanglement in
both exact and leading-order perturbative form.
"""

from .correlations import (
    CorrelationReport,
    DegeneratePureStateError,
    NonPositiveDeterminantError,
    ReportFlag,
    UnphysicalStateError,
    critical_temperature,
    full_report,
    ip_exact,
    ip_perturbative,
    report_from_state,
    steering_exact,
    steering_onset_amplitude,
    steering_perturbative,
)
from .dce import (
    DceParams,
    NonPerturbativeError,
    ThermalOccupations,
    amplitude_for_small_parameter,
    exact_tms_cm,
    input_cm,
    occupations,
    output_cm,
    scattering_matrix,
    small_parameter,
    temperature_for_occupation,
    thermal_occupation,
)
from .gaussian import (
    ComplexSpectrumError,
    Convention,
    CovarianceMatrix,
    Physicality,
    SymplecticInvariants,
    SymplecticSpectrum,
    check_physicality,
    invariants,
    log_negativity,
    rescale_convention,
    symplectic_spectrum,
    vacuum_cm,
)

__version__ = "0.1.0"

__all__ = [
    "ComplexSpectrumError",
    "Convention",
    "CorrelationReport",
    "CovarianceMatrix",
    "DceParams",
    "DegeneratePureStateError",
    "NonPerturbativeError",
    "NonPositiveDeterminantError",
    "Physicality",
    "ReportFlag",
    "SymplecticInvariants",
    "SymplecticSpectrum",
    "ThermalOccupations",
    "UnphysicalStateError",
    "amplitude_for_small_parameter",
    "check_physicality",
    "critical_temperature",
    "exact_tms_cm",
    "full_report",
    "input_cm",
    "invariants",
    "ip_exact",
    "ip_perturbative",
    "log_negativity",
    "occupations",
    "output_cm",
    "report_from_state",
    "rescale_convention",
    "scattering_matrix",
    "small_parameter",
    "steering_exact",
    "steering_onset_amplitude",
    "steering_perturbative",
    "symplectic_spectrum",
    "temperature_for_occupation",
    "thermal_occupation",
    "vacuum_cm",
]
