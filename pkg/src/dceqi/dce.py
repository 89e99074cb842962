"""Physical model of photon-pair radiation from a modulated waveguide boundary.

A SQUID-terminated superconducting waveguide whose effective electrical
length is driven sinusoidally (amplitude eps, angular frequency w_d) emits
correlated photon pairs into the mode pair w+- = w_d/2 +- dw.  To leading
order in the modulation, the input-output map on quadratures is linear and
the outgoing two-mode state is Gaussian, so the whole model reduces to:

  * the dimensionless pair-generation strength  f = eps L_eff sqrt(w+ w-)/v,
  * the thermal occupations of the two ingoing modes, and
  * a 4x4 scattering transform applied to the ingoing covariance matrix.

Conventions: covariance matrices produced here use the half-vacuum
normalization (vacuum diagonal 1/2) and mode ordering (q-, p-, q+, p+).
"""

import math
from dataclasses import dataclass

import numpy as np

from .gaussian import SIGMA_X, Convention, CovarianceMatrix

# CODATA 2018 / exact SI values, compiled in for reproducibility.
HBAR = 1.054571817e-34  # J s
K_B = 1.380649e-23  # J/K

# Above this value of f the leading-order treatment starts to degrade;
# callers get a warning flag rather than an error.
PERTURBATIVE_LIMIT = 0.1


class NonPerturbativeError(ValueError):
    """The pair-generation parameter f reached or exceeded 1."""


@dataclass(frozen=True)
class DceParams:
    """Experimental parameters of the driven-waveguide setup.

    speed               speed of light in the waveguide, m/s
    drive_angular_freq  drive angular frequency w_d, rad/s
    effective_length    static effective length of the terminating SQUID, m
    amplitude           normalized drive amplitude eps, in [0, 1)
    detuning            offset dw of the analysed mode pair from w_d/2, rad/s
    temperature         waveguide temperature, K
    """

    speed: float
    drive_angular_freq: float
    effective_length: float
    amplitude: float
    detuning: float = 0.0
    temperature: float = 0.0

    def __post_init__(self):
        if not self.speed > 0:
            raise ValueError("speed must be positive")
        if not self.drive_angular_freq > 0:
            raise ValueError("drive_angular_freq must be positive")
        if not self.effective_length > 0:
            raise ValueError("effective_length must be positive")
        if not 0.0 <= self.amplitude < 1.0:
            raise ValueError("amplitude must lie in [0, 1)")
        if not abs(self.detuning) < self.drive_angular_freq / 2.0:
            raise ValueError("detuning magnitude must be below drive_angular_freq/2")
        if self.temperature < 0:
            raise ValueError("temperature must be nonnegative")
        f = small_parameter(self)
        if f >= 1.0:
            raise NonPerturbativeError(f"derived pair-generation parameter f = {f:.4g} >= 1")

    @property
    def omega_plus(self) -> float:
        return self.drive_angular_freq / 2.0 + self.detuning

    @property
    def omega_minus(self) -> float:
        return self.drive_angular_freq / 2.0 - self.detuning

    @property
    def beyond_perturbative(self) -> bool:
        """True when f exceeds the soft perturbative-regime limit."""
        return small_parameter(self) > PERTURBATIVE_LIMIT


@dataclass(frozen=True)
class ThermalOccupations:
    """Mean thermal photon numbers of the two ingoing modes."""

    n_minus: float
    n_plus: float

    def __post_init__(self):
        for name, n in (("n_minus", self.n_minus), ("n_plus", self.n_plus)):
            if not math.isfinite(n) or n < 0:
                raise ValueError(f"{name} must be finite and nonnegative")

    @property
    def mean(self) -> float:
        return 0.5 * (self.n_minus + self.n_plus)

    @property
    def quasi_vacuum(self) -> bool:
        """True in the intended weakly thermal regime (both occupations < 1)."""
        return self.n_minus < 1.0 and self.n_plus < 1.0


def small_parameter(p: DceParams) -> float:
    """Pair-generation strength f = eps L_eff sqrt(w+ w-) / v.

    At zero detuning this reduces to eps L_eff w_d / (2 v), i.e. half the
    ratio of the boundary's effective velocity to the waveguide speed.
    """
    f = p.amplitude * p.effective_length * math.sqrt(p.omega_plus * p.omega_minus) / p.speed
    if f >= 1.0:
        raise NonPerturbativeError(f"pair-generation parameter f = {f:.4g} >= 1")
    return f


def amplitude_for_small_parameter(p: DceParams, f: float) -> float:
    """Drive amplitude that yields the given f at p's frequencies and geometry."""
    if f < 0:
        raise ValueError("f must be nonnegative")
    return f * p.speed / (p.effective_length * math.sqrt(p.omega_plus * p.omega_minus))


def thermal_occupation(angular_freq: float, temperature: float) -> float:
    """Bose-Einstein occupation n = 1/(exp(hbar w / kB T) - 1).

    Returns exactly 0 at zero temperature.
    """
    if angular_freq <= 0:
        raise ValueError("angular_freq must be positive")
    if temperature < 0:
        raise ValueError("temperature must be nonnegative")
    if temperature == 0.0:
        return 0.0
    x = HBAR * angular_freq / (K_B * temperature)
    if x > 700.0:  # exp would overflow; occupation is indistinguishable from 0
        return 0.0
    return 1.0 / math.expm1(x)


def temperature_for_occupation(angular_freq: float, n: float) -> float:
    """Temperature at which a mode of the given frequency holds n thermal photons."""
    if angular_freq <= 0:
        raise ValueError("angular_freq must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0.0:
        return 0.0
    return HBAR * angular_freq / (K_B * math.log1p(1.0 / n))


def occupations(p: DceParams) -> ThermalOccupations:
    """Thermal occupations of the two modes at p's temperature."""
    return ThermalOccupations(
        n_minus=thermal_occupation(p.omega_minus, p.temperature),
        n_plus=thermal_occupation(p.omega_plus, p.temperature),
    )


def input_cm(occ: ThermalOccupations) -> CovarianceMatrix:
    """Covariance matrix of the two ingoing thermal modes (half vacuum)."""
    diag = np.array(
        [
            1.0 + 2.0 * occ.n_minus,
            1.0 + 2.0 * occ.n_minus,
            1.0 + 2.0 * occ.n_plus,
            1.0 + 2.0 * occ.n_plus,
        ]
    )
    return CovarianceMatrix(0.5 * np.diag(diag), Convention.HALF_VACUUM)


def scattering_matrix(f: float) -> np.ndarray:
    """Linear quadrature map of the boundary modulation.

    Implements q+- = -(q0+- + f p0-+), p+- = -(p0+- + f q0-+) on the ordering
    (q-, p-, q+, p+); the output covariance matrix is S V0 S^T.
    """
    _validate_f(f)
    return -np.array(
        [
            [1.0, 0.0, 0.0, f],
            [0.0, 1.0, f, 0.0],
            [0.0, f, 1.0, 0.0],
            [f, 0.0, 0.0, 1.0],
        ]
    )


def output_cm(f: float, occ: ThermalOccupations) -> CovarianceMatrix:
    """Covariance matrix of the outgoing mode pair (half vacuum).

    Closed form of the scattering congruence S V0 S^T: diagonal blocks
    (1 + 2 n_-+ + f^2 (1 + 2 n_+-)) I / 2 and cross block
    f (1 + n_+ + n_-) sigma_x.
    """
    _validate_f(f)
    a = 1.0 + 2.0 * occ.n_minus + f * f * (1.0 + 2.0 * occ.n_plus)
    b = 1.0 + 2.0 * occ.n_plus + f * f * (1.0 + 2.0 * occ.n_minus)
    c = 2.0 * f * (1.0 + occ.n_plus + occ.n_minus)
    m = np.zeros((4, 4))
    m[:2, :2] = a * np.eye(2)
    m[2:, 2:] = b * np.eye(2)
    m[:2, 2:] = c * SIGMA_X
    m[2:, :2] = c * SIGMA_X
    return CovarianceMatrix(0.5 * m, Convention.HALF_VACUUM)


def exact_tms_cm(r: float, occ: ThermalOccupations) -> CovarianceMatrix:
    """Two-mode squeezed thermal reference state (half vacuum).

    Diagonal blocks (1 + 2 n_+-) cosh(2r) I / 2 and cross block
    (1 + n_+ + n_-) sinh(2r) sigma_x / 2.  Unlike the perturbative output
    state this family satisfies the uncertainty relation exactly, which
    makes it a convenient fixture for exercising exact-formula code paths.
    """
    if r < 0:
        raise ValueError("squeezing parameter r must be nonnegative")
    ch = math.cosh(2.0 * r)
    sh = math.sinh(2.0 * r)
    m = np.zeros((4, 4))
    m[:2, :2] = (1.0 + 2.0 * occ.n_minus) * ch * np.eye(2)
    m[2:, 2:] = (1.0 + 2.0 * occ.n_plus) * ch * np.eye(2)
    m[:2, 2:] = (1.0 + occ.n_plus + occ.n_minus) * sh * SIGMA_X
    m[2:, :2] = (1.0 + occ.n_plus + occ.n_minus) * sh * SIGMA_X
    return CovarianceMatrix(0.5 * m, Convention.HALF_VACUUM)


def _validate_f(f: float) -> None:
    if f < 0:
        raise ValueError("f must be nonnegative")
    if f >= 1.0:
        raise NonPerturbativeError(f"f = {f:.4g} >= 1")
