"""Linear-algebra layer for two-mode Gaussian covariance matrices.

A zero-mean two-mode Gaussian state is fully described by the 4x4 symmetric
matrix of its symmetrized quadrature covariances, with mode ordering
(q-, p-, q+, p+).  Two vacuum normalizations are in common use: vacuum
variance 1/2 ("half vacuum") and vacuum variance 1 ("unit vacuum").  Every
matrix here carries its normalization tag explicitly; nothing in this module
assumes a default convention.

All functions are pure and operate on immutable values, so they are safe to
call concurrently.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])

# Symplectic form for the (q-, p-, q+, p+) ordering.
OMEGA = np.array(
    [
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0, 0.0],
    ]
)

# Radicands in the symplectic-eigenvalue formula may dip slightly below zero
# for exactly degenerate spectra; anything beyond this is a malformed matrix.
RADICAND_TOL = 1e-9

_SYMMETRY_RTOL = 1e-12
_EPS = 2.220446049250313e-16  # double-precision machine epsilon


class Convention(enum.Enum):
    """Vacuum normalization of a covariance matrix."""

    HALF_VACUUM = "half"  # vacuum state has diagonal 1/2
    UNIT_VACUUM = "unit"  # vacuum state has diagonal 1

    @property
    def vacuum_eigenvalue(self) -> float:
        return 0.5 if self is Convention.HALF_VACUUM else 1.0


class ComplexSpectrumError(ValueError):
    """The symplectic spectrum is not real: the matrix is malformed."""


@dataclass(frozen=True, eq=False)
class CovarianceMatrix:
    """4x4 real symmetric covariance matrix plus its normalization tag.

    The entries are validated on construction (symmetry to 1e-12 relative,
    strictly positive diagonal) and stored as a read-only array.
    """

    entries: np.ndarray
    convention: Convention

    def __post_init__(self):
        m = np.array(self.entries, dtype=float)
        if m.shape != (4, 4):
            raise ValueError(f"covariance matrix must be 4x4, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise ValueError("covariance matrix entries must be finite")
        scale = max(1.0, float(np.max(np.abs(m))))
        if float(np.max(np.abs(m - m.T))) > _SYMMETRY_RTOL * scale:
            raise ValueError("covariance matrix is not symmetric")
        if np.any(np.diag(m) <= 0.0):
            raise ValueError("covariance matrix diagonal must be strictly positive")
        if not isinstance(self.convention, Convention):
            raise TypeError("convention must be a Convention member")
        m.setflags(write=False)
        object.__setattr__(self, "entries", m)

    @property
    def block_a(self) -> np.ndarray:
        """2x2 block of the first (minus) mode."""
        return self.entries[:2, :2]

    @property
    def block_b(self) -> np.ndarray:
        """2x2 block of the second (plus) mode."""
        return self.entries[2:, 2:]

    @property
    def block_c(self) -> np.ndarray:
        """2x2 cross-correlation block."""
        return self.entries[:2, 2:]


@dataclass(frozen=True)
class SymplecticInvariants:
    """Determinants of the 2x2 blocks and of the full matrix.

    i1 = det A, i2 = det B, i3 = det C, i4 = det V.  These are invariant
    under local symplectic transformations, so no standard-form reduction
    is needed before computing them.
    """

    i1: float
    i2: float
    i3: float
    i4: float


@dataclass(frozen=True)
class SymplecticSpectrum:
    """Symplectic eigenvalues, plus the smallest one of the partial transpose.

    Values are expressed in the convention of the matrix they came from
    (vacuum eigenvalue 1/2 or 1).
    """

    nu_minus: float
    nu_plus: float
    nu_tilde_minus: float


@dataclass(frozen=True)
class Physicality:
    """Outcome of the uncertainty-relation check.

    ``deficit`` is how far nu_minus falls below the vacuum eigenvalue
    (0 when the matrix is physical at zero tolerance); ``physical`` is True
    when the deficit does not exceed the caller-supplied tolerance.
    """

    physical: bool
    deficit: float


def vacuum_cm(convention: Convention) -> CovarianceMatrix:
    """Covariance matrix of the two-mode vacuum in the given convention."""
    return CovarianceMatrix(np.eye(4) * convention.vacuum_eigenvalue, convention)


def rescale_convention(cm: CovarianceMatrix, target: Convention) -> CovarianceMatrix:
    """Re-express a covariance matrix in the target vacuum normalization.

    Multiplies all entries by 2 (half -> unit) or 1/2 (unit -> half);
    returns the input unchanged when it already uses the target convention.
    """
    if cm.convention is target:
        return cm
    factor = target.vacuum_eigenvalue / cm.convention.vacuum_eigenvalue
    return CovarianceMatrix(cm.entries * factor, target)


def invariants(cm: CovarianceMatrix) -> SymplecticInvariants:
    """Block determinants i1 = det A, i2 = det B, i3 = det C, i4 = det V."""
    return SymplecticInvariants(
        i1=float(np.linalg.det(cm.block_a)),
        i2=float(np.linalg.det(cm.block_b)),
        i3=float(np.linalg.det(cm.block_c)),
        i4=float(np.linalg.det(cm.entries)),
    )


def _eigenvalue_pair(delta: float, det_v: float) -> tuple[float, float]:
    """Solve nu^2 = (delta +- sqrt(delta^2 - 4 det V))/2 with clamping."""
    disc = delta * delta - 4.0 * det_v
    if disc < -RADICAND_TOL:
        raise ComplexSpectrumError(
            f"negative discriminant {disc:.3e}: symplectic spectrum is complex"
        )
    # Discriminants below the rounding noise of the determinants cannot be
    # resolved; treat the spectrum as exactly degenerate there (sqrt would
    # otherwise blow ulp-level noise up to ~1e-8).
    noise_floor = 64.0 * _EPS * max(delta * delta, abs(4.0 * det_v))
    if disc <= noise_floor:
        disc = 0.0
    root = math.sqrt(disc)
    squares = ((delta - root) / 2.0, (delta + root) / 2.0)
    for sq in squares:
        if sq < -RADICAND_TOL:
            raise ComplexSpectrumError(
                f"negative squared eigenvalue {sq:.3e}: matrix is malformed"
            )
    lo, hi = (math.sqrt(max(sq, 0.0)) for sq in squares)
    return lo, hi


def symplectic_spectrum(cm: CovarianceMatrix) -> SymplecticSpectrum:
    """Symplectic eigenvalues nu- <= nu+ and the partial-transpose nu~-.

    Uses the two-mode closed form nu^2 = (Delta +- sqrt(Delta^2 - 4 det V))/2
    with Delta = i1 + i2 + 2 i3; the partial transpose flips the sign of i3.
    Radicands within ``RADICAND_TOL`` of zero are clamped (the perturbative
    exactly-degenerate family lands there); larger negative values raise
    ``ComplexSpectrumError``.
    """
    inv = invariants(cm)
    nu_minus, nu_plus = _eigenvalue_pair(inv.i1 + inv.i2 + 2.0 * inv.i3, inv.i4)
    nu_tilde_minus, _ = _eigenvalue_pair(inv.i1 + inv.i2 - 2.0 * inv.i3, inv.i4)
    return SymplecticSpectrum(nu_minus, nu_plus, nu_tilde_minus)


def check_physicality(cm: CovarianceMatrix, tolerance: float) -> Physicality:
    """Check nu- >= vacuum eigenvalue minus a caller-supplied tolerance.

    The tolerance is caller-supplied because perturbatively constructed
    states can violate the uncertainty relation at second order in the
    expansion parameter; callers decide how much slack that warrants.
    """
    if tolerance < 0:
        raise ValueError("tolerance must be nonnegative")
    spectrum = symplectic_spectrum(cm)
    vacuum = cm.convention.vacuum_eigenvalue
    deficit = max(0.0, vacuum - spectrum.nu_minus)
    if deficit <= 8.0 * _EPS * vacuum:
        deficit = 0.0  # below eigenvalue rounding noise; boundary states are physical
    return Physicality(physical=deficit <= tolerance, deficit=deficit)


def log_negativity(cm: CovarianceMatrix) -> float:
    """Logarithmic negativity max{0, -ln nu~-} (natural log, unit vacuum).

    The input may use either convention; it is rescaled internally so the
    vacuum gives exactly zero.  Physicality is not re-checked here.
    """
    unit = rescale_convention(cm, Convention.UNIT_VACUUM)
    nu_tilde = symplectic_spectrum(unit).nu_tilde_minus
    if nu_tilde <= 0.0:
        raise ComplexSpectrumError("partial-transpose eigenvalue collapsed to zero")
    return max(0.0, -math.log(nu_tilde))
