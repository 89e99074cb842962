"""Quantum-correlation measures of the radiated two-mode state.

Implements Gaussian EPR steering (both directions), Gaussian interferometric
power (either probe mode), their leading-order perturbative forms in the
pair-generation parameter f, the steering onset amplitude, and critical
temperatures found by bisection.  All exact measures rescale the input
covariance matrix to the unit-vacuum normalization internally and use
natural logarithms; that is the unique combination for which the exact
formulas reduce to the perturbative ones.

Pure functions throughout; evaluations at distinct parameter points are
independent and may run concurrently.
"""

import enum
import math
from dataclasses import dataclass, replace

from scipy.optimize import bisect

from .dce import DceParams, ThermalOccupations, occupations, output_cm, small_parameter
from .dce import PERTURBATIVE_LIMIT, amplitude_for_small_parameter
from .gaussian import (
    Convention,
    CovarianceMatrix,
    check_physicality,
    invariants,
    log_negativity,
    rescale_convention,
    symplectic_spectrum,
)

# ip_exact refuses states whose smallest symplectic eigenvalue falls below
# the unit-vacuum value by more than this.
PHYSICALITY_TOL = 1e-9

# Bisection bracket for critical temperatures; every regime of interest sits
# far inside (n(1 K) ~ 3.7 at 5 GHz).
_T_BRACKET = (0.0, 1.0)
_T_XTOL = 1e-6


class NonPositiveDeterminantError(ValueError):
    """det A or det V is nonpositive; the steering measure is undefined."""


class UnphysicalStateError(ValueError):
    """The state violates the uncertainty relation beyond tolerance."""


class DegeneratePureStateError(ValueError):
    """det V = 1 with vanishing denominator: 0/0 form of the power formula."""


class ReportFlag(enum.Enum):
    """Quality flags attached to a correlation report."""

    EXACT_SKIPPED_UNPHYSICAL = "ExactSkippedUnphysical"
    PERTURBATIVE_WARNING = "PerturbativeWarning"


@dataclass(frozen=True)
class CorrelationReport:
    """Every correlation measure evaluated at one parameter point."""

    steering_a_to_b: float
    steering_b_to_a: float
    steering_perturbative: float
    ip_probe_a: float
    ip_probe_b: float
    ip_perturbative: float
    log_negativity: float
    physicality_deficit: float
    flags: frozenset[ReportFlag]


def _signed_steering(cm_unit: CovarianceMatrix, direction: str) -> float:
    inv = invariants(cm_unit)
    det_party = {"a_to_b": inv.i1, "b_to_a": inv.i2}.get(direction)
    if det_party is None:
        raise ValueError(f"direction must be 'a_to_b' or 'b_to_a', got {direction!r}")
    if det_party <= 0 or inv.i4 <= 0:
        raise NonPositiveDeterminantError(
            f"det block = {det_party:.3e}, det V = {inv.i4:.3e}"
        )
    return 0.5 * math.log(det_party / inv.i4)


def steering_exact(cm: CovarianceMatrix, direction: str = "a_to_b") -> float:
    """Gaussian EPR steering max{0, (1/2) ln(det A / det V)}.

    ``direction`` selects the steering party: 'a_to_b' uses the first mode's
    block, 'b_to_a' the second's.  The matrix may use either normalization.
    """
    unit = rescale_convention(cm, Convention.UNIT_VACUUM)
    return max(0.0, _signed_steering(unit, direction))


def steering_perturbative(f: float, n: float) -> float:
    """Leading-order steering max{0, 3 f^2 - 2 n}."""
    if f < 0 or n < 0:
        raise ValueError("f and n must be nonnegative")
    return max(0.0, 3.0 * f * f - 2.0 * n)


def steering_onset_amplitude(p: DceParams) -> float:
    """Smallest drive amplitude with nonzero perturbative steering.

    Perturbative steering turns on at f = sqrt(2 n / 3); this is that
    threshold mapped back through the small-parameter relation, i.e.
    eps0 = (2 v / (L_eff w_d)) sqrt(2 n / 3) at zero detuning.  Returns 0
    at zero temperature.
    """
    n = occupations(p).mean
    if n == 0.0:
        return 0.0
    return amplitude_for_small_parameter(p, math.sqrt(2.0 * n / 3.0))


def ip_exact(cm: CovarianceMatrix, probe: str = "a") -> float:
    """Gaussian interferometric power (X + sqrt(X^2 + Y Z)) / (2 Y).

    X, Y, Z are polynomials in the symplectic invariants; probing the second
    mode exchanges i1 and i2.  Raises ``UnphysicalStateError`` when the state
    violates the uncertainty relation beyond ``PHYSICALITY_TOL`` (the
    perturbative family does so for n below roughly f^2/2; callers should
    fall back to ``ip_perturbative`` there) and ``DegeneratePureStateError``
    on the 0/0 form hit by pure states with det V = 1.
    """
    if probe not in ("a", "b"):
        raise ValueError(f"probe must be 'a' or 'b', got {probe!r}")
    unit = rescale_convention(cm, Convention.UNIT_VACUUM)
    nu_minus = symplectic_spectrum(unit).nu_minus
    if nu_minus < 1.0 - PHYSICALITY_TOL:
        raise UnphysicalStateError(
            f"nu_minus = {nu_minus:.12g} below unit vacuum; deficit {1.0 - nu_minus:.3e}"
        )
    inv = invariants(unit)
    i1, i2 = (inv.i1, inv.i2) if probe == "a" else (inv.i2, inv.i1)
    i3, i4 = inv.i3, inv.i4
    x = (i1 + i3) * (1.0 + i2 + i3 - i4) - i4 * i4
    y = (i4 - 1.0) * (1.0 + i1 + i2 + 2.0 * i3 + i4)
    z = (i1 + i4) * (i1 * i2 - i4) + i3 * (2.0 * i1 + i3) * (1.0 + i2)
    if abs(i4 - 1.0) <= 1e-9 and abs(y) <= 1e-12:
        raise DegeneratePureStateError("det V = 1 and Y = 0: power formula is 0/0")
    if not unit.block_c.any():
        return 0.0  # product state: exactly zero, below rounding noise otherwise
    return max(0.0, (x + math.sqrt(x * x + y * z)) / (2.0 * y))


def ip_perturbative(f: float, n: float) -> float:
    """Leading-order interferometric power f^2 (1 + 2 n)."""
    if f < 0 or n < 0:
        raise ValueError("f and n must be nonnegative")
    return f * f * (1.0 + 2.0 * n)


def critical_temperature(p: DceParams, measure: str) -> float | None:
    """Temperature at which the exact measure crosses zero, by bisection.

    ``measure`` is 'steering' (exact steering of the output state) or
    'entanglement' (its logarithmic negativity).  Both are monotone in the
    thermal occupation, so the zero is bracketed on [0, 1] K and located to
    1e-6 K.  Returns None when the measure never crosses zero there, either
    because it is positive on the whole interval or zero everywhere.
    """
    if measure not in ("steering", "entanglement"):
        raise ValueError(f"measure must be 'steering' or 'entanglement', got {measure!r}")
    f = small_parameter(p)

    def signed(temperature: float) -> float:
        occ = occupations(replace(p, temperature=temperature))
        unit = rescale_convention(output_cm(f, occ), Convention.UNIT_VACUUM)
        if measure == "steering":
            return _signed_steering(unit, "a_to_b")
        return -math.log(symplectic_spectrum(unit).nu_tilde_minus)

    lo, hi = _T_BRACKET
    if signed(lo) <= 0.0:
        return None  # never positive: zero everywhere on the interval
    if signed(hi) >= 0.0:
        return None  # still positive at the top of the bracket
    return float(bisect(signed, lo, hi, xtol=_T_XTOL))


def report_from_state(f: float, occ: ThermalOccupations) -> CorrelationReport:
    """Evaluate every measure for the output state at pair strength f.

    Exact interferometric power falls back to the perturbative value (with
    ``EXACT_SKIPPED_UNPHYSICAL``) when the perturbative state is too far
    from physical, and silently to the same value on the measure-zero
    degenerate-pure corner (reached only at f = 0, n = 0, where the exact
    power is 0 anyway).
    """
    cm = output_cm(f, occ)
    unit = rescale_convention(cm, Convention.UNIT_VACUUM)
    n_eff = occ.mean

    flags = set()
    if f > PERTURBATIVE_LIMIT or not occ.quasi_vacuum:
        flags.add(ReportFlag.PERTURBATIVE_WARNING)

    ip_pert = ip_perturbative(f, n_eff)
    try:
        ip_a = ip_exact(unit, "a")
        ip_b = ip_exact(unit, "b")
    except UnphysicalStateError:
        ip_a = ip_b = ip_pert
        flags.add(ReportFlag.EXACT_SKIPPED_UNPHYSICAL)
    except DegeneratePureStateError:
        ip_a = ip_b = ip_pert

    return CorrelationReport(
        steering_a_to_b=steering_exact(unit, "a_to_b"),
        steering_b_to_a=steering_exact(unit, "b_to_a"),
        steering_perturbative=steering_perturbative(f, n_eff),
        ip_probe_a=ip_a,
        ip_probe_b=ip_b,
        ip_perturbative=ip_pert,
        log_negativity=log_negativity(unit),
        physicality_deficit=check_physicality(unit, 0.0).deficit,
        flags=frozenset(flags),
    )


def full_report(p: DceParams) -> CorrelationReport:
    """Evaluate every measure at one experimental parameter point."""
    return report_from_state(small_parameter(p), occupations(p))
