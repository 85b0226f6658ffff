"""Weak two-outcome measurements on subsystem B and the resulting
conditional ensemble of subsystem A.

A measurement of strength ``x`` interpolates between doing nothing (x=0)
and a projective measurement (x -> infinity) through tanh(x).  The
conditional ensemble of an X-state depends on the measurement basis only
through a unit direction (z1, z2, z3), which lets everything be evaluated
in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateBranch, DomainError
from .qstate import CorrelationParams

#: Measurement strength meaning tanh(x) = 1 exactly (projective limit).
PROJECTIVE = math.inf

#: Branch probabilities at or below this threshold are treated as zero.
DEGENERATE_EPS = 1e-14

_I2 = np.eye(2, dtype=complex)
_SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
_PI0 = np.diag([1.0, 0.0]).astype(complex)
_PI1 = np.diag([0.0, 1.0]).astype(complex)


def tanh_strength(x: float) -> float:
    """tanh of a measurement strength; exactly 1.0 for PROJECTIVE."""
    if math.isnan(x) or x < 0:
        raise DomainError(f"measurement strength must be >= 0, got {x!r}")
    return math.tanh(x)


@dataclass(frozen=True)
class MeasurementDirection:
    """Unit vector (z1, z2, z3) selecting the measurement basis on B."""

    z1: float
    z2: float
    z3: float

    def __post_init__(self):
        n2 = self.z1 * self.z1 + self.z2 * self.z2 + self.z3 * self.z3
        if not math.isfinite(n2) or abs(n2 - 1.0) > 1e-12:
            raise DomainError(f"direction must have unit norm, |z|^2 = {n2!r}")

    def as_array(self) -> np.ndarray:
        return np.array([self.z1, self.z2, self.z3])


@dataclass(frozen=True)
class UnitaryParams:
    """Real quaternion (t, y1, y2, y3) of the basis unitary V = t*I + i*y.sigma."""

    t: float
    y1: float
    y2: float
    y3: float

    def __post_init__(self):
        n2 = self.t**2 + self.y1**2 + self.y2**2 + self.y3**2
        if not math.isfinite(n2) or abs(n2 - 1.0) > 1e-12:
            raise DomainError(f"unitary parameters must have unit norm, got {n2!r}")


@dataclass(frozen=True)
class ConditionalEnsemble:
    """Outcome probabilities and conditional spectra after a weak measurement.

    ``lambda_plus``/``lambda_minus`` are the eigenvalues of the conditional
    state on the + branch, the primed pair those of the - branch.
    """

    p_plus: float
    p_minus: float
    lambda_plus: float
    lambda_minus: float
    lambda_plus_prime: float
    lambda_minus_prime: float

    def __post_init__(self):
        pairs = (
            ("p", self.p_plus, self.p_minus),
            ("lambda", self.lambda_plus, self.lambda_minus),
            ("lambda'", self.lambda_plus_prime, self.lambda_minus_prime),
        )
        for name, hi, lo in pairs:
            if abs(hi + lo - 1.0) > 1e-12:
                raise DomainError(f"{name} pair must sum to 1, got {hi + lo!r}")
            if not -1e-12 <= lo <= 1.0 + 1e-12 or not -1e-12 <= hi <= 1.0 + 1e-12:
                raise DomainError(f"{name} pair out of [0, 1]: ({hi!r}, {lo!r})")


def unitary_matrix(u: UnitaryParams) -> np.ndarray:
    """Dense 2x2 unitary t*I + i*(y1*s1 + y2*s2 + y3*s3)."""
    return (
        u.t * _I2
        + 1j * (u.y1 * _SIGMA[0] + u.y2 * _SIGMA[1] + u.y3 * _SIGMA[2])
    )


def weak_operators(x: float, u: UnitaryParams) -> tuple[np.ndarray, np.ndarray]:
    """The pair of weak measurement operators P(+x), P(-x) in basis V.

    P(+x) = sqrt((1-tanh x)/2) V Pi0 V^dag + sqrt((1+tanh x)/2) V Pi1 V^dag
    and P(-x) with the weights swapped.  They satisfy the completeness
    relation P(+x)^dag P(+x) + P(-x)^dag P(-x) = I.
    """
    tau = tanh_strength(x)
    v = unitary_matrix(u)
    proj0 = v @ _PI0 @ v.conj().T
    proj1 = v @ _PI1 @ v.conj().T
    w_lo = math.sqrt((1.0 - tau) / 2.0)
    w_hi = math.sqrt((1.0 + tau) / 2.0)
    return w_lo * proj0 + w_hi * proj1, w_hi * proj0 + w_lo * proj1


def direction_from_unitary(u: UnitaryParams) -> MeasurementDirection:
    """Measurement direction induced by the basis unitary.

    z1 = 2(-t*y2 + y1*y3), z2 = 2(t*y1 + y2*y3), z3 = t^2 + y3^2 - y1^2 - y2^2.
    """
    z1 = 2.0 * (-u.t * u.y2 + u.y1 * u.y3)
    z2 = 2.0 * (u.t * u.y1 + u.y2 * u.y3)
    z3 = u.t**2 + u.y3**2 - u.y1**2 - u.y2**2
    norm = math.sqrt(z1 * z1 + z2 * z2 + z3 * z3)
    return MeasurementDirection(z1 / norm, z2 / norm, z3 / norm)


def transverse_components(
    cp: CorrelationParams, z: MeasurementDirection
) -> tuple[float, float]:
    """The in-plane Bloch components a1, a2 of the conditional states."""
    a1 = z.z1 * cp.c1.real + z.z2 * cp.c2.imag
    a2 = z.z2 * cp.c2.real - z.z1 * cp.c1.imag
    return a1, a2


def branch_spectra(
    cp: CorrelationParams, z: MeasurementDirection, x: float
) -> list[tuple[float, float] | None]:
    """Per-branch (probability, larger eigenvalue); None marks a branch of
    probability zero (within ``DEGENERATE_EPS``)."""
    tau = tanh_strength(x)
    a1, a2 = transverse_components(cp, z)
    perp2 = (a1 * a1 + a2 * a2) * tau * tau
    out: list[tuple[float, float] | None] = []
    for sign in (1.0, -1.0):
        den = 1.0 - sign * cp.b3 * z.z3 * tau
        if den <= DEGENERATE_EPS:
            out.append(None)
            continue
        axial = cp.a3 - sign * cp.c3 * z.z3 * tau
        ratio = min(math.sqrt(axial * axial + perp2) / den, 1.0)
        out.append((den / 2.0, (1.0 + ratio) / 2.0))
    return out


def conditional_ensemble(
    cp: CorrelationParams, z: MeasurementDirection, x: float
) -> ConditionalEnsemble:
    """Probabilities p(+x), p(-x) and conditional spectra for an X-state.

    With a1, a2 as in :func:`transverse_components` and tau = tanh(x):

        p(+-x)   = (1 -+ b3*z3*tau) / 2
        lambda_+- = (1 +- sqrt((a3 - c3*z3*tau)^2 + (a1^2+a2^2)*tau^2)
                        / (1 - b3*z3*tau)) / 2

    and the primed pair with the inner signs flipped.

    Raises
    ------
    DegenerateBranch
        If either branch carries probability <= DEGENERATE_EPS.
    """
    plus, minus = branch_spectra(cp, z, x)
    if plus is None or minus is None:
        raise DegenerateBranch(
            "a measurement branch has probability zero for this direction"
        )
    p_plus, lam_plus = plus
    p_minus, lam_minus = minus
    return ConditionalEnsemble(
        p_plus=p_plus,
        p_minus=p_minus,
        lambda_plus=lam_plus,
        lambda_minus=1.0 - lam_plus,
        lambda_plus_prime=lam_minus,
        lambda_minus_prime=1.0 - lam_minus,
    )
