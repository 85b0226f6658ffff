"""Two-qubit X-shaped density matrices.

An X-state has nonzero entries only on the main diagonal and the
anti-diagonal.  This module validates such matrices, extracts the
correlation parameters that drive the measurement formulas, and computes
spectra, reduced states, entropies and mutual information in closed form.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    NotHermitian,
    NotPositive,
    NotXShaped,
    StateFormatError,
    TraceNotOne,
)

#: Absolute tolerance for trace, Hermiticity, shape and positivity checks.
ATOL = 1e-12


def _require_finite(name, *values):
    for v in values:
        if isinstance(v, complex):
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise DomainError(f"{name} must be finite, got {v!r}")
        elif not math.isfinite(v):
            raise DomainError(f"{name} must be finite, got {v!r}")


@dataclass(frozen=True)
class XState:
    """Validated two-qubit X-shaped density matrix.

    Parameters
    ----------
    a11, a22, a33, a44 : float
        Diagonal entries (populations).  Must sum to 1 within ``ATOL``;
        values within ``ATOL`` below zero are clamped to 0.
    a14, a23 : complex
        Anti-diagonal entries (coherences).  Block positivity requires
        ``|a14|^2 <= a11*a44`` and ``|a23|^2 <= a22*a33``, each within
        ``ATOL``.

    Raises
    ------
    TraceNotOne, NotPositive, DomainError
        If the stated invariants are violated.
    """

    a11: float
    a22: float
    a33: float
    a44: float
    a14: complex = 0j
    a23: complex = 0j

    def __post_init__(self):
        diag = [float(self.a11), float(self.a22), float(self.a33), float(self.a44)]
        a14 = complex(self.a14)
        a23 = complex(self.a23)
        _require_finite("diagonal entries", *diag)
        _require_finite("anti-diagonal entries", a14, a23)

        if abs(sum(diag) - 1.0) > ATOL:
            raise TraceNotOne(f"diagonal sums to {sum(diag)!r}, expected 1")
        for i, v in enumerate(diag):
            if v < -ATOL:
                raise NotPositive(f"diagonal entry {i} is negative: {v!r}")
            if v < 0.0:
                diag[i] = 0.0
        if abs(a14) ** 2 > diag[0] * diag[3] + ATOL:
            raise NotPositive(
                f"|a14|^2 = {abs(a14)**2!r} exceeds a11*a44 = {diag[0]*diag[3]!r}"
            )
        if abs(a23) ** 2 > diag[1] * diag[2] + ATOL:
            raise NotPositive(
                f"|a23|^2 = {abs(a23)**2!r} exceeds a22*a33 = {diag[1]*diag[2]!r}"
            )

        object.__setattr__(self, "a11", diag[0])
        object.__setattr__(self, "a22", diag[1])
        object.__setattr__(self, "a33", diag[2])
        object.__setattr__(self, "a44", diag[3])
        object.__setattr__(self, "a14", a14)
        object.__setattr__(self, "a23", a23)

    def matrix(self) -> np.ndarray:
        """Dense 4x4 complex matrix in the computational basis."""
        m = np.zeros((4, 4), dtype=complex)
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = self.a11, self.a22, self.a33, self.a44
        m[0, 3] = self.a14
        m[3, 0] = self.a14.conjugate()
        m[1, 2] = self.a23
        m[2, 1] = self.a23.conjugate()
        return m


@dataclass(frozen=True)
class CorrelationParams:
    """Correlation parameterization of an X-state.

    ``a3`` and ``b3`` are the local Bloch components of subsystems A and B,
    ``c3`` the diagonal correlation, ``c1``/``c2`` the (complex) transverse
    correlations, and ``d1..d4`` the derived diagonal combinations with
    ``1 + d_i = 4*a_ii``.
    """

    a3: float
    b3: float
    c3: float
    c1: complex
    c2: complex
    d1: float
    d2: float
    d3: float
    d4: float


def correlation_params(s: XState) -> CorrelationParams:
    """Extract the correlation parameters of an X-state.

    Parameters
    ----------
    s : XState

    Returns
    -------
    CorrelationParams
        With ``a3 = a11 - a44 + a22 - a33``, ``b3 = a11 - a44 - a22 + a33``,
        ``c3 = a11 + a44 - a22 - a33``, ``c1 = 2*(a23 + a14)``,
        ``c2 = 2*(a23 - a14)`` and the four ``d_i`` combinations.
    """
    a3 = s.a11 - s.a44 + s.a22 - s.a33
    b3 = s.a11 - s.a44 - s.a22 + s.a33
    c3 = s.a11 + s.a44 - s.a22 - s.a33
    c1 = 2.0 * (s.a23 + s.a14)
    c2 = 2.0 * (s.a23 - s.a14)
    return CorrelationParams(
        a3=a3,
        b3=b3,
        c3=c3,
        c1=c1,
        c2=c2,
        d1=c3 + a3 + b3,
        d2=-c3 + a3 - b3,
        d3=-c3 - a3 + b3,
        d4=c3 - a3 - b3,
    )


def xstate_from_correlations(cp: CorrelationParams) -> XState:
    """Reconstruct the X-state whose correlation parameters are ``cp``.

    Inverse of :func:`correlation_params`: ``a_ii = (1 + d_i)/4``,
    ``a14 = (c1 - c2)/4``, ``a23 = (c1 + c2)/4``.
    """
    return XState(
        a11=(1.0 + cp.d1) / 4.0,
        a22=(1.0 + cp.d2) / 4.0,
        a33=(1.0 + cp.d3) / 4.0,
        a44=(1.0 + cp.d4) / 4.0,
        a14=(cp.c1 - cp.c2) / 4.0,
        a23=(cp.c1 + cp.c2) / 4.0,
    )


def validate_xstate(m) -> XState:
    """Validate a 4x4 complex matrix as a two-qubit X-state.

    Parameters
    ----------
    m : array_like
        4x4 complex matrix.

    Returns
    -------
    XState

    Raises
    ------
    StateFormatError
        If ``m`` is not a 4x4 array.
    NotXShaped
        If any of the eight off-pattern entries has modulus above ``ATOL``.
    NotHermitian
        If ``m`` differs from its conjugate transpose beyond ``ATOL``.
    TraceNotOne, NotPositive
        As for :class:`XState`.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise StateFormatError(f"expected a 4x4 matrix, got shape {m.shape}")
    x_pattern = {(0, 0), (1, 1), (2, 2), (3, 3), (0, 3), (3, 0), (1, 2), (2, 1)}
    for i in range(4):
        for j in range(4):
            if (i, j) not in x_pattern and abs(m[i, j]) > ATOL:
                raise NotXShaped(f"entry ({i}, {j}) = {m[i, j]!r} breaks the X pattern")
    if np.max(np.abs(m - m.conj().T)) > ATOL:
        raise NotHermitian("matrix differs from its conjugate transpose")
    if abs(m.trace() - 1.0) > ATOL:
        raise TraceNotOne(f"trace is {m.trace()!r}, expected 1")
    return XState(
        a11=m[0, 0].real,
        a22=m[1, 1].real,
        a33=m[2, 2].real,
        a44=m[3, 3].real,
        a14=complex(m[0, 3]),
        a23=complex(m[1, 2]),
    )


def xstate_spectrum(s: XState) -> np.ndarray:
    """Eigenvalues of an X-state via its two 2x2 blocks, sorted descending.

    The outer block {a11, a44, a14} and inner block {a22, a33, a23} each
    contribute ``mean +/- sqrt(half_gap^2 + |coherence|^2)``.  Negative
    values within rounding tolerance are clamped to 0.
    """
    outer_mid = 0.5 * (s.a11 + s.a44)
    outer_dev = math.hypot(0.5 * (s.a11 - s.a44), abs(s.a14))
    inner_mid = 0.5 * (s.a22 + s.a33)
    inner_dev = math.hypot(0.5 * (s.a22 - s.a33), abs(s.a23))
    eigs = np.array(
        [
            outer_mid + outer_dev,
            outer_mid - outer_dev,
            inner_mid + inner_dev,
            inner_mid - inner_dev,
        ]
    )
    eigs[(eigs < 0) & (eigs > -1e-11)] = 0.0
    return np.sort(eigs)[::-1]


def von_neumann_entropy(spec) -> float:
    """Von Neumann entropy, in bits, of a spectrum.

    Parameters
    ----------
    spec : array_like
        Eigenvalues in [0, 1].  Values within 1e-12 below zero are treated
        as 0 (the ``0*log2(0) = 0`` convention).

    Raises
    ------
    DomainError
        For entries below -1e-12.
    """
    total = 0.0
    for lam in np.asarray(spec, dtype=float).ravel():
        if not math.isfinite(lam):
            raise DomainError(f"eigenvalue must be finite, got {lam!r}")
        if lam < -1e-12:
            raise DomainError(f"negative eigenvalue {lam!r}")
        if lam > 0.0:
            total -= lam * math.log2(lam)
    return total


def reduced_a(s: XState) -> np.ndarray:
    """Reduced state of subsystem A: ``diag(a11 + a22, a33 + a44)``."""
    return np.diag([s.a11 + s.a22, s.a33 + s.a44]).astype(complex)


def reduced_b(s: XState) -> np.ndarray:
    """Reduced state of subsystem B: ``diag(a11 + a33, a22 + a44)``."""
    return np.diag([s.a11 + s.a33, s.a22 + s.a44]).astype(complex)


def mutual_information(s: XState) -> float:
    """Quantum mutual information ``S(A) + S(B) - S(AB)`` in bits."""
    s_a = von_neumann_entropy([s.a11 + s.a22, s.a33 + s.a44])
    s_b = von_neumann_entropy([s.a11 + s.a33, s.a22 + s.a44])
    return s_a + s_b - von_neumann_entropy(xstate_spectrum(s))


# ---------------------------------------------------------------------------
# Common state families
# ---------------------------------------------------------------------------

def maximally_mixed() -> XState:
    """The maximally mixed two-qubit state I/4."""
    return XState(0.25, 0.25, 0.25, 0.25)


def werner_state(z: float) -> XState:
    """Werner state mixing a Bell state (weight z) with I/4.

    Diagonal ``((1+z)/4, (1-z)/4, (1-z)/4, (1+z)/4)`` with ``a14 = z/2``.
    """
    if not 0.0 <= z <= 1.0:
        raise DomainError(f"Werner parameter must lie in [0, 1], got {z!r}")
    return XState(
        a11=(1.0 + z) / 4.0,
        a22=(1.0 - z) / 4.0,
        a33=(1.0 - z) / 4.0,
        a44=(1.0 + z) / 4.0,
        a14=z / 2.0,
    )


def bell_diagonal_state(c1: float, c2: float, c3: float) -> XState:
    """Bell-diagonal state with real correlation triple ``(c1, c2, c3)``.

    Raises :class:`NotPositive` when the triple lies outside the Bell
    tetrahedron.
    """
    return XState(
        a11=(1.0 + c3) / 4.0,
        a22=(1.0 - c3) / 4.0,
        a33=(1.0 - c3) / 4.0,
        a44=(1.0 + c3) / 4.0,
        a14=(c1 - c2) / 4.0,
        a23=(c1 + c2) / 4.0,
    )


# ---------------------------------------------------------------------------
# JSON state files
# ---------------------------------------------------------------------------

_ENTRY_KEYS = ("a11", "a22", "a33", "a44")


def _complex_from_obj(obj, key: str) -> complex:
    if not isinstance(obj, dict) or set(obj.keys()) - {"re", "im"}:
        raise StateFormatError(f'"{key}" must be an object with keys "re" and "im"')
    try:
        return complex(float(obj["re"]), float(obj["im"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise StateFormatError(f'"{key}" must hold numeric "re" and "im"') from exc


def xstate_from_dict(obj) -> XState:
    """Build an X-state from a parsed JSON document.

    Two forms are accepted: entry form with keys ``a11..a44`` (numbers) and
    ``a14``/``a23`` (objects ``{"re", "im"}``), or matrix form with key
    ``"matrix"`` holding a 4x4 array of ``{"re", "im"}`` objects.

    Raises
    ------
    StateFormatError
        For structural problems; validation errors propagate unchanged.
    """
    if not isinstance(obj, dict):
        raise StateFormatError("state document must be a JSON object")
    if "matrix" in obj:
        rows = obj["matrix"]
        if not isinstance(rows, list) or len(rows) != 4 or any(
            not isinstance(r, list) or len(r) != 4 for r in rows
        ):
            raise StateFormatError('"matrix" must be a 4x4 array')
        m = np.array(
            [[_complex_from_obj(v, "matrix entry") for v in row] for row in rows]
        )
        return validate_xstate(m)
    missing = [k for k in (*_ENTRY_KEYS, "a14", "a23") if k not in obj]
    if missing:
        raise StateFormatError(f"state document is missing keys: {missing}")
    try:
        diag = [float(obj[k]) for k in _ENTRY_KEYS]
    except (TypeError, ValueError) as exc:
        raise StateFormatError("diagonal entries must be numbers") from exc
    return XState(
        *diag,
        a14=_complex_from_obj(obj["a14"], "a14"),
        a23=_complex_from_obj(obj["a23"], "a23"),
    )


def load_state(path) -> XState:
    """Read and validate a JSON state file.

    ``OSError`` and ``json.JSONDecodeError`` propagate to the caller.
    """
    with open(path, "r", encoding="utf-8") as fh:
        return xstate_from_dict(json.load(fh))
