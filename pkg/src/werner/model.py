"""Construction and spectra of Werner states on 2^p x 2^p systems.

A Werner state is the one-parameter family invariant under every U (x) U
conjugation. The parameter is the flip expectation f = Tr(rho P), physical
on [-1, 1], where P is the swap P|i>|j> = |j>|i>. Three independent routes
to the spectrum are provided: the dense construction fed to the in-house
eigensolver, a closed form, and a 4x4 sign-kernel transform applied to the
string expansion coefficients axis by axis. The three must agree; tests
hold them to 1e-9.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import DimensionMismatch, PhysicalRangeError, WernerError
from .linalg import DEFAULT_CLUSTER_TOL, Spectrum
from .pauli import (
    all_strings,
    dagger,
    frobenius_distance,
    frobenius_norm,
    kron,
    pauli_matrix,
    y_count,
)

__all__ = [
    "TRANSFORM_H",
    "TRANSFORM_M",
    "WernerParams",
    "extract_f",
    "flip_operator",
    "invariance_residual",
    "ppt_check",
    "pt_spectrum_closed_form",
    "random_unitary",
    "spectrum_closed_form",
    "spectrum_via_transform",
    "spinor_coefficients",
    "werner_dense",
    "werner_pt",
    "werner_spinor",
]


@dataclass(frozen=True)
class WernerParams:
    """(p, f) pair: local dimension d = 2^p and flip expectation f."""

    p: int
    f: float

    def __post_init__(self):
        if int(self.p) != self.p or self.p < 1:
            raise ValueError(f"p must be a positive integer, got {self.p!r}")
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "f", float(self.f))
        if not np.isfinite(self.f):
            raise ValueError("f must be finite")

    @property
    def d(self) -> int:
        return 2**self.p

    def require_physical(self):
        if not -1.0 <= self.f <= 1.0:
            raise PhysicalRangeError(
                f"f={self.f} outside the physical range [-1, 1]"
            )
        return self


# Sign kernel of the coefficient-to-eigenvalue transform. H carries the
# character table of the single-factor strings; M flips the z column.
TRANSFORM_H = np.array(
    [
        [1, 1, 1, 1],
        [1, -1, 1, -1],
        [1, 1, -1, -1],
        [1, -1, -1, 1],
    ],
    dtype=int,
)
TRANSFORM_M = np.diag([1, 1, 1, -1]).astype(int)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def flip_operator(d: int) -> np.ndarray:
    """Swap operator P|i>|j> = |j>|i> on a d x d bipartite space."""
    d = int(d)
    if d < 2 or d & (d - 1):
        raise DimensionMismatch(f"local dimension must be a power of two, got {d}")
    p = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            p[j * d + i, i * d + j] = 1.0
    return p


def werner_dense(params: WernerParams) -> np.ndarray:
    """((d - f) I + (d f - 1) P) / (d^3 - d); unit trace, PSD for f in [-1, 1]."""
    params.require_physical()
    d = params.d
    f = params.f
    eye = np.eye(d * d, dtype=complex)
    return ((d - f) * eye + (d * f - 1.0) * flip_operator(d)) / (d**3 - d)


def werner_spinor(params: WernerParams) -> np.ndarray:
    """Same state assembled from the string basis sigma_s (x) sigma_s."""
    params.require_physical()
    p, f = params.p, params.f
    d = params.d
    acc = np.zeros((d * d, d * d), dtype=complex)
    for s in all_strings(p):
        m = pauli_matrix(s)
        acc += np.kron(m, m)
    eye = np.eye(d * d, dtype=complex)
    return ((d - f) * eye + ((d * f - 1.0) / d) * acc) / (2 ** (3 * p) - d)


def werner_pt(params: WernerParams) -> np.ndarray:
    """Partial transpose on the second party, via the (-1)^(y count) signs."""
    params.require_physical()
    p, f = params.p, params.f
    d = params.d
    acc = np.zeros((d * d, d * d), dtype=complex)
    for s in all_strings(p):
        m = pauli_matrix(s)
        sign = -1.0 if y_count(s) % 2 else 1.0
        acc += sign * np.kron(m, m)
    eye = np.eye(d * d, dtype=complex)
    return ((d - f) * eye + ((d * f - 1.0) / d) * acc) / (2 ** (3 * p) - d)


def spinor_coefficients(params: WernerParams) -> np.ndarray:
    """Expansion coefficients a[r] of the state over sigma_r (x) sigma_r.

    Index r runs over base-4 string values; r = 0 is the identity string.
    a[0] = 1/4^p and a[r] = (2^p f - 1)/(2^(4p) - 2^(2p)) for r > 0.
    """
    p, f = params.p, params.f
    d = params.d
    a = np.full(4**p, (d * f - 1.0) / (2 ** (4 * p) - 2 ** (2 * p)))
    a[0] = 1.0 / 4**p
    return a


# ---------------------------------------------------------------------------
# spectra
# ---------------------------------------------------------------------------


def spectrum_via_transform(
    params: WernerParams, clustering_tolerance: float = DEFAULT_CLUSTER_TOL
) -> Spectrum:
    """Eigenvalues from the coefficient vector by the 4x4 kernel, axis by axis.

    The 4^p x 4^p transform (H M)^(x p) is never materialized; the kernel is
    contracted along each base-4 axis of the coefficient tensor.
    """
    p = params.p
    kernel = (TRANSFORM_H @ TRANSFORM_M).astype(float)
    t = spinor_coefficients(params).reshape((4,) * p)
    for axis in range(p):
        t = np.moveaxis(np.tensordot(kernel, t, axes=([1], [axis])), 0, axis)
    return Spectrum.from_values(t.reshape(-1), clustering_tolerance)


def spectrum_closed_form(
    params: WernerParams, clustering_tolerance: float = DEFAULT_CLUSTER_TOL
) -> Spectrum:
    """Two eigenvalue branches with multiplicities d(d-1)/2 and d(d+1)/2.

    The antisymmetric branch (1 - f)/(d(d - 1)) and symmetric branch
    (1 + f)/(d(d + 1)) pass the unit-trace audit for every f; degenerate
    points (f = 1/d) merge into a single pair.
    """
    d = params.d
    f = params.f
    return Spectrum.from_pairs(
        [
            ((1.0 - f) / (d * (d - 1)), d * (d - 1) // 2),
            ((1.0 + f) / (d * (d + 1)), d * (d + 1) // 2),
        ],
        clustering_tolerance,
    )


def pt_spectrum_closed_form(
    params: WernerParams, clustering_tolerance: float = DEFAULT_CLUSTER_TOL
) -> Spectrum:
    """Partial-transpose spectrum: f/d once, (d - f)/(d (d^2 - 1)) else.

    The simple eigenvalue sits on the maximally entangled direction, so the
    sign of f alone decides positivity of the partial transpose.
    """
    d = params.d
    f = params.f
    return Spectrum.from_pairs(
        [
            (f / d, 1),
            ((d - f) / (d * (d * d - 1)), d * d - 1),
        ],
        clustering_tolerance,
    )


def ppt_check(params: WernerParams, tol: float = 1e-9) -> bool:
    """True iff the minimum partial-transpose eigenvalue is >= -tol."""
    params.require_physical()
    return pt_spectrum_closed_form(params).min() >= -tol


# ---------------------------------------------------------------------------
# parameter extraction and invariance probes
# ---------------------------------------------------------------------------


def extract_f(rho, p: int) -> float:
    """Flip expectation Tr(rho P) of any state on a 2^p x 2^p system."""
    rho = np.asarray(rho, dtype=complex)
    d = 2**p
    if rho.shape != (d * d, d * d):
        raise DimensionMismatch(
            f"state of shape {rho.shape} does not match p={p} (dim {d*d})"
        )
    return float(np.trace(rho @ flip_operator(d)).real)


def random_unitary(d: int, seed: int) -> np.ndarray:
    """Haar-like d x d unitary from a seeded complex Gaussian matrix.

    QR with the phases of the triangular diagonal pushed back into Q makes
    the draw independent of the QR sign convention; the result is exactly
    reproducible for a given seed.
    """
    rng = np.random.default_rng(seed)
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z / sqrt(2.0))
    ph = np.diag(r).copy()
    ph = ph / np.abs(ph)
    return q * ph


def invariance_residual(rho, u) -> float:
    """Frobenius norm of (U (x) U) rho (U (x) U)^dag - rho."""
    rho = np.asarray(rho, dtype=complex)
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise DimensionMismatch(f"expected a square unitary, got shape {u.shape}")
    if rho.shape != (u.shape[0] ** 2, u.shape[0] ** 2):
        raise DimensionMismatch(
            f"state of shape {rho.shape} does not match local dimension {u.shape[0]}"
        )
    eye = np.eye(u.shape[0])
    if frobenius_distance(dagger(u) @ u, eye) > 1e-9:
        raise WernerError("matrix is not unitary within 1e-9")
    w = kron(u, u)
    return frobenius_norm(w @ rho @ dagger(w) - rho)
