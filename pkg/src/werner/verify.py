"""Oracle-grade checking of claimed decompositions, and refinement to pure factors.

verify_decomposition trusts nothing about how a decomposition was built: it
re-derives weight statistics, re-diagonalizes every local factor with the
in-house eigensolver, and measures the Frobenius gap to the target. A
decomposition is a separability certificate exactly when the verdict is
true.

refine_to_pure spectrally splits each mixed factor so the certificate uses
only rank-1 factors, at the cost of more terms.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from .decompose import Decomposition, ProductTerm, decompose_auto, reconstruct
from .errors import DimensionMismatch, VerificationFailure
from .linalg import hermitian_eigensystem
from .model import (
    WernerParams,
    invariance_residual,
    pt_spectrum_closed_form,
    random_unitary,
    werner_dense,
)
from .pauli import frobenius_distance

__all__ = [
    "RefinementSummary",
    "SeparabilityReport",
    "VerificationReport",
    "refine_to_pure",
    "separability_report",
    "verify_decomposition",
]

_WEIGHT_TOL = 1e-12
_EIGENVALUE_FLOOR = 1e-12  # refinement discards spectral weight below this


@dataclass(frozen=True)
class VerificationReport:
    convex_ok: bool
    min_weight: float
    weight_sum_error: float
    positivity_ok: bool
    min_component_eigenvalue: float
    reconstruction_residual: float
    purity_ok: bool
    max_purity_deviation: float
    verdict: bool
    diagnostics: Tuple[str, ...]


def _component_stats(dec: Decomposition):
    """Min eigenvalue and max purity deviation over all distinct factors."""
    min_eig = np.inf
    max_purity_dev = 0.0
    seen = {}
    for term in dec.terms:
        for mat in (term.state_a, term.state_b):
            key = id(mat)
            if key in seen:
                continue
            vals, _ = hermitian_eigensystem(mat)
            purity = float(np.sum(vals * vals))  # trace of the square
            seen[key] = True
            min_eig = min(min_eig, float(vals[0]))
            max_purity_dev = max(max_purity_dev, abs(purity - 1.0))
    return float(min_eig), float(max_purity_dev)


def verify_decomposition(
    target, dec: Decomposition, tol: float = 1e-9
) -> VerificationReport:
    """Convexity, factor positivity, and exact reconstruction, all re-derived."""
    target = np.asarray(target, dtype=complex)
    if not dec.terms:
        raise ValueError("decomposition has no terms")
    dim = dec.terms[0].state_a.shape[0] * dec.terms[0].state_b.shape[0]
    if target.shape != (dim, dim):
        raise DimensionMismatch(
            f"target shape {target.shape} does not match term dimension {dim}"
        )

    diagnostics: List[str] = []

    weights = np.array(dec.weights)
    min_weight = float(weights.min())
    weight_sum_error = abs(float(weights.sum()) - 1.0)
    convex_ok = min_weight >= -_WEIGHT_TOL and weight_sum_error <= _WEIGHT_TOL
    if not convex_ok:
        diagnostics.append(
            f"weights are not convex: min={min_weight:.3e}, "
            f"sum error={weight_sum_error:.3e}"
        )

    min_component_eigenvalue, max_purity_deviation = _component_stats(dec)
    positivity_ok = min_component_eigenvalue >= -tol
    if not positivity_ok:
        diagnostics.append(
            f"a factor has eigenvalue {min_component_eigenvalue:.6e} < -{tol:g}"
        )

    residual = frobenius_distance(reconstruct(dec), target)
    recon_ok = residual < tol
    if not recon_ok:
        diagnostics.append(f"reconstruction residual {residual:.6e} >= {tol:g}")

    purity_ok = max_purity_deviation <= 1e-9

    return VerificationReport(
        convex_ok=convex_ok,
        min_weight=min_weight,
        weight_sum_error=weight_sum_error,
        positivity_ok=positivity_ok,
        min_component_eigenvalue=min_component_eigenvalue,
        reconstruction_residual=float(residual),
        purity_ok=purity_ok,
        max_purity_deviation=max_purity_deviation,
        verdict=convex_ok and positivity_ok and recon_ok,
        diagnostics=tuple(diagnostics),
    )


def refine_to_pure(dec: Decomposition, tol: float = 1e-9) -> Decomposition:
    """Split every mixed factor into its eigenpairs; purity is informational
    on input and mandatory on output.

    Term (w, A, B) becomes the family (w a_j b_k, |a_j><a_j|, |b_k><b_k|)
    over eigenpairs above the spectral floor. Requires the input to verify
    against its own parameters first.
    """
    report = verify_decomposition(werner_dense(dec.params), dec, tol)
    if not report.verdict:
        raise VerificationFailure(
            "refusing to refine a decomposition that fails verification: "
            + "; ".join(report.diagnostics),
            report=report,
        )

    eig_cache = {}

    def eigenpairs(mat):
        key = id(mat)
        if key not in eig_cache:
            vals, vecs = hermitian_eigensystem(mat, compute_vectors=True)
            keep = []
            for k in range(len(vals)):
                if vals[k] > _EIGENVALUE_FLOOR:
                    v = vecs[:, k]
                    v = v / np.sqrt(np.sum(np.abs(v) ** 2))
                    keep.append((float(vals[k]), np.outer(v, v.conj())))
            eig_cache[key] = keep
        return eig_cache[key]

    terms: List[ProductTerm] = []
    for term in dec.terms:
        for j, (alpha, proj_a) in enumerate(eigenpairs(term.state_a)):
            for k, (beta, proj_b) in enumerate(eigenpairs(term.state_b)):
                terms.append(
                    ProductTerm(
                        term.weight * alpha * beta,
                        proj_a,
                        proj_b,
                        f"{term.label}:a{j}b{k}",
                    )
                )
    return Decomposition(dec.params, dec.scheme, dec.scale, tuple(terms))


@dataclass(frozen=True)
class RefinementSummary:
    n_terms: int
    max_purity_deviation: float
    reconstruction_residual: float


@dataclass(frozen=True)
class SeparabilityReport:
    p: int
    f: float
    verdict: str  # SEPARABLE, ENTANGLED, or INVALID
    ppt: bool
    min_pt_eigenvalue: float
    witness: Optional[float]  # the negative PT eigenvalue, when entangled
    scheme: Optional[str]
    scale: Optional[float]
    n_terms: int
    verification: Optional[VerificationReport]
    invariance_residual: float
    seed: int


def separability_report(
    params: WernerParams,
    seed: int = 42,
    tol: float = 1e-9,
    refine: bool = False,
):
    """End-to-end pipeline: PPT test, construction, verification, refinement.

    Returns (report, refinement) where refinement is None unless requested
    and the state is separable.
    """
    params.require_physical()
    pt_min = pt_spectrum_closed_form(params).min()
    ppt = pt_min >= -1e-9

    rho = werner_dense(params)
    inv_res = invariance_residual(rho, random_unitary(params.d, seed))

    if not ppt:
        report = SeparabilityReport(
            p=params.p,
            f=params.f,
            verdict="ENTANGLED",
            ppt=False,
            min_pt_eigenvalue=float(pt_min),
            witness=float(pt_min),
            scheme=None,
            scale=None,
            n_terms=0,
            verification=None,
            invariance_residual=inv_res,
            seed=seed,
        )
        return report, None

    # f inside the PPT tolerance band just below zero has no decomposition of
    # its own; the f=0 certificate reconstructs it within tol and the verifier
    # measures the true gap against rho
    dec_params = params if params.f >= 0.0 else WernerParams(params.p, 0.0)
    dec = decompose_auto(dec_params)
    ver = verify_decomposition(rho, dec, tol)
    refinement = None
    if refine and ver.verdict:
        refined = refine_to_pure(dec, tol)
        refined_ver = verify_decomposition(rho, refined, tol * 10.0)
        refinement = RefinementSummary(
            n_terms=refined.n_terms,
            max_purity_deviation=refined_ver.max_purity_deviation,
            reconstruction_residual=refined_ver.reconstruction_residual,
        )
    report = SeparabilityReport(
        p=params.p,
        f=params.f,
        verdict="SEPARABLE" if ver.verdict else "INVALID",
        ppt=True,
        min_pt_eigenvalue=float(pt_min),
        witness=None,
        scheme=dec.scheme,
        scale=dec.scale,
        n_terms=dec.n_terms,
        verification=ver,
        invariance_residual=inv_res,
        seed=seed,
    )
    return report, refinement
