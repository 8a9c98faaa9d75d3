"""Deterministic JSON and CSV emission.

Floating-point numbers are written as decimal text with 17 significant
digits, which round-trips binary64 exactly; the stdlib encoder cannot be
pinned to that format, hence the small emitter here. Dict insertion order
is the emission order, so identical inputs yield identical bytes.
"""
from __future__ import annotations

import json
import math
from typing import Iterable, List, Sequence

import numpy as np

from .decompose import Decomposition, ProductTerm
from .linalg import Spectrum
from .model import WernerParams
from .verify import SeparabilityReport, VerificationReport

__all__ = [
    "csv_text",
    "decomposition_doc",
    "doc_decomposition",
    "dumps",
    "format_float",
    "matrix_doc",
    "doc_matrix",
    "separability_doc",
    "spectrum_rows",
    "verification_doc",
]


def format_float(x) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("refusing to serialize a non-finite number")
    return format(x, ".17g")


def _scalar_text(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format_float(v)
    if isinstance(v, str):
        return json.dumps(v)
    raise TypeError(f"cannot serialize {type(v).__name__}")


def _is_scalar(v) -> bool:
    return v is None or isinstance(
        v, (bool, np.bool_, int, np.integer, float, np.floating, str)
    )


def _emit(obj, pad: str, step: str) -> str:
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = pad + step
        parts = [
            f"{inner}{json.dumps(str(k))}: {_emit(v, inner, step)}"
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (list, tuple)):
        items = list(obj)
        if all(_is_scalar(v) for v in items):
            return "[" + ", ".join(_scalar_text(v) for v in items) + "]"
        inner = pad + step
        parts = [f"{inner}{_emit(v, inner, step)}" for v in items]
        return "[\n" + ",\n".join(parts) + "\n" + pad + "]"
    return _scalar_text(obj)


def dumps(obj) -> str:
    """JSON text (no trailing newline); parseable by json.loads."""
    return _emit(obj, "", "  ")


# ---------------------------------------------------------------------------
# document builders
# ---------------------------------------------------------------------------


def matrix_doc(m) -> dict:
    m = np.asarray(m, dtype=complex)
    return {
        "dim": int(m.shape[0]),
        "re": [[float(x) for x in row] for row in m.real],
        "im": [[float(x) for x in row] for row in m.imag],
    }


def doc_matrix(doc) -> np.ndarray:
    re = np.array(doc["re"], dtype=float)
    im = np.array(doc["im"], dtype=float)
    m = re + 1j * im
    if m.shape != (doc["dim"], doc["dim"]):
        raise ValueError("matrix document shape disagrees with its dim field")
    return m


def spectrum_rows(spec: Spectrum) -> List[dict]:
    return [{"value": v, "multiplicity": m} for v, m in spec.pairs]


def decomposition_doc(dec: Decomposition) -> dict:
    return {
        "p": dec.params.p,
        "f": dec.params.f,
        "scheme": dec.scheme,
        "scale": dec.scale,
        "terms": [
            {
                "weight": t.weight,
                "label": t.label,
                "state_a": matrix_doc(t.state_a),
                "state_b": matrix_doc(t.state_b),
            }
            for t in dec.terms
        ],
    }


def doc_decomposition(doc) -> Decomposition:
    params = WernerParams(int(doc["p"]), float(doc["f"]))
    terms = tuple(
        ProductTerm(
            weight=float(t["weight"]),
            state_a=doc_matrix(t["state_a"]),
            state_b=doc_matrix(t["state_b"]),
            label=str(t["label"]),
        )
        for t in doc["terms"]
    )
    return Decomposition(params, str(doc["scheme"]), float(doc["scale"]), terms)


def verification_doc(rep: VerificationReport) -> dict:
    return {
        "convex_ok": rep.convex_ok,
        "min_weight": rep.min_weight,
        "weight_sum_error": rep.weight_sum_error,
        "positivity_ok": rep.positivity_ok,
        "min_component_eigenvalue": rep.min_component_eigenvalue,
        "reconstruction_residual": rep.reconstruction_residual,
        "purity_ok": rep.purity_ok,
        "max_purity_deviation": rep.max_purity_deviation,
        "verdict": rep.verdict,
        "diagnostics": list(rep.diagnostics),
    }


def separability_doc(rep: SeparabilityReport, refinement=None) -> dict:
    doc = {
        "p": rep.p,
        "f": rep.f,
        "verdict": rep.verdict,
        "ppt": rep.ppt,
        "min_pt_eigenvalue": rep.min_pt_eigenvalue,
        "witness": rep.witness,
        "scheme": rep.scheme,
        "scale": rep.scale,
        "n_terms": rep.n_terms,
        "verification": verification_doc(rep.verification) if rep.verification else None,
        "invariance_residual": rep.invariance_residual,
        "seed": rep.seed,
        "refined": None,
    }
    if refinement is not None:
        doc["refined"] = {
            "n_terms": refinement.n_terms,
            "max_purity_deviation": refinement.max_purity_deviation,
            "reconstruction_residual": refinement.reconstruction_residual,
        }
    return doc


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return format_float(v)
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return str(v)


def csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """Comma separator, '.' decimal point, LF endings, trailing newline."""
    lines = [",".join(header)]
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"
