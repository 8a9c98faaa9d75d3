"""Command-line front end.

Exit codes: 0 on success (or a verified certificate), 1 on usage errors,
2 on verification failures and out-of-range parameters, with a
machine-readable JSON diagnostic on stderr. Output is byte-identical for
identical (argv, seed); the WERNER_SEED environment variable overrides
--seed wherever a seed is consumed.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import serialize
from .decompose import (
    COMMUTING_CLASS,
    PER_STRING,
    class_decomposition,
    decompose_auto,
    per_string_decomposition,
)
from .errors import WernerError
from .linalg import hermitian_eigenvalues
from .model import (
    WernerParams,
    invariance_residual,
    ppt_check,
    pt_spectrum_closed_form,
    random_unitary,
    spectrum_closed_form,
    spectrum_via_transform,
    werner_dense,
)
from .partition import build_partition, validate_partition
from .pauli import format_label
from .verify import refine_to_pure, separability_report, verify_decomposition

__all__ = ["main"]

_SCHEME_FLAGS = {"auto": "auto", "per-string": PER_STRING, "class": COMMUTING_CLASS}
_MAX_P = 5  # dense pair operators reach 1024x1024 here; plenty for a desk run
_JACOBI_CLI_MAX_P = 3  # full-state Jacobi in `spectrum` stays desk-fast up to here


@dataclass(frozen=True)
class CliConfig:
    p: int
    f: float
    scheme: str
    seed: int
    tol: float
    output: Optional[str]
    fmt: str


class _Parser(argparse.ArgumentParser):
    # usage problems must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="werner",
        description=(
            "Construct Werner states on 2^p x 2^p systems, compute spectra "
            "and partial-transpose spectra, and build verified product-state "
            "decompositions."
        ),
    )
    sub = parser.add_subparsers(dest="cmd", parser_class=_Parser)

    def add_common(sp, with_f=True, with_scheme=False):
        sp.add_argument("--p", type=int, required=True, choices=range(1, _MAX_P + 1))
        if with_f:
            sp.add_argument("--f", type=float, required=True)
        if with_scheme:
            sp.add_argument(
                "--scheme", choices=sorted(_SCHEME_FLAGS), default="auto"
            )
        sp.add_argument("--seed", type=int, default=42)
        sp.add_argument("--tol", type=float, default=1e-9)
        sp.add_argument("--output", default=None, help="path, or stdout by default")

    sp = sub.add_parser("build", help="emit the dense state matrix")
    add_common(sp)
    sp.add_argument("--format", choices=["json"], default="json")

    sp = sub.add_parser("spectrum", help="eigenvalues by independent routes")
    add_common(sp)
    sp.add_argument(
        "--check-invariance",
        action="store_true",
        help="probe U(x)U invariance with one seeded random unitary",
    )
    sp.add_argument("--format", choices=["json"], default="json")

    sp = sub.add_parser("ppt", help="partial-transpose positivity test")
    add_common(sp)
    sp.add_argument("--format", choices=["json"], default="json")

    sp = sub.add_parser("partition", help="maximal commuting classes")
    sp.add_argument("--p", type=int, required=True, choices=range(1, _MAX_P + 1))
    sp.add_argument("--output", default=None)
    sp.add_argument("--format", choices=["text", "json"], default="text")

    sp = sub.add_parser("decompose", help="build a product-state decomposition")
    add_common(sp, with_scheme=True)
    sp.add_argument("--format", choices=["json"], default="json")

    sp = sub.add_parser("verify", help="verify a decomposition document")
    sp.add_argument("--input", required=True, help="path to a decomposition JSON, or - for stdin")
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--output", default=None)
    sp.add_argument("--format", choices=["json"], default="json")

    sp = sub.add_parser("refine", help="split mixed factors into pure ones")
    sp.add_argument("--input", default=None, help="decomposition JSON path, or - for stdin")
    sp.add_argument("--p", type=int, choices=range(1, _MAX_P + 1))
    sp.add_argument("--f", type=float)
    sp.add_argument("--scheme", choices=sorted(_SCHEME_FLAGS), default="auto")
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--output", default=None)
    sp.add_argument("--format", choices=["json"], default="json")

    sp = sub.add_parser("report", help="end-to-end separability report")
    add_common(sp)
    sp.add_argument("--refine", action="store_true")
    sp.add_argument("--format", choices=["json", "text"], default="json")

    sp = sub.add_parser("sweep", help="tabulate an f range as CSV")
    sp.add_argument("--p", type=int, required=True, choices=range(1, _MAX_P + 1))
    sp.add_argument("--f-start", type=float, required=True)
    sp.add_argument("--f-end", type=float, required=True)
    sp.add_argument("--f-step", type=float, required=True)
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--output", default=None)

    return parser


def _seed_of(args) -> int:
    env = os.environ.get("WERNER_SEED")
    if env is not None:
        return int(env)
    return getattr(args, "seed", 42)


def _config(args) -> CliConfig:
    return CliConfig(
        p=args.p,
        f=getattr(args, "f", 0.0),
        scheme=getattr(args, "scheme", "auto"),
        seed=_seed_of(args),
        tol=getattr(args, "tol", 1e-9),
        output=getattr(args, "output", None),
        fmt=getattr(args, "format", "json"),
    )


def _write(args, text: str) -> None:
    path = getattr(args, "output", None)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _diag(kind: str, message: str, **extra) -> None:
    doc = {"error": kind, "message": message}
    doc.update(extra)
    sys.stderr.write(serialize.dumps(doc) + "\n")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_build(args) -> int:
    cfg = _config(args)
    params = WernerParams(cfg.p, cfg.f)
    doc = {"p": params.p, "f": params.f, "state": serialize.matrix_doc(werner_dense(params))}
    _write(cfg, serialize.dumps(doc) + "\n")
    return 0


def _cmd_spectrum(args) -> int:
    cfg = _config(args)
    params = WernerParams(cfg.p, cfg.f)
    closed = spectrum_closed_form(params)
    transform = spectrum_via_transform(params)
    routes = [closed, transform]
    jacobi = None
    if params.p <= _JACOBI_CLI_MAX_P:
        jacobi = hermitian_eigenvalues(werner_dense(params))
        routes.append(jacobi)
    else:
        params.require_physical()
    agree = all(
        a.isclose(b, 1e-9) for i, a in enumerate(routes) for b in routes[i + 1 :]
    )
    unit_trace_error = max(abs(s.weighted_sum() - 1.0) for s in routes)
    doc = {
        "p": params.p,
        "f": params.f,
        "closed_form": serialize.spectrum_rows(closed),
        "transform": serialize.spectrum_rows(transform),
        "jacobi": serialize.spectrum_rows(jacobi) if jacobi is not None else None,
        "unit_trace_error": unit_trace_error,
        "agree": agree,
    }
    if args.check_invariance:
        rho = werner_dense(params)
        doc["seed"] = cfg.seed
        doc["invariance_residual"] = invariance_residual(
            rho, random_unitary(params.d, cfg.seed)
        )
    _write(cfg, serialize.dumps(doc) + "\n")
    return 0


def _cmd_ppt(args) -> int:
    cfg = _config(args)
    params = WernerParams(cfg.p, cfg.f)
    params.require_physical()
    spec = pt_spectrum_closed_form(params)
    ok = ppt_check(params, cfg.tol)
    doc = {
        "p": params.p,
        "f": params.f,
        "verdict": "PPT" if ok else "NOT PPT",
        "ppt": ok,
        "min_pt_eigenvalue": spec.min(),
        "pt_spectrum": serialize.spectrum_rows(spec),
    }
    _write(cfg, serialize.dumps(doc) + "\n")
    if not ok:
        _diag("NotPPT", f"minimum partial-transpose eigenvalue {spec.min():.6e} < 0",
              p=params.p, f=params.f, min_pt_eigenvalue=spec.min())
        return 2
    return 0


def _cmd_partition(args) -> int:
    part = build_partition(args.p)
    result = validate_partition(part)
    if args.format == "json":
        doc = {
            "p": args.p,
            "n_classes": len(part.classes),
            "class_size": len(part.classes[0].members),
            "valid": result.ok,
            "classes": [list(cls.labels()) for cls in part.classes],
            "generators": [
                [format_label(g) for g in cls.generators] for cls in part.classes
            ],
        }
        _write(args, serialize.dumps(doc) + "\n")
    else:
        lines = [" ".join(cls.labels()) for cls in part.classes]
        _write(args, "\n".join(lines) + "\n")
    if not result.ok:
        _diag("InvalidPartition", "; ".join(result.problems[:5]), p=args.p)
        return 2
    return 0


def _cmd_decompose(args) -> int:
    cfg = _config(args)
    params = WernerParams(cfg.p, cfg.f)
    scheme = _SCHEME_FLAGS[cfg.scheme]
    if scheme == "auto":
        dec = decompose_auto(params)
    elif scheme == PER_STRING:
        dec = per_string_decomposition(params)
    else:
        dec = class_decomposition(params)
    _write(cfg, serialize.dumps(serialize.decomposition_doc(dec)) + "\n")
    return 0


def _cmd_verify(args) -> int:
    import json as _json

    doc = _json.loads(_read_input(args.input))
    dec = serialize.doc_decomposition(doc)
    target = werner_dense(dec.params)
    rep = verify_decomposition(target, dec, args.tol)
    out = {"p": dec.params.p, "f": dec.params.f, "scheme": dec.scheme}
    out.update(serialize.verification_doc(rep))
    _write(args, serialize.dumps(out) + "\n")
    if not rep.verdict:
        _diag("VerificationFailed", "; ".join(rep.diagnostics) or "verdict false",
              p=dec.params.p, f=dec.params.f)
        return 2
    return 0


def _cmd_refine(args) -> int:
    import json as _json

    if args.input is not None:
        dec = serialize.doc_decomposition(_json.loads(_read_input(args.input)))
    else:
        if args.p is None or args.f is None:
            _diag("MissingInput", "refine needs --input or both --p and --f")
            return 1
        params = WernerParams(args.p, args.f)
        scheme = _SCHEME_FLAGS[args.scheme]
        if scheme == "auto":
            dec = decompose_auto(params)
        elif scheme == PER_STRING:
            dec = per_string_decomposition(params)
        else:
            dec = class_decomposition(params)
    refined = refine_to_pure(dec, args.tol)
    _write(args, serialize.dumps(serialize.decomposition_doc(refined)) + "\n")
    return 0


def _cmd_report(args) -> int:
    cfg = _config(args)
    params = WernerParams(cfg.p, cfg.f)
    rep, refinement = separability_report(
        params, seed=cfg.seed, tol=cfg.tol, refine=args.refine
    )
    doc = serialize.separability_doc(rep, refinement)
    if cfg.fmt == "text":
        lines = [f"{k}: {serialize.dumps(v) if isinstance(v, dict) else v}" for k, v in doc.items()]
        _write(cfg, "\n".join(lines) + "\n")
    else:
        _write(cfg, serialize.dumps(doc) + "\n")
    if rep.verdict != "SEPARABLE":
        _diag(
            "NotSeparable" if rep.verdict == "ENTANGLED" else "VerificationFailed",
            f"verdict {rep.verdict}",
            p=params.p,
            f=params.f,
            witness=rep.witness,
        )
        return 2
    return 0


_SWEEP_HEADER = [
    "f",
    "min_eig_rho",
    "min_eig_pt",
    "ppt",
    "scheme",
    "n_terms",
    "min_component_eig",
    "reconstruction_residual",
    "verdict",
]


def _cmd_sweep(args) -> int:
    if args.f_step <= 0:
        _diag("InvalidRange", "f-step must be positive")
        return 2
    if args.f_start > args.f_end or args.f_start < -1.0 or args.f_end > 1.0:
        _diag("InvalidRange", "sweep range must satisfy -1 <= start <= end <= 1")
        return 2
    params_list = []
    k = 0
    while True:
        f = args.f_start + k * args.f_step
        if f > args.f_end + 1e-12:
            break
        params_list.append(WernerParams(args.p, min(f, 1.0)))
        k += 1

    rows = []
    for params in params_list:
        spec = spectrum_closed_form(params)
        pt = pt_spectrum_closed_form(params)
        ok = ppt_check(params, args.tol)
        if params.f >= 0.0:
            dec = decompose_auto(params)
            ver = verify_decomposition(werner_dense(params), dec, args.tol)
            rows.append(
                [
                    params.f,
                    spec.min(),
                    pt.min(),
                    ok,
                    dec.scheme,
                    dec.n_terms,
                    ver.min_component_eigenvalue,
                    ver.reconstruction_residual,
                    "SEPARABLE" if ver.verdict else "INVALID",
                ]
            )
        else:
            rows.append(
                [params.f, spec.min(), pt.min(), ok, None, 0, None, None, "ENTANGLED"]
            )
    _write(args, serialize.csv_text(_SWEEP_HEADER, rows))
    return 0


_DISPATCH = {
    "build": _cmd_build,
    "spectrum": _cmd_spectrum,
    "ppt": _cmd_ppt,
    "partition": _cmd_partition,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "refine": _cmd_refine,
    "report": _cmd_report,
    "sweep": _cmd_sweep,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.cmd is None:
        parser.print_usage(sys.stderr)
        return 1
    try:
        return _DISPATCH[args.cmd](args)
    except WernerError as exc:
        extra = {}
        if getattr(exc, "valid_range", None) is not None:
            extra["valid_range"] = list(exc.valid_range)
        if getattr(exc, "f", None) is not None:
            extra["f"] = exc.f
        _diag(type(exc).__name__, str(exc), **extra)
        return 2
    except OSError as exc:
        sys.stderr.write(f"werner: i/o error: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
