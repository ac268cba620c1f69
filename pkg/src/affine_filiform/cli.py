"""Command-line front end.

Exit status: 0 when every check passed, 1 when a mathematical check failed
(the report is still written), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import catalog, connections as conn, formats, representations as reps
from .errors import AffineFiliformError, BadDimension, DimensionMismatch, ParseError, ShapeMismatch
from .exact_linalg import as_scalar, format_scalar, format_vector
from .lie_core import center, is_filiform, lower_central_series, model_filiform, nilpotency_index

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2

_INPUT_ERRORS = (ParseError, ShapeMismatch, DimensionMismatch, BadDimension, OSError)


class UsageError(Exception):
    pass


def _rational(text: str):
    if "." in text or "e" in text.lower():
        raise argparse.ArgumentTypeError(f"{text!r}: only exact rationals 'p/q' are accepted")
    try:
        return as_scalar(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-o", "--output", type=Path, help="write the produced document here")

    with_alg = argparse.ArgumentParser(add_help=False)
    with_alg.add_argument("--algebra", type=Path, help="algebra document (else the embedded one is used)")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--n", type=int, default=3)
    family.add_argument("--a", type=_rational, default=as_scalar(0))
    family.add_argument("--alpha", type=_rational, default=as_scalar(0))
    family.add_argument("--beta", type=_rational, default=as_scalar(0))

    p = argparse.ArgumentParser(prog="affine-filiform", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)
    sub.add_parser("check-algebra", parents=[common]).add_argument("input", type=Path)
    for verb in ("check-connection", "build-rho", "completeness"):
        sub.add_parser(verb, parents=[common, with_alg]).add_argument("input", type=Path)
    for verb in ("check-rep", "extract-connection", "nilpotentize", "weights"):
        sub.add_parser(verb, parents=[common, with_alg]).add_argument("input", type=Path)
    sub.add_parser("symplectic", parents=[common, with_alg]).add_argument("input", type=Path)
    cat = sub.add_parser("catalog", parents=[common, family])
    cat.add_argument("kind", choices=("heisenberg", "ln-algebra", "ln-rep", "ln-connection"))
    sub.add_parser("verify-paper", parents=[common, family])
    return p


def _read(path: Path) -> dict:
    return formats.loads(path.read_text())


def _algebra(args):
    if getattr(args, "algebra", None) is None:
        return None
    return formats.algebra_from_doc(_read(args.algebra))


def _emit(args, result: dict[str, Any], document: dict | None = None, table: str | None = None):
    if document is not None and args.output is not None:
        args.output.write_text(formats.dumps(document))
    if args.format == "structured":
        payload = dict(result)
        if document is not None and args.output is None:
            payload["document"] = document
        sys.stdout.write(formats.dumps(payload))
        return
    if table is not None:
        print(table)
    else:
        width = max((len(k) for k in result), default=0)
        for k, v in result.items():
            shown = v if isinstance(v, str) else json.dumps(v)
            print(f"{k.ljust(width)}  {shown}")
    if document is not None and args.output is None:
        sys.stdout.write(formats.dumps(document))


def _cmd_check_algebra(args) -> int:
    g = formats.algebra_from_doc(_read(args.input))
    nil, k = nilpotency_index(g)
    _emit(
        args,
        {
            "valid": True,
            "dim": g.dim,
            "central_series_dims": list(lower_central_series(g).dims),
            "nilpotent": nil,
            "nilpotency_index": k,
            "filiform": is_filiform(g),
            "center": [format_vector(v) for v in center(g).basis],
        },
    )
    return EXIT_OK


def _cmd_check_connection(args) -> int:
    c = formats.connection_from_doc(_read(args.input), _algebra(args))
    _emit(args, {"valid": True, "dim": c.algebra.dim})
    return EXIT_OK


def _cmd_check_rep(args) -> int:
    rho = formats.representation_from_doc(_read(args.input), _algebra(args))
    kernel = reps.rep_kernel(rho)
    result = {
        "valid": True,
        "module_dim": rho.module_dim,
        "faithful": kernel.is_zero(),
        "kernel": [format_vector(v) for v in kernel.basis],
        "nilpotent": reps.is_nilpotent_rep(rho),
    }
    if nilpotency_index(rho.algebra).is_nilpotent:
        result["faithful_by_center"] = reps.faithful_by_center(rho)
    _emit(args, result)
    return EXIT_OK


def _cmd_build_rho(args) -> int:
    c = formats.connection_from_doc(_read(args.input), _algebra(args))
    rho = conn.affine_rep(c)
    _emit(args, {"module_dim": rho.module_dim, "faithful": True}, formats.representation_to_doc(rho))
    return EXIT_OK


def _cmd_extract_connection(args) -> int:
    rho = formats.representation_from_doc(_read(args.input), _algebra(args))
    c = conn.connection_from_rep(rho)
    _emit(args, {"valid": True, "dim": c.algebra.dim}, formats.connection_to_doc(c))
    return EXIT_OK


def _cmd_completeness(args) -> int:
    c = formats.connection_from_doc(_read(args.input), _algebra(args))
    v = conn.is_complete(c, seed=args.seed)
    result: dict[str, Any] = {"complete": v.complete}
    if not v.complete:
        result.update(
            witness=format_vector(v.witness),
            power=v.power,
            coefficient=formats.poly_to_doc(v.coefficient) if args.format == "structured" else str(v.coefficient),
            witness_value=format_scalar(v.witness_value),
        )
    _emit(args, result)
    return EXIT_OK


def _cmd_nilpotentize(args) -> int:
    rho = formats.representation_from_doc(_read(args.input), _algebra(args))
    res = reps.nilpotentize(rho)
    out = res.representation
    ok = reps.is_nilpotent_rep(out) and reps.rep_kernel(out).is_zero()
    result = {
        "nilpotent_and_faithful": ok,
        "module_dim": out.module_dim,
        "weights": [format_vector(w) for w in res.decomposition.weights],
        "block_dims": list(res.decomposition.block_dims),
        "extra_dim": res.extra_dim,
        "change_of_basis": res.change_of_basis.to_strings(),
    }
    _emit(args, result, formats.representation_to_doc(out))
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _cmd_weights(args) -> int:
    rho = formats.representation_from_doc(_read(args.input), _algebra(args))
    wd = reps.weight_decomposition(rho)
    _emit(
        args,
        {
            "weights": [format_vector(w) for w in wd.weights],
            "block_dims": list(wd.block_dims),
            "blocks": [[format_vector(v) for v in s.basis] for s in wd.subspaces],
        },
    )
    return EXIT_OK


def _cmd_symplectic(args) -> int:
    sf = formats.symplectic_from_doc(_read(args.input), _algebra(args))
    res = conn.symplectic_connection(sf)
    verdict = conn.is_complete(res.connection, seed=args.seed)
    _emit(
        args,
        {"closed": True, "nondegenerate": True, "convention": res.convention, "complete": verdict.complete},
        formats.connection_to_doc(res.connection),
    )
    return EXIT_OK


def _params(args) -> catalog.LnFamilyParams:
    return catalog.LnFamilyParams(args.n, args.a, args.alpha, args.beta)


def _cmd_catalog(args) -> int:
    p = _params(args)
    if args.kind == "heisenberg":
        if p.n != 3:
            raise UsageError("catalog heisenberg needs --n 3")
        doc = formats.connection_to_doc(catalog.heisenberg_connection(p))
    elif args.kind == "ln-algebra":
        doc = formats.algebra_to_doc(model_filiform(p.n))
    elif args.kind == "ln-rep":
        doc = formats.representation_to_doc(catalog.ln_representation(p))
    else:
        doc = formats.connection_to_doc(catalog.ln_connection(p))
    _emit(args, {"kind": args.kind, **p.as_dict()}, doc)
    return EXIT_OK


def _cmd_verify_paper(args) -> int:
    report = catalog.verify_paper(_params(args), seed=args.seed)
    doc = report.as_dict()
    if args.format == "structured":
        _emit(args, doc, doc)
    else:
        _emit(args, {}, doc if args.output is not None else None, table=report.table())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


_COMMANDS = {
    "check-algebra": _cmd_check_algebra,
    "check-connection": _cmd_check_connection,
    "check-rep": _cmd_check_rep,
    "build-rho": _cmd_build_rho,
    "extract-connection": _cmd_extract_connection,
    "completeness": _cmd_completeness,
    "nilpotentize": _cmd_nilpotentize,
    "weights": _cmd_weights,
    "symplectic": _cmd_symplectic,
    "catalog": _cmd_catalog,
    "verify-paper": _cmd_verify_paper,
}


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.verb](args)
    except (UsageError, *_INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AffineFiliformError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        if args.format == "structured":
            sys.stdout.write(formats.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return EXIT_CHECK_FAILED


def main() -> None:
    sys.exit(run())
