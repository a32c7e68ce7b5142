"""Command-line front end: evaluate series, verify identities, solve alphabets.

Exit codes: 0 when everything succeeded (and, for verify, every record
passed), 1 for failed verifications and domain/resource errors, 2 for
usage errors (unknown series or identity, malformed arguments).

Configuration precedence is flags > environment variables > config file >
defaults.  The environment understands AUTOSERIES_PRECISION_BITS and
AUTOSERIES_MAX_TERMS; AUTOSERIES_CONFIG (or --config) points at a JSON
file with any of the keys eps, precision_bits, max_terms, depth, format.
The effective snapshot is embedded in every report.
"""

from __future__ import annotations

import argparse
import ast
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .errors import AutoseriesError
from .evaluator import (
    COMPOSITE9_SERIES,
    DELTA_SERIES,
    F_SERIES,
    G_SERIES,
    GAMMA_SERIES,
    ODD_PLUS_MINUS_SERIES,
    PHI_SERIES,
    SeriesSpec,
    depth_for,
    eval_f_via_odd_split,
    eval_functional_equation,
    eval_naive,
    eval_odd_series,
    eval_phi_gamma,
)
from .identities import (
    IdentityKind,
    Route,
    builtin_registry,
    eval_series_spec,
    get_identity,
    verify,
)
from .precision import Precision
from .report import ReportDocument, RunConfig
from .result import EvalResult
from .sequences import CoefficientSequence
from .solver import AlphabetCase, mint_identity, solve_case


class UsageError(Exception):
    """Bad invocation: unknown name or malformed value (exit code 2)."""


# ---------------------------------------------------------------------------
# input parsing
# ---------------------------------------------------------------------------


def parse_real(text: str) -> float:
    """Parse a real number: 'p/q' exactly, decimals, or +-*/ expressions
    over rationals and the literal token sqrt2 (for irrational alphabets)."""
    text = text.strip()
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        pass
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise UsageError(f"cannot parse number {text!r}") from exc

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "sqrt2":
            return math.sqrt(2.0)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(
            node.op, (ast.Add, ast.Sub, ast.Mult, ast.Div)
        ):
            a, b = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if b == 0.0:
                raise UsageError(f"division by zero in {text!r}")
            return a / b
        raise UsageError(f"unsupported expression in number {text!r}")

    return walk(tree)


def _parse_s_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --s list {text!r}") from exc


# ---------------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------------


def _load_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    path = args.config or os.environ.get("AUTOSERIES_CONFIG")
    if path:
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file {path}: {exc}") from exc
        if "eps" in data and data["eps"] is not None:
            cfg.eps = float(data["eps"])
        if "precision_bits" in data:
            cfg.precision_bits = int(data["precision_bits"])
        if "max_terms" in data:
            cfg.max_terms = int(data["max_terms"])
        if "depth" in data and data["depth"] is not None:
            cfg.depth = int(data["depth"])
        if "format" in data:
            cfg.out_format = str(data["format"])
    env_bits = os.environ.get("AUTOSERIES_PRECISION_BITS")
    if env_bits:
        cfg.precision_bits = int(env_bits)
    env_terms = os.environ.get("AUTOSERIES_MAX_TERMS")
    if env_terms:
        cfg.max_terms = int(env_terms)
    if getattr(args, "eps", None) is not None:
        cfg.eps = args.eps
    if getattr(args, "precision_bits", None) is not None:
        cfg.precision_bits = args.precision_bits
    if getattr(args, "max_terms", None) is not None:
        cfg.max_terms = args.max_terms
    if getattr(args, "depth", None) is not None:
        cfg.depth = args.depth
    if getattr(args, "out_format", None) is not None:
        cfg.out_format = args.out_format
    return cfg


def _precision(cfg: RunConfig, eps: float) -> Precision:
    if cfg.precision_bits == 53:
        return Precision.for_eps(eps) if eps < 1e-12 else Precision(53, eps)
    return Precision(cfg.precision_bits, eps)


# ---------------------------------------------------------------------------
# eval subcommand
# ---------------------------------------------------------------------------

_EVAL_CATALOG = "f, g, phi, gamma, delta, odd-epsilon, composite9, digitsum:B, affine:A:B[:shifted]"


def _catalog_series(name: str) -> tuple[str, SeriesSpec | None]:
    """Resolve a catalog name to (canonical-name, spec); spec None for the
    two entries that are not plain SeriesSpec sums (phi/gamma handled by
    their dedicated evaluator)."""
    name = name.strip().lower()
    if name in ("f", "g", "phi", "gamma", "delta", "odd-epsilon", "composite9"):
        spec = {
            "f": F_SERIES,
            "g": G_SERIES,
            "phi": PHI_SERIES,
            "gamma": GAMMA_SERIES,
            "delta": DELTA_SERIES,
            "odd-epsilon": ODD_PLUS_MINUS_SERIES,
            "composite9": COMPOSITE9_SERIES,
        }[name]
        return name, spec
    if name.startswith("digitsum:"):
        try:
            base = int(name.split(":", 1)[1])
        except ValueError as exc:
            raise UsageError(f"bad digit-sum base in {name!r}") from exc
        if base < 2:
            raise UsageError(f"digit-sum base must be >= 2, got {base}")
        return name, SeriesSpec(CoefficientSequence.digit_sum(base))
    if name.startswith("affine:"):
        parts = name.split(":")
        if len(parts) not in (3, 4) or (len(parts) == 4 and parts[3] != "shifted"):
            raise UsageError(f"affine series syntax is affine:A:B[:shifted], got {name!r}")
        low, high = parse_real(parts[1]), parse_real(parts[2])
        from .evaluator import IndexShift

        shift = IndexShift.BY_ONE if len(parts) == 4 else IndexShift.NONE
        return name, SeriesSpec(CoefficientSequence.affine(low, high), shift)
    raise UsageError(f"unknown series {name!r}; catalog: {_EVAL_CATALOG}")


def _evaluate_catalog(
    name: str, spec: SeriesSpec | None, s: float, eps: float, method: str, cfg: RunConfig
) -> EvalResult:
    prec = _precision(cfg, eps)
    depth = cfg.depth
    if name == "f":
        if method in ("auto", "functional"):
            return eval_functional_equation(
                s, eps, depth=depth if depth is not None else depth_for(s, eps), prec=prec,
                max_terms=cfg.max_terms,
            )
        if method == "odd":
            return eval_f_via_odd_split(s, eps, prec, cfg.max_terms)
        return eval_naive(F_SERIES, s, eps, prec, cfg.max_terms)
    if name in ("phi", "gamma"):
        if method in ("auto", "functional"):
            return eval_phi_gamma(name, s, eps, prec, depth, cfg.max_terms)
        if method == "naive":
            return eval_naive(spec, s, eps, prec, cfg.max_terms)
        raise UsageError(f"method {method!r} does not apply to {name}")
    if name == "odd-epsilon":
        if method not in ("auto", "naive"):
            raise UsageError(f"method {method!r} does not apply to {name}")
        return eval_odd_series(s, eps, prec, cfg.max_terms)
    if name == "g" and method == "odd":
        return eval_series_spec(spec, s, eps, Route.ODD_SPLIT, prec, cfg.max_terms)
    if method == "naive":
        return eval_naive(spec, s, eps, prec, cfg.max_terms)
    if method == "auto":
        return eval_series_spec(spec, s, eps, Route.AUTO, prec, cfg.max_terms)
    raise UsageError(f"method {method!r} does not apply to {name}")


def _cmd_eval(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    eps = args.eps_pos if args.eps_pos is not None else (cfg.eps or 1e-8)
    name, spec = _catalog_series(args.series)
    result = _evaluate_catalog(name, spec, args.s, eps, args.method, cfg)
    if cfg.out_format == "json":
        payload = {
            "series": name,
            "s": repr(float(args.s)),
            "eps": repr(float(eps)),
            "value": repr(float(result.value)),
            "abs_error_bound": repr(float(result.abs_error_bound)),
            "terms_used": result.terms_used,
            "method": result.method.value,
        }
        rendered = json.dumps(payload, indent=2)
    else:
        rendered = "\n".join(
            (
                f"series : {name}   s = {args.s:g}   eps = {eps:g}",
                f"value  = {float(result.value)!r}",
                f"bound  = {result.abs_error_bound:.6e}",
                f"terms  = {result.terms_used}",
                f"method = {result.method.value}",
            )
        )
    print(rendered)
    if args.out:
        Path(args.out).write_text(rendered + "\n", encoding="utf-8")
    return 0


# ---------------------------------------------------------------------------
# verify subcommand
# ---------------------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    if args.all:
        idents = builtin_registry()
    elif args.ids:
        try:
            idents = [get_identity(i) for i in args.ids]
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from exc
    else:
        raise UsageError("verify needs identity ids or --all")

    s_override = _parse_s_list(args.s) if args.s else None
    doc = ReportDocument(config=cfg, version=__version__)
    for ident in idents:
        eps = cfg.eps if cfg.eps is not None else ident.default_eps
        prec = _precision(cfg, eps)
        if ident.kind is IdentityKind.DIRICHLET:
            s_values = s_override if s_override else list(ident.default_s)
            s_values = sorted(s_values)
        else:
            s_values = [None]
        for s in s_values:
            rec = verify(
                ident, s, eps, prec, cfg.max_terms,
                product_terms=min(10**6, cfg.max_terms),
            )
            doc.records.append(rec)
            status = "PASS" if rec.passed else "FAIL"
            s_txt = "-" if rec.s is None else f"{rec.s:g}"
            print(
                f"[{status}] {ident.identity_id:<22s} s={s_txt:<6s} "
                f"residual={rec.residual:.3e} bounds={rec.lhs_bound + rec.rhs_bound:.3e}"
            )
    if args.out:
        Path(args.out).write_text(doc.render(), encoding="utf-8")
        print(f"report written to {args.out}")
    sm = doc.summary
    print(f"summary: {sm['passed']}/{sm['total']} passed")
    return 0 if doc.all_passed else 1


# ---------------------------------------------------------------------------
# solve subcommand
# ---------------------------------------------------------------------------


def _cmd_solve(args: argparse.Namespace) -> int:
    cfg = _load_config(args)
    try:
        case = AlphabetCase(args.case.lower())
    except ValueError as exc:
        raise UsageError(
            f"unknown case {args.case!r}; choose zero, pows or powsminus2"
        ) from exc
    k = parse_real(args.k)
    l = parse_real(args.l)
    sol = solve_case(case, k, l)
    print(sol.describe())
    exit_code = 0
    if args.mint or args.verify_at_solution:
        ident = mint_identity(sol)
        print(f"minted : {ident.identity_id}")
        print(f"         {ident.description}")
        if args.verify_at_solution:
            eps = cfg.eps if cfg.eps is not None else 1e-6
            rec = verify(ident, sol.s, eps, _precision(cfg, eps), cfg.max_terms)
            status = "PASS" if rec.passed else "FAIL"
            print(
                f"[{status}] at s={sol.s:.12g}: residual={rec.residual:.3e} "
                f"bounds={rec.lhs_bound + rec.rhs_bound:.3e} terms={rec.terms_used}"
            )
            if not rec.passed:
                exit_code = 1
    return exit_code


# ---------------------------------------------------------------------------
# list subcommand
# ---------------------------------------------------------------------------


def _cmd_list(_args: argparse.Namespace) -> int:
    for ident in builtin_registry():
        domain = (
            ident.valid_s.describe()
            if ident.kind is IdentityKind.DIRICHLET
            else ident.kind.value
        )
        print(f"{ident.identity_id:<22s} [{domain:<9s}] eps<={ident.default_eps:g}  {ident.description}")
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--eps", type=float, default=None, help="absolute tolerance")
    parser.add_argument("--precision-bits", type=int, default=None, dest="precision_bits")
    parser.add_argument("--max-terms", type=int, default=None, dest="max_terms")
    parser.add_argument("--depth", type=int, default=None, help="functional-equation depth")
    parser.add_argument(
        "--format", choices=("json", "csv", "text"), default=None, dest="out_format"
    )
    parser.add_argument("--config", default=None, help="JSON config file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autoseries",
        description="Dirichlet series with digit-parity coefficients: certified "
        "evaluation, identity verification, alphabet solving.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help=f"evaluate a series ({_EVAL_CATALOG})")
    p_eval.add_argument("series")
    p_eval.add_argument("s", type=float)
    p_eval.add_argument("eps_pos", type=float, nargs="?", default=None, metavar="eps")
    p_eval.add_argument(
        "--method", choices=("auto", "naive", "odd", "functional"), default="auto"
    )
    p_eval.add_argument("--out", default=None, help="also write the result here")
    _add_common(p_eval)
    p_eval.set_defaults(func=_cmd_eval)

    p_verify = sub.add_parser("verify", help="verify identities and write a report")
    p_verify.add_argument("ids", nargs="*", help="identity ids (see `list`)")
    p_verify.add_argument("--all", action="store_true", help="verify the whole registry")
    p_verify.add_argument("--s", default=None, help="comma-separated exponents")
    p_verify.add_argument("--out", default=None, help="write the report here")
    _add_common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_solve = sub.add_parser("solve", help="solve an alphabet case for s")
    p_solve.add_argument("case", help="zero | pows | powsminus2")
    p_solve.add_argument("k")
    p_solve.add_argument("l")
    p_solve.add_argument("--mint", action="store_true", help="mint the identity")
    p_solve.add_argument(
        "--verify-at-solution", action="store_true", dest="verify_at_solution"
    )
    _add_common(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_list = sub.add_parser("list", help="print the identity registry")
    p_list.set_defaults(func=_cmd_list)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except AutoseriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
