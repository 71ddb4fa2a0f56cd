"""Command-line surface: eval, roots, predict, scan, verify.

Exit codes: 0 success, 1 verification disagreement, 2 domain error,
3 evaluator accuracy failure.  Data goes to stdout, diagnostics to stderr;
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import __version__
from .bernoulli import IndeterminateSign, even_roots
from .hurwitz import (
    AccuracyError,
    EvalParams,
    PoleError,
    StripError,
    hurwitz_zeta,
    hurwitz_zeta_detailed,
)
from .zero_analysis import (
    BOUNDARY,
    YES,
    locate_zeros,
    predict_zero,
    predict_zero_explicit,
    uniqueness_check,
    verify_theorem,
)

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_DOMAIN = 2
EXIT_ACCURACY = 3


@dataclass(frozen=True)
class RunConfig:
    """Tolerances and grid settings echoed into every JSON report."""

    target_abs_error: float = 1e-10
    grid_points: int = 512
    refine_tol: float = 1e-10
    exclusion_delta: float = 1e-3
    digits: int = 12
    deterministic: bool = True

    def eval_params(self) -> EvalParams:
        return EvalParams(target_abs_error=self.target_abs_error)


def _fmt(x: float, digits: int) -> str:
    return f"{float(x):.{digits}g}"


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _json_header(config: RunConfig) -> dict:
    return {"version": __version__, "config": asdict(config)}


def _config_from_args(args) -> RunConfig:
    cfg = RunConfig(
        target_abs_error=args.tol,
        grid_points=args.grid,
        refine_tol=args.tol,
        exclusion_delta=args.delta,
        digits=args.digits,
    )
    if cfg.target_abs_error <= 0 or cfg.refine_tol <= 0:
        raise ValueError("tolerances must be positive")
    if cfg.exclusion_delta <= 0:
        raise ValueError("exclusion delta must be positive")
    return cfg


def _cmd_eval(args) -> int:
    cfg = _config_from_args(args)
    res = hurwitz_zeta_detailed(args.sigma, args.a, cfg.eval_params())
    d = cfg.digits
    if args.format == "json":
        out = _json_header(cfg)
        out.update(sigma=args.sigma, a=args.a, value=res.value,
                   error_bound=res.error_bound)
        print(json.dumps(out, sort_keys=True))
    elif args.format == "csv":
        print("sigma,a,value,error_bound")
        print(f"{_fmt(args.sigma, d)},{_fmt(args.a, d)},"
              f"{_fmt(res.value, d)},{_fmt(res.error_bound, 3)}")
    elif args.format == "plot-xy":
        print(f"# zeta(sigma, a={_fmt(args.a, d)})")
        print(f"{_fmt(args.sigma, d)} {_fmt(res.value, d)}")
    else:
        print(f"zeta({_fmt(args.sigma, d)}, {_fmt(args.a, d)}) = "
              f"{_fmt(res.value, d)}  (error bound {_fmt(res.error_bound, 3)})")
    return EXIT_OK


def _cmd_roots(args) -> int:
    cfg = _config_from_args(args)
    n = args.n
    if n < 2:
        raise ValueError("root query requires n >= 2")
    d = cfg.digits
    if n % 2 == 1:
        b_minus, b_plus = 0.0, 0.5
        note = "exact: odd-index roots in [0,1/2) and [1/2,1) are 0 and 1/2"
    else:
        pair = even_roots(n, cfg.refine_tol)
        b_minus, b_plus = pair.b_minus, pair.b_plus
        note = ""
    if args.format == "json":
        out = _json_header(cfg)
        out.update(n=n, b_minus=b_minus, b_plus=b_plus, note=note)
        print(json.dumps(out, sort_keys=True))
    elif args.format == "csv":
        print("n,b_minus,b_plus,note")
        print(f"{n},{_fmt(b_minus, d)},{_fmt(b_plus, d)},{note}")
    elif args.format == "plot-xy":
        print(f"# roots of Bernoulli polynomial n={n}")
        print(f"{_fmt(b_minus, d)} 0")
        print(f"{_fmt(b_plus, d)} 0")
    else:
        print(f"b{n}^- = {_fmt(b_minus, d)}")
        print(f"b{n}^+ = {_fmt(b_plus, d)}")
        if note:
            print(note)
    return EXIT_OK


def _cmd_predict(args) -> int:
    cfg = _config_from_args(args)
    pred = predict_zero(args.N, args.a)
    d = cfg.digits
    explicit = None
    explicit_note = ""
    if args.N >= 0 and 0.0 < args.a < 1.0:
        try:
            explicit = predict_zero_explicit(args.N, args.a)
        except IndeterminateSign as exc:
            explicit_note = f"explicit form indeterminate: {exc}"
    mismatch = (explicit is not None and pred.exists != BOUNDARY
                and explicit != (pred.exists == YES))
    if args.format == "json":
        out = _json_header(cfg)
        out.update(N=pred.N, a=pred.a, exists=pred.exists,
                   b_left=_frac_str(pred.b_left),
                   b_right=_frac_str(pred.b_right),
                   explicit=explicit, explicit_note=explicit_note,
                   mismatch=mismatch)
        print(json.dumps(out, sort_keys=True))
    elif args.format == "csv":
        print("N,a,exists,B_left,B_right,explicit,mismatch")
        print(f"{pred.N},{_fmt(pred.a, d)},{pred.exists},"
              f"{_frac_str(pred.b_left)},{_frac_str(pred.b_right)},"
              f"{explicit},{mismatch}")
    else:
        print(f"interval (-{pred.N + 1}, {-pred.N}): {pred.exists}")
        for idx, val in ((pred.N + 1, pred.b_left),
                         (pred.N + 2, pred.b_right)):
            # exact p/q only when it is readable; float a inputs produce
            # denominators around 2^52 that help nobody at a terminal
            if val.denominator <= 10 ** 12:
                print(f"B_{idx}(a) = {_frac_str(val)} = {_fmt(val, d)}")
            else:
                print(f"B_{idx}(a) = {_fmt(val, d)}")
        if explicit is not None:
            print(f"explicit range classification: {explicit}")
        if explicit_note:
            print(explicit_note)
        if mismatch:
            print("WARNING: explicit form disagrees with the product sign")
    return EXIT_OK


def _cmd_scan(args) -> int:
    cfg = _config_from_args(args)
    d = cfg.digits
    params = cfg.eval_params()
    if args.curve:
        left = -args.N - 1
        right = -args.N
        margin = min(1e-4, cfg.refine_tol * 10.0)
        lo = left + margin
        hi = right - (1e-2 if args.N == -1 else margin)
        print(f"# zeta(sigma, a={_fmt(args.a, d)}) on ({left}, {right})")
        step = (hi - lo) / (cfg.grid_points - 1)
        for i in range(cfg.grid_points):
            s = lo + i * step
            print(f"{_fmt(s, d)} {_fmt(hurwitz_zeta(s, args.a, params), d)}")
        return EXIT_OK
    zeros = locate_zeros(args.N, args.a, cfg.grid_points, cfg.refine_tol,
                         params)
    if args.format == "json":
        out = _json_header(cfg)
        out.update(N=args.N, a=args.a,
                   zeros=[asdict(z) for z in zeros])
        print(json.dumps(out, sort_keys=True))
    elif args.format == "csv":
        print("N,a,sigma,bracket_halfwidth,residual")
        for z in zeros:
            print(f"{args.N},{_fmt(args.a, d)},{_fmt(z.sigma, d)},"
                  f"{_fmt(z.bracket_halfwidth, 3)},{_fmt(z.residual, 3)}")
    elif args.format == "plot-xy":
        print(f"# zeros of zeta(sigma, a={_fmt(args.a, d)}) "
              f"in (-{args.N + 1}, {-args.N})")
        for z in zeros:
            print(f"{_fmt(z.sigma, d)} 0")
    else:
        if not zeros:
            print(f"no zeros found in (-{args.N + 1}, {-args.N})")
        for z in zeros:
            print(f"zero at sigma = {_fmt(z.sigma, d)}  "
                  f"(bracket +/- {_fmt(z.bracket_halfwidth, 3)}, "
                  f"residual {_fmt(z.residual, 3)})")
    return EXIT_OK


def _a_grid_from_step(astep: float):
    if not 0.0 < astep < 1.0:
        raise ValueError("a-step must satisfy 0 < astep < 1")
    grid = []
    k = 1
    while k * astep < 1.0 - 1e-12:
        grid.append(k * astep)
        k += 1
    return grid


def _verify_csv(report, digits: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["N", "a", "B_left", "B_right", "predicted", "zeros_found",
                "sigmas", "agrees", "note"])
    for c in report.cases:
        sigmas = ";".join(_fmt(z.sigma, digits) for z in c.zeros)
        agrees = "" if c.agrees is None else str(c.agrees).lower()
        w.writerow([c.N, _fmt(c.a, digits), _frac_str(c.b_left),
                    _frac_str(c.b_right), c.predicted, len(c.zeros),
                    sigmas, agrees, c.note])
    return buf.getvalue()


def _cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    d = cfg.digits
    if args.nmin < -1 or args.nmax < args.nmin:
        raise ValueError("need -1 <= nmin <= nmax")
    grid = _a_grid_from_step(args.astep)
    report = verify_theorem(grid, args.nmin, args.nmax,
                            exclusion_delta=cfg.exclusion_delta,
                            grid_points=cfg.grid_points,
                            refine_tol=cfg.refine_tol,
                            params=cfg.eval_params())
    uniq_rows = []
    uniq_bad = 0
    if args.uniqueness:
        m_lo = max(2, math.ceil(max(args.nmin, 0) / 2))
        m_hi = max(m_lo, (args.nmax - 1) // 2)
        for m in range(m_lo, m_hi + 1):
            for a in grid:
                count = uniqueness_check(m, a, cfg.grid_points,
                                         cfg.refine_tol, cfg.eval_params())
                uniq_rows.append((m, a, count))
                if count != 1:
                    uniq_bad += 1
    disagree = report.n_disagree + uniq_bad
    if args.format == "json":
        out = _json_header(cfg)
        out.update(
            nmin=args.nmin, nmax=args.nmax, astep=args.astep,
            agree=report.n_agree, disagree=report.n_disagree,
            skipped=report.n_skipped,
            cases=[{
                "N": c.N, "a": c.a,
                "B_left": _frac_str(c.b_left),
                "B_right": _frac_str(c.b_right),
                "predicted": c.predicted,
                "zeros": [z.sigma for z in c.zeros],
                "agrees": c.agrees, "note": c.note,
            } for c in report.cases],
            uniqueness=[{"M": m, "a": a, "count": n}
                        for (m, a, n) in uniq_rows],
        )
        print(json.dumps(out, sort_keys=True))
    elif args.format == "csv":
        sys.stdout.write(_verify_csv(report, d))
    else:
        print(f"theorem sweep N in [{args.nmin}, {args.nmax}], "
              f"a step {_fmt(args.astep, d)}")
        for c in report.cases:
            sigmas = ";".join(_fmt(z.sigma, d) for z in c.zeros)
            flag = ("ok" if c.agrees else
                    "skip" if c.agrees is None else "DISAGREE")
            print(f"  N={c.N:>2} a={_fmt(c.a, 6):>8} "
                  f"predicted={c.predicted:<8} zeros={len(c.zeros)} "
                  f"[{sigmas}] {flag}")
        print(f"agree={report.n_agree} disagree={report.n_disagree} "
              f"skipped={report.n_skipped}")
        for (m, a, n) in uniq_rows:
            mark = "ok" if n == 1 else "FAIL"
            print(f"  uniqueness M={m} a={_fmt(a, 6)}: count={n} {mark}")
    return EXIT_DISAGREE if disagree else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hzeta",
        description="Real zeros of the Hurwitz zeta function: evaluation, "
                    "Bernoulli root data, predictions, and verification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--digits", type=int, default=12,
                       help="significant digits in numeric output")
        p.add_argument("--format", choices=["table", "csv", "json",
                                            "plot-xy"], default="table")
        p.add_argument("--tol", type=float, default=1e-10,
                       help="evaluator target / refinement tolerance")
        p.add_argument("--grid", type=int, default=512,
                       help="scan grid points per interval")
        p.add_argument("--delta", type=float, default=1e-3,
                       help="boundary exclusion distance for sweeps")

    p = sub.add_parser("eval", help="evaluate zeta(sigma, a)")
    p.add_argument("--sigma", type=float, required=True)
    p.add_argument("--a", type=float, required=True)
    common(p)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("roots", help="roots of the nth Bernoulli polynomial")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("predict", help="zero-existence prediction for "
                                       "(-N-1, -N)")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--a", type=float, required=True)
    common(p)
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("scan", help="locate zeros numerically")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--curve", action="store_true",
                   help="emit the scanned (sigma, zeta) curve instead")
    common(p)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("verify", help="sweep predictions against the "
                                      "numeric harness")
    p.add_argument("--nmin", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--astep", type=float, required=True)
    p.add_argument("--uniqueness", action="store_true",
                   help="also count zeros per deep interval [-2M-2, -2M)")
    common(p)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (PoleError, StripError, IndeterminateSign, ValueError,
            TypeError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except AccuracyError as exc:
        print(f"accuracy failure: {exc}", file=sys.stderr)
        return EXIT_ACCURACY


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
