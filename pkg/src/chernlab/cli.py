"""Command line interface: ``chernlab {verify,chi,classify,genus,curvature,blowup}``.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import curvature as cv
from .cohomology import integrate
from .genera import GENERA, chern_cpn, genus_eval, pontryagin_cpn
from .hrr import HrrProblem, ParityError, chi_genus_route, classify_c1
from .series import DEFAULT_ORDER
from .surface import blowup_c1_top
from .verify import VerifyConfig, run_verification

MAX_N = 40


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "json"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chernlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--smax", type=int, default=12)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out", help="also write the JSON report to this path")
    _add_format(p)

    p = sub.add_parser("chi", help="chi(M, L^s) by the genus route")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p.add_argument("--lambda", dest="lam", type=int, help="c1(M) = lambda h (default n+1)")
    _add_format(p)

    p = sub.add_parser("classify", help="integer solutions of (s+1)...(s+n) = n!")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("genus", help="characteristic series coefficient and genus of CP^m")
    p.add_argument("--kind", choices=sorted(GENERA), required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    _add_format(p)

    p = sub.add_parser("curvature", help="Monte Carlo check of the Kahler-Einstein identities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=-1.0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    _add_format(p)

    p = sub.add_parser("blowup", help="int c1^n of a point blowup of an n-fold with c1 = 0")
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    return parser


def _emit(args, result: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(result, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _render_table(report) -> str:
    rows = []
    for c in report.checks:
        status = "PASS" if c.passed else "FAIL"
        mode = "exact" if c.exact else f"tol={c.tolerance:g}"
        rows.append(f"{c.id}  {status}  {mode:<10} {c.paper_anchor}")
        rows.append(f"      expected: {c.expected}")
        rows.append(f"      actual:   {c.actual}")
    s = report.summary
    rows.append(f"{s['passed']}/{s['total']} checks passed, {s['failed']} failed")
    return "\n".join(rows)


def cmd_verify(args, parser) -> int:
    if args.nmax < 1 or args.smax < 0 or args.trials < 1 or args.order < 12 or args.tol <= 0:
        parser.error("need --nmax >= 1, --smax >= 0, --trials >= 1, --order >= 12, --tol > 0")
    cfg = VerifyConfig(
        order=args.order, nmax=args.nmax, smax=args.smax, seed=args.seed, trials=args.trials, tolerance=args.tol
    )
    report = run_verification(cfg)
    payload = report.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    if args.format == "json":
        sys.stdout.write(payload)
    else:
        print(_render_table(report))
    return 0 if report.ok else 1


def cmd_chi(args, parser) -> int:
    if not 1 <= args.n <= MAX_N:
        parser.error(f"--n must be in 1..{MAX_N}")
    lam = args.n + 1 if args.lam is None else args.lam
    try:
        value = chi_genus_route(HrrProblem(args.n, lam, args.s))
    except ParityError as exc:
        parser.error(str(exc))
    anchor = "chi(M,F) = int e^(c1(F)) Td(M)"
    _emit(
        args,
        {"n": args.n, "lambda": lam, "s": args.s, "chi": str(value), "anchor": anchor},
        [f"chi(M, L^{args.s}) with c1 = {lam}h, n = {args.n}: {value}", f"anchor: {anchor}"],
    )
    return 0


def cmd_classify(args, parser) -> int:
    if not 1 <= args.n <= MAX_N:
        parser.error(f"--n must be in 1..{MAX_N}")
    cl = classify_c1(args.n)
    anchor = "n! = (s+n)...(s+1)"
    _emit(
        args,
        {
            "n": args.n,
            "s": list(cl.s_values),
            "lambda": list(cl.lambdas),
            "certified": cl.certified,
            "anchor": anchor,
        },
        [
            f"s in {{{', '.join(map(str, sorted(cl.s_values, reverse=True)))}}}",
            f"lambda in {{{', '.join(map(str, sorted(cl.lambdas, reverse=True)))}}}",
            f"search window certified: {cl.certified}",
            f"anchor: {anchor}",
        ],
    )
    return 0


def cmd_genus(args, parser) -> int:
    if args.degree < 0 or args.degree > args.order:
        parser.error("--degree must be in 0..--order")
    q = GENERA[args.kind](args.order)
    coeff = q.coefficient(args.degree)
    if args.kind == "todd":
        m = max(args.degree, 1)
        value = integrate(genus_eval(q, chern_cpn(m)))
    else:
        m = max(2 * args.degree, 1)
        value = integrate(genus_eval(q, pontryagin_cpn(m)))
    anchor = "A-hat = prod (sqrt(g)/2)/sinh(sqrt(g)/2)" if args.kind == "ahat" else (
        "tau = (1/3) int p1" if args.kind == "L" else "Td = e^(c1/2) A-hat"
    )
    _emit(
        args,
        {"kind": args.kind, "degree": args.degree, "coefficient": str(coeff), "cpm": m, "genus": str(value),
         "anchor": anchor},
        [f"{args.kind} series coefficient of degree {args.degree}: {coeff}",
         f"{args.kind} genus of CP^{m}: {value}", f"anchor: {anchor}"],
    )
    return 0


def cmd_curvature(args, parser) -> int:
    if not 2 <= args.n <= 12 or args.trials < 1:
        parser.error("--n must be in 2..12 and --trials >= 1")
    norm_res = contr_res = 0.0
    min_gap = float("inf")
    for t in range(args.trials):
        R = cv.make_einstein(cv.random_kahler_curvature(args.n, args.seed * 1_000_003 + t), args.lam)
        norm_res = max(norm_res, cv.norm_identity_residual(R, args.lam))
        contr_res = max(contr_res, cv.contraction_identity_residual(R) / (1 + cv.norm_rm(R)))
        min_gap = min(min_gap, cv.chern_gap(R, args.lam))
    model_gap = cv.chern_gap(cv.constant_hsc_model(args.n, args.lam / (args.n + 1)), args.lam)
    anchor = "|Rm0|^2 = |Rm|^2 - 2 lam^2 n/(n+1)"
    result = {
        "n": args.n, "lambda": args.lam, "trials": args.trials, "seed": args.seed,
        "max_norm_residual": norm_res, "max_contraction_residual": contr_res,
        "min_chern_gap": min_gap, "model_chern_gap": model_gap, "anchor": anchor,
    }
    _emit(
        args,
        result,
        [f"max relative residual of the norm identity: {norm_res:.3e}",
         f"max scaled residual of the contraction identity: {contr_res:.3e}",
         f"min Chern gap density over generic Einstein tensors: {min_gap:.6g}",
         f"Chern gap density of the constant-curvature model: {model_gap:.3e}",
         f"anchor: {anchor}"],
    )
    return 0


def cmd_blowup(args, parser) -> int:
    if not 2 <= args.n <= MAX_N:
        parser.error(f"--n must be in 2..{MAX_N}")
    value = blowup_c1_top(args.n)
    cpn = integrate(chern_cpn(args.n).component(1) ** args.n)
    anchor = "c1(M~) = pi^* c1(M) - 2[E]"
    _emit(
        args,
        {"n": args.n, "blowup_c1_top": str(value), "cpn_c1_top": str(cpn), "differs": value != cpn,
         "anchor": anchor},
        [f"int c1(M~)^{args.n} = {value}", f"int c1(CP^{args.n})^{args.n} = {cpn}", f"anchor: {anchor}"],
    )
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "chi": cmd_chi,
    "classify": cmd_classify,
    "genus": cmd_genus,
    "curvature": cmd_curvature,
    "blowup": cmd_blowup,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
