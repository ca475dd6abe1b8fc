"""Command-line driver: ``verify`` runs claim suites, ``compute`` prints values."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from .algebra import AlgebraError, format_element, parse_element
from .bundles import PHI, PSI, BundleError, holo_kernel, projector
from .haar import ORACLE_MAX_DEGREE, haar, haar_oracle
from .qcoeff import CoefficientError, eval_at, format_coeff
from .report import FAIL, NOTED
from .sigma_model import energy, qtrace, top, top_unnormalized
from .suites import DEFAULT_Q_SAMPLES, SUITES, RunConfig, build_registry, run_claim

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _config(args) -> RunConfig:
    claims = [c for part in (args.claims or []) for c in part.split(",") if c]
    return RunConfig(seed=args.seed, max_n=args.max_n, sample_count=args.samples,
                     degree_cap=args.degree_cap, q_samples=tuple(args.q or DEFAULT_Q_SAMPLES),
                     output="json" if args.json else "text", claims=claims)


def _select(cfg: RunConfig, suite: str) -> list:
    suites = SUITES if suite == "all" else (suite,)
    claims = build_registry(cfg, suites)
    if cfg.claims:
        claims = [c for c in claims if any(c.id == f or c.id.startswith(f + ".") for f in cfg.claims)]
    return claims


def _run_one(cfg: RunConfig, suite: str, claim_id: str):
    """Worker entry point: rebuild the registry and run a single claim."""
    claim = next(c for c in build_registry(cfg, (suite,)) if c.id == claim_id)
    return run_claim(claim, cfg)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CPQ_THREADS", "1")))
    except ValueError:
        return 1


def cmd_verify(args) -> int:
    cfg = _config(args)
    claims = _select(cfg, args.suite)
    if args.list_claims:
        for c in sorted(claims, key=lambda c: c.id):
            print(f"{c.id}\t{c.anchor}")
        return EXIT_OK
    if not claims:
        print("no claims selected", file=sys.stderr)
        return EXIT_ERROR

    reports, errors = [], []
    workers = min(_threads(), len(claims))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {c.id: pool.submit(_run_one, cfg, c.suite, c.id) for c in claims}
            for cid, fut in futures.items():
                try:
                    reports.extend(fut.result())
                except Exception as exc:  # reported, never swallowed
                    errors.append(f"{cid}: {type(exc).__name__}: {exc}")
    else:
        for c in claims:
            try:
                reports.extend(run_claim(c, cfg))
            except Exception as exc:
                errors.append(f"{c.id}: {type(exc).__name__}: {exc}")

    reports.sort(key=lambda r: r.claim)
    if cfg.output == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.line())
            if r.status != "pass":
                for d in r.details:
                    print(f"    {d}")
        failed = sum(r.status == FAIL for r in reports)
        noted = sum(r.status == NOTED for r in reports)
        print(f"{len(reports)} reports: {len(reports) - failed - noted} pass, "
              f"{noted} discrepancy-noted, {failed} fail")
    for e in errors:
        print(f"internal error in {e}", file=sys.stderr)
    if errors:
        return EXIT_ERROR
    return EXIT_FAIL if any(r.status == FAIL for r in reports) else EXIT_OK


def _print_value(value, qs) -> None:
    print(format_coeff(value))
    for q0 in qs or ():
        v = eval_at(value, q0)
        print(f"  at q={q0}: {v} ~ {float(v):.12g}")


def _kind_n(args) -> tuple:
    if args.n is None:
        raise ValueError("--n is required")
    m = abs(args.n)
    return (m, PHI) if args.kind == PHI else (-m, PSI)


def cmd_compute(args) -> int:
    what = args.what
    if what == "haar":
        if args.oracle is not None:
            if not 0 <= args.oracle <= ORACLE_MAX_DEGREE:
                raise ValueError(f"oracle degree must be in 0..{ORACLE_MAX_DEGREE}")
            table = haar_oracle(args.oracle)
            rows = [{"monomial": str(m), "value": format_coeff(v)} for m, v in table.items()]
            print(json.dumps(sorted(rows, key=lambda r: r["monomial"]), indent=2))
            return EXIT_OK
        if args.element is None:
            raise ValueError("--element or --oracle is required")
        _print_value(haar(parse_element(args.element)), args.q)
    elif what == "qtrace":
        v = qtrace(projector(*_kind_n(args)))
        if v.is_scalar():
            _print_value(v.scalar_part(), args.q)
        else:
            print(format_element(v))
    elif what == "energy":
        _print_value(energy(projector(*_kind_n(args))), args.q)
    elif what == "top":
        n, kind = _kind_n(args)
        _print_value(top(projector(n, kind)), args.q)
        print(f"note: normalized with the factor 1/2; without it the value is "
              f"{format_coeff(top_unnormalized(n, kind))}")
    elif what == "projector":
        p = projector(*_kind_n(args))
        print(f"{p.kind} n={abs(p.n)} size={p.size} left weight={-abs(p.n) if p.kind == PHI else abs(p.n)}")
        print("weights: " + ", ".join(format_coeff(w) for w in p.weights))
        if args.show:
            for i, j, x in p.gauge_matrix.entries():
                print(f"E[{i},{j}] = {format_element(x)}")
        print(f"idempotent: {p.idempotency_residual().is_zero()}")
        print(f"self-adjoint: {p.adjoint_residual().is_zero()}")
    elif what == "holo":
        if args.n is None:
            raise ValueError("--n (the left weight) is required")
        trunc = args.truncation if args.truncation is not None else abs(args.n) + 2
        k = holo_kernel(args.n, trunc)
        print(f"dimension: {k.dimension}")
        print(f"stable at truncation {trunc + 2}: {k.stable}")
        for b in k.basis:
            print(f"  {format_element(b)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cpq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run claim suites")
    v.add_argument("suite", choices=(*SUITES, "all"))
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--samples", type=int, default=None, help="override per-claim sample counts")
    v.add_argument("--degree-cap", type=int, default=24)
    v.add_argument("--q", type=_fraction, action="append", help="numeric sample point (repeatable)")
    v.add_argument("--json", action="store_true")
    v.add_argument("--claims", action="append", help="comma-separated claim ids or id prefixes")
    v.add_argument("--list-claims", action="store_true")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("compute", help="print a single exact value")
    c.add_argument("what", choices=("haar", "qtrace", "energy", "top", "projector", "holo"))
    c.add_argument("--n", type=int)
    c.add_argument("--kind", choices=(PHI, PSI), default=PHI)
    c.add_argument("--element")
    c.add_argument("--oracle", type=int, help="dump the oracle table up to this degree as JSON")
    c.add_argument("--q", type=_fraction, action="append", help="also evaluate at this q")
    c.add_argument("--show", action="store_true")
    c.add_argument("--truncation", type=int)
    c.set_defaults(func=cmd_compute)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except (ValueError, CoefficientError, AlgebraError, BundleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
