"""Command-line front end: ``macdonald-sum <verb> ...``.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 internal error.
Everything is buffered and written once, so failures leave no partial output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import combinat, hecke, macdonald, mpstrace, oracle, suites
from .polyring import specialize_params, to_json_dict, to_latex, to_text

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

FAMILIES = ("macdonald", "hall-littlewood", "jack", "q-whittaker", "monomial", "nonsym-f")


class InputError(Exception):
    """Bad user input; maps to exit code 2."""


class Failure(Exception):
    """Verification failed; carries the serialized counterexample."""

    def __init__(self, payload: str):
        super().__init__(payload)
        self.payload = payload


def _parse_lambda(text: str) -> tuple:
    try:
        parts = combinat.parse_parts(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return parts


def _resolve_n(parts: tuple, n: int | None) -> int:
    nonzero = sum(1 for p in parts if p)
    if n is None:
        n = max(len(parts), 1)
    if n < 1:
        raise InputError("n must be positive")
    if nonzero > n or len(parts) > n and any(parts[n:]):
        raise InputError(f"lambda={parts} has more than n={n} nonzero parts")
    return n


def _pad(parts, n):
    return tuple(parts[:n]) + (0,) * max(0, n - len(parts))


def _render(f, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(to_json_dict(f), sort_keys=True)
    if fmt == "latex":
        return to_latex(f)
    return to_text(f)


def _compute_poly(family: str, parts: tuple, n: int, mode: str, strategy: str):
    if family == "nonsym-f":
        if len(parts) != n:
            raise InputError(f"nonsym-f needs exactly n={n} entries, got {len(parts)}")
        return macdonald.compose_f(parts)
    if not combinat.is_partition(parts):
        raise InputError(f"{parts} is not a partition")
    lam = _pad(parts, n)
    if family == "macdonald":
        return macdonald.macdonald_P(lam, n, strategy)
    if family == "q-whittaker":
        return macdonald.q_whittaker_P(lam, n, strategy)
    if family == "jack":
        return macdonald.jack_P(lam, n)
    if family == "hall-littlewood":
        return macdonald.hall_littlewood(lam, n, mode)
    return macdonald.monomial_limit(lam, n)


def cmd_compute(args) -> str:
    parts = _parse_lambda(args.lam)
    n = _resolve_n(parts, args.n)
    f = _compute_poly(args.family, parts, n, args.mode, args.strategy)
    return _render(f, args.format)


def _parse_assignment(items) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise InputError(f"expected name=value, got {item!r}")
        name, value = (s.strip() for s in item.split("=", 1))
        if name not in ("q", "t"):
            raise InputError(f"unknown parameter {name!r}")
        if value in ("q", "t"):
            out[name] = value
            continue
        try:
            out[name] = Fraction(value)
        except ValueError as exc:
            raise InputError(f"bad value {value!r} for {name}") from exc
    return out


def cmd_specialize(args) -> str:
    parts = _parse_lambda(args.lam)
    n = _resolve_n(parts, args.n)
    assignment = _parse_assignment(args.set)
    f = _compute_poly("macdonald", parts, n, "hecke_sum", "memoized")
    try:
        g = specialize_params(f, assignment)
    except ZeroDivisionError as exc:
        raise InputError(str(exc)) from exc
    return _render(g, args.format)


def cmd_verify(args) -> str:
    try:
        report = suites.run_suite(
            args.suite, seed=args.seed, max_weight=args.max_weight, n=args.n, r=args.r, samples=args.samples
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    header = f"# suite={report['suite']} seed={report['seed']} checks={report['count']} failures={report['failures']}"
    if not report["passed"]:
        raise Failure(header + "\n" + json.dumps(report["first_failure"], sort_keys=True, default=str))
    if args.summary:
        report = {k: v for k, v in report.items() if k != "checks"}
    return header + "\n" + json.dumps(report, sort_keys=True, default=str)


def cmd_oracle_compare(args) -> str:
    parts = _parse_lambda(args.lam)
    n = _resolve_n(parts, args.n)
    if not combinat.is_partition(parts):
        raise InputError(f"{parts} is not a partition")
    lam = _pad(parts, n)
    if args.variant == "jack":
        ours = macdonald.jack_P(lam, n)
    else:
        ours = macdonald.macdonald_P(lam, n)
    ref = oracle.gram_schmidt_P(lam, n, args.variant)
    diff = ours - ref
    record = {"lambda": list(lam), "n": n, "variant": args.variant, "equal": diff.is_zero()}
    if diff.is_zero():
        return json.dumps(record, sort_keys=True)
    record["formula"] = to_json_dict(ours)
    record["oracle"] = to_json_dict(ref)
    raise Failure(json.dumps(record, sort_keys=True))


def _parse_number(text: str):
    try:
        return Fraction(text)
    except ValueError as exc:
        raise InputError(f"bad number {text!r}") from exc


def cmd_trace_check(args) -> str:
    t, q = _parse_number(args.t), _parse_number(args.q)
    try:
        trunc = mpstrace.FockTruncation(args.cutoff, t, q)
        value, tail = mpstrace.fock_trace(args.b, args.c, (args.a, args.qexp), trunc)
        exact = mpstrace.fock_trace_closed_form(args.b, args.c, (args.a, args.qexp), t, q)
    except (ValueError, mpstrace.DivergentTraceError) as exc:
        raise InputError(str(exc)) from exc
    err = abs(float(value) - float(exact))
    record = {
        "b": args.b,
        "c": args.c,
        "d": [args.a, args.qexp],
        "t": str(t),
        "q": str(q),
        "cutoff": args.cutoff,
        "truncated": float(value),
        "closed_form": str(exact),
        "abs_err": err,
        "tail_bound": float(tail),
    }
    if err > float(tail) + 1e-15:
        raise Failure(json.dumps(record, sort_keys=True))
    return json.dumps(record, sort_keys=True)


def cmd_bench(args) -> str:
    lambdas = [_parse_lambda(s) for s in args.lam]
    rows = []
    for parts in lambdas:
        n = _resolve_n(parts, args.n)
        if not combinat.is_partition(parts):
            raise InputError(f"{parts} is not a partition")
        lam = _pad(parts, n)
        outputs = {}
        for scenario in args.scenario:
            macdonald.clear_caches()
            hecke.counters.reset()
            start = time.perf_counter()
            for _ in range(args.repeat):
                outputs[scenario] = macdonald.macdonald_P(lam, n, scenario)
            elapsed = (time.perf_counter() - start) / args.repeat
            rows.append(
                {
                    "lambda": ",".join(map(str, lam)),
                    "n": n,
                    "scenario": scenario,
                    "seconds": round(elapsed, 6),
                    "terms": len(outputs[scenario]),
                    "generator_calls": hecke.counters.generator_calls // args.repeat,
                }
            )
        first = next(iter(outputs.values()))
        if any(v != first for v in outputs.values()):
            raise AssertionError(f"scenarios disagree for lambda={lam}")
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    return json.dumps(rows, indent=1)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="macdonald-sum", description="Symmetric functions from Hecke-operator sums.")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("compute", help="compute a polynomial")
    c.add_argument("--lambda", dest="lam", required=True, help="parts, e.g. 3,1,0")
    c.add_argument("--n", type=int)
    c.add_argument("--family", choices=FAMILIES, default="macdonald")
    c.add_argument("--format", choices=("text", "json", "latex"), default="text")
    c.add_argument("--mode", choices=("hecke_sum", "standard_sum"), default="hecke_sum", help="Hall-Littlewood route")
    c.add_argument("--strategy", choices=macdonald.STRATEGIES, default="memoized")
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("specialize", help="specialize q and/or t in P_lambda")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--n", type=int)
    s.add_argument("--set", action="append", metavar="NAME=VALUE", help="e.g. q=0, t=1/2, q=t")
    s.add_argument("--format", choices=("text", "json", "latex"), default="text")
    s.set_defaults(func=cmd_specialize)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=suites.SUITES, required=True)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--max-weight", type=int, default=5)
    v.add_argument("--n", type=int, default=4)
    v.add_argument("--r", type=int, default=3)
    v.add_argument("--samples", type=int)
    v.add_argument("--summary", action="store_true", help="omit the per-check list")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle-compare", help="compare against Gram-Schmidt")
    o.add_argument("--lambda", dest="lam", required=True)
    o.add_argument("--n", type=int)
    o.add_argument("--variant", choices=("macdonald", "jack"), default="macdonald")
    o.set_defaults(func=cmd_oracle_compare)

    tc = sub.add_parser("trace-check", help="truncated Fock trace against its closed form")
    tc.add_argument("--b", type=int, required=True)
    tc.add_argument("--c", type=int, required=True)
    tc.add_argument("--a", type=int, default=0, help="power of the t-weight")
    tc.add_argument("--qexp", type=int, default=1, help="power of the q-weight")
    tc.add_argument("--t", default="1/2")
    tc.add_argument("--q", default="1/3")
    tc.add_argument("--cutoff", type=int, default=mpstrace.DEFAULT_CUTOFF)
    tc.set_defaults(func=cmd_trace_check)

    b = sub.add_parser("bench", help="time the evaluation strategies")
    b.add_argument("--lambda", dest="lam", action="append", help="repeatable; default 3,2,1 and 4,2,1,0")
    b.add_argument("--n", type=int)
    b.add_argument("--scenario", action="append", choices=macdonald.STRATEGIES)
    b.add_argument("--repeat", type=int, default=1)
    b.add_argument("--format", choices=("json", "csv"), default="json")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.verb == "bench":
        args.lam = args.lam or ["3,2,1", "4,2,1,0"]
        args.scenario = args.scenario or list(macdonald.STRATEGIES)
        if args.repeat < 1:
            print("error: --repeat must be positive", file=sys.stderr)
            return EXIT_INPUT
    try:
        out = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Failure as exc:
        print(exc.payload)
        return EXIT_FAIL
    except Exception as exc:  # anything else is our bug
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
