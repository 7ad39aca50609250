"""Command line front end.

Results go to stdout; progress and diagnostics go to stderr.  With --json,
results are emitted as one JSON object per line instead of prose.  Exit
status: 0 on success, 1 when a verification-style command finds failures,
2 on bad usage or a guard violation.
"""

from __future__ import annotations

import argparse
import json
import sys

from .analysis import brute_lcm_degree, q_set
from .denominators import (
    capital_denominator,
    d_n,
    denominator_record,
    l_exponent,
    min_degree_with_l,
)
from .exactmath import legendre_vp_factorial, vp
from .goldberg import METHODS, WordSpec, coeff_alg2, coeff_word
from .refdata import DN_REFERENCE, MIN_DEGREE_REFERENCE
from .verify import run_suite, suite_names, table1_computed, table2_computed
from .witness import witness_runs

__all__ = ["main", "run"]


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _parse_runs(text: str) -> tuple[int, ...]:
    try:
        runs = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"bad run list {text!r}; expected comma-separated integers")
    return runs


def _fraction_str(c) -> str:
    return f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)


def _runs_str(runs: tuple[int, ...]) -> str:
    return ",".join(map(str, runs))


def _cmd_coeff(args) -> int:
    if (args.word is None) == (args.runs is None):
        raise ValueError("give exactly one of --word or --runs")
    if args.word is not None:
        word = WordSpec.from_letters(args.word)
    else:
        word = WordSpec(not args.b_first, _parse_runs(args.runs))
    c = coeff_word(word, method=args.method)
    label = f"runs={_runs_str(word.runs)} {'A' if word.a_first else 'B'}-first degree={word.degree}"
    if args.digits_only:
        sign = "0" if c == 0 else ("-" if c < 0 else "+")
        payload = {
            "runs": list(word.runs),
            "a_first": word.a_first,
            "degree": word.degree,
            "method": args.method,
            "sign": sign,
            "num_digits": len(str(abs(c.numerator))),
            "den_digits": len(str(c.denominator)),
        }
        text = (f"{label} method={args.method}\n"
                f"c: sign {sign}, {payload['num_digits']} numerator digits, "
                f"{payload['den_digits']} denominator digits")
    else:
        payload = {
            "runs": list(word.runs),
            "a_first": word.a_first,
            "degree": word.degree,
            "method": args.method,
            "coeff": _fraction_str(c),
        }
        text = f"{label} method={args.method}\nc = {_fraction_str(c)}"
    _emit(args, payload, text)
    return 0


def _cmd_denom(args) -> int:
    rec = denominator_record(args.n)
    lines = [f"d_{rec.n} = {rec.dn}", f"{rec.n}! * d_{rec.n} = {rec.capital}"]
    if args.factor:
        if rec.factorization:
            product = " * ".join(
                f"{p}^{e}" if e > 1 else str(p) for p, e in rec.factorization
            )
        else:
            product = "1"
        lines.append(f"d_{rec.n} = {product}")
    payload = {
        "n": rec.n,
        "d_n": rec.dn,
        "capital": rec.capital,
        "factorization": [list(pair) for pair in rec.factorization],
    }
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_witness(args) -> int:
    w = witness_runs(args.n, args.p)
    print(f"computing the degree-{args.n} coefficient ...", file=sys.stderr, flush=True)
    c = coeff_alg2(w.word)
    valuation = vp(c.denominator, args.p)
    target = legendre_vp_factorial(args.n, args.p) + w.l
    ok = valuation == target
    status = "PASS" if ok else "FAIL"
    payload = {
        "n": args.n,
        "p": args.p,
        "l": w.l,
        "m": w.m,
        "branch": w.branch.value,
        "runs": list(w.runs),
        "valuation": valuation,
        "target": target,
        "pass": ok,
    }
    text = (f"n={args.n} p={args.p}: branch={w.branch.value} l={w.l} m={w.m} "
            f"runs={_runs_str(w.runs)}\n"
            f"v_{args.p}(denominator) = {valuation}, target = {target}: {status}")
    _emit(args, payload, text)
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    records = run_suite(args.suite, args.max_n)
    for rec in records:
        if args.json:
            print(json.dumps(rec.as_dict()))
        else:
            print(rec.line())
    passed = sum(rec.passed for rec in records)
    print(f"{args.suite}: {passed}/{len(records)} checks passed", file=sys.stderr)
    return 0 if passed == len(records) else 1


def _cmd_qset(args) -> int:
    found = q_set(args.n, args.p, method=args.method)
    l = l_exponent(args.n, args.p)
    payload = {
        "n": args.n,
        "p": args.p,
        "l": l,
        "partitions": [list(part.parts) for part in found],
    }
    noun = "partition" if len(found) == 1 else "partitions"
    lines = [f"Q({args.n}, {args.p}): {len(found)} extreme {noun}, l = {l}"]
    lines.extend(f"  {_runs_str(part.parts)}" for part in found)
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_lcm(args) -> int:
    brute = brute_lcm_degree(args.n)
    formula = capital_denominator(args.n)
    ok = brute == formula
    payload = {"n": args.n, "brute": brute, "formula": formula, "pass": ok}
    text = (f"lcm of degree-{args.n} denominators = {brute}\n"
            f"{args.n}! * d_{args.n} = {formula}\n"
            f"agreement: {'PASS' if ok else 'FAIL'}")
    _emit(args, payload, text)
    return 0 if ok else 1


def _cmd_table(args) -> int:
    if args.name == "dn":
        for n, value in enumerate(DN_REFERENCE, start=1):
            _emit(args, {"n": n, "d_n": value}, f"{n} {value}")
        return 0
    if args.name == "t1":
        for row, c, e, a_hat in table1_computed():
            payload = {
                "n": row.n, "p": row.p, "l": row.l, "m": row.m,
                "runs": list(row.runs), "coeff": _fraction_str(c),
                "e": e, "a": a_hat,
            }
            text = (f"n={row.n} p={row.p} l={row.l} m={row.m} "
                    f"runs={_runs_str(row.runs)} c={_fraction_str(c)} e={e} a={a_hat}")
            _emit(args, payload, text)
        return 0
    if args.name == "t2":
        for row, c, e, a_hat in table2_computed():
            payload = {
                "n": row.n, "p": row.p, "l": row.l, "m": row.m,
                "runs": list(row.runs),
                "num_digits": len(str(abs(c.numerator))),
                "den_digits": len(str(c.denominator)),
                "e": e, "a": a_hat,
            }
            base = (f"n={row.n} p={row.p} l={row.l} m={row.m} "
                    f"runs={_runs_str(row.runs)} "
                    f"digits={payload['num_digits']}/{payload['den_digits']} "
                    f"e={e} a={a_hat}")
            if not args.digits_only:
                payload["coeff"] = _fraction_str(c)
                base += f"\n  c = {_fraction_str(c)}"
            _emit(args, payload, base)
        return 0
    # mindegree
    for p, l in sorted(MIN_DEGREE_REFERENCE):
        value = min_degree_with_l(p, l)
        _emit(args, {"p": p, "l": l, "n": value}, f"p={p} l={l} n={value}")
    return 0


def _cmd_oracle_check(args) -> int:
    args.suite = "oracle-agreement"
    return _cmd_verify(args)


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subparser from clobbering a --json given before the
    # subcommand (subparsers copy their own defaults back onto the namespace);
    # run() fills in False when the flag never appears.
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON object per result line")
    parser = argparse.ArgumentParser(
        prog="bchcoeff",
        parents=[shared],
        description="Denominators and extreme words of the log(e^A e^B) series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", parents=[shared],
                       help="coefficient of one word of the series")
    p.add_argument("--word", help="letters, e.g. AABAB")
    p.add_argument("--runs", help="run lengths, e.g. 14,12")
    p.add_argument("--b-first", action="store_true",
                   help="with --runs: the word starts with B")
    p.add_argument("--method", choices=METHODS, default="alg2")
    p.add_argument("--digits-only", action="store_true",
                   help="print size and sign instead of the full rational")
    p.set_defaults(func=_cmd_coeff)

    p = sub.add_parser("denom", parents=[shared],
                       help="the common denominator at one degree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--factor", action="store_true", help="also print the factorization")
    p.set_defaults(func=_cmd_denom)

    p = sub.add_parser("witness", parents=[shared],
                       help="construct an extreme word and check its valuation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", parents=[shared], help="run a named check suite")
    p.add_argument("--suite", required=True, choices=[*suite_names(), "all"])
    p.add_argument("--max-n", type=int, default=None,
                   help="override the suite's default sweep bound")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("qset", parents=[shared],
                       help="all partitions attaining the extreme valuation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--method", choices=("alg2", "goldberg"), default="alg2")
    p.set_defaults(func=_cmd_qset)

    p = sub.add_parser("lcm", parents=[shared],
                       help="brute-force lcm of one degree vs the formula")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_lcm)

    p = sub.add_parser("table", parents=[shared], help="print a reference table")
    p.add_argument("--name", required=True, choices=("dn", "t1", "t2", "mindegree"))
    p.add_argument("--digits-only", action="store_true",
                   help="with t2: omit the full coefficients")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("oracle-check", parents=[shared],
                       help="compare every route against the series expansion")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=_cmd_oracle_check)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
