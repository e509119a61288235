"""Command-line front end: verification sweeps, sequence export and series checks.

Exit codes: 0 pass (conjecture findings included), 1 violation of a proven
claim, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import dataclasses
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import central_divisibility as cd
from . import congruences as cg
from . import floor_lemmas as fl
from . import precision as hp
from . import sequences as sq
from . import wz
from .report import ClaimReport, OracleMismatch

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _thm11(b):
    return [cd.verify_quotient_even(b["n_max"]),
            cd.check_quotient_valuations(b.get("valuation_n_max", min(b["n_max"], 500)))]


def _wz(name):
    def run(b):
        pair = getattr(wz, name)   # looked up at call time so mutations take effect
        return [wz.check_wz_difference(pair, b["n_max"], b["k_max"]), wz.telescoping_report(pair, b["N_max"])]
    return run


def _div(fn, name):
    def run(b):
        return [fn(b["N_max"]), wz.verify_g_bookkeeping(getattr(wz, name), b["N_max"]),
                wz.verify_parity_facts(b["N_max"])]
    return run


CLAIMS = {
    "thm1.1": _thm11,
    "thm1.1-1.2": lambda b: [cd.verify_triple(b["n_max"], b["k_max"])],
    "thm1.1-1.3": lambda b: [cd.verify_catalan(b["n_max"], b["k_max"], b.get("include_n0", False))],
    "thm1.2-1.4": _div(wz.verify_bauer_divisibility, "BAUER"),
    "thm1.2-1.5": _div(wz.verify_ramanujan_divisibility, "RAMANUJAN"),
    "ineq2.1": lambda b: [fl.verify_q_inequality(b["m_max"])],
    "ineq2.2": lambda b: [fl.verify_triple_inequality(b["m_max"])],
    "ineq2.3": lambda b: [fl.verify_catalan_inequality(b["m_max"])],
    "wz-I": _wz("BAUER"),
    "wz-II": _wz("RAMANUJAN"),
    "conj1.1i": lambda b: [sq.check_s_parity_and_mod(b["n_max"], b.get("mod_n_max"))],
    "conj1.1ii": lambda b: [cg.check_s_weighted_sum(b.get("p_mod_max", b["p_max"]))],
    "conj1.2": lambda b: [cg.check_t_prime_residue(b["p_max"])],
    "conj1.3i": lambda b: [wz.verify_a_integrality(b["n_max"])],
    "conj1.3ii": lambda b: [cg.check_205_supercongruences(b["p_max"])],
    "conj1.4i": lambda b: [cg.check_28k_supercongruences(b["p_max"])],
    "conj1.4ii-div": lambda b: [wz.verify_28k_divisibility(b["n_max"])],
    "sp-mod-p3": lambda b: [cg.check_sp_congruence(b["p_max"])],
}

_QUICK = {"n_max": 50, "k_max": 50, "m_max": 50, "p_max": 37, "N_max": 50}

PROFILES = {
    "quick": {
        "claims": {cid: dict(_QUICK) for cid in CLAIMS} | {"thm1.1-1.3": _QUICK | {"include_n0": True}},
        "digits": 20,
        "samples": 1,
    },
    "full": {
        "claims": {
            "thm1.1": {"n_max": 2000, "valuation_n_max": 500},
            "thm1.1-1.2": {"n_max": 300, "k_max": 300},
            "thm1.1-1.3": {"n_max": 300, "k_max": 300, "include_n0": True},
            "thm1.2-1.4": {"N_max": 500},
            "thm1.2-1.5": {"N_max": 500},
            "ineq2.1": {"m_max": 100},
            "ineq2.2": {"m_max": 100},
            "ineq2.3": {"m_max": 100},
            "wz-I": {"n_max": 100, "k_max": 100, "N_max": 200},
            "wz-II": {"n_max": 100, "k_max": 100, "N_max": 200},
            "conj1.1i": {"n_max": 2048, "mod_n_max": 1000},
            "conj1.1ii": {"p_max": 199},
            "conj1.2": {"p_max": 97},
            "conj1.3i": {"n_max": 300},
            "conj1.3ii": {"p_max": 97},
            "conj1.4i": {"p_max": 97},
            "conj1.4ii-div": {"n_max": 200},
            "sp-mod-p3": {"p_max": 97},
        },
        "digits": 30,
        "samples": 3,
    },
}


# ----------------------------------------------------------------- mutations
# Test-only: deliberately broken variants, used to show that ``all`` notices.

@contextlib.contextmanager
def _swap(module, name, value):
    old = getattr(module, name)
    setattr(module, name, value)
    try:
        yield
    finally:
        setattr(module, name, old)


def _doubled_ramanujan_g(n, k):
    return 2 * wz.ramanujan_G(n, k)


MUTATIONS = {
    # the companion function with a spurious factor 2: the difference equation breaks
    "wz-G": lambda: _swap(wz, "RAMANUJAN", dataclasses.replace(wz.RAMANUJAN, G=_doubled_ramanujan_g)),
}


def _mutated(name):
    return MUTATIONS[name]() if name else contextlib.nullcontext()


# ------------------------------------------------------------------- running

def run_claim(claim_id: str, bounds: dict, mutation: str | None = None) -> list[ClaimReport]:
    with _mutated(mutation):
        try:
            return CLAIMS[claim_id](bounds)
        except (OracleMismatch, sq.TheoremViolation) as exc:
            r = ClaimReport(claim_id, bounds, proven=True)
            r.add(("oracle",), f"{type(exc).__name__}: {exc}")
            return [r]


def run_series(identity_id: str, digits: int, points=None) -> tuple[ClaimReport, list[hp.IdentityCheck]]:
    checks = hp.run_identity(identity_id, digits, points)
    return hp.identity_report(identity_id, checks), checks


def _job(kind, ident, arg, mutation):
    if kind == "claim":
        return run_claim(ident, arg, mutation)
    report, _ = run_series(ident, *arg)
    return [report]


def _exit_code(reports) -> int:
    return EXIT_VIOLATION if any(r.fatal for r in reports) else EXIT_OK


def _render(reports, fmt: str) -> str:
    if fmt == "tsv":
        return "".join(r.to_tsv() for r in reports)
    lines = []
    for r in reports:
        lines.append(r.summary())
        if r.counterexamples:
            lines.extend("\t".join(row) for row in r.rows())
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _bounds_from_args(args) -> dict:
    b = dict(PROFILES["quick"]["claims"][args.claim_id])
    b.pop("include_n0", None)
    for key in ("n_max", "k_max", "m_max", "p_max", "N_max"):
        v = getattr(args, key)
        if v is not None:
            if v < 1:
                raise ValueError(f"--{key.replace('_', '-')} must be positive")
            b[key] = v
    if args.n_max is not None:
        b.pop("valuation_n_max", None)
        b.pop("mod_n_max", None)
    b["include_n0"] = args.include_n0
    return b


def cmd_verify(args) -> int:
    reports = run_claim(args.claim_id, _bounds_from_args(args), args.mutate)
    _emit(_render(reports, args.format), args.output)
    if args.output:
        print(_render(reports, "text"), end="")
    return _exit_code(reports)


def _fmt_value(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else str(v)


def cmd_compute(args) -> int:
    if args.sequence == "S":
        table = sq.s_sequence(args.count)
    elif args.sequence == "T":
        table = sq.t_sequence(args.count)
    else:
        table = sq.a_sequence_recurrence(args.count)
    sep = " " if args.format == "bfile" else "\t"
    text = "".join(f"{i}{sep}{_fmt_value(v)}\n" for i, v in table.items())
    if args.output:
        _emit(text, args.output)
        first, last = table.terms[0], table.terms[-1]
        print(f"{table.name} ({table.method}): {len(table)} terms, first {_fmt_value(first)}, last {_fmt_value(last)}")
    else:
        sys.stdout.write(text)
    for note in table.findings:
        print(f"FINDING\t{note}")
    return EXIT_OK


def cmd_series(args) -> int:
    points = [Fraction(x) for x in args.x] if args.x else None
    report, checks = run_series(args.identity_id, args.digits, points)
    lines = []
    for c in checks:
        status = "PASS" if c.holds else ("FAIL" if c.proven else "FINDING")
        lines.append(f"{c.identity_id}\n  value   {c.value.to_decimal(args.digits)}\n"
                     f"  target  {c.target.to_decimal(args.digits)}\n"
                     f"  |diff| <= {float(c.difference):.3e}  (tolerance 1e-{args.digits})  {status}")
    text = "\n".join(lines) + "\n"
    if args.format == "tsv":
        _emit(report.to_tsv(), args.output)
        if args.output:
            print(text, end="")
    else:
        _emit(text, args.output)
    return _exit_code([report])


def cmd_all(args) -> int:
    profile = PROFILES[args.profile]
    digits, samples = profile["digits"], profile["samples"]
    jobs = [("claim", cid, b) for cid, b in profile["claims"].items()]
    jobs += [("series", sid, (digits, None)) for sid in hp.SERIES]
    jobs += [("series", "genfun-sin", (digits, hp.sin_samples(samples))),
             ("series", "genfun-cos", (digits, [Fraction(0)] + hp.cos_samples(samples)))]
    start = time.time()
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            futures = [pool.submit(_job, *j, args.mutate) for j in jobs]
            results = [f.result() for f in futures]
    else:
        results = [_job(*j, args.mutate) for j in jobs]
    reports = [r for rs in results for r in rs]
    if args.output:
        _emit("".join(r.to_tsv() for r in reports), args.output)
    print(_render(reports, "text"), end="")
    code = _exit_code(reports)
    print(f"{len(reports)} reports, {sum(r.fatal for r in reports)} fatal, "
          f"{sum(len(r.findings) for r in reports)} findings, {time.time() - start:.1f}s")
    return code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _digits(s: str) -> int:
    v = int(s)
    if v < 10:
        raise argparse.ArgumentTypeError("at least 10 digits")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="binomdiv", description="Exact verification of binomial divisibility claims, WZ proofs, "
                                              "supercongruences and series identities.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="sweep one claim for counterexamples")
    v.add_argument("claim_id", choices=sorted(CLAIMS))
    v.add_argument("--n-max", dest="n_max", type=_positive)
    v.add_argument("--k-max", dest="k_max", type=_positive)
    v.add_argument("--m-max", dest="m_max", type=_positive)
    v.add_argument("--p-max", dest="p_max", type=_positive)
    v.add_argument("--N-max", dest="N_max", type=_positive)
    v.add_argument("--include-n0", action="store_true", help="also sweep n = 0 (Catalan-product claim)")
    v.add_argument("--format", choices=("text", "tsv"), default="text")
    v.add_argument("--output")
    v.add_argument("--mutate", choices=sorted(MUTATIONS), help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("compute", help="generate S, T or a")
    c.add_argument("sequence", choices=("S", "T", "a"))
    c.add_argument("--count", type=_positive, required=True)
    c.add_argument("--format", choices=("bfile", "tsv"), default="bfile")
    c.add_argument("--output")
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("series", help="check a series identity to high precision")
    s.add_argument("identity_id", choices=hp.IDENTITY_IDS)
    s.add_argument("--digits", type=_digits, default=30)
    s.add_argument("--x", action="append", help="sample point for genfun-sin/genfun-cos (rational, repeatable)")
    s.add_argument("--format", choices=("text", "tsv"), default="text")
    s.add_argument("--output")
    s.set_defaults(func=cmd_series)

    a = sub.add_parser("all", help="run every claim and series check at profile scale")
    a.add_argument("--profile", choices=sorted(PROFILES), default="quick")
    a.add_argument("--jobs", type=_positive, default=1)
    a.add_argument("--output")
    a.add_argument("--mutate", choices=sorted(MUTATIONS), help=argparse.SUPPRESS)
    a.set_defaults(func=cmd_all)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
