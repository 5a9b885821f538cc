"""Command-line front end: ``prefixsc <command> ...``.

Every command prints human-readable lines followed by one ``key=value``
summary line (``--format text``), a single JSON object per record
(``--format json-lines``) or CSV rows (``--format csv``).

Exit codes: 0 success, 1 a verification failed, 2 unreadable or malformed
input, 3 a precondition was violated (bad parameters, alphabet mismatch).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from pathlib import Path

from .automata import AutomatonError, isc, prefix_violation, sc
from .census import star_census
from .fooling import check, search_fooling
from .ops import OPERATIONS, construct
from .properties import ALL_PROPERTIES
from .textio import (
    ParseError,
    format_certificate,
    read_automaton,
    read_certificate,
    to_dot,
    write_automaton,
)
from .witnesses import (
    DEFAULT_BUDGET,
    FAMILIES,
    THEOREMS,
    ReconstructionError,
    WitnessError,
    WitnessSpec,
    bound_report,
    make_witness,
    validate_witness,
)

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_PRECONDITION = 0, 1, 2, 3

OP_ALIASES = {
    "complement": "complement", "intersection": "intersection", "intersect": "intersection",
    "union": "union", "concat": "concat", "concatenation": "concat",
    "star": "star", "reversal": "reversal", "reverse": "reversal",
}


class Failure(Exception):
    """A precondition the CLI checks itself (exit code 3)."""


class Output:
    """Collects records and renders them in the selected format."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def text(self, line: str = "") -> None:
        if self.fmt == "text":
            print(line, file=self.stream)

    def record(self, rec: dict) -> None:
        if self.fmt == "json-lines":
            print(json.dumps(rec, sort_keys=True), file=self.stream)
        elif self.fmt == "csv":
            buf = io.StringIO()
            w = csv.DictWriter(buf, fieldnames=list(rec), lineterminator="\n")
            w.writeheader()
            w.writerow({k: _flat(v) for k, v in rec.items()})
            self.stream.write(buf.getvalue())
        else:
            print(" ".join(f"{k}={_flat(v)}" for k, v in rec.items()), file=self.stream)


def _flat(v) -> str:
    if v is None:
        return "none"
    if v == "":
        return "-"  # the empty word
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, tuple)):
        return ",".join(map(str, v))
    return str(v)


def _emit_dot(args, automaton, name: str = "A") -> None:
    if getattr(args, "emit_dot", None):
        Path(args.emit_dot).write_text(to_dot(automaton, name), encoding="utf-8")


def _numbered(path: Path, i: int, count: int) -> Path:
    return path if count == 1 else path.with_name(f"{path.stem}.{i + 1}{path.suffix}")


# --- commands ----------------------------------------------------------------------

def cmd_ops(args, out: Output) -> int:
    base = OP_ALIASES.get(args.op)
    if base is None:
        raise Failure(f"unknown operation {args.op!r}; known: {', '.join(sorted(set(OP_ALIASES.values())))}")
    op = f"{base}-{args.model}"
    spec = OPERATIONS[op]
    if len(args.files) != spec.arity:
        raise Failure(f"{base} takes {spec.arity} input file(s), got {len(args.files)}")
    inputs = [read_automaton(f) for f in args.files]
    result = construct(op, *inputs)
    auto = result.automaton
    if args.out:
        write_automaton(auto, args.out)
    _emit_dot(args, auto, base)
    ok = result.construction_states <= result.upper_bound
    out.text(f"{op}: built {result.construction_states} states (bound {result.upper_bound})")
    out.record({
        "op": op, "construction_states": result.construction_states,
        "upper_bound": result.upper_bound, "isc": isc(auto), "sc": sc(auto),
        "within_bound": ok,
    })
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_bound(args, out: Output) -> int:
    if args.theorem not in THEOREMS:
        raise Failure(f"unknown theorem {args.theorem!r}; known: {', '.join(THEOREMS)}")
    binary = OPERATIONS[args.theorem].arity == 2
    if len(args.params) != (2 if binary else 1):
        raise Failure(f"{args.theorem} takes {'m n' if binary else 'n'}")
    m, n = (args.params if binary else (None, args.params[0]))
    report = bound_report(args.theorem, m, n, args.budget)
    for line in report.detail:
        out.text(line)
    out.record(report.as_dict() if out.fmt == "json-lines" else _report_row(report))
    return EXIT_VERIFY if report.status == "fail" else EXIT_OK


def _report_row(report) -> dict:
    d = report.as_dict()
    d.pop("detail")
    return d


def _describe(verdict, cert) -> str:
    if verdict.valid:
        if cert.split is not None:
            return f"valid, nsc ≥ {verdict.bound}"
        return f"valid, bound {verdict.bound}"
    v = verdict.violation
    where = "" if v.family == "pairs" else f" in {v.family}"
    if v.condition == "F1":
        return f"invalid: F1 fails for pair {v.i}{where}"
    return f"invalid: F2 fails for pairs {v.i} and {v.j}{where}"


def cmd_fooling(args, out: Output) -> int:
    language = read_automaton(args.language)
    if args.action == "check":
        if not args.certificate:
            raise Failure("fooling check needs a certificate file")
        cert = read_certificate(args.certificate)
        verdict = check(language, cert)
        out.text(_describe(verdict, cert))
        v = verdict.violation
        out.record({
            "valid": verdict.valid, "bound": verdict.bound,
            "kind": "plain" if cert.split is None else "extended",
            "condition": v.condition if v else None, "i": v.i if v else None,
            "j": v.j if v else None, "set": v.family if v else None,
        })
        return EXIT_OK if verdict.valid else EXIT_VERIFY
    found = search_fooling(language, max_pairs=args.max_pairs, max_len=args.max_len,
                           extended=args.extended, budget=args.search_budget)
    cert = found.certificate
    if args.out:
        Path(args.out).write_text(format_certificate(cert), encoding="utf-8")
    out.text(format_certificate(cert).rstrip())
    out.record({
        "bound": cert.claimed_bound, "plain_bound": found.plain_bound,
        "kind": "plain" if cert.split is None else "extended", "partial": found.partial,
    })
    return EXIT_OK


def cmd_witness(args, out: Output) -> int:
    spec = WitnessSpec(args.family, args.m, args.n)
    automata = make_witness(spec, args.budget)
    if args.emit:
        for i, a in enumerate(automata):
            write_automaton(a, _numbered(Path(args.emit), i, len(automata)))
    if args.emit_dot:
        for i, a in enumerate(automata):
            _numbered(Path(args.emit_dot), i, len(automata)).write_text(to_dot(a, f"W{i + 1}"), encoding="utf-8")
    ok = True
    if args.validate:
        report = validate_witness(spec, automata)
        out.text(report.render())
        ok = report.ok
    out.record({
        "family": spec.family, "m": spec.m, "n": spec.n, "origin": spec.origin,
        "states": [a.num_states for a in automata], "isc": [isc(a) for a in automata],
        "validated": ok if args.validate else None,
    })
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_census(args, out: Output) -> int:
    start = time.perf_counter()
    table = star_census(args.n, args.k, not args.no_alphabet_perm, args.method)
    elapsed = time.perf_counter() - start
    if args.out:
        Path(args.out).write_text(table.to_csv(), encoding="utf-8")
    if out.fmt == "csv":
        out.stream.write(table.to_csv())
        return EXIT_OK
    out.text("sc_star count")
    for v, c in table.frequencies.items():
        out.text(f"{v:>7} {c}")
    out.record({
        "n": table.n, "k": table.k, "total": table.total,
        "frequencies": ";".join(f"{v}:{c}" for v, c in table.frequencies.items()),
        "average_exact": str(table.average), "average_3dp": table.average_3dp(),
        "seconds": round(elapsed, 2) if args.timing else None,
    })
    return EXIT_OK


def cmd_complexity(args, out: Output) -> int:
    a = read_automaton(args.file)
    out.record({"states": a.num_states, "isc": isc(a), "sc": sc(a),
                "prefix_closed": prefix_violation(a) is None})
    return EXIT_OK


def cmd_prefix_closed(args, out: Output) -> int:
    bad = prefix_violation(read_automaton(args.file))
    if bad is None:
        out.text("prefix-closed")
    else:
        u, w = bad
        out.text(f"not prefix-closed: {w or '-'} is accepted but its prefix {u or '-'} is not")
    out.record({"prefix_closed": bad is None, "rejected_prefix": bad[0] if bad else None,
                "accepted_word": bad[1] if bad else None})
    return EXIT_OK if bad is None else EXIT_VERIFY


def cmd_properties(args, out: Output) -> int:
    names = args.only or list(ALL_PROPERTIES)
    unknown = [n for n in names if n not in ALL_PROPERTIES]
    if unknown:
        raise Failure(f"unknown property {unknown[0]!r}; known: {', '.join(ALL_PROPERTIES)}")
    ok = True
    for name in names:
        res = ALL_PROPERTIES[name](args.cases, seed=args.seed)
        ok &= res.ok
        for v in res.violations[:5]:
            out.text(f"  {v}")
        out.record({"property": name, "cases": res.cases, "seed": args.seed,
                    "violations": len(res.violations)})
    return EXIT_OK if ok else EXIT_VERIFY


# --- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json-lines"), default="text")
    common.add_argument("--emit-dot", metavar="FILE", help="also write a Graphviz rendering")

    p = argparse.ArgumentParser(prog="prefixsc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ops", parents=[common], help="run a construction on automaton files")
    s.add_argument("op", help="complement, intersection, union, concat, star or reversal")
    s.add_argument("files", nargs="+")
    s.add_argument("--model", choices=("isc", "nsc"), default="isc")
    s.add_argument("--out")
    s.set_defaults(func=cmd_ops)

    s = sub.add_parser("bound", parents=[common], help="measure a tightness claim on its witnesses")
    s.add_argument("theorem", help=", ".join(THEOREMS))
    s.add_argument("params", nargs="+", type=int, metavar="m n")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_bound)

    s = sub.add_parser("fooling", parents=[common], help="check or search fooling sets")
    s.add_argument("action", choices=("check", "search"))
    s.add_argument("language")
    s.add_argument("certificate", nargs="?")
    s.add_argument("--max-pairs", type=int, default=64)
    s.add_argument("--max-len", type=int, default=4)
    s.add_argument("--extended", action="store_true")
    s.add_argument("--search-budget", type=int, default=200_000)
    s.add_argument("--out")
    s.set_defaults(func=cmd_fooling)

    s = sub.add_parser("witness", parents=[common], help="build and optionally validate a witness")
    s.add_argument("family", help=", ".join(FAMILIES))
    s.add_argument("--m", type=int)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--emit", metavar="FILE")
    s.add_argument("--validate", action="store_true")
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("census", parents=[common], help="star complexities over the binary class")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--no-alphabet-perm", action="store_true")
    s.add_argument("--method", choices=("brute", "canonical"), default="brute")
    s.add_argument("--timing", action="store_true", help="report wall-clock seconds")
    s.add_argument("--out")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("complexity", parents=[common], help="isc and sc of a file")
    s.add_argument("file")
    s.set_defaults(func=cmd_complexity)

    s = sub.add_parser("check-prefix-closed", parents=[common], help="is the language prefix-closed")
    s.add_argument("file")
    s.set_defaults(func=cmd_prefix_closed)

    s = sub.add_parser("properties", parents=[common], help="randomized property harness")
    s.add_argument("--cases", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--only", action="append", metavar="NAME", help=", ".join(ALL_PROPERTIES))
    s.set_defaults(func=cmd_properties)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.format)
    try:
        return args.func(args, out)
    except ReconstructionError as exc:
        print(f"reconstruction failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (Failure, WitnessError, AutomatonError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
