"""Command-line front end: ``cliffinv {codes,forger,verify,conjecture2}``.

Exit status: 0 success, 1 verification mismatch, 2 resource cap hit,
3 usage error.  Reports are exact (integers or rational strings) and
contain no timestamps, so repeated runs produce identical bytes.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .classify import DEFAULT_LEAF_CAP, canonical_form, enumerate_sdde
from .clifford import DEFAULT_GROUP_CAP, clifford_group
from .codes import format_code, glue, is_doubly_even, is_self_dual, parse_code, read_code
from .cyclo import as_rational
from .enumerators import ccwe
from .errors import CapExceeded
from .forger import BiSeries, forger_series, golden_series
from .verify import SUITES, results_to_json, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_CAP, EXIT_USAGE = 0, 1, 2, 3
GOLDEN_WINDOW = (8, 8)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--cap", type=int, help="resource cap (leaves, group order or genus override)")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="cliffinv", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("codes", parents=[common], help="classify doubly-even self-dual codes")
    p.add_argument("n1", type=int)
    p.add_argument("n2", type=int)

    p = sub.add_parser("forger", parents=[common], help="Forger series of the Clifford group")
    p.add_argument("m", type=int)
    p.add_argument("t1", type=int)
    p.add_argument("t2", type=int)
    p.add_argument("--golden", action="store_true", help="compare with the shipped series")

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=(*SUITES, "all"))
    p.add_argument(
        "--coefficient",
        choices=("all-overcodes", "de-overcodes"),
        default="all-overcodes",
        help="self-coefficient form used by the xp-lemma suite",
    )

    p = sub.add_parser("conjecture2", parents=[common], help="a_{4,4} = a_{5,5} = 2 report")
    p.add_argument("--m", type=int, default=1, help="genus for the span and series checks")
    p.add_argument("--cross-check-series", action="store_true")
    p.add_argument("--fixture", type=Path, help="code file that must match a (4,4) class")
    return parser


# ---------------------------------------------------------------- commands


def cmd_codes(args) -> tuple[int, str]:
    if args.n1 < 0 or args.n2 < 0:
        raise UsageError("lengths must be nonnegative")
    leaf_cap = args.cap or DEFAULT_LEAF_CAP
    classes = enumerate_sdde(args.n1, args.n2, leaf_cap=leaf_cap, workers=args.threads)
    if args.format == "json":
        items = []
        for k, c in enumerate(classes):
            code = c.representative
            items.append(
                {"class": k, "class_size": c.class_size_hint, "dim": code.dim,
                 "basis": [str(w) for w in code.basis]}
            )
        out = json.dumps({"split": [args.n1, args.n2], "count": len(classes), "classes": items}, indent=2)
        return EXIT_OK, out + "\n"
    if args.format == "csv":
        rows = ["class,class_size,row"]
        for k, c in enumerate(classes):
            rows += [f"{k},{c.class_size_hint},{w}" for w in c.representative.basis]
        return EXIT_OK, "\n".join(rows) + "\n"
    lines = [f"a_{{{args.n1},{args.n2}}} = {len(classes)}"]
    for k, c in enumerate(classes):
        lines.append(f"# class {k}: {c.class_size_hint} labelled codes")
        lines.append(format_code(c.representative).rstrip("\n"))
    return EXIT_OK, "\n".join(lines) + "\n"


def _group_cap(args, m: int) -> int:
    if m < 0:
        raise UsageError("genus must be nonnegative")
    if m not in (1, 2) and args.cap is None:
        raise UsageError("genus must be 1 or 2 unless --cap is given")
    return args.cap or DEFAULT_GROUP_CAP


def _series_json(series: BiSeries, m: int, order: int) -> str:
    T1, T2 = series.truncation
    return json.dumps(
        {
            "genus": m,
            "order": order,
            "truncation": [T1, T2],
            "coefficients": [[str(c) for c in row] for row in series.coeff],
            "series": series.render(),
        },
        indent=2,
    )


def cmd_forger(args) -> tuple[int, str]:
    cap = _group_cap(args, args.m)
    if args.t1 < 0 or args.t2 < 0:
        raise UsageError("truncation must be nonnegative")
    if args.golden and args.m not in (1, 2):
        raise UsageError("golden series exist only for genus 1 and 2")
    G = clifford_group(args.m, cap)
    series = forger_series(G, args.t1, args.t2)
    if args.format == "json":
        text = _series_json(series, args.m, G.order) + "\n"
    elif args.format == "csv":
        text = series.to_csv()
    else:
        text = f"|X_{args.m}| = {G.order}\n{series.render()}\n"
    status = EXIT_OK
    if args.golden:
        gold = golden_series(args.m)
        w1, w2 = min(args.t1, GOLDEN_WINDOW[0]), min(args.t2, GOLDEN_WINDOW[1])
        bad = [
            (a, b)
            for a in range(w1 + 1)
            for b in range(w2 + 1)
            if series[a, b] != gold[a, b]
        ]
        if bad:
            status = EXIT_MISMATCH
            for a, b in bad:
                print(f"golden mismatch at ({a},{b}): {series[a, b]} != {gold[a, b]}", file=sys.stderr)
        elif args.format == "text":
            text += f"golden: match on the ({w1},{w2}) window\n"
    return status, text


def cmd_verify(args) -> tuple[int, str]:
    kw = {"coefficient": args.coefficient} if args.suite in ("xp-lemma", "all") else {}
    results = run_suite(args.suite, **kw)
    if args.format == "json":
        text = results_to_json(results) + "\n"
    elif args.format == "csv":
        rows = ["suite,check,ok"]
        for r in results:
            rows += [f'{r.name},"{label}",{int(ok)}' for label, ok in r.checks]
        text = "\n".join(rows) + "\n"
    else:
        text = "".join(r.to_text() for r in results)
    return (EXIT_OK if all(r.ok for r in results) else EXIT_MISMATCH), text


def _rank(polys) -> int:
    from sympy import Matrix

    monos = sorted({mono for p in polys for mono in p.terms})
    if not monos:
        return 0
    rows = [[as_rational(p.coefficient(mono)) for mono in monos] for p in polys]
    return Matrix(rows).rank()


def _data_code(name: str):
    from importlib import resources

    return parse_code(resources.files("cliffinv").joinpath("data").joinpath(name).read_text())


def cmd_conjecture2(args) -> tuple[int, str]:
    if args.m not in (1, 2):
        raise UsageError("--m must be 1 or 2")
    fixture = read_code(args.fixture) if args.fixture else _data_code("g44.txt")
    problems: list[str] = []
    lines: list[str] = []

    c44 = enumerate_sdde(4, 4, workers=args.threads)
    c55 = enumerate_sdde(5, 5, workers=args.threads)
    for split, classes in (((4, 4), c44), ((5, 5), c55)):
        if len(classes) != 2:
            problems.append(f"a_{{{split[0]},{split[1]}}} = {len(classes)}, expected 2")

    if not (is_self_dual(fixture) and is_doubly_even(fixture)):
        problems.append("fixture is not a doubly-even self-dual code")
    elif fixture.split != (4, 4):
        problems.append(f"fixture has split {fixture.split}, expected (4, 4)")
    elif canonical_form(fixture) not in [c.representative for c in c44]:
        problems.append("fixture matches no enumerated (4,4) class")

    m = args.m
    if not problems:
        f1 = ccwe(_data_code("g11.txt"), m)
        f4 = ccwe(fixture, m)
        glued = glue(_data_code("g11.txt"), fixture)
        if ccwe(glued, m) != f1 * f4:
            problems.append("ccwe is not multiplicative under glueing")
        for split, classes, spanning, names in (
            ((4, 4), c44, [f1**4, f4], "f1^4, f4"),
            ((5, 5), c55, [f1**5, f1 * f4], "f1^5, f1*f4"),
        ):
            cls_polys = [ccwe(c.representative, m) for c in classes]
            r_cls, r_span = _rank(cls_polys), _rank(spanning)
            r_all = _rank(cls_polys + spanning)
            ok = r_cls == r_span == r_all == 2
            lines.append(
                f"({split[0]},{split[1]}) m={m}: class enumerators rank {r_cls}, "
                f"{names} rank {r_span}, joint rank {r_all}"
            )
            if not ok:
                problems.append(f"span mismatch at {split}")

    if args.cross_check_series and not problems:
        series = forger_series(clifford_group(m), 5, 5)
        for N in (4, 5):
            lines.append(f"alpha_{m}({N},{N}) = {series[N, N]}")
            if series[N, N] != 2:
                problems.append(f"alpha_{m}({N},{N}) = {series[N, N]}, expected 2")

    if problems:
        for p in problems:
            print(f"conjecture2: {p}", file=sys.stderr)
        return EXIT_MISMATCH, "".join(f"FAIL {p}\n" for p in problems)

    head = "a_{4,4}=2, a_{5,5}=2: Conjecture 2 criterion verified"
    lines.append(
        "degree (4,4) invariants are spanned by f1^4 and f4, and degree (5,5) by "
        "f1^5 and f1*f4; an orbit averaging f4 correctly therefore averages every "
        "(4,4) and (5,5) invariant, so a projective 4-design orbit is a 5-design"
    )
    if args.format == "json":
        return EXIT_OK, json.dumps({"a44": 2, "a55": 2, "verified": True, "details": lines}, indent=2) + "\n"
    return EXIT_OK, "\n".join([head, *lines]) + "\n"


COMMANDS = {
    "codes": cmd_codes,
    "forger": cmd_forger,
    "verify": cmd_verify,
    "conjecture2": cmd_conjecture2,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.cap is not None and args.cap <= 0:
        parser.error("--cap must be positive")
    if args.threads <= 0:
        parser.error("--threads must be positive")
    try:
        status, text = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"cliffinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cliffinv: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (OSError, ValueError) as exc:
        print(f"cliffinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
