"""Command-line front end: bounds, families, oracles and verification reports.

Machine output goes to stdout, diagnostics to stderr. Exit status is 0 on
success, 1 on a usage or domain error, 2 when verification finds a VIOLATION.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import Counter
from fractions import Fraction
from pathlib import Path

from . import bounds, zoo
from .core import cascade
from .oracles import (
    oracle_diversity_table,
    oracle_lemmin,
    oracle_lexpair,
    oracle_maximal_intersecting,
)
from .verify import SUITES, VIOLATION, run_suite

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _number(text: str):
    """int, Fraction for "p/q", float otherwise."""
    if "/" in text:
        return Fraction(text)
    try:
        return int(text)
    except ValueError:
        return float(text)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def _need(args, *names):
    missing = [f"--{n.replace('_', '-') if n != 'min_b' else 'minB'}"
               for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.name} needs {' '.join(missing)}")


def _write_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- subcommands -------------------------------------------------------------------

def cmd_cascade(args) -> int:
    form = cascade(args.m, args.r)
    print(_dump(form.as_list()))
    return EXIT_OK


def cmd_resistant(args) -> int:
    out = []
    for d in bounds.resistant_chain(args.n, args.k)[1:]:
        out.append({"gamma": d.gamma, "a_side": list(d.a_side), "b_side": list(d.b_side)})
    print(_dump(out))
    return EXIT_OK


BOUND_NAMES = ("full1", "thm1", "hk", "corhm", "weighted", "ab", "corkz", "ft",
               "neutral", "sizeC3", "lemmin")


def cmd_bound(args) -> int:
    name = args.name
    if name in ("full1", "weighted"):
        _need(args, "n", "k", "gamma")
        fn = bounds.bound_full1 if name == "full1" else bounds.bound_weighted
        rep = fn(args.n, args.k, args.gamma)
    elif name == "thm1":
        _need(args, "n", "k", "u")
        rep = bounds.bound_thm1(args.n, args.k, args.u)
    elif name == "hk":
        _need(args, "n", "k")
        rep = bounds.bound_hk(args.n, args.k)
    elif name == "corhm":
        _need(args, "n", "k", "u", "gamma")
        rep = bounds.bound_corhm(args.n, args.k, args.u, args.gamma)
    elif name == "ab":
        _need(args, "n", "a", "b", "min_b")
        rep = bounds.bound_ab(args.n, args.a, args.b, args.min_b,
                              1 if args.weight is None else args.weight)
    elif name == "corkz":
        _need(args, "n", "a", "b", "min_b")
        rep = bounds.bound_corkz(args.n, args.a, args.b, args.min_b, args.j)
    elif name == "ft":
        _need(args, "n", "a", "b", "alpha")
        rep = bounds.bound_ft(args.n, args.a, args.b, args.alpha)
    elif name == "neutral":
        _need(args, "n", "k", "l")
        print(_dump([list(T) for T in bounds.neutral_sets(args.n, args.k, args.l)]))
        return EXIT_OK
    elif name == "sizeC3":
        _need(args, "n", "k")
        print(_dump({"n": args.n, "k": args.k, "size": bounds.size_C3(args.n, args.k)}))
        return EXIT_OK
    elif name == "lemmin":
        _need(args, "m", "s", "k")
        out = {"m": args.m, "s": args.s, "k": args.k,
               "f": {str(z): bounds.lemmin_f(args.m, args.s, args.k, z)
                     for z in range(2, args.s + 2)},
               "fs": bounds.lemmin_fs(args.m, args.s, args.k)}
        if args.s >= 4:
            out["fprime3"] = bounds.lemmin_fprime3(args.m, args.s, args.k)
        print(_dump(out))
        return EXIT_OK
    else:
        raise UsageError(f"unknown bound {name!r}; choose from {', '.join(BOUND_NAMES)}")
    print(_dump(rep.to_dict()))
    return EXIT_OK


FAMILY_KINDS = {
    "Hu": (("n", "k", "u"), lambda a: zoo.build_Hu(a.n, a.k, a.u)),
    "Ji": (("n", "k", "i"), lambda a: zoo.build_Ji(a.n, a.k, a.i)),
    "El": (("n", "k", "l"), lambda a: zoo.build_El(a.n, a.k, a.l)),
    "T2": (("k",), lambda a: zoo.build_T2(a.k, a.n)),
    "T2prime": (("s",), lambda a: zoo.build_T2prime(a.s, a.n)),
    "F2": (("m", "s", "k"), lambda a: zoo.build_F2(a.m, a.s, a.k)),
    "F2prime": (("m", "s", "k"), lambda a: zoo.build_F2prime(a.m, a.s, a.k)),
    "C3": (("n", "k"), lambda a: zoo.build_C3(a.n, a.k)),
    "fano": ((), lambda a: zoo.build_fano()),
    "D37": (("n", "k"), lambda a: zoo.build_D37(a.n, a.k)),
}


def cmd_family(args) -> int:
    if args.action == "build":
        if args.target not in FAMILY_KINDS:
            raise UsageError(f"unknown family {args.target!r}; choose from {', '.join(FAMILY_KINDS)}")
        need, build = FAMILY_KINDS[args.target]
        args.name = args.target
        _need(args, *need)
        text = zoo.family_to_json(build(args))
        if args.out:
            Path(args.out).write_text(text + "\n")
            print(f"wrote {args.out}", file=sys.stderr)
        else:
            print(text)
        return EXIT_OK
    path = Path(args.target)
    if not path.exists():
        raise UsageError(f"no such file: {path}")
    F = zoo.family_from_json(path.read_text())
    print(_dump(zoo.family_stats(F).to_dict()))
    return EXIT_OK


ORACLE_NAMES = ("lexpair", "table", "maximal", "lemmin")


def cmd_oracle(args) -> int:
    name = args.name
    if name == "lexpair":
        _need(args, "n", "a", "b")
        from .core import GroundSet

        ground = GroundSet(args.lo, args.n)
        res = oracle_lexpair(args.n, args.a, args.b, args.min_b or 0,
                             1 if args.weight is None else args.weight,
                             max_b=args.max_b, ground=ground)
    elif name == "table":
        _need(args, "n", "k")
        rows = oracle_diversity_table(args.n, args.k, 1 if args.weight is None else args.weight)
        rows = [(g, str(v)) if isinstance(v, Fraction) else (g, v) for g, v in rows]
        if args.format == "csv":
            sys.stdout.write(_write_csv(["gamma", "oracle"], rows))
        else:
            print(_dump([{"gamma": g, "oracle": v} for g, v in rows]))
        return EXIT_OK
    elif name == "maximal":
        _need(args, "n", "k")
        res = oracle_maximal_intersecting(args.n, args.k, args.constraint,
                                          symmetric_root=not args.no_root,
                                          prune=not args.no_prune)
    elif name == "lemmin":
        _need(args, "m", "s", "k")
        res = oracle_lemmin(args.m, args.s, args.k, args.intersecting)
    else:
        raise UsageError(f"unknown oracle {name!r}; choose from {', '.join(ORACLE_NAMES)}")
    print(res.to_json(with_timing=args.timing))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES + ("all",):
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES + ('all',))}")
    rows = run_suite(args.suite, args.n_max, args.k_max, args.jobs)
    if args.format == "csv":
        sys.stdout.write(_write_csv(
            ["theorem", "params", "bound", "oracle", "verdict", "witness"],
            [[d["theorem"], _dump(d["params"]), _dump(d["bound"]), _dump(d["oracle"]),
              d["verdict"], d["witness"] or ""] for d in (r.to_dict() for r in rows)]))
    else:
        print(_dump([r.to_dict() for r in rows]))
    counts = Counter(r.verdict for r in rows)
    print(f"{args.suite}: {len(rows)} rows, " +
          ", ".join(f"{k}={counts[k]}" for k in ("match", "theorem-loose", VIOLATION)),
          file=sys.stderr)
    return EXIT_VIOLATION if counts[VIOLATION] else EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ifam", description="Intersecting-family bounds, constructions and oracles.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    c = sub.add_parser("cascade", help="r-cascade form of m")
    c.add_argument("m", type=int)
    c.add_argument("r", type=int)
    c.set_defaults(func=cmd_cascade)

    r = sub.add_parser("resistant", help="resistant numbers")
    r.add_argument("action", choices=["list"])
    r.add_argument("n", type=int)
    r.add_argument("k", type=int)
    r.set_defaults(func=cmd_resistant)

    def params(sp, *names, number=()):
        for nm in names:
            flag = "--minB" if nm == "min_b" else "--maxB" if nm == "max_b" else f"--{nm}"
            sp.add_argument(flag, dest=nm, type=_number if nm in number else int, default=None)

    b = sub.add_parser("bound", help=f"evaluate a bound: {', '.join(BOUND_NAMES)}")
    b.add_argument("name")
    params(b, "n", "k", "gamma", "u", "alpha", "a", "b", "min_b", "weight", "j", "l", "m", "s",
           number=("u", "alpha", "weight"))
    b.set_defaults(func=cmd_bound)

    f = sub.add_parser("family", help="build a family or report its statistics")
    f.add_argument("action", choices=["build", "stats"])
    f.add_argument("target", help="family kind for build, JSON file for stats")
    params(f, "n", "k", "u", "i", "l", "s", "m")
    f.add_argument("--out")
    f.set_defaults(func=cmd_family)

    o = sub.add_parser("oracle", help=f"run an exhaustive oracle: {', '.join(ORACLE_NAMES)}")
    o.add_argument("name")
    params(o, "n", "k", "a", "b", "min_b", "max_b", "weight", "m", "s", number=("weight",))
    o.add_argument("--lo", type=int, default=1, help="smallest ground element for lexpair")
    o.add_argument("--constraint", default="none",
                   help="none | diversity>=g | tau>=t | degree<=c")
    o.add_argument("--intersecting", action="store_true")
    o.add_argument("--no-root", action="store_true", help="search all cliques, not only those through [k]")
    o.add_argument("--no-prune", action="store_true")
    o.add_argument("--timing", action="store_true", help="include elapsed seconds")
    o.add_argument("--format", choices=["json", "csv"], default="json")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("verify", help=f"bound-vs-oracle suites: {', '.join(SUITES)}, all")
    v.add_argument("suite")
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--k-max", type=int, default=5)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=["json", "csv"], default="json")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"ifam: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"ifam: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
