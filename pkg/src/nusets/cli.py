"""Command line front end.

One subcommand per library operation, uniform conventions: exit 0 when the
operation succeeds and any report comes back clean, 1 when a checker finds
violations or a conversion detects a law failure in the input, 2 for usage
errors and malformed input. ``--json`` switches every subcommand to a single
machine-parseable document on stdout. Word arguments contain ``*``, so they
need shell quoting.
"""

import argparse
import json
import sys

from .equivalence import random_indexed, round_trip_report, to_fibred, \
    to_indexed
from .errors import CoherenceMismatch, LawViolation, NuSetError, ParseError, \
    ValidationFailure
from .indexed import check_coh_frame, check_coh_painting, emit_indexed, \
    parse_indexed, validate_indexed
from .parametricity import iterate_types, normalize, parse_type, print_type, \
    telescope_stats
from .presheaf import check_functor_laws, emit_nuset, parse_nuset
from .report import Report
from .shapes import geometric_inventory, standard_shape, to_dot
from .streams import extend_singleton, take
from .words import compose, hom_count, hom_enumerate, parse_word


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_any(text):
    """Parse either nu-set JSON format, telling them apart by their keys."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"not valid JSON: {e.msg}", line=e.lineno,
                         col=e.colno)
    if isinstance(doc, dict) and "families" in doc:
        return parse_indexed(text)
    if isinstance(doc, dict) and "carriers" in doc:
        return parse_nuset(text)
    raise ParseError(
        "cannot tell the format: expected a 'families' (indexed) or "
        "'carriers' (fibred) field")


def _emit_report(rep, as_json):
    print(rep.to_json() if as_json else str(rep))
    return 0 if rep.ok else 1


def _cmd_hom(args):
    ws = [str(w) for w in hom_enumerate(args.nu, args.p, args.n)]
    assert len(ws) == hom_count(args.nu, args.p, args.n)
    if args.json:
        print(json.dumps({"nu": args.nu, "p": args.p, "n": args.n,
                          "count": len(ws), "words": ws},
                         indent=2, sort_keys=True))
    else:
        for w in ws:
            print(w)
    return 0


def _cmd_compose(args):
    g = parse_word(args.nu, args.g)
    f = parse_word(args.nu, args.f)
    out = str(compose(g, f))
    if args.json:
        print(json.dumps({"nu": args.nu, "g": args.g, "f": args.f,
                          "result": out}, indent=2, sort_keys=True))
    else:
        print(out)
    return 0


def _cmd_shape(args):
    P = standard_shape(args.nu, args.n)
    sizes = [c.size for c in P.carriers]
    if args.dot and not args.json:
        sys.stdout.write(to_dot(P))
        return 0
    if args.json:
        doc = {"nu": args.nu, "n": args.n, "carriers": sizes,
               "inventory": list(geometric_inventory(P))}
        if args.dot:
            doc["dot"] = to_dot(P)
        print(json.dumps(doc, indent=2, sort_keys=True))
        return 0
    print(f"standard shape nu={args.nu} n={args.n}")
    print(f"carriers: {sizes}")
    print(f"cells by geometric dimension: {list(geometric_inventory(P))}")
    return 0


def _cmd_validate(args):
    obj = _load_any(_read(args.file))
    if hasattr(obj, "families"):
        rep = validate_indexed(obj)
    else:
        rep = check_functor_laws(obj)
    return _emit_report(rep, args.json)


def _cmd_convert(args):
    obj = _load_any(_read(args.file))
    if hasattr(obj, "families"):
        sys.stdout.write(emit_nuset(to_fibred(obj)))
    else:
        sys.stdout.write(emit_indexed(to_indexed(obj)))
    return 0


def _cmd_coh_check(args):
    S = parse_indexed(_read(args.file))
    rep = Report("coherence sweep")
    for n in range(2, S.trunc + 1):
        for p in range(n - 1):
            for r in range(p, n - 1):
                for q in range(r, n - 1):
                    for eps in range(S.nu):
                        for omega in range(S.nu):
                            rep.extend(check_coh_frame(
                                S, eps, omega, q, r, n, p))
                            rep.extend(check_coh_painting(
                                S, eps, omega, q, r, n, p))
    return _emit_report(rep, args.json)


def _cmd_param(args):
    if args.steps is not None:
        T = iterate_types(args.nu, args.steps)
    else:
        T = normalize(parse_type(_read(args.file)))
    stats = telescope_stats(T)
    if args.json:
        print(json.dumps({"telescope": print_type(T),
                          "stats": {str(k): v for k, v in stats.items()}},
                         indent=2, sort_keys=True))
    else:
        print(print_type(T))
        for level in sorted(stats):
            print(f"X{level}: {stats[level]}")
    return 0


def _cmd_extend(args):
    S = parse_indexed(_read(args.file))
    out = take(extend_singleton(S), S.trunc + args.levels)
    sys.stdout.write(emit_indexed(out))
    return 0


def _cmd_roundtrip(args):
    if args.file is not None:
        obj = _load_any(_read(args.file))
    else:
        obj = random_indexed(args.nu, args.n, args.seed)
    return _emit_report(round_trip_report(obj), args.json)


def _build_parser():
    top = argparse.ArgumentParser(
        prog="nusets",
        description="semi-simplicial and semi-cubical set toolkit")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        p.add_argument("--json", action="store_true",
                       help="machine-parseable JSON on stdout")
        return p

    p = add("hom", _cmd_hom, "list the words from p to n")
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-n", type=int, required=True)

    p = add("compose", _cmd_compose,
            "compose two words (shell-quote the '*'s)")
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("g")
    p.add_argument("f")

    p = add("shape", _cmd_shape, "standard shape at dimension n")
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--dot", action="store_true", help="DOT graph text")

    p = add("validate", _cmd_validate,
            "check a nu-set file (either format)")
    p.add_argument("file", nargs="?", help="path or - for stdin")

    p = add("convert", _cmd_convert,
            "convert between the fibred and indexed formats")
    p.add_argument("file", nargs="?", help="path or - for stdin")

    p = add("coh-check", _cmd_coh_check,
            "run the coherence sweep on an indexed file")
    p.add_argument("file", nargs="?", help="path or - for stdin")

    p = add("param", _cmd_param,
            "normalized telescope plus hypothesis counts")
    p.add_argument("file", nargs="?",
                   help="type in the surface syntax; path or - for stdin")
    p.add_argument("--nu", type=int, default=2)
    p.add_argument("-n", "--steps", dest="steps", type=int, default=None,
                   help="emit the step-n iterated telescope instead")

    p = add("extend", _cmd_extend,
            "extend an indexed file by singleton levels")
    p.add_argument("file", nargs="?", help="path or - for stdin")
    p.add_argument("--levels", type=int, required=True,
                   help="number of levels to add")

    p = add("roundtrip", _cmd_roundtrip,
            "round-trip a nu-set file through the other form")
    p.add_argument("file", nargs="?", help="path or - for stdin")
    p.add_argument("--nu", type=int, default=2)
    p.add_argument("-n", type=int, default=2)
    p.add_argument("--seed", type=int, default=0,
                   help="randomized instance when no file is given")

    return top


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (LawViolation, ValidationFailure, CoherenceMismatch) as e:
        print(f"violation: {e}", file=sys.stderr)
        return 1
    except NuSetError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
