"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or input error,
3 a resource limit was hit.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import colorings as col
from . import constructions as cons
from .errors import InfeasibleError, ResourceLimitError
from .expr import ExprError, parse_graph
from .families import GraphFamily, decomposition_family, decomposition_sequence, k5_determination_check
from .formulas import FORMULA_NAMES, FormulaParams, evaluate, verify_theorem
from .graph6 import read_family_file, to_string
from .oracle import ar_exact

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# numbering used by the original statements, accepted as synonyms
THEOREM_ALIASES = {"1.4": "clique", "1.8i": "h-prime", "1.8ii": "h", "1.12": "gadget"}
THEOREM_CHOICES = FORMULA_NAMES + tuple(THEOREM_ALIASES)


class UsageError(Exception):
    pass


def _theorem(name: str) -> str:
    return THEOREM_ALIASES.get(name, name)


def _family(args) -> list:
    graphs = []
    for path in args.family or []:
        graphs.extend(read_family_file(path))
    for text in args.expr or []:
        graphs.append(parse_graph(text))
    if not graphs:
        raise UsageError("give at least one --family FILE or --expr EXPRESSION")
    return graphs


def _add_family_args(p: argparse.ArgumentParser):
    p.add_argument("--family", action="append", metavar="FILE", help="graph6 file, one graph per line (repeatable)")
    p.add_argument("--expr", action="append", metavar="E", help="graph expression such as '2*K3' (repeatable)")


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def cmd_decompose(args) -> int:
    fam = GraphFamily.of(_family(args))
    dec = decomposition_family(fam, args.p)
    if args.emit == "g6":
        for g in dec:
            print(to_string(g))
    else:
        _emit({"family": fam.to_graph6(), "p": args.p, "decomposition": dec.to_graph6()})
    return EXIT_OK


def cmd_sequence(args) -> int:
    fam = GraphFamily.of(_family(args))
    seq = decomposition_sequence(fam, args.stages, reevaluate_p=not args.freeze_p)
    if args.emit == "json":
        _emit(seq.to_dict())
    else:
        print(f"p0 = {seq.p0}, status {seq.status}")
        for i, st in enumerate(seq.stages):
            print(f"stage {i}: p = {st.p}, |F| = {len(st.family)}, M = {' '.join(st.decomposition.to_graph6())}")
    return EXIT_OK


def cmd_ar_exact(args) -> int:
    fam = _family(args)

    def progress(best, nodes):
        print(f"best {best} after {nodes} nodes", file=sys.stderr, flush=True)

    res = ar_exact(args.n, fam, args.budget, progress=progress)
    _emit(res.to_dict())
    if res.status != "exact":
        print(f"budget exhausted: {res.lower} <= AR <= {res.upper}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK


def cmd_formula(args) -> int:
    name = _theorem(args.theorem)
    print(evaluate(name, args.n, args.p, args.k, args.q))
    return EXIT_OK


def cmd_construct(args) -> int:
    name = args.theorem
    n, p, k = args.n, args.p, args.k
    if name == "clique":
        c = cons.construct_kp_extremal(n, p)
    elif name in ("h", "cliques"):
        c = cons.construct_h_coloring(n, p, k)
    elif name == "h-prime":
        slots = cons.h_prime_slots(n, p, k)
        labels = args.labels if args.labels else [0] * len(slots)
        c = cons.construct_h_prime_coloring(n, p, k, labels)
    elif name == "petersen":
        c = cons.petersen_coloring(n)
    elif name == "gadget":
        c = cons.construct_gadget_extremal(n, p, k, args.sizes)
    elif name == "exceptional":
        c = cons.construct_exceptional_k3(n)
    else:
        raise UsageError(f"unknown construction {name!r}")
    text = col.dump_coloring(c)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {col.num_colors(c)} colours on K_{n} to {args.out}", file=sys.stderr)
    else:
        print(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    c = col.load_coloring(args.coloring, strict=not args.renormalize)
    fam = _family(args)
    bad = col.rainbow_violation(c, fam)
    out = {"n": c.n, "num_colors": col.num_colors(c), "family": [to_string(g) for g in fam], "free": bad is None}
    if bad is not None:
        out["violation"] = {"member": to_string(bad[0]), "embedding": sorted(bad[1].items())}
    _emit(out)
    return EXIT_OK if bad is None else EXIT_FAILED


def cmd_theorem(args) -> int:
    name = _theorem(args.theorem)
    fam = _family(args) if (args.family or args.expr) else None
    rep = verify_theorem(name, FormulaParams(args.n, args.p, args.k, args.q), fam)
    if args.emit == "json":
        _emit(rep.to_dict())
    else:
        print(rep.table())
    if rep.error:
        return EXIT_RESOURCE
    return EXIT_OK if rep.passed else EXIT_FAILED


def cmd_qmax(args) -> int:
    res = cons.max_extra_colors(args.p, args.k, _family(args), args.n)
    _emit(res.to_dict())
    return EXIT_OK


def cmd_k5_check(args) -> int:
    rep = k5_determination_check(reevaluate_p=not args.freeze_p)
    if args.emit == "json":
        _emit(rep.to_dict())
    else:
        for i, st in enumerate(rep.sequence.stages):
            print(f"stage {i}: p = {st.p}, |F| = {len(st.family)}, M = {' '.join(st.decomposition.to_graph6())}")
        print(rep.table())
    return EXIT_OK if rep.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="antiramsey", description="Decomposition families and anti-Ramsey computations.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decomposition family of a family")
    _add_family_args(p)
    p.add_argument("--p", type=int, default=None, help="override the subchromatic number")
    p.add_argument("--emit", choices=("g6", "json"), default="g6")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("sequence", help="decomposition family sequence")
    _add_family_args(p)
    p.add_argument("--stages", type=int, default=None)
    p.add_argument("--reeval-p", action="store_true", help="recompute p at every stage (default)")
    p.add_argument("--freeze-p", action="store_true", help="keep the stage-0 p throughout")
    p.add_argument("--emit", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("ar-exact", help="exact anti-Ramsey number by search")
    _add_family_args(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--budget", type=int, default=50_000_000)
    p.set_defaults(func=cmd_ar_exact)

    p = sub.add_parser("formula", help="closed-form value")
    p.add_argument("--theorem", choices=THEOREM_CHOICES, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, default=2)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("-q", type=int, default=None)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", help="write an extremal colouring as JSON")
    p.add_argument("--theorem", choices=("clique", "h", "h-prime", "cliques", "petersen", "gadget", "exceptional"),
                   required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, default=2)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--labels", type=int, nargs="+", help="extra-colour label per slot (h-prime)")
    p.add_argument("--sizes", type=int, nargs="+", help="class sizes, largest first (gadget)")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a colouring for rainbow members")
    p.add_argument("--coloring", required=True, metavar="FILE")
    p.add_argument("--renormalize", action="store_true", help="accept colours that are not normalized")
    _add_family_args(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("theorem", help="end-to-end check of a formula against its construction")
    p.add_argument("--theorem", choices=THEOREM_CHOICES, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, default=2)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("-q", type=int, default=None)
    p.add_argument("--emit", choices=("table", "json"), default="table")
    _add_family_args(p)
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("qmax", help="largest number of extra colours")
    p.add_argument("-n", type=int, default=None)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    _add_family_args(p)
    p.set_defaults(func=cmd_qmax)

    p = sub.add_parser("k5-check", help="replay the determination of K5 by its sequence")
    p.add_argument("--freeze-p", action="store_true")
    p.add_argument("--emit", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_k5_check)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, ExprError, InfeasibleError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
