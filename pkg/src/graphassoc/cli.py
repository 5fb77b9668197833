"""Command-line front end: ``graphassoc <command> [flags]``.

Exit codes: 0 success, 1 domain error, 2 failed verification, 64 usage error.
Set ``GRAPHASSOC_OUTPUT=json`` to make ``--json`` the default.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from typing import Iterable, TextIO

from . import bijections as bij
from .algebra import (
    Bounds,
    PROPERTIES,
    combo_to_json,
    coproduct,
    format_combo,
    get_algebra,
    parse_element,
    product,
    simplex_formula,
    verify,
)
from .algebra.verify import UnknownProperty
from .graph_core import (
    GraphAssocError,
    GraphFamily,
    SimpleGraph,
    build_graph,
    count_tubings,
    f_vector,
    iter_tubing_masks,
    parse_graph,
    parse_tubing,
    parse_tubing_text,
    Tubing,
)
from .projections import NamedProjection, project, theta_edges

EXIT_OK, EXIT_DOMAIN, EXIT_VERIFY, EXIT_USAGE = 0, 1, 2, 64

GRAMMAR = """\
grammars:
  tubing      n=<int>;{a,b,..}{c,..}   proper tubes only, e.g. n=4;{4}{1,4}{1,3,4}
  graph       family:<complete|cycle|path|edgeless>,n:<int>  or  n=<int>;edges=(1-2,2-3)
  permutation digit string 2431 or comma separated 2,4,3,1
  partition   ({1,2,4},{3})
  tree        balanced parentheses, a leaf is (), e.g. ((()())())
  basis       1 (unit), null(<n>), a tubing, or a permutation/partition/tree where it applies
  map         tonks-p | tonks-c | tonks-w | tonks-delta | edges=1-3,2-4"""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n{GRAMMAR}\n")
        raise SystemExit(EXIT_USAGE)


def _rank(text: str):
    if text in ("all", "vertices"):
        return text
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("rank must be 'all', 'vertices' or an integer") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    default_json = os.environ.get("GRAPHASSOC_OUTPUT", "").lower() == "json"
    common.add_argument("--json", action="store_true", default=default_json, help="JSON output")
    common.add_argument("--text", dest="json", action="store_false", help="text output")
    common.add_argument("--out", metavar="FILE", help="write output to FILE")

    p = _Parser(prog="graphassoc", description=__doc__, epilog=GRAMMAR,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_flags(sp):
        sp.add_argument("--family", choices=[f.value for f in GraphFamily])
        sp.add_argument("--n", type=int)
        sp.add_argument("--graph", help="graph literal (instead of --family/--n)")

    sp = sub.add_parser("enumerate", parents=[common], help="list tubings of a graph")
    graph_flags(sp)
    sp.add_argument("--rank", type=_rank, default="all", help="all, vertices or a rank")
    sp.add_argument("--count", action="store_true", help="print only the count")

    sp = sub.add_parser("fvector", parents=[common], help="face counts by dimension")
    graph_flags(sp)

    sp = sub.add_parser("convert", parents=[common], help="translate between encodings")
    sp.add_argument("--from", dest="src", required=True, choices=["perm", "partition", "tree", "tubing"])
    sp.add_argument("--to", dest="dst", required=True, choices=["perm", "partition", "tree", "tubing", "tau"])
    sp.add_argument("value")

    sp = sub.add_parser("project", parents=[common], help="apply a cellular projection")
    sp.add_argument("--map", required=True, dest="map_")
    sp.add_argument("--graph", help="source graph literal (defaults from the map)")
    sp.add_argument("--tubing", required=True)

    sp = sub.add_parser("multiply", parents=[common], help="product of two basis elements")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--left", required=True)
    sp.add_argument("--right", required=True)

    sp = sub.add_parser("coproduct", parents=[common], help="coproduct of a basis element")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--element", required=True)

    sp = sub.add_parser("formula", parents=[common], help="closed simplex product formula")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)

    sp = sub.add_parser("verify", parents=[common], help="run an identity check",
                        epilog="properties: " + ", ".join(PROPERTIES))
    sp.add_argument("--property", required=True, dest="prop")
    sp.add_argument("--n", type=int, default=5, help="exhaustive degree bound (default 5)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--limit", type=int, default=0, help="seeded samples beyond the bound (default 0)")
    return p


def _graph(args) -> SimpleGraph:
    if args.graph:
        if args.family or args.n is not None:
            raise UsageError("use either --graph or --family/--n")
        return parse_graph(args.graph)
    if not args.family or args.n is None:
        raise UsageError("--family and --n are required (or --graph)")
    return build_graph(GraphFamily(args.family), args.n)


def _emit(out: TextIO, args, payload, lines: Iterable[str]):
    if args.json:
        json.dump(payload, out, sort_keys=False)
        out.write("\n")
    else:
        for line in lines:
            out.write(line + "\n")


def cmd_enumerate(args, out):
    g = _graph(args)
    rank = args.rank
    if isinstance(rank, int) and not 0 <= rank <= g.n - 1:
        raise GraphAssocError(f"rank must be between 0 and {g.n - 1}")
    filt = None if rank == "all" else (g.n - 1 if rank == "vertices" else rank)
    if args.count:
        c = count_tubings(g, filt)
        _emit(out, args, {"graph": str(g), "rank": rank, "count": c}, [str(c)])
        return EXIT_OK
    if args.json:
        tubings = [str(Tubing(g, m)) for m in iter_tubing_masks(g, filt)]
        _emit(out, args, {"graph": str(g), "rank": rank, "count": len(tubings), "tubings": tubings}, [])
    else:
        for m in iter_tubing_masks(g, filt):
            out.write(str(Tubing(g, m)) + "\n")
    return EXIT_OK


def cmd_fvector(args, out):
    g = _graph(args)
    fv = f_vector(g)
    _emit(out, args, {"graph": str(g), "f_vector": fv}, [" ".join(map(str, fv))])
    return EXIT_OK


def _read(kind: str, text: str):
    if kind == "perm":
        return bij.perm_to_tubing(bij.parse_permutation(text))
    if kind == "partition":
        return bij.partition_to_tubing(bij.parse_partition(text))
    if kind == "tree":
        return bij.tree_to_tubing(bij.parse_tree(text))
    n, _ = parse_tubing_text(text)
    for fam in (GraphFamily.COMPLETE, GraphFamily.PATH):
        with contextlib.suppress(GraphAssocError):
            return parse_tubing(text, build_graph(fam, n))
    raise GraphAssocError("convert reads tubings of complete or path graphs only")


def cmd_convert(args, out):
    if args.dst == "tau":
        if args.src != "perm":
            raise UsageError("--to tau needs --from perm")
        result = bij.format_tree(bij.tau_classic(bij.parse_permutation(args.value)))
    else:
        t = _read(args.src, args.value)
        if args.dst == "tubing":
            result = str(t)
        elif args.dst == "perm":
            result = bij.format_permutation(bij.tubing_to_perm(t))
        elif args.dst == "partition":
            result = bij.format_partition(bij.tubing_to_partition(t))
        else:
            result = bij.format_tree(bij.tubing_to_tree(t))
    _emit(out, args, {"from": args.src, "to": args.dst, "input": args.value, "output": result}, [result])
    return EXIT_OK


_MAP_SOURCES = {
    NamedProjection.TONKS_P: GraphFamily.COMPLETE,
    NamedProjection.TONKS_C: GraphFamily.COMPLETE,
    NamedProjection.TONKS_W: GraphFamily.CYCLE,
    NamedProjection.TONKS_DELTA: GraphFamily.COMPLETE,
}


def _parse_edges(text: str):
    edges = []
    for item in text.split(","):
        a, sep, b = item.strip().partition("-")
        if not sep:
            raise UsageError(f"bad edge {item!r}; expected a-b")
        edges.append((int(a), int(b)))
    return edges


def cmd_project(args, out):
    n, _ = parse_tubing_text(args.tubing)
    if args.map_.startswith("edges="):
        g = parse_graph(args.graph) if args.graph else build_graph(GraphFamily.COMPLETE, n)
        t = parse_tubing(args.tubing, g)
        result = theta_edges(g, _parse_edges(args.map_[len("edges="):]), t)
    else:
        try:
            tag = NamedProjection(args.map_)
        except ValueError:
            raise UsageError(f"unknown map {args.map_!r}") from None
        g = parse_graph(args.graph) if args.graph else build_graph(_MAP_SOURCES[tag], n)
        result = project(tag, parse_tubing(args.tubing, g))
    _emit(out, args, {"map": args.map_, "input": args.tubing, "graph": str(result.graph), "output": str(result)},
          [str(result)])
    return EXIT_OK


def cmd_multiply(args, out):
    alg = get_algebra(args.algebra)
    res = product(alg, parse_element(alg, args.left), parse_element(alg, args.right))
    _emit(out, args, combo_to_json(alg, res), format_combo(res))
    return EXIT_OK


def cmd_coproduct(args, out):
    alg = get_algebra(args.algebra)
    res = coproduct(alg, parse_element(alg, args.element))
    _emit(out, args, combo_to_json(alg, res), format_combo(res))
    return EXIT_OK


def cmd_formula(args, out):
    res = simplex_formula(args.p, args.l, args.q)
    alg = get_algebra("dsym")
    _emit(out, args, combo_to_json(alg, res), format_combo(res))
    return EXIT_OK


def cmd_verify(args, out):
    try:
        rep = verify(args.prop, Bounds(n=args.n, limit=args.limit), seed=args.seed)
    except UnknownProperty:
        raise UsageError(f"unknown property {args.prop!r}; choose from {', '.join(PROPERTIES)}") from None
    lines = ["pass"] if rep.passed else ["fail", f"counterexample: {rep.counterexample}"]
    payload = {"property": rep.property, "passed": rep.passed, "checked": rep.checked,
               "counterexample": rep.counterexample, "n": args.n, "seed": args.seed, "limit": args.limit}
    _emit(out, args, payload, lines)
    return EXIT_OK if rep.passed else EXIT_VERIFY


COMMANDS = {
    "enumerate": cmd_enumerate,
    "fvector": cmd_fvector,
    "convert": cmd_convert,
    "project": cmd_project,
    "multiply": cmd_multiply,
    "coproduct": cmd_coproduct,
    "formula": cmd_formula,
    "verify": cmd_verify,
}


def run(argv=None, stdout: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    stdout = stdout or sys.stdout
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                return COMMANDS[args.command](args, fh)
        return COMMANDS[args.command](args, stdout)
    except UsageError as exc:
        sys.stderr.write(f"graphassoc {args.command}: error: {exc}\n{GRAMMAR}\n")
        return EXIT_USAGE
    except (GraphAssocError, ValueError) as exc:
        sys.stderr.write(f"graphassoc {args.command}: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
