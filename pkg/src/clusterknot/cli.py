"""Command-line interface.

Exit status is 0 on success, 1 when a computation raises a domain error and
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .braid import BraidWord, parse_braid
from .errors import ClusterKnotError
from .projection import PRESETS, basis_labels, rho, rho_class
from .skein import homfly_skein, jones_skein, jones_via_bracket

FORMATS = ("plain", "json", "latex")


def _emit(args, plain: str, data, latex: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    elif args.format == "latex":
        print(latex if latex is not None else plain)
    else:
        print(plain)


def _braid(args) -> BraidWord:
    return parse_braid(args.braid, args.strands)


def _cmd_jones(args) -> int:
    b = _braid(args)
    value = jones_via_bracket(b, args.limit) if args.oracle else jones_skein(b, args.limit)
    data = {"braid": b.to_json(), "route": "bracket" if args.oracle else "skein", "value": value.to_json()}
    _emit(args, value.to_text(), data, value.to_latex())
    return 0


def _cmd_homfly(args) -> int:
    b = _braid(args)
    value = homfly_skein(b, args.limit)
    _emit(args, value.to_text(), {"braid": b.to_json(), "value": value.to_json()}, value.to_latex())
    return 0


def _cmd_rho(args) -> int:
    b = _braid(args)
    x = rho(b, PRESETS[args.params]())
    _emit(args, x.to_text(), {"braid": b.to_json(), **x.to_json()})
    return 0


def _cmd_class(args) -> int:
    b = _braid(args)
    vector, scale = rho_class(b)
    labels = basis_labels(b.strands)
    plain = f"scale {scale}\n" + "\n".join(f"{lab}\t{v}" for lab, v in zip(labels, vector))
    _emit(args, plain, {"braid": b.to_json(), "basis": labels, "vector": list(vector), "scale": scale})
    return 0


def _seed(args):
    from .cluster import preset_seed, seed_from_json

    if args.matrix:
        return seed_from_json(Path(args.matrix), args.semifield)
    return preset_seed(args.preset, args.semifield)


def _cmd_mutate(args) -> int:
    from .cluster import bratteli_from_mutations, mutate_seed, mutation_graph

    seed = _seed(args)
    if args.sequence:
        for k in args.sequence.replace(",", " ").split():
            seed = mutate_seed(seed, int(k))
        data = seed.to_json()
        plain = "\n".join(
            [f"matrix {data['entries']}"]
            + [f"x{i + 1} = {x}" for i, x in enumerate(data["cluster"])]
            + [f"c{i + 1} = {c}" for i, c in enumerate(data["coeffs"])]
        )
        _emit(args, plain, data)
        return 0
    graph = mutation_graph(seed, args.depth)
    diagram = bratteli_from_mutations(graph)
    if args.bratteli:
        Path(args.bratteli).write_text(diagram.to_dot())
    sizes = diagram.level_sizes
    _emit(args, "level sizes " + ",".join(map(str, sizes)), {"level_sizes": sizes, **diagram.to_json()})
    return 0


def _cmd_bratteli(args) -> int:
    from .cluster import bratteli_from_mutations, mutation_graph

    diagram = bratteli_from_mutations(mutation_graph(_seed(args), args.depth))
    if args.format == "json":
        print(json.dumps(diagram.to_json(), indent=2, sort_keys=True))
    else:
        sys.stdout.write(diagram.to_dot())
    return 0


def _cmd_bridge(args) -> int:
    from .bridge import bridge_report

    b = _braid(args)
    if args.N is not None:
        report = bridge_report(b, N=args.N)
    else:
        lo, hi = (int(x) for x in args.N_range.split(":"))
        report = bridge_report(b, N_range=range(lo, hi + 1))
    data = report.to_json()
    lines = [f"lhs {data['lhs']['text']}"]
    lines += [f"N={c['N']}\t{'agree' if c['agree'] else 'differ'}\t{c['rhs']}" for c in data["N_candidates"]]
    _emit(args, "\n".join(lines), data)
    return 0


def _cmd_verify(args) -> int:
    from .verify import run_suite

    results = run_suite(args.suite)
    ok = all(c.passed for _, checks in results for c in checks)
    if args.format == "json":
        data = {
            "suites": [
                {"suite": name, "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks]}
                for name, checks in results
            ],
            "passed": ok,
        }
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for name, checks in results:
            print(f"== {name}")
            for c in checks:
                print(c.line())
        print("all passed" if ok else "FAILURES")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain")

    braid_opts = argparse.ArgumentParser(add_help=False)
    braid_opts.add_argument("braid", help='braid word, e.g. "s1^3" or "1 -2 1"')
    braid_opts.add_argument("--strands", type=int, default=None, help="strand count (default: inferred)")
    braid_opts.add_argument("--limit", type=int, default=None, help="crossing cap (default 16 or $CK_LIMIT)")

    seed_opts = argparse.ArgumentParser(add_help=False)
    src = seed_opts.add_mutually_exclusive_group()
    src.add_argument("--preset", choices=("S02", "S11"), default="S02")
    src.add_argument("--matrix", metavar="FILE", help="JSON file {n, entries, frozen}")
    seed_opts.add_argument("--semifield", choices=("universal", "tropical", "trivial"), default="universal")
    seed_opts.add_argument("--depth", type=int, default=4)

    parser = argparse.ArgumentParser(prog="clusterknot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("jones", parents=[common, braid_opts], help="Jones polynomial")
    p.add_argument("--oracle", action="store_true", help="use the Kauffman bracket route")
    p.set_defaults(func=_cmd_jones)

    p = sub.add_parser("homfly", parents=[common, braid_opts], help="HOMFLY polynomial")
    p.set_defaults(func=_cmd_homfly)

    p = sub.add_parser("rho", parents=[common, braid_opts], help="image in the projection algebra")
    p.add_argument("--params", choices=("paper", "tl", "parametric"), default="paper")
    p.set_defaults(func=_cmd_rho)

    p = sub.add_parser("class", parents=[common, braid_opts], help="integer class vector of rho(b)")
    p.set_defaults(func=_cmd_class)

    p = sub.add_parser("mutate", parents=[common, seed_opts], help="mutate a seed or build its mutation graph")
    p.add_argument("--sequence", help='1-based directions, e.g. "1 2 1" or "1,2,1"')
    p.add_argument("--bratteli", metavar="FILE", help="write the Bratteli diagram as DOT")
    p.set_defaults(func=_cmd_mutate)

    p = sub.add_parser("bratteli", parents=[common, seed_opts], help="Bratteli diagram (DOT, or JSON)")
    p.set_defaults(func=_cmd_bratteli)

    p = sub.add_parser("bridge", parents=[common, braid_opts], help="compare skein Jones with the bridge formula")
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--N-range", default="0:6", help="inclusive range lo:hi searched when --N is absent")
    p.set_defaults(func=_cmd_bridge)

    p = sub.add_parser("verify", parents=[common], help="run self-check suites")
    p.add_argument(
        "suite",
        nargs="?",
        default="all",
        choices=("all", "laurent", "catalan", "braid-relations", "markov", "oracle", "bridge-identities"),
    )
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ClusterKnotError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
