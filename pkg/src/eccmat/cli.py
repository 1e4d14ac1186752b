"""Command line: ``eccmat build|eccmat|spectrum|inertia|verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 invalid graph (e.g. disconnected input).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import closed_forms as cf
from . import verify as vf
from .formats import format_edge_list, parse_edge_list, parse_graph6, to_graph6
from .graph import Graph, GraphError, family
from .linalg import eig_symmetric, inertia_exact
from .metric import DisconnectedGraphError, eccentricity_matrix, matrix_to_csv

FORMAT_VERSION = 1

log = logging.getLogger("eccmat")


class UsageError(Exception):
    pass


def _int_params(tokens: list[str]) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise UsageError(f"family parameters must be integers: {tokens}") from exc


def _load_graph(args) -> tuple[Graph, dict]:
    sources = [bool(args.family), args.edge_list is not None, args.graph6 is not None]
    if sum(sources) != 1:
        raise UsageError("give exactly one input: FAMILY PARAMS..., --edge-list FILE or --graph6 STRING")
    if args.edge_list is not None:
        text = sys.stdin.read() if args.edge_list == "-" else Path(args.edge_list).read_text()
        return parse_edge_list(text), {"edge_list": args.edge_list}
    if args.graph6 is not None:
        return parse_graph6(args.graph6), {"graph6": args.graph6}
    name, *rest = args.family
    params = _int_params(rest)
    return family(name, *params), {"family": name, "params": params}


def _envelope(command: str, source: dict, result) -> str:
    return json.dumps(
        {"format_version": FORMAT_VERSION, "command": command, "input": source, "result": result},
        sort_keys=True,
    )


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    g, _ = _load_graph(args)
    _emit(to_graph6(g) if args.format == "graph6" else format_edge_list(g), args.out)
    return 0


def cmd_eccmat(args) -> int:
    g, source = _load_graph(args)
    m = eccentricity_matrix(g)
    if args.format == "csv":
        _emit(matrix_to_csv(m), args.out)
    else:
        result = {"n": g.n, "entries": [[int(x) for x in row] for row in m]}
        _emit(_envelope("eccmat", source, result), args.out)
    return 0


def cmd_spectrum(args) -> int:
    if args.exact_family:
        name = args.exact_family if isinstance(args.exact_family, str) else None
        tokens = list(args.family)
        if name is None:
            if not tokens:
                raise UsageError("--exact-family needs a family name")
            name, tokens = tokens[0], tokens[1:]
        fs = cf.family_spectrum(name, *_int_params(tokens))
        _emit(_envelope("spectrum", {"exact_family": name, "params": list(fs.params)}, fs.to_json()), args.out)
        return 0
    g, source = _load_graph(args)
    spec = eig_symmetric(eccentricity_matrix(g), tol=args.tol)
    _emit(_envelope("spectrum", source, {"spectrum": spec.to_json()}), args.out)
    return 0


def cmd_inertia(args) -> int:
    g, source = _load_graph(args)
    inertia = inertia_exact(eccentricity_matrix(g))
    result = {"n_plus": inertia.n_plus, "n_minus": inertia.n_minus, "n_zero": inertia.n_zero}
    _emit(_envelope("inertia", source, result), args.out)
    return 0


def _parse_grid(text: str | None):
    """``a..b`` for an integer range, otherwise a JSON list."""
    if text is None:
        return None
    if ".." in text and not text.lstrip().startswith("["):
        lo, hi = text.split("..")
        return list(range(int(lo), int(hi) + 1))
    try:
        grid = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--grid must be 'a..b' or a JSON list: {exc}") from exc
    return [tuple(p) if isinstance(p, list) else p for p in grid]


def cmd_verify(args) -> int:
    if args.claim not in vf.CLAIMS:
        raise UsageError(f"unknown claim {args.claim!r}; choose from {', '.join(vf.CLAIMS)}")
    reports = vf.run_claim(
        args.claim,
        max_n=args.max_n,
        jobs=vf.resolve_jobs(args.jobs),
        seed=args.seed,
        tol=args.tol,
        grid=_parse_grid(args.grid),
        family=args.family,
        allow_n10=args.allow_n10,
    )
    if args.format == "table":
        _emit("\n\n".join(r.to_table() for r in reports), args.out)
    else:
        payload = [r.to_json(timing=args.timing) for r in reports]
        _emit(_envelope("verify", {"claim": args.claim}, payload), args.out)
    return 0 if all(r.passed for r in reports) else 1


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", nargs="*", help="family name and integer parameters, e.g. 'lollipop 3 2'")
    p.add_argument("--edge-list", metavar="FILE", help="edge-list file ('-' for stdin)")
    p.add_argument("--graph6", metavar="STRING", help="graph6-encoded graph")
    p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eccmat", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a graph and write it out")
    _add_input(p)
    p.add_argument("--format", choices=["edge-list", "graph6"], default="edge-list")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("eccmat", help="eccentricity matrix")
    _add_input(p)
    p.add_argument("--format", choices=["csv", "json"], default="json")
    p.set_defaults(func=cmd_eccmat)

    p = sub.add_parser("spectrum", help="eccentricity spectrum (numeric, or closed form with --exact-family)")
    _add_input(p)
    p.add_argument("--exact-family", nargs="?", const=True, default=None, metavar="FAMILY")
    p.add_argument("--tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("inertia", help="exact inertia of the eccentricity matrix")
    _add_input(p)
    p.set_defaults(func=cmd_inertia)

    p = sub.add_parser("verify", help="run a verification claim")
    p.add_argument("claim", help=f"one of: {', '.join(vf.CLAIMS)}")
    p.add_argument("--max-n", type=int, default=9)
    p.add_argument("--allow-n10", action="store_true", help="permit the n=10 tree sweep")
    p.add_argument("--grid", help="'a..b' or a JSON list of parameter points")
    p.add_argument("--family", help="restrict crosscheck/inertia to one family")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $ECCMAT_JOBS or 1)")
    p.add_argument("--seed", type=int, default=vf.DEFAULT_SEED)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in JSON output")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except DisconnectedGraphError as exc:
        print(f"eccmat: invalid graph: {exc}", file=sys.stderr)
        return 3
    except (UsageError, GraphError, ValueError, OSError) as exc:
        print(f"eccmat: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
