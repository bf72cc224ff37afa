"""Command line front end: verify, glue, search, extend, table, export-svg.

Exit codes: 0 success, 1 parse or usage error, 2 semantic validation
failure, 3 resource-cap exhaustion.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import sys

from .moves import extend_to
from .permutations import Permutation
from .search import SearchLimitError, SearchQuery, canonical_form, enumerate_solutions
from .svg import render_svg
from .tables import NoFillingPairError, min_intersection
from .verify import FillingInstance, glue, validate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_RESOURCES = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to status 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _add_sigma_arguments(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--sigma", help='cycle notation, e.g. "(1,2,3,4)"')
    group.add_argument("--sigma-file", help="read cycle notation from a file, '-' for stdin")
    sub.add_argument("--n", type=int, default=None, help="crossing count override (degree = 4n)")


def _load_sigma(args: argparse.Namespace) -> Permutation:
    if args.sigma is not None:
        text = args.sigma
    elif args.sigma_file == "-":
        text = sys.stdin.read()
    else:
        with open(args.sigma_file, encoding="utf-8") as fh:
            text = fh.read()
    degree = 4 * args.n if args.n else None
    return Permutation.parse(text, degree=degree)


def _cmd_verify(args: argparse.Namespace) -> int:
    sigma = _load_sigma(args)
    report = validate(FillingInstance(sigma, args.genus, args.punctures))
    for line in report.lines():
        print(line)
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_glue(args: argparse.Namespace) -> int:
    sigma = _load_sigma(args)
    try:
        surface = glue(sigma, args.punctures)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    for line in surface.lines():
        print(line)
    print(f"vertices={surface.vertex_count}")
    print(f"edges={surface.edge_count}")
    print(f"faces={surface.face_count}")
    print(f"euler={surface.euler_characteristic}")
    print(f"genus={surface.genus}")
    return EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    query = SearchQuery(
        genus=args.genus,
        punctures=args.punctures,
        n=args.n,
        dedup=args.dedup,
        limit=args.limit,
        naive=args.naive,
        max_nodes=args.max_nodes,
        max_seconds=args.max_seconds,
    )
    result = enumerate_solutions(query)
    for perm in result.solutions:
        print(perm)
    if args.dedup:
        classes = len(result.solutions)
    else:
        classes = len({canonical_form(p) for p in result.solutions})
    print(f"count={result.raw_count} dedup={classes} nodes={result.nodes_explored}")
    return EXIT_OK


def _cmd_extend(args: argparse.Namespace) -> int:
    sigma = _load_sigma(args)
    instance = FillingInstance(sigma, args.genus, args.punctures)
    try:
        extended = extend_to(instance, args.target_p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(extended.sigma)
    for line in validate(extended).lines():
        print(line)
    return EXIT_OK


def _cmd_table(args: argparse.Namespace) -> int:
    grid_flags = (args.max_genus is not None, args.max_punctures is not None)
    if any(grid_flags):
        if not all(grid_flags):
            print("error: grid mode needs both --max-genus and --max-punctures", file=sys.stderr)
            return EXIT_USAGE
        print("g\\p " + " ".join(str(p) for p in range(args.max_punctures + 1)))
        for g in range(args.max_genus + 1):
            cells = []
            for p in range(args.max_punctures + 1):
                try:
                    cells.append(str(min_intersection(g, p)))
                except NoFillingPairError:
                    cells.append("none")
            print(f"{g} " + " ".join(cells))
        return EXIT_OK
    if args.genus is None or args.punctures is None:
        print("error: need --genus and --punctures, or both --max-* flags", file=sys.stderr)
        return EXIT_USAGE
    try:
        print(min_intersection(args.genus, args.punctures))
    except NoFillingPairError:
        print("none")
    return EXIT_OK


def _cmd_export_svg(args: argparse.Namespace) -> int:
    sigma = _load_sigma(args)
    try:
        surface = glue(sigma, args.punctures)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    markup = render_svg(surface)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(markup + "\n")
    print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fillperm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run all structural checks on a certificate")
    _add_sigma_arguments(p_verify)
    p_verify.add_argument("--genus", type=int, required=True)
    p_verify.add_argument("--punctures", type=int, required=True)
    p_verify.set_defaults(func=_cmd_verify)

    p_glue = sub.add_parser("glue", help="print the polygon decomposition")
    _add_sigma_arguments(p_glue)
    p_glue.add_argument("--punctures", type=int, required=True)
    p_glue.set_defaults(func=_cmd_glue)

    p_search = sub.add_parser("search", help="enumerate filling permutations")
    p_search.add_argument("--genus", type=int, required=True)
    p_search.add_argument("--punctures", type=int, required=True)
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--dedup", action="store_true", help="quotient by label symmetries")
    p_search.add_argument("--naive", action="store_true", help="force the brute-force oracle")
    p_search.add_argument("--limit", type=int, default=None, help="stop after this many solutions")
    p_search.add_argument("--max-nodes", type=int, default=10**9)
    p_search.add_argument("--max-seconds", type=float, default=600.0)
    p_search.set_defaults(func=_cmd_search)

    p_extend = sub.add_parser("extend", help="apply double-bigon moves to raise punctures")
    _add_sigma_arguments(p_extend)
    p_extend.add_argument("--genus", type=int, required=True)
    p_extend.add_argument("--punctures", type=int, required=True)
    p_extend.add_argument("--target-p", type=int, required=True, dest="target_p")
    p_extend.set_defaults(func=_cmd_extend)

    p_table = sub.add_parser("table", help="minimal crossing numbers")
    p_table.add_argument("--genus", type=int, default=None)
    p_table.add_argument("--punctures", type=int, default=None)
    p_table.add_argument("--max-genus", type=int, default=None)
    p_table.add_argument("--max-punctures", type=int, default=None)
    p_table.set_defaults(func=_cmd_table)

    p_svg = sub.add_parser("export-svg", help="draw the polygon decomposition")
    _add_sigma_arguments(p_svg)
    p_svg.add_argument("--punctures", type=int, required=True)
    p_svg.add_argument("--out", required=True)
    p_svg.set_defaults(func=_cmd_export_svg)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SearchLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCES
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
