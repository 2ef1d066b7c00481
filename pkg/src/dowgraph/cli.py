"""Command line front end.

Exit codes: 0 on success, 1 on any input or usage problem, 2 when an
internal self-check fails (which would mean the library contradicted
itself; report it).
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from collections.abc import Sequence

from .census import census_records, run_census, summarize_records, write_records_csv
from .errors import InputError, InternalCheckError
from .graphs import build_graph, to_dot
from .hamiltonian import (
    count_hamiltonian_sets,
    edge_mask,
    enumerate_hamiltonian_sets,
    format_hamiltonian_set,
    mask_to_bits,
)
from .maximality import DEFAULT_CROSS_CHECK_LIMIT, analyze, find_framing_cord
from .words import parse, render, split_composition, tangled_cord


class _Parser(argparse.ArgumentParser):
    # usage problems are input problems: exit 1, not argparse's default 2
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_word_argument(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "word",
        nargs="+",
        help="a double occurrence word, compact (121323) or tokens (1 2 1 3 2 3)",
    )


def _add_format_argument(sub: argparse.ArgumentParser, choices: Sequence[str]) -> None:
    sub.add_argument("--format", choices=list(choices), default="text")


def _add_output_argument(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")


def build_parser() -> _Parser:
    parser = _Parser(prog="dowgraph", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("analyze", help="full maximality report for a word")
    _add_word_argument(sub)
    _add_format_argument(sub, ("text", "json"))
    _add_output_argument(sub)
    sub.add_argument(
        "--cross-check-limit",
        type=int,
        default=DEFAULT_CROSS_CHECK_LIMIT,
        metavar="N",
        help="enumerate the count only while n stays within N",
    )

    sub = commands.add_parser("count", help="number of Hamiltonian sets of a word")
    _add_word_argument(sub)
    _add_format_argument(sub, ("text", "json"))
    _add_output_argument(sub)

    sub = commands.add_parser("enumerate", help="list every Hamiltonian set of a word")
    _add_word_argument(sub)
    _add_format_argument(sub, ("text", "json"))
    _add_output_argument(sub)

    sub = commands.add_parser("tc", help="print the tangled cord with n letters")
    sub.add_argument("n", type=int)
    _add_format_argument(sub, ("text", "json"))
    _add_output_argument(sub)

    sub = commands.add_parser("census", help="analyze every class with n letters")
    sub.add_argument("n", type=int)
    _add_format_argument(sub, ("text", "json", "csv"))
    _add_output_argument(sub)
    sub.add_argument("--threads", type=int, default=1, metavar="K",
                     help="worker processes for the per-class analysis")
    sub.add_argument("--cross-check-limit", type=int,
                     default=DEFAULT_CROSS_CHECK_LIMIT, metavar="N")
    sub.add_argument("--unsafe-large", action="store_true",
                     help="waive the census size guard")

    sub = commands.add_parser("framing", help="greedy framing cord of a word")
    _add_word_argument(sub)
    _add_format_argument(sub, ("text", "json"))
    _add_output_argument(sub)

    sub = commands.add_parser("export-dot", help="graph structure as DOT text")
    _add_word_argument(sub)
    _add_format_argument(sub, ("text",))
    _add_output_argument(sub)

    return parser


def _emit(text: str, output: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze(parse(" ".join(args.word)), cross_check_limit=args.cross_check_limit)
    if args.format == "json":
        _emit(json.dumps(report.to_json_dict(), indent=2), args.output)
    else:
        lines = [
            f"word: {render(report.word)}",
            f"n: {report.n}",
            f"count: {'skipped' if report.count is None else report.count}",
            f"bound: {report.bound}",
            f"maximal: {str(report.is_maximal).lower()}",
        ]
        if report.failing_sigma is not None:
            lines.append(f"failing letters: {sorted(report.failing_sigma)}")
        lines.append(f"composition: {str(report.is_composition).lower()}")
        if report.framing_cord is not None:
            lines.append("framing cord: " + " ".join(str(a) for a in report.framing_cord))
        if report.minimal_even_split is not None:
            split = report.minimal_even_split
            lines.append(
                f"minimal even split: {sorted(split.sigma)} "
                f"projecting to {render(split.projection)}"
            )
        _emit("\n".join(lines), args.output)
    if not report.consistent:
        print(
            f"internal check failed: count {report.count} disagrees with the "
            f"parity verdict on {render(report.word)}",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    value = count_hamiltonian_sets(build_graph(parse(" ".join(args.word))))
    _emit(json.dumps(value) if args.format == "json" else str(value), args.output)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    graph = build_graph(parse(" ".join(args.word)))
    sets = enumerate_hamiltonian_sets(graph)
    if args.format == "json":
        payload = [
            {
                "mask": mask_to_bits(edge_mask(graph, hs), graph.num_real_edges),
                "paths": [list(p.vertices) for p in hs.sorted_paths()],
            }
            for hs in sets
        ]
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        lines = [
            f"{mask_to_bits(edge_mask(graph, hs), graph.num_real_edges)}  "
            f"{format_hamiltonian_set(hs)}"
            for hs in sets
        ]
        _emit("\n".join(lines), args.output)
    return 0


def _cmd_tc(args: argparse.Namespace) -> int:
    word = render(tangled_cord(args.n))
    _emit(json.dumps(word) if args.format == "json" else word, args.output)
    return 0


def _cmd_census(args: argparse.Namespace) -> int:
    records = census_records(
        args.n,
        threads=args.threads,
        cross_check_limit=args.cross_check_limit,
        unsafe_large=args.unsafe_large,
    )
    summary = summarize_records(args.n, records)
    if args.format == "csv":
        buffer = io.StringIO()
        write_records_csv(records, buffer)
        _emit(buffer.getvalue(), args.output)
    elif args.format == "json":
        _emit(json.dumps(summary.to_json_dict(), indent=2), args.output)
    else:
        lines = [
            f"n: {summary.n}",
            f"classes: {summary.total_classes}",
            "maximal: " + " ".join(render(w) for w in summary.maximal_classes),
            f"bound_violations: {summary.bound_violations}",
            f"equivalence_failures: {summary.equivalence_failures}",
        ]
        _emit("\n".join(lines), args.output)
    expected = (tangled_cord(args.n),)
    if (
        summary.bound_violations
        or summary.equivalence_failures
        or summary.maximal_classes != expected
    ):
        print(
            "internal check failed: census verification did not come out clean",
            file=sys.stderr,
        )
        return 2
    return 0


def _cmd_framing(args: argparse.Namespace) -> int:
    word = parse(" ".join(args.word))
    cord = find_framing_cord(word)
    if args.format == "json":
        payload: dict = {"word": render(word)}
        if cord is None:
            left, right = split_composition(word)
            payload["framing_cord"] = None
            payload["composition"] = [render(left), render(right)]
        else:
            payload["framing_cord"] = list(cord)
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        if cord is None:
            left, right = split_composition(word)
            _emit(
                f"no framing cord: the word splits as ({render(left)})({render(right)})",
                args.output,
            )
        else:
            _emit(" ".join(str(a) for a in cord), args.output)
    return 0


def _cmd_export_dot(args: argparse.Namespace) -> int:
    _emit(to_dot(build_graph(parse(" ".join(args.word)))), args.output)
    return 0


_COMMANDS = {
    "analyze": _cmd_analyze,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "tc": _cmd_tc,
    "census": _cmd_census,
    "framing": _cmd_framing,
    "export-dot": _cmd_export_dot,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalCheckError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
