"""Command-line front end: reproducible generation, colouring, and auditing runs.

Subcommands:

    gen       generate a random multigraph file (``mg`` format)
    colour    colour every edge sequentially; writes a graph+colouring dump
    schedule  colour by rounds of short chains; dump plus JSON round log
    audit     recompute the counting checks for a dump; writes a JSON report
    stats     sweep the scheduler over several L values; fraction-vs-bound rows
    orient    orient a fully coloured multiplicity-1 graph; edge/tail/head rows

Artifacts are plain text.  A graph file is the ``mg`` format; a colouring
dump is the graph followed by one ``edge_index colour`` line per edge, so
every artifact is self-contained.  ``--input``/``--output`` default to
stdin/stdout.  Every command is a pure function of its input bytes, flags,
and seed: repeated runs are byte-identical.

Exit codes: 0 when all asserted checks pass, 2 when a substantive bound
fails (the offender is described on stderr), 1 for usage and I/O errors,
including malformed inputs (reported with 1-based line numbers).

All numbers are printed exactly: plain decimal for integers and reduced
``p/q`` strings for rationals.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import TextIO

from .audit import (
    VERDICT_FAIL,
    _frac_str,
    audit_report,
    build_audit_graph,
    check_unimprovable,
    uncoloured_fraction_bounds,
)
from .colouring import Colouring
from .engine import MaxRoundsExceeded, colour_sequential, orient, run_scheduler
from .multigraph import Multigraph, generate_random

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BOUND = 2


# ---------------------------------------------------------------------------
# Argument plumbing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad usage; this front end reserves 2
    for bound failures, so usage errors are remapped to 1."""

    def error(self, message: str):  # noqa: D401 - argparse API
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def _int_list(text: str) -> list[int]:
    parts = [p for p in text.split(",") if p.strip()]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None
    if not values:
        raise argparse.ArgumentTypeError("expected at least one L value")
    return values


def _add_io(p: argparse.ArgumentParser, input_help: str) -> None:
    p.add_argument("--input", metavar="PATH", help=input_help + " (default stdin)")
    p.add_argument("--output", metavar="PATH", help="where to write (default stdout)")


def _build_parser() -> _Parser:
    parser = _Parser(prog="vizing", description=__doc__.split("\n", 1)[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("gen", help="generate a random multigraph")
    p.add_argument("--n", type=_nonneg_int, required=True, help="vertex count")
    p.add_argument("--delta", type=_positive_int, default=3, help="target maximum degree (default 3)")
    p.add_argument("--pi", type=_positive_int, default=1, help="target maximum multiplicity (default 1)")
    p.add_argument("--seed", type=int, default=0, help="generator seed (default 0)")
    p.add_argument("--output", metavar="PATH", help="where to write (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("colour", help="colour every edge of a graph")
    _add_io(p, "the mg graph file")
    p.add_argument("--workers", type=_positive_int, default=1, help="reserved; runs single-threaded (default 1)")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("schedule", help="colour by rounds of short chains")
    _add_io(p, "the mg graph file")
    p.add_argument("--L", type=_positive_int, required=True, help="chain-length scale; must exceed 2*delta")
    p.add_argument("--seed", type=int, default=0, help="schedule shuffle seed (default 0)")
    p.add_argument("--max-rounds", type=_positive_int, default=None, help="abort after this many rounds")
    p.add_argument("--workers", type=_positive_int, default=1, help="reserved; runs single-threaded (default 1)")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("audit", help="recompute counting checks for a colouring dump")
    _add_io(p, "the graph+colouring dump")
    p.add_argument("--L", type=_positive_int, required=True, help="scale for chain-degree and fraction checks")
    p.add_argument("--mode", choices=("simple", "iterated"), default="simple",
                   help="which no-short-chain state gates the asserted checks (default simple)")
    p.add_argument("--format", choices=("json", "tsv"), default="json", help="report format (default json)")
    p.add_argument("--workers", type=_positive_int, default=1, help="reserved; runs single-threaded (default 1)")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("stats", help="sweep the scheduler over several L values")
    _add_io(p, "the mg graph file")
    p.add_argument("--L", type=_int_list, required=True, metavar="L1,L2,...",
                   help="comma-separated L values to sweep")
    p.add_argument("--seed", type=int, default=0, help="schedule shuffle seed (default 0)")
    p.add_argument("--max-rounds", type=_positive_int, default=None, help="abort after this many rounds per L")
    p.add_argument("--format", choices=("json", "tsv"), default="json", help="row format (default json)")
    p.add_argument("--workers", type=_positive_int, default=1, help="reserved; runs single-threaded (default 1)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("orient", help="orient a fully coloured graph")
    _add_io(p, "the graph+colouring dump")
    p.set_defaults(func=cmd_orient)

    return parser


# ---------------------------------------------------------------------------
# Artifact I/O
# ---------------------------------------------------------------------------


def _read_text(args) -> str:
    if args.input:
        with open(args.input, "r", encoding="ascii") as fh:
            return fh.read()
    return sys.stdin.read()


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(args) -> Multigraph:
    return Multigraph.from_text(_read_text(args))


def _dump_colouring(c: Colouring) -> str:
    return c.graph.to_text() + c.to_text()


def _shift_lineno(msg: str, offset: int) -> str:
    if msg.startswith("line "):
        head, sep, rest = msg.partition(":")
        try:
            return f"line {int(head[5:]) + offset}{sep}{rest}"
        except ValueError:
            pass
    return msg


def _load_colouring(args) -> Colouring:
    """Parse a combined dump: the mg block, then one colour line per edge.

    Colour-line parse errors are renumbered to whole-file line numbers.
    """
    text = _read_text(args)
    lines = text.splitlines()
    head = lines[0].split() if lines else []
    if len(head) != 5 or head[0] != "mg":
        raise ValueError("line 1: expected header 'mg <n> <m> <delta> <pi>'")
    try:
        m = int(head[2])
    except ValueError:
        raise ValueError("line 1: header fields must be integers") from None
    g = Multigraph.from_text("\n".join(lines[: m + 1]) + "\n")
    try:
        return Colouring.from_dump(g, "\n".join(lines[m + 1 :]))
    except ValueError as ex:
        raise ValueError(_shift_lineno(str(ex), m + 1)) from None


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    g = generate_random(args.n, args.delta, args.pi, seed=args.seed)
    _emit(args, g.to_text())
    return EXIT_OK


def _colour_offenders(c: Colouring) -> list[str]:
    """Substantive failures of a supposedly full proper colouring."""
    g = c.graph
    out: list[str] = []
    if c.uncoloured_count:
        out.append(
            f"{c.uncoloured_count} edges left uncoloured; "
            f"first is edge {c.uncoloured()[0]}"
        )
    seen: dict[tuple[int, int], int] = {}
    for e in range(g.m):
        col = c.colour_of(e)
        if col == 0:
            continue
        for x in g.edges[e][:2]:
            if (x, col) in seen:
                out.append(
                    f"edges {seen[(x, col)]} and {e} share colour {col} at vertex {x}"
                )
                return out
            seen[(x, col)] = e
    return out


def cmd_colour(args) -> int:
    g = _load_graph(args)
    c = colour_sequential(g)
    offenders = _colour_offenders(c)
    if offenders:
        for line in offenders:
            print(f"bound failure: {line}", file=sys.stderr)
        return EXIT_BOUND
    _emit(args, _dump_colouring(c))
    return EXIT_OK


def cmd_schedule(args) -> int:
    g = _load_graph(args)
    try:
        c = run_scheduler(g, args.L, args.seed, max_rounds=args.max_rounds, log=sys.stderr)
    except MaxRoundsExceeded as ex:
        _emit(args, _dump_colouring(ex.state.colouring))
        print(f"bound failure: {ex}", file=sys.stderr)
        return EXIT_BOUND
    _emit(args, _dump_colouring(c))
    return EXIT_OK


def _audit_offenders(c: Colouring, L: int, mode: str, report) -> list[str]:
    """Asserted checks behind the audit exit code.  The degree caps always
    apply; the minimum-degree floor applies once no chain shorter than L
    exists; a fraction-bound verdict of fail is always substantive.
    Offending edges are only searched for in the (rare) failure branches.
    """
    g = c.graph
    out: list[str] = []
    cap_simple = (g.delta + g.pi) ** 4
    cap_iter = (g.delta + g.pi) ** 9
    if report.max_deg_simple > cap_simple:
        f, d = build_audit_graph(c, "simple").max_coloured_degree()
        out.append(
            f"coloured edge {f} lies on {d} chains; the cap is {cap_simple}"
        )
    if report.max_deg_iterated > cap_iter:
        f, d = build_audit_graph(c, "iterated", L_cap=L).max_coloured_degree()
        out.append(
            f"coloured edge {f} lies on {d} second-order chains; the cap is {cap_iter}"
        )
    if c.uncoloured_count and check_unimprovable(c, L, mode="simple"):
        if report.min_uncoloured_deg < L:
            e, d = build_audit_graph(c, "simple").min_uncoloured_degree()
            out.append(
                f"uncoloured edge {e} has chain degree {d} < L={L} "
                "although no chain shorter than L exists"
            )
    fb = uncoloured_fraction_bounds(c, L, mode=mode)
    if fb.verdict == VERDICT_FAIL:
        out.append(
            f"uncoloured fraction {_frac_str(fb.fraction)} exceeds the "
            f"{mode} bound {_frac_str(fb.bound)} at L={L}"
        )
    return out


def _report_tsv(report) -> str:
    rows = [
        ("max_deg_simple", str(report.max_deg_simple)),
        ("max_deg_iterated", str(report.max_deg_iterated)),
        ("min_uncoloured_deg", str(report.min_uncoloured_deg)),
        ("uncoloured_fraction", _frac_str(report.uncoloured_fraction)),
        (
            "weighted_min_mass",
            "" if report.weighted_min_mass is None else _frac_str(report.weighted_min_mass),
        ),
    ]
    lines = ["\t".join(row) for row in rows]
    for e, x, gamma, theta, count, bound, verdict in report.superb_count_checks:
        lines.append(
            "\t".join(
                [
                    "superb_count_check",
                    str(e),
                    str(x),
                    str(gamma),
                    str(theta),
                    str(count),
                    bound,
                    verdict,
                ]
            )
        )
    return "\n".join(lines) + "\n"


def cmd_audit(args) -> int:
    c = _load_colouring(args)
    report = audit_report(c, args.L)
    offenders = _audit_offenders(c, args.L, args.mode, report)
    if args.format == "tsv":
        _emit(args, _report_tsv(report))
    else:
        _emit(args, report.to_json() + "\n")
    if offenders:
        for line in offenders:
            print(f"bound failure: {line}", file=sys.stderr)
        return EXIT_BOUND
    return EXIT_OK


def cmd_stats(args) -> int:
    g = _load_graph(args)
    rows = []
    offenders: list[str] = []
    for L in args.L:
        c = run_scheduler(g, L, args.seed, max_rounds=args.max_rounds)
        simple = uncoloured_fraction_bounds(c, L, mode="simple")
        iterated = uncoloured_fraction_bounds(c, L, mode="iterated")
        rows.append(
            {
                "L": L,
                "uncoloured_fraction": _frac_str(simple.fraction),
                "simple_bound": _frac_str(simple.bound),
                "iterated_bound": _frac_str(iterated.bound),
            }
        )
        for mode, fb in (("simple", simple), ("iterated", iterated)):
            if fb.verdict == VERDICT_FAIL:
                offenders.append(
                    f"uncoloured fraction {_frac_str(fb.fraction)} exceeds the "
                    f"{mode} bound {_frac_str(fb.bound)} at L={L}"
                )
    if args.format == "tsv":
        header = "L\tuncoloured_fraction\tsimple_bound\titerated_bound"
        lines = [header] + [
            f"{r['L']}\t{r['uncoloured_fraction']}\t{r['simple_bound']}\t{r['iterated_bound']}"
            for r in rows
        ]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, json.dumps(rows, sort_keys=True, indent=2) + "\n")
    if offenders:
        for line in offenders:
            print(f"bound failure: {line}", file=sys.stderr)
        return EXIT_BOUND
    return EXIT_OK


def cmd_orient(args) -> int:
    c = _load_colouring(args)
    o = orient(c)
    bound = (c.graph.delta + 3) // 2
    counts = o.out_degree_counts()
    worst = [x for x, d in sorted(counts.items()) if d > bound]
    if worst:
        print(
            f"bound failure: vertex {worst[0]} has out-degree "
            f"{counts[worst[0]]} > {bound}",
            file=sys.stderr,
        )
        return EXIT_BOUND
    _emit(args, "".join(f"{e} {t} {h}\n" for e, (t, h) in sorted(o.direction.items())))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code or 0)
    try:
        return args.func(args)
    except MaxRoundsExceeded as ex:
        print(f"bound failure: {ex}", file=sys.stderr)
        return EXIT_BOUND
    except (OSError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
