"""Command-line driver.

Batch-style: each invocation reads one or two documents (file path, or `-`
for standard input), runs one computation, and prints either human-readable
lines or a JSON envelope `{command, input, result, stats}`.  Exit codes:
0 for any completed computation including negative answers, 2 for usage
errors, 3 for parse errors, 4 for precondition failures (e.g. chi of a
non-knot), 1 for a failing selftest.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence, Union

from .chords import ChordDiagram, interlacement, is_d_diagram, realize
from .correspondence import chi, complete_diagonal, psi
from .errors import (
    BudgetExceededError,
    PreconditionError,
    SameVertexError,
    TooLargeError,
    UnknownVertexError,
)
from .formats import (
    KIND_CHORD,
    KIND_LABELED,
    KIND_LOOPED,
    Document,
    ParseError,
    format_move,
    parse_document,
    parse_move,
    serialize_document,
)
from .graphs import LabeledGraph, LoopedGraph
from .invariants import component_count, is_graph_knot, knot_matrix, writhe
from .moves import GRAPH_FAMILIES, LOOP_FAMILIES, apply_move, list_moves
from .search import SearchBounds, prove_equivalent
from .selftest import run_selftest


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # noqa: D102 - argparse hook
        raise UsageError(f"{message}\n{self.format_usage()}".rstrip())


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="graphlinks", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common])
    p.add_argument("file")
    p = sub.add_parser("chi", parents=[common])
    p.add_argument("file")
    p = sub.add_parser("psi", parents=[common])
    p.add_argument("file")
    p.add_argument("--seed-diagonal", metavar="BITS")
    p = sub.add_parser("roundtrip", parents=[common])
    p.add_argument("file")
    p = sub.add_parser("moves", parents=[common])
    p.add_argument("mode", choices=("list", "apply"))
    p.add_argument("file")
    p.add_argument("steps", nargs="*", metavar="MOVE")
    p.add_argument("--families", metavar="F1,F2,...")
    p = sub.add_parser("realize", parents=[common])
    p.add_argument("file")
    p.add_argument("--max-vertices", type=int, default=9)
    p.add_argument("--time-budget", type=float, metavar="SECONDS")
    p = sub.add_parser("interlace", parents=[common])
    p.add_argument("file")
    p = sub.add_parser("ddiagram", parents=[common])
    p.add_argument("file")
    p = sub.add_parser("equiv", parents=[common])
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--families", metavar="F1,F2,...")
    p.add_argument("--max-depth", type=int, default=SearchBounds.max_depth)
    p.add_argument("--max-states", type=int, default=SearchBounds.max_states)
    p.add_argument("--max-vertices", type=int)
    sub.add_parser("selftest", parents=[common])
    return parser


def _read(path: str, stdin) -> tuple[Union[str, bytes], str]:
    if path == "-":
        text = stdin.read() if hasattr(stdin, "read") else stdin
        return text, "<stdin>"
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read(), path
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror or e}") from None


_KIND_WORD = {KIND_LABELED: "a labeled graph", KIND_LOOPED: "a looped graph", KIND_CHORD: "a chord diagram"}


def _load(path: str, stdin, kinds: Optional[tuple[str, ...]] = None) -> Document:
    text, source = _read(path, stdin)
    doc = parse_document(text, source=source)
    if kinds is not None and doc.kind not in kinds:
        want = " or ".join(_KIND_WORD[k] for k in kinds)
        raise PreconditionError(f"{source}: expected {want}, got {_KIND_WORD[doc.kind]}")
    return doc


def _parse_families(spec: Optional[str]) -> Optional[tuple[str, ...]]:
    if spec is None:
        return None
    fams = tuple(f for f in (piece.strip() for piece in spec.split(",")) if f)
    known = set(GRAPH_FAMILIES) | set(LOOP_FAMILIES)
    for f in fams:
        if f not in known:
            raise UsageError(f"unknown move family {f!r}")
    if not fams:
        raise UsageError("--families must name at least one family")
    return fams


def _bool_word(b: bool) -> str:
    return "true" if b else "false"


def _doc_lines(payload) -> str:
    return serialize_document(Document.of(payload))


# each handler returns (result, stats, text, sources)
def _cmd_info(args, stdin):
    doc = _load(args.file, stdin)
    g = doc.payload
    if isinstance(g, LabeledGraph):
        result: dict[str, Any] = {
            "components": component_count(g),
            "knot": is_graph_knot(g),
        }
        lines = [f"components {result['components']}", f"knot {_bool_word(result['knot'])}"]
        if result["knot"]:
            report = writhe(g)
            result["w"] = list(report.per_vertex)
            result["total"] = report.total
            result["signs"] = list(report.signs)
            result["framings"] = list(report.framings)
            lines.append("w " + " ".join(str(x) for x in report.per_vertex))
            lines.append(f"total {report.total}")
            lines.append("signs " + " ".join("+" if s > 0 else "-" for s in report.signs))
            lines.append("framings " + " ".join(str(f) for f in report.framings))
    elif isinstance(g, LoopedGraph):
        looped_names = [v.name for v in g.vertices if v.looped]
        result = {"vertices": g.n, "looped": looped_names, "edges": len(g.edges)}
        lines = [
            f"vertices {g.n}",
            ("looped " + " ".join(looped_names)).rstrip(),
            f"edges {len(g.edges)}",
        ]
    else:
        assert isinstance(g, ChordDiagram)
        result = {"chords": g.n, "d_diagram": is_d_diagram(g)}
        lines = [f"chords {g.n}", f"d_diagram {_bool_word(result['d_diagram'])}"]
    return result, {}, "\n".join(lines) + "\n", [doc.source]


def _cmd_chi(args, stdin):
    doc = _load(args.file, stdin, (KIND_LABELED,))
    g = doc.payload
    looped = chi(g)
    seed = "".join(str(b) for b in knot_matrix(g).inverse().diagonal())
    text = _doc_lines(looped)
    return {"document": text}, {"seed_diagonal": seed}, text, [doc.source]


def _cmd_psi(args, stdin):
    doc = _load(args.file, stdin, (KIND_LOOPED,))
    looped = doc.payload
    preferred = None
    if args.seed_diagonal is not None:
        if not set(args.seed_diagonal) <= {"0", "1"}:
            raise UsageError("--seed-diagonal must be a string of 0s and 1s")
        if len(args.seed_diagonal) != looped.n:
            raise PreconditionError(
                f"--seed-diagonal has {len(args.seed_diagonal)} bits, graph has {looped.n} vertices"
            )
        preferred = tuple(int(c) for c in args.seed_diagonal)
    completion = complete_diagonal(looped.adjacency_matrix(), preferred)
    g = psi(looped, preferred_diagonal=completion.diagonal)
    used = "".join(str(b) for b in completion.diagonal)
    text = _doc_lines(g)
    return {"document": text}, {"diagonal": used}, text, [doc.source]


def _cmd_roundtrip(args, stdin):
    from .correspondence import roundtrip_check

    doc = _load(args.file, stdin, (KIND_LABELED,))
    report = roundtrip_check(doc.payload)
    result = {
        "psi_seeded_exact": report.psi_seeded_exact,
        "chi_canonical_exact": report.chi_canonical_exact,
    }
    text = (
        f"psi_seeded_exact {_bool_word(report.psi_seeded_exact)}\n"
        f"chi_canonical_exact {_bool_word(report.chi_canonical_exact)}\n"
    )
    return result, {}, text, [doc.source]


def _cmd_moves(args, stdin):
    doc = _load(args.file, stdin, (KIND_LABELED, KIND_LOOPED))
    g = doc.payload
    if args.mode == "list":
        if args.steps:
            raise UsageError("moves list takes no move arguments")
        fams = _parse_families(args.families)
        lines = [format_move(m) for m in list_moves(g, families=fams)]
        text = "\n".join(lines) + ("\n" if lines else "")
        return {"moves": lines}, {"count": len(lines)}, text, [doc.source]
    if args.families is not None:
        raise UsageError("--families only applies to moves list")
    if not args.steps:
        raise UsageError("moves apply needs at least one move line")
    for step in args.steps:
        try:
            m = parse_move(step)
        except ValueError as e:
            raise UsageError(f"bad move line {step!r}: {e}") from None
        g = apply_move(g, m)
    text = _doc_lines(g)
    return {"document": text}, {"applied": len(args.steps)}, text, [doc.source]


def _cmd_realize(args, stdin):
    doc = _load(args.file, stdin, (KIND_LABELED, KIND_LOOPED))
    stats = {"max_vertices": args.max_vertices}
    try:
        diagram = realize(
            doc.payload, time_budget=args.time_budget, max_vertices=args.max_vertices
        )
    except BudgetExceededError:
        result: dict[str, Any] = {
            "realizable": None,
            "exhaustive": False,
            "reason": "time budget exceeded",
        }
        text = "realizable unknown\nexhaustive false\nreason time budget exceeded\n"
        return result, stats, text, [doc.source]
    if diagram is None:
        result = {"realizable": False, "exhaustive": True}
        text = "realizable false\nexhaustive true\n"
    else:
        cd_text = _doc_lines(diagram)
        result = {
            "realizable": True,
            "exhaustive": True,
            "word": list(diagram.word),
            "document": cd_text,
        }
        text = "realizable true\n" + cd_text
    return result, stats, text, [doc.source]


def _cmd_interlace(args, stdin):
    doc = _load(args.file, stdin, (KIND_CHORD,))
    g = interlacement(doc.payload)
    text = _doc_lines(g)
    return {"document": text}, {}, text, [doc.source]


def _cmd_ddiagram(args, stdin):
    doc = _load(args.file, stdin, (KIND_CHORD,))
    flag = is_d_diagram(doc.payload)
    return {"d_diagram": flag}, {}, f"d_diagram {_bool_word(flag)}\n", [doc.source]


def _cmd_equiv(args, stdin):
    d1 = _load(args.file1, stdin, (KIND_LABELED, KIND_LOOPED))
    d2 = _load(args.file2, stdin, (KIND_LABELED, KIND_LOOPED))
    if d1.kind != d2.kind:
        raise PreconditionError(
            f"cannot compare {_KIND_WORD[d1.kind]} with {_KIND_WORD[d2.kind]}"
        )
    fams = _parse_families(args.families)
    bounds = SearchBounds(
        max_depth=args.max_depth,
        max_states=args.max_states,
        max_vertices=args.max_vertices,
    )
    outcome = prove_equivalent(d1.payload, d2.payload, families=fams, bounds=bounds)
    cert_lines = (
        [format_move(m) for m in outcome.certificate.steps]
        if outcome.certificate is not None
        else None
    )
    result = {
        "status": outcome.status,
        "certificate": cert_lines,
        "reason": outcome.reason,
    }
    stats = {
        "states": outcome.stats.get("states", 0),
        "depth": outcome.stats.get("depth", 0),
    }
    lines = [f"status {outcome.status}"]
    if cert_lines is not None:
        lines += cert_lines
    if outcome.reason:
        lines.append(f"reason {outcome.reason}")
    return result, stats, "\n".join(lines) + "\n", [d1.source, d2.source]


def _cmd_selftest(args, stdin):
    checks = run_selftest(seed=args.seed)
    ok = all(c.ok for c in checks)
    lines = []
    payload = []
    for c in checks:
        entry: dict[str, Any] = {"name": c.name, "ok": c.ok, "cases": c.cases}
        if c.ok:
            lines.append(f"ok {c.name} ({c.cases} cases)")
        else:
            entry["detail"] = c.detail
            lines.append(f"FAIL {c.name}: {c.detail}")
        payload.append(entry)
    lines.append("selftest ok" if ok else "selftest FAILED")
    result = {"ok": ok, "checks": payload}
    return result, {"seed": args.seed}, "\n".join(lines) + "\n", []


_HANDLERS = {
    "info": _cmd_info,
    "chi": _cmd_chi,
    "psi": _cmd_psi,
    "roundtrip": _cmd_roundtrip,
    "moves": _cmd_moves,
    "realize": _cmd_realize,
    "interlace": _cmd_interlace,
    "ddiagram": _cmd_ddiagram,
    "equiv": _cmd_equiv,
    "selftest": _cmd_selftest,
}


def run_command(argv: Sequence[str], stdin: Union[str, bytes, Any] = "") -> tuple[str, int]:
    """Run one invocation; returns (stdout text, exit code).

    Diagnostics go to sys.stderr; the returned text is the payload stream
    only, so JSON output stays machine-readable even on failure.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        result, stats, text, sources = _HANDLERS[args.command](args, stdin)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return "", 2
    except ParseError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return "", 3
    except (PreconditionError, TooLargeError, UnknownVertexError, SameVertexError) as e:
        msg = e.args[0] if e.args else str(e)
        print(f"error: {type(e).__name__}: {msg}", file=sys.stderr)
        return "", 4
    code = 0
    if args.command == "selftest" and not result["ok"]:
        code = 1
    if args.format == "json":
        envelope = {
            "command": args.command,
            "input": sources,
            "result": result,
            "stats": stats,
        }
        return json.dumps(envelope, indent=2) + "\n", code
    return text, code


def main() -> None:
    out, code = run_command(sys.argv[1:], stdin=sys.stdin)
    if out:
        sys.stdout.write(out)
    sys.exit(code)


if __name__ == "__main__":
    main()
