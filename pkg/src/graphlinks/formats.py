"""Line-oriented text formats and the move-descriptor grammar.

Three document kinds share one lexical shape: a header line, then one datum
per line, `#` comments and blank lines ignored, vertex order fixed by
declaration order.

    lg 2            ug 2            cd a b a b
    v x 0 +         v x             label a 1 -
    v y 1 -         v y
    e x y           loop x
                    e x y

Serialization is normalized: vertices in declaration order, edge lines with
endpoints in declaration order and sorted lexicographically, loops after
vertices, labels only when they differ from the (0,+) default.  Parsing a
serialized document and serializing again is byte-identical.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from .chords import DEFAULT_LABEL, ChordDiagram
from .graphs import LabeledGraph, LoopedGraph
from .moves import AdditionPayload, MoveDescriptor

KIND_LABELED = "labeled-graph"
KIND_LOOPED = "looped-graph"
KIND_CHORD = "chord-diagram"

Payload = Union[LabeledGraph, LoopedGraph, ChordDiagram]


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class DuplicateNameError(ParseError):
    pass


class BadLabelError(ParseError):
    pass


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Payload
    source: str

    @classmethod
    def of(cls, payload: Payload, source: str = "<value>") -> Document:
        if isinstance(payload, LabeledGraph):
            return cls(KIND_LABELED, payload, source)
        if isinstance(payload, LoopedGraph):
            return cls(KIND_LOOPED, payload, source)
        if isinstance(payload, ChordDiagram):
            return cls(KIND_CHORD, payload, source)
        raise TypeError(f"no document kind for {type(payload).__name__}")


_TOKEN = re.compile(r"\S+")


def _tokenize(text: str) -> list[list[tuple[str, int, int]]]:
    """Token rows: (token, line, column), comments and blanks dropped."""
    rows = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0]
        toks = [(m.group(), lineno, m.start() + 1) for m in _TOKEN.finditer(line)]
        if toks:
            rows.append(toks)
    return rows


def _parse_sign(tok: str, line: int, col: int) -> int:
    if tok == "+":
        return 1
    if tok == "-":
        return -1
    raise BadLabelError(f"sign must be + or -, got {tok!r}", line, col)


def _parse_framing(tok: str, line: int, col: int) -> int:
    if tok in ("0", "1"):
        return int(tok)
    raise BadLabelError(f"framing must be 0 or 1, got {tok!r}", line, col)


def parse_document(text: Union[str, bytes], source: str = "<input>") -> Document:
    """Parse one labeled-graph, looped-graph, or chord-diagram document."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"not valid UTF-8: {e}", 1) from None
    rows = _tokenize(text)
    if not rows:
        raise ParseError("empty document", 1)
    head = rows[0]
    keyword = head[0][0]
    if keyword in ("lg", "ug"):
        return _parse_graph(keyword, rows, source)
    if keyword == "cd":
        return _parse_chords(rows, source)
    raise ParseError(f"unknown header {keyword!r}, expected lg, ug, or cd", head[0][1], head[0][2])


def _parse_graph(keyword: str, rows, source: str) -> Document:
    head = rows[0]
    if len(head) != 2 or not head[1][0].isdigit():
        raise ParseError(f"header must be `{keyword} <count>`", head[0][1], head[0][2])
    declared = int(head[1][0])
    names: list[str] = []
    index: dict[str, int] = {}
    framings: list[int] = []
    signs: list[int] = []
    loops: set[int] = set()
    edges: set[tuple[int, int]] = set()

    def resolve(tok: str, line: int, col: int) -> int:
        if tok not in index:
            raise ParseError(f"vertex {tok!r} not declared", line, col)
        return index[tok]

    for row in rows[1:]:
        word, line, col = row[0]
        if word == "v":
            want = 4 if keyword == "lg" else 2
            if len(row) != want:
                raise ParseError(f"`v` takes {want - 1} arguments here", line, col)
            nm = row[1][0]
            if nm in index:
                raise DuplicateNameError(f"vertex {nm!r} declared twice", row[1][1], row[1][2])
            index[nm] = len(names)
            names.append(nm)
            if keyword == "lg":
                framings.append(_parse_framing(row[2][0], row[2][1], row[2][2]))
                signs.append(_parse_sign(row[3][0], row[3][1], row[3][2]))
        elif word == "loop" and keyword == "ug":
            if len(row) != 2:
                raise ParseError("`loop` takes one vertex name", line, col)
            i = resolve(row[1][0], row[1][1], row[1][2])
            if i in loops:
                raise ParseError(f"vertex {row[1][0]!r} looped twice", row[1][1], row[1][2])
            loops.add(i)
        elif word == "e":
            if len(row) != 3:
                raise ParseError("`e` takes two vertex names", line, col)
            a = resolve(row[1][0], row[1][1], row[1][2])
            b = resolve(row[2][0], row[2][1], row[2][2])
            if a == b:
                raise ParseError("self-edges are not allowed", line, col)
            e = (min(a, b), max(a, b))
            if e in edges:
                raise ParseError(f"edge {row[1][0]} {row[2][0]} listed twice", line, col)
            edges.add(e)
        else:
            raise ParseError(f"unexpected {word!r} in `{keyword}` document", line, col)
    if len(names) != declared:
        raise ParseError(
            f"header says {declared} vertices, found {len(names)}", head[0][1], head[0][2]
        )
    if keyword == "lg":
        payload: Payload = LabeledGraph.build(framings, signs, edges, names=names)
        return Document(KIND_LABELED, payload, source)
    payload = LoopedGraph.build([i in loops for i in range(len(names))], edges, names=names)
    return Document(KIND_LOOPED, payload, source)


def _parse_chords(rows, source: str) -> Document:
    head = rows[0]
    word = [t for t, _, _ in head[1:]]
    if not word:
        raise ParseError("`cd` needs a word of chord names", head[0][1], head[0][2])
    counts: dict[str, int] = {}
    for tok, line, col in head[1:]:
        counts[tok] = counts.get(tok, 0) + 1
        if counts[tok] > 2:
            raise ParseError(f"chord {tok!r} occurs more than twice", line, col)
    missing = [t for t, c in counts.items() if c != 2]
    if missing:
        raise ParseError(
            f"chords occurring once: {', '.join(missing)}", head[0][1], head[0][2]
        )
    labels: dict[str, tuple[int, int]] = {}
    for row in rows[1:]:
        w, line, col = row[0]
        if w != "label":
            raise ParseError(f"unexpected {w!r} in `cd` document", line, col)
        if len(row) != 4:
            raise ParseError("`label` takes name, framing, sign", line, col)
        nm = row[1][0]
        if nm not in counts:
            raise ParseError(f"label for unknown chord {nm!r}", row[1][1], row[1][2])
        if nm in labels:
            raise DuplicateNameError(f"chord {nm!r} labeled twice", row[1][1], row[1][2])
        labels[nm] = (
            _parse_framing(row[2][0], row[2][1], row[2][2]),
            _parse_sign(row[3][0], row[3][1], row[3][2]),
        )
    return Document(KIND_CHORD, ChordDiagram.build(word, labels), source)


def _sign_token(sign: int) -> str:
    return "+" if sign > 0 else "-"


def serialize_document(doc: Document) -> str:
    """Normalized text form; ends with a newline."""
    p = doc.payload
    if isinstance(p, LabeledGraph):
        lines = [f"lg {p.n}"]
        lines += [f"v {v.name} {v.framing} {_sign_token(v.sign)}" for v in p.vertices]
        lines += sorted(
            f"e {p.vertices[a].name} {p.vertices[b].name}" for a, b in p.edges
        )
    elif isinstance(p, LoopedGraph):
        lines = [f"ug {p.n}"]
        lines += [f"v {v.name}" for v in p.vertices]
        lines += [f"loop {v.name}" for v in p.vertices if v.looped]
        lines += sorted(
            f"e {p.vertices[a].name} {p.vertices[b].name}" for a, b in p.edges
        )
    elif isinstance(p, ChordDiagram):
        lines = ["cd " + " ".join(p.word)]
        lines += [
            f"label {nm} {f} {_sign_token(s)}"
            for nm, f, s in p.labels
            if (f, s) != DEFAULT_LABEL
        ]
    else:
        raise TypeError(f"cannot serialize {type(p).__name__}")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# move-descriptor lines
#
#   Og1 add x:(0,+) [at=2]          Og1 remove x
#   Og2 add a:(0,+) b:(0,-) adj=0 nbrs=c,d [at=0,3]
#   Og2 remove a b                  Og3 fwd|inv u v w
#   Og4 u v                         Og4' v
#   O1 add x:loop|x:plain           O1 remove x
#   O2 add a:loop b:plain adj=1 nbrs=           O2 remove a b
#   O3 u v w
# --------------------------------------------------------------------------

_LG_LABEL = re.compile(r"^([^:\s]+):\(([01]),([+-])\)$")
_UG_LABEL = re.compile(r"^([^:\s]+):(loop|plain)$")


def format_move(m: MoveDescriptor) -> str:
    if m.direction == "apply":
        return " ".join((m.family, *m.names))
    if m.direction in ("fwd", "inv"):
        return " ".join((m.family, m.direction, *m.names))
    if m.direction == "remove":
        return " ".join((m.family, "remove", *m.names))
    p = m.payload
    parts = [m.family, "add"]
    for nm, lab in zip(m.names, p.labels):
        if m.family.startswith("Og"):
            f, s = lab
            parts.append(f"{nm}:({f},{_sign_token(s)})")
        else:
            parts.append(f"{nm}:{'loop' if lab else 'plain'}")
    if len(m.names) == 2:
        parts.append(f"adj={1 if p.adjacent else 0}")
        parts.append("nbrs=" + ",".join(p.neighbors))
    if p.positions is not None:
        parts.append("at=" + ",".join(str(i) for i in p.positions))
    return " ".join(parts)


def parse_move(line: str) -> MoveDescriptor:
    """Inverse of format_move; raises ValueError on malformed lines."""
    toks = line.split()
    if not toks:
        raise ValueError("empty move line")
    family = toks[0]
    rest = toks[1:]
    if family in ("Og4", "Og4'", "O3"):
        return MoveDescriptor(family, "apply", tuple(rest))
    if family == "Og3":
        if not rest or rest[0] not in ("fwd", "inv"):
            raise ValueError("Og3 needs fwd or inv")
        return MoveDescriptor(family, rest[0], tuple(rest[1:]))
    if family not in ("Og1", "Og2", "O1", "O2"):
        raise ValueError(f"unknown move family {family!r}")
    if not rest or rest[0] not in ("add", "remove"):
        raise ValueError(f"{family} needs add or remove")
    direction, rest = rest[0], rest[1:]
    if direction == "remove":
        return MoveDescriptor(family, "remove", tuple(rest))
    names: list[str] = []
    labels: list = []
    adjacent: Optional[bool] = None
    neighbors: tuple[str, ...] = ()
    positions: Optional[tuple[int, ...]] = None
    for tok in rest:
        if tok.startswith("adj="):
            if tok not in ("adj=0", "adj=1"):
                raise ValueError(f"bad adjacency flag {tok!r}")
            adjacent = tok == "adj=1"
        elif tok.startswith("nbrs="):
            body = tok[len("nbrs="):]
            neighbors = tuple(body.split(",")) if body else ()
        elif tok.startswith("at="):
            body = tok[len("at="):]
            positions = tuple(int(x) for x in body.split(",")) if body else ()
        else:
            m_lg = _LG_LABEL.match(tok)
            m_ug = _UG_LABEL.match(tok)
            if m_lg and family.startswith("Og"):
                names.append(m_lg.group(1))
                labels.append((int(m_lg.group(2)), 1 if m_lg.group(3) == "+" else -1))
            elif m_ug and family in ("O1", "O2"):
                names.append(m_ug.group(1))
                labels.append(1 if m_ug.group(2) == "loop" else 0)
            else:
                raise ValueError(f"bad labeled name {tok!r} for {family}")
    payload = AdditionPayload(tuple(labels), adjacent, neighbors, positions)
    return MoveDescriptor(family, "add", tuple(names), payload)
