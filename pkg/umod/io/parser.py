"""Line-oriented input format for graphs, tournaments, 2-structures and relations"""

import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel

from ..errors import InputParseError, PreconditionError
from ..relation.relation import HomogeneousRelation, as_relation
from ..relation.structures import GroundSet, Tournament, TwoStructure, UndirectedGraph

KINDS = ("graph", "tournament", "twostructure", "relation")
TOKEN = re.compile(r"\S+")


class InputDocument(BaseModel):
    kind: Literal["graph", "tournament", "twostructure", "relation"]
    size: int
    labels: Optional[List[str]] = None
    source: Optional[str] = None
    # UndirectedGraph, Tournament, TwoStructure or HomogeneousRelation, stored as parsed
    structure: Any

    def relation(self) -> HomogeneousRelation:
        return as_relation(self.structure)


@dataclass
class _Line:
    number: int
    tokens: List[Tuple[str, int]]

    @property
    def end(self) -> int:
        if not self.tokens:
            return 1
        text, column = self.tokens[-1]
        return column + len(text)


class _Reader:
    """Non-blank, comment-free lines with 1-based token columns."""

    def __init__(self, text: str, source: Optional[str]):
        self.source = source
        self.lines: List[_Line] = []
        self.last = 0
        for number, raw in enumerate(text.splitlines(), start=1):
            self.last = number
            body = raw.split("#", 1)[0]
            tokens = [(m.group(0), m.start() + 1) for m in TOKEN.finditer(body)]
            if tokens:
                self.lines.append(_Line(number, tokens))

    def fail(self, message: str, line: int, column: int = 1, token: Optional[str] = None):
        raise InputParseError(message, line, column, token, self.source)

    def integer(self, line: _Line, position: int) -> int:
        text, column = line.tokens[position]
        try:
            return int(text)
        except ValueError:
            self.fail(f"expected an integer, got {text!r}", line.number, column, text)

    def element(self, line: _Line, position: int, n: int) -> int:
        value = self.integer(line, position)
        if not 0 <= value < n:
            text, column = line.tokens[position]
            self.fail(f"vertex id out of range 0..{n - 1}", line.number, column, text)
        return value


def _header(reader: _Reader) -> Tuple[str, int, Optional[int]]:
    if not reader.lines:
        reader.fail("empty input: expected a header 'kind n [m]'", max(reader.last, 1))
    head = reader.lines[0]
    kind, column = head.tokens[0]
    if kind not in KINDS:
        reader.fail(f"malformed header: unknown kind {kind!r}, expected one of {', '.join(KINDS)}",
                    head.number, column, kind)
    if len(head.tokens) < 2:
        reader.fail("malformed header: missing element count n", head.number, head.end)
    n = reader.integer(head, 1)
    if n < 1:
        text, column = head.tokens[1]
        reader.fail("malformed header: n must be positive", head.number, column, text)
    m = None
    if kind == "graph":
        if len(head.tokens) < 3:
            reader.fail("malformed header: graph needs an edge count m", head.number, head.end)
        m = reader.integer(head, 2)
        if m < 0:
            text, column = head.tokens[2]
            reader.fail("malformed header: m must be non-negative", head.number, column, text)
        extra = 3
    else:
        extra = 2
    if len(head.tokens) > extra:
        text, column = head.tokens[extra]
        reader.fail("malformed header: unexpected token", head.number, column, text)
    return kind, n, m


def _labels(reader: _Reader, body: List[_Line], n: int) -> Tuple[Optional[List[str]], List[_Line]]:
    if not body or body[0].tokens[0][0] != "labels":
        return None, body
    line = body[0]
    labels = [text for text, _ in line.tokens[1:]]
    if len(labels) != n:
        reader.fail(f"labels line must name {n} elements, found {len(labels)}", line.number, line.end)
    seen = set()
    for text, column in line.tokens[1:]:
        if text in seen:
            reader.fail(f"duplicate label {text!r}", line.number, column, text)
        seen.add(text)
    return labels, body[1:]


def _count(reader: _Reader, body: List[_Line], expected: int, what: str) -> None:
    if len(body) < expected:
        reader.fail(f"expected {expected} {what}, found {len(body)}", reader.last + 1)
    if len(body) > expected:
        extra = body[expected]
        text, column = extra.tokens[0]
        reader.fail(f"unexpected line after {expected} {what}", extra.number, column, text)


def _edges(reader: _Reader, body: List[_Line], n: int, m: int) -> np.ndarray:
    _count(reader, body, m, "edge lines")
    adj = np.zeros((n, n), dtype=bool)
    for line in body:
        if len(line.tokens) != 2:
            reader.fail("an edge line holds exactly two vertex ids", line.number, line.tokens[0][1])
        u = reader.element(line, 0, n)
        v = reader.element(line, 1, n)
        text, column = line.tokens[1]
        if u == v:
            reader.fail("self-loop is not allowed", line.number, column, text)
        if adj[u, v]:
            reader.fail(f"duplicate edge {min(u, v)} {max(u, v)}", line.number, line.tokens[0][1])
        adj[u, v] = adj[v, u] = True
    return adj


def _matrix(reader: _Reader, body: List[_Line], n: int) -> Tuple[np.ndarray, List[_Line]]:
    _count(reader, body, n, "matrix rows")
    rows = np.zeros((n, n), dtype=np.int64)
    for i, line in enumerate(body):
        if len(line.tokens) != n:
            column = line.tokens[n][1] if len(line.tokens) > n else line.end
            reader.fail(f"row must hold {n} entries, found {len(line.tokens)}", line.number, column)
        for j in range(n):
            rows[i, j] = reader.integer(line, j)
    return rows, body


def _tournament(reader: _Reader, body: List[_Line], n: int) -> np.ndarray:
    rows, lines = _matrix(reader, body, n)
    for i, line in enumerate(lines):
        for j in range(n):
            text, column = line.tokens[j]
            if rows[i, j] not in (0, 1):
                reader.fail("tournament entries must be 0 or 1", line.number, column, text)
            if i == j and rows[i, j] != 0:
                reader.fail("diagonal must be 0", line.number, column, text)
    for j, line in enumerate(lines):
        for i in range(j):
            if rows[i, j] + rows[j, i] != 1:
                text, column = line.tokens[i]
                reader.fail(f"asymmetric tournament: entries ({i},{j}) and ({j},{i}) must differ",
                            line.number, column, text)
    return rows.astype(bool)


def parse_text(text: str, source: Optional[str] = None) -> InputDocument:
    reader = _Reader(text, source)
    kind, n, m = _header(reader)
    labels, body = _labels(reader, reader.lines[1:], n)
    ground = GroundSet(n, tuple(labels) if labels else None)

    if kind == "graph":
        structure = UndirectedGraph(ground, _edges(reader, body, n, m))
    elif kind == "tournament":
        structure = Tournament(ground, _tournament(reader, body, n))
    else:
        rows, lines = _matrix(reader, body, n)
        if kind == "twostructure":
            bad = np.argwhere(rows < 0)
            if bad.size:
                i, j = (int(v) for v in bad[0])
                text, column = lines[i].tokens[j]
                reader.fail("colours must be non-negative", lines[i].number, column, text)
            structure = TwoStructure(ground, rows)
        else:
            try:
                structure = HomogeneousRelation.from_matrix(rows, labels=ground.labels)
            except PreconditionError as exc:
                reader.fail(str(exc), lines[0].number)
    return InputDocument(kind=kind, size=n, labels=labels, source=source, structure=structure)


def parse_input(path: Optional[str] = None) -> InputDocument:
    """Read a file, or stdin for None or '-'."""
    if path is None or path == "-":
        return parse_text(sys.stdin.read(), source="<stdin>")
    return parse_text(Path(path).read_text(encoding="utf-8"), source=str(path))
