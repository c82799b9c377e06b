"""Text formats: degree sequences and edge lists.

Degree sequence: one non-negative decimal integer per line.

Edge list::

    # n=<N>
    u v
    ...

with ``u < v`` on every line and lines sorted by ``(u, v)``.
"""

from __future__ import annotations

import re
import sys
from contextlib import contextmanager
from typing import IO, Iterator

import numpy as np

from .degree_model import DegreeSequence
from .graph import GraphError, SimpleGraph


class FormatError(ValueError):
    """Malformed degree-sequence or edge-list text."""


@contextmanager
def open_text(path: str, mode: str = "r") -> Iterator[IO[str]]:
    """Open ``path``; ``-`` means stdin/stdout."""
    if path == "-":
        yield sys.stdin if "r" in mode else sys.stdout
        return
    with open(path, mode, newline="\n") as fh:
        yield fh


def format_degrees(seq) -> str:
    d = np.asarray(getattr(seq, "degrees", seq), dtype=np.int64)
    return "".join(f"{x}\n" for x in d.tolist())


def parse_degrees(text: str) -> DegreeSequence:
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s:
            continue
        if not re.fullmatch(r"[+-]?\d+", s):
            raise FormatError(f"line {lineno}: not an integer: {s!r}")
        v = int(s)
        if v < 0:
            raise FormatError(f"line {lineno}: negative degree {v}")
        values.append(v)
    return DegreeSequence(np.array(values, dtype=np.int64))


def write_degrees(seq, path: str) -> None:
    with open_text(path, "w") as fh:
        fh.write(format_degrees(seq))


def read_degrees(path: str) -> DegreeSequence:
    with open_text(path) as fh:
        return parse_degrees(fh.read())


def format_edge_list(graph: SimpleGraph) -> str:
    lines = [f"# n={graph.n}\n"]
    lines.extend(f"{u} {v}\n" for u, v in graph.edges.tolist())
    return "".join(lines)


_HEADER = re.compile(r"#\s*n\s*=\s*(\d+)")


def parse_edge_list(text: str) -> SimpleGraph:
    lines = text.splitlines()
    idx = 0
    while idx < len(lines) and not lines[idx].strip():
        idx += 1
    if idx == len(lines):
        raise FormatError("empty edge list: missing '# n=<N>' header")
    m = _HEADER.fullmatch(lines[idx].strip())
    if not m:
        raise FormatError(f"line {idx + 1}: expected '# n=<N>' header")
    n = int(m.group(1))
    edges = []
    for lineno, line in enumerate(lines[idx + 1:], idx + 2):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormatError(f"line {lineno}: expected 'u v', got {s!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise FormatError(f"line {lineno}: self-loop {u} {v}")
        edges.append((u, v))
    try:
        return SimpleGraph(n, np.array(edges, dtype=np.int64).reshape(-1, 2))
    except GraphError as e:
        raise FormatError(str(e)) from None


def write_edge_list(graph: SimpleGraph, path: str) -> None:
    with open_text(path, "w") as fh:
        fh.write(format_edge_list(graph))


def read_edge_list(path: str) -> SimpleGraph:
    with open_text(path) as fh:
        return parse_edge_list(fh.read())
