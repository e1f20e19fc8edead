"""Edge-list and DIMACS readers, and the canonical edge-list writer."""

from __future__ import annotations

import io as _io
import os
from typing import Iterable, TextIO

from .graph import Graph, GraphError


class ParseError(GraphError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno is not None else message)


def _lines(source) -> Iterable[str]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            yield from fh
    else:
        yield from source


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError("non-integer token", lineno) from None


def _build(n: int, edges: list[tuple[int, int, int]], expected_m: int, last_line: int | None) -> Graph:
    if len(edges) != expected_m:
        raise ParseError(f"header announces {expected_m} edges, found {len(edges)}", last_line)
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v, lineno in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range for n={n}", lineno)
        if u == v:
            raise ParseError(f"self-loop at {u}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    return Graph(adj)


def parse_graph(source: str | os.PathLike | TextIO | Iterable[str], fmt: str = "auto") -> Graph:
    """Read a graph in edge-list form (``n m`` then ``u v``, 0-based) or DIMACS.

    DIMACS means ``p edge n m`` then ``e u v`` lines with 1-based ids; lines
    starting with ``c`` are comments there, ``#`` everywhere.  ``fmt`` is one
    of ``auto``, ``edgelist`` or ``dimacs``.
    """
    if fmt not in ("auto", "edgelist", "dimacs"):
        raise GraphError(f"unknown format {fmt!r}")
    header = None
    dimacs = fmt == "dimacs"
    edges: list[tuple[int, int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(_lines(source), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if fmt == "auto" and tokens[0] in ("p", "c"):
                dimacs = True
            if dimacs:
                if tokens[0] == "c":
                    continue
                if len(tokens) != 4 or tokens[0] != "p" or tokens[1] not in ("edge", "col"):
                    raise ParseError("expected 'p edge n m'", lineno)
                tokens = tokens[2:]
            elif len(tokens) != 2:
                raise ParseError("expected header 'n m'", lineno)
            header = _ints(tokens, lineno)
            if min(header) < 0:
                raise ParseError("negative count in header", lineno)
            continue
        if dimacs:
            if tokens[0] == "c":
                continue
            if tokens[0] != "e" or len(tokens) != 3:
                raise ParseError("expected 'e u v'", lineno)
            u, v = _ints(tokens[1:], lineno)
            if u < 1 or v < 1:
                raise ParseError("DIMACS vertex ids are 1-based", lineno)
            edges.append((u - 1, v - 1, lineno))
        else:
            if len(tokens) != 2:
                raise ParseError("expected 'u v'", lineno)
            u, v = _ints(tokens, lineno)
            edges.append((u, v, lineno))
    if header is None:
        raise ParseError("missing header")
    return _build(header[0], edges, header[1], lineno)


def parse_labeled_edges(source) -> tuple[Graph, list[str]]:
    """Headerless ``a b`` lines with arbitrary vertex labels.

    Labels are renumbered densely in order of first appearance; the returned
    list maps each vertex id back to its label.
    """
    ids: dict[str, int] = {}
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(_lines(source), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError("expected two vertex labels", lineno)
        a, b = (ids.setdefault(t, len(ids)) for t in tokens)
        edges.append((a, b, lineno))
    labels = sorted(ids, key=ids.__getitem__)
    return _build(len(labels), edges, len(edges), None), labels


def write_graph(g: Graph, out: TextIO) -> None:
    out.write(f"{g.n} {g.m}\n")
    for u, v in g.edges():
        out.write(f"{u} {v}\n")


def format_graph(g: Graph) -> str:
    buf = _io.StringIO()
    write_graph(g, buf)
    return buf.getvalue()
