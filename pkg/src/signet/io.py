"""Reading and writing signed networks.

Two on-disk formats are supported:

* canonical edge list: one edge per line, ``u<TAB>v<TAB>s`` with s in
  {+1, -1}; ``#`` starts a comment; whitespace-separated also accepted.
* raw rating files: ``source,target,rating[,time]`` rows (comma or
  whitespace separated) from trust networks with weighted, possibly
  directed edges.

Format is auto-detected by column count (3 = canonical, 4 = rating).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import EmptyResultError, MalformedRowError, ParseError
from .graph import Sign, SignedGraph, build_graph

DATA_DIR_ENV = "SIGNET_DATA_DIR"


@dataclass(frozen=True)
class RawRating:
    source: object
    target: object
    weight: float
    timestamp: Optional[int] = None


def ingest_ratings(rows: Iterable[RawRating]) -> SignedGraph:
    """Collapse weighted, possibly directed ratings into a signed graph.

    All weights on an unordered pair (both directions) are summed; the pair
    becomes a positive edge when the sum is > 0, negative when < 0, and is
    dropped entirely on a zero-sum tie. Self-ratings are dropped. Vertices
    are relabeled densely in order of first appearance; the original ids are
    kept on the graph as ``labels``.
    """
    totals: dict[tuple[int, int], float] = {}
    index: dict[object, int] = {}
    labels: list[object] = []

    def vid(label: object) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for row in rows:
        if row.weight == 0:
            continue
        u, v = vid(row.source), vid(row.target)
        if u == v:
            continue
        pair = (u, v) if u < v else (v, u)
        totals[pair] = totals.get(pair, 0.0) + row.weight

    triples = [
        (u, v, Sign.POSITIVE if w > 0 else Sign.NEGATIVE)
        for (u, v), w in totals.items()
        if w != 0
    ]
    if not triples:
        raise EmptyResultError("no signed edges left after aggregation")
    return build_graph(triples, n=len(labels), labels=labels)


def _split(line: str) -> list[str]:
    return line.replace(",", " ").split()


def parse_rating_lines(lines: Iterable[str]) -> list[RawRating]:
    rows = []
    for no, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        parts = _split(text)
        if len(parts) not in (3, 4):
            raise MalformedRowError(no, f"expected 3 or 4 columns, got {len(parts)}")
        try:
            weight = float(parts[2])
            ts = int(float(parts[3])) if len(parts) == 4 else None
        except ValueError as exc:
            raise MalformedRowError(no, str(exc)) from exc
        rows.append(RawRating(parts[0], parts[1], weight, ts))
    return rows


_SIGN_TOKENS = {"+1": Sign.POSITIVE, "1": Sign.POSITIVE, "+": Sign.POSITIVE,
                "-1": Sign.NEGATIVE, "-": Sign.NEGATIVE}


def read_canonical(path: str | os.PathLike) -> SignedGraph:
    """Read a canonical edge list; raises ParseError on any invalid line."""
    triples = []
    with open(path, "r", encoding="utf-8") as fh:
        for no, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            parts = _split(text)
            if len(parts) != 3:
                raise ParseError(no, f"expected 3 columns, got {len(parts)}")
            try:
                u, v = int(parts[0]), int(parts[1])
            except ValueError as exc:
                raise ParseError(no, str(exc)) from exc
            if parts[2] not in _SIGN_TOKENS:
                raise ParseError(no, f"bad sign token {parts[2]!r}")
            if u == v:
                raise ParseError(no, f"self-loop on vertex {u}")
            if u < 0 or v < 0:
                raise ParseError(no, "negative vertex id")
            triples.append((u, v, _SIGN_TOKENS[parts[2]]))
    if not triples:
        raise ParseError(0, "no edges in file")
    return build_graph(triples)


def write_canonical(g: SignedGraph, path: str | os.PathLike) -> None:
    """Write a graph as a canonical edge list (sorted, diff-friendly)."""
    with open(path, "w", encoding="utf-8") as fh:
        for u, v, s in sorted(g.edges):
            fh.write(f"{u}\t{v}\t{int(s):+d}\n")


def read_graph(path: str | os.PathLike) -> SignedGraph:
    """Read a graph from either supported format (detected by column count)."""
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.readlines()
    first = None
    for line in lines:
        text = line.split("#", 1)[0].strip()
        if text:
            first = text
            break
    if first is None:
        raise ParseError(0, "no data lines in file")
    if len(_split(first)) == 4:
        return ingest_ratings(parse_rating_lines(lines))
    return read_canonical(path)


def resolve_dataset(name: str) -> Optional[str]:
    """Locate a dataset file by name, trying SIGNET_DATA_DIR then ./data."""
    candidates = []
    root = os.environ.get(DATA_DIR_ENV)
    if root:
        candidates.append(os.path.join(root, name))
    candidates.append(os.path.join("data", name))
    for path in candidates:
        if os.path.exists(path):
            return path
    return None
