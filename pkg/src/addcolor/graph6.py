"""Bit-exact reader/writer for the graph6 text format.

graph6 encodes an undirected graph as printable ASCII: a size header N(n)
followed by the upper triangle of the adjacency matrix read column by column
((0,1), (0,2), (1,2), (0,3), ...), packed 6 bits per byte MSB-first, each
byte offset by 63. Headers: one byte 63+n for n <= 62; byte 126 plus three
6-bit bytes for n <= 258047; two bytes 126 plus six 6-bit bytes for larger n
(up to 2^36 - 1). Only graph6 is handled here; sparse6 and digraph6 lines are
rejected with a format error.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph

HEADER_PREFIX = ">>graph6<<"

_MIN_BYTE = 63
_MAX_BYTE = 126


class Graph6FormatError(ValueError):
    """Raised for lines that are not valid graph6."""


def parse_graph6(line: str, strict: bool = True) -> Graph:
    """Decode one graph6 line (an optional '>>graph6<<' prefix is tolerated).

    In strict mode (default) nonzero padding bits are a format error; with
    strict=False they only produce a warning.
    """
    data = line.rstrip("\r\n")
    if data.startswith(HEADER_PREFIX):
        data = data[len(HEADER_PREFIX):]
    if data.startswith(":") or data.startswith(">>sparse6<<"):
        raise Graph6FormatError("sparse6 input is not supported")
    if data.startswith("&") or data.startswith(">>digraph6<<"):
        raise Graph6FormatError("digraph6 input is not supported")
    if not data:
        raise Graph6FormatError("empty line")
    values = []
    for ch in data:
        b = ord(ch)
        if not (_MIN_BYTE <= b <= _MAX_BYTE):
            raise Graph6FormatError(f"byte {b!r} outside graph6 range 63..126")
        values.append(b - _MIN_BYTE)

    n, pos = _decode_size(values)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(values) - pos < nbytes:
        raise Graph6FormatError(
            f"truncated bit section: need {nbytes} bytes for n={n}, got {len(values) - pos}"
        )
    if len(values) - pos > nbytes:
        raise Graph6FormatError(f"trailing bytes after bit section for n={n}")

    edges = []
    bit = 0
    chunk = values[pos:]
    for j in range(1, n):
        for i in range(j):
            if chunk[bit // 6] >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    # padding bits must be zero
    for pad in range(nbits, nbytes * 6):
        if chunk[pad // 6] >> (5 - pad % 6) & 1:
            if strict:
                raise Graph6FormatError("nonzero padding bits")
            warnings.warn("graph6 line has nonzero padding bits", stacklevel=2)
            break
    return Graph.from_edges(n, edges)


def _decode_size(values: list[int]) -> tuple[int, int]:
    if values[0] < 63:
        return values[0], 1
    # values[0] == 63 marks a long header
    if len(values) < 2:
        raise Graph6FormatError("truncated size header")
    if values[1] < 63:
        if len(values) < 4:
            raise Graph6FormatError("truncated 4-byte size header")
        n = (values[1] << 12) | (values[2] << 6) | values[3]
        return n, 4
    if len(values) < 8:
        raise Graph6FormatError("truncated 8-byte size header")
    n = 0
    for v in values[2:8]:
        n = (n << 6) | v
    return n, 8


def write_graph6(g: Graph) -> str:
    """Canonical graph6 encoding; inverse of parse_graph6 on valid input."""
    n = g.n
    if n <= 62:
        header = chr(_MIN_BYTE + n)
    elif n <= 258047:
        header = chr(_MAX_BYTE) + "".join(
            chr(_MIN_BYTE + (n >> shift & 0x3F)) for shift in (12, 6, 0)
        )
    else:
        raise ValueError(f"writer supports n <= 258047, got {n}")
    nbits = n * (n - 1) // 2
    chunk = [0] * ((nbits + 5) // 6)
    bit = 0
    for j in range(1, n):
        mask_j = g.masks[j]
        for i in range(j):
            if mask_j >> i & 1:
                chunk[bit // 6] |= 1 << (5 - bit % 6)
            bit += 1
    return header + "".join(chr(_MIN_BYTE + v) for v in chunk)


@dataclass(frozen=True)
class Graph6Record:
    """One corpus line with its decoded graph; the line re-encodes to the
    canonical form of the graph."""

    line: str
    graph: Graph


def iter_graph6(lines: Iterable[str], strict: bool = True) -> Iterator[Graph]:
    """Decode an iterable of graph6 lines, skipping blanks."""
    for record in iter_graph6_records(lines, strict=strict):
        yield record.graph


def iter_graph6_records(lines: Iterable[str], strict: bool = True) -> Iterator[Graph6Record]:
    for line in lines:
        stripped = line.strip()
        if stripped:
            yield Graph6Record(stripped, parse_graph6(stripped, strict=strict))


def read_graph6_file(path: str, strict: bool = True) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        return list(iter_graph6(fh, strict=strict))
