"""graph6 / sparse6 (nauty formats) and the plain-text digraph edge list.

Encoders emit the header-less variants without a trailing newline.
"""

from __future__ import annotations

import warnings
from typing import Iterable, Iterator

from .graph import Digraph, Graph, digraph_from_arcs, graph_from_edges

_BIAS = 63
_MAX_N = (1 << 36) - 1


class FormatError(ValueError):
    """Malformed graph6/sparse6/edge-list input; ``offset`` is the byte index."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class MultigraphWarning(UserWarning):
    """sparse6 input had loops or parallel edges that were dropped."""


def _encode_n(n: int) -> bytes:
    if n < 0 or n > _MAX_N:
        raise ValueError(f"graph6/sparse6 require 0 <= n < 2**36, got {n}")
    if n <= 62:
        return bytes([n + _BIAS])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + _BIAS for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + _BIAS for s in (30, 24, 18, 12, 6, 0)])


def _decode_n(data: bytes, pos: int) -> tuple[int, int]:
    """Parse N(n) at ``pos``; return ``(n, next_pos)``."""

    def digits(start, count):
        if start + count > len(data):
            raise FormatError("truncated length prefix", len(data))
        value = 0
        for i in range(start, start + count):
            value = (value << 6) | _sextet(data, i)
        return value

    if pos >= len(data):
        raise FormatError("missing length prefix", pos)
    first = _sextet(data, pos)
    if first < 63:
        return first, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        return digits(pos + 2, 6), pos + 8
    return digits(pos + 1, 3), pos + 4


def _sextet(data: bytes, i: int) -> int:
    c = data[i]
    if not 63 <= c <= 126:
        raise FormatError(f"byte {c!r} outside the printable range 63..126", i)
    return c - _BIAS


def _as_bytes(s) -> bytes:
    if isinstance(s, str):
        s = s.encode("ascii")
    return bytes(s).strip()


def _pack(bits: list[int]) -> bytes:
    return bytes(
        _BIAS + ((bits[i] << 5) | (bits[i + 1] << 4) | (bits[i + 2] << 3)
                 | (bits[i + 3] << 2) | (bits[i + 4] << 1) | bits[i + 5])
        for i in range(0, len(bits), 6)
    )


def encode_graph6(g: Graph) -> bytes:
    n = g.n
    bits = []
    for j in range(1, n):
        row = g.adj[j]
        nbrs = set(row)
        bits.extend(1 if i in nbrs else 0 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    return _encode_n(n) + _pack(bits)


def decode_graph6(s) -> Graph:
    """Parse one graph6 string (an optional ``>>graph6<<`` header is skipped)."""
    data = _as_bytes(s)
    pos = 10 if data.startswith(b">>graph6<<") else 0
    n, pos = _decode_n(data, pos)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise FormatError(f"truncated adjacency data: need {nbytes} bytes", len(data))
    if len(data) - pos > nbytes:
        raise FormatError("trailing bytes after adjacency data", pos + nbytes)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = pos + k // 6
            if (_sextet(data, byte) >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if nbits % 6:
        last = pos + nbytes - 1
        if _sextet(data, last) & ((1 << (6 - nbits % 6)) - 1):
            raise FormatError("non-zero padding bits", last)
    return graph_from_edges(n, edges)


def _width(n: int) -> int:
    return max(1, (n - 1).bit_length())


def encode_sparse6(g: Graph) -> bytes:
    n = g.n
    k = _width(n)

    def put(x):
        bits.extend((x >> (k - 1 - i)) & 1 for i in range(k))

    bits: list[int] = []
    cur = 0
    for v in range(n):
        for u in g.adj[v]:
            if u > v:
                break
            if v == cur:
                bits.append(0)
            elif v == cur + 1:
                bits.append(1)
                cur = v
            else:
                bits.append(1)
                put(v)
                bits.append(0)
                cur = v
            put(u)
    pad = -len(bits) % 6
    if pad and k < 6 and n == (1 << k) and cur == n - 2 and pad >= k + 1:
        bits.append(0)
        pad -= 1
    bits.extend([1] * pad)
    return b":" + _encode_n(n) + _pack(bits)


def decode_sparse6(s) -> Graph:
    """Parse one sparse6 string.

    Loops and parallel edges are dropped and a :class:`MultigraphWarning` is
    issued.
    """
    data = _as_bytes(s)
    pos = 11 if data.startswith(b">>sparse6<<") else 0
    if pos >= len(data) or data[pos] != ord(":"):
        raise FormatError("sparse6 data must start with ':'", pos)
    n, pos = _decode_n(data, pos + 1)
    k = _width(n)
    bits = []
    for i in range(pos, len(data)):
        x = _sextet(data, i)
        bits.extend((x >> (5 - t)) & 1 for t in range(6))
    edges = set()
    dropped = 0
    v = 0
    i = 0
    while i + k + 1 <= len(bits):
        b = bits[i]
        x = 0
        for t in range(k):
            x = (x << 1) | bits[i + 1 + t]
        i += k + 1
        if b:
            v += 1
        if v >= n:
            break
        if x > v:
            v = x
        else:
            e = (x, v)
            if x == v or e in edges:
                dropped += 1
            else:
                edges.add(e)
    if dropped:
        warnings.warn(
            f"sparse6 input had {dropped} loop(s)/parallel edge(s); collapsed to a simple graph",
            MultigraphWarning,
            stacklevel=2,
        )
    return graph_from_edges(n, edges)


def decode_any(s) -> Graph:
    """Decode graph6 or sparse6, chosen by the leading ':'."""
    data = _as_bytes(s)
    if data.startswith(b":") or data.startswith(b">>sparse6<<"):
        return decode_sparse6(data)
    return decode_graph6(data)


def iter_graph_lines(text: bytes | str) -> Iterator[Graph]:
    """Decode every non-empty line of a graph6/sparse6 file."""
    if isinstance(text, str):
        text = text.encode("ascii")
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield decode_any(line)


def format_arc_list(d: Digraph) -> str:
    arcs = d.arcs()
    lines = [f"{d.n} {len(arcs)}"] + [f"{u} {v}" for u, v in arcs]
    return "\n".join(lines) + "\n"


def _parse_pairs(text: str) -> tuple[int, list[tuple[int, int]]]:
    rows = [ln for ln in text.split("\n")]
    offset = 0
    header = None
    pairs = []
    for ln in rows:
        stripped = ln.strip()
        if stripped:
            try:
                nums = [int(t) for t in stripped.split()]
            except ValueError:
                raise FormatError(f"non-integer token in line {stripped!r}", offset) from None
            if len(nums) != 2:
                raise FormatError(f"expected two integers, got {stripped!r}", offset)
            if header is None:
                header = nums
            else:
                pairs.append((nums[0], nums[1]))
        offset += len(ln) + 1
    if header is None:
        raise FormatError("empty edge list", 0)
    n, m = header
    if m != len(pairs):
        raise FormatError(f"header declares {m} arcs, found {len(pairs)}", offset)
    return n, pairs


def parse_arc_list(text: str) -> Digraph:
    """Parse ``n m`` followed by ``m`` lines ``u v`` (arc u->v)."""
    n, pairs = _parse_pairs(text)
    return digraph_from_arcs(n, pairs)


def parse_edge_list(text: str) -> Graph:
    """Same layout as :func:`parse_arc_list`, read as undirected edges."""
    n, pairs = _parse_pairs(text)
    return graph_from_edges(n, pairs)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def encode_many(graphs: Iterable[Graph]) -> bytes:
    return b"".join(encode_graph6(g) + b"\n" for g in graphs)
