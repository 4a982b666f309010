"""graph6 encoding (header-free) for single graphs and newline-separated families."""
from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .graph import Graph


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126]) + bytes(((n >> s) & 63) + 63 for s in (12, 6, 0))
    if n < 68719476736:
        return bytes([126, 126]) + bytes(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"graph too large for graph6: n={n}")


def encode(g: Graph) -> bytes:
    """graph6 bytes for ``g`` (no header, no trailing newline)."""
    bits = []
    adj = g.adj
    for j in range(1, g.n):
        row = adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    body = bytes(
        63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3 | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5])
        for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def to_string(g: Graph) -> str:
    return encode(g).decode("ascii")


def decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise ValueError("empty graph6 string")
    if any(c < 63 or c > 126 for c in data):
        raise ValueError(f"invalid graph6 byte in {data!r}")
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        n = 0
        for c in data[2:8]:
            n = n << 6 | (c - 63)
        pos = 8
    else:
        n = 0
        for c in data[1:4]:
            n = n << 6 | (c - 63)
        pos = 4
    need = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (need + 5) // 6:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            c = body[k // 6] - 63
            if c >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges))


def read_family_file(path: str | Path) -> list[Graph]:
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(decode(line))
    return out


def write_family_file(path: str | Path, graphs: Iterable[Graph]):
    Path(path).write_text("".join(to_string(g) + "\n" for g in graphs))
