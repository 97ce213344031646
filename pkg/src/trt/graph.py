"""Immutable simple graphs as bitset adjacency rows, plus graph6 interchange.

Vertices are dense 0-based integers.  Each adjacency row is a Python int used
as a bitset, so all set operations are single int ops.  Graphs are validated
on construction (symmetry, irreflexivity, order cap) and never mutated, which
makes every operation in this package safe for unrestricted concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 128


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the 0-based byte offset at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset neighbor rows."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"graph order {n} outside 0..{MAX_ORDER}")
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        rows = tuple(adj)
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has neighbor bits beyond vertex {n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        for v, row in enumerate(rows):
            m = row
            while m:
                u = (m & -m).bit_length() - 1
                if not (rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
                m &= m - 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, e={self.edge_count()})"

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def edge_count(self) -> int:
        total = sum(row.bit_count() for row in self.adj)
        assert total % 2 == 0
        return total // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            m = self.adj[v] >> (v + 1)
            while m:
                u = (m & -m).bit_length() - 1
                yield (v, v + 1 + u)
                m &= m - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        out, m = [], self.adj[v]
        while m:
            out.append((m & -m).bit_length() - 1)
            m &= m - 1
        return tuple(out)


def empty(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    return Graph(n, (0,) * n)


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop edge ({u},{v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for order {n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def complete(k: int) -> Graph:
    """K_k: all C(k,2) edges."""
    full = (1 << k) - 1
    return Graph(k, tuple(full ^ (1 << v) for v in range(k)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: side A = 0..a-1, side B = a..a+b-1."""
    amask = (1 << a) - 1
    bmask = ((1 << (a + b)) - 1) ^ amask
    return Graph(a + b, tuple(bmask if v < a else amask for v in range(a + b)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertex-disjoint union; h's vertices are shifted up by g.n."""
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, rows)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row) ^ (1 << v) for v, row in enumerate(g.adj)))


# ---------------------------------------------------------------------------
# Witness descriptors: symbolic recipes for constructed graphs.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CliquePart:
    order: int

    def label(self) -> str:
        return f"K{self.order}"


@dataclass(frozen=True)
class DegreeSeqPart:
    degrees: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.degrees)

    def label(self) -> str:
        d = max(self.degrees) if self.degrees else 0
        return f"nearreg({self.order};{d})"


@dataclass(frozen=True)
class WitnessDescriptor:
    """Symbolic graph recipe: disjoint union of parts, optionally complemented.

    Realization (constructions module) is deterministic: parts are realized in
    the stored order, so the descriptor pins the output byte-for-byte.
    """

    parts: tuple[CliquePart | DegreeSeqPart, ...]
    complemented: bool = False

    @property
    def order(self) -> int:
        return sum(part.order for part in self.parts)

    def label(self) -> str:
        core = " + ".join(p.label() for p in self.parts) if self.parts else "empty"
        return f"complement({core})" if self.complemented else core

    def to_json(self) -> dict:
        parts = []
        for p in self.parts:
            if isinstance(p, CliquePart):
                parts.append({"kind": "clique", "order": p.order})
            else:
                parts.append({"kind": "degree_seq", "degrees": list(p.degrees)})
        return {"parts": parts, "complemented": self.complemented, "order": self.order}


def near_regular_sequence(p: int, d: int) -> tuple[int, ...]:
    """Degree sequence (d,...,d), with the last vertex at d-1 when d*p is odd."""
    if p < 0 or d < 0 or (p > 0 and d >= p):
        raise ValueError(f"no near-regular sequence for p={p}, d={d}")
    if p == 0:
        return ()
    if (d * p) % 2 == 0:
        return (d,) * p
    return (d,) * (p - 1) + (d - 1,)


def cliques_descriptor(*orders: int) -> WitnessDescriptor:
    """Disjoint union of cliques, largest first; zero-order parts dropped."""
    parts = tuple(CliquePart(k) for k in sorted(orders, reverse=True) if k > 0)
    return WitnessDescriptor(parts=parts)


# ---------------------------------------------------------------------------
# graph6: 6-bit big-endian encoding of the upper triangle in column order,
# each byte offset by 63; one graph per line.
# ---------------------------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 0x3F) + 63) for s in (12, 6, 0))
    acc = 0
    nbits = 0
    body = []
    for col in range(1, n):
        colbits = g.adj[col]
        for row in range(col):
            acc = (acc << 1) | ((colbits >> row) & 1)
            nbits += 1
            if nbits == 6:
                body.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        body.append(chr((acc << (6 - nbits)) + 63))
    return head + "".join(body)


def _g6_byte(line: str, i: int) -> int:
    if i >= len(line):
        raise Graph6Error("truncated graph6 data", len(line))
    b = ord(line[i])
    if not 63 <= b <= 126:
        raise Graph6Error(f"byte {b!r} outside graph6 range 63..126", i)
    return b - 63


def decode_graph6(line: str) -> Graph:
    """Decode one graph6 line; raises Graph6Error with a byte offset on bad input."""
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    line = line.rstrip("\r\n")
    if not line:
        raise Graph6Error("empty graph6 line", 0)
    i = 0
    if line[0] == "~":
        if len(line) > 1 and line[1] == "~":
            raise Graph6Error("graph order beyond supported cap", 0)
        n = 0
        for i in range(1, 4):
            n = (n << 6) | _g6_byte(line, i)
        i = 4
    else:
        n = _g6_byte(line, 0)
        i = 1
    if n > MAX_ORDER:
        raise Graph6Error(f"graph order {n} exceeds cap {MAX_ORDER}", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(line) != i + nbytes:
        if len(line) > i + nbytes:
            raise Graph6Error("extra bytes after graph6 data", i + nbytes)
        raise Graph6Error("truncated graph6 data", len(line))
    rows = [0] * n
    cells = iter((row, col) for col in range(1, n) for row in range(col))
    bit = 0
    for j in range(nbytes):
        chunk = _g6_byte(line, i + j)
        for s in (5, 4, 3, 2, 1, 0):
            if bit < nbits:
                row, col = next(cells)
                if (chunk >> s) & 1:
                    rows[row] |= 1 << col
                    rows[col] |= 1 << row
            elif (chunk >> s) & 1:
                raise Graph6Error("nonzero padding bits", i + j)
            bit += 1
    return Graph(n, rows)
