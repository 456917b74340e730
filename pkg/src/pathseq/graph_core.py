"""Undirected simple graphs stored as adjacency bitsets, plus graph6 and
edge-list serialization and a few small-graph utilities.

Vertex sets are plain Python ints used as bitsets (bit ``v`` set means vertex
``v`` is present), so there is no word-size limit on ``n`` in the type itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

GRAPH6_MAX_N = 62
ISO_MAX_N = 10


class GraphError(ValueError):
    """A graph violates one of the representation invariants."""


class ParseError(ValueError):
    """Malformed graph6 or edge-list input.

    ``offset`` is the byte offset into a graph6 record, ``line`` the 1-based
    line number of an edge list; whichever does not apply is None.
    """

    def __init__(self, message: str, *, offset: int | None = None, line: int | None = None):
        where = []
        if offset is not None:
            where.append(f"byte {offset}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.offset = offset
        self.line = line


class UnsupportedSizeError(ValueError):
    """The graph is larger than an operation is prepared to handle."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph; ``adj[v]`` is the neighbor bitset of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise GraphError(f"row {v} has bits outside [0, {self.n})")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v] & ((1 << v) - 1))]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(row << shift for row in other.adj))


def parse_graph6(line: str) -> Graph:
    """Decode one short-form graph6 record (n <= 62)."""
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
        base = len(">>graph6<<")
    else:
        base = 0
    if not text:
        raise ParseError("empty graph6 record", offset=base)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside graph6 range [63, 126]", offset=base + i)
    n = ord(text[0]) - 63
    if n == 63:
        raise ParseError("long-form graph6 header (n > 62) is not supported", offset=base)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = text[1:]
    if len(body) < nchars:
        raise ParseError(f"truncated bit section: need {nchars} chars, found {len(body)}",
                         offset=base + 1 + len(body))
    if len(body) > nchars:
        raise ParseError("trailing characters after bit section", offset=base + 1 + nchars)
    bits = 0
    for ch in body:
        bits = bits << 6 | (ord(ch) - 63)
    pad = 6 * nchars - nbits
    if bits & ((1 << pad) - 1):
        raise ParseError("nonzero padding bits", offset=base + nchars)
    bits >>= pad
    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def write_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise UnsupportedSizeError(f"graph6 short form holds n <= {GRAPH6_MAX_N}, got n={g.n}")
    out = [chr(g.n + 63)]
    acc = width = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            width += 1
            if width == 6:
                out.append(chr(acc + 63))
                acc = width = 0
    if width:
        out.append(chr((acc << (6 - width)) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first line followed by one ``u v`` pair per line."""
    tokens: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens.extend((lineno, tok) for tok in content.split())
    if not tokens:
        raise ParseError("empty edge list: expected vertex count", line=1)

    def as_int(lineno: int, tok: str) -> int:
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", line=lineno) from None

    n = as_int(*tokens[0])
    if n < 0:
        raise ParseError(f"negative vertex count {n}", line=tokens[0][0])
    rest = tokens[1:]
    if len(rest) % 2:
        raise ParseError("odd number of vertex tokens; edges need two endpoints", line=rest[-1][0])
    rows = [0] * n
    for i in range(0, len(rest), 2):
        lineno = rest[i][0]
        u, v = as_int(*rest[i]), as_int(*rest[i + 1])
        for x in (u, v):
            if not 0 <= x < n:
                raise ParseError(f"vertex {x} out of range [0, {n})", line=lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=lineno)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def write_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    """True for graphs with at most one component; n <= 1 counts as connected."""
    if g.n <= 1:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def are_isomorphic_small(g1: Graph, g2: Graph) -> bool:
    """Decide isomorphism by backtracking over vertex bijections.

    Candidates for each vertex are restricted to equal degree, and every
    partial map is checked against the already-mapped vertices.
    """
    if g1.n != g2.n:
        return False
    if g1.n > ISO_MAX_N:
        raise UnsupportedSizeError(f"permutation search is capped at n <= {ISO_MAX_N}, got n={g1.n}")
    if g1.edge_count != g2.edge_count:
        return False
    d1, d2 = g1.degrees(), g2.degrees()
    if sorted(d1) != sorted(d2):
        return False
    n = g1.n
    # map high-degree vertices first; they constrain the search most
    order = sorted(range(n), key=lambda v: -d1[v])
    image = [-1] * n

    def extend(pos: int, used: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in range(n):
            if used >> w & 1 or d2[w] != d1[v]:
                continue
            ok = True
            for prev in order[:pos]:
                if g1.has_edge(v, prev) != g2.has_edge(w, image[prev]):
                    ok = False
                    break
            if ok:
                image[v] = w
                if extend(pos + 1, used | 1 << w):
                    return True
        image[v] = -1
        return False

    return extend(0, 0)
