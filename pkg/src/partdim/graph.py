"""Bitset graphs, the graph6 codec, distances and small structural queries.

Vertices are ``0..n-1``. A vertex set is a Python ``int`` used as a bitset,
bit ``v`` standing for vertex ``v``; the order cap of 64 keeps every set in
one machine word on the compiled side.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


class GraphError(ValueError):
    """Invalid graph, or an operation applied outside its domain."""


class Graph6Error(GraphError):
    """Malformed graph6 input; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a bitset in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the open neighbourhood of ``v``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in bits(nb):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"edge {v}-{w} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed(self, v: int) -> int:
        """Closed neighbourhood N[v] as a bitset."""
        return self.adj[v] | 1 << v

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v].bit_count() == 1]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        adj = [0] * self.n
        for v in range(self.n):
            pv = perm[v]
            for w in bits(self.adj[v]):
                adj[pv] |= 1 << perm[w]
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {u}-{v}")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def induced(self, mask: int) -> Graph:
        """Subgraph induced by ``mask``, vertices renumbered in increasing order."""
        verts = list(bits(mask))
        index = {v: i for i, v in enumerate(verts)}
        adj = []
        for v in verts:
            adj.append(to_mask(index[w] for w in bits(self.adj[v] & mask)))
        return Graph(len(verts), tuple(adj))

    @cached_property
    def graph6(self) -> str:
        return emit_graph6(self)

    def __str__(self) -> str:
        return self.graph6


# --------------------------------------------------------------------------
# graph6


def _encode_order(n: int) -> list[int]:
    if n <= 62:
        return [n + 63]
    return [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]


def emit_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 line (no header, no newline)."""
    out = _encode_order(g.n)
    acc = nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def parse_graph6(text: str | bytes) -> Graph:
    """Decode a single graph6 line. Surrounding whitespace is ignored."""
    if isinstance(text, str):
        try:
            data = text.strip().encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    else:
        data = bytes(text).strip()
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    if data.startswith(b">>"):
        raise Graph6Error("graph6 headers are not accepted", 0)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"invalid graph6 byte {c!r}", i)
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte order prefix implies n > 64", 1)
        if len(data) < 4:
            raise Graph6Error("truncated order prefix", len(data))
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}", 0)
    if n == 0:
        raise Graph6Error("order 0 is not supported", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        off = pos + min(len(body), need)
        raise Graph6Error(f"expected {need} data bytes for order {n}, got {len(body)}", off)
    pad = need * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", pos + need - 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


# --------------------------------------------------------------------------
# distances


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; unreachable pairs hold the sentinel ``n``."""

    n: int
    d: tuple[tuple[int, ...], ...]

    @property
    def unreachable(self) -> int:
        return self.n

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.d[u][v]

    def row(self, u: int) -> tuple[int, ...]:
        return self.d[u]

    @cached_property
    def connected(self) -> bool:
        return all(x < self.n for x in self.d[0])

    def eccentricity(self, u: int) -> int:
        if not self.connected:
            raise GraphError("eccentricity is undefined on a disconnected graph")
        return max(self.d[u])

    @cached_property
    def diameter(self) -> int:
        if not self.connected:
            raise GraphError("diameter is undefined on a disconnected graph")
        return max(max(r) for r in self.d)

    @cached_property
    def flat(self) -> list[int]:
        """Row-major copy handed to the search kernels."""
        return [x for r in self.d for x in r]

    def layers(self, u: int) -> list[int]:
        """``layers(u)[i]`` is the bitset of vertices at distance exactly ``i``."""
        out: list[int] = []
        for v, x in enumerate(self.d[u]):
            if x < self.n:
                while len(out) <= x:
                    out.append(0)
                out[x] |= 1 << v
        return out


def _bfs(g: Graph, src: int) -> list[int]:
    dist = [g.n] * g.n
    dist[src] = 0
    frontier = 1 << src
    seen = frontier
    depth = 0
    while frontier:
        depth += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        seen |= nxt
        for v in bits(nxt):
            dist[v] = depth
        frontier = nxt
    return dist


def distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(_bfs(g, s)) for s in range(g.n)))


def is_connected(g: Graph) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == g.full


def diameter(g: Graph) -> int:
    if not is_connected(g):
        raise GraphError("diameter of a disconnected graph")
    return distances(g).diameter


def components(g: Graph) -> list[int]:
    """Connected components as bitsets, ordered by smallest vertex."""
    left = g.full
    out = []
    while left:
        root = left & -left
        comp = frontier = root
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= nxt
        out.append(comp)
        left &= ~comp
    return out


# --------------------------------------------------------------------------
# constructors


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def _combine(g1: Graph, g2: Graph, cross: bool) -> Graph:
    n = g1.n + g2.n
    if n > MAX_ORDER:
        raise GraphError(f"combined order {n} exceeds {MAX_ORDER}")
    low = g1.full if cross else 0
    high = (g2.full << g1.n) if cross else 0
    adj = [nb | high for nb in g1.adj] + [(nb << g1.n) | low for nb in g2.adj]
    return Graph(n, tuple(adj))


def join(g1: Graph, g2: Graph) -> Graph:
    """``g1`` on vertices ``0..n1-1``, ``g2`` shifted after it, all cross edges."""
    return _combine(g1, g2, True)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return _combine(g1, g2, False)


def complete(n: int) -> Graph:
    return complement(Graph.empty(n))


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# --------------------------------------------------------------------------
# twins

INDEPENDENT = "independent"
CLIQUE = "clique"
LEAVES = "leaves"


@dataclass(frozen=True)
class TwinSet:
    vertices: int
    kind: str

    @property
    def size(self) -> int:
        return self.vertices.bit_count()

    def members(self) -> list[int]:
        return list(bits(self.vertices))


@dataclass(frozen=True)
class TwinSetReport:
    sets: tuple[TwinSet, ...]

    def of_kind(self, *kinds: str) -> list[TwinSet]:
        return [s for s in self.sets if s.kind in kinds]


def are_twins(g: Graph, u: int, v: int) -> bool:
    if u == v:
        return True
    drop = ~(1 << u | 1 << v)
    return g.adj[u] & drop == g.adj[v] & drop


def twin_sets(g: Graph) -> TwinSetReport:
    """Maximal twin classes of size at least 2.

    Twinship is an equivalence relation, so the classes are found by one
    greedy pass. A class of pairwise adjacent vertices is ``clique``; an
    independent class whose members all have degree 1 is ``leaves``.
    """
    seen = 0
    out = []
    for u in range(g.n):
        if seen >> u & 1:
            continue
        cls = 1 << u
        for v in range(u + 1, g.n):
            if not seen >> v & 1 and are_twins(g, u, v):
                cls |= 1 << v
        seen |= cls
        if cls.bit_count() < 2:
            continue
        v = (cls & ~(1 << u)).bit_length() - 1
        if g.has_edge(u, v):
            kind = CLIQUE
        elif g.degree(u) == 1:
            kind = LEAVES
        else:
            kind = INDEPENDENT
        out.append(TwinSet(cls, kind))
    return TwinSetReport(tuple(out))
