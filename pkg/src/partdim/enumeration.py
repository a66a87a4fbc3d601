"""Canonical forms, isomorphism tests and exhaustive generation of small
connected graphs; graph6 corpus files.

The canonical form of ``g`` is the graph6 string of the relabelling whose
upper-triangle adjacency bitstring (column-major, as graph6 stores it) is
lexicographically smallest among all relabellings that list vertices in
the order of their colour-refinement classes. The classes are an
isomorphism invariant, so equal forms mean isomorphic graphs and vice
versa.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph, GraphError, bits, distances, is_connected, parse_graph6

CANON_MAX_ORDER = 10
ENUM_MAX_ORDER = 8


def refine_colours(g: Graph) -> list[int]:
    """Stable colour refinement started from degrees; colour ids are ranks of
    the sorted signatures, hence independent of the labelling."""
    colour = [g.degree(v) for v in range(g.n)]
    ranks = sorted(set(colour))
    colour = [ranks.index(c) for c in colour]
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in bits(g.adj[v])))) for v in range(g.n)]
        order = sorted(set(sig))
        index = {s: i for i, s in enumerate(order)}
        new = [index[s] for s in sig]
        if len(order) == len(set(colour)):
            return new
        colour = new


def _twin_class(g: Graph) -> list[int]:
    cls = list(range(g.n))
    for u in range(g.n):
        if cls[u] != u:
            continue
        for v in range(u + 1, g.n):
            drop = ~(1 << u | 1 << v)
            if g.adj[u] & drop == g.adj[v] & drop:
                cls[v] = u
    return cls


def canonical_labeling(g: Graph) -> list[int]:
    """``order[i]`` is the vertex placed at canonical position ``i``."""
    if g.n > CANON_MAX_ORDER:
        raise GraphError(f"canonical form is limited to order {CANON_MAX_ORDER}")
    n = g.n
    colour = refine_colours(g)
    slots = sorted(colour)
    twin = _twin_class(g)
    adj = g.adj

    best: list[int] | None = None
    best_order: list[int] = []
    cols = [0] * n
    order = [0] * n

    def search(j: int, placed: int) -> None:
        nonlocal best, best_order
        if j == n:
            if best is None or cols < best:
                best = cols[:]
                best_order = order[:]
            return
        want = slots[j]
        options = []
        tried = set()
        for v in range(n):
            if placed >> v & 1 or colour[v] != want or twin[v] in tried:
                continue
            tried.add(twin[v])
            col = 0
            nb = adj[v]
            for i in range(j):
                col = col << 1 | (nb >> order[i] & 1)
            options.append((col, v))
        options.sort()
        for col, v in options:
            if best is not None:
                cols[j] = col
                if cols[: j + 1] > best[: j + 1]:
                    # options are sorted, later ones are no better
                    return
            cols[j] = col
            order[j] = v
            search(j + 1, placed | 1 << v)

    search(0, 0)
    return best_order


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: Graph) -> bytes:
    return canonical_graph(g).graph6.encode("ascii")


def _quick_invariant(g: Graph) -> tuple:
    dm = distances(g)
    return (
        g.n,
        sorted(g.degree(v) for v in range(g.n)),
        sorted(sorted(r) for r in dm.d),
    )


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if max(g1.n, g2.n) > CANON_MAX_ORDER:
        raise GraphError(f"isomorphism test is limited to order {CANON_MAX_ORDER}")
    if g1.n != g2.n or g1.size != g2.size:
        return False
    if _quick_invariant(g1) != _quick_invariant(g2):
        return False
    return canonical_form(g1) == canonical_form(g2)


# --------------------------------------------------------------------------
# generation


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    found: dict[bytes, Graph] = {}
    full = (1 << (n - 1)) - 1
    # every connected graph has a vertex whose removal leaves it connected
    for parent in _connected_classes(n - 1):
        for s in range(1, full + 1):
            adj = list(parent.adj)
            for v in bits(s):
                adj[v] |= 1 << (n - 1)
            adj.append(s)
            child = Graph(n, tuple(adj))
            canon = canonical_graph(child)
            key = canon.graph6.encode("ascii")
            if key not in found:
                found[key] = canon
    return tuple(found[key] for key in sorted(found))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonically labelled representative per isomorphism class of
    connected graphs of order ``n``, in increasing canonical-form order."""
    if not 1 <= n <= ENUM_MAX_ORDER:
        raise GraphError(
            f"built-in enumeration covers orders 1..{ENUM_MAX_ORDER}; supply a graph6 corpus for order {n}"
        )
    return iter(_connected_classes(n))


# --------------------------------------------------------------------------
# corpus files


def manifest_path(path: str | os.PathLike) -> Path:
    p = Path(path)
    return p.with_name(p.name + ".manifest.json")


@dataclass
class IngestResult:
    graphs: list[Graph] = field(default_factory=list)
    diagnostics: list[tuple[int, str]] = field(default_factory=list)
    manifest: dict | None = None

    @property
    def exhaustive(self) -> bool:
        return bool(self.manifest and self.manifest.get("exhaustive"))


def ingest_corpus(path: str | os.PathLike, connected_only: bool = False) -> IngestResult:
    """Read graph6 lines. Bad lines are reported as ``(line_number, message)``
    diagnostics and skipped; blank lines are ignored."""
    out = IngestResult()
    with open(path, "rb") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            try:
                g = parse_graph6(line)
            except GraphError as exc:
                out.diagnostics.append((lineno, str(exc)))
                continue
            if connected_only and not is_connected(g):
                out.diagnostics.append((lineno, "disconnected graph skipped"))
                continue
            out.graphs.append(g)
    mp = manifest_path(path)
    if mp.exists():
        out.manifest = json.loads(mp.read_text())
    return out


def write_corpus(path: str | os.PathLike, graphs: Iterable[Graph], exhaustive: bool = False) -> dict:
    """Write graph6 lines plus a ``<path>.manifest.json`` with counts per order."""
    counts: dict[str, int] = {}
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(g.graph6 + "\n")
            counts[str(g.n)] = counts.get(str(g.n), 0) + 1
    manifest = {"format": "graph6", "orders": counts, "exhaustive": exhaustive}
    manifest_path(path).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return manifest
