"""Pure-Python search kernels. Same signatures and results as ``_ckernels``."""

from __future__ import annotations

from .partition import first_rgs, next_rgs

BACKEND = "python"


def _dominating(adj, a, k) -> bool:
    parts = [0] * k
    for v, x in enumerate(a):
        parts[x] |= 1 << v
    for v, x in enumerate(a):
        if not adj[v] & ~parts[x]:
            return False
    return True


def _resolving(rows, a, n, k) -> bool:
    members: list[list[int]] = [[] for _ in range(k)]
    for v, x in enumerate(a):
        members[x].append(v)
    for group in members:
        if len(group) < 2:
            continue
        seen = set()
        for v in group:
            row = rows[v]
            vec = [n] * k
            for w in range(n):
                d = row[w]
                if d < vec[a[w]]:
                    vec[a[w]] = d
            key = tuple(vec)
            if key in seen:
                return False
            seen.add(key)
    return True


def find_partitions(dist, adj, n, k, dominating=False, start=None, limit=-1, max_results=1):
    """Scan k-part assignments in restricted-growth order from ``start``.

    ``dist`` is the row-major distance matrix, ``adj`` the neighbourhood
    bitsets. Collects assignments that are resolving (and dominating when
    asked) until ``max_results`` are found (-1: no cap) or ``limit``
    candidates have been examined (-1: to the end of the stream).
    """
    rows = [dist[v * n:(v + 1) * n] for v in range(n)]
    a = list(start) if start is not None else first_rgs(n, k)
    found = []
    scanned = 0
    while limit < 0 or scanned < limit:
        scanned += 1
        if (not dominating or _dominating(adj, a, k)) and _resolving(rows, a, n, k):
            found.append(tuple(a))
            if 0 <= max_results <= len(found):
                break
        if not next_rgs(a, k):
            break
    return found


def count_partitions(dist, adj, n, k, dominating=False):
    """Number of resolving (or RD) k-partitions; the benchmark workload."""
    return len(find_partitions(dist, adj, n, k, dominating, max_results=-1))
