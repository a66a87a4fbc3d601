"""Explicit constructions of resolving dominating partitions.

* ``rd_augment`` turns a resolving partition into a resolving dominating
  one with at most one extra part.
* ``fusion_partition`` builds an RD-partition with ``n - k`` parts around a
  vertex ``u`` with ``k <= deg(u) <= n - k - 1``.
* ``path_cycle_partition`` gives the 3-part RD-partitions of paths and cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import DistanceMatrix, Graph, bits, components, distances, is_connected
from .partition import Partition, PartitionError, is_rd, is_resolving


class ConstructionError(ValueError):
    """Construction called outside its preconditions."""


class InvariantViolation(AssertionError):
    """An internal guarantee of a construction or solver failed."""


def rd_augment(g: Graph, p: Partition, dm: DistanceMatrix | None = None) -> Partition:
    """Resolving partition -> resolving dominating partition, one part larger.

    Vertices whose closed neighbourhood stays inside their own part form a
    set ``W``. In every component of ``G[W]`` a BFS tree from the smallest
    vertex is 2-coloured and the colour class holding the root is moved
    out into a new part. A partition that is already dominating is
    returned unchanged.
    """
    if not is_connected(g):
        raise ConstructionError("graph must be connected")
    if g.n < 3:
        raise ConstructionError("graph must have at least 3 vertices")
    if p.n != g.n:
        raise ConstructionError("partition and graph orders differ")
    dm = dm or distances(g)
    if not is_resolving(dm, p):
        raise ConstructionError("input partition is not resolving")

    parts = p.parts
    closed_in_part = 0
    for v in range(g.n):
        if g.closed(v) & ~parts[p.assign[v]] == 0:
            closed_in_part |= 1 << v
    if not closed_in_part:
        return p

    moved = 0
    verts = list(bits(closed_in_part))
    for comp in components(g.induced(closed_in_part)):
        local = [verts[i] for i in bits(comp)]
        if len(local) == 1:
            moved |= 1 << local[0]
            continue
        members = 0
        for v in local:
            members |= 1 << v
        root = local[0]
        colour = {root: 0}
        queue = [root]
        for v in queue:
            for w in bits(g.adj[v] & members):
                if w not in colour:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
        for v, c in colour.items():
            if c == 0:
                moved |= 1 << v

    # every moved vertex keeps a neighbour in what is left of its old part
    for v in bits(moved):
        if not g.adj[v] & parts[p.assign[v]] & ~moved:
            raise InvariantViolation(f"moved vertex {v} lost its neighbour in its own part")

    new_parts = [part & ~moved for part in parts] + [moved]
    out = Partition.from_parts(new_parts, g.n)
    if not is_rd(dm, out):
        raise InvariantViolation(f"augmented partition {out} is not resolving dominating")
    return out


# --------------------------------------------------------------------------
# fusion around a vertex of intermediate degree

MANY_NONLEAF = "many-nonleaf"
MATCHED = "matched"
MATCHED_DEGENERATE = "matched-degenerate"
COMMON_SUPPORT = "common-support"


@dataclass(frozen=True)
class FusionCase:
    tag: str
    pairs: tuple[tuple[int, int], ...]


def max_matching(left: list[int], right_adj: dict[int, list[int]], limit: int | None = None) -> dict[int, int]:
    """Augmenting-path bipartite matching, scanning ``left`` in order.

    ``right_adj[x]`` lists the right-side neighbours of left vertex ``x``.
    Stops once ``limit`` left vertices are matched. Returns left -> right.
    """
    match_right: dict[int, int] = {}

    def augment(x: int, seen: set[int]) -> bool:
        for y in right_adj[x]:
            if y in seen:
                continue
            seen.add(y)
            if y not in match_right or augment(match_right[y], seen):
                match_right[y] = x
                return True
        return False

    size = 0
    for x in left:
        if limit is not None and size >= limit:
            break
        if augment(x, set()):
            size += 1
    return {x: y for y, x in match_right.items()}


def hall_condition(left: list[int], right_adj: dict[int, list[int]], max_size: int) -> bool:
    """``|N(S)| >= |S|`` for every ``S`` of at most ``max_size`` left vertices."""
    for r in range(1, min(max_size, len(left)) + 1):
        for subset in combinations(left, r):
            if len({y for x in subset for y in right_adj[x]}) < r:
                return False
    return True


def _fusion_check(g: Graph, u: int, k: int) -> None:
    if not is_connected(g):
        raise ConstructionError("graph must be connected")
    if not 0 <= u < g.n:
        raise ConstructionError(f"vertex {u} out of range")
    d = g.degree(u)
    if k < 2:
        raise ConstructionError(f"k >= 2 fails (k={k})")
    if g.n < 2 * k + 1:
        raise ConstructionError(f"n >= 2k+1 fails (n={g.n}, k={k})")
    if d < k:
        raise ConstructionError(f"k <= deg(u) fails (deg={d}, k={k})")
    if d > g.n - k - 1:
        raise ConstructionError(f"deg(u) <= n-k-1 fails (deg={d}, n={g.n}, k={k})")


def fusion_valid(g: Graph, u: int, k: int) -> bool:
    try:
        _fusion_check(g, u, k)
    except ConstructionError:
        return False
    return True


def fusion_case(g: Graph, u: int, k: int, dm: DistanceMatrix | None = None) -> FusionCase:
    """Choose the vertex pairs that get fused; everything else stays single."""
    _fusion_check(g, u, k)
    dm = dm or distances(g)
    nbrs = g.neighbors(u)
    d = len(nbrs)
    row = dm.d[u]
    leaves = [z for z in range(g.n) if row[z] == 2 and g.degree(z) == 1]
    far = [z for z in range(g.n) if row[z] >= 2 and z not in leaves]
    c = len(far)

    if c >= k:
        return FusionCase(MANY_NONLEAF, tuple(zip(nbrs[:k], far[:k])))

    h = k - c
    # non-adjacency graph between leaves at distance 2 and N(u)
    non_adj = {z: [x for x in nbrs if not g.has_edge(x, z)] for z in leaves}
    if not hall_condition(leaves, non_adj, k - 1):
        raise InvariantViolation("Hall condition fails for leaf sets smaller than k")
    matching = max_matching(leaves, non_adj, limit=h)

    if len(matching) >= h:
        used = set(matching.values())
        pairs = [(x, z) for z, x in matching.items()]
        spare = [x for x in nbrs if x not in used]
        pairs += list(zip(spare, far))
        tag = MATCHED_DEGENERATE if h == k == d else MATCHED
        return FusionCase(tag, tuple(sorted(pairs)))

    if not h == k == d:
        raise InvariantViolation(f"no matching saturating {h} leaves although h, k, d = {h}, {k}, {d}")
    supports = {g.neighbors(z)[0] for z in leaves}
    if len(supports) != 1:
        raise InvariantViolation("leaves without a saturating matching must share one support")
    (x1,) = supports
    ys = leaves[:k]
    rest = [x for x in nbrs if x != x1]
    pairs = [(u, ys[0])] + list(zip(rest, ys[1:]))
    return FusionCase(COMMON_SUPPORT, tuple(pairs))


def fusion_partition(g: Graph, u: int, k: int, dm: DistanceMatrix | None = None) -> Partition:
    """RD-partition of ``g`` with exactly ``n - k`` parts.

    Requires ``k >= 2``, ``n >= 2k+1`` and ``k <= deg(u) <= n-k-1``; each
    violated inequality is named in the raised ``ConstructionError``.
    """
    dm = dm or distances(g)
    case = fusion_case(g, u, k, dm)
    paired = 0
    parts = []
    for x, y in case.pairs:
        parts.append(1 << x | 1 << y)
        paired |= 1 << x | 1 << y
    parts += [1 << z for z in range(g.n) if not paired >> z & 1]
    p = Partition.from_parts(parts, g.n)
    if p.k != g.n - k or not is_rd(dm, p):
        raise InvariantViolation(f"fusion ({case.tag}) produced {p}, expected an RD-partition of size {g.n - k}")
    return p


# --------------------------------------------------------------------------
# paths and cycles


def path_cycle_partition(n: int, cycle: bool = False) -> Partition:
    """3-part RD-partition of the path (or cycle) ``0-1-...-(n-1)``.

    In 1-based labels: ``{1}``, the evens, the odds except 1; for an even
    cycle ``{1,2}``, the evens except 2, the odds except 1.
    """
    if n < 3:
        raise PartitionError("paths and cycles need n >= 3 here")
    label = range(1, n + 1)
    if cycle and n % 2 == 0:
        parts = [[1, 2], [i for i in label if i % 2 == 0 and i != 2], [i for i in label if i % 2 and i != 1]]
    else:
        parts = [[1], [i for i in label if i % 2 == 0], [i for i in label if i % 2 and i != 1]]
    return Partition.from_parts([[i - 1 for i in part] for part in parts], n)
