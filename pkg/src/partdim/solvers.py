"""Exact values of the six location/domination parameters by bounded search."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple

from . import kernels
from .constructions import InvariantViolation, rd_augment
from .graph import CLIQUE, LEAVES, DistanceMatrix, Graph, GraphError, bits, distances, twin_sets
from .partition import Partition, is_dominating, is_rd, is_resolving

CSV_HEADER = ("graph6", "n", "diam", "beta_p", "eta_p", "beta", "gamma", "eta", "gamma_p")


def _connected_dm(g: Graph, min_order: int = 1) -> DistanceMatrix:
    if g.n < min_order:
        raise GraphError(f"order must be at least {min_order}")
    dm = distances(g)
    if not dm.connected:
        raise GraphError(f"graph {g.graph6} is disconnected")
    return dm


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvariantViolation(message)


class TwinBound(NamedTuple):
    partition: int
    dominating: int


def twin_lower_bound(g: Graph) -> TwinBound:
    """Lower bounds on (partition dimension, dominating partition dimension)
    from maximal proper twin sets: ``|W|`` for an independent set, ``|W|+1``
    for a clique, and ``|W|+1`` on the dominating side for twin leaves."""
    beta_bound = eta_bound = 2
    if g.n < 3:
        return TwinBound(beta_bound, eta_bound)
    for ts in twin_sets(g).sets:
        if ts.vertices == g.full:
            continue
        if ts.kind == CLIQUE:
            beta_bound = max(beta_bound, ts.size + 1)
        else:
            beta_bound = max(beta_bound, ts.size)
            if ts.kind == LEAVES:
                eta_bound = max(eta_bound, ts.size + 1)
    return TwinBound(beta_bound, max(beta_bound, eta_bound))


def _scan(dm: DistanceMatrix, g: Graph, k: int, dominating: bool) -> Partition | None:
    found = kernels.find_partitions(dm.flat, g.adj, g.n, k, dominating)
    if not found:
        return None
    p = Partition(found[0])
    _require((is_rd if dominating else is_resolving)(dm, p), f"kernel returned an invalid witness {p}")
    return p


def partition_dimension(g: Graph, dm: DistanceMatrix | None = None) -> tuple[int, Partition]:
    dm = dm or _connected_dm(g, 2)
    if g.n < 2:
        raise GraphError("order must be at least 2")
    start = twin_lower_bound(g).partition
    for k in range(start, g.n + 1):
        p = _scan(dm, g, k, dominating=False)
        if p is not None:
            _require(k <= g.n - dm.diameter + 1, f"partition dimension {k} above n - diam + 1")
            return k, p
    raise InvariantViolation("the all-singletons partition must resolve")


def dominating_partition_dimension(
    g: Graph, dm: DistanceMatrix | None = None, beta_p: tuple[int, Partition] | None = None
) -> tuple[int, Partition]:
    """Minimum RD-partition. Only the minimum resolving size is searched: if
    some resolving partition of that size dominates, it is optimal, else the
    augmented witness (one part more) is."""
    dm = dm or _connected_dm(g, 2)
    k, witness = beta_p or partition_dimension(g, dm)
    if twin_lower_bound(g).dominating <= k:
        p = _scan(dm, g, k, dominating=True)
        if p is not None:
            return k, p
    if g.n < 3:
        raise InvariantViolation("order-2 graph without a dominating resolving partition")
    p = rd_augment(g, witness, dm)
    _require(p.k == k + 1, f"augmentation returned {p.k} parts, expected {k + 1}")
    return k + 1, p


def _resolves(dm: DistanceMatrix, vertices: tuple[int, ...]) -> bool:
    seen = set()
    for u in range(dm.n):
        vec = tuple(dm.d[u][w] for w in vertices)
        if vec in seen:
            return False
        seen.add(vec)
    return True


def _dominates(g: Graph, mask: int) -> bool:
    cover = 0
    for v in bits(mask):
        cover |= g.closed(v)
    return cover == g.full


def metric_dimension(g: Graph, dm: DistanceMatrix | None = None) -> tuple[int, tuple[int, ...]]:
    dm = dm or _connected_dm(g)
    if g.n == 1:
        return 0, ()
    for size in range(1, g.n):
        for s in combinations(range(g.n), size):
            if _resolves(dm, s):
                return size, s
    raise InvariantViolation("n-1 vertices always resolve")


def domination_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    for size in range(1, g.n + 1):
        for s in combinations(range(g.n), size):
            mask = 0
            for v in s:
                mask |= 1 << v
            if _dominates(g, mask):
                return size, s
    raise InvariantViolation("the whole vertex set dominates")


def rd_number(
    g: Graph,
    dm: DistanceMatrix | None = None,
    gamma: int | None = None,
    beta: int | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Smallest vertex set that both resolves and dominates; the search starts
    at ``max(gamma, beta)`` and the result is checked against ``gamma + beta``."""
    dm = dm or _connected_dm(g)
    gamma = domination_number(g)[0] if gamma is None else gamma
    beta = metric_dimension(g, dm)[0] if beta is None else beta
    for size in range(max(gamma, beta), g.n + 1):
        for s in combinations(range(g.n), size):
            mask = 0
            for v in s:
                mask |= 1 << v
            if _dominates(g, mask) and _resolves(dm, s):
                _require(size <= gamma + beta, f"resolving domination number {size} above gamma + beta")
                return size, s
    raise InvariantViolation("the whole vertex set resolves and dominates")


def partition_domination_number(g: Graph) -> int:
    if g.n < 2:
        raise GraphError("the trivial graph has no dominating partition")
    dm = _connected_dm(g)
    _, dom = domination_number(g)
    mask = 0
    for v in dom:
        mask |= 1 << v
    p = Partition.from_parts([mask, g.full & ~mask], g.n)
    _require(is_dominating(dm, p), "{D, V-D} must dominate")
    _require(p.k == 2, "a single part cannot dominate")
    return p.k


# --------------------------------------------------------------------------
# the full record


@dataclass(frozen=True)
class ParamRecord:
    graph6: str
    n: int
    diam: int
    beta_p: int
    eta_p: int
    beta: int
    gamma: int
    eta: int
    gamma_p: int
    beta_p_witness: Partition = field(compare=False)
    eta_p_witness: Partition = field(compare=False)
    beta_set: tuple[int, ...] = field(compare=False)
    gamma_set: tuple[int, ...] = field(compare=False)
    eta_set: tuple[int, ...] = field(compare=False)

    def csv_row(self) -> list:
        return [getattr(self, name) for name in CSV_HEADER]

    def to_dict(self) -> dict:
        out = {name: getattr(self, name) for name in CSV_HEADER}
        out["witnesses"] = {
            "beta_p": str(self.beta_p_witness),
            "eta_p": str(self.eta_p_witness),
            "beta": list(self.beta_set),
            "gamma": list(self.gamma_set),
            "eta": list(self.eta_set),
        }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def counting_bound(k: int, d: int) -> int:
    """Most vertices an RD-partition with ``k`` parts can separate at diameter ``d``."""
    return k * (d ** (k - 1) - (d - 1) ** (k - 1))


def check_record(r: ParamRecord) -> None:
    """Raise ``InvariantViolation`` if ``r`` breaks any of the known inequalities."""
    _require(r.beta_p <= r.eta_p <= r.beta_p + 1, f"{r.graph6}: eta_p={r.eta_p} outside [beta_p, beta_p+1]")
    _require(r.beta_p <= r.beta + 1, f"{r.graph6}: beta_p > beta + 1")
    _require(r.beta_p <= r.n - r.diam + 1, f"{r.graph6}: beta_p > n - diam + 1")
    _require(max(r.gamma, r.beta) <= r.eta <= r.gamma + r.beta, f"{r.graph6}: eta outside [max(gamma,beta), gamma+beta]")
    _require(r.eta_p <= r.eta + 1, f"{r.graph6}: eta_p > eta + 1")
    _require(r.eta_p <= r.n - r.diam + 2, f"{r.graph6}: eta_p > n - diam + 2")
    _require(r.gamma_p == 2, f"{r.graph6}: gamma_p != 2")
    if r.n >= 3:
        _require(r.n <= counting_bound(r.eta_p, r.diam), f"{r.graph6}: counting bound violated")


def compute_all(g: Graph) -> ParamRecord:
    dm = _connected_dm(g, 2)
    bp = partition_dimension(g, dm)
    ep = dominating_partition_dimension(g, dm, bp)
    beta = metric_dimension(g, dm)
    gamma = domination_number(g)
    eta = rd_number(g, dm, gamma[0], beta[0])
    r = ParamRecord(
        graph6=g.graph6,
        n=g.n,
        diam=dm.diameter,
        beta_p=bp[0],
        eta_p=ep[0],
        beta=beta[0],
        gamma=gamma[0],
        eta=eta[0],
        gamma_p=partition_domination_number(g),
        beta_p_witness=bp[1],
        eta_p_witness=ep[1],
        beta_set=beta[1],
        gamma_set=gamma[1],
        eta_set=eta[1],
    )
    check_record(r)
    return r
