import random

import networkx as nx
import pytest

from partdim import kernels
from partdim.constructions import (
    COMMON_SUPPORT,
    MATCHED,
    MATCHED_DEGENERATE,
    MANY_NONLEAF,
    ConstructionError,
    fusion_case,
    fusion_partition,
    fusion_valid,
    hall_condition,
    max_matching,
    path_cycle_partition,
    rd_augment,
)
from partdim.enumeration import enumerate_connected
from partdim.families import star
from partdim.graph import Graph, complete, cycle, disjoint_union, distances, path
from partdim.partition import Partition, PartitionError, is_dominating, is_rd
from partdim.solvers import dominating_partition_dimension, partition_dimension


def one_based(n, *parts):
    return Partition.from_parts([[v - 1 for v in p] for p in parts], n)


def spider(legs, length):
    edges = []
    nxt = 1
    for _ in range(legs):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


# --- rd_augment -------------------------------------------------------------


def test_augment_is_noop_on_dominating_input():
    g = path(5)
    p = one_based(5, [1], [2, 4], [3, 5])
    assert rd_augment(g, p) is p


def test_augment_star_example():
    g = star(4)  # centre 0
    p = Partition.parse("0,1|2|3")
    out = rd_augment(g, p)
    assert out.k == 4
    assert str(out) == "0|1|2|3"
    assert is_rd(distances(g), out)


def test_augment_errors():
    with pytest.raises(ConstructionError):
        rd_augment(complete(3), Partition.parse("0|1,2"))
    with pytest.raises(ConstructionError):
        rd_augment(disjoint_union(path(2), path(2)), Partition((0, 1, 2, 3)))
    with pytest.raises(ConstructionError):
        rd_augment(path(2), Partition((0, 1)))


@pytest.mark.parametrize("n", range(3, 7))
def test_augment_every_minimum_resolving_partition(n):
    for g in enumerate_connected(n):
        dm = distances(g)
        bp = partition_dimension(g, dm)[0]
        for a in kernels.find_partitions(dm.flat, g.adj, n, bp, max_results=-1):
            p = Partition(a)
            out = rd_augment(g, p, dm)
            assert is_rd(dm, out)
            assert out.k <= bp + 1
            assert (out.k == bp) == is_dominating(dm, p)


# --- matching helpers -------------------------------------------------------


def test_matching_against_networkx():
    rng = random.Random(6)
    for _ in range(100):
        left = list(range(rng.randint(1, 6)))
        right = [f"r{i}" for i in range(rng.randint(1, 6))]
        adj = {x: [y for y in right if rng.random() < 0.4] for x in left}
        m = max_matching(left, adj)
        assert len(set(m.values())) == len(m)
        assert all(y in adj[x] for x, y in m.items())
        h = nx.Graph()
        h.add_nodes_from(left)
        h.add_nodes_from(right)
        h.add_edges_from((x, y) for x in left for y in adj[x])
        best = nx.bipartite.maximum_matching(h, top_nodes=left)
        assert len(m) == len(best) // 2
        full_hall = hall_condition(left, adj, len(left))
        assert full_hall == (len(m) == len(left))


def test_matching_limit():
    adj = {0: ["a"], 1: ["b"], 2: ["c"]}
    assert len(max_matching([0, 1, 2], adj, limit=2)) == 2


# --- fusion -----------------------------------------------------------------


def test_fusion_precondition_messages():
    g = star(7)
    for u in range(7):
        assert not fusion_valid(g, u, 2)
    with pytest.raises(ConstructionError, match="deg\\(u\\) <= n-k-1"):
        fusion_partition(g, 0, 2)
    with pytest.raises(ConstructionError, match="k <= deg\\(u\\)"):
        fusion_partition(g, 1, 2)
    with pytest.raises(ConstructionError, match="n >= 2k\\+1"):
        fusion_partition(path(6), 1, 3)
    with pytest.raises(ConstructionError, match="k >= 2"):
        fusion_partition(path(6), 1, 1)


def test_fusion_spider():
    g = spider(3, 2)
    assert g.n == 7 and g.degree(0) == 3
    case = fusion_case(g, 0, 3)
    assert case.tag in (MATCHED_DEGENERATE, COMMON_SUPPORT)
    p = fusion_partition(g, 0, 3)
    assert p.k == 4 and is_rd(distances(g), p)


def test_fusion_common_support_case():
    # leaves 0 and 1 share the support 4; u = 2 has neighbours 3 and 4
    g = Graph.from_edges(5, [(0, 4), (1, 4), (2, 3), (2, 4), (3, 4)])
    case = fusion_case(g, 2, 2)
    assert case.tag == COMMON_SUPPORT
    assert case.pairs == ((2, 0), (3, 1))
    p = fusion_partition(g, 2, 2)
    assert p.k == 3 and is_rd(distances(g), p)


def test_fusion_reaches_every_case():
    seen = set()
    for g in enumerate_connected(6):
        for u in range(6):
            if fusion_valid(g, u, 2):
                seen.add(fusion_case(g, u, 2).tag)
    assert seen == {MANY_NONLEAF, MATCHED, MATCHED_DEGENERATE, COMMON_SUPPORT}


@pytest.mark.parametrize("n", range(5, 8))
def test_fusion_sweep(n):
    for g in enumerate_connected(n):
        dm = distances(g)
        ep = None
        for u in range(n):
            for k in range(2, (n - 1) // 2 + 1):
                if not fusion_valid(g, u, k):
                    continue
                p = fusion_partition(g, u, k, dm)
                assert p.k == n - k and is_rd(dm, p)
                ep = ep or dominating_partition_dimension(g, dm)[0]
                assert ep <= n - k


# --- paths and cycles -------------------------------------------------------


def test_path_cycle_examples():
    assert path_cycle_partition(5) == one_based(5, [1], [2, 4], [3, 5])
    assert path_cycle_partition(6, cycle=True) == one_based(6, [1, 2], [4, 6], [3, 5])
    assert path_cycle_partition(7, cycle=True) == one_based(7, [1], [2, 4, 6], [3, 5, 7])
    for n in range(3, 13):
        assert is_rd(distances(path(n)), path_cycle_partition(n))
        assert is_rd(distances(cycle(n)), path_cycle_partition(n, cycle=True))
    with pytest.raises(PartitionError):
        path_cycle_partition(2)
