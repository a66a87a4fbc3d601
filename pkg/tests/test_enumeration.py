import json
import random

import networkx as nx
import pytest

from oracles import labeled_connected_classes, min_relabel_key, to_nx
from partdim.enumeration import (
    CANON_MAX_ORDER,
    are_isomorphic,
    canonical_form,
    canonical_graph,
    enumerate_connected,
    ingest_corpus,
    manifest_path,
    write_corpus,
)
from partdim.families import lambda_member, star
from partdim.graph import Graph, GraphError, complement, cycle, is_connected, parse_graph6, path

COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_canonical_form_examples():
    rng = random.Random(0)
    p4 = path(4)
    assert canonical_form(p4) == canonical_form(shuffled(p4, rng))
    assert canonical_form(star(4)) != canonical_form(p4)
    assert canonical_form(cycle(5)) == canonical_form(complement(cycle(5)))
    with pytest.raises(GraphError):
        canonical_form(path(CANON_MAX_ORDER + 1))


def test_are_isomorphic_examples():
    assert are_isomorphic(path(5), path(5).relabel([4, 3, 2, 1, 0]))
    assert not are_isomorphic(lambda_member(12, 7), lambda_member(17, 7))
    assert are_isomorphic(complement(lambda_member(15, 8)), lambda_member(17, 8))
    assert not are_isomorphic(path(4), path(5))
    with pytest.raises(GraphError):
        are_isomorphic(path(11), path(11))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_canonical_form_is_class_function(n):
    rng = random.Random(n)
    graphs = list(enumerate_connected(n))
    for g in rng.sample(graphs, min(len(graphs), 25)):
        key = canonical_form(g)
        for _ in range(100):
            assert canonical_form(shuffled(g, rng)) == key


def test_canonical_form_against_permutation_oracle():
    # equal canonical forms <=> equal n!-minimum keys, on random labelled graphs
    rng = random.Random(3)
    seen = {}
    for _ in range(300):
        n = rng.randint(1, 6)
        g = Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < 0.5])
        a, b = canonical_form(g), min_relabel_key(g) + (n,)
        if a in seen:
            assert seen[a] == b
        seen[a] = b
    assert len(set(seen.values())) == len(seen)


def test_canonical_graph_is_relabelling():
    g = lambda_member(11, 8)
    c = canonical_graph(g)
    assert nx.is_isomorphic(to_nx(g), to_nx(c))


@pytest.mark.parametrize("n", sorted(COUNTS))
def test_counts(n):
    graphs = list(enumerate_connected(n))
    assert len(graphs) == COUNTS[n]
    forms = [canonical_form(g) for g in graphs]
    assert forms == sorted(set(forms))
    assert all(is_connected(g) for g in graphs)
    assert all(canonical_graph(g) == g for g in graphs)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_counts_match_labelled_brute_force(n):
    assert labeled_connected_classes(n) == COUNTS[n]


def test_order_7_matches_networkx_atlas():
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 7 and nx.is_connected(h)]
    assert len(atlas) == 853
    ours = {canonical_form(parse_graph6(nx.to_graph6_bytes(h, header=False).strip())) for h in atlas}
    assert ours == {canonical_form(g) for g in enumerate_connected(7)}


@pytest.mark.slow
def test_order_8_count():
    assert sum(1 for _ in enumerate_connected(8)) == 11117


def test_unsupported_orders():
    for n in (0, 9):
        with pytest.raises(GraphError, match="corpus"):
            enumerate_connected(n)


def test_ingest_examples(tmp_path):
    f = tmp_path / "three.g6"
    f.write_text("A_\nBw\nCF\n")
    res = ingest_corpus(f)
    assert len(res.graphs) == 3 and not res.diagnostics
    f.write_text("A_\nC!x\n\nBw\n")
    res = ingest_corpus(f)
    assert len(res.graphs) == 2
    assert [lineno for lineno, _ in res.diagnostics] == [2]
    assert res.manifest is None and not res.exhaustive
    f.write_text("A_\nC?\n")
    res = ingest_corpus(f, connected_only=True)
    assert len(res.graphs) == 1 and len(res.diagnostics) == 1


def test_corpus_round_trip(tmp_path):
    f = tmp_path / "n5.g6"
    graphs = list(enumerate_connected(5))
    manifest = write_corpus(f, graphs, exhaustive=True)
    assert manifest["orders"] == {"5": 21}
    assert json.loads(manifest_path(f).read_text())["exhaustive"] is True
    res = ingest_corpus(f)
    assert res.exhaustive
    assert [canonical_form(g) for g in res.graphs] == [canonical_form(g) for g in graphs]


def test_graph6_round_trip_on_small_corpus():
    for n in range(1, 7):
        for g in enumerate_connected(n):
            s = g.graph6
            assert parse_graph6(s) == g
            assert parse_graph6(s).graph6 == s
            assert s.encode() == nx.to_graph6_bytes(to_nx(g), header=False).strip()
