"""Acceptance criteria, one function per criterion.

Each criterion is a list of named items; an item returns ``(ok, detail)``.
Run under pytest (one test per item) or directly with
``python tests/test_acceptance.py`` for one line per criterion.
"""

import sys
import time
from functools import lru_cache
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import brute_params, labeled_connected_classes  # noqa: E402
from partdim import kernels  # noqa: E402
from partdim.constructions import fusion_partition, fusion_valid, rd_augment  # noqa: E402
from partdim.enumeration import canonical_form, enumerate_connected  # noqa: E402
from partdim.families import caterpillar, complete_split, lambda_family, split_plus_leaf, star  # noqa: E402
from partdim.graph import complement, complete, cycle, distances, emit_graph6, join, parse_graph6, path  # noqa: E402
from partdim.partition import Partition, is_dominating, is_rd  # noqa: E402
from partdim.solvers import (  # noqa: E402
    compute_all,
    counting_bound,
    dominating_partition_dimension,
    partition_dimension,
    partition_domination_number,
    rd_number,
)

PARAMS = ("n", "diam", "beta_p", "eta_p", "beta", "gamma", "eta", "gamma_p")


@lru_cache(maxsize=None)
def values(n: int) -> tuple:
    """(graph, beta_p, eta_p, diam) for every connected class of order n."""
    out = []
    for g in enumerate_connected(n):
        dm = distances(g)
        out.append((g, partition_dimension(g, dm)[0], dominating_partition_dimension(g, dm)[0], dm.diameter))
    return tuple(out)


def forms(graphs) -> set:
    return {canonical_form(g) for g in graphs}


def first(items, limit=3) -> str:
    items = list(items)
    head = ", ".join(str(x) for x in items[:limit])
    return head + (f" (+{len(items) - limit} more)" if len(items) > limit else "")


# --- 1. sandwich -------------------------------------------------------------


def c1_sandwich():
    start = time.perf_counter()
    bad, total = [], 0
    for n in range(3, 8):
        for g, bp, ep, _ in values(n):
            total += 1
            if not bp <= ep <= bp + 1:
                bad.append(g.graph6)
    elapsed = time.perf_counter() - start
    ok = not bad and len(values(7)) == 853 and elapsed < 300
    return ok, f"{total} graphs, {len(bad)} violations{' ' + first(bad) if bad else ''}, 853 at n=7, {elapsed:.1f}s"


# --- 2. eta_p = n and n-1 at n = 7 ---------------------------------------------


def c2_top_values():
    rows = values(7)
    top = forms(g for g, _, ep, _ in rows if ep == 7)
    next_ = forms(g for g, _, ep, _ in rows if ep == 6)
    ok = top == forms([complete(7), star(7)]) and next_ == forms([complete_split(7), split_plus_leaf(7)])
    return ok, f"eta_p=7: {len(top)} classes, eta_p=6: {len(next_)} classes"


# --- 3. eta_p = n-2 -----------------------------------------------------------


def _lambda_match(n):
    got = forms(g for g, _, ep, _ in values(n) if ep == n - 2)
    want = forms(lambda_family(n))
    return got == want, f"n={n}: {len(got)} classes with eta_p=n-2, family has {len(want)}, symmetric difference {len(got ^ want)}"


def c3_lambda_7():
    ok, detail = _lambda_match(7)
    distinct = len(forms(lambda_family(7))) == 17
    return ok and distinct, detail + f", members pairwise non-isomorphic: {distinct}"


def c3_lambda_8():
    return _lambda_match(8)


# --- 4. beta_p = n-2 ----------------------------------------------------------


def c4_beta_p():
    fam = lambda_family(7)
    got = forms(g for g, bp, _, _ in values(7) if bp == 5)
    want = forms(g for i, g in enumerate(fam, 1) if i not in (12, 17))
    low = [partition_dimension(fam[i - 1])[0] for i in (12, 17)]
    ok = got == want and len(want) == 15 and low == [4, 4]
    return ok, f"beta_p=5: {len(got)} classes vs 15 family members, beta_p(H12), beta_p(H17) = {low}"


# --- 5. rd_augment ------------------------------------------------------------


def c5_augment():
    checked, bad = 0, []
    for n in range(3, 8):
        for g, bp, _, _ in values(n):
            dm = distances(g)
            for assign in kernels.find_partitions(dm.flat, g.adj, n, bp, max_results=-1):
                p = Partition(assign)
                out = rd_augment(g, p, dm)
                checked += 1
                if not (is_rd(dm, out) and out.k <= bp + 1 and (out.k == bp) == is_dominating(dm, p)):
                    bad.append((g.graph6, str(p)))
    return not bad, f"{checked} minimum resolving partitions, {len(bad)} failures{' ' + first(bad) if bad else ''}"


# --- 6. fusion ----------------------------------------------------------------


def c6_fusion():
    checked, bad = 0, []
    for n in range(3, 9):
        for g in enumerate_connected(n):
            dm = distances(g)
            ep = None
            for u in range(n):
                for k in range(2, (n - 1) // 2 + 1):
                    if not fusion_valid(g, u, k):
                        continue
                    checked += 1
                    p = fusion_partition(g, u, k, dm)
                    ep = ep or dominating_partition_dimension(g, dm)[0]
                    if not (p.k == n - k and is_rd(dm, p) and ep <= n - k):
                        bad.append((g.graph6, u, k))
    return checked > 0 and not bad, f"{checked} (graph, u, k) triples up to n=8, {len(bad)} failures{' ' + first(bad) if bad else ''}"


# --- 7. small families --------------------------------------------------------


def c7_paths_cycles():
    bad = [
        f"{name}{n}"
        for n in range(3, 13)
        for name, g in (("P", path(n)), ("C", cycle(n)))
        if dominating_partition_dimension(g)[0] != 3
    ]
    return not bad, f"eta_p = 3 for P_n, C_n, 3 <= n <= 12; exceptions: {bad or 'none'}"


def c7_gamma_p():
    graphs = [g for n in range(2, 8) for g in enumerate_connected(n)]
    bad = [g.graph6 for g in graphs if partition_domination_number(g) != 2]
    return not bad, f"gamma_p = 2 on {len(graphs)} graphs, exceptions: {first(bad) or 'none'}"


def c7_k2():
    v = dominating_partition_dimension(complete(2))[0]
    return v == 2, f"eta_p(K_2) = {v}"


def c7_c4():
    v = partition_dimension(cycle(4))[0]
    return v == 3, f"beta_p(C_4) = {v}"


def c7_c4_join_k1():
    g = join(cycle(4), complete(1))
    v = partition_dimension(g)[0]
    oracle = brute_params(g)["beta_p"]
    return v == 4, f"beta_p(C_4 join K_1) = {v} (unpruned oracle {oracle}), expected 4"


# --- 8. caterpillars ----------------------------------------------------------


def c8_caterpillar():
    bad = []
    for h in range(1, 4):
        for k in range(1, 4):
            g = caterpillar(h, k)
            dm = distances(g)
            ep, eta = dominating_partition_dimension(g, dm)[0], rd_number(g, dm)[0]
            if (ep, eta) != (h + 2, h + k):
                bad.append((h, k, ep, eta))
    return not bad, f"9 caterpillars, mismatches: {bad or 'none'}"


# --- 9. complement sums -------------------------------------------------------


@lru_cache(maxsize=None)
def doubly_connected_sums(n: int) -> tuple:
    """(graph, beta_p sum, eta_p sum) for doubly-connected graphs of order n."""
    rows = values(n)
    by_form = {canonical_form(g): (bp, ep) for g, bp, ep, _ in rows}
    out = []
    for g, bp, ep, _ in rows:
        other = by_form.get(canonical_form(complement(g)))
        if other is not None:
            out.append((g, bp + other[0], ep + other[1]))
    return tuple(out)


def _upper(n, col, bound):
    return forms(row[0] for row in doubly_connected_sums(n) if row[col] == bound)


def c9_eta_bounds():
    sums = [r[2] for r in doubly_connected_sums(7)]
    return 6 <= min(sums) and max(sums) <= 10, f"{len(sums)} doubly-connected graphs, eta sums in [{min(sums)}, {max(sums)}]"


def c9_eta_upper_class():
    fam = lambda_family(7)
    got = _upper(7, 2, 10)
    return got == forms([fam[14], fam[16]]), f"{len(got)} classes reach 10, expected H15, H17"


def c9_beta_bounds():
    sums = [r[1] for r in doubly_connected_sums(7)]
    return 4 <= min(sums) and max(sums) <= 9, f"beta sums in [{min(sums)}, {max(sums)}]"


def c9_beta_upper_class():
    fam = lambda_family(7)
    got = _upper(7, 1, 9)
    want = forms([fam[14], fam[15], fam[16]])
    extra = [g.graph6 for g, s, _ in doubly_connected_sums(7) if s == 9 and canonical_form(g) not in want]
    return got == want, f"{len(got)} classes reach 9, expected H15, H16, H17; others: {extra or 'none'}"


def c9_p4():
    g = path(4)
    c = complement(g)
    b = partition_dimension(g)[0] + partition_dimension(c)[0]
    e = dominating_partition_dimension(g)[0] + dominating_partition_dimension(c)[0]
    return (b, e) == (4, 6), f"P_4: beta sum {b}, eta sum {e}"


def c9_c5():
    g = cycle(5)
    e = dominating_partition_dimension(g)[0] + dominating_partition_dimension(complement(g))[0]
    return e == 6, f"C_5: eta sum {e}"


# --- 10. counting bound -------------------------------------------------------


def c10_counting():
    bad, total = [], 0
    for n in range(2, 8):
        for g, _, ep, d in values(n):
            total += 1
            if n > counting_bound(ep, d):
                bad.append(g.graph6)
    return not bad, f"{total} graphs, {len(bad)} violations{' ' + first(bad) if bad else ''}"


# --- 11. oracle equivalence ---------------------------------------------------


def c11_oracle():
    graphs = [g for n in range(2, 7) for g in enumerate_connected(n)]
    bad = []
    for g in graphs:
        r = compute_all(g)
        if {p: getattr(r, p) for p in PARAMS} != brute_params(g):
            bad.append(g.graph6)
    return not bad, f"{len(graphs)} graphs of order 2..6, {len(bad)} mismatches{' ' + first(bad) if bad else ''}"


# --- 12. enumeration ----------------------------------------------------------


def c12_counts():
    got = {n: sum(1 for _ in enumerate_connected(n)) for n in (4, 5, 6)}
    want = {n: labeled_connected_classes(n) for n in (4, 5, 6)}
    return got == want == {4: 6, 5: 21, 6: 112}, f"enumerated {got}, labelled oracle {want}"


def c12_graph6():
    bad = []
    total = 0
    for n in range(1, 7):
        for g in enumerate_connected(n):
            total += 1
            text = emit_graph6(g)
            back = parse_graph6(text)
            h = nx.Graph()
            h.add_nodes_from(range(n))
            h.add_edges_from(g.edges())
            ref = nx.to_graph6_bytes(h, header=False).decode().strip()
            if back != g or emit_graph6(back) != text or text != ref:
                bad.append(text)
    return not bad, f"{total} graphs round-tripped, {len(bad)} mismatches"


CRITERIA = {
    1: [("sandwich", c1_sandwich)],
    2: [("top_values", c2_top_values)],
    3: [("lambda_7", c3_lambda_7), ("lambda_8", c3_lambda_8)],
    4: [("beta_p", c4_beta_p)],
    5: [("augment", c5_augment)],
    6: [("fusion", c6_fusion)],
    7: [
        ("paths_cycles", c7_paths_cycles),
        ("gamma_p", c7_gamma_p),
        ("k2", c7_k2),
        ("c4", c7_c4),
        ("c4_join_k1", c7_c4_join_k1),
    ],
    8: [("caterpillar", c8_caterpillar)],
    9: [
        ("eta_bounds", c9_eta_bounds),
        ("eta_upper_class", c9_eta_upper_class),
        ("beta_bounds", c9_beta_bounds),
        ("beta_upper_class", c9_beta_upper_class),
        ("p4_lower", c9_p4),
        ("c5_lower", c9_c5),
    ],
    10: [("counting", c10_counting)],
    11: [("oracle", c11_oracle)],
    12: [("counts", c12_counts), ("graph6", c12_graph6)],
}

RESULTS: dict[tuple[int, str], tuple[bool, str]] = {}


def evaluate(number: int, name: str) -> tuple[bool, str]:
    key = (number, name)
    if key not in RESULTS:
        fn = dict(CRITERIA[number])[name]
        try:
            RESULTS[key] = fn()
        except Exception as exc:  # a crash is a failure, not an error to hide
            RESULTS[key] = (False, f"{type(exc).__name__}: {exc}")
    return RESULTS[key]


def criterion_lines(results=None) -> list[str]:
    results = RESULTS if results is None else results
    lines = []
    for number, items in CRITERIA.items():
        got = [(name, results[(number, name)]) for name, _ in items if (number, name) in results]
        if not got:
            continue
        ok = len(got) == len(items) and all(r[0] for _, r in got)
        detail = "; ".join(f"{name} {'ok' if r[0] else 'FAILED'}: {r[1]}" for name, r in got)
        lines.append(f"CRITERION {number} {'PASS' if ok else 'FAIL'}: {detail}")
    return lines


@pytest.mark.parametrize(
    "number,name",
    [(n, name) for n, items in CRITERIA.items() for name, _ in items],
    ids=[f"criterion{n}-{name}" for n, items in CRITERIA.items() for name, _ in items],
)
def test_criterion(number, name):
    ok, detail = evaluate(number, name)
    assert ok, detail


if __name__ == "__main__":
    for number, items in CRITERIA.items():
        for name, _ in items:
            evaluate(number, name)
        print(criterion_lines()[-1], flush=True)
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
