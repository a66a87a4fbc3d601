"""Named executable checks over a corpus of connected graphs.

Each check returns a ``CheckReport``; a check fails exactly when it found a
counterexample. Characterizations are compared as sets of canonical forms.
When the corpus is not known to be exhaustive only the direction
"graph with the value -> family member" can be refuted, and the report
says so in its notes.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .constructions import (
    ConstructionError,
    InvariantViolation,
    fusion_case,
    fusion_partition,
    fusion_valid,
    path_cycle_partition,
)
from .enumeration import CANON_MAX_ORDER, canonical_form, enumerate_connected, ingest_corpus
from .families import caterpillar, complete_split, lambda_family, split_plus_leaf, star, wheel
from .graph import CLIQUE, INDEPENDENT, LEAVES, Graph, GraphError, complement, complete, cycle, distances, is_connected, path, twin_sets
from .partition import is_rd
from .solvers import (
    ParamRecord,
    compute_all,
    counting_bound,
    dominating_partition_dimension,
    partition_dimension,
    rd_number,
)


class CheckError(KeyError):
    pass


@dataclass
class Corpus:
    graphs: list[Graph]
    exhaustive: bool = False
    source: str = "graphs"

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> Corpus:
        orders = sorted(set(orders))
        graphs = [g for n in orders for g in enumerate_connected(n)]
        label = f"enumerated orders {orders[0]}..{orders[-1]}" if orders else "empty"
        return cls(graphs, exhaustive=True, source=label)

    @classmethod
    def from_file(cls, path, exhaustive: bool | None = None) -> Corpus:
        res = ingest_corpus(path)
        if res.diagnostics:
            lineno, msg = res.diagnostics[0]
            raise GraphError(f"{path}:{lineno}: {msg}")
        for g in res.graphs:
            if not is_connected(g):
                raise GraphError(f"{path}: graph {g.graph6} is disconnected")
        flag = res.exhaustive if exhaustive is None else exhaustive
        return cls(res.graphs, exhaustive=flag, source=str(path))

    def orders(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for g in self.graphs:
            out[g.n] = out.get(g.n, 0) + 1
        return dict(sorted(out.items()))

    def descriptor(self) -> dict:
        return {
            "source": self.source,
            "orders": {str(n): c for n, c in self.orders().items()},
            "exhaustive": self.exhaustive,
        }


class RecordStore:
    """Parameter records by graph6 string, computed on first use."""

    def __init__(self, records: Mapping[str, ParamRecord] | None = None):
        self._records: dict[str, ParamRecord] = dict(records or {})

    def __call__(self, g: Graph) -> ParamRecord:
        key = g.graph6
        rec = self._records.get(key)
        if rec is None:
            rec = self._records[key] = compute_all(g)
        return rec

    def __len__(self) -> int:
        return len(self._records)


@dataclass
class CheckReport:
    id: str
    code: str
    corpus: dict
    status: str = "pass"
    counterexamples: list[tuple[str, str]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    checked: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def vacuous(self) -> bool:
        return self.checked == 0

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "id": self.id,
            "code": self.code,
            "corpus": self.corpus,
            "status": self.status,
            "vacuous": self.vacuous,
            "checked": self.checked,
            "counterexamples": [{"graph6": g6, "details": d} for g6, d in self.counterexamples],
            "notes": self.notes,
        }
        if timing:
            out["elapsed_s"] = round(self.elapsed, 4)
        return out


class _Ctx:
    def __init__(self, corpus: Corpus, records: RecordStore, report: CheckReport):
        self.corpus = corpus
        self.rec = records
        self.report = report

    def graphs(self, min_order: int = 2) -> list[Graph]:
        return [g for g in self.corpus.graphs if g.n >= min_order]

    def by_order(self, min_order: int = 2) -> dict[int, list[Graph]]:
        out: dict[int, list[Graph]] = {}
        for g in self.graphs(min_order):
            out.setdefault(g.n, []).append(g)
        return dict(sorted(out.items()))

    def fail(self, g6: str, details: str) -> None:
        self.report.counterexamples.append((g6, details))

    def note(self, text: str) -> None:
        self.report.notes.append(text)

    def tick(self, count: int = 1) -> None:
        self.report.checked += count

    def each(self, min_order: int, test: Callable[[Graph, ParamRecord], str | None]) -> None:
        for g in self.graphs(min_order):
            self.tick()
            problem = test(g, self.rec(g))
            if problem:
                self.fail(g.graph6, problem)


# --------------------------------------------------------------------------
# structural membership tests usable at any order


def _is_path(g: Graph) -> bool:
    return is_connected(g) and g.size == g.n - 1 and all(g.degree(v) <= 2 for v in range(g.n))


def _is_cycle(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def _is_complete(g: Graph) -> bool:
    return g.size == g.n * (g.n - 1) // 2


def _family_lookup(members: list[tuple[str, Graph]]) -> dict[bytes, str]:
    return {canonical_form(f): label for label, f in members}


def _characterize(
    ctx: _Ctx,
    graphs_by_order: Mapping[int, list[Graph]],
    has_value: Callable[[Graph], bool],
    family: Callable[[int], list[tuple[str, Graph]]],
    value_text: str,
) -> None:
    """Per graph: value holds <=> graph is a family member. With an
    exhaustive corpus also: every family member occurs."""
    for n, graphs in graphs_by_order.items():
        if n > CANON_MAX_ORDER:
            ctx.note(f"order {n}: above canonical-form limit, skipped")
            continue
        lookup = _family_lookup(family(n))
        matched: dict[bytes, str] = {}
        for g in graphs:
            ctx.tick()
            key = canonical_form(g)
            label = lookup.get(key)
            if label is not None:
                matched[key] = label
            holds = has_value(g)
            if holds and label is None:
                ctx.fail(g.graph6, f"{value_text} but not in the family")
            elif label is not None and not holds:
                ctx.fail(g.graph6, f"family member {label} lacks {value_text}")
        labels = [lookup[k] for k in lookup if k in matched]
        ctx.note(f"order {n}: matched {len(matched)}/{len(lookup)} family classes: {', '.join(labels) or '-'}")
        if ctx.corpus.exhaustive:
            for key, label in lookup.items():
                if key not in matched:
                    ctx.fail(key.decode(), f"family member {label} of order {n} missing from an exhaustive corpus")
        else:
            ctx.note(f"order {n}: corpus not exhaustive, completeness direction not checked")


# --------------------------------------------------------------------------
# the checks


def _c1(ctx: _Ctx) -> None:
    ctx.each(2, lambda g, r: None if r.beta_p <= r.beta + 1 else f"beta_p={r.beta_p} > beta+1={r.beta + 1}")


def _c2(ctx: _Ctx) -> None:
    for n, graphs in ctx.by_order().items():
        sharp = []
        for g in graphs:
            ctx.tick()
            r = ctx.rec(g)
            bound = n - r.diam + 1
            if r.beta_p > bound:
                ctx.fail(g.graph6, f"beta_p={r.beta_p} > n-diam+1={bound}")
            elif r.beta_p == bound:
                sharp.append(g.graph6)
        ctx.note(f"order {n}: {len(sharp)} graph(s) attain n-diam+1")
        if not sharp and ctx.corpus.exhaustive:
            ctx.fail(f"order:{n}", "no graph attains the bound n-diam+1")


def _c3(ctx: _Ctx) -> None:
    for g in ctx.graphs():
        ctx.tick()
        r = ctx.rec(g)
        if (r.beta_p == 2) != _is_path(g):
            ctx.fail(g.graph6, f"beta_p={r.beta_p}, path={_is_path(g)}")


def _c4(ctx: _Ctx) -> None:
    for g in ctx.graphs():
        ctx.tick()
        r = ctx.rec(g)
        if (r.beta_p == g.n) != _is_complete(g):
            ctx.fail(g.graph6, f"beta_p={r.beta_p}, complete={_is_complete(g)}")


def _beta_p_n_minus_1_family(n: int) -> list[tuple[str, Graph]]:
    return [("star", star(n)), ("complete_split", complete_split(n)), ("split_plus_leaf", split_plus_leaf(n))]


def _c5(ctx: _Ctx) -> None:
    orders = ctx.corpus.orders()
    # exceptions below the order threshold
    if 4 in orders:
        ctx.tick()
        c4 = cycle(4)
        bp = partition_dimension(c4)[0]
        if bp != 3:
            ctx.fail(c4.graph6, f"C_4: beta_p={bp}, expected 3")
    if 5 in orders:
        ctx.tick()
        w = wheel(5)
        bp = partition_dimension(w)[0]
        if bp != 4:
            ctx.fail(w.graph6, f"C_4 join K_1: beta_p={bp}, expected 4 = n-1")
        hits = [g.graph6 for g in ctx.corpus.graphs if g.n == 5 and ctx.rec(g).beta_p == 4]
        ctx.note(f"order 5: beta_p = 4 for {', '.join(hits) or 'none'}")
    _characterize(
        ctx,
        ctx.by_order(6),
        lambda g: ctx.rec(g).beta_p == g.n - 1,
        _beta_p_n_minus_1_family,
        "beta_p = n-1",
    )


def _c6(ctx: _Ctx) -> None:
    ctx.each(2, lambda g, r: None if r.gamma_p == 2 else f"gamma_p={r.gamma_p}")


def _c7(ctx: _Ctx) -> None:
    def test(g: Graph, r: ParamRecord) -> str | None:
        is_k2 = g.n == 2
        if (r.eta_p == 2) != is_k2:
            return f"eta_p={r.eta_p}, K_2={is_k2}"
        return None

    ctx.each(2, test)


def _c8(ctx: _Ctx) -> None:
    for n in ctx.corpus.orders():
        if n < 3:
            continue
        for name, g, is_cycle in (("P", path(n), False), ("C", cycle(n), True)):
            ctx.tick()
            ep = dominating_partition_dimension(g)[0]
            if ep != 3:
                ctx.fail(g.graph6, f"{name}_{n}: eta_p={ep}")
            p = path_cycle_partition(n, cycle=is_cycle)
            if p.k != 3 or not is_rd(distances(g), p):
                ctx.fail(g.graph6, f"{name}_{n}: explicit partition {p} is not a 3-part RD-partition")


def _c9(ctx: _Ctx) -> None:
    ctx.each(2, lambda g, r: None if r.eta_p <= r.eta + 1 else f"eta_p={r.eta_p} > eta+1={r.eta + 1}")


def _c10(ctx: _Ctx) -> None:
    def test(g: Graph, r: ParamRecord) -> str | None:
        if max(r.gamma, r.beta) <= r.eta <= r.gamma + r.beta:
            return None
        return f"eta={r.eta}, gamma={r.gamma}, beta={r.beta}"

    ctx.each(2, test)


def _c11(ctx: _Ctx) -> None:
    def test(g: Graph, r: ParamRecord) -> str | None:
        problems = []
        for ts in twin_sets(g).sets:
            if ts.vertices == g.full:
                continue
            k = ts.size
            if ts.kind in (INDEPENDENT, LEAVES) and r.beta_p < k:
                problems.append(f"independent twin set of size {k} but beta_p={r.beta_p}")
            if ts.kind == CLIQUE and r.beta_p < k + 1:
                problems.append(f"clique twin set of size {k} but beta_p={r.beta_p}")
            if ts.kind == LEAVES and r.eta_p < k + 1:
                problems.append(f"{k} twin leaves but eta_p={r.eta_p}")
        return "; ".join(problems) or None

    ctx.each(3, test)


def _c12(ctx: _Ctx) -> None:
    ctx.note("corpus-independent: caterpillar(h,k) for 1 <= h,k <= 3")
    for h in range(1, 4):
        for k in range(1, 4):
            ctx.tick()
            g = caterpillar(h, k)
            dm = distances(g)
            ep = dominating_partition_dimension(g, dm)[0]
            eta = rd_number(g, dm)[0]
            if ep != h + 2 or eta != h + k:
                ctx.fail(g.graph6, f"caterpillar({h},{k}): eta_p={ep} (want {h + 2}), eta={eta} (want {h + k})")


def _c13(ctx: _Ctx) -> None:
    def test(g: Graph, r: ParamRecord) -> str | None:
        return None if r.beta_p <= r.eta_p <= r.beta_p + 1 else f"beta_p={r.beta_p}, eta_p={r.eta_p}"

    ctx.each(3, test)


def _c14(ctx: _Ctx) -> None:
    def test(g: Graph, r: ParamRecord) -> str | None:
        bound = r.n - r.diam + 2
        return None if r.eta_p <= bound else f"eta_p={r.eta_p} > n-diam+2={bound}"

    ctx.each(3, test)


def _c15(ctx: _Ctx) -> None:
    def test(g: Graph, r: ParamRecord) -> str | None:
        bound = counting_bound(r.eta_p, r.diam)
        return None if r.n <= bound else f"n={r.n} > k(d^(k-1)-(d-1)^(k-1))={bound} with k={r.eta_p}, d={r.diam}"

    ctx.each(3, test)


def _c16(ctx: _Ctx) -> None:
    for g in ctx.graphs(5):
        r = None
        dm = None
        for u in range(g.n):
            for k in range(2, (g.n - 1) // 2 + 1):
                if not fusion_valid(g, u, k):
                    continue
                ctx.tick()
                r = r or ctx.rec(g)
                dm = dm or distances(g)
                try:
                    p = fusion_partition(g, u, k, dm)
                except (InvariantViolation, ConstructionError) as exc:
                    ctx.fail(g.graph6, f"u={u}, k={k}: {exc}")
                    continue
                if p.k != g.n - k or not is_rd(dm, p):
                    tag = fusion_case(g, u, k, dm).tag
                    ctx.fail(g.graph6, f"u={u}, k={k} ({tag}): bad partition {p}")
                if r.eta_p > g.n - k:
                    ctx.fail(g.graph6, f"u={u}, k={k}: eta_p={r.eta_p} > n-k={g.n - k}")


def _c17a(ctx: _Ctx) -> None:
    def test(g: Graph, r: ParamRecord) -> str | None:
        if r.diam >= 3 and r.eta_p > r.n - 2:
            return f"diam={r.diam}, eta_p={r.eta_p} > n-2"
        return None

    ctx.each(5, test)


def _c17b(ctx: _Ctx) -> None:
    def test(g: Graph, r: ParamRecord) -> str | None:
        if r.diam >= 4 and r.eta_p > r.n - 3:
            return f"diam={r.diam}, eta_p={r.eta_p} > n-3"
        return None

    ctx.each(7, test)


def _c18a(ctx: _Ctx) -> None:
    _characterize(
        ctx,
        ctx.by_order(6),
        lambda g: ctx.rec(g).eta_p == g.n,
        lambda n: [("complete", complete(n)), ("star", star(n))],
        "eta_p = n",
    )


def _c18b(ctx: _Ctx) -> None:
    _characterize(
        ctx,
        ctx.by_order(6),
        lambda g: ctx.rec(g).eta_p == g.n - 1,
        lambda n: [("complete_split", complete_split(n)), ("split_plus_leaf", split_plus_leaf(n))],
        "eta_p = n-1",
    )


def _lambda_labeled(n: int, skip: tuple[int, ...] = ()) -> list[tuple[str, Graph]]:
    return [(f"H{i}", g) for i, g in enumerate(lambda_family(n), 1) if i not in skip]


def _c19(ctx: _Ctx) -> None:
    _characterize(ctx, ctx.by_order(7), lambda g: ctx.rec(g).eta_p == g.n - 2, _lambda_labeled, "eta_p = n-2")


def _c20(ctx: _Ctx) -> None:
    _characterize(
        ctx,
        ctx.by_order(7),
        lambda g: ctx.rec(g).beta_p == g.n - 2,
        lambda n: _lambda_labeled(n, skip=(12, 17)),
        "beta_p = n-2",
    )
    for n in ctx.by_order(7):
        for i, g in ((12, lambda_family(n)[11]), (17, lambda_family(n)[16])):
            ctx.tick()
            bp = ctx.rec(g).beta_p
            if bp != n - 3:
                ctx.fail(g.graph6, f"H{i}: beta_p={bp}, expected n-3={n - 3}")


def _doubly_connected(ctx: _Ctx) -> dict[int, list[Graph]]:
    out: dict[int, list[Graph]] = {}
    for n, graphs in ctx.by_order(3).items():
        keep = [g for g in graphs if is_connected(complement(g))]
        if keep:
            out[n] = keep
    return out


def _nordhaus_gaddum(
    ctx: _Ctx,
    param: str,
    low: int,
    high: Callable[[int], int],
    low_witnesses: dict[int, Graph],
    low_exact: bool,
    upper_family: Callable[[int], list[tuple[str, Graph]]],
) -> None:
    dc = _doubly_connected(ctx)
    total = {}
    for n, graphs in dc.items():
        at_low = []
        for g in graphs:
            ctx.tick()
            s = getattr(ctx.rec(g), param) + getattr(ctx.rec(complement(g)), param)
            total[g.graph6] = s
            if s < low:
                ctx.fail(g.graph6, f"sum {s} < {low}")
            if s > high(n):
                ctx.fail(g.graph6, f"sum {s} > {high(n)} at n={n}")
            if s == low:
                at_low.append(g)
        witness = low_witnesses.get(n)
        if witness is not None:
            ctx.tick()
            s = getattr(ctx.rec(witness), param) + getattr(ctx.rec(complement(witness)), param)
            if s != low:
                ctx.fail(witness.graph6, f"named witness has sum {s}, expected {low}")
        if low_exact:
            for g in at_low:
                if witness is None or canonical_form(g) != canonical_form(witness):
                    ctx.fail(g.graph6, f"sum {low} attained by a graph other than the named one")
        else:
            ctx.note(f"order {n}: sum {low} attained by {', '.join(g.graph6 for g in at_low) or 'none'}")
    _characterize(
        ctx,
        {n: gs for n, gs in dc.items() if n >= 7},
        lambda g: total[g.graph6] == high(g.n),
        upper_family,
        "upper-bound equality",
    )
    ctx.note(f"{sum(len(v) for v in dc.values())} doubly-connected graph(s)")


def _c21(ctx: _Ctx) -> None:
    _nordhaus_gaddum(
        ctx,
        "eta_p",
        6,
        lambda n: 2 * n - 4,
        {4: path(4), 5: cycle(5)},
        False,
        lambda n: [(f"H{i}", g) for i, g in enumerate(lambda_family(n), 1) if i in (15, 17)],
    )


def _c22(ctx: _Ctx) -> None:
    _nordhaus_gaddum(
        ctx,
        "beta_p",
        4,
        lambda n: 2 * n - 5,
        {4: path(4)},
        True,
        lambda n: [(f"H{i}", g) for i, g in enumerate(lambda_family(n), 1) if i in (15, 16, 17)],
    )


CHECKS: dict[str, tuple[str, Callable[[_Ctx], None]]] = {
    "beta_p_le_beta_plus_1": ("C1", _c1),
    "beta_p_le_n_minus_diam_plus_1": ("C2", _c2),
    "beta_p_2_iff_path": ("C3", _c3),
    "beta_p_n_iff_complete": ("C4", _c4),
    "beta_p_n_minus_1_charn": ("C5", _c5),
    "gamma_p_equals_2": ("C6", _c6),
    "eta_p_2_iff_K2": ("C7", _c7),
    "paths_cycles_eta_p_3": ("C8", _c8),
    "eta_p_le_eta_plus_1": ("C9", _c9),
    "eta_sandwich": ("C10", _c10),
    "twin_bounds": ("C11", _c11),
    "realization_eta_p_eta": ("C12", _c12),
    "etabeta_sandwich": ("C13", _c13),
    "eta_p_le_n_minus_diam_plus_2": ("C14", _c14),
    "counting_bound": ("C15", _c15),
    "fusion_bound": ("C16", _c16),
    "diam3_le_n_minus_2": ("C17", _c17a),
    "diam4_le_n_minus_3": ("C17", _c17b),
    "eta_p_n_charn": ("C18", _c18a),
    "eta_p_n_minus_1_charn": ("C18", _c18b),
    "lambda_charn": ("C19", _c19),
    "beta_p_n_minus_2_charn": ("C20", _c20),
    "ng_eta_p": ("C21", _c21),
    "ng_beta_p": ("C22", _c22),
}


def resolve_checks(names: Iterable[str]) -> list[str]:
    """Expand ``all`` and codes such as ``C17`` into check names, keeping
    catalog order and dropping duplicates."""
    wanted: set[str] = set()
    for raw in names:
        name = raw.strip()
        if not name:
            continue
        if name.lower() == "all":
            wanted.update(CHECKS)
            continue
        if name in CHECKS:
            wanted.add(name)
            continue
        hits = [k for k, (code, _) in CHECKS.items() if code.lower() == name.lower()]
        if not hits:
            raise CheckError(f"unknown check {name!r}")
        wanted.update(hits)
    return [k for k in CHECKS if k in wanted]


def run_check(check: str, corpus: Corpus, records: RecordStore | Mapping[str, ParamRecord] | None = None) -> CheckReport:
    name = check if check in CHECKS else _single(check)[0]
    code, fn = CHECKS[name]
    store = records if isinstance(records, RecordStore) else RecordStore(records)
    report = CheckReport(id=name, code=code, corpus=corpus.descriptor())
    start = time.perf_counter()
    fn(_Ctx(corpus, store, report))
    report.elapsed = time.perf_counter() - start
    report.status = "fail" if report.counterexamples else "pass"
    if report.vacuous:
        report.notes.append("vacuous: no applicable graphs in the corpus")
    return report


def _single(check: str) -> list[str]:
    names = resolve_checks([check])
    if len(names) != 1:
        raise CheckError(f"{check!r} names {len(names)} checks; run them by name")
    return names


def run_suite(
    corpus: Corpus,
    checks: Iterable[str] = ("all",),
    records: RecordStore | Mapping[str, ParamRecord] | None = None,
) -> list[CheckReport]:
    store = records if isinstance(records, RecordStore) else RecordStore(records)
    return [run_check(name, corpus, store) for name in resolve_checks(checks)]


def reports_json(reports: list[CheckReport], timing: bool = True) -> str:
    return json.dumps([r.to_dict(timing) for r in reports], indent=2) + "\n"


def summary_table(reports: list[CheckReport], timing: bool = True) -> str:
    rows = [("code", "check", "status", "checked", "counterexamples") + (("seconds",) if timing else ())]
    for r in reports:
        status = r.status + (" (vacuous)" if r.vacuous else "")
        row = (r.code, r.id, status, str(r.checked), str(len(r.counterexamples)))
        if timing:
            row += (f"{r.elapsed:.2f}",)
        rows.append(row)
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    failed = sum(not r.passed for r in reports)
    lines.append(f"{len(reports) - failed}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"
