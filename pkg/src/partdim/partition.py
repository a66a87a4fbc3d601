"""Vertex partitions in restricted-growth form and the predicates on them.

A partition of ``{0..n-1}`` into ``k`` parts is stored as its assignment
string ``a`` with ``a[v]`` the part of ``v``. Parts are numbered in order of
first appearance, so ``a[0] == 0`` and each ``a[v] <= max(a[:v]) + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .graph import DistanceMatrix, bits, to_mask


class PartitionError(ValueError):
    pass


def canonical_assignment(assign: Sequence[int]) -> tuple[int, ...]:
    """Relabel part indices by first occurrence."""
    relabel: dict[int, int] = {}
    return tuple(relabel.setdefault(a, len(relabel)) for a in assign)


@dataclass(frozen=True)
class Partition:
    assign: tuple[int, ...]

    def __post_init__(self):
        top = -1
        for v, a in enumerate(self.assign):
            if a < 0 or a > top + 1:
                raise PartitionError(f"assignment is not in restricted-growth form at vertex {v}")
            top = max(top, a)
        if not self.assign:
            raise PartitionError("empty partition")

    @classmethod
    def from_assignment(cls, assign: Sequence[int]) -> Partition:
        return cls(canonical_assignment(assign))

    @classmethod
    def from_parts(cls, parts: Iterable[Iterable[int] | int], n: int) -> Partition:
        assign = [-1] * n
        for i, part in enumerate(parts):
            members = list(bits(part)) if isinstance(part, int) else list(part)
            if not members:
                raise PartitionError(f"part {i} is empty")
            for v in members:
                if not 0 <= v < n:
                    raise PartitionError(f"vertex {v} out of range for order {n}")
                if assign[v] != -1:
                    raise PartitionError(f"vertex {v} appears in two parts")
                assign[v] = i
        missing = [v for v, a in enumerate(assign) if a == -1]
        if missing:
            raise PartitionError(f"vertices {missing} are not covered")
        return cls.from_assignment(assign)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> Partition:
        """Parse ``"0|1,3|2,4"``; ``n`` defaults to one more than the largest vertex."""
        parts = []
        for chunk in text.strip().split("|"):
            chunk = chunk.strip()
            if not chunk:
                raise PartitionError(f"empty part in {text!r}")
            try:
                parts.append([int(x) for x in chunk.split(",")])
            except ValueError:
                raise PartitionError(f"bad vertex list {chunk!r}") from None
        if n is None:
            n = max(max(p) for p in parts) + 1
        return cls.from_parts(parts, n)

    @property
    def n(self) -> int:
        return len(self.assign)

    @cached_property
    def k(self) -> int:
        return max(self.assign) + 1

    def __len__(self) -> int:
        return self.k

    @cached_property
    def parts(self) -> tuple[int, ...]:
        masks = [0] * self.k
        for v, a in enumerate(self.assign):
            masks[a] |= 1 << v
        return tuple(masks)

    def blocks(self) -> list[list[int]]:
        return [list(bits(m)) for m in self.parts]

    def part_of(self, v: int) -> int:
        return self.parts[self.assign[v]]

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks())


# --------------------------------------------------------------------------
# predicates


def dist_to_part(dm: DistanceMatrix, u: int, part: Iterable[int] | int) -> int:
    mask = to_mask(part)
    if not mask:
        raise PartitionError("distance to an empty set")
    row = dm.d[u]
    return min(row[w] for w in bits(mask))


def distance_vector(dm: DistanceMatrix, u: int, p: Partition) -> tuple[int, ...]:
    row = dm.d[u]
    out = [dm.n] * p.k
    for w, a in enumerate(p.assign):
        if row[w] < out[a]:
            out[a] = row[w]
    return tuple(out)


def is_resolving(dm: DistanceMatrix, p: Partition) -> bool:
    # vertices of different parts already differ in their 0 entry
    for part in p.parts:
        if part & (part - 1) == 0:
            continue
        seen = set()
        for u in bits(part):
            vec = distance_vector(dm, u, p)
            if vec in seen:
                return False
            seen.add(vec)
    return True


def is_dominating(dm: DistanceMatrix, p: Partition) -> bool:
    """Every vertex has a neighbour outside its own part."""
    for u, a in enumerate(p.assign):
        row = dm.d[u]
        if not any(row[w] == 1 and p.assign[w] != a for w in range(p.n)):
            return False
    return True


def is_rd(dm: DistanceMatrix, p: Partition) -> bool:
    return is_dominating(dm, p) and is_resolving(dm, p)


# --------------------------------------------------------------------------
# restricted-growth enumeration


@lru_cache(maxsize=None)
def completions(remaining: int, used: int, k: int) -> int:
    """Ways to fill ``remaining`` slots after ``used`` parts so exactly ``k`` appear."""
    if used > k:
        return 0
    if remaining == 0:
        return int(used == k)
    total = used * completions(remaining - 1, used, k)
    if used < k:
        total += completions(remaining - 1, used + 1, k)
    return total


def stirling2(n: int, k: int) -> int:
    if n == 0:
        return int(k == 0)
    return completions(n - 1, 1, k) if k >= 1 else 0


def _check_range(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise PartitionError(f"need 1 <= k <= n, got n={n}, k={k}")


def first_rgs(n: int, k: int) -> list[int]:
    _check_range(n, k)
    return [0] * (n - k + 1) + list(range(1, k))


def next_rgs(a: list[int], k: int) -> bool:
    """Advance ``a`` in place to its lexicographic successor with exactly ``k``
    parts. Returns False (leaving ``a`` unspecified) when ``a`` was last."""
    n = len(a)
    prefix_max = [0] * n
    m = -1
    for i, x in enumerate(a):
        m = max(m, x)
        prefix_max[i] = m
    for i in range(n - 1, 0, -1):
        before = prefix_max[i - 1]
        x = a[i] + 1
        if x > before + 1 or x >= k:
            continue
        top = max(before, x)
        tail = n - 1 - i
        if tail < k - 1 - top:
            continue
        a[i] = x
        fresh = k - 1 - top
        for j in range(i + 1, n - fresh):
            a[j] = 0
        for t, j in enumerate(range(n - fresh, n)):
            a[j] = top + 1 + t
        return True
    return False


def rank_rgs(a: Sequence[int], k: int) -> int:
    """Position of ``a`` in the stream of k-part assignments of its length."""
    n = len(a)
    r = 0
    used = 1
    for i in range(1, n):
        for smaller in range(a[i]):
            r += completions(n - 1 - i, max(used, smaller + 1), k)
        used = max(used, a[i] + 1)
    return r


def unrank_rgs(n: int, k: int, index: int) -> list[int]:
    _check_range(n, k)
    if not 0 <= index < stirling2(n, k):
        raise PartitionError(f"index {index} out of range for S({n},{k})")
    a = [0] * n
    used = 1
    for i in range(1, n):
        for x in range(min(used, k - 1) + 1):
            c = completions(n - 1 - i, max(used, x + 1), k)
            if index < c:
                a[i] = x
                break
            index -= c
        used = max(used, a[i] + 1)
    return a


def rgs_stream(n: int, k: int, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, ...]]:
    """Assignment tuples for indices ``start <= i < stop`` of the k-part stream."""
    _check_range(n, k)
    total = stirling2(n, k)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    a = unrank_rgs(n, k, start)
    for _ in range(start, stop):
        yield tuple(a)
        if not next_rgs(a, k):
            return


def partitions_into(n: int, k: int, start: int = 0, stop: int | None = None) -> Iterator[Partition]:
    """Every partition of ``{0..n-1}`` into exactly ``k`` parts, once each,
    in lexicographic restricted-growth order. ``start``/``stop`` slice the
    stream by index, so disjoint ranges can be handed to separate workers."""
    for a in rgs_stream(n, k, start, stop):
        yield Partition(a)
