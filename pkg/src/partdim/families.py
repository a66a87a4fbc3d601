"""Generators for the named graph families.

Vertices are numbered in the order the defining formula lists its pieces:
for ``A ∨ B`` or ``A + B`` the vertices of ``A`` come first. The
edge-deleted members of the order-n atlas (H11, H14..H17) start from the
formula graph and drop one explicit edge:

* H11 = (K_{n-4} + K_1) ∨ P_3 minus the edge from the K_1 (vertex n-4) to
  the last path vertex (n-1). The path is x1 - x2 - z on n-3, n-2, n-1.
* H14 = H11 minus the edge K_1 - x1, i.e. (n-4, n-3).
* H15 = H9 minus (n-3, n-1); H9 = (K_{n-3} + K_1) ∨ K̄_2.
* H16 = H10 minus (n-2, n-1); H10 = (K_{n-3} + K_2) ∨ K_1.
* H17 = H12 minus (n-2, n-1); H12 = (K̄_{n-3} + K_2) ∨ K_1.

The caterpillar(h, k) has spine v_1..v_k on 0..k-1, a pendant u_i on v_i at
k..2k-1, and h further pendants w_1..w_h on v_1 at 2k..2k+h-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    Graph,
    GraphError,
    complement,
    complete,
    cycle,
    disjoint_union,
    is_connected,
    join,
    path,
)
from .partition import Partition

H_FAMILIES = tuple(f"h{i}" for i in range(1, 18))
SIMPLE_FAMILIES = ("path", "cycle", "complete", "star", "complete_split", "split_plus_leaf", "wheel")
PAIR_FAMILIES = ("complete_bipartite", "caterpillar")
FAMILY_IDS = SIMPLE_FAMILIES + PAIR_FAMILIES + H_FAMILIES


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    id: str
    params: tuple[int, ...]
    complemented: bool = False

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """``"path:9"``, ``"h11:8"``, ``"caterpillar:2,3"``, ``"co-h16:7"``."""
        name, sep, args = text.strip().lower().partition(":")
        if not sep:
            raise FamilyError(f"family spec {text!r} needs a ':' before its parameters")
        complemented = name.startswith("co-")
        if complemented:
            name = name[3:]
        if name not in FAMILY_IDS:
            raise FamilyError(f"unknown family {name!r}")
        try:
            params = tuple(int(x) for x in args.split(","))
        except ValueError:
            raise FamilyError(f"bad parameters {args!r}") from None
        want = 2 if name in PAIR_FAMILIES else 1
        if len(params) != want:
            raise FamilyError(f"family {name} takes {want} parameter(s)")
        return cls(name, params, complemented)

    def __str__(self) -> str:
        prefix = "co-" if self.complemented else ""
        return f"{prefix}{self.id}:{','.join(map(str, self.params))}"


def empty(n: int) -> Graph:
    return Graph.empty(n)


def star(n: int) -> Graph:
    """K_{1,n-1} with the centre at 0."""
    return join(complete(1), empty(n - 1))


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))


def complete_split(n: int) -> Graph:
    """K_{n-2} ∨ K̄_2."""
    return join(complete(n - 2), empty(2))


def split_plus_leaf(n: int) -> Graph:
    """K_1 ∨ (K_1 + K_{n-2})."""
    return join(complete(1), disjoint_union(complete(1), complete(n - 2)))


def wheel(n: int) -> Graph:
    """C_{n-1} ∨ K_1, hub last."""
    return join(cycle(n - 1), complete(1))


def caterpillar(h: int, k: int) -> Graph:
    if h < 1 or k < 1:
        raise FamilyError("caterpillar needs h >= 1 and k >= 1")
    edges = [(i, i + 1) for i in range(k - 1)]
    edges += [(i, k + i) for i in range(k)]
    edges += [(0, 2 * k + j) for j in range(h)]
    return Graph.from_edges(2 * k + h, edges)


def _lambda_member(i: int, n: int) -> Graph:
    K, E, U, J = complete, empty, disjoint_union, join
    if i == 1:
        return J(K(n - 3), U(K(2), K(1)))
    if i == 2:
        return J(K(n - 3), E(3))
    if i == 3:
        return J(K(n - 4), cycle(4))
    if i == 4:
        return J(K(n - 4), path(4))
    if i == 5:
        return J(K(n - 4), U(K(2), K(2)))
    if i == 6:
        return complete_bipartite(2, n - 2)
    if i == 7:
        return J(E(n - 2), K(2))
    if i == 8:
        return J(U(K(n - 3), K(1)), K(2))
    if i == 9:
        return J(U(K(n - 3), K(1)), E(2))
    if i == 10:
        return J(U(K(n - 3), K(2)), K(1))
    if i == 11:
        return J(U(K(n - 4), K(1)), path(3)).remove_edge(n - 4, n - 1)
    if i == 12:
        return J(U(E(n - 3), K(2)), K(1))
    if i == 13:
        return J(U(K(n - 3), E(2)), K(1))
    if i == 14:
        return _lambda_member(11, n).remove_edge(n - 4, n - 3)
    if i == 15:
        return _lambda_member(9, n).remove_edge(n - 3, n - 1)
    if i == 16:
        return _lambda_member(10, n).remove_edge(n - 2, n - 1)
    if i == 17:
        return _lambda_member(12, n).remove_edge(n - 2, n - 1)
    raise FamilyError(f"no member H{i}")


def lambda_member(i: int, n: int) -> Graph:
    if n < 7:
        raise FamilyError("the H families are defined for n >= 7")
    return _lambda_member(i, n)


def generate(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    fid, p = spec.id, spec.params
    try:
        if fid in H_FAMILIES:
            g = lambda_member(int(fid[1:]), p[0])
        elif fid == "caterpillar":
            g = caterpillar(*p)
        elif fid == "complete_bipartite":
            if min(p) < 1:
                raise FamilyError("complete bipartite sides must be nonempty")
            g = complete_bipartite(*p)
        else:
            (n,) = p
            minimum = {"path": 1, "cycle": 3, "complete": 1, "star": 2,
                       "complete_split": 3, "split_plus_leaf": 3, "wheel": 4}[fid]
            if n < minimum:
                raise FamilyError(f"{fid} needs n >= {minimum}")
            g = {"path": path, "cycle": cycle, "complete": complete, "star": star,
                 "complete_split": complete_split, "split_plus_leaf": split_plus_leaf,
                 "wheel": wheel}[fid](n)
    except GraphError as exc:
        raise FamilyError(str(exc)) from None
    if spec.complemented:
        g = complement(g)
    if not is_connected(g):
        raise FamilyError(f"{spec} is disconnected")
    return g


def lambda_family(n: int) -> list[Graph]:
    """[H1, ..., H17] at order ``n``; checked connected and pairwise
    non-isomorphic before returning."""
    from .enumeration import canonical_form

    graphs = [lambda_member(i, n) for i in range(1, 18)]
    for i, g in enumerate(graphs, 1):
        if not is_connected(g):
            raise FamilyError(f"H{i} at order {n} is disconnected")
    if n <= 10:
        forms = [canonical_form(g) for g in graphs]
        if len(set(forms)) != 17:
            raise FamilyError(f"atlas members coincide at order {n}")
    return graphs


def known_partition(spec: FamilySpec | str) -> Partition:
    """A resolving partition with n-3 parts for H12, H17 or the complement of H16.

    The twin set forces one part per twin; the three remaining vertices
    ride along with the first three twins.
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    key = (spec.id, spec.complemented)
    if key not in {("h12", False), ("h17", False), ("h16", True)}:
        raise FamilyError(f"no stored partition for {spec}")
    n = spec.params[0]
    if n < 7:
        raise FamilyError("the H families are defined for n >= 7")
    if spec.id == "h12":
        # leaves 0..n-4, K_2 = {n-3, n-2}, centre n-1
        extra = [n - 3, n - 2, n - 1]
    elif spec.id == "h17":
        # leaves 0..n-4 on x = n-1; path u - w - x with w = n-3, u = n-2
        extra = [n - 2, n - 3, n - 1]
    else:
        # complement of H16: independent twins 0..n-4, u = n-2 adjacent to the
        # twins and to x = n-1, w = n-3 adjacent to the twins
        extra = [n - 2, n - 3, n - 1]
    parts = [[i] for i in range(n - 3)]
    for i, v in enumerate(extra):
        parts[i].append(v)
    return Partition.from_parts(parts, n)
