"""The join-generated order on integer partitions and its Hasse diagrams.

``mu <= lam`` holds when some finite join of set partitions of type ``lam``
has type ``mu``.  The fast test used everywhere is: mu is coarser than lam and
the smallest part of mu above 1 is at least the smallest such part of lam.
The definitional closure test is kept as an oracle for small k.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .partitions import (
    IntegerPartition,
    Permutation,
    SetPartition,
    apply_permutation,
    as_partition,
    is_coarser,
    join,
    join_all,
    partitions_of,
    set_partitions_of,
    smallest_nontrivial_part,
    type_of,
)

DEFAULT_ORACLE_BOUND = 6


class NotComparableError(ValueError):
    pass


class OracleInfeasibleError(ValueError):
    pass


def _same_size(mu: IntegerPartition, lam: IntegerPartition) -> None:
    if mu.k != lam.k:
        raise ValueError(f"size mismatch: {mu} has size {mu.k}, {lam} has size {lam.k}")


def preceq(mu, lam) -> bool:
    mu, lam = as_partition(mu), as_partition(lam)
    _same_size(mu, lam)
    if mu == lam:
        return True
    if mu.is_all_ones or lam.is_all_ones:
        return False
    return is_coarser(mu, lam) and smallest_nontrivial_part(mu) >= smallest_nontrivial_part(lam)


@lru_cache(maxsize=None)
def join_closure(lam: IntegerPartition) -> frozenset[SetPartition]:
    """Every set partition reachable as a join of type-lam set partitions."""
    seeds = list(set_partitions_of(lam.k, lam))
    seen = set(seeds)
    frontier = list(seeds)
    while frontier:
        fresh = []
        for x in frontier:
            for s in seeds:
                y = join(x, s)
                if y not in seen:
                    seen.add(y)
                    fresh.append(y)
        frontier = fresh
    return frozenset(seen)


@lru_cache(maxsize=None)
def _reachable_types(lam: IntegerPartition) -> frozenset[IntegerPartition]:
    return frozenset(type_of(pi) for pi in join_closure(lam))


def preceq_oracle(mu, lam, bound: int = DEFAULT_ORACLE_BOUND) -> bool:
    """Decide mu <= lam straight from the definition by join closure."""
    mu, lam = as_partition(mu), as_partition(lam)
    _same_size(mu, lam)
    if lam.k > bound:
        raise OracleInfeasibleError(f"oracle infeasible: k = {lam.k} exceeds bound {bound}")
    return mu in _reachable_types(lam)


def lower_covers(lam) -> list[IntegerPartition]:
    """All mu covered by lam, in reverse-lexicographic order.

    Two families: merge two parts that are not both 1; or, when lam ends in
    a smallest non-1 part s followed by t >= s ones, turn s of those ones
    into a new part s.
    """
    lam = as_partition(lam)
    if lam.is_all_ones:
        raise ValueError(f"{lam} is the isolated partition 1^k and has no covers")
    parts = lam.parts
    found = set()
    values = sorted(set(parts), reverse=True)
    for i, a in enumerate(values):
        for b in values[i:]:
            if a == b and lam.multiplicities[a] < 2:
                continue
            if a == 1 and b == 1:
                continue
            rest = list(parts)
            rest.remove(a)
            rest.remove(b)
            found.add(IntegerPartition(tuple(rest) + (a + b,)))
    s = smallest_nontrivial_part(lam)
    t = lam.multiplicities.get(1, 0)
    if t >= s:
        found.add(IntegerPartition(parts[: len(parts) - t] + (s,) + (1,) * (t - s)))
    return sorted(found, reverse=True)


def upper_covers(mu, nodes: Iterable[IntegerPartition] | None = None) -> list[IntegerPartition]:
    mu = as_partition(mu)
    candidates = nodes if nodes is not None else non_trivial_partitions(mu.k)
    return [lam for lam in candidates if not lam.is_all_ones and mu in lower_covers(lam)]


def non_trivial_partitions(k: int) -> list[IntegerPartition]:
    """Partitions of k other than 1^k, reverse-lexicographic."""
    return [p for p in partitions_of(k) if not p.is_all_ones]


@dataclass(frozen=True)
class PartitionPoset:
    """Nodes and cover edges (coarser, finer) of a subposet of partitions of k."""

    k: int
    nodes: tuple[IntegerPartition, ...]
    cover_edges: tuple[tuple[IntegerPartition, IntegerPartition], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.nodes)})

    def __contains__(self, p) -> bool:
        return as_partition(p) in self._index

    def __len__(self) -> int:
        return len(self.nodes)

    def index(self, p: IntegerPartition) -> int:
        return self._index[p]

    def minimal(self) -> list[IntegerPartition]:
        finer = {b for _, b in self.cover_edges}
        return [p for p in self.nodes if p not in finer]

    def maximal(self) -> list[IntegerPartition]:
        coarser = {a for a, _ in self.cover_edges}
        return [p for p in self.nodes if p not in coarser]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "nodes": [str(p) for p in self.nodes],
            "edges": [[str(a), str(b)] for a, b in self.cover_edges],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def from_json(cls, data: dict | str) -> PartitionPoset:
        if isinstance(data, str):
            data = json.loads(data)
        def read(text: str) -> IntegerPartition:
            return IntegerPartition.parse(text, compact=False)

        nodes = tuple(read(s) for s in data["nodes"])
        edges = tuple((read(a), read(b)) for a, b in data["edges"])
        return cls(int(data["k"]), nodes, edges)

    def to_dot(self, name: str = "P") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for p in self.nodes:
            lines.append(f'  "{p}";')
        for a, b in self.cover_edges:
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def transitive_reduction(
    nodes: Sequence[IntegerPartition],
    leq: Callable[[IntegerPartition, IntegerPartition], bool],
) -> list[tuple[IntegerPartition, IntegerPartition]]:
    """Cover pairs (a, b): a < b with nothing strictly between, from a full order relation."""
    below = {b: [a for a in nodes if a != b and leq(a, b)] for b in nodes}
    edges = []
    for b in nodes:
        strict = below[b]
        strict_set = set(strict)
        for a in strict:
            if not any(c != a and leq(a, c) for c in strict_set):
                edges.append((a, b))
    return edges


def _parallel_map(fn, items, threads: int | None):
    if threads is None or threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def hasse(k: int, threads: int | None = None) -> PartitionPoset:
    """The Hasse diagram of the order on partitions of k other than 1^k."""
    if k < 2:
        return PartitionPoset(max(k, 0), (), ())
    nodes = non_trivial_partitions(k)
    covers = _parallel_map(lower_covers, nodes, threads)
    edges = [(mu, lam) for lam, below in zip(nodes, covers) for mu in below]
    edges.sort(key=lambda e: (e[0].parts, e[1].parts), reverse=True)
    return PartitionPoset(k, tuple(nodes), tuple(edges))


def interval(bottom, top) -> PartitionPoset:
    """The closed interval [bottom, top] with its own cover edges."""
    bottom, top = as_partition(bottom), as_partition(top)
    if not preceq(bottom, top):
        raise NotComparableError(f"{bottom} is not below {top}")
    if bottom == top:
        return PartitionPoset(top.k, (top,), ())
    nodes = tuple(p for p in partitions_of(top.k) if preceq(bottom, p) and preceq(p, top))
    members = set(nodes)
    edges = [(mu, lam) for lam in nodes for mu in lower_covers(lam) if mu in members]
    edges.sort(key=lambda e: (e[0].parts, e[1].parts), reverse=True)
    return PartitionPoset(top.k, nodes, tuple(edges))


def mobius(bottom, top) -> int:
    """Mobius function of the order on the interval [bottom, top]."""
    bottom, top = as_partition(bottom), as_partition(top)
    if not preceq(bottom, top):
        raise NotComparableError(f"{bottom} is not below {top}")
    return mobius_values(interval(bottom, top))[top]


def mobius_values(iv: PartitionPoset) -> dict[IntegerPartition, int]:
    """mu(bottom, z) for every z of an interval whose unique minimum is the bottom."""
    (bottom,) = iv.minimal()
    # strictly coarser partitions have fewer parts, so they are valued first
    order = sorted(iv.nodes, key=lambda p: (p.length, p.parts), reverse=False)
    values: dict[IntegerPartition, int] = {}
    for z in order:
        if z == bottom:
            values[z] = 1
        else:
            values[z] = -sum(values[y] for y in values if y != z and preceq(y, z))
    return values


def cover_chain(mu, lam) -> list[IntegerPartition]:
    """A saturated chain lam = c_0 > c_1 > ... > c_n = mu of covers."""
    mu, lam = as_partition(mu), as_partition(lam)
    if not preceq(mu, lam):
        raise NotComparableError(f"{mu} is not below {lam}")
    chain = [lam]
    while chain[-1] != mu:
        nxt = next(c for c in lower_covers(chain[-1]) if preceq(mu, c))
        chain.append(nxt)
    return chain


def _blocks_of_size(pi: SetPartition, size: int, skip: int = -1) -> int:
    for i, b in enumerate(pi.blocks):
        if len(b) == size and i != skip:
            return i
    raise ValueError(f"no block of size {size} in {pi}")


def _cover_swap(current: SetPartition, coarse: IntegerPartition) -> Permutation:
    """A permutation u with type(current v u(current)) = coarse.

    coarse must be a lower cover of type(current).  Merging two parts swaps
    one point between the two blocks; merging s ones swaps a block of the
    smallest size s > 1 with s singletons.
    """
    k = current.ground_size
    lam = type_of(current)
    finer_parts = list(lam.parts)
    for p in coarse.parts:
        if p in finer_parts:
            finer_parts.remove(p)
    # finer_parts now holds the parts of lam that were merged away
    s = smallest_nontrivial_part(lam)
    ones = lam.multiplicities.get(1, 0)
    if len(finer_parts) == 2 and not (finer_parts[0] == 1 and finer_parts[1] == 1):
        a, b = finer_parts
        i = _blocks_of_size(current, a)
        j = _blocks_of_size(current, b, skip=i)
        bi, bj = current.blocks[i], current.blocks[j]
        if bi[0] > bj[0]:
            bi, bj = bj, bi
        return Permutation.transposition(k, max(bi), min(bj))
    if finer_parts == [1] * s and ones >= s:
        i = _blocks_of_size(current, s)
        singles = [b[0] for b in current.blocks if len(b) == 1][:s]
        images = list(range(1, k + 1))
        for a, b in zip(current.blocks[i], singles):
            images[a - 1], images[b - 1] = b, a
        return Permutation(tuple(images))
    raise ValueError(f"{coarse} is not a lower cover of {lam}")


def join_witness(mu, lam) -> list[SetPartition]:
    """Type-lam set partitions whose join has type mu.

    Walks a cover chain from lam down to mu.  At each step the join J of the
    list so far is paired with a swapped copy u(J) of the same type, and the
    list is extended by the u-images of its members, so the new join is
    J v u(J).
    """
    mu, lam = as_partition(mu), as_partition(lam)
    if not preceq(mu, lam):
        raise NotComparableError(f"{mu} is not below {lam}")
    witness = [SetPartition.standard(lam)]
    current = witness[0]
    for coarse in cover_chain(mu, lam)[1:]:
        u = _cover_swap(current, coarse)
        extra = [apply_permutation(u, pi) for pi in witness]
        seen = set(witness)
        for pi in extra:
            if pi not in seen:
                seen.add(pi)
                witness.append(pi)
        current = join_all(witness)
    return witness
