"""Submonoids of U_k that contain the symmetric group.

Such a submonoid is the symmetric group together with the J-classes J_mu for
mu in a downset of the partition order, so it is stored as that downset.
Element sets are only materialized inside bounded oracles.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Iterator

from .diagrams import (
    UniformBlockPermutation,
    enumerate_U,
    identity,
    j_class_size,
    multiply,
)
from .order import lower_covers, non_trivial_partitions, preceq
from .partitions import (
    IntegerPartition,
    SetPartition,
    as_partition,
    join,
    set_partitions_of,
    type_of,
)


DEFAULT_GENERATION_BOUND = 5
DEFAULT_VERIFY_BOUND = 6
DEFAULT_LIST_LIMIT = 100_000


class NotADownsetError(ValueError):
    pass


class BoundExceededError(ValueError):
    pass


@dataclass(frozen=True)
class Submonoid:
    k: int
    downset: frozenset[IntegerPartition]
    maximal_antichain: tuple[IntegerPartition, ...]
    size: int

    @property
    def label(self) -> str:
        """Maximal elements in reverse-lexicographic order, e.g. ``31, 22``."""
        if not self.maximal_antichain:
            return "∅"
        return ", ".join(p.label() for p in self.maximal_antichain)

    @property
    def is_group(self) -> bool:
        return not self.downset

    def types(self) -> frozenset[IntegerPartition]:
        """The J-class types making up the submonoid, 1^k included."""
        return self.downset | {IntegerPartition.ones(self.k)}

    def __contains__(self, x: UniformBlockPermutation) -> bool:
        return x.k == self.k and x.type() in self.types()

    def __le__(self, other: Submonoid) -> bool:
        return self.k == other.k and self.downset <= other.downset

    def members(self, bound: int = 7) -> set[UniformBlockPermutation]:
        if self.k > bound:
            raise BoundExceededError(f"refusing to materialize U_{self.k} elements (bound {bound})")
        out: set[UniformBlockPermutation] = set()
        for mu in sorted(self.types(), reverse=True):
            out.update(enumerate_U(self.k, mu))
        return out

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "label": self.label,
            "size": self.size,
            "antichain": [str(p) for p in self.maximal_antichain],
            "downset": [str(p) for p in sorted(self.downset, reverse=True)],
        }


def _maximal(downset: Iterable[IntegerPartition]) -> tuple[IntegerPartition, ...]:
    items = list(downset)
    tops = [p for p in items if not any(q != p and preceq(p, q) for q in items)]
    return tuple(sorted(tops, reverse=True))


def _size(k: int, downset: Iterable[IntegerPartition]) -> int:
    return factorial(k) + sum(j_class_size(k, mu) for mu in downset)


def from_downset(k: int, downset: Iterable) -> Submonoid:
    """The submonoid S_k together with J_mu for mu in the downset."""
    items = frozenset(as_partition(p) for p in downset)
    for p in items:
        if p.k != k:
            raise ValueError(f"{p} is not a partition of {k}")
        if p.is_all_ones:
            raise ValueError(f"downset contains 1^{k}")
    # closure under covers implies closure under the whole order
    for lam in sorted(items, reverse=True):
        for mu in lower_covers(lam):
            if mu not in items:
                raise NotADownsetError(f"not a downset: {mu} <= {lam} but {mu} is missing")
    return Submonoid(k, items, _maximal(items), _size(k, items))


def from_antichain(k: int, antichain: Iterable) -> Submonoid:
    gens = [as_partition(p) for p in antichain]
    down = {mu for mu in non_trivial_partitions(k) if any(preceq(mu, g) for g in gens)}
    return from_downset(k, down)


def principal(k: int, pi: SetPartition) -> Submonoid:
    """The submonoid generated by S_k and the idempotent of pi.

    For pi of type 1^k this is the group itself (``is_group`` is set).
    """
    if pi.ground_size != k:
        raise ValueError(f"size mismatch: {pi} is not a set partition of [{k}]")
    lam = type_of(pi)
    if lam.is_all_ones:
        return from_downset(k, ())
    return from_downset(k, (mu for mu in non_trivial_partitions(k) if preceq(mu, lam)))


def union(s1: Submonoid, s2: Submonoid) -> Submonoid:
    if s1.k != s2.k:
        raise ValueError(f"size mismatch: {s1.k} != {s2.k}")
    return from_downset(s1.k, s1.downset | s2.downset)


def intersection(s1: Submonoid, s2: Submonoid) -> Submonoid:
    if s1.k != s2.k:
        raise ValueError(f"size mismatch: {s1.k} != {s2.k}")
    return from_downset(s1.k, s1.downset & s2.downset)


def generated_by(
    k: int,
    generators: Iterable[UniformBlockPermutation],
    bound: int = DEFAULT_GENERATION_BOUND,
) -> set[UniformBlockPermutation]:
    """Brute-force closure of the generators and the identity under the product."""
    if k > bound:
        raise BoundExceededError(f"closure at k = {k} exceeds bound {bound}")
    gens = list(dict.fromkeys(generators))
    for g in gens:
        if g.k != k:
            raise ValueError(f"generator {g} does not live in U_{k}")
    seen = {identity(k)}
    seen.update(gens)
    work = list(seen)
    while work:
        x = work.pop()
        for g in gens:
            y = multiply(x, g)
            if y not in seen:
                seen.add(y)
                work.append(y)
    return seen


# --- closure test via joins of idempotents --------------------------------


@lru_cache(maxsize=8)
def join_type_table(k: int) -> dict[tuple[IntegerPartition, IntegerPartition], frozenset[IntegerPartition]]:
    """(type(pi), type(gamma)) -> all types of pi v gamma, over every pair of set partitions."""
    spl = list(set_partitions_of(k))
    kinds = [type_of(p) for p in spl]
    table: dict = {}
    for a, ta in zip(spl, kinds):
        for b, tb in zip(spl, kinds):
            table.setdefault((ta, tb), set()).add(type_of(join(a, b)))
    return {key: frozenset(v) for key, v in table.items()}


def verify_closure(s: Submonoid, bound: int = DEFAULT_VERIFY_BOUND) -> bool:
    """Product-closure of S_k and the J-classes of s, checked on idempotent joins.

    A product (tau e_pi)(sigma e_gamma) is (tau sigma) e_{sigma(pi) v gamma},
    so closure holds iff every join of set partitions whose types lie in the
    downset (plus 1^k) again has such a type.
    """
    if s.k > bound:
        raise BoundExceededError(f"closure verification at k = {s.k} exceeds bound {bound}")
    allowed = s.types()
    table = join_type_table(s.k)
    return all(table[(a, b)] <= allowed for a in allowed for b in allowed)


def closure_counterexample(s: Submonoid, bound: int = DEFAULT_VERIFY_BOUND):
    """First (type, type, offending join type) breaking closure, or None."""
    if s.k > bound:
        raise BoundExceededError(f"closure verification at k = {s.k} exceeds bound {bound}")
    allowed = s.types()
    table = join_type_table(s.k)
    for a in sorted(allowed, reverse=True):
        for b in sorted(allowed, reverse=True):
            bad = sorted(table[(a, b)] - allowed, reverse=True)
            if bad:
                return a, b, bad[0]
    return None


def types_are_closed(k: int, types: Iterable[IntegerPartition], bound: int = DEFAULT_VERIFY_BOUND) -> bool:
    """Closure test for an arbitrary union of J-classes, not necessarily a downset."""
    if k > bound:
        raise BoundExceededError(f"closure verification at k = {k} exceeds bound {bound}")
    allowed = frozenset(types) | {IntegerPartition.ones(k)}
    table = join_type_table(k)
    return all(table[(a, b)] <= allowed for a in allowed for b in allowed)


# --- downset counting and enumeration -------------------------------------


class _Poset:
    """Bitmask view of the order on partitions of k other than 1^k."""

    def __init__(self, k: int):
        self.k = k
        self.nodes = non_trivial_partitions(k) if k >= 2 else []
        n = len(self.nodes)
        self.up = [0] * n
        self.down = [0] * n
        for i, a in enumerate(self.nodes):
            for j, b in enumerate(self.nodes):
                if preceq(a, b):
                    self.up[i] |= 1 << j
                    self.down[j] |= 1 << i
        self.comparable = [u | d for u, d in zip(self.up, self.down)]
        self.full = (1 << n) - 1

    def components(self, mask: int) -> list[int]:
        comps = []
        rest = mask
        while rest:
            low = rest & -rest
            comp, frontier = low, low
            while frontier:
                bit = frontier & -frontier
                frontier ^= bit
                grow = self.comparable[bit.bit_length() - 1] & mask & ~comp
                comp |= grow
                frontier |= grow
            comps.append(comp)
            rest &= ~comp
        return comps

    def pivot(self, mask: int) -> int:
        best, best_deg = -1, -1
        m = mask
        while m:
            bit = m & -m
            m ^= bit
            i = bit.bit_length() - 1
            deg = (self.comparable[i] & mask).bit_count()
            if deg > best_deg:
                best, best_deg = i, deg
        return best

    def to_set(self, mask: int) -> frozenset[IntegerPartition]:
        out = []
        while mask:
            bit = mask & -mask
            mask ^= bit
            out.append(self.nodes[bit.bit_length() - 1])
        return frozenset(out)


@lru_cache(maxsize=32)
def _poset(k: int) -> _Poset:
    return _Poset(k)


def count_downsets(poset: _Poset, progress: Callable[[int], None] | None = None) -> int:
    """Number of downsets, by splitting on a pivot x: those avoiding x live in
    P minus the up-set of x, those containing x are the down-set of x plus a
    downset of P minus the down-set of x.  Memoized on the remaining mask;
    independent components multiply.
    """
    memo: dict[int, int] = {0: 1}

    def count(mask: int) -> int:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        comps = poset.components(mask)
        if len(comps) > 1:
            total = 1
            for c in comps:
                total *= count(c)
        else:
            x = poset.pivot(mask)
            total = count(mask & ~poset.up[x]) + count(mask & ~poset.down[x])
        memo[mask] = total
        if progress is not None and len(memo) % 100_000 == 0:
            progress(len(memo))
        return total

    return count(poset.full)


def count_submonoids(k: int, progress: Callable[[int], None] | None = None) -> int:
    """n_k: the number of downsets (equivalently antichains) of the order at k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return count_downsets(_poset(k), progress)


def iter_downsets(k: int) -> Iterator[frozenset[IntegerPartition]]:
    poset = _poset(k)

    def walk(mask: int, taken: int) -> Iterator[int]:
        if not mask:
            yield taken
            return
        x = poset.pivot(mask)
        yield from walk(mask & ~poset.up[x], taken)
        yield from walk(mask & ~poset.down[x], taken | (poset.down[x] & mask))

    for m in walk(poset.full, 0):
        yield poset.to_set(m)


def all_submonoids(k: int, limit: int = DEFAULT_LIST_LIMIT) -> list[Submonoid]:
    """Every submonoid containing S_k, ordered by (size, label)."""
    n = count_submonoids(k)
    if n > limit:
        raise BoundExceededError(f"{n} submonoids at k = {k} exceeds the listing limit {limit}")
    subs = [Submonoid(k, d, _maximal(d), _size(k, d)) for d in iter_downsets(k)]
    subs.sort(key=lambda s: (s.size, s.label))
    return subs


def lattice_covers(subs: list[Submonoid]) -> list[tuple[int, int]]:
    """Index pairs (i, j) where subs[j] covers subs[i]: one extra J-class."""
    pos = {s.downset: i for i, s in enumerate(subs)}
    edges = []
    for i, s in enumerate(subs):
        rest = [p for p in non_trivial_partitions(s.k) if p not in s.downset]
        for p in rest:
            j = pos.get(s.downset | {p})
            if j is not None:
                edges.append((i, j))
    return sorted(edges)


def lattice_to_dot(subs: list[Submonoid]) -> str:
    lines = ["digraph L {", "  rankdir=BT;"]
    for i, s in enumerate(subs):
        lines.append(f'  n{i} [shape=box, label="{s.label}\\n{s.size}"];')
    for i, j in lattice_covers(subs):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_to_json(subs: list[Submonoid]) -> dict:
    return {
        "k": subs[0].k if subs else None,
        "submonoids": [s.to_json() for s in subs],
        "covers": [list(e) for e in lattice_covers(subs)],
    }


def lattice_dumps(subs: list[Submonoid]) -> str:
    return json.dumps(lattice_to_json(subs), indent=2, ensure_ascii=False) + "\n"
