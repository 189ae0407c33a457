"""The uniform block permutation monoid U_k.

An element is a set partition of the top row {1..k} together with the bottom
row {1'..k'} in which every block meets both rows in the same number of points.
Blocks are stored as ``(top, bottom)`` pairs of sorted tuples, ordered by their
smallest top point; bottom points are plain positive integers.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .partitions import (
    DisjointSet,
    IntegerPartition,
    Permutation,
    SetPartition,
    as_partition,
    partitions_of,
    product_of_factorials,
    set_partitions_of,
    sp_count,
    type_of,
)

__all__ = [
    "NonUniformBlockError",
    "Permutation",
    "UniformBlockPermutation",
    "enumerate_U",
    "factorize",
    "from_blocks",
    "from_permutation",
    "idempotent_of",
    "identity",
    "j_class_size",
    "multiply",
    "u_size",
]

Block = tuple[tuple[int, ...], tuple[int, ...]]


class NonUniformBlockError(ValueError):
    pass


@dataclass(frozen=True)
class UniformBlockPermutation:
    k: int
    blocks: tuple[Block, ...]

    def top(self) -> SetPartition:
        return SetPartition(self.k, tuple(t for t, _ in self.blocks))

    def bot(self) -> SetPartition:
        return SetPartition(self.k, tuple(sorted(b for _, b in self.blocks)))

    def type(self) -> IntegerPartition:
        return IntegerPartition(tuple(len(t) for t, _ in self.blocks))

    def is_idempotent(self) -> bool:
        return all(t == b for t, b in self.blocks)

    def is_unit(self) -> bool:
        return all(len(t) == 1 for t, _ in self.blocks)

    def __mul__(self, other: UniformBlockPermutation) -> UniformBlockPermutation:
        return multiply(self, other)

    def signed_blocks(self) -> list[list[int]]:
        """Blocks with bottom points i' written as -i."""
        return [list(t) + [-b for b in bot] for t, bot in self.blocks]

    def to_json(self) -> dict:
        return {"k": self.k, "blocks": self.signed_blocks()}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict | str) -> UniformBlockPermutation:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            k = int(data["k"])
            raw = data["blocks"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed element JSON: {data!r}") from exc
        blocks = []
        for b in raw:
            blocks.append(([x for x in b if x > 0], [-x for x in b if x < 0]))
            if any(x == 0 for x in b):
                raise ValueError("0 is not a valid point label")
        return from_blocks(k, blocks)

    def __str__(self) -> str:
        parts = []
        for t, b in self.blocks:
            parts.append("{" + ",".join([str(x) for x in t] + [f"{x}'" for x in b]) + "}")
        return "{" + ",".join(parts) + "}"


def from_blocks(k: int, blocks: Iterable[tuple[Iterable[int], Iterable[int]]]) -> UniformBlockPermutation:
    """Validated constructor from ``(top set, bottom set)`` pairs."""
    canon = []
    for top, bot in blocks:
        top, bot = tuple(sorted(top)), tuple(sorted(bot))
        if len(top) != len(bot):
            raise NonUniformBlockError(f"non-uniform block: top {set(top)} has {len(top)} points, bottom {set(bot)} has {len(bot)}")
        if not top:
            raise ValueError("empty block")
        canon.append((top, bot))
    expected = list(range(1, k + 1))
    if sorted(x for t, _ in canon for x in t) != expected or sorted(x for _, b in canon for x in b) != expected:
        raise ValueError(f"not a partition of [{k}] and its primed copy: {blocks!r}")
    canon.sort()
    return UniformBlockPermutation(k, tuple(canon))


def identity(k: int) -> UniformBlockPermutation:
    return UniformBlockPermutation(k, tuple(((i,), (i,)) for i in range(1, k + 1)))


def from_permutation(sigma: Permutation) -> UniformBlockPermutation:
    """The diagram joining top point sigma(i) to bottom point i."""
    k = sigma.k
    blocks = [((sigma(i),), (i,)) for i in range(1, k + 1)]
    blocks.sort()
    return UniformBlockPermutation(k, tuple(blocks))


def idempotent_of(pi: SetPartition) -> UniformBlockPermutation:
    return UniformBlockPermutation(pi.ground_size, tuple((b, b) for b in pi.blocks))


def multiply(x: UniformBlockPermutation, y: UniformBlockPermutation) -> UniformBlockPermutation:
    """Stack x above y, glue x's bottom row to y's top row, keep the outer rows.

    Nodes 0..k-1 are x's top row, k..2k-1 the glued middle row and
    2k..3k-1 y's bottom row.
    """
    if x.k != y.k:
        raise ValueError(f"size mismatch: {x.k} != {y.k}")
    k = x.k
    ds = DisjointSet(3 * k)
    union, find = ds.union, ds.find
    for top, bot in x.blocks:
        r = top[0] - 1
        for t in top[1:]:
            union(r, t - 1)
        for b in bot:
            union(r, k + b - 1)
    for top, bot in y.blocks:
        r = k + top[0] - 1
        for t in top[1:]:
            union(r, k + t - 1)
        for b in bot:
            union(r, 2 * k + b - 1)
    tops: dict[int, list[int]] = {}
    for i in range(k):
        tops.setdefault(find(i), []).append(i + 1)
    bots: dict[int, list[int]] = {r: [] for r in tops}
    for i in range(k):
        root = find(2 * k + i)
        if root not in bots:
            raise AssertionError("product produced a block without top points")
        bots[root].append(i + 1)
    return UniformBlockPermutation(k, tuple((tuple(t), tuple(bots[r])) for r, t in tops.items()))


def factorize(x: UniformBlockPermutation) -> tuple[Permutation, SetPartition]:
    """Return (tau, gamma) with x = from_permutation(tau) * idempotent_of(gamma).

    gamma is the bottom partition of x.  tau sends the i-th smallest point of
    each bottom block to the i-th smallest point of the matching top block.
    """
    images = [0] * x.k
    for top, bot in x.blocks:
        for t, b in zip(top, bot):
            images[b - 1] = t
    return Permutation(tuple(images)), x.bot()


def _matchings(top: SetPartition, bottom: SetPartition) -> Iterator[tuple[Block, ...]]:
    by_size: dict[int, list[tuple[int, ...]]] = {}
    for b in bottom.blocks:
        by_size.setdefault(len(b), []).append(b)
    sizes = sorted(by_size)
    slots = {s: [i for i, t in enumerate(top.blocks) if len(t) == s] for s in sizes}
    choices = [list(itertools.permutations(by_size[s])) for s in sizes]
    n = len(top.blocks)
    for combo in itertools.product(*choices):
        assigned: list = [None] * n
        for s, perm in zip(sizes, combo):
            for i, b in zip(slots[s], perm):
                assigned[i] = b
        yield tuple(zip(top.blocks, assigned))


def _check_filter(k: int, type_filter) -> IntegerPartition:
    mu = as_partition(type_filter)
    if mu.k != k:
        raise ValueError(f"type filter {mu} is not a partition of {k}")
    return mu


def enumerate_U(k: int, type_filter: IntegerPartition | None = None) -> Iterator[UniformBlockPermutation]:
    """Every element of U_k once, or the J-class of the given type.

    Order: types in reverse-lexicographic order; within a type, by top set
    partition, then bottom set partition, then block matching.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    types = partitions_of(k) if type_filter is None else [_check_filter(k, type_filter)]
    for mu in types:
        spl = list(set_partitions_of(k, mu))
        for top in spl:
            for bottom in spl:
                for blocks in _matchings(top, bottom):
                    yield UniformBlockPermutation(k, blocks)


def j_class_size(k: int, mu: IntegerPartition) -> int:
    """|J_mu| = sp_k(mu)^2 * a_1! a_2! ... a_k!."""
    mu = _check_filter(k, mu)
    return sp_count(k, mu) ** 2 * product_of_factorials(mu)


def u_size(k: int) -> int:
    """|U_k| as the sum of the J-class sizes."""
    return sum(j_class_size(k, mu) for mu in partitions_of(k))


def type_of_element(x: UniformBlockPermutation) -> IntegerPartition:
    return type_of(x.top())
