"""Integer partitions, set partitions of [k], and permutations acting on them.

Integer partitions are stored weakly decreasing; set partitions keep their
blocks sorted internally and ordered by minimum element.  Both are immutable
and hash on their canonical form.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True, order=True)
class IntegerPartition:
    """A weakly decreasing tuple of positive parts.

    >>> IntegerPartition((1, 3, 2, 1))
    IntegerPartition(parts=(3, 2, 1, 1))
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive, got {self.parts!r}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str, compact: bool = True) -> IntegerPartition:
        """Read ``"3,2,1,1"``.

        With ``compact`` a bare digit string such as ``"3211"`` is read one part
        per digit, unless it contains a 0 (``"10"`` is the single part 10).
        Without it a comma-free string is always a single part, which is how
        ``str`` writes one-part partitions.  ``"12,"`` is the part 12 in both modes.
        """
        text = text.strip()
        if text in ("", "()", "0"):
            return cls(())
        if "," in text:
            return cls(tuple(int(p) for p in text.split(",") if p.strip()))
        if text.isdigit():
            if compact and "0" not in text:
                return cls(tuple(int(c) for c in text))
            return cls((int(text),))
        raise ValueError(f"cannot parse integer partition {text!r}")

    @classmethod
    def ones(cls, k: int) -> IntegerPartition:
        return cls((1,) * k)

    @cached_property
    def k(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def multiplicities(self) -> dict[int, int]:
        """Part value -> number of occurrences (the exponents of 1^a1 2^a2 ...)."""
        return dict(sorted(Counter(self.parts).items()))

    @property
    def is_all_ones(self) -> bool:
        return all(p == 1 for p in self.parts)

    def label(self) -> str:
        """Compact label: a digit string when every part is a single digit."""
        if not self.parts:
            return "()"
        if self.parts[0] <= 9:
            return "".join(map(str, self.parts))
        return str(self)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]


def as_partition(value) -> IntegerPartition:
    """Coerce a sequence of parts or a string into an IntegerPartition."""
    if isinstance(value, IntegerPartition):
        return value
    if isinstance(value, str):
        return IntegerPartition.parse(value)
    return IntegerPartition(tuple(value))


def _partition_tuples(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partition_tuples(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(k: int) -> tuple[IntegerPartition, ...]:
    return tuple(IntegerPartition(p) for p in _partition_tuples(k, k))


def partitions_of(k: int) -> list[IntegerPartition]:
    """All partitions of k in reverse-lexicographic order, (k) first and 1^k last."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return list(_partitions_cached(k))


def smallest_nontrivial_part(nu: IntegerPartition) -> int:
    """The smallest part of nu that is strictly greater than 1."""
    for p in reversed(nu.parts):
        if p > 1:
            return p
    raise ValueError(f"smallest part above 1 is undefined for {nu.label()}")


def is_coarser(mu: IntegerPartition, lam: IntegerPartition) -> bool:
    """True iff the parts of lam can be grouped so the group sums are the parts of mu."""
    mu, lam = as_partition(mu), as_partition(lam)
    if mu.k != lam.k:
        raise ValueError(f"size mismatch: |{mu}| = {mu.k} but |{lam}| = {lam.k}")
    return _coarser(mu.parts, lam.parts)


@lru_cache(maxsize=1 << 16)
def _coarser(mu: tuple[int, ...], lam: tuple[int, ...]) -> bool:
    if len(mu) > len(lam):
        return False
    if mu == lam:
        return True

    @lru_cache(maxsize=None)
    def place(i: int, room: tuple[int, ...]) -> bool:
        # room: remaining capacity of each mu-part, kept sorted so equal bins are merged
        if i == len(lam):
            return True
        if room[-1] < lam[-1]:
            # a bin smaller than the smallest part can never be filled exactly
            return False
        part = lam[i]
        tried = set()
        for j, r in enumerate(room):
            if r < part or r in tried:
                continue
            tried.add(r)
            left = list(room)
            left[j] -= part
            if left[j] == 0:
                del left[j]
            if place(i + 1, tuple(sorted(left, reverse=True))):
                return True
        return False

    return place(0, mu)


def sp_count(k: int, lam: IntegerPartition) -> int:
    """Number of set partitions of [k] whose block sizes are the parts of lam."""
    lam = as_partition(lam)
    if lam.k != k:
        raise ValueError(f"{lam} is not a partition of {k}")
    denom = 1
    for part, mult in lam.multiplicities.items():
        denom *= factorial(mult) * factorial(part) ** mult
    return factorial(k) // denom


def bell(k: int) -> int:
    """Bell number via the Bell triangle."""
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


class DisjointSet:
    """Union-find over 0..n-1 with path halving and union by size."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra

    def union_all(self, items: Iterable[int]) -> None:
        it = iter(items)
        first = next(it, None)
        if first is None:
            return
        for x in it:
            self.union(first, x)


@dataclass(frozen=True, order=True)
class SetPartition:
    """A set partition of {1, ..., ground_size} in canonical block order."""

    ground_size: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], ground_size: int | None = None) -> SetPartition:
        """Validate and canonicalize; ground_size defaults to the largest element."""
        blocks = [tuple(sorted(int(x) for x in b)) for b in blocks]
        if any(not b for b in blocks):
            raise ValueError("set partition blocks must be nonempty")
        elements = [x for b in blocks for x in b]
        k = ground_size if ground_size is not None else max(elements, default=0)
        if sorted(elements) != list(range(1, k + 1)):
            raise ValueError(f"blocks do not partition [1..{k}]: {blocks!r}")
        blocks.sort(key=lambda b: b[0])
        return cls(k, tuple(blocks))

    @classmethod
    def parse(cls, text: str, ground_size: int | None = None) -> SetPartition:
        """Read the text form ``{{1,3},{2},{4}}``."""
        inner = text.strip()
        if not (inner.startswith("{") and inner.endswith("}")):
            raise ValueError(f"cannot parse set partition {text!r}")
        found = re.findall(r"\{([^{}]*)\}", inner[1:-1])
        blocks = [[int(x) for x in b.split(",") if x.strip()] for b in found]
        return cls.from_blocks(blocks, ground_size)

    @classmethod
    def singletons(cls, k: int) -> SetPartition:
        return cls(k, tuple((i,) for i in range(1, k + 1)))

    @classmethod
    def single_block(cls, k: int) -> SetPartition:
        return cls(k, (tuple(range(1, k + 1)),) if k else ())

    @classmethod
    def standard(cls, lam: IntegerPartition) -> SetPartition:
        """Consecutive blocks {1..lam_1}, {lam_1+1, ...}, one per part."""
        blocks, start = [], 1
        for p in as_partition(lam).parts:
            blocks.append(tuple(range(start, start + p)))
            start += p
        return cls(start - 1, tuple(blocks))

    @property
    def length(self) -> int:
        return len(self.blocks)

    def block_index(self) -> list[int]:
        """label[i-1] = index of the block containing i."""
        label = [0] * self.ground_size
        for j, b in enumerate(self.blocks):
            for x in b:
                label[x - 1] = j
        return label

    def is_finer_than(self, other: SetPartition) -> bool:
        label = other.block_index()
        return all(len({label[x - 1] for x in b}) == 1 for b in self.blocks)

    def __str__(self) -> str:
        return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + "}"


def type_of(pi: SetPartition) -> IntegerPartition:
    return IntegerPartition(tuple(len(b) for b in pi.blocks))


def _from_components(k: int, ds: DisjointSet) -> SetPartition:
    groups: dict[int, list[int]] = {}
    for i in range(k):
        groups.setdefault(ds.find(i), []).append(i + 1)
    # elements visited in increasing order, so blocks come out sorted and min-ordered
    return SetPartition(k, tuple(tuple(g) for g in groups.values()))


def join(pi: SetPartition, gamma: SetPartition) -> SetPartition:
    """The finest set partition coarser than both arguments."""
    if pi.ground_size != gamma.ground_size:
        raise ValueError(f"ground-size mismatch: {pi.ground_size} != {gamma.ground_size}")
    ds = DisjointSet(pi.ground_size)
    for b in pi.blocks:
        ds.union_all(x - 1 for x in b)
    for b in gamma.blocks:
        ds.union_all(x - 1 for x in b)
    return _from_components(pi.ground_size, ds)


def join_all(parts: Sequence[SetPartition]) -> SetPartition:
    if not parts:
        raise ValueError("join of an empty family is undefined here")
    k = parts[0].ground_size
    ds = DisjointSet(k)
    for pi in parts:
        if pi.ground_size != k:
            raise ValueError("ground-size mismatch in join")
        for b in pi.blocks:
            ds.union_all(x - 1 for x in b)
    return _from_components(k, ds)


def _all_set_partitions(k: int) -> Iterator[SetPartition]:
    # restricted growth strings; blocks are opened in order of their minimum
    def grow(i: int, blocks: list[list[int]]):
        if i > k:
            yield SetPartition(k, tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(i)
            yield from grow(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from grow(i + 1, blocks)
        blocks.pop()

    yield from grow(1, [])


def _typed_set_partitions(k: int, lam: IntegerPartition) -> Iterator[SetPartition]:
    # the block holding the smallest unused element is chosen first, so each
    # partition is produced once and its blocks arrive in canonical order
    def build(remaining: tuple[int, ...], sizes: Counter, acc: list[tuple[int, ...]]):
        if not remaining:
            yield SetPartition(k, tuple(acc))
            return
        head, rest = remaining[0], remaining[1:]
        for size in sorted(sizes, reverse=True):
            if sizes[size] == 0:
                continue
            sizes[size] -= 1
            for others in itertools.combinations(rest, size - 1):
                block = (head,) + others
                left = tuple(x for x in rest if x not in others)
                acc.append(block)
                yield from build(left, sizes, acc)
                acc.pop()
            sizes[size] += 1

    yield from build(tuple(range(1, k + 1)), Counter(lam.parts), [])


def set_partitions_of(k: int, type_filter: IntegerPartition | None = None) -> Iterator[SetPartition]:
    """All set partitions of [k], or only those of the given type."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if type_filter is None:
        return _all_set_partitions(k)
    lam = as_partition(type_filter)
    if lam.k != k:
        raise ValueError(f"type filter {lam} is not a partition of {k}")
    return _typed_set_partitions(k, lam)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., k}; images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {self.images!r}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def transposition(cls, k: int, i: int, j: int) -> Permutation:
        images = list(range(1, k + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, k: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(1, k + 1))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: (self * other)(i) = self(other(i))."""
        if self.k != other.k:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.k
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images, start=1))


def all_permutations(k: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(1, k + 1)):
        yield Permutation(images)


def apply_permutation(u: Permutation, pi: SetPartition) -> SetPartition:
    """The set partition whose blocks are the images u(B) of the blocks of pi."""
    if u.k != pi.ground_size:
        raise ValueError(f"size mismatch: permutation on {u.k} points, partition of {pi.ground_size}")
    images = u.images
    blocks = sorted(tuple(sorted(images[x - 1] for x in b)) for b in pi.blocks)
    return SetPartition(pi.ground_size, tuple(blocks))


def product_of_factorials(lam: IntegerPartition) -> int:
    """a_1! a_2! ... for the multiplicities a_i of lam."""
    return prod(factorial(m) for m in lam.multiplicities.values())
