"""Dimensions of the irreducible U_k-modules and the J-class sum-of-squares identity."""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, NamedTuple

from .diagrams import j_class_size
from .partitions import IntegerPartition, as_partition, partitions_of, sp_count


def standard_tableaux_count(lam) -> int:
    """f^lam by the hook-length formula."""
    lam = as_partition(lam)
    n = lam.k
    if n == 0:
        return 1
    cols = [sum(1 for p in lam.parts if p > j) for j in range(lam.parts[0])]
    hooks = 1
    for i, row in enumerate(lam.parts):
        for j in range(row):
            hooks *= (row - j - 1) + (cols[j] - i - 1) + 1
    return factorial(n) // hooks


@dataclass(frozen=True)
class PartitionVector:
    """A sequence of partitions, slot i (1-based) weighted by i."""

    components: tuple[IntegerPartition, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(as_partition(c) for c in self.components))

    @property
    def k(self) -> int:
        return sum(i * c.k for i, c in enumerate(self.components, start=1))

    def __str__(self) -> str:
        return "(" + ", ".join("∅" if c.k == 0 else "(" + str(c) + ")" for c in self.components) + ")"

    def to_json(self) -> list[list[int]]:
        return [list(c.parts) for c in self.components]


def _slot_sizes(k: int) -> Iterator[tuple[int, ...]]:
    # (a_1, ..., a_k) with sum i*a_i = k, largest a_1 first
    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if i > k:
            if left == 0:
                yield ()
            return
        for a in range(left // i, -1, -1):
            for rest in rec(i + 1, left - i * a):
                yield (a,) + rest

    return rec(1, k)


def partition_vectors(k: int) -> list[PartitionVector]:
    """Every vector (lam^(1), ..., lam^(k)) with sum i*|lam^(i)| = k."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    out = []
    for sizes in _slot_sizes(k):
        for combo in itertools.product(*(partitions_of(a) for a in sizes)):
            out.append(PartitionVector(combo))
    return out


def typevec(v: PartitionVector) -> IntegerPartition:
    """The partition with |lam^(i)| parts equal to i."""
    parts: list[int] = []
    for i, c in enumerate(v.components, start=1):
        parts.extend([i] * c.k)
    return IntegerPartition(tuple(parts))


def dim_irreducible(v: PartitionVector) -> int:
    return sp_count(v.k, typevec(v)) * prod(standard_tableaux_count(c) for c in v.components)


class SumOfSquares(NamedTuple):
    lhs: int
    rhs: int
    equal: bool


def vectors_of_type(k: int, mu) -> list[PartitionVector]:
    mu = as_partition(mu)
    sizes = [mu.multiplicities.get(i, 0) for i in range(1, k + 1)]
    return [PartitionVector(c) for c in itertools.product(*(partitions_of(a) for a in sizes))]


def sum_of_squares_check(k: int, mu) -> SumOfSquares:
    """Compare |J_mu| with the sum of squared dimensions of the irreducibles of that type."""
    mu = as_partition(mu)
    if mu.k != k:
        raise ValueError(f"{mu} is not a partition of {k}")
    lhs = j_class_size(k, mu)
    rhs = sum(dim_irreducible(v) ** 2 for v in vectors_of_type(k, mu))
    return SumOfSquares(lhs, rhs, lhs == rhs)


def report(k: int) -> list[dict]:
    """One row per mu: |J_mu|, the irreducibles of type mu with dimensions, and the check."""
    rows = []
    for mu in partitions_of(k):
        vecs = vectors_of_type(k, mu)
        dims = [dim_irreducible(v) for v in vecs]
        check = sum_of_squares_check(k, mu)
        rows.append(
            {
                "mu": str(mu),
                "j_class_size": check.lhs,
                "irreducibles": [{"vector": v.to_json(), "dim": d} for v, d in zip(vecs, dims)],
                "sum_of_squares": check.rhs,
                "equal": check.equal,
            }
        )
    return rows


def report_csv(k: int) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["mu", "j_class_size", "irreducibles", "sum_of_squares", "equal"])
    for row in report(k):
        irr = ";".join(
            "[" + "|".join(",".join(map(str, c)) for c in item["vector"]) + f"]:{item['dim']}"
            for item in row["irreducibles"]
        )
        writer.writerow([row["mu"], row["j_class_size"], irr, row["sum_of_squares"], row["equal"]])
    return buf.getvalue()
