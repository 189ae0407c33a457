"""Self-check suites pairing each fast method with an independent brute-force route.

Every suite returns a list of check records
``{"name", "passed", "detail", "counterexamples"}``; counterexamples are
capped so failing reports stay readable.
"""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Callable

from .diagrams import enumerate_U, from_permutation, idempotent_of, j_class_size
from .order import (
    DEFAULT_ORACLE_BOUND,
    hasse,
    non_trivial_partitions,
    preceq,
    preceq_oracle,
    transitive_reduction,
)
from .partitions import (
    IntegerPartition,
    Permutation,
    SetPartition,
    is_coarser,
    partitions_of,
)
from .repdims import sum_of_squares_check
from .submonoids import (
    all_submonoids,
    generated_by,
    union,
    verify_closure,
)

SUITES = ("all", "order", "covers", "sumsquares", "closure")
MAX_COUNTEREXAMPLES = 10
POSET_AXIOM_BOUND = 10
ENUMERATION_BOUND = 7


def _check(name: str, bad: list, detail: str) -> dict:
    return {
        "name": name,
        "passed": not bad,
        "detail": detail,
        "counterexamples": [str(b) for b in bad[:MAX_COUNTEREXAMPLES]],
    }


def _label(p: IntegerPartition) -> str:
    return p.label()


def check_oracle_agreement(k: int, bound: int = DEFAULT_ORACLE_BOUND) -> dict:
    parts = partitions_of(k)
    bad = [
        (_label(a), _label(b))
        for a in parts
        for b in parts
        if preceq(a, b) != preceq_oracle(a, b, bound=bound)
    ]
    return _check(f"oracle-agreement k={k}", bad, f"{len(parts) ** 2} ordered pairs")


def check_order_axioms(k: int) -> dict:
    parts = partitions_of(k)
    rel = {(a, b): preceq(a, b) for a in parts for b in parts}
    bad = []
    for a in parts:
        if not rel[a, a]:
            bad.append(("reflexive", _label(a)))
    for a, b in itertools.permutations(parts, 2):
        if rel[a, b] and rel[b, a]:
            bad.append(("antisymmetric", _label(a), _label(b)))
        if rel[a, b] and not is_coarser(a, b):
            bad.append(("not coarser", _label(a), _label(b)))
    for a, b, c in itertools.product(parts, repeat=3):
        if rel[a, b] and rel[b, c] and not rel[a, c]:
            bad.append(("transitive", _label(a), _label(b), _label(c)))
    ones = IntegerPartition.ones(k)
    for a in parts:
        if a != ones and (rel[a, ones] or rel[ones, a]):
            bad.append(("1^k comparable", _label(a)))
    return _check(f"partial-order-axioms k={k}", bad, f"{len(parts)} partitions")


def check_covers(k: int, threads: int | None = None) -> dict:
    poset = hasse(k, threads=threads)
    generated = set(poset.cover_edges)
    reduced = set(transitive_reduction(poset.nodes, preceq))
    bad = [("extra", _label(a), _label(b)) for a, b in sorted(generated - reduced)]
    bad += [("missing", _label(a), _label(b)) for a, b in sorted(reduced - generated)]
    return _check(f"covers k={k}", bad, f"{len(poset.nodes)} nodes, {len(generated)} cover edges")


def check_sum_of_squares(k: int) -> dict:
    bad = []
    for mu in partitions_of(k):
        res = sum_of_squares_check(k, mu)
        if not res.equal:
            bad.append((_label(mu), res.lhs, res.rhs))
    return _check(f"sum-of-squares k={k}", bad, f"{len(partitions_of(k))} J-classes")


def check_j_classes_by_enumeration(k: int) -> dict:
    """Count J-classes element by element and compare with the formula and the squares."""
    counts = Counter(x.type() for x in enumerate_U(k))
    bad = []
    total_rhs = 0
    for mu in partitions_of(k):
        res = sum_of_squares_check(k, mu)
        total_rhs += res.rhs
        if counts[mu] != res.lhs or counts[mu] != j_class_size(k, mu):
            bad.append((_label(mu), counts[mu], res.lhs, res.rhs))
    if total_rhs != sum(counts.values()):
        bad.append(("total", sum(counts.values()), total_rhs))
    return _check(f"j-class-enumeration k={k}", bad, f"|U_{k}| = {sum(counts.values())}")


def symmetric_group_generators(k: int) -> list:
    if k < 2:
        return [from_permutation(Permutation.identity(k))]
    return [
        from_permutation(Permutation.transposition(k, 1, 2)),
        from_permutation(Permutation.from_cycles(k, tuple(range(1, k + 1)))),
    ]


def closed_unions_of_j_classes(k: int) -> list[frozenset[IntegerPartition]]:
    """Brute force: every set of non-identity types whose union with S_k is product-closed.

    Each candidate is closed under the product exactly when the monoid
    generated by S_k and one idempotent per chosen type stays inside it.
    """
    nodes = non_trivial_partitions(k)
    units = symmetric_group_generators(k)
    reps = {mu: idempotent_of(SetPartition.standard(mu)) for mu in nodes}
    closed = []
    for r in range(len(nodes) + 1):
        for chosen in itertools.combinations(nodes, r):
            allowed = set(chosen) | {IntegerPartition.ones(k)}
            generated = generated_by(k, units + [reps[mu] for mu in chosen])
            if all(x.type() in allowed for x in generated):
                closed.append(frozenset(chosen))
    return closed


def check_bijection(k: int) -> dict:
    brute = set(closed_unions_of_j_classes(k))
    lattice = {s.downset for s in all_submonoids(k)}
    bad = [("closed but not a downset", sorted(map(_label, d))) for d in brute - lattice]
    bad += [("downset but not closed", sorted(map(_label, d))) for d in lattice - brute]
    return _check(
        f"submonoid-bijection k={k}",
        bad,
        f"{2 ** len(non_trivial_partitions(k))} candidate unions, {len(brute)} closed, {len(lattice)} downsets",
    )


def check_union_closure(k: int) -> dict:
    subs = all_submonoids(k)
    bad = [s.label for s in subs if not verify_closure(s)]
    for s1, s2 in itertools.combinations_with_replacement(subs, 2):
        u = union(s1, s2)
        if not verify_closure(u):
            bad.append((s1.label, s2.label))
    return _check(f"union-closure k={k}", bad, f"{len(subs)} submonoids")


def run_suite(k: int, suite: str, threads: int | None = None) -> list[dict]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    runners: dict[str, Callable[[], list[dict]]] = {
        "order": lambda: [check_oracle_agreement(j) for j in range(2, min(k, DEFAULT_ORACLE_BOUND) + 1)]
        + [check_order_axioms(j) for j in range(2, min(k, POSET_AXIOM_BOUND) + 1)],
        "covers": lambda: [check_covers(j, threads) for j in range(2, k + 1)],
        "sumsquares": lambda: [check_sum_of_squares(k)]
        + ([check_j_classes_by_enumeration(k)] if k <= ENUMERATION_BOUND else []),
        "closure": lambda: ([check_bijection(k)] if k <= 5 else [])
        + ([check_union_closure(k)] if 1 <= k <= 6 else []),
    }
    names = [s for s in SUITES[1:]] if suite == "all" else [suite]
    results: list[dict] = []
    for name in names:
        results.extend(runners[name]())
    return results


def report(k: int, suite: str, threads: int | None = None) -> dict:
    checks = run_suite(k, suite, threads)
    return {"k": k, "suite": suite, "passed": all(c["passed"] for c in checks), "checks": checks}
