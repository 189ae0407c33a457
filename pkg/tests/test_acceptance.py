"""The twelve acceptance criteria, each reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they are
produced; they are also repeated in the terminal summary.
"""

import itertools
import random
import time
from collections import Counter
from contextlib import contextmanager

import golden
from ubp.diagrams import UniformBlockPermutation, enumerate_U, j_class_size
from ubp.order import (
    PartitionPoset,
    hasse,
    interval,
    join_witness,
    non_trivial_partitions,
    preceq,
    preceq_oracle,
    transitive_reduction,
)
from ubp.partitions import IntegerPartition, join_all, partitions_of, type_of
from ubp.repdims import sum_of_squares_check
from ubp.submonoids import (
    all_submonoids,
    count_submonoids,
    intersection,
    lattice_dumps,
    union,
    verify_closure,
)
from ubp.verify import closed_unions_of_j_classes

LINES: list[str] = []
ASSOCIATIVITY_TRIPLES = 100_000


@contextmanager
def criterion(number: int, title: str, time_limit: float | None = None):
    failures: list[str] = []
    start = time.perf_counter()
    try:
        yield failures
    except Exception as exc:  # report, then fail below
        failures.append(f"{type(exc).__name__}: {exc}")
    elapsed = time.perf_counter() - start
    if time_limit is not None and elapsed > time_limit:
        failures.append(f"took {elapsed:.1f}s, limit {time_limit:.0f}s")
    status = "PASS" if not failures else "FAIL"
    line = f"[{status}] criterion {number:2d}: {title} ({elapsed:.1f}s)"
    if failures:
        line += " :: " + "; ".join(failures[:5])
    print(line)
    LINES.append(line)
    assert not failures, line


def expect(failures: list[str], actual, expected, what: str) -> None:
    if actual != expected:
        failures.append(f"{what}: got {actual!r}, expected {expected!r}")


def signed(blocks):
    return frozenset(frozenset(b) for b in blocks)


def test_criterion_01_monoid_sizes():
    with criterion(1, "|U_k| for k = 0..7 by full enumeration", time_limit=60) as f:
        sizes = [sum(1 for _ in enumerate_U(k)) for k in range(8)]
        expect(f, sizes, golden.U_SIZES, "sizes")


def test_criterion_02_worked_product():
    with criterion(2, "worked product and top/bot/type in U_9") as f:
        x = UniformBlockPermutation.from_json({"k": 9, "blocks": golden.PRODUCT_LEFT})
        y = UniformBlockPermutation.from_json({"k": 9, "blocks": golden.PRODUCT_RIGHT})
        expect(f, signed((x * y).signed_blocks()), signed(golden.PRODUCT_RESULT), "product")
        pi = UniformBlockPermutation.from_json({"k": 9, "blocks": golden.EXAMPLE_PI})
        expect(f, signed(pi.top().blocks), signed(golden.EXAMPLE_PI_TOP), "top")
        expect(f, signed(pi.bot().blocks), signed(golden.EXAMPLE_PI_BOT), "bot")
        expect(f, pi.type().parts, golden.EXAMPLE_PI_TYPE, "type")


def test_criterion_03_submonoid_counts():
    with criterion(3, "n_k for k = 1..12", time_limit=300) as f:
        for k in range(1, 13):
            expect(f, count_submonoids(k), golden.N_K[k], f"n_{k}")


def test_criterion_03_extended_counts():
    with criterion(3, "n_k for k = 13, 14 (extended)", time_limit=1800) as f:
        for k in (13, 14):
            expect(f, count_submonoids(k), golden.N_K[k], f"n_{k}")


def test_criterion_04_hasse_six():
    with criterion(4, "hasse(6): 10 nodes, 15 edges, covers = reduction = reference") as f:
        poset = hasse(6)
        edges = {(a.label(), b.label()) for a, b in poset.cover_edges}
        reduced = {(a.label(), b.label()) for a, b in transitive_reduction(poset.nodes, preceq)}
        expect(f, len(poset.nodes), 10, "nodes")
        expect(f, len(poset.cover_edges), 15, "edges")
        expect(f, edges, reduced, "covers vs reduction")
        expect(f, edges, golden.HASSE_6_EDGES, "covers vs reference")


def test_criterion_05_oracle_equivalence():
    with criterion(5, "join-closure oracle agrees with smallest-part test, k = 2..6", time_limit=600) as f:
        for k in range(2, 7):
            parts = partitions_of(k)
            bad = [(a.label(), b.label()) for a in parts for b in parts if preceq(a, b) != preceq_oracle(a, b)]
            expect(f, bad, [], f"disagreements at k={k}")


def test_criterion_06_submonoid_lattices():
    expected = {
        4: [24, 25, 41, 43, 59, 131],
        5: [120, 121, 146, 221, 246, 346, 446, 696, 896, 1496],
    }
    with criterion(6, "submonoid lattices for k = 4, 5, 6") as f:
        for k, count in ((4, 6), (5, 10), (6, 31)):
            subs = all_submonoids(k)
            expect(f, len(subs), count, f"count at k={k}")
            expect(f, {s.label: s.size for s in subs}, golden.LATTICE[k], f"labels at k={k}")
            if k in expected:
                expect(f, sorted(s.size for s in subs), expected[k], f"sizes at k={k}")
        expect(f, max(s.size for s in all_submonoids(6)), 22482, "max size at k=6")


def test_criterion_07_bijection():
    with criterion(7, "closed unions of J-classes are exactly the downsets, k = 4, 5") as f:
        for k in (4, 5):
            closed = closed_unions_of_j_classes(k)
            downsets = {s.downset for s in all_submonoids(k)}
            expect(f, len(closed), len(set(closed)), f"duplicates at k={k}")
            expect(f, set(closed), downsets, f"closed unions at k={k}")


def test_criterion_08_union_closure_and_distributivity():
    with criterion(8, "unions are closed (k <= 6), distributive laws (k <= 5)") as f:
        for k in range(1, 7):
            subs = all_submonoids(k)
            bad = [(a.label, b.label) for a, b in itertools.combinations_with_replacement(subs, 2)
                   if not verify_closure(union(a, b))]
            expect(f, bad, [], f"non-closed unions at k={k}")
        for k in range(1, 6):
            subs = all_submonoids(k)
            bad = [
                (a.label, b.label, c.label)
                for a, b, c in itertools.product(subs, repeat=3)
                if intersection(a, union(b, c)) != union(intersection(a, b), intersection(a, c))
                or union(a, intersection(b, c)) != intersection(union(a, b), union(a, c))
            ]
            expect(f, bad, [], f"distributivity at k={k}")


def test_criterion_09_sum_of_squares():
    with criterion(9, "sum-of-squares identity (k <= 10), enumeration (k <= 6), totals (k <= 7)") as f:
        for k in range(0, 11):
            bad = [mu.label() for mu in partitions_of(k) if not sum_of_squares_check(k, mu).equal]
            expect(f, bad, [], f"identity at k={k}")
        for k in range(0, 7):
            counts = Counter(x.type() for x in enumerate_U(k))
            expect(f, dict(counts), {mu: sum_of_squares_check(k, mu).lhs for mu in partitions_of(k)}, f"lhs at k={k}")
        for k in range(0, 8):
            total = sum(sum_of_squares_check(k, mu).rhs for mu in partitions_of(k))
            expect(f, total, golden.U_SIZES[k], f"total at k={k}")


def test_criterion_10_interval():
    with criterion(10, "interval [874, 653221] in partitions of 19", time_limit=60) as f:
        iv = interval(IntegerPartition((8, 7, 4)), IntegerPartition((6, 5, 3, 2, 2, 1)))
        expect(f, len(iv.nodes), 14, "nodes")
        expect(f, len(iv.cover_edges), 24, "edges")
        expect(f, {n.label() for n in iv.nodes}, golden.INTERVAL_19_NODES, "node set")
        expect(f, {(a.label(), b.label()) for a, b in iv.cover_edges}, golden.INTERVAL_19_EDGES, "edge set")


def test_criterion_11_witness_soundness():
    with criterion(11, "join witnesses for every comparable pair, k <= 7") as f:
        checked = 0
        for k in range(2, 8):
            for mu, lam in itertools.product(non_trivial_partitions(k), repeat=2):
                if not preceq(mu, lam):
                    continue
                w = join_witness(mu, lam)
                checked += 1
                if not w or any(type_of(pi) != lam for pi in w) or type_of(join_all(w)) != mu:
                    f.append(f"bad witness for {mu.label()} <= {lam.label()}")
        if checked == 0:
            f.append("no pairs checked")


def test_criterion_12_property_suites():
    with criterion(12, "order axioms, associativity in U_6, round-trips, thread determinism") as f:
        for k in range(1, 11):
            parts = partitions_of(k)
            rel = {(a, b): preceq(a, b) for a in parts for b in parts}
            if not all(rel[a, a] for a in parts):
                f.append(f"reflexivity at k={k}")
            if any(rel[a, b] and rel[b, a] for a, b in itertools.permutations(parts, 2)):
                f.append(f"antisymmetry at k={k}")
            if any(rel[a, b] and rel[b, c] and not rel[a, c] for a, b, c in itertools.product(parts, repeat=3)):
                f.append(f"transitivity at k={k}")

        rng = random.Random(61016)
        u6 = list(enumerate_U(6))
        failures = 0
        for _ in range(ASSOCIATIVITY_TRIPLES):
            x, y, z = rng.choice(u6), rng.choice(u6), rng.choice(u6)
            if (x * y) * z != x * (y * z):
                failures += 1
        expect(f, failures, 0, f"associativity failures in {ASSOCIATIVITY_TRIPLES} triples")

        for x in enumerate_U(4):
            if UniformBlockPermutation.from_json(x.dumps()) != x:
                f.append(f"element round-trip {x}")
        for x in rng.sample(u6, 2000):
            if UniformBlockPermutation.from_json(x.dumps()) != x:
                f.append(f"element round-trip {x}")
        for k in range(2, 12):
            poset = hasse(k)
            expect(f, PartitionPoset.from_json(poset.dumps()), poset, f"poset round-trip at k={k}")

        for k in range(2, 12):
            expect(f, len({hasse(k, threads=t).dumps() for t in (1, 2, 4, 8)}), 1, f"poset JSON across threads, k={k}")
            expect(f, len({hasse(k, threads=t).to_dot() for t in (1, 2, 4, 8)}), 1, f"poset DOT across threads, k={k}")
        expect(f, lattice_dumps(all_submonoids(6)), lattice_dumps(all_submonoids(6)), "lattice export is stable")
        expect(f, sum(j_class_size(6, mu) for mu in partitions_of(6)), len(u6), "U_6 size")
