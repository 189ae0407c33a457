from math import factorial

import pytest

import golden
from oracles import standard_fillings
from ubp.diagrams import j_class_size, u_size
from ubp.partitions import IntegerPartition, partitions_of
from ubp.repdims import (
    PartitionVector,
    dim_irreducible,
    partition_vectors,
    report,
    report_csv,
    standard_tableaux_count,
    sum_of_squares_check,
    typevec,
    vectors_of_type,
)

P = IntegerPartition.parse


@pytest.mark.parametrize("n", range(0, 8))
def test_hook_length_matches_fillings(n):
    for lam in partitions_of(n):
        assert standard_tableaux_count(lam) == standard_fillings(lam.parts)


@pytest.mark.parametrize("n", range(0, 13))
def test_sum_of_squared_tableaux_counts(n):
    assert sum(standard_tableaux_count(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("lam, f", [("21", 2), ("321", 16), ("33", 5), ("4", 1), ("2211", 9)])
def test_tableaux_examples(lam, f):
    assert standard_tableaux_count(P(lam)) == f


def test_vectors_for_k2():
    assert [str(v) for v in partition_vectors(2)] == ["((2), ∅)", "((1,1), ∅)", "(∅, (1))"]


def test_typevec_and_dim_examples():
    v = PartitionVector((P("1"), P("1"), ()))
    assert v.k == 3
    assert typevec(v) == P("21")
    assert dim_irreducible(v) == 3
    w = PartitionVector(((), P("2"), ()))
    assert typevec(w) == P("22")
    assert dim_irreducible(w) == 3
    assert dim_irreducible(PartitionVector((P("21"), (), ()))) == 2


@pytest.mark.parametrize("k", range(0, 9))
def test_vectors_partition_by_type(k):
    vecs = partition_vectors(k)
    assert all(v.k == k for v in vecs)
    assert len(set(vecs)) == len(vecs)
    by_type = sum((vectors_of_type(k, mu) for mu in partitions_of(k)), [])
    assert sorted(by_type, key=str) == sorted(vecs, key=str)
    for mu in partitions_of(k):
        assert all(typevec(v) == mu for v in vectors_of_type(k, mu))


@pytest.mark.parametrize("k", range(0, 11))
def test_sum_of_squares_identity(k):
    for mu in partitions_of(k):
        res = sum_of_squares_check(k, mu)
        assert res.equal and res.lhs == res.rhs == j_class_size(k, mu)
    assert sum(dim_irreducible(v) ** 2 for v in partition_vectors(k)) == u_size(k)


@pytest.mark.parametrize("k", range(0, 8))
def test_total_matches_enumerated_sizes(k):
    assert sum(sum_of_squares_check(k, mu).rhs for mu in partitions_of(k)) == golden.U_SIZES[k]


def test_sum_of_squares_examples():
    assert tuple(sum_of_squares_check(4, P("22"))) == (18, 18, True)
    assert tuple(sum_of_squares_check(4, P("211"))) == (72, 72, True)
    with pytest.raises(ValueError):
        sum_of_squares_check(4, P("21"))


def test_report_rows():
    rows = report(3)
    assert [r["mu"] for r in rows] == ["3", "2,1", "1,1,1"]
    assert rows[1]["irreducibles"] == [{"vector": [[1], [1], []], "dim": 3}]
    assert all(r["equal"] for r in rows)


def test_report_csv():
    text = report_csv(2)
    assert text.splitlines() == [
        "mu,j_class_size,irreducibles,sum_of_squares,equal",
        "2,1,[|1]:1,1,True",
        '"1,1",2,"[2|]:1;[1,1|]:1",2,True',
    ]
