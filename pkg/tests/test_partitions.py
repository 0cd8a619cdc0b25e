import pytest
from hypothesis import given

from conftest import partitions
from hookschur.partitions import (
    GeneralizedPartition,
    Partition,
    SkewShape,
    conjugate,
    contains,
    enumerate_generalized,
    enumerate_partitions,
    format_parts,
    gen_column_length,
    horizontal_strips,
    parse_generalized,
    parse_partition,
    partitions_of,
)


def P(*parts):
    return Partition(parts)


def partition_count(n):
    # Euler's pentagonal recurrence, independent of the enumerator
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p


def test_canonical_form_trims_zeros():
    assert Partition((3, 1, 0, 0)).parts == (3, 1)
    assert len(P(3, 1, 0)) == 2
    assert P(3, 1).size() == 4


def test_invalid_partitions_rejected():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    with pytest.raises(ValueError):
        GeneralizedPartition(())


@pytest.mark.parametrize(
    "p, expected",
    [((3, 1), (2, 1, 1)), ((), ()), ((5, 3, 2, 1), (4, 3, 2, 1, 1))],
)
def test_conjugate_examples(p, expected):
    assert conjugate(Partition(p)) == Partition(expected)


def test_conjugate_involution_exhaustive():
    for p in enumerate_partitions(12, 12):
        assert conjugate(conjugate(p)) == p
        assert conjugate(p).size() == p.size()


@given(partitions(15))
def test_conjugate_by_cell_transpose(p):
    cells = {(j, i) for i, j in p.cells()}
    assert set(conjugate(p).cells()) == cells


@pytest.mark.parametrize("j, expected", [(-1, -1), (0, -2), (1, 4), (2, 3), (6, 0), (-2, 0)])
def test_gen_column_length_worked_example(j, expected):
    gp = GeneralizedPartition((5, 3, 2, 1, -1, -2))
    assert gen_column_length(gp, j) == expected


@given(partitions(10, 5))
def test_gen_column_length_matches_conjugate(p):
    gp = GeneralizedPartition.padded(p.parts, max(len(p), 1))
    c = conjugate(p)
    for j in range(1, p[0] + 2):
        assert gen_column_length(gp, j) == c[j - 1]


def test_contains():
    assert contains(P(3, 2), P(2, 1))
    assert not contains(P(3, 2), P(1, 1, 1))
    for p in enumerate_partitions(5, 5):
        assert contains(p, p)


def test_enumerate_partitions_examples():
    assert enumerate_partitions(2, 2) == [P(), P(1), P(2), P(1, 1)]
    assert enumerate_partitions(0, 5) == [P()]
    assert len(enumerate_partitions(4, 4)) == 12


def test_enumerate_partitions_counts():
    counts = partition_count(14)
    for n in range(15):
        assert len(enumerate_partitions(n, n)) == sum(counts[: n + 1])
        assert len(partitions_of(n)) == counts[n]


def test_enumerate_partitions_unique_and_bounded():
    ps = enumerate_partitions(7, 3)
    assert len(set(ps)) == len(ps)
    assert all(p.size() <= 7 and len(p) <= 3 for p in ps)


def test_enumerate_generalized_examples():
    g = GeneralizedPartition
    assert enumerate_generalized(1, 1) == [g((-1,)), g((0,)), g((1,))]
    assert enumerate_generalized(1, 2) == [g((-1, -1)), g((0, -1)), g((0, 0)), g((1, -1)), g((1, 0)), g((1, 1))]
    for m in range(5):
        assert len(enumerate_generalized(m, 1)) == 2 * m + 1


def test_enumerate_generalized_is_complete():
    from itertools import product

    brute = {t for t in product(range(-2, 3), repeat=3) if t[0] >= t[1] >= t[2]}
    got = [gp.parts for gp in enumerate_generalized(2, 3)]
    assert len(got) == len(set(got))
    assert set(got) == brute


def test_generalized_padding_and_shift():
    gp = GeneralizedPartition.padded((2, -1), 4)
    assert gp.parts == (2, 0, 0, -1)
    assert gp.declared_length == 4
    assert gp.shift(1).parts == (3, 1, 1, 0)
    assert gp.shift(1).is_partition()
    assert not gp.is_partition()


def test_skew_shape():
    s = SkewShape(P(3, 2), P(1))
    assert s.size() == 4
    assert s.cells() == [(0, 1), (0, 2), (1, 0), (1, 1)]
    with pytest.raises(ValueError):
        SkewShape(P(1), P(2))


def test_horizontal_strips_brute_force():
    outer = P(4, 2, 1)
    found = set(horizontal_strips(outer, P()))
    brute = set()
    for nu in enumerate_partitions(outer.size(), 3):
        if contains(outer, nu) and all(outer[i + 1] <= nu[i] for i in range(3)):
            brute.add(nu)
    assert found == brute


def test_parse_and_format():
    assert parse_partition("3,1") == P(3, 1)
    assert parse_partition("") == P()
    assert parse_partition("0") == P()
    assert parse_generalized("5,3,2,1,-1,-2", 6).parts == (5, 3, 2, 1, -1, -2)
    assert parse_generalized("1,-1", 3).parts == (1, 0, -1)
    assert format_parts((5, -1)) == "(5,-1)"
    with pytest.raises(ValueError):
        parse_partition("3,x")
    with pytest.raises(ValueError):
        parse_generalized("1,2,3", 2)
