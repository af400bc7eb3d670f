from fractions import Fraction
from math import factorial

import pytest

from models.partition import Partition, concat_sort, n_stat, partitions_of, z_stat


def brute_force_count(n: int, largest: int) -> int:
    if n == 0:
        return 1
    return sum(brute_force_count(n - part, part) for part in range(1, min(n, largest) + 1))


def test_partitions_of_three():
    assert partitions_of(3) == (Partition((3,)), Partition((2, 1)), Partition((1, 1, 1)))


def test_partitions_of_zero():
    assert partitions_of(0) == (Partition(),)


def test_partitions_of_five():
    assert len(partitions_of(5)) == 7


@pytest.mark.parametrize("n", range(13))
def test_partition_counts(n):
    found = partitions_of(n)
    assert len(found) == brute_force_count(n, n)
    assert len(set(found)) == len(found)
    assert list(found) == sorted(found, reverse=True)
    assert all(lam.size == n for lam in found)


def test_z_stat():
    assert z_stat(Partition((2, 1))) == 2
    assert z_stat(Partition((1, 1, 1))) == 6
    assert z_stat(Partition()) == 1


@pytest.mark.parametrize("n", range(11))
def test_class_equation(n):
    assert sum(Fraction(factorial(n), z_stat(lam)) for lam in partitions_of(n)) == factorial(n)


def test_n_stat():
    assert n_stat(Partition((7,))) == 0
    assert n_stat(Partition((2, 2, 1))) == 4
    assert n_stat(Partition((1, 1))) == 1
    for n in range(1, 8):
        assert n_stat(Partition((1,) * n)) == n * (n - 1) // 2


def test_concat_sort():
    assert concat_sort(Partition((2, 1)), Partition((3,))) == Partition((3, 2, 1))
    assert concat_sort(Partition(), Partition((2,))) == Partition((2,))
    assert concat_sort(Partition((1, 1)), Partition((1,))) == Partition((1, 1, 1))


def test_refines():
    assert Partition((2, 1, 1)).refines(Partition((3, 1)))
    assert Partition((2, 2)).refines(Partition((4,)))
    assert not Partition((2, 2)).refines(Partition((3, 1)))
    assert Partition((3, 1)).refines(Partition((3, 1)))


@pytest.mark.parametrize("parts", [(1, 2), (2, 0), (-1,)])
def test_invalid_partition(parts):
    with pytest.raises(ValueError):
        Partition(parts)


def test_record_form():
    assert Partition((2, 1)).to_record() == [2, 1]
    assert Partition.from_record([2, 1]) == Partition((2, 1))
    assert str(Partition((2, 1))) == "[2,1]"
    with pytest.raises(ValueError):
        Partition.from_record([1, 2])
    with pytest.raises(ValueError):
        Partition.from_record([True])
    with pytest.raises(ValueError):
        Partition.from_record([2, False])
