"""Tests for the isomorphism classification of τ_{n,1}, .., τ_{n,n}."""

import pytest

from pfhat.character import chi
from pfhat.classify import (
    area_class,
    c_set,
    character_classes,
    class_count,
    class_count_by_divisors,
    classify,
    d_set,
    separating_partition,
    verify_area_iso,
)
from pfhat.errors import ValidationError
from pfhat.models import Partition
from pfhat.numth import divisors


class TestDivisorSets:
    """Test D_n and C_{n,k}."""

    def test_d_set(self) -> None:
        """Test D_12 and D_6."""
        assert d_set(12) == [1, 2, 3, 6]
        assert d_set(6) == [1, 3]

    def test_d_set_odd(self) -> None:
        """Test that every divisor of an odd n is in D_n."""
        for n in [1, 9, 15, 21]:
            assert d_set(n) == divisors(n)

    def test_c_set(self) -> None:
        """Test the C_{12,k} listings."""
        assert c_set(12, 1) == [1, 5, 7, 11]
        assert c_set(12, 3) == [3, 9]
        assert c_set(12, 6) == [6, 12]

    def test_c_set_rejects_k(self) -> None:
        """Test that k must lie in D_n."""
        with pytest.raises(ValidationError):
            c_set(12, 4)

    def test_class_count(self) -> None:
        """Test |D_12| = 4 and |D_6| = 2."""
        assert class_count(12) == 4
        assert class_count(6) == 2

    def test_counts_agree(self) -> None:
        """Test |D_n| against divisors not congruent to 2 mod 4."""
        for n in range(1, 301):
            assert len(d_set(n)) == class_count_by_divisors(n)


class TestClassify:
    """Test the partition of [n] into isomorphism classes."""

    def test_n6(self) -> None:
        """Test C_{6,1} = {1,2,4,5} and C_{6,3} = {3,6}."""
        assert classify(6).fibers() == {1: [1, 2, 4, 5], 3: [3, 6]}

    def test_n1(self) -> None:
        """Test the single class at n = 1."""
        result = classify(1)
        assert result.fibers() == {1: [1]}
        assert result.class_count == 1

    def test_n12(self) -> None:
        """Test the four fibers at n = 12."""
        assert classify(12).fibers() == {
            1: [1, 5, 7, 11],
            2: [2, 4, 8, 10],
            3: [3, 9],
            6: [6, 12],
        }

    def test_partitions_range(self) -> None:
        """Test that the C_{n,k} partition [n]."""
        for n in range(1, 201):
            assert sorted(classify(n).class_index) == list(range(1, n + 1))

    @pytest.mark.parametrize("n", range(1, 13))
    def test_matches_characters(self, n: int) -> None:
        """Test that equal characters group c exactly as C_{n,k} does."""
        fibers = sorted(classify(n).fibers().values())
        assert character_classes(n) == fibers
        assert len(fibers) == class_count(n)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_separating_class(self, n: int) -> None:
        """Test that (k^{n/k}) separates k from every smaller k' in D_n."""
        ks = d_set(n)
        for k in ks:
            lam = separating_partition(k, n)
            assert chi(n, k, lam) != 0
            assert all(chi(n, k2, lam) == 0 for k2 in ks if k2 < k)

    def test_separating_partition(self) -> None:
        """Test the shape and the divisibility check."""
        assert separating_partition(3, 6) == Partition.of(3, 3)
        with pytest.raises(ValidationError):
            separating_partition(4, 6)


class TestAreaClass:
    """Test the c reached from c = 1 by the area statistic."""

    def test_examples(self) -> None:
        """Test odd n give 1 and even n give 1 + n/2."""
        assert area_class(5) == 1
        assert area_class(6) == 4
        assert area_class(4) == 3
        for n in range(3, 30, 2):
            assert area_class(n) == 1
        for n in range(2, 30, 2):
            assert area_class(n) == 1 + n // 2

    @pytest.mark.parametrize("n", range(2, 13))
    def test_isomorphic(self, n: int) -> None:
        """Test that τ_{n, area_class(n)} has the character of τ_{n,1}."""
        assert verify_area_iso(n)

    def test_small_n(self) -> None:
        """Test that n = 1 is rejected."""
        with pytest.raises(ValidationError):
            area_class(1)
