"""Tests for orbit-count formulas."""

from fractions import Fraction

import pytest

from pfhat.action import burnside_orbit_count, rational_burnside_orbit_count
from pfhat.character import character_vector, trivial_multiplicity
from pfhat.errors import ValidationError
from pfhat.models import Partition
from pfhat.numth import binomial, divisors
from pfhat.orbits import (
    F_defining_sum,
    F_of,
    a_n,
    f_weight,
    orbit_report,
    orbit_sequence,
    orbits_c1,
    orbits_cn,
    orbits_rational_c1,
    rational_orbit_report,
    subset_count,
    subset_sum_check,
)
from pfhat.symfun import frobenius, multiplicity


class TestWeights:
    """Test f_n(d), F(m, e) and a_n."""

    def test_f_weight(self) -> None:
        """Test the halved weight for even d with n/d odd."""
        assert f_weight(2, 2) == Fraction(1, 2)
        assert f_weight(12, 2) == 1
        assert f_weight(9, 3) == 1

    def test_f_weight_needs_divisor(self) -> None:
        """Test that d must divide n."""
        with pytest.raises(ValidationError):
            f_weight(6, 4)

    def test_F_examples(self) -> None:
        """Test F(3,1) = 8, F(1,3) = 1 and F(2,1) = 1."""
        assert F_of(3, 1) == 8
        assert F_of(1, 3) == 1
        assert F_of(2, 1) == 1

    def test_F_closed_form(self) -> None:
        """Test the closed form against its defining sum."""
        for m in range(1, 41):
            for e in range(1, 9):
                assert F_of(m, e) == F_defining_sum(m, e)

    def test_a_n(self) -> None:
        """Test a_1, a_2 and a_3."""
        assert a_n(1) == 1
        assert a_n(2) == Fraction(1, 2)
        assert a_n(3) == 1

    def test_a_n_inversion(self) -> None:
        """Test Σ_{d|n} d²·a_d = C(2n-1, n)."""
        for n in range(1, 31):
            assert sum(d * d * a_n(d) for d in divisors(n)) == binomial(2 * n - 1, n)


class TestClosedForms:
    """Test orbit counts of τ_{n,1}, τ_{n,n} and τ_{a,b,1}."""

    def test_c1_sequence(self) -> None:
        """Test the first nine orbit counts of τ_{n,1}."""
        assert [orbits_c1(n) for n in range(1, 10)] == [1, 1, 1, 2, 5, 13, 35, 100, 300]

    def test_c1_case_split(self) -> None:
        """Test o_{6,1} = a_6 + a_3/2."""
        assert orbits_c1(6) == a_n(6) + a_n(3) / 2 == 13

    def test_cn_examples(self) -> None:
        """Test o_{1,1} = 1 and o_{3,3} = 2."""
        assert orbits_cn(1) == 1
        assert orbits_cn(3) == 2

    @pytest.mark.parametrize("n", range(1, 7))
    def test_match_burnside(self, n: int) -> None:
        """Test both closed forms against Burnside."""
        assert orbits_c1(n) == burnside_orbit_count(n, 1)
        assert orbits_cn(n) == burnside_orbit_count(n, n)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_c1_is_trivial_multiplicity(self, n: int) -> None:
        """Test o_{n,1} against the trivial multiplicity of τ_{n,1}."""
        vector = character_vector(n, 1)
        assert orbits_c1(n) == trivial_multiplicity(vector)
        assert orbits_c1(n) == multiplicity(frobenius(vector), Partition.of(n))

    def test_large_n_is_exact(self) -> None:
        """Test that counts stay integral well past brute-force range."""
        assert orbits_c1(60) > 0
        assert orbits_cn(60) > 0

    def test_rational(self) -> None:
        """Test o_{3,2,1} = 1 and the Burnside value at (5, 3)."""
        assert orbits_rational_c1(3, 2) == 1
        assert orbits_rational_c1(5, 3) == rational_burnside_orbit_count(5, 3, 1)
        assert orbits_rational_c1(5, 2) == rational_burnside_orbit_count(5, 2, 1)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_rational_specialization(self, n: int) -> None:
        """Test that (a, b) = (n-1, n) gives o_{n,1}."""
        assert orbits_rational_c1(n - 1, n) == orbits_c1(n)

    def test_rational_needs_divisibility(self) -> None:
        """Test that b must divide a+1."""
        with pytest.raises(ValidationError):
            orbits_rational_c1(3, 5)


class TestSubsetSums:
    """Test n·o_{n,1} against subset sums of [2n-1]."""

    def test_examples(self) -> None:
        """Test n = 1, 3, 4."""
        assert subset_count(1) == 1
        assert subset_count(3) == 3
        assert subset_count(4) == 8

    @pytest.mark.parametrize("n", range(1, 10))
    def test_identity(self, n: int) -> None:
        """Test the identity by enumeration."""
        assert subset_sum_check(n)

    def test_bound(self) -> None:
        """Test that enumeration is capped."""
        with pytest.raises(ValidationError):
            subset_count(13)


class TestReports:
    """Test orbit reports and the sequence table."""

    def test_methods(self) -> None:
        """Test which closed form each c uses."""
        assert orbit_report(5, 1).method == "moebius"
        assert orbit_report(5, 5).method == "jordan-totient"
        assert orbit_report(6, 3).method == "character"

    @pytest.mark.parametrize("n,c", [(3, 3), (4, 2), (5, 1), (6, 3)])
    def test_oracle_agrees(self, n: int, c: int) -> None:
        """Test formula and Burnside agreement in the report."""
        report = orbit_report(n, c, oracle=True)
        assert report.agrees
        assert report.oracle_count == report.formula_count

    def test_rational_report(self) -> None:
        """Test the rational report with its oracle."""
        report = rational_orbit_report(3, 2, oracle=True)
        assert report.formula_count == 1
        assert report.to_json()["agrees"] is True

    def test_bad_c(self) -> None:
        """Test that c outside 1..n is rejected."""
        with pytest.raises(ValidationError):
            orbit_report(4, 5)

    def test_sequence(self) -> None:
        """Test (n, o_{n,1}, o_{n,n}) rows."""
        assert orbit_sequence(3) == [(1, 1, 1), (2, 1, 1), (3, 1, 2)]
