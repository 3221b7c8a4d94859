"""Tests for the S_n action on extended parking functions."""

import itertools

import pytest

from pfhat.action import (
    UnionFind,
    apply,
    apply_rational,
    brute_character,
    brute_character_vector,
    brute_rational_character,
    build_epf_set,
    build_rational_epf_set,
    burnside_orbit_count,
    generators,
    orbit_decomposition,
    rational_burnside_orbit_count,
    rational_orbit_decomposition,
    rational_restricted_character,
    restricted_character,
)
from pfhat.character import character_vector
from pfhat.errors import ValidationError
from pfhat.models import ExtendedPF, Partition, Permutation
from pfhat.numth import partitions_of
from pfhat.parking import classical_character, rational_classical_character


class TestBuildSet:
    """Test construction of PF̂_{n,c}."""

    def test_listings_n3(self) -> None:
        """Test the n = 3 listings for c = 1 and c = 3."""
        assert [x.word for x in build_epf_set(3, 1)] == ["001", "010", "100"]
        assert [x.word for x in build_epf_set(3, 3)] == ["000", "012", "102"]

    @pytest.mark.parametrize("c", [1, 2, 3, 4])
    def test_size(self, c: int) -> None:
        """Test |PF̂_{4,c}| = 16."""
        elements = build_epf_set(4, c)
        assert len(elements) == 16
        assert all(sum(x.coords) % 4 == c % 4 for x in elements)

    def test_n1(self) -> None:
        """Test the degenerate single-point set."""
        assert [x.coords for x in build_epf_set(1, 1)] == [(0,)]

    def test_rational_size(self) -> None:
        """Test |PF̂_{a,b,c}| = b^{a-1}."""
        assert len(build_rational_epf_set(3, 2, 1)) == 4
        assert len(build_rational_epf_set(5, 3, 1)) == 81

    def test_rejects_bad_c(self) -> None:
        """Test that c must lie in 1..n."""
        with pytest.raises(ValidationError):
            build_epf_set(4, 0)
        with pytest.raises(ValidationError):
            build_epf_set(4, 5)


class TestApply:
    """Test the twisted coordinate action."""

    def test_worked_example(self) -> None:
        """Test 1432 · 0003 = 1011 in PF̂_{4,3}."""
        x = ExtendedPF((0, 0, 0, 3), 4, 3)
        assert apply(Permutation.parse("1432"), x).word == "1011"

    def test_transposition_without_shift(self) -> None:
        """Test 213 · 011 = 101 in PF̂_{3,2}."""
        x = ExtendedPF((0, 1, 1), 3, 2)
        assert apply(Permutation.parse("213"), x).word == "101"

    def test_identity(self, epf_4_3: list[ExtendedPF]) -> None:
        """Test that the identity fixes every element."""
        e = Permutation.identity(4)
        assert all(apply(e, x) == x for x in epf_4_3)

    def test_stays_in_set(self, epf_4_3: list[ExtendedPF], s4: list[Permutation]) -> None:
        """Test that every image lies in PF̂_{4,3}."""
        members = set(epf_4_3)
        assert all(apply(p, x) in members for p in s4 for x in epf_4_3)

    def test_is_bijective(self, epf_4_3: list[ExtendedPF], s4: list[Permutation]) -> None:
        """Test that each permutation permutes the set."""
        for p in s4:
            assert len({apply(p, x) for x in epf_4_3}) == len(epf_4_3)

    def test_homomorphism(self, epf_4_3: list[ExtendedPF], s4: list[Permutation]) -> None:
        """Test apply(p, apply(q, x)) == apply(p.compose(q), x)."""
        for p in s4[::5]:
            for q in s4:
                for x in epf_4_3:
                    assert apply(p, apply(q, x)) == apply(p.compose(q), x)

    def test_rejects_non_member(self) -> None:
        """Test that an element outside PF̂_{3,1} cannot reach the action."""
        with pytest.raises(ValidationError):
            apply(Permutation.identity(3), ExtendedPF((2, 2, 2), 3, 1))

    def test_image_keeps_sum(self, epf_4_3: list[ExtendedPF], s4: list[Permutation]) -> None:
        """Test that every image still sums to its target."""
        for p in s4:
            for x in epf_4_3:
                y = apply(p, x)
                assert y.target == 3
                assert sum(y.coords) % 4 == 3

    def test_degree_mismatch(self) -> None:
        """Test that a permutation of the wrong degree is rejected."""
        with pytest.raises(ValidationError):
            apply(Permutation.parse("21"), ExtendedPF((0, 0, 0), 3, 3))

    def test_rational_stays_in_set(self) -> None:
        """Test the rational action on PF̂_{3,2,1}."""
        elements = build_rational_epf_set(3, 2, 1)
        members = set(elements)
        for g in generators(4):
            assert {apply_rational(g, x) for x in elements} == members

    def test_rational_needs_divisibility(self) -> None:
        """Test that b must divide a+1."""
        x = build_rational_epf_set(3, 5, 1)[0]
        with pytest.raises(ValidationError):
            apply_rational(Permutation.identity(4), x)


class TestActionAxioms:
    """Test the action exhaustively on small degrees, every c."""

    @staticmethod
    def _tables(n: int, c: int) -> tuple[list[Permutation], dict[Permutation, list[int]]]:
        elements = build_epf_set(n, c)
        index = {x: i for i, x in enumerate(elements)}
        perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
        return perms, {p: [index[apply(p, x)] for x in elements] for p in perms}

    def _check(self, n: int) -> None:
        for c in range(1, n + 1):
            perms, table = self._tables(n, c)
            size = len(table[perms[0]])
            assert table[Permutation.identity(n)] == list(range(size))
            for p in perms:
                assert sorted(table[p]) == list(range(size))
                for q in perms:
                    composed = table[p.compose(q)]
                    assert composed == [table[p][j] for j in table[q]]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_axioms(self, n: int) -> None:
        """Test identity, bijectivity and apply(p, apply(q, x)) == apply(p.compose(q), x)."""
        self._check(n)

    @pytest.mark.slow
    def test_axioms_n5(self) -> None:
        """Test the same axioms on all of S_5."""
        self._check(5)

    @pytest.mark.parametrize("a,b", [(2, 3), (3, 2), (3, 4), (5, 2), (5, 3), (5, 6)])
    def test_rational_closure(self, a: int, b: int) -> None:
        """Test that each generator permutes PF̂_{a,b,c} for every c."""
        for c in range(1, b + 1):
            members = set(build_rational_epf_set(a, b, c))
            for g in generators(a + 1):
                assert {apply_rational(g, x) for x in members} == members


class TestBruteForce:
    """Test fixed-point counts and Burnside orbit counts."""

    def test_fixed_points(self) -> None:
        """Test the n = 3 values."""
        assert brute_character(3, 1, Partition.of(2, 1)) == 1
        assert brute_character(3, 3, Partition.of(3)) == 3
        assert brute_character(3, 1, Partition.of(3)) == 0

    def test_rational_fixed_points(self) -> None:
        """Test PF̂_{3,4,1} at a transposition."""
        assert brute_rational_character(3, 4, 1, Partition.of(2, 1, 1)) == 4

    def test_vector_matches_closed_form(self) -> None:
        """Test the process-mapped vector against the closed form."""
        brute = brute_character_vector(4, 2, workers=1)
        assert brute.values == character_vector(4, 2).values

    @pytest.mark.parametrize("n", range(2, 7))
    def test_restriction(self, n: int) -> None:
        """Test that restricting to S_{n-1} gives the character of PF_{n-1}, every c."""
        for c in range(1, n + 1):
            for mu in partitions_of(n - 1):
                assert restricted_character(n, c, mu) == classical_character(n - 1, mu)

    def test_rational_restriction(self) -> None:
        """Test that restricting τ_{5,3,1} to S_5 gives the character of PF_{5,3}."""
        for mu in partitions_of(5):
            assert rational_restricted_character(5, 3, 1, mu) == rational_classical_character(
                5, 3, mu
            )

    def test_burnside(self) -> None:
        """Test small orbit counts."""
        assert burnside_orbit_count(3, 3) == 2
        assert burnside_orbit_count(3, 1) == 1
        assert burnside_orbit_count(4, 1) == 2
        assert rational_burnside_orbit_count(3, 2, 1) == 1


class TestOrbits:
    """Test explicit orbit decomposition."""

    def test_generators(self) -> None:
        """Test adjacent transpositions plus the long cycle."""
        assert generators(1) == []
        assert len(generators(4)) == 4

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_burnside(self, n: int) -> None:
        """Test that orbits cover the set and match the Burnside count, every c."""
        for c in range(1, n + 1):
            orbits = orbit_decomposition(n, c)
            assert len(orbits) == burnside_orbit_count(n, c)
            covered = sorted(x.coords for orbit in orbits for x in orbit)
            assert covered == sorted(x.coords for x in build_epf_set(n, c))

    def test_orbits_are_closed(self) -> None:
        """Test that every orbit is invariant under the generators."""
        for orbit in orbit_decomposition(4, 3):
            members = set(orbit)
            assert all(apply(g, x) in members for g in generators(4) for x in orbit)

    def test_rational(self) -> None:
        """Test the rational decomposition against Burnside."""
        assert len(rational_orbit_decomposition(5, 3, 1)) == rational_burnside_orbit_count(
            5, 3, 1
        )


class TestUnionFind:
    """Test the disjoint-set helper."""

    def test_groups(self) -> None:
        """Test merging and grouping."""
        uf = UnionFind("abcde")
        uf.union("a", "b")
        uf.union("d", "e")
        uf.union("b", "a")
        groups = sorted(sorted(g) for g in uf.groups())
        assert groups == [["a", "b"], ["c"], ["d", "e"]]
        assert uf.find("a") == uf.find("b")
        assert len(uf) == 3
