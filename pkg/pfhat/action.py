"""Extended parking functions and the shift-corrected actions τ_{n,c}, τ_{a,b,c}.

The classical set PF̂_{n,c} is handled as the rational set PF̂_{a,b,c} with
``a = n-1`` and ``b = n``, so a single code path serves both. A permutation π
acts by ``(x_1, .., x_{a+1}) -> (x_{π_1}, .., x_{π_{a+1}}) + (y, .., y)`` where
``y`` is the unique residue mod ``b`` that makes the first ``a`` coordinates a
parking function. ``b | (a+1)`` keeps the coordinate sum fixed.
"""

import logging
from collections.abc import Hashable, Iterable, Sequence
from fractions import Fraction
from functools import lru_cache, partial
from typing import Callable, Optional

from pfhat.errors import InvariantError, ValidationError
from pfhat.models import CharacterVector, ExtendedPF, Partition, Permutation
from pfhat.numth import partitions_of, z_of
from pfhat.parking import check_coprime, enumerate_rational, satisfies_bound
from pfhat.settings import parallel_map

log = logging.getLogger(__name__)

Coords = tuple[int, ...]


class UnionFind:
    """Disjoint sets with union by rank and path compression."""

    def __init__(self, items: Iterable[Hashable]) -> None:
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        del self.rank[y]

    def __len__(self) -> int:
        return len(self.rank)

    def groups(self) -> list[list]:
        """Classes in first-seen order, each in insertion order."""
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return list(out.values())


def _check_classical(n: int, c: int) -> None:
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if not 1 <= c <= n:
        raise ValidationError(f"c must lie in 1..{n}, got {c}")


def _check_rational(a: int, b: int, c: int) -> None:
    check_coprime(a, b)
    if not 1 <= c <= b:
        raise ValidationError(f"c must lie in 1..{b}, got {c}")


def _check_divides(a: int, b: int) -> None:
    if (a + 1) % b:
        raise ValidationError(f"the action needs b | a+1, got a={a}, b={b}")


@lru_cache(maxsize=64)
def _coords(a: int, b: int, c: int) -> tuple[Coords, ...]:
    if a == 0:
        heads: Sequence[Coords] = [()]
    else:
        heads = enumerate_rational(a, b)
    out = tuple((*head, (c - sum(head)) % b) for head in heads)
    log.debug("built PF^(%d,%d,%d) with %d elements", a, b, c, len(out))
    return out


def _classical_coords(n: int, c: int) -> tuple[Coords, ...]:
    # PF^_{n,c} is PF^_{n-1,n,c}; PF_{n-1} is the (n-1, n) family.
    return _coords(n - 1, n, c)


def build_epf_set(n: int, c: int) -> list[ExtendedPF]:
    """All ``n^{n-2}`` elements of PF̂_{n,c}, ordered by their head.

    Args:
        n: Degree.
        c: Target sum in ``1..n``; ``c = n`` means residue 0.

    Example:
        >>> [str(x) for x in build_epf_set(3, 3)]
        ['000', '012', '102']
    """
    _check_classical(n, c)
    return [ExtendedPF(x, n, c) for x in _classical_coords(n, c)]


def build_rational_epf_set(a: int, b: int, c: int) -> list[ExtendedPF]:
    """All ``b^{a-1}`` elements of PF̂_{a,b,c}: an (a,b)-parking function plus a residue."""
    _check_rational(a, b, c)
    return [ExtendedPF(x, b, c) for x in _coords(a, b, c)]


def _act(perm: Sequence[int], x: Coords, a: int, b: int) -> Coords:
    """``perm`` is zero-based; ``x`` has length ``a+1``."""
    moved = [x[p] for p in perm]
    for y in range(b):
        head = [(v + y) % b for v in moved[:a]]
        if satisfies_bound(head, a, b):
            return (*head, (moved[a] + y) % b)
    raise InvariantError(f"no shift parks the image of {x}")


def apply(perm: Permutation, x: ExtendedPF) -> ExtendedPF:
    """τ_{n,c}(π)·x.

    Args:
        perm: Permutation of ``[n]``.
        x: Element of PF̂_{n,c}.

    Returns:
        The image, again in PF̂_{n,c}.

    Example:
        >>> x = ExtendedPF((0, 0, 0, 3), 4, 3)
        >>> str(apply(Permutation.parse("1432"), x))
        '1011'
    """
    if not x.is_classical:
        raise ValidationError(f"{x} is not a classical extended parking function")
    if perm.n != x.length:
        raise ValidationError(f"permutation of degree {perm.n} cannot act on {x}")
    n = x.length
    return ExtendedPF(_act(perm.zero_based, x.coords, n - 1, n), n, x.target)


def apply_rational(perm: Permutation, x: ExtendedPF) -> ExtendedPF:
    """τ_{a,b,c}(π)·x with the shift taken in ``Z_b``.

    Raises:
        ValidationError: If ``b`` does not divide ``a+1`` or degrees differ.
    """
    a, b = x.length - 1, x.modulus
    check_coprime(a, b)
    _check_divides(a, b)
    if perm.n != x.length:
        raise ValidationError(f"permutation of degree {perm.n} cannot act on {x}")
    return ExtendedPF(_act(perm.zero_based, x.coords, a, b), b, x.target)


def _is_fixed(perm: Sequence[int], x: Coords, b: int) -> bool:
    # A fixed point has x∘π + y = x, so the shift is forced by the first coordinate.
    y = (x[0] - x[perm[0]]) % b
    return all((x[p] + y) % b == x[i] for i, p in enumerate(perm))


def _count_fixed(perm: Permutation, elements: Iterable[Coords], b: int) -> int:
    images = perm.zero_based
    return sum(1 for x in elements if _is_fixed(images, x, b))


def brute_character(n: int, c: int, lam: Partition) -> int:
    """Fixed points in PF̂_{n,c} of the canonical permutation of type ``λ``.

    Example:
        >>> brute_character(3, 3, Partition.of(3))
        3
    """
    _check_classical(n, c)
    if lam.n != n:
        raise ValidationError(f"{lam} is not a partition of {n}")
    return _count_fixed(Permutation.of_cycle_type(lam), _classical_coords(n, c), n)


def brute_rational_character(a: int, b: int, c: int, lam: Partition) -> int:
    """Fixed points in PF̂_{a,b,c} of the canonical permutation of type ``λ ⊢ a+1``."""
    _check_rational(a, b, c)
    _check_divides(a, b)
    if lam.n != a + 1:
        raise ValidationError(f"{lam} is not a partition of {a + 1}")
    return _count_fixed(Permutation.of_cycle_type(lam), _coords(a, b, c), b)


def brute_character_vector(n: int, c: int, workers: Optional[int] = None) -> CharacterVector:
    """Brute-force character of τ_{n,c}, one process task per cycle type."""
    _check_classical(n, c)
    lams = partitions_of(n)
    values = parallel_map(partial(brute_character, n, c), lams, workers)
    return CharacterVector(n, dict(zip(lams, values)), label=f"brute tau({n},{c})")


def restricted_character(n: int, c: int, mu: Partition) -> int:
    """Fixed points of a type-``μ`` permutation of ``[n-1]`` embedded in S_n (fixing n).

    The restriction of τ_{n,c} to S_{n-1} is ρ_{n-1}, so this equals
    ``classical_character(n-1, μ)``.
    """
    _check_classical(n, c)
    if mu.n != n - 1:
        raise ValidationError(f"{mu} is not a partition of {n - 1}")
    embedded = Permutation((*Permutation.of_cycle_type(mu).images, n))
    return _count_fixed(embedded, _classical_coords(n, c), n)


def rational_restricted_character(a: int, b: int, c: int, mu: Partition) -> int:
    """Restriction of τ_{a,b,c} to S_a; equals ``b^{ℓ(μ)-1}`` (the character of ρ_{a,b})."""
    _check_rational(a, b, c)
    _check_divides(a, b)
    if mu.n != a:
        raise ValidationError(f"{mu} is not a partition of {a}")
    embedded = Permutation((*Permutation.of_cycle_type(mu).images, a + 1))
    return _count_fixed(embedded, _coords(a, b, c), b)


def _burnside(fixed: Callable[[Partition], int], degree: int) -> int:
    total = sum(Fraction(fixed(lam), z_of(lam)) for lam in partitions_of(degree))
    if total.denominator != 1:
        raise InvariantError(f"Burnside average is not integral: {total}")
    return total.numerator


def burnside_orbit_count(n: int, c: int) -> int:
    """Orbits of τ_{n,c}: ``Σ_λ fix(λ)/z_λ``.

    Example:
        >>> burnside_orbit_count(3, 3), burnside_orbit_count(4, 1)
        (2, 2)
    """
    _check_classical(n, c)
    return _burnside(partial(brute_character, n, c), n)


def rational_burnside_orbit_count(a: int, b: int, c: int) -> int:
    """Orbits of τ_{a,b,c} by Burnside."""
    _check_rational(a, b, c)
    _check_divides(a, b)
    return _burnside(partial(brute_rational_character, a, b, c), a + 1)


def generators(n: int) -> list[Permutation]:
    """Adjacent transpositions and the long cycle; together they generate S_n."""
    if n < 2:
        return []
    return [Permutation.adjacent_transposition(n, i) for i in range(1, n)] + [
        Permutation.long_cycle(n)
    ]


def _orbits(elements: Sequence[Coords], a: int, b: int) -> list[list[Coords]]:
    uf = UnionFind(elements)
    for g in generators(a + 1):
        images = g.zero_based
        for x in elements:
            uf.union(x, _act(images, x, a, b))
    orbits = sorted(sorted(group) for group in uf.groups())
    log.debug("found %d orbits on %d elements", len(orbits), len(elements))
    return orbits


def orbit_decomposition(n: int, c: int) -> list[list[ExtendedPF]]:
    """Orbits of τ_{n,c}, each sorted, ordered by smallest element."""
    _check_classical(n, c)
    return [
        [ExtendedPF(x, n, c) for x in orbit]
        for orbit in _orbits(_classical_coords(n, c), n - 1, n)
    ]


def rational_orbit_decomposition(a: int, b: int, c: int) -> list[list[ExtendedPF]]:
    """Orbits of τ_{a,b,c}, same ordering as :func:`orbit_decomposition`."""
    _check_rational(a, b, c)
    _check_divides(a, b)
    return [[ExtendedPF(x, b, c) for x in orbit] for orbit in _orbits(_coords(a, b, c), a, b)]
