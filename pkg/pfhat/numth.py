"""Integer and partition primitives used throughout pfhat.

Everything here is a pure function on Python integers, which are
arbitrary precision, so counts stay exact far beyond 64 bits.
"""

import math
from collections.abc import Sequence
from functools import lru_cache

from scipy.special import comb
from sympy import divisors as _sympy_divisors
from sympy import factorint

from pfhat.errors import ValidationError
from pfhat.models import Partition


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise ValidationError(f"{name} must be >= 1, got {value}")


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first, *rest) for rest in _partitions(n - first, first))
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    Args:
        n: Nonnegative integer; ``0`` yields the single empty partition.

    Returns:
        Partitions, largest first.

    Example:
        >>> [str(p) for p in partitions_of(3)]
        ['3', '2+1', '1+1+1']
    """
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    return [Partition(parts) for parts in _partitions(n, n)]


def z_of(lam: Partition) -> int:
    """Centralizer order ``z_λ = ∏ i^{m_i} m_i!``."""
    z = 1
    for part, mult in lam.multiplicities().items():
        z *= part**mult * math.factorial(mult)
    return z


def class_size(lam: Partition) -> int:
    """Number of permutations of cycle type ``λ``: ``n!/z_λ``."""
    return math.factorial(lam.n) // z_of(lam)


def gcd_of_partition(lam: Partition) -> int:
    """GCD of the parts (``0`` for the empty partition)."""
    return math.gcd(*lam.parts) if lam.parts else 0


def moebius(n: int) -> int:
    """Classical Möbius function."""
    _require_positive("n", n)
    exponents = factorint(n)
    if any(e > 1 for e in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


def jordan_totient2(m: int) -> int:
    """Jordan totient ``J_2(m) = m² ∏_{p|m} (1 - 1/p²)``, in integer form."""
    _require_positive("m", m)
    value = 1
    for p, e in factorint(m).items():
        value *= p ** (2 * (e - 1)) * (p * p - 1)
    return value


def b_stat(lam: Partition) -> int:
    """``Σ_i C(λ_i, 2)``."""
    return sum(binomial(part, 2) for part in lam.parts)


def count_congruence_solutions(a: Sequence[int], c: int, m: int) -> int:
    """Number of ``x ∈ {0..m-1}^k`` with ``Σ a_i x_i ≡ c (mod m)``.

    Closed form: ``d·m^{k-1}`` when ``d = gcd(a_1, .., a_k, m)`` divides ``c``,
    else ``0``.

    Example:
        >>> count_congruence_solutions([2, 4], 0, 6)
        12
    """
    if len(a) < 1:
        raise ValidationError("need at least one coefficient")
    _require_positive("m", m)
    d = math.gcd(m, *a)
    if c % d:
        return 0
    return d * m ** (len(a) - 1)


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of ``n``."""
    _require_positive("n", n)
    return [int(d) for d in _sympy_divisors(n)]


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient ``C(n, k)``; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return int(comb(n, k, exact=True))


def v2(n: int) -> int:
    """2-adic valuation of ``n``."""
    _require_positive("n", n)
    return (n & -n).bit_length() - 1
