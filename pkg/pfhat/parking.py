"""Classical and rational parking functions.

A sequence ``x`` of length ``a`` is an (a, b)-parking function when its sorted
rearrangement ``z`` satisfies ``a·z_i <= (i-1)·b``. Classical parking functions
of length n are the case ``(a, b) = (n, n+1)``.

Enumeration goes through the (generalized) Pollak bijection
``PF_{a,b} -> Z_b^{a-1}``, so it costs ``b^{a-1}`` shift searches instead of a
scan over all ``b^a`` sequences.
"""

import itertools
import logging
import math
from collections.abc import Sequence
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from pfhat.errors import InvariantError, ValidationError
from pfhat.models import ParkingFunction, Partition, Permutation, satisfies_bound
from pfhat.numth import binomial, partitions_of, z_of

log = logging.getLogger(__name__)


def check_coprime(a: int, b: int) -> None:
    """Raise unless ``a, b >= 1`` and ``gcd(a, b) = 1``."""
    if a < 1 or b < 1:
        raise ValidationError(f"a and b must be positive, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise ValidationError(f"a={a} and b={b} are not coprime")


def is_parking(x: Sequence[int]) -> bool:
    """True iff the sorted sequence satisfies ``0 <= z_i <= i-1``.

    Example:
        >>> is_parking((0, 1, 0)), is_parking((0, 3, 0))
        (True, False)
    """
    return all(0 <= z <= i for i, z in enumerate(sorted(x)))


def is_rational_parking(x: Sequence[int], a: int, b: int) -> bool:
    """True iff ``x`` is an (a, b)-parking function.

    The bound ``z_i <= (i-1)b/a`` is tested as ``a·z_i <= (i-1)·b``.

    Raises:
        ValidationError: If ``(a, b)`` is not coprime.
    """
    check_coprime(a, b)
    return len(x) == a and satisfies_bound(x, a, b)


def pollak_forward(x: Sequence[int], b: Optional[int] = None) -> tuple[int, ...]:
    """Pollak map ``x -> (x_2 - x_1, .., x_a - x_{a-1})``.

    Args:
        x: A parking function of length n, or an (a, b)-parking function.
        b: Modulus for the rational case; ``None`` means classical (modulus n+1).

    Raises:
        ValidationError: If ``x`` is not a parking function of the given kind.
    """
    a = len(x)
    if b is None:
        modulus = a + 1
        ok = is_parking(x)
    else:
        check_coprime(a, b)
        modulus = b
        ok = satisfies_bound(x, a, b)
    if not ok:
        raise ValidationError(f"{tuple(x)} is not a parking function")
    return tuple((x[i + 1] - x[i]) % modulus for i in range(a - 1))


def pollak_inverse(alpha: Sequence[int], b: Optional[int] = None) -> ParkingFunction:
    """Inverse Pollak map.

    Returns the unique ``(y, y+α_1, .., y+α_1+..+α_{a-1})`` (mod modulus) that is
    a parking function. The length is ``a = len(alpha) + 1``.

    Args:
        alpha: Sequence of residues.
        b: Modulus for the rational case; ``None`` means classical (modulus a+1).

    Raises:
        InvariantError: If no shift parks, which the bijection rules out.
    """
    a = len(alpha) + 1
    if b is None:
        modulus, b_eff = a + 1, a + 1
    else:
        check_coprime(a, b)
        modulus, b_eff = b, b
    sums = list(itertools.accumulate(alpha, initial=0))
    for y in range(modulus):
        candidate = tuple((y + s) % modulus for s in sums)
        if satisfies_bound(candidate, a, b_eff):
            return candidate
    raise InvariantError(f"no shift parks {tuple(alpha)} modulo {modulus}")


@lru_cache(maxsize=32)
def _enumerate(a: int, b: int) -> tuple[ParkingFunction, ...]:
    if a == 0:
        return ((),)
    out = [pollak_inverse(alpha, b) for alpha in itertools.product(range(b), repeat=a - 1)]
    out.sort()
    log.debug("enumerated %d (%d,%d)-parking functions", len(out), a, b)
    return tuple(out)


def enumerate_pf(n: int, increasing: bool = False) -> list[ParkingFunction]:
    """All parking functions of length ``n`` in lexicographic order.

    Args:
        n: Length; ``0`` yields ``[()]``.
        increasing: Keep only weakly increasing ones (there are Catalan(n)).

    Example:
        >>> enumerate_pf(2)
        [(0, 0), (0, 1), (1, 0)]
    """
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    result = list(_enumerate(n, n + 1))
    if increasing:
        result = [x for x in result if list(x) == sorted(x)]
    return result


def enumerate_rational(a: int, b: int) -> list[ParkingFunction]:
    """All (a, b)-parking functions in lexicographic order; there are ``b^{a-1}``."""
    check_coprime(a, b)
    return list(_enumerate(a, b))


def catalan(n: int) -> int:
    """``C(2n, n)/(n+1)``."""
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    return binomial(2 * n, n) // (n + 1)


def rational_catalan(a: int, b: int) -> int:
    """``C(a+b, b)/(a+b)`` for coprime ``a, b``."""
    check_coprime(a, b)
    numerator = binomial(a + b, b)
    if numerator % (a + b):
        raise InvariantError(f"rational Catalan ({a},{b}) is not integral")
    return numerator // (a + b)


def classical_character(n: int, lam: Partition) -> int:
    """Character of ρ_n (permuting coordinates of PF_n): ``(n+1)^{ℓ(λ)-1}``."""
    if lam.n != n:
        raise ValidationError(f"{lam} is not a partition of {n}")
    if n == 0:
        return 1
    return (n + 1) ** (lam.ell - 1)


def rational_classical_character(a: int, b: int, lam: Partition) -> int:
    """Character of ρ_{a,b} on PF_{a,b}: ``b^{ℓ(λ)-1}``."""
    check_coprime(a, b)
    if lam.n != a:
        raise ValidationError(f"{lam} is not a partition of {a}")
    return b ** (lam.ell - 1)


def rho_fixed_points(a: int, b: int, lam: Partition) -> int:
    """Brute-force count of (a, b)-parking functions fixed by a permutation of type ``λ``."""
    if lam.n != a:
        raise ValidationError(f"{lam} is not a partition of {a}")
    perm = Permutation.of_cycle_type(lam).zero_based
    return sum(
        1 for x in enumerate_rational(a, b) if all(x[p] == x[i] for i, p in enumerate(perm))
    )


def rho_orbit_count(a: int, b: int) -> int:
    """Orbits of S_a on PF_{a,b} by Burnside over brute-force fixed points."""
    total = sum(Fraction(rho_fixed_points(a, b, lam), z_of(lam)) for lam in partitions_of(a))
    if total.denominator != 1:
        raise InvariantError(f"Burnside count for ({a},{b}) is not integral: {total}")
    return total.numerator


def area(x: Sequence[int]) -> int:
    """``C(n, 2) - Σ x_i`` for a parking function of length n."""
    if not is_parking(x):
        raise ValidationError(f"{tuple(x)} is not a parking function")
    return binomial(len(x), 2) - sum(x)


def format_word(x: Sequence[int]) -> str:
    """``"010"`` when every entry is below 10, else ``"1,10,2"``."""
    if all(0 <= v < 10 for v in x):
        return "".join(str(v) for v in x)
    return ",".join(str(v) for v in x)


def parse_word(text: str) -> tuple[int, ...]:
    """Inverse of :func:`format_word`."""
    text = text.strip()
    try:
        if "," in text:
            return tuple(int(tok) for tok in text.split(","))
        return tuple(int(ch) for ch in text)
    except ValueError as exc:
        raise ValidationError(f"malformed word: {text!r}") from exc
