"""Closed-form characters of τ_{n,c} and τ_{a,b,1}.

All values are computed as exact rationals and checked for integrality before
they are returned; a fractional value raises :class:`InvariantError`.
"""

import logging
import math
from fractions import Fraction

from pfhat.errors import InvariantError, ValidationError
from pfhat.models import CharacterVector, Partition
from pfhat.numth import b_stat, count_congruence_solutions, gcd_of_partition, partitions_of, z_of
from pfhat.parking import check_coprime

log = logging.getLogger(__name__)


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InvariantError(f"{what} is not an integer: {value}")
    return value.numerator


def _check(n: int, c: int, lam: Partition) -> None:
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if not 1 <= c <= n:
        raise ValidationError(f"c must lie in 1..{n}, got {c}")
    if lam.n != n:
        raise ValidationError(f"{lam} is not a partition of {n}")


def _scale(d: int, n: int, ell: int) -> Fraction:
    """``d² n^{ℓ-2}``; fractional when ``ℓ = 1``."""
    return d * d * Fraction(n) ** (ell - 2)


def chi(n: int, c: int, lam: Partition) -> int:
    """Character of τ_{n,c} at a permutation of cycle type ``λ``.

    With ``d = gcd(λ)`` and ``ℓ = ℓ(λ)``, the value is ``d²n^{ℓ-2}/2`` when d is
    even, n/d odd and ``d | 2c``; ``d²n^{ℓ-2}`` when d is even, n/d even and
    ``d | c``, or when d is odd and ``d | c``; and 0 otherwise.

    Args:
        n: Degree.
        c: Target sum in ``1..n``.
        lam: Cycle type, a partition of ``n``.

    Returns:
        The character value, a nonnegative integer.

    Raises:
        ValidationError: On out-of-range arguments.
        InvariantError: If the closed form is not integral.

    Example:
        >>> chi(6, 3, Partition.of(3, 3)), chi(6, 1, Partition.of(3, 3))
        (9, 0)
    """
    _check(n, c, lam)
    d, ell = gcd_of_partition(lam), lam.ell
    base = _scale(d, n, ell)
    if d % 2 == 0:
        if (n // d) % 2 == 1:
            value = base / 2 if (2 * c) % d == 0 else Fraction(0)
        else:
            value = base if c % d == 0 else Fraction(0)
    else:
        value = base if c % d == 0 else Fraction(0)
    return _as_int(value, f"chi({n},{c},{lam})")


def chi_c1(n: int, lam: Partition) -> int:
    """Character of τ_{n,1}.

    ``n^{ℓ-2}`` if d = 1, ``2n^{ℓ-2}`` if d = 2 and n ≡ 2 mod 4, else 0.
    """
    _check(n, 1, lam)
    d = gcd_of_partition(lam)
    power = Fraction(n) ** (lam.ell - 2)
    if d == 1:
        value = power
    elif d == 2 and n % 4 == 2:
        value = 2 * power
    else:
        value = Fraction(0)
    return _as_int(value, f"chi_c1({n},{lam})")


def chi_cn(n: int, lam: Partition) -> int:
    """Character of τ_{n,n}: ``f_n(d)·d²·n^{ℓ-2}``, ``f_n(d) = 1/2`` iff d even, n/d odd."""
    _check(n, n, lam)
    d = gcd_of_partition(lam)
    weight = Fraction(1, 2) if d % 2 == 0 and (n // d) % 2 == 1 else Fraction(1)
    return _as_int(weight * _scale(d, n, lam.ell), f"chi_cn({n},{lam})")


def chi_congruence(n: int, c: int, lam: Partition) -> int:
    """Character of τ_{n,c} counted from the fixed-point congruences.

    A fixed point satisfies ``x_{π_i} + y = x_i`` with ``y = k·n/d``. Writing
    each cycle through its first entry turns the sum condition into
    ``Σ λ_j u_j ≡ c - y·b(λ) (mod n)``; every solution class under constant
    shifts holds exactly one element of PF̂_{n,c}, hence the division by n.
    """
    _check(n, c, lam)
    d = gcd_of_partition(lam)
    total = sum(
        count_congruence_solutions(lam.parts, c - k * (n // d) * b_stat(lam), n) for k in range(d)
    )
    return _as_int(Fraction(total, n), f"chi_congruence({n},{c},{lam})")


def chi_rational(a: int, b: int, lam: Partition) -> int:
    """Character of τ_{a,b,1} for ``a = kb - 1``.

    With ``d = gcd(λ_1, .., λ_ℓ, b)``: ``b^{ℓ-2}`` if d = 1, ``2b^{ℓ-2}`` if
    d = 2, b ≡ 2 mod 4 and k odd, else 0.

    Raises:
        ValidationError: If ``(a, b)`` is not coprime, ``b`` does not divide
            ``a+1``, or ``λ`` is not a partition of ``a+1``.
    """
    check_coprime(a, b)
    if (a + 1) % b:
        raise ValidationError(f"need b | a+1, got a={a}, b={b}")
    if lam.n != a + 1:
        raise ValidationError(f"{lam} is not a partition of {a + 1}")
    k = (a + 1) // b
    d = math.gcd(b, *lam.parts)
    power = Fraction(b) ** (lam.ell - 2)
    if d == 1:
        value = power
    elif d == 2 and b % 4 == 2 and k % 2 == 1:
        value = 2 * power
    else:
        value = Fraction(0)
    return _as_int(value, f"chi_rational({a},{b},{lam})")


def character_vector(n: int, c: int) -> CharacterVector:
    """Closed-form character of τ_{n,c} on every cycle type."""
    values = {lam: chi(n, c, lam) for lam in partitions_of(n)}
    return CharacterVector(n, values, label=f"tau({n},{c})")


def rational_character_vector(a: int, b: int) -> CharacterVector:
    """Closed-form character of τ_{a,b,1} on every cycle type of S_{a+1}."""
    values = {lam: chi_rational(a, b, lam) for lam in partitions_of(a + 1)}
    return CharacterVector(a + 1, values, label=f"tau({a},{b},1)")


def trivial_multiplicity(vector: CharacterVector) -> int:
    """``Σ_λ χ(λ)/z_λ``, the multiplicity of the trivial module."""
    total = sum((Fraction(v, z_of(lam)) for lam, v in vector.values.items()), Fraction(0))
    return _as_int(total, f"trivial multiplicity of {vector.label or 'vector'}")
