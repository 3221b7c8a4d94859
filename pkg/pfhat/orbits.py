"""Orbit counts of τ_{n,1}, τ_{n,n} and τ_{a,b,1} from divisor sums.

Intermediate quantities are exact rationals. Each public count asserts that
its final value is an integer, and ``orbits_c1`` evaluates two independent
formulas and compares them.
"""

import itertools
import logging
from fractions import Fraction

from pfhat.action import burnside_orbit_count, rational_burnside_orbit_count
from pfhat.character import character_vector, trivial_multiplicity
from pfhat.errors import InvariantError, ValidationError
from pfhat.models import OrbitReport
from pfhat.numth import binomial, divisors, jordan_totient2, moebius
from pfhat.parking import check_coprime

log = logging.getLogger(__name__)

SUBSET_SUM_MAX_N = 12


def _require_n(n: int) -> None:
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InvariantError(f"{what} is not an integer: {value}")
    return value.numerator


def f_weight(n: int, d: int) -> Fraction:
    """``1/2`` if d is even and n/d is odd, else ``1``.

    Raises:
        ValidationError: If ``d`` does not divide ``n``.
    """
    _require_n(n)
    if d < 1 or n % d:
        raise ValidationError(f"{d} does not divide {n}")
    return Fraction(1, 2) if d % 2 == 0 and (n // d) % 2 == 1 else Fraction(1)


def F_defining_sum(m: int, e: int) -> Fraction:
    """``Σ_{d|m} μ(m/d)·f_{me}(d)·d²``."""
    return sum(
        (moebius(m // d) * f_weight(m * e, d) * d * d for d in divisors(m)), Fraction(0)
    )


def F_of(m: int, e: int) -> int:
    """``J_2(m)`` if e is even or m odd, ``J_2(m)/3`` otherwise.

    The closed form is checked against :func:`F_defining_sum` on every call.

    Example:
        >>> F_of(3, 1), F_of(1, 3), F_of(2, 1)
        (8, 1, 1)
    """
    if m < 1 or e < 1:
        raise ValidationError(f"m and e must be >= 1, got ({m}, {e})")
    j2 = jordan_totient2(m)
    closed = Fraction(j2) if e % 2 == 0 or m % 2 == 1 else Fraction(j2, 3)
    if closed != F_defining_sum(m, e):
        raise InvariantError(f"F({m},{e}) closed form {closed} disagrees with its defining sum")
    return _as_int(closed, f"F({m},{e})")


def a_n(n: int) -> Fraction:
    """``(1/n²)·Σ_{d|n} μ(n/d)·C(2d-1, d)``; not integral in general."""
    _require_n(n)
    total = sum(moebius(n // d) * binomial(2 * d - 1, d) for d in divisors(n))
    return Fraction(total, n * n)


def orbits_cn(n: int) -> int:
    """Orbits of τ_{n,n}: ``(1/n²)·Σ_{e|n} C(2e-1, e)·F(n/e, e)``.

    Example:
        >>> orbits_cn(3)
        2
    """
    _require_n(n)
    total = sum(binomial(2 * e - 1, e) * F_of(n // e, e) for e in divisors(n))
    return _as_int(Fraction(total, n * n), f"o({n},{n})")


def _orbits_c1_signed(n: int) -> Fraction:
    total = sum(
        (-1) ** (n + d) * moebius(n // d) * binomial(2 * d - 1, d) for d in divisors(n)
    )
    return Fraction(total, n * n)


def _orbits_c1_split(n: int) -> Fraction:
    if n % 4 == 2:
        return a_n(n) + a_n(n // 2) / 2
    return a_n(n)


def orbits_c1(n: int) -> int:
    """Orbits of τ_{n,1}: ``(1/n²)·Σ_{d|n} (-1)^{n+d}·μ(n/d)·C(2d-1, d)``.

    Also evaluated as ``a_n + a_{n/2}/2`` for n ≡ 2 mod 4 and ``a_n`` otherwise;
    the two must agree.

    Example:
        >>> [orbits_c1(n) for n in range(1, 10)]
        [1, 1, 1, 2, 5, 13, 35, 100, 300]
    """
    _require_n(n)
    signed, split = _orbits_c1_signed(n), _orbits_c1_split(n)
    if signed != split:
        raise InvariantError(f"o({n},1): signed sum {signed} != case split {split}")
    return _as_int(signed, f"o({n},1)")


def orbits_rational_c1(a: int, b: int) -> int:
    """Orbits of τ_{a,b,1} for ``a = kb - 1``.

    ``(1/b²)·Σ_{d|b} (-1)^{k(b+d)}·μ(b/d)·C((k+1)d - 1, kd)``.

    Raises:
        ValidationError: If ``(a, b)`` is not coprime or ``b`` does not divide ``a+1``.
    """
    check_coprime(a, b)
    if (a + 1) % b:
        raise ValidationError(f"need b | a+1, got a={a}, b={b}")
    k = (a + 1) // b
    total = sum(
        (-1) ** (k * (b + d)) * moebius(b // d) * binomial((k + 1) * d - 1, k * d)
        for d in divisors(b)
    )
    return _as_int(Fraction(total, b * b), f"o({a},{b},1)")


def subset_count(n: int) -> int:
    """``#{S ⊆ [2n-1] : |S| = n, ΣS ≡ 1 (mod n)}`` by enumeration."""
    _require_n(n)
    if n > SUBSET_SUM_MAX_N:
        raise ValidationError(f"subset enumeration is limited to n <= {SUBSET_SUM_MAX_N}")
    target = 1 % n
    return sum(
        1 for s in itertools.combinations(range(1, 2 * n), n) if sum(s) % n == target
    )


def subset_sum_check(n: int) -> bool:
    """``n·o_{n,1}`` equals the number of n-subsets of ``[2n-1]`` with sum ≡ 1 mod n."""
    expected, found = n * orbits_c1(n), subset_count(n)
    log.debug("subset-sum check n=%d: %d vs %d", n, expected, found)
    return expected == found


def orbit_report(n: int, c: int, oracle: bool = False) -> OrbitReport:
    """Orbit count of τ_{n,c} from the matching closed form.

    For ``c = 1`` the Möbius sum is used and for ``c = n`` the Jordan-totient
    sum; other values of c fall back to the trivial multiplicity of the
    closed-form character.

    Args:
        n: Degree.
        c: Target sum in ``1..n``.
        oracle: Also run the Burnside brute force.
    """
    _require_n(n)
    if not 1 <= c <= n:
        raise ValidationError(f"c must lie in 1..{n}, got {c}")
    if c == 1:
        count, method = orbits_c1(n), "moebius"
    elif c == n:
        count, method = orbits_cn(n), "jordan-totient"
    else:
        count, method = trivial_multiplicity(character_vector(n, c)), "character"
    oracle_count = burnside_orbit_count(n, c) if oracle else None
    report = OrbitReport({"n": n, "c": c}, count, oracle_count, method)
    if not report.agrees:
        log.error("o(%d,%d): formula %d, burnside %s", n, c, count, oracle_count)
    return report


def rational_orbit_report(a: int, b: int, oracle: bool = False) -> OrbitReport:
    """Orbit count of τ_{a,b,1}, optionally checked by Burnside."""
    count = orbits_rational_c1(a, b)
    oracle_count = rational_burnside_orbit_count(a, b, 1) if oracle else None
    report = OrbitReport({"a": a, "b": b, "c": 1}, count, oracle_count, "moebius")
    if not report.agrees:
        log.error("o(%d,%d,1): formula %d, burnside %s", a, b, count, oracle_count)
    return report


def orbit_sequence(max_n: int) -> list[tuple[int, int, int]]:
    """Rows ``(n, o_{n,1}, o_{n,n})`` for ``n = 1..max_n``."""
    _require_n(max_n)
    return [(n, orbits_c1(n), orbits_cn(n)) for n in range(1, max_n + 1)]
