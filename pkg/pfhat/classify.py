"""Which of the modules τ_{n,1}, .., τ_{n,n} are isomorphic.

``D_n = {k | n : n/k ≡ n (mod 2)}`` indexes the classes, and ``C_{n,k}`` is the
set of c in ``[n]`` with ``gcd(n, c) ∈ {k, 2k}`` when ``n/k ≡ 2 (mod 4)`` and
``gcd(n, c) = k`` otherwise. Isomorphism is decided by character equality.
"""

import logging
import math

from pfhat.character import character_vector
from pfhat.errors import InvariantError, ValidationError
from pfhat.models import Classification, Partition
from pfhat.numth import binomial, divisors

log = logging.getLogger(__name__)


def _require_n(n: int) -> None:
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")


def d_set(n: int) -> list[int]:
    """``D_n``.

    Example:
        >>> d_set(12), d_set(6)
        ([1, 2, 3, 6], [1, 3])
    """
    _require_n(n)
    return [k for k in divisors(n) if (n // k) % 2 == n % 2]


def c_set(n: int, k: int) -> list[int]:
    """``C_{n,k}``, sorted.

    Raises:
        ValidationError: If ``k`` is not in ``D_n``.

    Example:
        >>> c_set(12, 1), c_set(12, 6)
        ([1, 5, 7, 11], [6, 12])
    """
    if k not in d_set(n):
        raise ValidationError(f"{k} is not in D_{n}")
    allowed = {k, 2 * k} if (n // k) % 4 == 2 else {k}
    return [c for c in range(1, n + 1) if math.gcd(n, c) in allowed]


def class_count_by_divisors(n: int) -> int:
    """Number of divisors of ``n`` that are not 2 mod 4."""
    _require_n(n)
    return sum(1 for d in divisors(n) if d % 4 != 2)


def class_count(n: int) -> int:
    """``|D_n|``, checked against :func:`class_count_by_divisors`."""
    count = len(d_set(n))
    other = class_count_by_divisors(n)
    if count != other:
        raise InvariantError(f"|D_{n}| = {count} but {other} divisors are not 2 mod 4")
    return count


def classify(n: int) -> Classification:
    """Map every c in ``[n]`` to the k with ``c ∈ C_{n,k}``.

    Raises:
        InvariantError: If the sets ``C_{n,k}`` do not partition ``[n]``.
    """
    index: dict[int, int] = {}
    for k in d_set(n):
        for c in c_set(n, k):
            if c in index:
                raise InvariantError(f"{c} lies in both C_{n},{index[c]} and C_{n},{k}")
            index[c] = k
    if len(index) != n:
        missing = sorted(set(range(1, n + 1)) - set(index))
        raise InvariantError(f"C_{n},k misses {missing}")
    return Classification(n, dict(sorted(index.items())), class_count(n))


def character_classes(n: int) -> list[list[int]]:
    """Group ``c ∈ [n]`` by identical closed-form character vectors, ordered by smallest c."""
    _require_n(n)
    groups: dict[tuple[int, ...], list[int]] = {}
    for c in range(1, n + 1):
        groups.setdefault(character_vector(n, c).signature(), []).append(c)
    log.debug("n=%d: %d distinct characters", n, len(groups))
    return sorted(groups.values())


def separating_partition(k: int, n: int) -> Partition:
    """``(k^{n/k})``: χ(n, k, ·) is nonzero there, χ(n, k', ·) vanishes for k' < k in D_n."""
    if k < 1 or n % k:
        raise ValidationError(f"{k} does not divide {n}")
    return Partition((k,) * (n // k))


def area_class(n: int) -> int:
    """``C(n-1, 2) mod n`` in ``[n]``: the c for which area gives PF̂_{n,c} ≅ PF̂_{n,1}.

    Example:
        >>> area_class(5), area_class(6)
        (1, 4)
    """
    if n < 2:
        raise ValidationError(f"n must be >= 2, got {n}")
    r = binomial(n - 1, 2) % n
    return r or n


def verify_area_iso(n: int) -> bool:
    """χ(n, area_class(n), ·) equals χ(n, 1, ·)."""
    c = area_class(n)
    return character_vector(n, c).signature() == character_vector(n, 1).signature()
