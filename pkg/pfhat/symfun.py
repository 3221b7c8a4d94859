"""Frobenius characteristics and exact basis changes between p, h and s.

Irreducible characters come from the Murnaghan-Nakayama rule on beta-sets
(abacus positions); the h-expansion is solved against the p-expansions of the
``h_μ``, which are triangular in reverse-lexicographic order.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import numpy as np

from pfhat.character import character_vector
from pfhat.errors import InvariantError, ValidationError
from pfhat.models import Basis, CharacterVector, Partition, SymFun
from pfhat.numth import class_size, partitions_of, z_of
from pfhat.orbits import orbits_c1
from pfhat.parking import catalan
from pfhat.settings import get_settings

log = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    """χ^shape at cycle type ``cycles`` by stripping rim hooks of size ``cycles[0]``."""
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    ell = len(shape)
    beta = [shape[i] + ell - 1 - i for i in range(ell)]
    beads = set(beta)
    total = 0
    for bead in beta:
        target = bead - r
        if target < 0 or target in beads:
            continue
        sign = -1 if sum(1 for x in beta if target < x < bead) % 2 else 1
        moved = sorted((beads - {bead}) | {target}, reverse=True)
        new_shape = tuple(p for p in (moved[i] - (ell - 1 - i) for i in range(ell)) if p > 0)
        total += sign * _mn(new_shape, rest)
    return total


def irreducible_character(mu: Partition, lam: Partition) -> int:
    """χ^μ(λ) by the Murnaghan-Nakayama rule.

    Example:
        >>> irreducible_character(Partition.of(2, 1), Partition.of(1, 1, 1))
        2
    """
    if mu.n != lam.n:
        raise ValidationError(f"{mu} and {lam} have different sizes")
    return _mn(mu.parts, lam.parts)


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """Irreducible characters of S_n.

    Attributes:
        n: Degree.
        partitions: Partitions of n in canonical order; rows index μ, columns λ.
        values: ``values[i, j] = χ^{partitions[i]}(partitions[j])``.
    """

    n: int
    partitions: tuple[Partition, ...]
    values: np.ndarray

    def index(self, lam: Partition) -> int:
        try:
            return self.partitions.index(lam)
        except ValueError as exc:
            raise ValidationError(f"{lam} is not a partition of {self.n}") from exc

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        mu, lam = key
        return int(self.values[self.index(mu), self.index(lam)])

    @property
    def dimensions(self) -> dict[Partition, int]:
        """``f^μ`` for every μ (the column at ``1^n``)."""
        return {mu: int(v) for mu, v in zip(self.partitions, self.values[:, -1])}

    def check_orthogonality(self) -> bool:
        """Row and column orthogonality, in integers.

        Rows: ``Σ_λ |C_λ| χ^μ(λ) χ^ν(λ) = n! δ_{μν}``. Columns:
        ``Σ_μ χ^μ(λ) χ^μ(κ) = z_λ δ_{λκ}``.
        """
        sizes = np.array([class_size(lam) for lam in self.partitions], dtype=np.int64)
        zs = np.array([z_of(lam) for lam in self.partitions], dtype=np.int64)
        rows = (self.values * sizes) @ self.values.T
        cols = self.values.T @ self.values
        k = len(self.partitions)
        rows_ok = np.array_equal(rows, math.factorial(self.n) * np.eye(k, dtype=np.int64))
        cols_ok = np.array_equal(cols, np.diag(zs))
        return bool(rows_ok and cols_ok)


@lru_cache(maxsize=16)
def _table(n: int) -> CharacterTable:
    parts = tuple(partitions_of(n))
    values = np.array(
        [[_mn(mu.parts, lam.parts) for lam in parts] for mu in parts], dtype=np.int64
    ).reshape(len(parts), len(parts))
    log.debug("built character table of S_%d (%d classes)", n, len(parts))
    return CharacterTable(n, parts, values)


def character_table(n: int) -> CharacterTable:
    """Character table of S_n, cached per degree.

    Raises:
        ValidationError: If ``n`` exceeds the configured ``table_max_n``.
    """
    limit = get_settings().table_max_n
    if n < 1 or n > limit:
        raise ValidationError(f"character tables are available for 1 <= n <= {limit}, got {n}")
    return _table(n)


def frobenius(chi: CharacterVector) -> SymFun:
    """``Σ_λ χ(λ) p_λ / z_λ``.

    Example:
        >>> str(frobenius(character_vector(3, 1)))
        '1/2*p[21] + 1/2*p[111]'
    """
    return SymFun(
        chi.n, Basis.POWER_SUM, {lam: Fraction(v, z_of(lam)) for lam, v in chi.values.items()}
    )


def complete_homogeneous(n: int) -> SymFun:
    """``h_n = Σ_{λ⊢n} p_λ / z_λ``."""
    return SymFun(n, Basis.POWER_SUM, {lam: Fraction(1, z_of(lam)) for lam in partitions_of(n)})


def _p_product(
    f: dict[Partition, Fraction], g: dict[Partition, Fraction]
) -> dict[Partition, Fraction]:
    out: dict[Partition, Fraction] = {}
    for lam, x in f.items():
        for nu, y in g.items():
            key = Partition.of(*lam.parts, *nu.parts)
            out[key] = out.get(key, Fraction(0)) + x * y
    return out


@lru_cache(maxsize=None)
def _h_in_p(mu: Partition) -> dict[Partition, Fraction]:
    result: dict[Partition, Fraction] = {Partition(()): Fraction(1)}
    for part in mu.parts:
        result = _p_product(result, complete_homogeneous(part).coeffs)
    return result


def from_h(f: SymFun) -> SymFun:
    """Rewrite an h-expansion in the p basis via ``h_μ = ∏ h_{μ_i}``."""
    if f.basis is not Basis.COMPLETE:
        raise ValidationError(f"expected an h-expansion, got basis {f.basis.value}")
    out: dict[Partition, Fraction] = {}
    for mu, coeff in f.items():
        for lam, x in _h_in_p(mu).items():
            out[lam] = out.get(lam, Fraction(0)) + coeff * x
    return SymFun(f.degree, Basis.POWER_SUM, out)


def _from_schur(f: SymFun) -> SymFun:
    out: dict[Partition, Fraction] = {}
    for mu, coeff in f.items():
        for lam in partitions_of(f.degree):
            value = irreducible_character(mu, lam)
            if value:
                out[lam] = out.get(lam, Fraction(0)) + coeff * Fraction(value, z_of(lam))
    return SymFun(f.degree, Basis.POWER_SUM, out)


def to_power_sum(f: SymFun) -> SymFun:
    """Any supported basis to p."""
    if f.basis is Basis.POWER_SUM:
        return f
    if f.basis is Basis.COMPLETE:
        return from_h(f)
    return _from_schur(f)


def to_schur(f: SymFun) -> SymFun:
    """Schur expansion: ``[s_μ]f = Σ_λ a_λ χ^μ(λ)`` where ``f = Σ a_λ p_λ``.

    Negative or fractional coefficients are kept and logged; they mean ``f``
    is not the characteristic of a representation.

    Example:
        >>> str(to_schur(frobenius(character_vector(3, 3))))
        '2*s[3] + 1*s[111]'
    """
    p = to_power_sum(f)
    table = character_table(p.degree)
    out = {
        mu: sum(
            (a * int(table.values[i, table.index(lam)]) for lam, a in p.items()), Fraction(0)
        )
        for i, mu in enumerate(table.partitions)
    }
    result = SymFun(p.degree, Basis.SCHUR, out)
    defects = schur_defects(result)
    if defects:
        log.warning("Schur expansion has %d non-representation coefficients", len(defects))
    return result


def schur_defects(f: SymFun) -> list[tuple[Partition, Fraction]]:
    """Schur coefficients that are negative or not integers."""
    s = f if f.basis is Basis.SCHUR else to_schur(f)
    return [(mu, v) for mu, v in s.items() if v < 0 or v.denominator != 1]


def to_h(f: SymFun) -> SymFun:
    """Expansion in the complete homogeneous basis.

    The p-expansion of ``h_μ`` has leading term ``p_μ/∏μ_i`` in reverse-lex
    order, so the system is solved by back substitution from the largest
    partition down.

    Raises:
        InvariantError: If a pivot vanishes or a residual is left over.

    Example:
        >>> str(to_h(frobenius(character_vector(3, 1))))
        '1*h[21]'
    """
    p = to_power_sum(f)
    residual = dict(p.coeffs)
    out: dict[Partition, Fraction] = {}
    for mu in partitions_of(p.degree):
        r = residual.get(mu, Fraction(0))
        if not r:
            continue
        h_mu = _h_in_p(mu)
        pivot = h_mu.get(mu, Fraction(0))
        if not pivot:
            raise InvariantError(f"zero pivot at h[{mu}]")
        coeff = r / pivot
        out[mu] = coeff
        for lam, x in h_mu.items():
            residual[lam] = residual.get(lam, Fraction(0)) - coeff * x
    if any(residual.values()):
        raise InvariantError("h-expansion left a nonzero residual")
    return SymFun(p.degree, Basis.COMPLETE, out)


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ValidationError(f"{what} is not an integer: {value}")
    return value.numerator


def multiplicity(f: SymFun, mu: Partition) -> int:
    """``[s_μ]f``.

    Raises:
        ValidationError: If the coefficient is fractional.
    """
    if mu.n != f.degree:
        raise ValidationError(f"{mu} is not a partition of {f.degree}")
    return _as_int(to_schur(f)[mu], f"[s_{mu}]")


def is_h_positive(f: SymFun) -> bool:
    return all(v >= 0 for _, v in to_h(f).items())


def is_schur_positive(f: SymFun) -> bool:
    """All Schur coefficients are nonnegative integers."""
    return not schur_defects(to_schur(f))


def standard_multiplicity(n: int) -> int:
    """Multiplicity of ``s_{n-1,1}`` in Frob(τ_{n,1}): ``Cat_{n-1} - o_{n,1}``.

    When the character table of S_n is in range, the value is compared
    against the Schur expansion.
    """
    if n < 2:
        raise ValidationError(f"n must be >= 2, got {n}")
    value = catalan(n - 1) - orbits_c1(n)
    if n <= get_settings().table_max_n:
        direct = multiplicity(frobenius(character_vector(n, 1)), Partition.of(n - 1, 1))
        if direct != value:
            raise InvariantError(f"standard multiplicity at n={n}: {value} != {direct}")
    return value


def principal_specialization(f: SymFun, n: Optional[int] = None) -> Fraction:
    """Evaluate at n ones: ``p_λ -> n^{ℓ(λ)}``; ``n`` defaults to the degree."""
    p = to_power_sum(f)
    m = p.degree if n is None else n
    return sum((a * m**lam.ell for lam, a in p.items()), Fraction(0))
