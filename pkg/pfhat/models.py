"""Data models for partitions, permutations, extended parking functions and class functions."""

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from pfhat.errors import ValidationError

ParkingFunction = tuple[int, ...]
"""A (classical or rational) parking function stored as a tuple of small ints."""

Rational = Union[int, Fraction]


def satisfies_bound(x: Sequence[int], a: int, b: int) -> bool:
    """Sorted bound test ``0 <= z_i``, ``a·z_i <= (i-1)·b`` without checking coprimality."""
    return all(0 <= z and a * z <= i * b for i, z in enumerate(sorted(x)))


def format_rational(value: Rational) -> str:
    """Render an exact rational as ``"num/den"``, or ``"num"`` when integral.

    Example:
        >>> format_rational(Fraction(9, 4))
        '9/4'
        >>> format_rational(Fraction(6, 3))
        '2'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Partition:
    """Integer partition, the index of conjugacy classes and symmetric-function bases.

    Attributes:
        parts: Weakly decreasing positive integers.

    Example:
        >>> lam = Partition.parse("3,3")
        >>> lam.n, lam.ell, str(lam)
        (6, 2, '3+3')
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValidationError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValidationError(f"partition parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        """Build a partition from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"3,3"`` (command-line form) or ``"3+3"`` (key form)."""
        cleaned = text.strip().replace("+", ",")
        if not cleaned:
            return cls(())
        try:
            parts = [int(tok) for tok in cleaned.split(",") if tok.strip()]
        except ValueError as exc:
            raise ValidationError(f"malformed partition: {text!r}") from exc
        return cls.of(*parts)

    @property
    def n(self) -> int:
        """Size of the partition."""
        return sum(self.parts)

    @property
    def ell(self) -> int:
        """Number of parts."""
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        """Map part size -> number of occurrences."""
        return dict(Counter(self.parts))

    def remove_part(self, part: int) -> "Partition":
        """Drop one occurrence of ``part``.

        Raises:
            ValidationError: If ``part`` does not occur.
        """
        parts = list(self.parts)
        if part not in parts:
            raise ValidationError(f"{self} has no part equal to {part}")
        parts.remove(part)
        return Partition(tuple(parts))

    @property
    def key(self) -> str:
        """Serialized key form, ``"3+3"``; the empty partition is ``""``."""
        return "+".join(str(p) for p in self.parts)

    def __str__(self) -> str:
        return self.key

    def __lt__(self, other: "Partition") -> bool:
        # Reverse-lexicographic canonical order: (3) < (2,1) < (1,1,1).
        return self.parts > other.parts


@dataclass(frozen=True)
class Permutation:
    """Permutation of [n] in one-line notation (1-based images).

    Composition is left to right: ``p.compose(q)`` is the permutation
    ``i -> q(p(i))``. With this convention the coordinate actions in
    :mod:`pfhat.action` satisfy ``apply(p, apply(q, x)) == apply(p.compose(q), x)``.

    Attributes:
        images: ``images[i-1]`` is the image of ``i``.

    Example:
        >>> Permutation.parse("1432").cycle_type()
        Partition(parts=(2, 1, 1))
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValidationError(f"not a permutation in one-line notation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"1432"`` or ``"1,4,3,2"``."""
        text = text.strip()
        try:
            if "," in text:
                images = tuple(int(tok) for tok in text.split(","))
            else:
                images = tuple(int(ch) for ch in text)
        except ValueError as exc:
            raise ValidationError(f"malformed permutation: {text!r}") from exc
        return cls(images)

    @classmethod
    def of_cycle_type(cls, lam: Partition) -> "Permutation":
        """Canonical representative ``(1..λ1)(λ1+1..λ1+λ2)...`` of a conjugacy class."""
        images: list[int] = []
        start = 1
        for part in lam.parts:
            images.extend(range(start + 1, start + part))
            images.append(start)
            start += part
        return cls(tuple(images))

    @classmethod
    def adjacent_transposition(cls, n: int, i: int) -> "Permutation":
        """The transposition swapping ``i`` and ``i+1``."""
        images = list(range(1, n + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        return cls(tuple(images))

    @classmethod
    def long_cycle(cls, n: int) -> "Permutation":
        """The n-cycle ``i -> i+1 (mod n)``."""
        return cls(tuple(list(range(2, n + 1)) + [1]))

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def zero_based(self) -> tuple[int, ...]:
        """Images shifted to ``0..n-1`` for indexing."""
        return tuple(i - 1 for i in self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """Left-to-right product: ``i -> other(self(i))``."""
        if other.n != self.n:
            raise ValidationError("cannot compose permutations of different degree")
        return Permutation(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def cycle_type(self) -> Partition:
        seen = [False] * self.n
        lengths = []
        for start in range(self.n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = self.images[j] - 1
                length += 1
            lengths.append(length)
        return Partition.of(*lengths)

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(str(i) for i in self.images)
        return ",".join(str(i) for i in self.images)


@dataclass(frozen=True)
class ExtendedPF:
    """An element of PF̂_{a,b,c}: a parking function padded by one residue.

    The classical set PF̂_{n,c} is the case ``a = n-1``, ``b = n``: the first
    ``n-1`` coordinates form a parking function of length ``n-1`` and the
    coordinate sum is ``c`` modulo ``n``.

    Attributes:
        coords: Residues, length ``a+1``.
        modulus: ``b`` (``n`` in the classical case).
        target: The value ``c`` as given, in ``1..modulus``.

    Raises:
        ValidationError: If a residue is out of range, the head does not park,
            or the coordinates do not sum to ``target`` modulo ``modulus``.
    """

    coords: tuple[int, ...]
    modulus: int
    target: int

    def __post_init__(self) -> None:
        coords = tuple(int(v) for v in self.coords)
        object.__setattr__(self, "coords", coords)
        b = self.modulus
        if b < 1 or not coords:
            raise ValidationError(f"need a modulus >= 1 and a residue, got {b}, {coords}")
        if not 1 <= self.target <= b:
            raise ValidationError(f"target must lie in 1..{b}, got {self.target}")
        if any(not 0 <= v < b for v in coords):
            raise ValidationError(f"residues of {coords} must lie in 0..{b - 1}")
        if not satisfies_bound(self.head, len(coords) - 1, b):
            raise ValidationError(f"head of {coords} is not a parking function for modulus {b}")
        if sum(coords) % b != self.target % b:
            raise ValidationError(f"{coords} does not sum to {self.target} mod {b}")

    @property
    def length(self) -> int:
        return len(self.coords)

    @property
    def is_classical(self) -> bool:
        return self.modulus == len(self.coords)

    @property
    def head(self) -> ParkingFunction:
        """The underlying parking function (all but the last coordinate)."""
        return self.coords[:-1]

    @property
    def word(self) -> str:
        """Compact word: ``"0003"``, or comma separated when an entry exceeds 9."""
        if all(v < 10 for v in self.coords):
            return "".join(str(v) for v in self.coords)
        return ",".join(str(v) for v in self.coords)

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True)
class CharacterVector:
    """Class function of S_n with integer values, keyed by cycle type.

    Attributes:
        n: Degree of the symmetric group.
        values: Value on every partition of ``n``, in canonical order.
        label: Free-form description used in reports (e.g. ``"tau(6,3)"``).
    """

    n: int
    values: dict[Partition, int]
    label: str = ""

    def __getitem__(self, lam: Partition) -> int:
        return self.values[lam]

    @property
    def dimension(self) -> int:
        """Value at the identity class ``1^n``."""
        return self.values[Partition((1,) * self.n)]

    def signature(self) -> tuple[int, ...]:
        """Values in canonical partition order; equal signatures mean isomorphic modules."""
        return tuple(self.values[lam] for lam in sorted(self.values))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "label": self.label,
            "values": {lam.key: self.values[lam] for lam in sorted(self.values)},
        }


class Basis(str, Enum):
    """Symmetric-function bases supported by :mod:`pfhat.symfun`."""

    POWER_SUM = "p"
    COMPLETE = "h"
    SCHUR = "s"


@dataclass(frozen=True)
class SymFun:
    """Homogeneous symmetric function as a sparse map partition -> rational.

    Zero coefficients are dropped on construction.

    Attributes:
        degree: Homogeneous degree n.
        basis: Which basis the coefficients refer to.
        coeffs: Map from partitions of ``degree`` to exact rationals.
    """

    degree: int
    basis: Basis
    coeffs: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for lam, value in self.coeffs.items():
            if lam.n != self.degree:
                raise ValidationError(f"{lam} is not a partition of {self.degree}")
            value = Fraction(value)
            if value:
                clean[lam] = value
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.coeffs.get(lam, Fraction(0))

    def items(self) -> list[tuple[Partition, Fraction]]:
        return list(self.coeffs.items())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for lam, value in self.coeffs.items():
            index = "".join(str(p) for p in lam.parts) if lam.n < 10 else lam.key
            terms.append(f"{format_rational(value)}*{self.basis.value}[{index}]")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "basis": self.basis.value,
            "degree": self.degree,
            "coeffs": {lam.key: format_rational(v) for lam, v in self.coeffs.items()},
        }


@dataclass(frozen=True)
class OrbitReport:
    """Orbit count from a closed form, optionally checked against Burnside.

    Attributes:
        params: ``{"n": .., "c": ..}`` or ``{"a": .., "b": .., "c": ..}``.
        formula_count: Value of the closed form.
        oracle_count: Brute-force Burnside count when requested.
        method: Name of the closed form used.
    """

    params: dict[str, int]
    formula_count: int
    oracle_count: Optional[int] = None
    method: str = ""

    @property
    def agrees(self) -> bool:
        return self.oracle_count is None or self.oracle_count == self.formula_count

    def to_json(self) -> dict:
        out: dict = dict(self.params)
        out["method"] = self.method
        out["orbits"] = self.formula_count
        if self.oracle_count is not None:
            out["oracle"] = self.oracle_count
            out["agrees"] = self.agrees
        return out


@dataclass(frozen=True)
class Classification:
    """Isomorphism classes of the modules PF̂_{n,c}, c in [n].

    Attributes:
        n: Degree.
        class_index: Map ``c -> k`` with ``c`` in ``C_{n,k}``.
        class_count: ``|D_n|``.
    """

    n: int
    class_index: dict[int, int]
    class_count: int

    def fibers(self) -> dict[int, list[int]]:
        """Map ``k -> sorted C_{n,k}``."""
        out: dict[int, list[int]] = {}
        for c, k in sorted(self.class_index.items()):
            out.setdefault(k, []).append(c)
        return dict(sorted(out.items()))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "classes": {str(k): cs for k, cs in self.fibers().items()},
            "count": self.class_count,
        }
