"""Slim-graph polynomial spans V_n and the character of S_n acting on them.

A slim graph is a subgraph of K_n whose complement is connected. Its
polynomial is ``p(G) = ∏_{ij ∈ E(G), i<j} (x_i - x_j)``. V_n is the span of all
these polynomials; permuting variables preserves it, and the trace of that
action is compared with the character of τ_{n,1}.

Linear algebra is exact: rows are kept in reduced echelon form under graded
lexicographic order with ``x_1 > .. > x_n``.
"""

import itertools
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import networkx as nx

from pfhat.action import apply, build_epf_set, generators
from pfhat.character import chi_c1
from pfhat.errors import InvariantError, ValidationError
from pfhat.models import CharacterVector, ExtendedPF, Partition, Permutation, format_rational
from pfhat.numth import partitions_of
from pfhat.settings import get_settings, parallel_map

log = logging.getLogger(__name__)

Monomial = tuple[int, ...]

BATCH_SIZE = 256


@lru_cache(maxsize=None)
def edge_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Unordered pairs ``(i, j)``, ``i < j``, zero-based, lexicographic; bit k is pair k."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class LabeledGraph:
    """Graph on vertices ``0..n-1`` stored as a bitmask over :func:`edge_pairs`.

    Attributes:
        n: Vertex count.
        mask: Bit k set iff ``edge_pairs(n)[k]`` is an edge.
    """

    n: int
    mask: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError(f"n must be >= 1, got {self.n}")
        if self.mask < 0 or self.mask >> len(edge_pairs(self.n)):
            raise ValidationError(f"mask {self.mask} has bits beyond C({self.n},2)")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "LabeledGraph":
        """Build from 1-based vertex pairs."""
        index = {pair: k for k, pair in enumerate(edge_pairs(n))}
        mask = 0
        for u, v in edges:
            i, j = sorted((u - 1, v - 1))
            if (i, j) not in index:
                raise ValidationError(f"({u}, {v}) is not an edge of K_{n}")
            mask |= 1 << index[(i, j)]
        return cls(n, mask)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [pair for k, pair in enumerate(edge_pairs(self.n)) if self.mask >> k & 1]

    @property
    def edge_count(self) -> int:
        return bin(self.mask).count("1")

    def complement(self) -> "LabeledGraph":
        full = (1 << len(edge_pairs(self.n))) - 1
        return LabeledGraph(self.n, full ^ self.mask)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def is_slim(self) -> bool:
        return bool(nx.is_connected(self.complement().to_networkx()))


def _check_bound(n: int, allow_big: bool) -> None:
    settings = get_settings()
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if n > settings.slim_big_n:
        raise ValidationError(f"slim-graph spans are limited to n <= {settings.slim_big_n}")
    if n > settings.slim_max_n and not allow_big:
        raise ValidationError(
            f"n={n} exceeds {settings.slim_max_n}; pass allow_big to run it anyway"
        )


def enumerate_slim(n: int, allow_big: bool = False) -> list[LabeledGraph]:
    """All slim graphs on ``[n]``, fewest edges first, then by mask.

    Example:
        >>> len(enumerate_slim(3)), len(enumerate_slim(4))
        (4, 38)
    """
    _check_bound(n, allow_big)
    graphs = [LabeledGraph(n, mask) for mask in range(1 << len(edge_pairs(n)))]
    slim = [g for g in graphs if g.is_slim()]
    slim.sort(key=lambda g: (g.edge_count, g.mask))
    log.debug("n=%d: %d slim graphs out of %d", n, len(slim), len(graphs))
    return slim


def _monomial_key(e: Monomial) -> tuple[int, Monomial]:
    return (sum(e), e)


@dataclass(frozen=True)
class MultiPoly:
    """Sparse polynomial in ``x_1, .., x_n`` with exact rational coefficients.

    Attributes:
        n: Number of variables.
        terms: Exponent vector -> nonzero coefficient.
    """

    n: int
    terms: dict[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for e, c in self.terms.items():
            if len(e) != self.n:
                raise ValidationError(f"exponent {e} does not have {self.n} entries")
            c = Fraction(c)
            if c:
                clean[tuple(e)] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, n: int, value: int = 1) -> "MultiPoly":
        return cls(n, {(0,) * n: Fraction(value)})

    @classmethod
    def linear(cls, n: int, const: int, coeffs: dict[int, int]) -> "MultiPoly":
        """``const + Σ coeffs[i]·x_i`` with 1-based variable indices."""
        terms: dict[Monomial, Fraction] = {(0,) * n: Fraction(const)}
        for i, c in coeffs.items():
            e = [0] * n
            e[i - 1] = 1
            terms[tuple(e)] = Fraction(c)
        return cls(n, terms)

    @classmethod
    def product(cls, n: int, factors: Iterable["MultiPoly"]) -> "MultiPoly":
        result = cls.constant(n)
        for f in factors:
            result = result * f
        return result

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.n, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        out: dict[Monomial, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.n, out)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, e: Monomial) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValidationError("the zero polynomial has no leading monomial")
        return max(self.terms, key=_monomial_key)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_monomial_key, reverse=True):
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            coeff = format_rational(self.terms[e])
            parts.append(f"{coeff}*{mono}" if mono else coeff)
        return " + ".join(parts).replace("+ -", "- ")


def graph_poly(graph: LabeledGraph) -> MultiPoly:
    """``∏_{ij ∈ E(G)} (x_i - x_j)`` with the smaller vertex first.

    Example:
        >>> str(graph_poly(LabeledGraph.from_edges(3, [(1, 2)])))
        '1*x1 - 1*x2'
    """
    n = graph.n
    terms: dict[Monomial, int] = {(0,) * n: 1}
    for i, j in graph.edges:
        out: dict[Monomial, int] = {}
        for e, c in terms.items():
            up = list(e)
            up[i] += 1
            out[tuple(up)] = out.get(tuple(up), 0) + c
            down = list(e)
            down[j] += 1
            out[tuple(down)] = out.get(tuple(down), 0) - c
        terms = {e: c for e, c in out.items() if c}
    return MultiPoly(n, {e: Fraction(c) for e, c in terms.items()})


def relabel(perm: Permutation, f: MultiPoly) -> MultiPoly:
    """Permute variables as τ permutes coordinates: ``e -> (e_{π_1}, .., e_{π_n})``."""
    if perm.n != f.n:
        raise ValidationError(f"permutation of degree {perm.n} cannot act on {f.n} variables")
    images = perm.zero_based
    return MultiPoly(f.n, {tuple(e[p] for p in images): c for e, c in f.terms.items()})


class SpanBasis:
    """Reduced row echelon basis of a polynomial span.

    Every row has coefficient 1 at its pivot monomial and 0 at the pivots of
    all other rows. Rows are only added during a build; afterwards the basis is
    read-only and can be shared.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self._rows: list[dict[Monomial, Fraction]] = []
        self._pivots: list[Monomial] = []
        self._pivot_row: dict[Monomial, int] = {}

    @property
    def dimension(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[Monomial]:
        """Pivot monomials, largest first."""
        return sorted(self._pivots, key=_monomial_key, reverse=True)

    def row_at(self, pivot: Monomial) -> MultiPoly:
        """The row whose pivot is ``pivot``."""
        return MultiPoly(self.n, dict(self._rows[self._pivot_row[pivot]]))

    def rows(self) -> list[MultiPoly]:
        """Rows ordered by pivot, largest first."""
        return [self.row_at(m) for m in self.pivots]

    def _reduce(self, terms: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
        r = dict(terms)
        # One pass suffices: subtracting a row never touches another pivot.
        for mono in [m for m in r if m in self._pivot_row]:
            c = r.get(mono)
            if not c:
                continue
            for e, v in self._rows[self._pivot_row[mono]].items():
                value = r.get(e, Fraction(0)) - c * v
                if value:
                    r[e] = value
                else:
                    r.pop(e, None)
        return r

    def reduce(self, f: MultiPoly) -> MultiPoly:
        """Remainder of ``f`` after eliminating every pivot monomial."""
        return MultiPoly(self.n, self._reduce(f.terms))

    def contains(self, f: MultiPoly) -> bool:
        return not self._reduce(f.terms)

    def insert(self, f: MultiPoly) -> bool:
        """Add ``f`` to the span; returns whether the dimension grew."""
        r = self._reduce(f.terms)
        if not r:
            return False
        pivot = max(r, key=_monomial_key)
        scale = r[pivot]
        r = {e: v / scale for e, v in r.items()}
        for row in self._rows:
            c = row.get(pivot)
            if not c:
                continue
            for e, v in r.items():
                value = row.get(e, Fraction(0)) - c * v
                if value:
                    row[e] = value
                else:
                    row.pop(e, None)
        self._pivot_row[pivot] = len(self._rows)
        self._rows.append(r)
        self._pivots.append(pivot)
        return True

    def coordinates(self, f: MultiPoly) -> dict[Monomial, Fraction]:
        """Coefficients of ``f`` on the rows, keyed by pivot.

        Raises:
            InvariantError: If ``f`` is not in the span.
        """
        if not self.contains(f):
            raise InvariantError(f"polynomial of degree {f.degree} is not in the span")
        return {m: f.coefficient(m) for m in self._pivots if f.coefficient(m)}


def expected_dimension(n: int) -> int:
    """``n^{n-2}`` (1 for n = 1)."""
    return 1 if n == 1 else n ** (n - 2)


def _build(n: int, full_pass: bool, workers: Optional[int]) -> SpanBasis:
    graphs = enumerate_slim(n, allow_big=True)
    target = expected_dimension(n)
    basis = SpanBasis(n)
    done = 0
    for start in range(0, len(graphs), BATCH_SIZE):
        batch = graphs[start : start + BATCH_SIZE]
        for poly in parallel_map(graph_poly, batch, workers):
            basis.insert(poly)
        done += len(batch)
        log.debug("V_%d: %d/%d graphs, rank %d", n, done, len(graphs), basis.dimension)
        if not full_pass and basis.dimension >= target:
            break
    log.info("V_%d has dimension %d after %d graphs", n, basis.dimension, done)
    return basis


@lru_cache(maxsize=8)
def _cached_build(n: int, full_pass: bool) -> SpanBasis:
    return _build(n, full_pass, None)


def build_Vn(
    n: int, allow_big: bool = False, full_pass: bool = False, workers: Optional[int] = None
) -> SpanBasis:
    """Reduced basis of ``span{p(G) : G slim on [n]}``.

    Args:
        n: Vertex count.
        allow_big: Permit n above the configured ``slim_max_n``.
        full_pass: Insert every slim graph even after the rank reaches ``n^{n-2}``.
        workers: Processes for polynomial expansion; ``None`` uses the settings.
            Builds with the configured worker count are cached.

    Example:
        >>> build_Vn(3).dimension
        3
    """
    _check_bound(n, allow_big)
    if workers is None:
        return _cached_build(n, full_pass)
    return _build(n, full_pass, workers)


def sigma_trace(
    perm: Permutation, allow_big: bool = False, basis: Optional[SpanBasis] = None
) -> int:
    """Trace of ``perm`` on V_n, for any permutation of [n].

    Raises:
        InvariantError: If a relabeled row leaves the span.
    """
    basis = basis or build_Vn(perm.n, allow_big=allow_big)
    if basis.n != perm.n:
        raise ValidationError(f"{perm} does not act on V_{basis.n}")
    total = Fraction(0)
    for pivot in basis.pivots:
        image = relabel(perm, basis.row_at(pivot))
        if not basis.contains(image):
            raise InvariantError(f"V_{basis.n} is not closed under {perm}")
        total += image.coefficient(pivot)
    if total.denominator != 1:
        raise InvariantError(f"trace of {perm} is not an integer: {total}")
    return total.numerator


def sigma_character(
    n: int, lam: Partition, allow_big: bool = False, basis: Optional[SpanBasis] = None
) -> int:
    """Trace on V_n of the canonical permutation of cycle type ``λ``.

    Each row is relabeled, checked to lie in V_n, and its coordinate on itself
    is read off at the row's pivot.

    Raises:
        InvariantError: If a relabeled row leaves the span.
    """
    if lam.n != n:
        raise ValidationError(f"{lam} is not a partition of {n}")
    basis = basis or build_Vn(n, allow_big=allow_big)
    return sigma_trace(Permutation.of_cycle_type(lam), basis=basis)


def sigma_character_vector(n: int, allow_big: bool = False) -> CharacterVector:
    basis = build_Vn(n, allow_big=allow_big)
    values = {lam: sigma_character(n, lam, basis=basis) for lam in partitions_of(n)}
    return CharacterVector(n, values, label=f"sigma({n})")


def action_closure(n: int, allow_big: bool = False) -> bool:
    """Every basis row stays in V_n under every generator of S_n."""
    basis = build_Vn(n, allow_big=allow_big)
    return all(
        basis.contains(relabel(g, row)) for g in generators(n) for row in basis.rows()
    )


@dataclass(frozen=True)
class ConjectureReport:
    """Comparison of the trace of σ_n with the character of τ_{n,1}.

    Attributes:
        n: Degree.
        dimension: Rank of V_n.
        expected_dimension: ``n^{n-2}``.
        traces: Trace of σ_n per cycle type.
        predicted: ``chi_c1(n, λ)`` per cycle type.
    """

    n: int
    dimension: int
    expected_dimension: int
    traces: dict[Partition, int]
    predicted: dict[Partition, int]

    @property
    def mismatches(self) -> list[Partition]:
        return [lam for lam in self.predicted if self.traces.get(lam) != self.predicted[lam]]

    @property
    def passed(self) -> bool:
        return self.dimension == self.expected_dimension and not self.mismatches

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dimension": self.dimension,
            "expected_dimension": self.expected_dimension,
            "traces": {lam.key: v for lam, v in self.traces.items()},
            "predicted": {lam.key: v for lam, v in self.predicted.items()},
            "mismatches": [lam.key for lam in self.mismatches],
            "passed": self.passed,
        }


def verify_conjecture(
    n: int, allow_big: bool = False, basis: Optional[SpanBasis] = None
) -> ConjectureReport:
    """Compare σ_n with τ_{n,1} class by class; a mismatch is reported, not raised.

    Within ``slim_max_n`` every slim graph is inserted, so a rank above
    ``n^{n-2}`` would show up; larger n stop once that rank is reached.
    A prebuilt ``basis`` is used as given.
    """
    if basis is None:
        basis = build_Vn(n, allow_big=allow_big, full_pass=n <= get_settings().slim_max_n)
    elif basis.n != n:
        raise ValidationError(f"basis spans V_{basis.n}, not V_{n}")
    lams = partitions_of(n)
    report = ConjectureReport(
        n,
        basis.dimension,
        expected_dimension(n),
        {lam: sigma_character(n, lam, basis=basis) for lam in lams},
        {lam: chi_c1(n, lam) for lam in lams},
    )
    if report.passed:
        log.info("sigma(%d) matches tau(%d,1) on all %d classes", n, n, len(lams))
    else:
        log.warning("sigma(%d) differs from tau(%d,1) at %s", n, n, report.mismatches)
    return report


# Representatives of PF^_{n,1} orbits and their proposed images in V_n, as
# products of linear factors (constant, {variable: coefficient}).
_Linear = tuple[int, dict[int, int]]

TABLE: dict[int, list[tuple[str, list[_Linear]]]] = {
    3: [("001", [(1, {1: 1, 2: 1, 3: -2})])],
    4: [
        ("0003", [(1, {1: 1, 2: 1, 3: 1, 4: -3})]),
        ("0012", [(0, {4: 1, 1: -1}), (0, {4: 1, 2: -1}), (1, {1: 1, 2: 1, 3: -2})]),
    ],
    5: [
        ("00001", [(1, {1: 1, 2: 1, 3: 1, 4: 1, 5: -4})]),
        ("00033", [(0, {1: 1, 2: 1, 3: 1, 4: -3}), (0, {1: 1, 2: 1, 3: 1, 5: -3})]),
        ("01113", [(0, {1: 1, 2: -1}), (0, {1: 1, 3: -1}), (0, {1: 1, 4: -1})]),
        (
            "00114",
            [
                (0, {5: 1, 3: -1}),
                (0, {5: 1, 4: -1}),
                (0, {1: 1, 2: 1, 3: -2}),
                (0, {1: 1, 2: 1, 4: -2}),
            ],
        ),
        (
            "00123",
            [
                (0, {5: 1, 1: -1}),
                (0, {5: 1, 2: -1}),
                (0, {5: 1, 3: -1}),
                (0, {4: 1, 1: -1}),
                (0, {4: 1, 2: -1}),
                (1, {1: 1, 2: 1, 3: -2}),
            ],
        ),
    ],
}


def table_polynomial(n: int, factors: Sequence[_Linear]) -> MultiPoly:
    return MultiPoly.product(n, (MultiPoly.linear(n, c, coeffs) for c, coeffs in factors))


def _basis_image_n3(x: ExtendedPF) -> MultiPoly:
    """``e_k -> 1 - 3x_k + x_1 + x_2 + x_3`` on PF̂_{3,1} = {001, 010, 100}."""
    k = x.coords.index(1) + 1
    coeffs = {i: 1 for i in range(1, 4)}
    coeffs[k] = -2
    return MultiPoly.linear(3, 1, coeffs)


def n3_map_commutes() -> bool:
    """The map ``100 -> 1-2x_1+x_2+x_3`` (and its images) intertwines τ_{3,1} and σ_3."""
    elements = build_epf_set(3, 1)
    perms = [Permutation(p) for p in itertools.permutations(range(1, 4))]
    return all(
        relabel(pi, _basis_image_n3(x)) == _basis_image_n3(apply(pi, x))
        for pi in perms
        for x in elements
    )


@dataclass(frozen=True)
class TableReport:
    """Membership of the tabulated polynomials in V_n.

    Attributes:
        n: Degree.
        members: ``(word, polynomial, in V_n)`` per row.
        equivariant: n=3 only, whether the displayed map commutes with S_3.
    """

    n: int
    members: list[tuple[str, str, bool]]
    equivariant: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.members) and self.equivariant is not False

    def to_json(self) -> dict:
        out: dict = {
            "n": self.n,
            "rows": [{"word": w, "poly": p, "in_span": ok} for w, p, ok in self.members],
            "passed": self.passed,
        }
        if self.equivariant is not None:
            out["equivariant"] = self.equivariant
        return out


def verify_table(n: int, basis: Optional[SpanBasis] = None) -> TableReport:
    """Check that every tabulated polynomial for ``n ∈ {3, 4, 5}`` lies in V_n.

    Pass the ``basis`` from an earlier build to skip rebuilding V_n.
    """
    if n not in TABLE:
        raise ValidationError(f"the table covers n in {sorted(TABLE)}, got {n}")
    if basis is None:
        basis = build_Vn(n)
    elif basis.n != n:
        raise ValidationError(f"basis spans V_{basis.n}, not V_{n}")
    members = []
    for word, factors in TABLE[n]:
        poly = table_polynomial(n, factors)
        members.append((word, str(poly), basis.contains(poly)))
    equivariant = n3_map_commutes() if n == 3 else None
    report = TableReport(n, members, equivariant)
    if not report.passed:
        log.warning("table check failed for n=%d", n)
    return report
