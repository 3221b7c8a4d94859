"""Formula-versus-oracle checks, run by ``pfhat selftest``.

Each check returns a :class:`CheckResult`. A failed ``invariant`` check is a
bug, a failed ``conjecture`` check is a mathematical finding, and ``report``
checks (h-positivity) are recorded without ever failing the run.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass

from pfhat.action import (
    brute_character,
    brute_rational_character,
    burnside_orbit_count,
    rational_burnside_orbit_count,
)
from pfhat.character import character_vector, chi, chi_c1, chi_cn, chi_congruence, chi_rational
from pfhat.classify import character_classes, class_count, classify
from pfhat.errors import PfhatError, ValidationError
from pfhat.numth import divisors, jordan_totient2, partitions_of
from pfhat.orbits import F_of, orbits_c1, orbits_cn, orbits_rational_c1, subset_sum_check
from pfhat.parking import classical_character
from pfhat.settings import get_settings
from pfhat.slimgraph import build_Vn, verify_conjecture, verify_table
from pfhat.symfun import frobenius, is_h_positive, is_schur_positive

log = logging.getLogger(__name__)

ORBITS_C1_PREFIX = (1, 1, 1, 2, 5, 13, 35, 100, 300)
RATIONAL_PAIRS = ((2, 3), (3, 2), (3, 4), (5, 2), (5, 3), (5, 6))
BRUTE_MAX_N = 7


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one self-check.

    Attributes:
        name: Short identifier.
        passed: Whether the check held.
        detail: First counterexample or a summary.
        kind: ``"invariant"``, ``"conjecture"`` or ``"report"``.
    """

    name: str
    passed: bool
    detail: str = ""
    kind: str = "invariant"

    def to_json(self) -> dict:
        return {"name": self.name, "kind": self.kind, "passed": self.passed, "detail": self.detail}


def _run(name: str, fn: Callable[[], str], kind: str = "invariant") -> CheckResult:
    """``fn`` returns ``""`` on success or a description of the first failure."""
    try:
        failure = fn()
    except PfhatError as exc:
        failure = f"{type(exc).__name__}: {exc}"
    result = CheckResult(name, not failure, failure or "ok", kind)
    if result.passed:
        log.info("check %s: ok", name)
    elif kind == "report":
        log.info("check %s: %s", name, failure)
    else:
        log.error("check %s failed: %s", name, failure)
    return result


def _characters_vs_brute(max_n: int) -> str:
    for n in range(1, min(max_n, BRUTE_MAX_N) + 1):
        for c in range(1, n + 1):
            for lam in partitions_of(n):
                formula, brute = chi(n, c, lam), brute_character(n, c, lam)
                if formula != brute:
                    return f"chi({n},{c},{lam}) = {formula}, brute force {brute}"
    return ""


def _specializations(max_n: int) -> str:
    for n in range(1, max_n + 1):
        for lam in partitions_of(n):
            if chi_c1(n, lam) != chi(n, 1, lam):
                return f"chi_c1({n},{lam}) != chi({n},1,{lam})"
            if chi_cn(n, lam) != chi(n, n, lam):
                return f"chi_cn({n},{lam}) != chi({n},{n},{lam})"
            for c in range(1, n + 1):
                if chi_congruence(n, c, lam) != chi(n, c, lam):
                    return f"chi_congruence({n},{c},{lam}) != chi"
    return ""


def _orbits_vs_burnside(max_n: int) -> str:
    for n in range(1, min(max_n, BRUTE_MAX_N) + 1):
        if orbits_c1(n) != burnside_orbit_count(n, 1):
            return f"o({n},1) disagrees with Burnside"
        if orbits_cn(n) != burnside_orbit_count(n, n):
            return f"o({n},{n}) disagrees with Burnside"
    return ""


def _orbit_prefix() -> str:
    found = tuple(orbits_c1(n) for n in range(1, len(ORBITS_C1_PREFIX) + 1))
    return "" if found == ORBITS_C1_PREFIX else f"o(n,1) starts {found}"


def _classification(max_n: int) -> str:
    for n in range(1, max_n + 1):
        fibers = sorted(classify(n).fibers().values())
        groups = character_classes(n)
        if len(groups) != class_count(n) or groups != fibers:
            return f"n={n}: characters group c as {groups}, C(n,k) gives {fibers}"
    return ""


def _restriction(max_n: int) -> str:
    for n in range(2, max_n + 1):
        for lam in partitions_of(n):
            if 1 not in lam.parts:
                continue
            expected = classical_character(n - 1, lam.remove_part(1))
            for c in range(1, n + 1):
                if chi(n, c, lam) != expected:
                    return f"chi({n},{c},{lam}) != {expected}"
    return ""


def _rational() -> str:
    for a, b in RATIONAL_PAIRS:
        for lam in partitions_of(a + 1):
            if chi_rational(a, b, lam) != brute_rational_character(a, b, 1, lam):
                return f"chi_rational({a},{b},{lam}) disagrees with brute force"
        if orbits_rational_c1(a, b) != rational_burnside_orbit_count(a, b, 1):
            return f"o({a},{b},1) disagrees with Burnside"
    return ""


def _number_theory(max_n: int) -> str:
    for m in range(1, 201):
        if sum(jordan_totient2(d) for d in divisors(m)) != m * m:
            return f"sum of J_2 over divisors of {m} is not {m * m}"
    for m in range(1, 101):
        for e in range(1, 11):
            F_of(m, e)
    for n in range(1, min(max_n, 10) + 1):
        if not subset_sum_check(n):
            return f"subset-sum count at n={n}"
    return ""


def _schur_positive(max_n: int) -> str:
    for n in range(1, min(max_n, 8) + 1):
        for c in range(1, n + 1):
            if not is_schur_positive(frobenius(character_vector(n, c))):
                return f"Frob(tau({n},{c})) is not Schur positive"
    return ""


def _h_positive(max_n: int) -> str:
    negative = [
        n
        for n in range(1, min(max_n, 7) + 1)
        if not is_h_positive(frobenius(character_vector(n, 1)))
    ]
    return f"not h-positive at n in {negative}" if negative else ""


def _slim(max_n: int) -> str:
    for n in range(3, min(max_n, get_settings().slim_max_n) + 1):
        basis = build_Vn(n, full_pass=True)
        report = verify_conjecture(n, basis=basis)
        if not report.passed:
            keys = [str(lam) for lam in report.mismatches]
            return f"n={n}: dimension {report.dimension}, mismatches {keys}"
        if not verify_table(n, basis=basis).passed:
            return f"n={n}: tabulated polynomials not all in V_n"
    return ""


def run_selftest(max_n: int = 5) -> list[CheckResult]:
    """Run every check up to degree ``max_n`` (brute force stops at 7)."""
    if max_n < 1:
        raise ValidationError(f"max_n must be >= 1, got {max_n}")
    log.info("running self-checks up to n=%d", max_n)
    return [
        _run("characters-vs-brute-force", lambda: _characters_vs_brute(max_n)),
        _run("character-specializations", lambda: _specializations(max_n)),
        _run("orbits-vs-burnside", lambda: _orbits_vs_burnside(max_n)),
        _run("orbit-sequence", _orbit_prefix),
        _run("classification", lambda: _classification(max_n)),
        _run("restriction", lambda: _restriction(max_n)),
        _run("rational-family", _rational),
        _run("number-theory", lambda: _number_theory(max_n)),
        _run("schur-positivity", lambda: _schur_positive(max_n)),
        _run("h-positivity", lambda: _h_positive(max_n), kind="report"),
        _run("slim-graphs", lambda: _slim(max_n), kind="conjecture"),
    ]


def exit_status(results: list[CheckResult]) -> int:
    """0 if all hold, 2 if an invariant failed, 3 if only the conjecture check failed."""
    failed = {r.kind for r in results if not r.passed}
    if "invariant" in failed:
        return 2
    if "conjecture" in failed:
        return 3
    return 0

