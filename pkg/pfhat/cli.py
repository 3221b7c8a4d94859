import argparse
import logging
import sys
from typing import Optional

from .action import (
    apply,
    apply_rational,
    brute_character,
    brute_character_vector,
    brute_rational_character,
    build_epf_set,
    build_rational_epf_set,
    orbit_decomposition,
    rational_orbit_decomposition,
)
from .character import character_vector, chi, chi_rational, rational_character_vector
from .classify import classify
from .errors import InvariantError, ValidationError
from .exporter import character_frame, plot_orbit_counts, to_json, write_csv
from .models import Basis, CharacterVector, ExtendedPF, Partition, Permutation
from .orbits import orbit_report, orbit_sequence, rational_orbit_report
from .parking import enumerate_pf, enumerate_rational, format_word, parse_word
from .selftest import exit_status, run_selftest
from .settings import get_settings, set_settings
from .slimgraph import (
    build_Vn,
    expected_dimension,
    sigma_character_vector,
    verify_conjecture,
    verify_table,
)
from .symfun import frobenius, schur_defects, to_h, to_schur

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_INVARIANT = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    """Raised by the argument parser instead of exiting with status 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def _emit(args, payload, text: str) -> None:
    print(to_json(payload) if args.json else text)


def _vector_text(vector: CharacterVector) -> str:
    return "\n".join(f"{lam.key}\t{v}" for lam, v in vector.values.items())


def _read_epf(word: str, n: int, c: int) -> ExtendedPF:
    if n < 1 or not 1 <= c <= n:
        raise ValidationError(f"need n >= 1 and 1 <= c <= n, got n={n}, c={c}")
    coords = parse_word(word)
    if len(coords) != n:
        raise ValidationError(f"input {word!r} must have length {n}")
    return ExtendedPF(coords, n, c)


def cmd_enumerate(args) -> int:
    if args.a is not None or args.b is not None:
        if args.a is None or args.b is None:
            raise ValidationError("--a and --b go together")
        if args.c is None:
            words = list(enumerate_rational(args.a, args.b))
        else:
            words = [x.coords for x in build_rational_epf_set(args.a, args.b, args.c)]
    else:
        if args.n is None:
            raise ValidationError("give --n, or --a and --b")
        if args.c is None:
            words = enumerate_pf(args.n, increasing=args.increasing)
        else:
            words = [x.coords for x in build_epf_set(args.n, args.c)]
    log.info("%d elements", len(words))
    _emit(args, [list(w) for w in words], "\n".join(format_word(w) for w in words))
    return EXIT_OK


def cmd_act(args) -> int:
    perm = Permutation.parse(args.perm)
    if args.b is None:
        if args.n is None:
            raise ValidationError("give --n, or --b for the rational family")
        x = _read_epf(args.input, args.n, args.c)
        image = apply(perm, x)
    else:
        coords = parse_word(args.input)
        a = len(coords) - 1
        if args.n is not None and args.n != a + 1:
            raise ValidationError(f"--n {args.n} does not match input length {a + 1}")
        members = {x.coords: x for x in build_rational_epf_set(a, args.b, args.c)}
        if coords not in members:
            raise ValidationError(f"{args.input!r} is not in PF^({a},{args.b},{args.c})")
        image = apply_rational(perm, members[coords])
    payload = {
        "perm": list(perm.images),
        "input": list(parse_word(args.input)),
        "output": list(image.coords),
    }
    _emit(args, payload, image.word)
    return EXIT_OK


def cmd_char(args) -> int:
    rational = args.a is not None or args.b is not None
    if rational and (args.a is None or args.b is None):
        raise ValidationError("--a and --b go together")
    if not rational and args.n is None:
        raise ValidationError("give --n, or --a and --b")
    if args.lam is not None:
        lam = Partition.parse(args.lam)
        if rational and args.brute:
            value = brute_rational_character(args.a, args.b, 1, lam)
        elif rational:
            value = chi_rational(args.a, args.b, lam)
        else:
            value = (brute_character if args.brute else chi)(args.n, args.c, lam)
        _emit(args, {"lambda": lam.key, "value": value}, str(value))
        return EXIT_OK
    if rational:
        vector = rational_character_vector(args.a, args.b)
    elif args.brute:
        vector = brute_character_vector(args.n, args.c)
    else:
        vector = character_vector(args.n, args.c)
    _emit(args, vector, _vector_text(vector))
    return EXIT_OK


def cmd_frob(args) -> int:
    f = frobenius(character_vector(args.n, args.c))
    basis = Basis(args.basis)
    if basis is Basis.SCHUR:
        f = to_schur(f)
        for mu, v in schur_defects(f):
            log.warning("[s_%s] = %s", mu, v)
    elif basis is Basis.COMPLETE:
        f = to_h(f)
    _emit(args, f, str(f))
    return EXIT_OK


def _orbit_lines(orbits: list[list[ExtendedPF]]) -> str:
    return "\n".join(" ".join(x.word for x in orbit) for orbit in orbits)


def cmd_orbits(args) -> int:
    if args.sequence is not None:
        rows = orbit_sequence(args.sequence)
        payload = [{"n": n, "c1": o1, "cn": on} for n, o1, on in rows]
        _emit(args, payload, "\n".join(f"{n}\t{o1}\t{on}" for n, o1, on in rows))
        if args.plot:
            plot_orbit_counts(args.plot, args.sequence)
        return EXIT_OK
    if args.n is None:
        raise ValidationError("give --n or --sequence")
    c = args.n if args.c is None else args.c
    report = orbit_report(args.n, c, oracle=args.oracle)
    if args.list:
        orbits = orbit_decomposition(args.n, c)
        payload = report.to_json()
        payload["list"] = [[x.word for x in orbit] for orbit in orbits]
        _emit(args, payload, _orbit_lines(orbits))
    else:
        _emit(args, report, str(report.formula_count))
    if args.plot:
        plot_orbit_counts(args.plot, args.n)
    return EXIT_OK if report.agrees else EXIT_INVARIANT


def cmd_orbits_rational(args) -> int:
    report = rational_orbit_report(args.a, args.b, oracle=args.oracle)
    if args.list:
        orbits = rational_orbit_decomposition(args.a, args.b, 1)
        payload = report.to_json()
        payload["list"] = [[x.word for x in orbit] for orbit in orbits]
        _emit(args, payload, _orbit_lines(orbits))
    else:
        _emit(args, report, str(report.formula_count))
    return EXIT_OK if report.agrees else EXIT_INVARIANT


def cmd_classify(args) -> int:
    result = classify(args.n)
    text = "\n".join(f"{k}: {cs}" for k, cs in result.fibers().items())
    _emit(args, result, text)
    if args.csv:
        write_csv(character_frame(args.n), args.csv)
    return EXIT_OK


def cmd_slim(args) -> int:
    if args.action == "dim":
        basis = build_Vn(args.n, allow_big=args.allow_big)
        payload = {
            "n": args.n,
            "dimension": basis.dimension,
            "expected": expected_dimension(args.n),
        }
        _emit(args, payload, str(basis.dimension))
        return EXIT_OK
    if args.action == "char":
        vector = sigma_character_vector(args.n, allow_big=args.allow_big)
        _emit(args, vector, _vector_text(vector))
        return EXIT_OK
    if args.action == "verify-conjecture":
        report = verify_conjecture(args.n, allow_big=args.allow_big)
        _emit(args, report, "pass" if report.passed else f"FAIL {report.to_json()['mismatches']}")
        return EXIT_OK if report.passed else EXIT_MISMATCH
    table = verify_table(args.n)
    lines = [f"{w}\t{'ok' if ok else 'MISSING'}\t{p}" for w, p, ok in table.members]
    if table.equivariant is not None:
        lines.append(f"equivariant\t{'ok' if table.equivariant else 'FAIL'}")
    _emit(args, table, "\n".join(lines))
    return EXIT_OK if table.passed else EXIT_MISMATCH


def cmd_selftest(args) -> int:
    results = run_selftest(args.max_n)
    text = "\n".join(
        f"{'ok' if r.passed else 'FAIL':4}  {r.name} [{r.kind}] {'' if r.passed else r.detail}"
        for r in results
    )
    _emit(args, results, text)
    return exit_status(results)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Machine-readable output")

    p = _Parser(
        prog="pfhat",
        description="Extended parking function modules: characters, orbits and slim-graph checks",
    )
    verbosity = p.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Warnings only")
    p.add_argument(
        "--workers", type=int, default=None, help="Worker processes (default: PFHAT_WORKERS or 1)"
    )
    sub = p.add_subparsers(dest="cmd", parser_class=_Parser)

    e = sub.add_parser("enumerate", parents=[common], help="List PF_n, PF_{a,b} or PF^ sets")
    e.add_argument("--n", type=int, default=None)
    e.add_argument("--a", type=int, default=None)
    e.add_argument("--b", type=int, default=None)
    e.add_argument("--c", type=int, default=None, help="List PF^ with this target sum")
    e.add_argument("--increasing", action="store_true", help="Weakly increasing only (PF_n)")
    e.set_defaults(func=cmd_enumerate)

    a = sub.add_parser("act", parents=[common], help="Apply a permutation to an element of PF^")
    a.add_argument("--n", type=int, default=None)
    a.add_argument("--c", type=int, required=True)
    a.add_argument("--b", type=int, default=None, help="Modulus of the rational family")
    a.add_argument("--perm", required=True, help='One-line notation, e.g. "1432"')
    a.add_argument("--input", required=True, help='Word, e.g. "0003"')
    a.set_defaults(func=cmd_act)

    ch = sub.add_parser("char", parents=[common], help="Character of tau(n,c) or tau(a,b,1)")
    ch.add_argument("--n", type=int, default=None)
    ch.add_argument("--c", type=int, default=1)
    ch.add_argument("--a", type=int, default=None)
    ch.add_argument("--b", type=int, default=None)
    ch.add_argument("--lambda", dest="lam", default=None, help='Cycle type, e.g. "3,3"')
    ch.add_argument("--brute", action="store_true", help="Count fixed points instead")
    ch.set_defaults(func=cmd_char)

    f = sub.add_parser("frob", parents=[common], help="Frobenius characteristic of tau(n,c)")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--c", type=int, required=True)
    f.add_argument("--basis", choices=[b.value for b in Basis], default="p")
    f.set_defaults(func=cmd_frob)

    o = sub.add_parser("orbits", parents=[common], help="Orbit counts of tau(n,c)")
    o.add_argument("--n", type=int, default=None)
    o.add_argument("--c", type=int, default=None, help="Default: c = n")
    o.add_argument("--oracle", action="store_true", help="Compare with Burnside brute force")
    o.add_argument("--list", action="store_true", help="Print the orbits")
    o.add_argument("--sequence", type=int, default=None, metavar="MAX_N")
    o.add_argument("--plot", default=None, metavar="PATH", help="Save an orbit-count plot")
    o.set_defaults(func=cmd_orbits)

    r = sub.add_parser("orbits-rational", parents=[common], help="Orbit count of tau(a,b,1)")
    r.add_argument("--a", type=int, required=True)
    r.add_argument("--b", type=int, required=True)
    r.add_argument("--oracle", action="store_true")
    r.add_argument("--list", action="store_true")
    r.set_defaults(func=cmd_orbits_rational)

    k = sub.add_parser("classify", parents=[common], help="Isomorphism classes among tau(n,c)")
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--csv", default=None, metavar="PATH", help="Write the character table")
    k.set_defaults(func=cmd_classify)

    s = sub.add_parser("slim", parents=[common], help="Slim-graph spans V_n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("action", choices=["dim", "char", "verify-conjecture", "verify-table"])
    s.add_argument("--allow-big", action="store_true", help="Allow n above PFHAT_SLIM_MAX_N")
    s.set_defaults(func=cmd_slim)

    t = sub.add_parser("selftest", parents=[common], help="Run formula-versus-oracle checks")
    t.add_argument("--max-n", type=int, default=5)
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    p = build_parser()
    try:
        args = p.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_VALIDATION
    if args.cmd is None:
        p.print_help(sys.stderr)
        return EXIT_VALIDATION

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )

    previous = get_settings()
    try:
        set_settings(previous.with_workers(args.workers))
        return args.func(args)
    except ValidationError as exc:
        log.error("%s", exc)
        return EXIT_VALIDATION
    except InvariantError as exc:
        log.error("internal check failed: %s", exc)
        return EXIT_INVARIANT
    finally:
        set_settings(previous)
