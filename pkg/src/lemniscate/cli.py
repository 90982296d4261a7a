"""Command-line front end (``lemn``).

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .chebyshev import factor_D
from .cmfield import division_poly
from .construct import FermatDecomposition, fermat_decomposition, odd_part, power_of_two_test
from .errors import InternalInconsistency, LemniscateError
from .gaussint import factor, parse_gaussint
from .lemnatomic import irreducibility_evidence, lemnatomic
from .numlem import default_digits
from .suites import SUITES, run
from .zipoly import format_poly

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _gauss(text: str):
    try:
        return parse_gaussint(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"not an integer: {text.strip()!r}") from None
    if n < 1:
        raise UsageError(f"expected a positive integer, got {n}")
    return n


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
    else:
        print(text)


def cmd_gauss_factor(args) -> int:
    beta = _gauss(args.beta)
    fac = factor(beta)
    _emit(args, {"beta": beta.to_json(), **fac.to_json()}, str(fac))
    return EXIT_OK


def cmd_divpoly(args) -> int:
    beta = _gauss(args.beta)
    poly = division_poly(beta)
    _emit(args, {"beta": beta.to_json(), "poly": poly.to_json(), "degree": poly.degree()}, format_poly(poly))
    return EXIT_OK


def cmd_lemnatomic(args) -> int:
    beta = _gauss(args.beta)
    rec = lemnatomic(beta)
    evidence = None
    if not rec.beta.is_unit() and args.trials > 0:
        evidence = irreducibility_evidence(rec.beta, args.trials)
    text = format_poly(rec.poly)
    if evidence is not None:
        text += f"\nirreducibility: {evidence.status}"
    _emit(args, rec.to_json(evidence.to_json() if evidence else None), text)
    if evidence is not None and evidence.status == "REFUTED":
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_constructible(args) -> int:
    n = _positive_int(args.n)
    dec = fermat_decomposition(n)
    ok = isinstance(dec, FermatDecomposition)
    payload = {"n": n, "constructible": ok, "power_of_two_test": power_of_two_test(odd_part(n)[1])}
    if ok:
        payload["decomposition"] = {"k": dec.k, "primes": list(dec.primes)}
        text = f"true, {n} = {dec}"
    else:
        payload["witness"] = {"prime": dec.prime, "reason": dec.reason}
        text = f"false, {dec.reason}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_cheb_d(args) -> int:
    n = _positive_int(args.n)
    if n % 2 == 0:
        raise UsageError(f"{n} is even; D_n is defined here for odd n only")
    parts = factor_D(n)
    payload = {"n": n, "factors": {str(k): p.to_json() for k, p in parts.items()}}
    _emit(args, payload, "\n".join(f"D_{k} = {format_poly(p)}" for k, p in parts.items()))
    return EXIT_OK


def cmd_verify(args) -> int:
    digits = args.digits if args.digits is not None else default_digits()
    results = run(args.suite, args.max_norm, digits)
    failures = [r for r in results if not r.passed]
    status = "PASS" if not failures else "FAIL"
    if args.json:
        payload = {
            "suite": args.suite,
            "max_norm": args.max_norm,
            "digits": digits,
            "status": status,
            "cases": [r.to_json() for r in results],
        }
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for r in results:
            if args.verbose or not r.passed or r.residual is not None:
                print(r.line())
        counts = {}
        for r in results:
            tot, bad = counts.get(r.suite, (0, 0))
            counts[r.suite] = (tot + 1, bad + (not r.passed))
        for suite, (tot, bad) in counts.items():
            print(f"{suite}: {tot - bad}/{tot} passed")
        print(status)
    if any(r.fatal for r in failures):
        return EXIT_INTERNAL
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="lemn", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    gauss = sub.add_parser("gauss", help="Gaussian integer arithmetic")
    gsub = gauss.add_subparsers(dest="gauss_command", required=True)
    p = gsub.add_parser("factor", parents=[common], help="factor into normalized primes")
    p.add_argument("beta")
    p.set_defaults(func=cmd_gauss_factor)

    p = sub.add_parser("divpoly", parents=[common], help="division polynomial x P(x^4)")
    p.add_argument("beta")
    p.set_defaults(func=cmd_divpoly)

    p = sub.add_parser("lemnatomic", parents=[common], help="lemnatomic polynomial with Frobenius evidence")
    p.add_argument("beta")
    p.add_argument("--trials", type=int, default=3, help="admissible primes to test (default 3)")
    p.set_defaults(func=cmd_lemnatomic)

    p = sub.add_parser("constructible", parents=[common], help="can the lemniscate be divided into n parts")
    p.add_argument("n")
    p.set_defaults(func=cmd_constructible)

    cheb = sub.add_parser("cheb", help="Chebyshev polynomials")
    csub = cheb.add_subparsers(dest="cheb_command", required=True)
    p = csub.add_parser("d", parents=[common], help="factors D_k of C_n for odd n")
    p.add_argument("n")
    p.set_defaults(func=cmd_cheb_d)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-norm", type=int, default=200)
    p.add_argument("--digits", type=int, default=None, help="working precision (overrides LEMN_DIGITS)")
    p.add_argument("-v", "--verbose", action="store_true", help="print every case")
    p.set_defaults(func=cmd_verify)
    return parser


def _protect_negative(argv: list[str]) -> list[str]:
    # argparse reads "-1+2i" or "-3" as an option; a leading space keeps it
    # positional and both parsers ignore whitespace.
    out = []
    for tok in argv:
        if tok.startswith("-") and len(tok) > 1 and not tok.startswith("--"):
            try:
                parse_gaussint(tok)
            except ValueError:
                pass
            else:
                tok = " " + tok
        out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negative(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except LemniscateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE if isinstance(exc, ValueError) else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
