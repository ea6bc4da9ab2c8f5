"""goldman: command-line front end.

Exit status: 0 on success or PASS, 1 on FAIL or REJECT, 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import os
import sys
import tempfile

from . import checker, identities, synthesis, words
from .algebra import bracket, format_element, format_rational, parse_element
from .lattice import GenusConfig, format_vector, parse_vector

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _write_atomic(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".goldman-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _emit(text: str, output: str | None):
    if output:
        _write_atomic(output, text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _genus(args, required=True) -> int | None:
    if args.genus is None and required:
        raise InputError(f"{args.command} needs -g/--genus")
    return args.genus


def _read_set(args) -> list:
    if not args.set:
        raise InputError(f"{args.command} needs --set FILE")
    try:
        return checker.parse_set(_read(args.set))
    except ValueError as exc:
        raise InputError(f"{args.set}: {exc}") from None


def cmd_bracket(args) -> int:
    g = _genus(args, required=False)
    try:
        e1 = parse_element(args.left, g)
        e2 = parse_element(args.right, g if g is not None else e1.g)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    print(format_element(bracket(e1, e2)))
    return EXIT_OK


def cmd_synthesize(args) -> int:
    g = _genus(args)
    if args.target is None:
        raise InputError("synthesize needs --target VECTOR")
    try:
        x = parse_vector(args.target)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if len(x) != 2 * g:
        raise InputError(f"target {args.target} is not a genus-{g} vector")
    cert = synthesis.synthesize(x, g, args.source)
    _emit(words.serialize(cert), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        cert = words.parse(_read(args.file))
    except words.CertificateParseError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    verdict = words.verify(cert)
    if verdict:
        print(f"PASS target {format_vector(cert.target)} scalar {format_rational(cert.scalar)}")
        return EXIT_OK
    print(f"FAIL difference {format_element(verdict.difference)}")
    return EXIT_FAIL


def cmd_check_set(args) -> int:
    cfg = GenusConfig(_genus(args))
    report = checker.check_necessary(_read_set(args), cfg)
    print(report)
    print(f"# {report.details}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_oracle(args) -> int:
    S = _read_set(args)
    g = args.genus
    if g is None and not S:
        raise InputError("oracle needs -g/--genus for an empty set")
    try:
        report = checker.oracle_reachable(S, args.max_len, args.window,
                                          args.search_window, g=g)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(report.csv() if args.csv else report.table(), args.output)
    return EXIT_OK


def cmd_identities(args) -> int:
    g_max = args.g_max or args.genus or 4
    report = identities.run_suite(g_max, samples=args.samples, seed=args.seed,
                                  perturb=args.perturb)
    sys.stdout.write(report.table())
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="goldman",
                                description="Exact computations in the homological Goldman Lie algebra.")
    p.add_argument("-g", "--genus", type=int)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bracket", help="bracket two elements")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("synthesize", help="write a certificate for a basis element")
    s.add_argument("--target")
    s.add_argument("--from", dest="source", default="upper",
                   choices=["upper", "proposition", "lemma2"])
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("verify", help="check a certificate file")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("check-set", help="necessary conditions for a generating set")
    s.add_argument("--set")
    s.set_defaults(func=cmd_check_set)

    s = sub.add_parser("oracle", help="nested-bracket reachability in a window")
    s.add_argument("--set")
    s.add_argument("--max-len", type=int, default=10)
    s.add_argument("--window", type=int, default=2)
    s.add_argument("--search-window", type=int)
    s.add_argument("--csv", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("identities", help="run the identity suite")
    s.add_argument("--g-max", type=int)
    s.add_argument("--samples", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--perturb", help=argparse.SUPPRESS)
    s.set_defaults(func=cmd_identities)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.genus is not None and args.genus < 1:
        parser.error("genus must be >= 1")
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"goldman: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
