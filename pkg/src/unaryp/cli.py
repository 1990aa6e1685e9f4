"""Command line interface.

Exit codes: 0 success (member found, systems equivalent), 1 negative answer,
2 parse, validation or usage error.  Results go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import complexity, model, monoid, semantics
from .textformat import ParseError, load, serialize, to_json

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2
WITNESS_BOUND_CAP = 10**6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unaryp", description="Self-reproducing P systems with linear membrane structure")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("parse", help="validate and echo the normalized system")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="emit the JSON mirror")

    p = sub.add_parser("size", help="print the size measure")
    p.add_argument("file")

    for name, help_ in (("enum", "enumerate the language up to a bound"),
                        ("simulate", "enumerate by membrane-level simulation")):
        p = sub.add_parser(name, help=help_)
        if name == "enum":
            p.add_argument("--mode", choices=("star", "plus"), default="star")
        p.add_argument("--bound", type=int, required=True)
        p.add_argument("--as-string", action="store_true", help="print members as literal strings")
        p.add_argument("file")

    p = sub.add_parser("member", help="decide membership of a^M (unary systems)")
    p.add_argument("--mode", choices=("star", "plus"), default="star")
    p.add_argument("-m", type=int, required=True, dest="length")
    p.add_argument("file")

    p = sub.add_parser("canon", help="print the canonical form (unary systems)")
    p.add_argument("file")

    p = sub.add_parser("minimize", help="print an equivalent system with fewest homomorphisms")
    p.add_argument("file")
    p.add_argument("-o", dest="output")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("equiv", help="decide language equivalence (unary systems)")
    p.add_argument("--mode", choices=("star", "plus"), default="star")
    p.add_argument("file1")
    p.add_argument("file2")

    p = sub.add_parser("convert", help="apply a language-preserving construction")
    p.add_argument("kind", choices=("plus-to-star",))
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("permute", help="reorder the homomorphisms")
    p.add_argument("--order", required=True, help="comma-separated 1-based permutation")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("reduce", help="fold redundant homomorphisms into the axiom (plus language)")
    p.add_argument("--times", type=int, default=1)
    p.add_argument("-o", dest="output", help="write the reduced system here")
    p.add_argument("file")

    p = sub.add_parser("tradeoff", help="report sizes along the full reduction chain")
    p.add_argument("--times", type=int)
    p.add_argument("--lines", action="store_true", help="machine-readable n=<k> size=<s> lines")
    p.add_argument("file")

    p = sub.add_parser("classify", help="singleton or not context-free (unary systems)")
    p.add_argument("file")

    p = sub.add_parser("family", help="emit a named family of systems")
    fam = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    q = fam.add_parser("worst-case")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q = fam.add_parser("prime-power")
    q.add_argument("--n", type=int, required=True)
    return parser


def _read(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, stdin: TextIO) -> model.GeneralPSystem:
    try:
        return load(_read(path, stdin)).system
    except ParseError as exc:
        exc.path = path
        raise


def _unary(gen: model.GeneralPSystem) -> model.UnaryPSystem:
    try:
        return model.as_unary(gen)
    except ValueError as exc:
        raise UsageError(f"this command needs a unary system ({exc})") from None


def _format_member(sys_: model.GeneralPSystem, member, as_string: bool) -> str:
    if len(sys_.alphabet) == 1:
        k = member[0] if isinstance(member, tuple) else member
        return sys_.alphabet[0] * k if as_string else str(k)
    if as_string:
        return "".join(s * k for s, k in zip(sys_.alphabet, member))
    return " ".join(f"{s}^{k}" for s, k in zip(sys_.alphabet, member))


def _emit(text: str, output: Optional[str], stdout: TextIO) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)


def _render(system, as_json: bool) -> str:
    return to_json(system) if as_json else serialize(system)


def _distinguishing_member(s1: model.UnaryPSystem, s2: model.UnaryPSystem, mode: str):
    """Smallest length in exactly one language, searched up to the automatic bound."""
    a, b = (model.plus_to_star(s) if mode == "plus" else s for s in (s1, s2))
    biggest = max(a.coeffs + b.coeffs, default=1)
    bound = min(a.axiom_len * b.axiom_len * biggest**2, WITNESS_BOUND_CAP)
    first = set(semantics.enumerate_star(a, bound))
    second = set(semantics.enumerate_star(b, bound))
    diff = first ^ second
    if not diff:
        return None, bound
    w = min(diff)
    return (w, 1 if w in first else 2), bound


def _dispatch(args, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    cmd = args.command
    if cmd == "family":
        if args.family == "worst-case":
            system = complexity.worst_case_family(args.m, args.n)
        else:
            system = complexity.prime_power_family(args.n)
        stdout.write(serialize(system))
        return EXIT_OK

    if cmd == "equiv":
        s1 = _unary(_load(args.file1, stdin))
        s2 = _unary(_load(args.file2, stdin))
        model.require_valid(s1)
        model.require_valid(s2)
        if monoid.equivalent(s1, s2, args.mode):
            stdout.write("equivalent\n")
            return EXIT_OK
        found, bound = _distinguishing_member(s1, s2, args.mode)
        if found is None:
            stdout.write(f"not equivalent; no distinguishing member up to {bound}\n")
        else:
            w, side = found
            name = args.file1 if side == 1 else args.file2
            stdout.write(f"not equivalent; a^{w} only in {name}\n")
        return EXIT_NO

    gen = _load(args.file, stdin)
    model.require_valid(gen)
    unary = len(gen.alphabet) == 1

    if cmd == "parse":
        stdout.write(_render(gen, args.json))
    elif cmd == "size":
        stdout.write(f"{model.size(gen)}\n")
    elif cmd in ("enum", "simulate"):
        if cmd == "simulate":
            members = semantics.simulate_reachable(gen, args.bound)
        elif args.mode == "star":
            members = semantics.enumerate_star(gen, args.bound)
        else:
            members = semantics.enumerate_plus(gen, args.bound)
        for member in members:
            stdout.write(_format_member(gen, member, args.as_string) + "\n")
    elif cmd == "member":
        system = _unary(gen)
        decide = semantics.member_star if args.mode == "star" else semantics.member_plus
        witness = decide(system, args.length)
        if witness is None:
            stdout.write("no\n")
            return EXIT_NO
        stdout.write(" ".join(map(str, witness)) + "\n")
    elif cmd == "canon":
        stdout.write(monoid.canonicalize(_unary(gen)).serialize())
    elif cmd == "minimize":
        _emit(_render(monoid.minimize(_unary(gen)), args.json), args.output, stdout)
    elif cmd == "convert":
        stdout.write(_render(model.plus_to_star(gen), args.json))
    elif cmd == "permute":
        try:
            order = [int(x) for x in args.order.split(",")]
            result = model.permute(gen, order)
        except ValueError as exc:
            raise UsageError(f"--order: {exc}") from None
        stdout.write(_render(result, args.json))
    elif cmd == "reduce":
        system = _unary(gen)
        if args.times < 1:
            raise UsageError("--times must be >= 1")
        chain = complexity.reduction_chain(system, args.times)
        if len(chain) == 1:
            stdout.write(f"size {model.size(system)}; no reduction possible\n")
            return EXIT_NO
        for before, after in zip(chain, chain[1:]):
            bound = model.size(before) ** 2 - 1
            ok = complexity.check_quadratic_bound(before, after)
            stdout.write(f"size {model.size(before)} -> {model.size(after)}; "
                         f"bound {bound}: {'ok' if ok else 'violated'}\n")
        if len(chain) - 1 < args.times:
            stderr.write(f"stopped after {len(chain) - 1} reduction(s)\n")
        if args.output:
            _emit(serialize(chain[-1]), args.output, stdout)
    elif cmd == "tradeoff":
        report = complexity.tradeoff_report(_unary(gen), args.times)
        stdout.write(report.lines() if args.lines else report.table())
    elif cmd == "classify":
        stdout.write(f"{monoid.classify_context_free(_unary(gen))}\n")
    else:  # pragma: no cover - argparse rejects unknown commands
        raise UsageError(f"unknown command {cmd}")
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None, stdin: TextIO = None,
        stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, stdin, stdout, stderr)
    except UsageError as exc:
        stderr.write(f"unaryp: error: {exc}\n")
    except ParseError as exc:
        where = getattr(exc, "path", "<input>")
        for d in exc.diagnostics:
            sep = ":" if d.line is not None else ": "
            stderr.write(f"{where}{sep}{d}\n")
    except model.InvalidSystemError as exc:
        for d in exc.diagnostics:
            stderr.write(f"unaryp: invalid system: {d}\n")
    except ValueError as exc:
        stderr.write(f"unaryp: error: {exc}\n")
    return EXIT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
