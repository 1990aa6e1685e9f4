"""Line-based system description format and its JSON mirror.

::

    # Example: a1 doubles, a2 triples
    alphabet: a1 a2
    axiom: a1 a2^1
    hom: a1->a1^2
    hom: a2->a2^3

Symbols left out of a ``hom`` line are fixed by that homomorphism, and an
empty ``hom:`` line is the identity.  Axiom tokens are ``sym`` or
``sym^count``.  ``#`` starts a comment; CRLF line endings are accepted.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .model import GeneralPSystem, PSystem, UnaryPSystem, as_general, validate

__all__ = [
    "ParseDiagnostic",
    "ParseError",
    "SystemDocument",
    "parse",
    "parse_json",
    "load",
    "serialize",
    "to_json",
]

_SYMBOL = r"[A-Za-z_][A-Za-z0-9_]*"
_SYMBOL_RE = re.compile(_SYMBOL)
_AXIOM_TOKEN = re.compile(rf"\s*({_SYMBOL})(?:\s*\^\s*(\d+))?\s*")
_RULE = re.compile(rf"\s*({_SYMBOL})\s*->\s*({_SYMBOL})(?:\s*\^\s*(\d+))?\s*,?")


@dataclass(frozen=True)
class ParseDiagnostic:
    message: str
    line: Optional[int] = None
    column: Optional[int] = None

    def __str__(self) -> str:
        if self.line is None:
            return self.message
        return f"{self.line}:{self.column}: {self.message}"


class ParseError(ValueError):
    def __init__(self, diagnostics: list[ParseDiagnostic]):
        self.diagnostics = diagnostics
        super().__init__("\n".join(str(d) for d in diagnostics))


@dataclass
class SystemDocument:
    """Parsed source with the positions of its directives.

    ``positions`` maps ``"alphabet"``, ``"axiom"`` and ``("hom", i)`` (1-based)
    to ``(line, column)``.
    """

    source: str
    system: GeneralPSystem
    positions: dict = field(default_factory=dict)

    @property
    def is_unary(self) -> bool:
        return len(self.system.alphabet) == 1


def parse(text: str) -> SystemDocument:
    """Parse the line format; raise :class:`ParseError` listing every problem found."""
    diags: list[ParseDiagnostic] = []
    positions: dict = {}
    alphabet: Optional[list[str]] = None
    axiom: Optional[dict[str, int]] = None
    axiom_pos = None
    homs: list[dict[str, int]] = []
    pending_symbols: list[tuple[str, int, int]] = []

    for lineno, raw in enumerate(text.replace("\r\n", "\n").split("\n"), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        directive, colon, rest = line.partition(":")
        key = directive.strip()
        col0 = len(directive) + 2
        if not colon or key not in ("alphabet", "axiom", "hom"):
            diags.append(ParseDiagnostic(f"unknown directive {key!r}", lineno, len(line) - len(line.lstrip()) + 1))
            continue
        if key == "alphabet":
            if alphabet is not None:
                diags.append(ParseDiagnostic("duplicate alphabet directive", lineno, 1))
                continue
            alphabet = []
            positions["alphabet"] = (lineno, 1)
            for m in re.finditer(r"\S+", rest):
                sym = m.group()
                column = col0 + m.start()
                if not _SYMBOL_RE.fullmatch(sym):
                    diags.append(ParseDiagnostic(f"invalid symbol {sym!r}", lineno, column))
                elif sym in alphabet:
                    diags.append(ParseDiagnostic(f"duplicate symbol {sym!r} in alphabet", lineno, column))
                else:
                    alphabet.append(sym)
            if not alphabet:
                diags.append(ParseDiagnostic("empty alphabet", lineno, 1))
        elif key == "axiom":
            if axiom is not None:
                diags.append(ParseDiagnostic("duplicate axiom directive", lineno, 1))
                continue
            axiom = {}
            axiom_pos = (lineno, 1)
            positions["axiom"] = axiom_pos
            pos = 0
            while pos < len(rest) and rest[pos:].strip():
                m = _AXIOM_TOKEN.match(rest, pos)
                if not m or m.end() == pos:
                    diags.append(ParseDiagnostic("malformed axiom token", lineno, col0 + pos))
                    break
                sym, count = m.group(1), int(m.group(2) or 1)
                pending_symbols.append((sym, lineno, col0 + m.start(1)))
                axiom[sym] = axiom.get(sym, 0) + count
                pos = m.end()
        else:
            hom: dict[str, int] = {}
            homs.append(hom)
            positions[("hom", len(homs))] = (lineno, 1)
            pos = 0
            while pos < len(rest) and rest[pos:].strip():
                m = _RULE.match(rest, pos)
                if not m or m.end() == pos:
                    diags.append(ParseDiagnostic("malformed rule, expected 'x->x^k'", lineno, col0 + pos))
                    break
                lhs, rhs, exp = m.group(1), m.group(2), int(m.group(3) or 1)
                column = col0 + m.start(1)
                pending_symbols.append((lhs, lineno, column))
                if lhs != rhs:
                    diags.append(ParseDiagnostic(
                        f"rule must map {lhs!r} to a power of itself, got {rhs!r}", lineno, column))
                elif lhs in hom:
                    diags.append(ParseDiagnostic(f"duplicate rule for {lhs!r}", lineno, column))
                elif exp == 0:
                    diags.append(ParseDiagnostic(f"erasing rule forbidden: exponent 0 for {lhs!r}", lineno, column))
                else:
                    hom[lhs] = exp
                pos = m.end()

    if alphabet is None:
        diags.append(ParseDiagnostic("missing alphabet directive"))
    else:
        known = set(alphabet)
        for sym, lineno, column in pending_symbols:
            if sym not in known:
                diags.append(ParseDiagnostic(f"symbol {sym!r} not in alphabet", lineno, column))
    if axiom is None:
        diags.append(ParseDiagnostic("missing axiom directive"))
    elif sum(axiom.values()) < 1:
        diags.append(ParseDiagnostic("empty axiom", *axiom_pos))
    if diags:
        diags.sort(key=lambda d: (d.line is None, d.line or 0, d.column or 0))
        raise ParseError(diags)
    system = GeneralPSystem(tuple(alphabet), axiom, tuple(homs))
    return SystemDocument(text, system, positions)


def parse_json(text: str) -> SystemDocument:
    """Parse the JSON mirror: ``alphabet``, ``axiom`` (symbol -> count), ``homomorphisms``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError([ParseDiagnostic(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno)]) from None
    diags = []
    if not isinstance(data, dict):
        raise ParseError([ParseDiagnostic("top-level JSON value must be an object")])
    for key in data:
        if key not in ("alphabet", "axiom", "homomorphisms"):
            diags.append(ParseDiagnostic(f"unknown key {key!r}"))
    alphabet = data.get("alphabet")
    axiom = data.get("axiom")
    homs = data.get("homomorphisms", [])
    if not isinstance(alphabet, list) or not all(isinstance(s, str) for s in alphabet):
        diags.append(ParseDiagnostic("'alphabet' must be a list of strings"))
    if not isinstance(axiom, dict):
        diags.append(ParseDiagnostic("'axiom' must be an object mapping symbols to counts"))
    if not isinstance(homs, list) or not all(isinstance(h, dict) for h in homs):
        diags.append(ParseDiagnostic("'homomorphisms' must be a list of objects"))
    if diags:
        raise ParseError(diags)
    try:
        system = GeneralPSystem(tuple(alphabet), axiom, tuple(homs))
    except (TypeError, ValueError) as exc:
        raise ParseError([ParseDiagnostic(str(exc))]) from None
    problems = validate(system)
    if problems:
        raise ParseError([ParseDiagnostic(str(p)) for p in problems])
    return SystemDocument(text, system, {})


def load(text: str) -> SystemDocument:
    """Parse either format, choosing JSON when the text starts with ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse(text)


def _power(sym: str, k: int) -> str:
    return sym if k == 1 else f"{sym}^{k}"


def serialize(sys: PSystem) -> str:
    """Render in the line format; ``parse(serialize(s)).system == s`` for valid ``s``."""
    gen = as_general(sys)
    lines = ["alphabet: " + " ".join(gen.alphabet)]
    lines.append("axiom: " + " ".join(_power(s, c) for s, c in gen.axiom))
    for h in gen.homs:
        rules = ", ".join(f"{s}->{_power(s, e)}" for s, e in h)
        lines.append(f"hom: {rules}".rstrip())
    return "\n".join(lines) + "\n"


def to_json(sys: PSystem) -> str:
    gen = as_general(sys)
    data = {
        "alphabet": list(gen.alphabet),
        "axiom": dict(gen.axiom),
        "homomorphisms": [dict(zip(gen.alphabet, v)) for v in gen.hom_vectors()],
    }
    return json.dumps(data, indent=2) + "\n"
