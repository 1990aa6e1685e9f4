"""Self-reproducing P systems with a linear membrane structure.

A system is an axiom multiset plus a sequence of homomorphisms, one per
membrane, listed outermost first: ``homs[0]`` lives in region 1 directly under
the skin and ``homs[-1]`` in the innermost region holding the axiom.  Each
homomorphism maps a symbol ``a`` to ``a^m`` with ``m >= 1``.

Two value types are provided.  :class:`UnaryPSystem` is the one-letter case
(axiom length plus one exponent per homomorphism).  :class:`GeneralPSystem`
keeps an ordered alphabet and stores the axiom and each homomorphism as
sparse ``(symbol, count)`` pairs; homomorphism entries equal to 1 are
dropped on construction because an omitted symbol is fixed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

__all__ = [
    "UnaryPSystem",
    "GeneralPSystem",
    "PSystem",
    "Diagnostic",
    "InvalidSystemError",
    "validate",
    "require_valid",
    "size",
    "permute",
    "plus_to_star",
    "strip_identities",
    "as_unary",
    "as_general",
]


@dataclass(frozen=True)
class UnaryPSystem:
    """Unary system: axiom ``a^axiom_len`` and homomorphisms ``a -> a^c``."""

    axiom_len: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs)


def _pairs(raw, drop: int) -> tuple[tuple[str, int], ...]:
    items = raw.items() if isinstance(raw, Mapping) else raw
    merged: dict[str, int] = {}
    for sym, count in items:
        if sym in merged:
            raise ValueError(f"symbol {sym!r} listed twice")
        merged[sym] = count
    return tuple((s, c) for s, c in merged.items() if c != drop)


@dataclass(frozen=True)
class GeneralPSystem:
    """Self-reproducing system over an arbitrary alphabet.

    ``axiom`` and each entry of ``homs`` may be given as mappings; they are
    stored as tuples of ``(symbol, count)`` pairs.  Axiom pairs with count 0
    and homomorphism pairs with exponent 1 are dropped, so equal systems
    compare equal regardless of how they were spelled.
    """

    alphabet: tuple[str, ...]
    axiom: tuple[tuple[str, int], ...]
    homs: tuple[tuple[tuple[str, int], ...], ...] = ()

    def __post_init__(self) -> None:
        alphabet = tuple(self.alphabet)
        order = {s: i for i, s in enumerate(alphabet)}

        def key(pair):
            return (order.get(pair[0], len(order)), pair[0])

        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "axiom", tuple(sorted(_pairs(self.axiom, 0), key=key)))
        object.__setattr__(
            self, "homs", tuple(tuple(sorted(_pairs(h, 1), key=key)) for h in self.homs)
        )

    @property
    def n(self) -> int:
        return len(self.homs)

    def axiom_vector(self) -> tuple[int, ...]:
        """Parikh vector of the axiom in alphabet order."""
        counts = dict(self.axiom)
        return tuple(counts.get(s, 0) for s in self.alphabet)

    def hom_vectors(self) -> tuple[tuple[int, ...], ...]:
        """Per-homomorphism exponent vectors in alphabet order (identity = 1)."""
        out = []
        for h in self.homs:
            exps = dict(h)
            out.append(tuple(exps.get(s, 1) for s in self.alphabet))
        return tuple(out)


PSystem = Union[UnaryPSystem, GeneralPSystem]


@dataclass(frozen=True)
class Diagnostic:
    field: str
    message: str

    def __str__(self) -> str:
        return f"{self.field}: {self.message}"


class InvalidSystemError(ValueError):
    def __init__(self, diagnostics: Sequence[Diagnostic]):
        self.diagnostics = tuple(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def validate(sys: PSystem) -> list[Diagnostic]:
    """Check the structural invariants; an empty list means the system is valid."""
    diags: list[Diagnostic] = []
    if isinstance(sys, UnaryPSystem):
        if not _is_int(sys.axiom_len) or sys.axiom_len < 1:
            diags.append(Diagnostic("axiom_len", "empty axiom"))
        for i, c in enumerate(sys.coeffs, start=1):
            if not _is_int(c):
                diags.append(Diagnostic(f"coeffs[{i}]", f"exponent must be an integer, got {c!r}"))
            elif c == 0:
                diags.append(Diagnostic(f"coeffs[{i}]", "erasing rule forbidden"))
            elif c < 0:
                diags.append(Diagnostic(f"coeffs[{i}]", f"negative exponent {c}"))
        return diags
    if not isinstance(sys, GeneralPSystem):
        raise TypeError(f"not a P system: {sys!r}")

    known = set(sys.alphabet)
    if len(known) != len(sys.alphabet):
        diags.append(Diagnostic("alphabet", "duplicate symbol"))
    if not sys.alphabet:
        diags.append(Diagnostic("alphabet", "empty alphabet"))
    total = 0
    for sym, count in sys.axiom:
        if sym not in known:
            diags.append(Diagnostic("axiom", f"unknown symbol {sym!r}"))
        if not _is_int(count) or count < 0:
            diags.append(Diagnostic("axiom", f"invalid count {count!r} for {sym!r}"))
        else:
            total += count
    if total < 1:
        diags.append(Diagnostic("axiom", "empty axiom"))
    for i, h in enumerate(sys.homs, start=1):
        for sym, exp in h:
            if sym not in known:
                diags.append(Diagnostic(f"homs[{i}]", f"unknown symbol {sym!r}"))
            if not _is_int(exp):
                diags.append(Diagnostic(f"homs[{i}]", f"exponent must be an integer, got {exp!r}"))
            elif exp == 0:
                diags.append(Diagnostic(f"homs[{i}]", f"erasing rule forbidden for {sym!r}"))
            elif exp < 0:
                diags.append(Diagnostic(f"homs[{i}]", f"negative exponent {exp} for {sym!r}"))
    return diags


def require_valid(sys: PSystem) -> None:
    """Raise :class:`InvalidSystemError` unless ``validate(sys)`` is empty."""
    diags = validate(sys)
    if diags:
        raise InvalidSystemError(diags)


def size(sys: PSystem) -> int:
    """Axiom length plus the lengths of all homomorphism images.

    For general alphabets the image length of every symbol is summed; this
    extension is for reporting only.
    """
    require_valid(sys)
    if isinstance(sys, UnaryPSystem):
        return sys.axiom_len + sum(sys.coeffs)
    return sum(sys.axiom_vector()) + sum(sum(v) for v in sys.hom_vectors())


def permute(sys: PSystem, order: Sequence[int]) -> PSystem:
    """Reorder homomorphisms: position ``j`` of the result holds ``h_{order[j]}``.

    ``order`` is a 1-based permutation of ``1..n``.
    """
    order = tuple(order)
    if sorted(order) != list(range(1, sys.n + 1)):
        raise ValueError(f"{order} is not a permutation of 1..{sys.n}")
    if isinstance(sys, UnaryPSystem):
        return UnaryPSystem(sys.axiom_len, tuple(sys.coeffs[u - 1] for u in order))
    return GeneralPSystem(sys.alphabet, sys.axiom, tuple(sys.homs[u - 1] for u in order))


def plus_to_star(sys: PSystem) -> PSystem:
    """Apply every homomorphism once to the axiom.

    The star language of the result equals the plus language of ``sys``.
    """
    require_valid(sys)
    if isinstance(sys, UnaryPSystem):
        return UnaryPSystem(sys.axiom_len * math.prod(sys.coeffs), sys.coeffs)
    axiom = list(sys.axiom_vector())
    for vec in sys.hom_vectors():
        axiom = [a * e for a, e in zip(axiom, vec)]
    return GeneralPSystem(sys.alphabet, tuple(zip(sys.alphabet, axiom)), sys.homs)


def strip_identities(sys: PSystem) -> tuple[PSystem, int]:
    """Drop homomorphisms that fix every symbol; return the system and the count dropped."""
    if isinstance(sys, UnaryPSystem):
        kept = tuple(c for c in sys.coeffs if c != 1)
        return UnaryPSystem(sys.axiom_len, kept), sys.n - len(kept)
    kept = tuple(h for h in sys.homs if h)
    return GeneralPSystem(sys.alphabet, sys.axiom, kept), sys.n - len(kept)


def as_unary(sys: GeneralPSystem) -> UnaryPSystem:
    """Convert a one-symbol general system; raises ``ValueError`` otherwise."""
    if isinstance(sys, UnaryPSystem):
        return sys
    if len(sys.alphabet) != 1:
        raise ValueError(
            f"not a unary system: alphabet has {len(sys.alphabet)} symbols"
        )
    (axiom_len,) = sys.axiom_vector()
    return UnaryPSystem(axiom_len, tuple(v[0] for v in sys.hom_vectors()))


def as_general(sys: PSystem, symbol: str = "a") -> GeneralPSystem:
    """Lift a unary system to a one-letter general system."""
    if isinstance(sys, GeneralPSystem):
        return sys
    return GeneralPSystem(
        (symbol,), ((symbol, sys.axiom_len),), tuple(((symbol, c),) for c in sys.coeffs)
    )
