"""Affine-monoid representation of unary star languages.

Factorizing lengths turns ``L(sys) = {w * c_1^k_1 * ... * c_n^k_n}`` into
``offset + N*col_1 + ... + N*col_n`` over prime-exponent vectors.  The
irreducible elements of that monoid are all columns, they generate the same
monoid, and together with the offset they give a unique minimal description
of the language.  Equivalence and minimization are read off that form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from .factorcore import FactorVector, factorize, gpf, subtract, to_integer
from .model import UnaryPSystem, plus_to_star, require_valid, strip_identities

__all__ = [
    "MonoidRepr",
    "CanonicalForm",
    "Singleton",
    "NotContextFree",
    "build_repr",
    "monoid_member",
    "is_irreducible",
    "canonicalize",
    "rebuild",
    "minimize",
    "equivalent_star",
    "equivalent_plus",
    "equivalent",
    "classify_context_free",
]


@dataclass(frozen=True)
class MonoidRepr:
    """Column vectors of the exponent matrix plus the axiom's offset vector.

    ``k`` is the number of matrix rows: the largest prime index occurring in
    the axiom length or any exponent, and at least 1.
    """

    k: int
    columns: tuple[FactorVector, ...]
    offset: FactorVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(self.columns))
        if any(not c for c in self.columns):
            raise ValueError("zero column; strip identity homomorphisms first")
        if any(c.max_index > self.k for c in self.columns) or self.offset.max_index > self.k:
            raise ValueError(f"support exceeds k={self.k}")

    @property
    def n(self) -> int:
        return len(self.columns)

    def matrix(self) -> list[list[int]]:
        """Dense ``k x n`` exponent matrix, rows indexed by prime."""
        dense = [c.dense(self.k) for c in self.columns]
        return [[col[r] for col in dense] for r in range(self.k)]


def build_repr(sys: UnaryPSystem) -> MonoidRepr:
    """Exponent columns and offset of an identity-free unary system."""
    require_valid(sys)
    if 1 in sys.coeffs:
        raise ValueError("identity homomorphisms must be stripped before build_repr")
    k = max([gpf(sys.axiom_len)] + [gpf(c) for c in sys.coeffs])
    return MonoidRepr(k, tuple(factorize(c) for c in sys.coeffs), factorize(sys.axiom_len))


def _dense_columns(columns: Sequence[FactorVector], k: int) -> tuple[tuple[int, ...], ...]:
    return tuple(c.dense(k) for c in columns)


@lru_cache(maxsize=1 << 16)
def _solve(columns: tuple[tuple[int, ...], ...], target: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Nonnegative ``v`` with ``sum(v_j * columns[j]) == target``, or ``None``.

    Depth-first over the columns in order, trying the largest feasible
    multiplier first.  Failed ``(j, residual)`` states are memoized.  The
    search is finite because every column is nonzero.
    """
    n = len(columns)
    k = len(target)
    # rows that columns j.. can still reduce
    reach = [set() for _ in range(n + 1)]
    for j in range(n - 1, -1, -1):
        reach[j] = reach[j + 1] | {r for r in range(k) if columns[j][r]}
    dead: set[tuple[int, tuple[int, ...]]] = set()

    def go(j: int, residual: tuple[int, ...]) -> Optional[list[int]]:
        if not any(residual):
            return [0] * (n - j)
        if j == n or any(residual[r] and r not in reach[j] for r in range(k)):
            return None
        if (j, residual) in dead:
            return None
        col = columns[j]
        vmax = min(residual[r] // col[r] for r in range(k) if col[r])
        for v in range(vmax, -1, -1):
            rest = go(j + 1, tuple(x - v * c for x, c in zip(residual, col)))
            if rest is not None:
                return [v] + rest
        dead.add((j, residual))
        return None

    found = go(0, target)
    return None if found is None else tuple(found)


def monoid_member(repr_: MonoidRepr, x: FactorVector) -> Optional[tuple[int, ...]]:
    """Witness ``v`` with ``sum(v_j * columns[j]) == x``, or ``None`` if ``x`` is outside the monoid."""
    if not isinstance(x, FactorVector):
        x = FactorVector(x)
    if not x:
        return (0,) * repr_.n
    if x.max_index > repr_.k:
        return None
    return _solve(_dense_columns(repr_.columns, repr_.k), x.dense(repr_.k))


def is_irreducible(repr_: MonoidRepr, x: FactorVector) -> bool:
    """True iff ``x`` is a nonzero monoid element with no split into two nonzero elements.

    ``x`` is reducible exactly when ``x - col_j`` is a nonzero monoid element
    for some column ``col_j``, i.e. when a witness of 1-norm at least 2 exists.
    """
    if not isinstance(x, FactorVector):
        x = FactorVector(x)
    if not x:
        raise ValueError("irreducibility is not defined for the zero vector")
    if monoid_member(repr_, x) is None:
        raise ValueError(f"{x!r} is not an element of the monoid")
    for col in set(repr_.columns):
        rest = subtract(x, col)
        if rest and monoid_member(repr_, rest) is not None:
            return False
    return True


@dataclass(frozen=True)
class CanonicalForm:
    """Offset plus the sorted, distinct irreducible generators.

    Two unary systems have the same star language iff their canonical forms
    are equal.
    """

    offset: FactorVector
    generators: tuple[FactorVector, ...] = ()

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        if list(gens) != sorted(set(gens)):
            raise ValueError("generators must be strictly sorted and distinct")
        object.__setattr__(self, "generators", gens)

    def serialize(self) -> str:
        lines = [f"offset: {to_integer(self.offset)}"]
        lines += [f"gen: {g}" for g in sorted(to_integer(g) for g in self.generators)]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "CanonicalForm":
        offset = None
        gens = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            key, _, value = line.partition(":")
            key = key.strip()
            try:
                number = int(value)
            except ValueError:
                raise ValueError(f"line {lineno}: expected an integer after {key!r}") from None
            if number < 1:
                raise ValueError(f"line {lineno}: value must be positive")
            if key == "offset" and offset is None:
                offset = factorize(number)
            elif key == "gen":
                gens.append(factorize(number))
            else:
                raise ValueError(f"line {lineno}: unexpected {key!r}")
        if offset is None:
            raise ValueError("missing offset line")
        return cls(offset, tuple(sorted(set(gens))))


def canonicalize(sys: UnaryPSystem) -> CanonicalForm:
    """Unique minimal description of the star language of ``sys``."""
    require_valid(sys)
    stripped, _ = strip_identities(sys)
    repr_ = build_repr(stripped)
    gens = sorted(c for c in set(repr_.columns) if is_irreducible(repr_, c))
    return CanonicalForm(repr_.offset, tuple(gens))


def rebuild(cf: CanonicalForm) -> UnaryPSystem:
    """Unary system with one homomorphism per generator, in generator order."""
    return UnaryPSystem(to_integer(cf.offset), tuple(to_integer(g) for g in cf.generators))


def minimize(sys: UnaryPSystem) -> UnaryPSystem:
    """Equivalent star system with the fewest homomorphisms."""
    return rebuild(canonicalize(sys))


def equivalent(
    s1: UnaryPSystem, s2: UnaryPSystem, mode: str = "star", other_mode: Optional[str] = None
) -> bool:
    """Compare the ``mode`` language of ``s1`` with the ``other_mode`` language of ``s2``.

    ``other_mode`` defaults to ``mode``; each is ``"star"`` or ``"plus"``.
    """
    other_mode = mode if other_mode is None else other_mode

    def as_star(sys, m):
        if m == "star":
            return sys
        if m == "plus":
            return plus_to_star(sys)
        raise ValueError(f"mode must be 'star' or 'plus', got {m!r}")

    return canonicalize(as_star(s1, mode)) == canonicalize(as_star(s2, other_mode))


def equivalent_star(s1: UnaryPSystem, s2: UnaryPSystem) -> bool:
    """Decide equality of the star languages."""
    return equivalent(s1, s2, "star")


def equivalent_plus(s1: UnaryPSystem, s2: UnaryPSystem) -> bool:
    """Decide equality of the plus languages."""
    return equivalent(s1, s2, "plus")


@dataclass(frozen=True)
class Singleton:
    length: int

    def __str__(self) -> str:
        return f"singleton {self.length}"


@dataclass(frozen=True)
class NotContextFree:
    def __str__(self) -> str:
        return "not context-free"


def classify_context_free(sys: UnaryPSystem) -> Union[Singleton, NotContextFree]:
    """Singleton languages are the only context-free ones; everything else is infinite."""
    cf = canonicalize(sys)
    if cf.generators:
        return NotContextFree()
    return Singleton(sys.axiom_len)
