"""Languages of self-reproducing P systems.

Two independent routes compute the bounded star language:

* :func:`enumerate_star` closes the axiom under the homomorphisms, which is
  valid because the homomorphisms commute;
* :func:`simulate_reachable` walks the membrane configurations, choosing at
  each step between one maximally parallel rule application in the innermost
  intact region and dissolving that membrane.

Unary systems produce sorted lists of lengths; general systems produce
sorted lists of Parikh vectors in alphabet order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from .factorcore import factorize, subtract
from .model import (
    GeneralPSystem,
    PSystem,
    UnaryPSystem,
    plus_to_star,
    require_valid,
    strip_identities,
)

__all__ = [
    "Configuration",
    "enumerate_star",
    "enumerate_plus",
    "simulate_reachable",
    "member_star",
    "member_plus",
]

Member = Union[int, tuple[int, ...]]


@dataclass(frozen=True)
class Configuration:
    """Innermost intact membrane (0 = halted in the skin) and its contents."""

    depth: int
    contents: tuple[int, ...]


def _vectors(sys: PSystem) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    if isinstance(sys, UnaryPSystem):
        return (sys.axiom_len,), tuple((c,) for c in sys.coeffs)
    return sys.axiom_vector(), sys.hom_vectors()


def _present(sys: PSystem, found) -> list[Member]:
    if isinstance(sys, UnaryPSystem):
        return sorted(v[0] for v in found)
    return sorted(found)


def _check_bound(bound: int) -> None:
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")


def _apply(vec: tuple[int, ...], hom: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x * e for x, e in zip(vec, hom))


def enumerate_star(sys: PSystem, bound: int) -> list[Member]:
    """Members of the star language with total symbol count ``<= bound``."""
    require_valid(sys)
    _check_bound(bound)
    sys, _ = strip_identities(sys)
    axiom, homs = _vectors(sys)
    if sum(axiom) > bound:
        return []
    seen = {axiom}
    queue = deque([axiom])
    while queue:
        vec = queue.popleft()
        for hom in homs:
            nxt = _apply(vec, hom)
            if nxt not in seen and sum(nxt) <= bound:
                seen.add(nxt)
                queue.append(nxt)
    return _present(sys, seen)


def enumerate_plus(sys: PSystem, bound: int) -> list[Member]:
    """Members of the plus language (every homomorphism used at least once)."""
    return enumerate_star(plus_to_star(sys), bound)


def simulate_reachable(sys: PSystem, bound: int) -> list[Member]:
    """Halting results of the apply-or-dissolve membrane dynamics, up to ``bound``.

    Starts from the axiom in the innermost membrane.  In region ``i`` a step
    either rewrites every object once by ``h_i`` or dissolves membrane ``i``.
    Configurations are deduplicated, so identity homomorphisms become
    discarded self-loops.
    """
    require_valid(sys)
    _check_bound(bound)
    axiom, homs = _vectors(sys)
    start = Configuration(len(homs), axiom)
    if sum(axiom) > bound:
        return []
    seen = {start}
    queue = deque([start])
    results = set()
    while queue:
        conf = queue.popleft()
        if conf.depth == 0:
            results.add(conf.contents)
            continue
        rewritten = _apply(conf.contents, homs[conf.depth - 1])
        successors = [Configuration(conf.depth - 1, conf.contents)]
        if sum(rewritten) <= bound:
            successors.append(Configuration(conf.depth, rewritten))
        for nxt in successors:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return _present(sys, results)


@lru_cache(maxsize=4096)
def _unary_repr(sys: UnaryPSystem):
    from .monoid import build_repr

    stripped, _ = strip_identities(sys)
    return build_repr(stripped)


def _lift_witness(sys: UnaryPSystem, v: tuple[int, ...], fill: int) -> tuple[int, ...]:
    it = iter(v)
    return tuple(fill if c == 1 else next(it) for c in sys.coeffs)


def member_star(sys: UnaryPSystem, m: int) -> Optional[tuple[int, ...]]:
    """Decide ``a^m`` in the star language exactly.

    Returns exponents ``(m_1, ..., m_n)`` with
    ``m == axiom_len * prod(c_i ** m_i)``, or ``None``.  Identity
    homomorphisms get exponent 0 in the witness.
    """
    from .monoid import monoid_member

    if not isinstance(sys, UnaryPSystem):
        raise TypeError("member_star needs a unary system")
    require_valid(sys)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m % sys.axiom_len:
        return None
    repr_ = _unary_repr(sys)
    x = subtract(factorize(m), repr_.offset)
    if x is None:
        return None
    v = monoid_member(repr_, x)
    if v is None:
        return None
    return _lift_witness(sys, v, 0)


def member_plus(sys: UnaryPSystem, m: int) -> Optional[tuple[int, ...]]:
    """Like :func:`member_star` for the plus language; every exponent is ``>= 1``."""
    v = member_star(plus_to_star(sys), m)
    if v is None:
        return None
    return tuple(e + 1 for e in v)
