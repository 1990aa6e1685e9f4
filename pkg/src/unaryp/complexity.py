"""Size trade-offs when a plus language is described with fewer membranes.

Folding a redundant homomorphism ``h`` into the axiom (axiom ``w`` becomes
``h(w)``) keeps the plus language and removes one membrane, at the cost of a
larger axiom.  This module runs that construction, checks the size bounds it
satisfies, and builds the families on which the bounds are tight.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .factorcore import FactorVector, factorize, nth_prime
from .model import GeneralPSystem, UnaryPSystem, require_valid, size
from .monoid import build_repr, is_irreducible, equivalent

__all__ = [
    "TradeoffReport",
    "reduce_once",
    "reduction_chain",
    "check_quadratic_bound",
    "check_power_bound",
    "worst_case_family",
    "iterated_reduction_sizes",
    "prime_power_family",
    "tradeoff_report",
    "unary_systems",
    "equivalent_systems",
]


def _redundant(sys: UnaryPSystem) -> list[int]:
    """Indices of homomorphisms whose removal keeps the plus language."""
    nontrivial = [c for c in sys.coeffs if c != 1]
    repr_ = build_repr(UnaryPSystem(sys.axiom_len, tuple(nontrivial)))
    seen: set[FactorVector] = set()
    out = []
    for i, c in enumerate(sys.coeffs):
        if c == 1:
            out.append(i)
            continue
        col = factorize(c)
        if col in seen or not is_irreducible(repr_, col):
            out.append(i)
        seen.add(col)
    return out


def reduce_once(sys: UnaryPSystem) -> Optional[UnaryPSystem]:
    """Fold one redundant homomorphism into the axiom, or ``None`` if none is redundant.

    A homomorphism is redundant when it is the identity, repeats an earlier
    exponent, or its exponent is a product of at least two other exponents.
    Among redundant ones the smallest exponent is removed (lowest index on
    ties), which keeps the new axiom as small as possible.
    """
    require_valid(sys)
    candidates = _redundant(sys)
    if not candidates:
        return None
    drop = min(candidates, key=lambda i: (sys.coeffs[i], i))
    c = sys.coeffs[drop]
    return UnaryPSystem(sys.axiom_len * c, sys.coeffs[:drop] + sys.coeffs[drop + 1 :])


def reduction_chain(sys: UnaryPSystem, times: Optional[int] = None) -> list[UnaryPSystem]:
    """``[sys, reduce_once(sys), ...]`` for ``times`` steps or until no step applies."""
    chain = [sys]
    while times is None or len(chain) <= times:
        nxt = reduce_once(chain[-1])
        if nxt is None:
            break
        chain.append(nxt)
    return chain


def check_quadratic_bound(sys: UnaryPSystem, reduced: UnaryPSystem) -> bool:
    """``size(reduced) <= size(sys)**2 - 1``."""
    return size(reduced) <= size(sys) ** 2 - 1


def check_power_bound(sys: UnaryPSystem, reduced: UnaryPSystem, steps: int) -> bool:
    """``size(reduced) <= size(sys)**(steps + 1)`` after ``steps`` reductions."""
    return size(reduced) <= size(sys) ** (steps + 1)


def worst_case_family(m: int, n: int) -> UnaryPSystem:
    """Axiom ``a^m`` and ``n`` copies of ``a -> a^m``."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return UnaryPSystem(m, (m,) * n)


def iterated_reduction_sizes(m: int, n: int, x: int) -> tuple[int, int]:
    """Sizes of ``worst_case_family(m, n)`` before and after ``x`` measured reductions."""
    if not 1 <= x <= n - 1:
        raise ValueError(f"x must satisfy 1 <= x <= n-1 = {n - 1}, got {x}")
    chain = reduction_chain(worst_case_family(m, n), x)
    if len(chain) != x + 1:
        raise RuntimeError(f"only {len(chain) - 1} reductions possible")
    return size(chain[0]), size(chain[-1])


def prime_power_family(n: int) -> GeneralPSystem:
    """Symbols ``a1..an``, one copy of each in the axiom; ``h_i`` multiplies ``ai`` by the i-th prime."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    alphabet = tuple(f"a{i}" for i in range(1, n + 1))
    homs = tuple(((alphabet[i - 1], nth_prime(i)),) for i in range(1, n + 1))
    return GeneralPSystem(alphabet, tuple((s, 1) for s in alphabet), homs)


@dataclass
class TradeoffReport:
    """Sizes along a reduction chain and the bound checks made on the way.

    ``reduced_sizes`` starts with the original system, so homomorphism
    counts strictly decrease down the list.
    """

    original_size: int
    reduced_sizes: list[tuple[int, int]] = field(default_factory=list)
    bound_checks: list[tuple[str, bool]] = field(default_factory=list)

    def lines(self) -> str:
        return "".join(f"n={k} size={s}\n" for k, s in self.reduced_sizes)

    def table(self) -> str:
        rows = [("homs", "size")] + [(str(k), str(s)) for k, s in self.reduced_sizes]
        wk = max(len(r[0]) for r in rows)
        ws = max(len(r[1]) for r in rows)
        out = [f"{a:>{wk}}  {b:>{ws}}" for a, b in rows]
        if self.bound_checks:
            wb = max(len(b) for b, _ in self.bound_checks)
            out.append("")
            out += [f"{b:<{wb}}  {'ok' if ok else 'violated'}" for b, ok in self.bound_checks]
        return "\n".join(out) + "\n"


def tradeoff_report(sys: UnaryPSystem, times: Optional[int] = None) -> TradeoffReport:
    """Run the reduction chain and record every size together with its bound checks."""
    chain = reduction_chain(sys, times)
    report = TradeoffReport(size(sys), [(s.n, size(s)) for s in chain])
    for step in range(1, len(chain)):
        before, after = chain[step - 1], chain[step]
        report.bound_checks.append((f"quadratic[{step}]", check_quadratic_bound(before, after)))
        report.bound_checks.append((f"power[{step}]", check_power_bound(sys, after, step)))
    return report


def unary_systems(n_homs: int, max_size: int, min_coeff: int = 2) -> Iterator[UnaryPSystem]:
    """All systems with ``n_homs`` nondecreasing exponents ``>= min_coeff`` and size ``<= max_size``."""
    def coeff_tuples(k: int, lo: int, budget: int):
        if k == 0:
            yield ()
            return
        for c in range(lo, budget // k + 1):
            for rest in coeff_tuples(k - 1, c, budget - c):
                yield (c,) + rest

    for coeffs in coeff_tuples(n_homs, min_coeff, max_size - 1):
        for axiom_len in range(1, max_size - sum(coeffs) + 1):
            yield UnaryPSystem(axiom_len, coeffs)


def equivalent_systems(
    target: UnaryPSystem, n_homs: int, max_size: int, mode: str = "plus"
) -> list[UnaryPSystem]:
    """Exhaustively list the systems from :func:`unary_systems` equivalent to ``target``."""
    return [
        s for s in unary_systems(n_homs, max_size) if equivalent(s, target, mode)
    ]
