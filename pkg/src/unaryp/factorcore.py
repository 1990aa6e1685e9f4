"""Prime tables and sparse prime-exponent vectors.

Every positive integer ``m`` corresponds to exactly one finite-support vector
of exponents over the primes ``p_1 = 2, p_2 = 3, p_3 = 5, ...``.  Products of
integers become sums of vectors, which is what turns unary languages of the
form ``w * c_1^k_1 * ... * c_n^k_n`` into affine monoids.
"""

from __future__ import annotations

import threading
from bisect import bisect_left
from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Iterator, Mapping, Optional, Union

__all__ = [
    "FactorVector",
    "nth_prime",
    "prime_index",
    "factorize",
    "gpf",
    "add",
    "subtract",
    "to_integer",
    "partial_leq",
]

# Above this, factorize falls back to trial division instead of a
# smallest-prime-factor lookup table.
_SPF_CAP = 1 << 21


class _PrimeTable:
    """Lazily grown prime list plus smallest-prime-factor table.

    Growth builds new containers and swaps them in under a lock, so readers
    always see a consistent (if possibly smaller) table.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.limit = 1
        self.primes: list[int] = []
        self.index: dict[int, int] = {}
        self.spf: list[int] = [0, 1]
        self._grow_primes(1 << 12)

    def _grow_primes(self, limit: int) -> None:
        sieve = bytearray([1]) * (limit + 1)
        sieve[0:2] = b"\x00\x00"
        for p in range(2, isqrt(limit) + 1):
            if sieve[p]:
                sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
        primes = [i for i, flag in enumerate(sieve) if flag]
        self.index = {p: i + 1 for i, p in enumerate(primes)}
        self.primes = primes
        self.limit = limit

    def ensure_limit(self, limit: int) -> None:
        if limit <= self.limit:
            return
        with self._lock:
            if limit > self.limit:
                self._grow_primes(max(limit, 2 * self.limit))

    def ensure_count(self, count: int) -> None:
        while len(self.primes) < count:
            self.ensure_limit(2 * self.limit)

    def ensure_spf(self, n: int) -> None:
        if n < len(self.spf):
            return
        with self._lock:
            if n < len(self.spf):
                return
            size = min(max(n + 1, 2 * len(self.spf), 1 << 16), _SPF_CAP + 1)
            spf = list(range(size))
            root = isqrt(size - 1)
            if root > self.limit:
                self._grow_primes(max(root, 2 * self.limit))
            small = self.primes[: bisect_left(self.primes, root + 1)]
            # descending so the smallest prime factor is written last
            for p in reversed(small):
                spf[p * p :: p] = [p] * len(range(p * p, size, p))
            self.spf = spf


_TABLE = _PrimeTable()


def nth_prime(i: int) -> int:
    """Return the ``i``-th prime, counting from ``nth_prime(1) == 2``."""
    if i < 1:
        raise ValueError(f"prime index must be >= 1, got {i}")
    _TABLE.ensure_count(i)
    return _TABLE.primes[i - 1]


def prime_index(p: int) -> int:
    """Inverse of :func:`nth_prime`; raises ``ValueError`` if ``p`` is not prime."""
    if p < 2:
        raise ValueError(f"{p} is not prime")
    _TABLE.ensure_limit(p)
    try:
        return _TABLE.index[p]
    except KeyError:
        raise ValueError(f"{p} is not prime") from None


@dataclass(frozen=True, order=True)
class FactorVector:
    """Sparse exponent vector over prime indices.

    ``entries`` holds ``(index, exponent)`` pairs sorted by index, with no
    zero exponents.  The constructor also accepts a mapping or an unsorted
    iterable of pairs and normalizes it.  The dataclass ordering (lexicographic
    on ``entries``) is the total order used to sort canonical generators; the
    componentwise partial order is :func:`partial_leq`.
    """

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        raw = self.entries
        items = raw.items() if isinstance(raw, Mapping) else raw
        merged: dict[int, int] = {}
        for index, exp in items:
            if index < 1:
                raise ValueError(f"prime index must be >= 1, got {index}")
            if exp < 0:
                raise ValueError(f"negative exponent {exp} at index {index}")
            merged[index] = merged.get(index, 0) + exp
        normal = tuple(sorted((i, e) for i, e in merged.items() if e))
        object.__setattr__(self, "entries", normal)

    @classmethod
    def _trusted(cls, entries: tuple[tuple[int, int], ...]) -> "FactorVector":
        # caller guarantees sorted indices and positive exponents
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", entries)
        return obj

    @classmethod
    def from_dense(cls, exps: Iterable[int]) -> "FactorVector":
        """Build from exponents listed for indices 1, 2, 3, ..."""
        return cls(tuple((i, e) for i, e in enumerate(exps, start=1) if e))

    def __getitem__(self, index: int) -> int:
        for i, e in self.entries:
            if i == index:
                return e
        return 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __add__(self, other: "FactorVector") -> "FactorVector":
        return add(self, other)

    def __repr__(self) -> str:
        body = ", ".join(f"{i}: {e}" for i, e in self.entries)
        return f"FactorVector({{{body}}})"

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    @property
    def max_index(self) -> int:
        """Largest index in the support, 0 for the zero vector."""
        return self.entries[-1][0] if self.entries else 0

    @property
    def total(self) -> int:
        """Sum of exponents (the number of prime factors with multiplicity)."""
        return sum(e for _, e in self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def dense(self, k: int) -> tuple[int, ...]:
        """Exponents for indices ``1..k``; raises if the support exceeds ``k``."""
        if self.max_index > k:
            raise ValueError(f"support reaches index {self.max_index} > {k}")
        out = [0] * k
        for i, e in self.entries:
            out[i - 1] = e
        return tuple(out)


FactorLike = Union[FactorVector, Mapping[int, int]]


def _fv(f: FactorLike) -> FactorVector:
    return f if isinstance(f, FactorVector) else FactorVector(f)


def factorize(m: int) -> FactorVector:
    """Prime-exponent vector of ``m >= 1``; ``factorize(1)`` is the zero vector."""
    if m < 1:
        raise ValueError(f"factorize is defined for positive integers only, got {m}")
    exps: dict[int, int] = {}
    if m <= _SPF_CAP:
        _TABLE.ensure_spf(m)
        spf = _TABLE.spf
        while m > 1:
            p = spf[m]
            m //= p
            exps[p] = exps.get(p, 0) + 1
    else:
        j = 0
        while True:
            if j == len(_TABLE.primes):
                _TABLE.ensure_limit(2 * _TABLE.limit)
            p = _TABLE.primes[j]
            if p * p > m:
                break
            while m % p == 0:
                m //= p
                exps[p] = exps.get(p, 0) + 1
            j += 1
        if m > 1:
            exps[m] = exps.get(m, 0) + 1
    index = _TABLE.index
    if any(p not in index for p in exps):
        return FactorVector._trusted(tuple(sorted((prime_index(p), e) for p, e in exps.items())))
    return FactorVector._trusted(tuple((index[p], e) for p, e in sorted(exps.items())))


def gpf(m: int) -> int:
    """Index of the greatest prime factor of ``m``, with ``gpf(1) == 1``."""
    f = factorize(m)
    return f.max_index if f else 1


def add(f: FactorLike, g: FactorLike) -> FactorVector:
    """Pointwise sum, i.e. the vector of the product of the two integers."""
    merged = dict(_fv(f).entries)
    for i, e in _fv(g).entries:
        merged[i] = merged.get(i, 0) + e
    return FactorVector(tuple(merged.items()))


def subtract(f: FactorLike, g: FactorLike) -> Optional[FactorVector]:
    """``f - g``, or ``None`` when some coordinate would go negative."""
    merged = dict(_fv(f).entries)
    for i, e in _fv(g).entries:
        rest = merged.get(i, 0) - e
        if rest < 0:
            return None
        merged[i] = rest
    return FactorVector(tuple(merged.items()))


def to_integer(f: FactorLike) -> int:
    """The positive integer whose factorization is ``f`` (exact, unbounded)."""
    entries = _fv(f).entries
    if entries:
        _TABLE.ensure_count(entries[-1][0])
    primes = _TABLE.primes
    out = 1
    for i, e in entries:
        out *= primes[i - 1] ** e
    return out


def partial_leq(f: FactorLike, g: FactorLike) -> bool:
    """Componentwise ``f <= g``; missing indices count as zero."""
    g = _fv(g)
    return all(e <= g[i] for i, e in _fv(f).entries)
