"""Exit criteria.  Each test prints a PASS/FAIL line in the terminal summary.

Run alone with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
Every check is exact (set equality or integer equality); there are no
floating-point tolerances.
"""

import random

import pytest

from unaryp.complexity import (
    iterated_reduction_sizes,
    prime_power_family,
    reduce_once,
    unary_systems,
    worst_case_family,
)
from unaryp.factorcore import nth_prime
from unaryp.model import UnaryPSystem, permute, plus_to_star, size, strip_identities
from unaryp.monoid import (
    NotContextFree,
    Singleton,
    build_repr,
    canonicalize,
    classify_context_free,
    equivalent,
    equivalent_star,
    is_irreducible,
    minimize,
)
from unaryp.semantics import (
    enumerate_plus,
    enumerate_star,
    member_plus,
    member_star,
    simulate_reachable,
)

from oracles import prime_power_vectors

acceptance = pytest.mark.acceptance


def random_order(rng, n):
    order = list(range(1, n + 1))
    rng.shuffle(order)
    return order


def columns_distinct_irreducible(sys_):
    if 1 in sys_.coeffs or len(set(sys_.coeffs)) != len(sys_.coeffs):
        return False
    r = build_repr(sys_)
    return all(is_irreducible(r, c) for c in r.columns)


@acceptance(1, "star language of (a^2, a->a^3) and a plus-language rival containing a^4")
def test_two_times_powers_of_three():
    pi = UnaryPSystem(2, (3,))
    assert enumerate_star(pi, 10**4) == [2, 6, 18, 54, 162, 486, 1458, 4374]
    assert member_star(pi, 4) is None
    rival = UnaryPSystem(1, (2,))
    assert 4 in enumerate_plus(rival, 10)
    assert 4 not in enumerate_star(pi, 10**4)


@acceptance(2, "prime-power family n=2,3 equals nested-loop oracle to bound 200")
@pytest.mark.parametrize("n", [2, 3])
def test_prime_power_family_language(n):
    fam = prime_power_family(n)
    assert enumerate_star(fam, 200) == prime_power_vectors(n, 200)
    if n == 3:
        assert [nth_prime(i) for i in (1, 2, 3)] == [2, 3, 5]
        assert fam.hom_vectors() == ((2, 1, 1), (1, 3, 1), (1, 1, 5))


@acceptance(3, "homomorphism order is irrelevant on the 500-system corpus")
def test_permutation_invariance(corpus):
    rng = random.Random(3)
    failures = []
    for sys_ in corpus:
        other = permute(sys_, random_order(rng, sys_.n))
        ok = (
            enumerate_star(other, 2000) == enumerate_star(sys_, 2000)
            and enumerate_plus(other, 2000) == enumerate_plus(sys_, 2000)
            and equivalent_star(sys_, other)
        )
        if not ok:
            failures.append(sys_)
    assert failures == []


@acceptance(4, "plus language equals star language of plus_to_star, B in {100, 2000}")
def test_plus_to_star_bridge(corpus):
    failures = [
        (sys_, bound)
        for sys_ in corpus
        for bound in (100, 2000)
        if enumerate_plus(sys_, bound) != enumerate_star(plus_to_star(sys_), bound)
    ]
    assert failures == []


@acceptance(5, "monoid membership agrees with enumeration for every m <= 2000")
def test_membership_via_factor_monoid(corpus):
    failures = []
    for sys_ in corpus:
        star = set(enumerate_star(sys_, 2000))
        plus = set(enumerate_plus(sys_, 2000))
        for m in range(1, 2001):
            w = member_star(sys_, m)
            if (w is not None) != (m in star):
                failures.append((sys_, m, "star"))
                continue
            if w is not None:
                value = sys_.axiom_len
                for c, e in zip(sys_.coeffs, w):
                    value *= c**e
                if value != m:
                    failures.append((sys_, m, "witness"))
            if m in plus:
                v = member_plus(sys_, m)
                value = sys_.axiom_len
                for c, e in zip(sys_.coeffs, v or ()):
                    value *= c**e
                if v is None or min(v, default=1) < 1 or value != m:
                    failures.append((sys_, m, "plus"))
    assert failures == []


@acceptance(6, "canonical form: generators are columns, minimize keeps language, idempotent, stable")
def test_canonical_form(corpus):
    rng = random.Random(6)
    failures = []
    for sys_ in corpus:
        cf = canonicalize(sys_)
        stripped = strip_identities(sys_)[0]
        columns = set(build_repr(stripped).columns)
        if not set(cf.generators) <= columns:
            failures.append((sys_, "a"))
        if enumerate_star(minimize(sys_), 2000) != enumerate_star(sys_, 2000):
            failures.append((sys_, "b"))
        if canonicalize(minimize(sys_)) != cf or canonicalize(permute(sys_, random_order(rng, sys_.n))) != cf:
            failures.append((sys_, "c"))
        if stripped.coeffs:
            extra = []
            for _ in range(rng.randint(1, 3)):
                product = 1
                for _ in range(rng.randint(1, 3)):
                    product *= rng.choice(stripped.coeffs)
                extra.append(product)
            injected = UnaryPSystem(sys_.axiom_len, sys_.coeffs + tuple(extra))
            if canonicalize(permute(injected, random_order(rng, injected.n))) != cf:
                failures.append((sys_, "d"))
    assert failures == []


@acceptance(7, "minimizing never grows size; equal when columns are distinct atoms")
def test_identity_bound(corpus):
    failures = []
    equal_cases = 0
    for sys_ in corpus:
        before, after = size(sys_), size(minimize(sys_))
        if after > before:
            failures.append(sys_)
        if columns_distinct_irreducible(sys_):
            equal_cases += 1
            if after != before:
                failures.append(sys_)
    assert failures == []
    assert equal_cases > 50


@acceptance(8, "one reduction: sizes 3m -> m+m^2 within (3m)^2-1, plus language kept")
@pytest.mark.parametrize("m", range(2, 11))
def test_quadratic_tradeoff(m):
    sys_ = worst_case_family(m, 2)
    reduced = reduce_once(sys_)
    assert size(sys_) == 3 * m
    assert size(reduced) == m + m * m
    assert m + m * m <= (3 * m) ** 2 - 1
    assert enumerate_plus(reduced, 5000) == enumerate_plus(sys_, 5000)


@acceptance(9, "x reductions: measured sizes equal (n-x)m + m^(x+1)")
def test_iterated_tradeoff():
    for m in range(2, 5):
        for n in range(2, 5):
            for x in range(1, n):
                before, after = iterated_reduction_sizes(m, n, x)
                assert before == (n + 1) * m
                assert after == (n - x) * m + m ** (x + 1)
                if x == n - 1:
                    assert after == m + m**n


@acceptance(10, "membrane simulator (apply-or-dissolve) equals closed-form enumeration, bound 2000")
def test_simulator_oracle(corpus):
    failures = [s for s in corpus if simulate_reachable(s, 2000) != enumerate_star(s, 2000)]
    assert failures == []


@acceptance(11, "only (a^(m^2), a->a^m) is plus-equivalent with one hom, m=3,4,5")
@pytest.mark.parametrize("m", [3, 4, 5])
def test_single_hom_equivalent_is_unique(m):
    target = worst_case_family(m, 2)
    matches = [
        s for s in unary_systems(1, m + m * m)
        if equivalent(s, target, "plus")
    ]
    assert matches == [UnaryPSystem(m * m, (m,))]


@acceptance(12, "singleton classification iff one enumerated member")
def test_context_free_classification(corpus):
    extended = list(corpus) + [UnaryPSystem(a, (1,) * k) for a in range(1, 10) for k in range(0, 4)]
    failures = []
    for sys_ in extended:
        bound = sys_.axiom_len * max(sys_.coeffs + (2,))
        members = enumerate_star(sys_, bound)
        verdict = classify_context_free(sys_)
        if (len(members) == 1) != isinstance(verdict, Singleton):
            failures.append(sys_)
        if isinstance(verdict, Singleton) and verdict.length != sys_.axiom_len:
            failures.append(sys_)
        if len(members) > 1 and verdict != NotContextFree():
            failures.append(sys_)
    assert failures == []


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
