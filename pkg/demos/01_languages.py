"""Generating languages: closure enumeration versus membrane simulation.

Run with ``python demos/01_languages.py``.
"""

from unaryp import (
    UnaryPSystem,
    enumerate_plus,
    enumerate_star,
    member_star,
    plus_to_star,
    prime_power_family,
    simulate_reachable,
)

# A unary system is an axiom length and one exponent per membrane.
# Here the axiom is a^2 and the single membrane rewrites a -> a^3.
pi = UnaryPSystem(axiom_len=2, coeffs=(3,))
print("star language up to 10^4:", enumerate_star(pi, 10**4))

# The plus language forces every membrane to fire at least once.
print("plus language up to 10^4:", enumerate_plus(pi, 10**4))

# Folding one application of every homomorphism into the axiom turns a
# plus language into a star language.
print("plus_to_star:", plus_to_star(pi))

# Membership is decided exactly from prime factorizations; no bound needed.
for m in (4, 54, 2 * 3**40):
    print(f"a^{m} in star language? witness = {member_star(pi, m)}")

# a^4 is in the plus language of (a, a->a^2), but never in the star
# language above: the two kinds of language are genuinely different.
rival = UnaryPSystem(1, (2,))
print("rival plus language up to 10:", enumerate_plus(rival, 10))

# Over a larger alphabet each membrane can act on its own letter.
fam = prime_power_family(3)
closure = enumerate_star(fam, 60)
simulated = simulate_reachable(fam, 60)
print(f"{len(closure)} Parikh vectors up to 60, first few: {closure[:5]}")
print("simulation agrees with closure:", closure == simulated)
