"""Canonical forms, minimization, and deciding equivalence.

Run with ``python demos/02_canonical_forms.py``.
"""

from unaryp import (
    UnaryPSystem,
    build_repr,
    canonicalize,
    classify_context_free,
    enumerate_star,
    equivalent_plus,
    equivalent_star,
    minimize,
)

sys_ = UnaryPSystem(axiom_len=1, coeffs=(2, 3, 6, 1))

# Exponents factor into prime-exponent columns; the axiom gives the offset.
# Identity membranes contribute nothing and are stripped first.
r = build_repr(UnaryPSystem(1, (2, 3, 6)))
print("rows k =", r.k)
for row in r.matrix():
    print("   ", row)

# The canonical form keeps only the irreducible columns.
cf = canonicalize(sys_)
print(cf.serialize(), end="")
print("minimized:", minimize(sys_))

# Equivalence is structural equality of canonical forms.
a, b = UnaryPSystem(2, (4,)), UnaryPSystem(2, (4, 16))
print("(a^2; 4) ~ (a^2; 4, 16):", equivalent_star(a, b))
print("agree up to 10^5:", enumerate_star(a, 10**5) == enumerate_star(b, 10**5))

# Plus languages are compared after moving one application into the axiom.
print("plus (a; 2, 2) ~ (a^2; 2, 2):", equivalent_plus(UnaryPSystem(1, (2, 2)), UnaryPSystem(2, (2, 2))))

# The only context-free languages these systems make are singletons.
for s in (UnaryPSystem(7, (1,)), UnaryPSystem(1, (2,))):
    print(s, "->", classify_context_free(s))
