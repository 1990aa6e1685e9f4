"""What removing membranes costs in size, for plus languages.

Run with ``python demos/03_size_tradeoffs.py``.
"""

from unaryp import (
    equivalent_systems,
    iterated_reduction_sizes,
    reduce_once,
    size,
    tradeoff_report,
    worst_case_family,
)

# Star languages never get bigger when minimized.  Plus languages can:
# a redundant membrane has to be folded into the axiom instead.
s = worst_case_family(m=3, n=2)
r = reduce_once(s)
print(f"{s} size {size(s)}  ->  {r} size {size(r)}  (bound {size(s) ** 2 - 1})")

# Over the small search space no other one-membrane system is equivalent.
print("one-membrane equivalents up to size 12:", equivalent_systems(s, 1, 12))

# Repeating the reduction x times on the worst-case family
print("\n m  n  x  before  after")
for m in (2, 3, 4):
    for n in (2, 3, 4):
        for x in range(1, n):
            before, after = iterated_reduction_sizes(m, n, x)
            print(f"{m:2d} {n:2d} {x:2d} {before:7d} {after:6d}")

# With m fixed and n growing, the one-membrane system grows exponentially.
report = tradeoff_report(worst_case_family(2, 8))
print()
print(report.table(), end="")
