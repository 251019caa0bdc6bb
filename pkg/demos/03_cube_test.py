"""Does a simple condition force a cube term?

For a simple matrix the answer comes from a covering question on its rows.
Every choice of n' rows must share a column where each chosen row
reproduces its own right-hand variable. One uncovered choice is enough for
the implication to hold. A full cover table proves it fails, and in that
case a single Boolean operation refutes it explicitly.
"""

import itertools

from mcheck import (
    CubeRelation,
    build_counterexample_algebra,
    comparison_count,
    implies_cube_family,
    implies_cube_simple,
)
from mcheck.matrix import ari, maj, mal

for name, M in [("Mal", mal()), ("Ari", ari()), ("Maj", maj())]:
    for n_prime in (2, 3):
        v = implies_cube_simple(M, n_prime)
        witness = f"rows {v.rows}" if v.holds else f"cover of {len(v.cover)} tuples"
        print(f"{name} => Cube_{n_prime}: {str(v.holds):5}  {witness}  ({comparison_count(M, n_prime)} comparisons)")
print()

# Majority does not give a Mal'tsev term, and the refuting operation is majority itself.
p = build_counterexample_algebra(maj(), 2)
print("counterexample table:", p.table)
R = CubeRelation(2)
closed = all(
    tuple(p(*(a[c] for a in args)) for c in range(2)) in R
    for args in itertools.product(R.members, repeat=3)
)
print("preserves R_2 on all 27 argument triples:", closed)
print()

# A finite conjunction forces the term iff one member does.
f = implies_cube_family([maj(), ari()], 2)
print("{Maj, Ari} => Cube_2:", f.holds, "through member", f.member)
