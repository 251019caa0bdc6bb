"""Matrices with several right columns: searching for a two-element algebra.

Without the simple shape the row-cover test no longer applies. Instead the
search looks for Boolean operations that satisfy the equations and all
preserve the relation R_n' = {0,1}^n' minus the zero tuple. Finding one
refutes the cube implication. Ruling all of them out proves it.
"""

from mcheck import implies_cube_general, presentation
from mcheck.matrix import mal, perm

P = perm(3)
print(presentation(P))
v = implies_cube_general(P, 2)
print("Perm_3 => Mal:", v.outcome, f"after {v.nodes} search nodes")
for op in v.algebra.ops:
    print(f"  {op.symbol}/{op.arity}: {op.table}")
print()

for name, M in [("Perm_2", perm(2)), ("Mal", mal())]:
    g = implies_cube_general(M, 2)
    print(f"{name} => Mal: {g.outcome} ({g.reason})")
print()

# A node cap bounds the search; hitting it gives an honest "undecided".
print("with node_cap=1:", implies_cube_general(P, 2, node_cap=1).outcome)
