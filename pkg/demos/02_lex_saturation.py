"""Deciding implications between simple conditions by saturation.

The target matrix's left columns form a set. Saturation keeps adding the
right column of any interpretation of the source matrix whose left columns
already lie in the set. The implication holds once the target's own right
column shows up.
"""

import json

from mcheck import implies_lex, replay
from mcheck.matrix import ari, cube, edge, maj, mal

v = implies_lex(ari(), mal())
print("Ari => Mal:", v.holds, "via", v.case)
for d in v.saturation.log:
    # each step names the source rows used and how the variables were renamed
    print("  derived", d.column, "from rows", d.rows, "with", d.interpretations)
print("  replays:", replay(ari(), mal(), v))
print()

v = implies_lex(maj(), mal())
print("Maj => Mal:", v.holds)
print("  closed set:", sorted(v.saturation.columns))
print()

# The edge condition implies the cube condition; the converse fails for n = 3.
print("Edge3 => Cube3:", implies_lex(edge(3), cube(3)).holds)
back = implies_lex(cube(3), edge(3))
print("Cube3 => Edge3:", back.holds, f"({len(back.saturation.columns)} columns in the fixpoint)")
print()

# Changing the number of variables in a cube matrix gives an equivalent condition.
for k1, k2 in [(2, 3), (3, 2)]:
    print(f"Cube_3,{k1} => Cube_3,{k2}:", implies_lex(cube(3, k1), cube(3, k2)).holds)

print()
print("witness:", json.dumps(implies_lex(edge(2), mal()).to_json()))
