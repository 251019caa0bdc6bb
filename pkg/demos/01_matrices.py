"""Building, reading and combining extended matrices.

Run from the repository root:  python3 demos/01_matrices.py
"""

from pathlib import Path

from mcheck import format_matrix, intersect, is_trivial, parse_matrix, presentation
from mcheck.matrix import cube, edge, mal, perm

HERE = Path(__file__).parent / "matrices"

# The Mal'tsev matrix has two rows; each row is one equation of p.
M = mal()
print(format_matrix(M))
print(presentation(M))
print()

# Non-simple matrices carry several right columns and extra variables.
# The extra right-hand variables become new binary operations q1, q2, ...
P = perm(3)
print(format_matrix(P))
print(presentation(P))
print()

# Files on disk use the same format, comments allowed.
collapse = parse_matrix(HERE / "collapse.mat")
print("collapse.mat:", collapse.params)

# Triviality: the built-in matrices are all non-trivial, collapse.mat is not.
for name, X in [("Mal", M), ("Edge3", edge(3)), ("Cube3", cube(3)), ("collapse", collapse)]:
    v = is_trivial(X)
    print(f"{name:9} trivial={v.trivial}" + (f" (rows {v.pair})" if v.trivial else ""))
print()

# The intersection encodes the conjunction of two conditions.
# Its columns are pairs of columns, with the first factor varying slowest.
both = intersect(mal(), cube(2, 3))
print("Mal x Cube_{2,3}:", both.params)
