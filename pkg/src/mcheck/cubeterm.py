"""Deciding whether a matrix condition implies having an ``n'``-cube term.

Two routes:

* simple matrices: the row-cover test.  The implication holds iff some
  ``n'`` rows (repetition allowed) have no common column ``j`` with
  ``x_ij = y_i`` in each of them.
* any matrix: search for operations on ``{0, 1}`` that satisfy the
  equations of the generic variety and all preserve
  ``R_n' = {0,1}^n' minus the all-zero tuple``.  The implication holds iff
  there is none.

Boolean tables are indexed by the input read as a big-endian binary
number, so input ``(b_1, ..., b_m)`` sits at ``sum b_j 2^(m-j)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .matrix import (
    ExtendedMatrix,
    MatrixError,
    Presentation,
    Term,
    intersect,
    p_symbols,
    presentation,
    require_simple,
)

DEFAULT_NODE_CAP = 10**7


def bits_to_index(bits) -> int:
    idx = 0
    for b in bits:
        idx = (idx << 1) | b
    return idx


def index_to_bits(idx: int, arity: int) -> tuple[int, ...]:
    return tuple((idx >> (arity - 1 - j)) & 1 for j in range(arity))


@dataclass(frozen=True)
class BooleanOperation:
    symbol: str
    arity: int
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != 2**self.arity or any(v not in (0, 1) for v in self.table):
            raise ValueError(f"{self.symbol}: need {2 ** self.arity} table entries in {{0, 1}}")

    @classmethod
    def from_function(cls, symbol: str, arity: int, fn) -> BooleanOperation:
        return cls(
            symbol, arity, tuple(int(fn(*index_to_bits(i, arity))) for i in range(2**arity))
        )

    def __call__(self, *bits) -> int:
        return self.table[bits_to_index(bits)]

    def zeros(self) -> list[tuple[int, ...]]:
        return [index_to_bits(i, self.arity) for i, v in enumerate(self.table) if v == 0]

    def to_json(self) -> dict:
        return {"symbol": self.symbol, "arity": self.arity, "table": list(self.table)}


@dataclass(frozen=True)
class TwoElementAlgebra:
    ops: tuple[BooleanOperation, ...]

    def op(self, symbol: str) -> BooleanOperation:
        for o in self.ops:
            if o.symbol == symbol:
                return o
        raise KeyError(symbol)

    def to_json(self) -> dict:
        return {"ops": [o.to_json() for o in self.ops]}

    @classmethod
    def from_json(cls, data: dict) -> TwoElementAlgebra:
        return cls(
            tuple(BooleanOperation(o["symbol"], o["arity"], tuple(o["table"])) for o in data["ops"])
        )


@dataclass(frozen=True)
class CubeRelation:
    n_prime: int

    def __post_init__(self):
        if self.n_prime < 1:
            raise ValueError("relation arity must be positive")

    @property
    def members(self) -> list[tuple[int, ...]]:
        return [t for t in itertools.product((0, 1), repeat=self.n_prime) if any(t)]

    def __contains__(self, t) -> bool:
        return len(t) == self.n_prime and any(t)


# -- preservation ----------------------------------------------------------------

def _zero_mask(idx: int, arity: int) -> int:
    """Bit set of coordinates where the input at ``idx`` is 0."""
    return ~idx & ((1 << arity) - 1)


def _blocking_subset(masks, n_prime: int, must_use: int | None = None):
    """Up to ``n_prime`` masks (``must_use`` among them) with empty intersection."""
    masks = list(masks)

    def search(start, acc, picked, budget):
        if acc == 0:
            return picked
        if budget == 0:
            return None
        for t in range(start, len(masks)):
            found = search(t + 1, acc & masks[t], picked + [masks[t]], budget - 1)
            if found is not None:
                return found
        return None

    if must_use is None:
        return search(0, -1, [], n_prime)
    return search(0, must_use, [must_use], n_prime - 1)


def preserves(op: BooleanOperation, R: CubeRelation) -> bool:
    """Whether ``op`` maps ``R`` to itself coordinatewise.

    It fails exactly when ``n'`` zeros of ``op`` (repetition allowed) can be
    stacked without a column of zeros, i.e. their zero-coordinate sets have
    empty intersection.
    """
    masks = [_zero_mask(i, op.arity) for i, v in enumerate(op.table) if v == 0]
    return _blocking_subset(masks, R.n_prime) is None


def preserves_direct(op: BooleanOperation, R: CubeRelation) -> bool:
    """Same as :func:`preserves` by enumerating all ``arity``-tuples of members."""
    members = R.members
    for args in itertools.product(members, repeat=op.arity):
        image = tuple(op(*(a[c] for a in args)) for c in range(R.n_prime))
        if image not in R:
            return False
    return True


def algebra_satisfies(A: TwoElementAlgebra, P: Presentation) -> bool:
    """Check every equation of ``P`` under all ``2^l`` assignments."""
    for sym, arity in P.symbols:
        try:
            got = A.op(sym).arity
        except KeyError:
            raise MatrixError(f"algebra lacks operation {sym}") from None
        if got != arity:
            raise MatrixError(f"{sym} has arity {got}, presentation needs {arity}")

    def evaluate(term, f):
        if isinstance(term, int):
            return f[term - 1]
        return A.op(term.symbol)(*(f[a - 1] for a in term.args))

    for f in itertools.product((0, 1), repeat=P.l):
        for eq in P.equations:
            if evaluate(eq.lhs, f) != evaluate(eq.rhs, f):
                return False
    return True


# -- simple matrices ---------------------------------------------------------------

@dataclass(frozen=True)
class CubeVerdict:
    holds: bool
    n_prime: int
    rows: tuple[int, ...] | None = None  # uncovered row tuple, when holding
    cover: dict = field(default_factory=dict)  # row tuple -> column, when failing
    comparisons: int = 0

    def to_json(self) -> dict:
        out = {"outcome": "holds" if self.holds else "fails", "n_prime": self.n_prime}
        if self.holds:
            out["rows"] = list(self.rows)
        else:
            out["cover"] = [[list(t), j] for t, j in sorted(self.cover.items())]
        out["comparisons"] = self.comparisons
        return out


def column_hit_sets(M: ExtendedMatrix) -> tuple[list[int], int]:
    """Bitmask of rows ``i`` with ``x_ij = y_i`` for each column, and the number
    of element comparisons made."""
    y = M.targets()
    hits = [0] * M.m
    count = 0
    for i, row in enumerate(M.left):
        for j, v in enumerate(row):
            count += 1
            if v == y[i]:
                hits[j] |= 1 << i
    return hits, count


def implies_cube_simple(M: ExtendedMatrix, n_prime: int) -> CubeVerdict:
    """Row-cover test for ``M => Cube_n'`` on a simple matrix."""
    require_simple(M)
    if n_prime < 2:
        raise MatrixError(f"n' must be at least 2, got {n_prime}")
    hits, count = column_hit_sets(M)
    cover = {}
    for rows in itertools.product(range(1, M.n + 1), repeat=n_prime):
        mask = 0
        for i in rows:
            mask |= 1 << (i - 1)
        j = next((j for j, h in enumerate(hits, start=1) if h & mask == mask), None)
        if j is None:
            return CubeVerdict(True, n_prime, rows=rows, comparisons=count)
        cover[rows] = j
    return CubeVerdict(False, n_prime, cover=cover, comparisons=count)


def comparison_count(M: ExtendedMatrix, n_prime: int) -> int:
    return implies_cube_simple(M, n_prime).comparisons


def comparison_bound(M: ExtendedMatrix, n_prime: int) -> int:
    return n_prime * M.m * M.n**n_prime


def check_row_witness(M: ExtendedMatrix, rows) -> bool:
    y = M.targets()
    if not rows or not all(1 <= i <= M.n for i in rows):
        return False
    return not any(all(M.left[i - 1][j] == y[i - 1] for i in rows) for j in range(M.m))


def check_cover_table(M: ExtendedMatrix, n_prime: int, cover: dict) -> bool:
    y = M.targets()
    for rows in itertools.product(range(1, M.n + 1), repeat=n_prime):
        j = cover.get(rows)
        if j is None or not 1 <= j <= M.m:
            return False
        if not all(M.left[i - 1][j - 1] == y[i - 1] for i in rows):
            return False
    return True


def build_counterexample_algebra(M: ExtendedMatrix, n_prime: int) -> BooleanOperation:
    """Operation on ``{0,1}`` witnessing that ``M`` does not imply ``Cube_n'``.

    ``p(b) = 0`` iff ``b`` is the left part of some row under an assignment
    sending that row's right entry to 0.
    """
    if implies_cube_simple(M, n_prime).holds:
        raise MatrixError(f"M implies Cube_{n_prime}; no counterexample algebra exists")
    zero_inputs = set()
    for i in range(M.n):
        for f in itertools.product((0, 1), repeat=M.k):
            if f[M.right[i][0] - 1] == 0:
                zero_inputs.add(bits_to_index(f[v - 1] for v in M.left[i]))
    table = tuple(0 if i in zero_inputs else 1 for i in range(2**M.m))
    return BooleanOperation(p_symbols(1)[0], M.m, table)


# -- general matrices --------------------------------------------------------------

@dataclass(frozen=True)
class GeneralVerdict:
    outcome: str  # "holds", "fails" or "undecided"
    n_prime: int
    algebra: TwoElementAlgebra | None = None
    reason: str = ""
    nodes: int = 0

    @property
    def holds(self) -> bool | None:
        return None if self.outcome == "undecided" else self.outcome == "holds"

    def to_json(self) -> dict:
        out = {"outcome": self.outcome, "n_prime": self.n_prime, "reason": self.reason}
        if self.algebra is not None:
            out["algebra"] = self.algebra.to_json()
        out["nodes"] = self.nodes
        return out


class _Classes:
    """Union-find over table cells plus the two constants ``0`` and ``1``."""

    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def implies_cube_general(
    M: ExtendedMatrix, n_prime: int, node_cap: int = DEFAULT_NODE_CAP
) -> GeneralVerdict:
    """Two-element-algebra test for ``M => Cube_n'`` on any extended matrix.

    Cells ``(symbol, input index)`` are linked by the equations (each
    assignment of ``x1..xl`` in ``{0,1}`` either pins a ``p_j`` cell to a
    constant or ties it to a ``q_a`` cell).  The remaining classes are
    assigned by depth-first search in cell order, 0 before 1, rejecting an
    assignment as soon as some operation has ``n'`` zeros with no common zero
    coordinate.  The first algebra found in that order is returned.
    """
    if n_prime < 2:
        raise MatrixError(f"n' must be at least 2, got {n_prime}")
    P = presentation(M)
    arity = dict(P.symbols)
    order = [(sym, idx) for sym, ar in P.symbols for idx in range(2**ar)]

    uf = _Classes()
    for cell in order:
        uf.find(cell)
    for f in itertools.product((0, 1), repeat=M.l):
        for eq in P.equations:
            lhs = (eq.lhs.symbol, bits_to_index(f[v - 1] for v in eq.lhs.args))
            if isinstance(eq.rhs, Term):
                rhs = (eq.rhs.symbol, bits_to_index(f[v - 1] for v in eq.rhs.args))
            else:
                rhs = ("const", f[eq.rhs - 1])
            uf.union(lhs, rhs)
    c0, c1 = uf.find(("const", 0)), uf.find(("const", 1))
    if c0 == c1:
        return GeneralVerdict("holds", n_prime, reason="equations force 0 = 1 on {0,1}")

    members: dict = {}
    for cell in order:
        members.setdefault(uf.find(cell), []).append(cell)
    free = [r for r in members if r not in (c0, c1)]  # in order of first cell

    zeros = {sym: [] for sym in arity}

    def add_zeros(cells) -> bool:
        """Record ``cells`` as zeros; False (and nothing recorded) on violation."""
        added = []
        for sym, idx in cells:
            mask = _zero_mask(idx, arity[sym])
            if _blocking_subset(zeros[sym], n_prime, must_use=mask) is not None:
                for s in reversed(added):
                    zeros[s].pop()
                return False
            zeros[sym].append(mask)
            added.append(sym)
        return True

    def drop_zeros(cells):
        for sym, _ in reversed(cells):
            zeros[sym].pop()

    if not add_zeros(members.get(c0, [])):
        return GeneralVerdict(
            "holds", n_prime, reason="forced zeros already violate preservation"
        )

    values: dict = {}
    nodes = 0
    # explicit stack: (class position, value being tried)
    pos, stack = 0, []
    while True:
        if pos == len(free):
            break
        tried = values.get(free[pos])
        start = 0 if tried is None else tried + 1
        placed = False
        for v in range(start, 2):
            nodes += 1
            if nodes > node_cap:
                return GeneralVerdict("undecided", n_prime, reason="node cap reached", nodes=nodes)
            if v == 0 and not add_zeros(members[free[pos]]):
                continue
            values[free[pos]] = v
            stack.append(pos)
            placed = True
            break
        if placed:
            pos += 1
            continue
        values.pop(free[pos], None)
        if not stack:
            return GeneralVerdict("holds", n_prime, reason="search exhausted", nodes=nodes)
        pos = stack.pop()
        if values[free[pos]] == 0:
            drop_zeros(members[free[pos]])

    def value(cell):
        root = uf.find(cell)
        return 0 if root == c0 else 1 if root == c1 else values[root]

    ops = tuple(
        BooleanOperation(sym, ar, tuple(value((sym, idx)) for idx in range(2**ar)))
        for sym, ar in P.symbols
    )
    return GeneralVerdict("fails", n_prime, TwoElementAlgebra(ops), reason="algebra found", nodes=nodes)


def check_algebra_witness(M: ExtendedMatrix, n_prime: int, A: TwoElementAlgebra) -> bool:
    R = CubeRelation(n_prime)
    return algebra_satisfies(A, presentation(M)) and all(preserves(o, R) for o in A.ops)


# -- conjunctions of simple conditions ---------------------------------------------

@dataclass(frozen=True)
class FamilyVerdict:
    holds: bool
    n_prime: int
    member: int | None  # 1-based index of a member implying Cube_n'
    member_verdicts: tuple[bool, ...]
    intersection_holds: bool | None

    def to_json(self) -> dict:
        return {
            "outcome": "holds" if self.holds else "fails",
            "n_prime": self.n_prime,
            "member": self.member,
            "member_verdicts": list(self.member_verdicts),
            "intersection_holds": self.intersection_holds,
        }


def implies_cube_family(Ms, n_prime: int) -> FamilyVerdict:
    """Does the conjunction of the simple conditions ``Ms`` imply ``Cube_n'``?

    Computed memberwise and, independently, on the intersection matrix; the
    two must agree.  An empty list does not imply ``Cube_n'``.
    """
    Ms = list(Ms)
    verdicts = tuple(implies_cube_simple(M, n_prime).holds for M in Ms)
    member = next((i for i, v in enumerate(verdicts, start=1) if v), None)
    joint = None
    if Ms:
        acc = Ms[0]
        for M in Ms[1:]:
            acc = intersect(acc, M)
        joint = implies_cube_simple(acc, n_prime).holds
        if joint != (member is not None):
            raise AssertionError("member-wise and intersection verdicts disagree")
    return FamilyVerdict(member is not None, n_prime, member, verdicts, joint)
