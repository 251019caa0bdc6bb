"""Implication between simple matrix conditions over finitely complete categories.

``implies_lex(M1, M2)`` settles the degenerate cases (no left columns,
trivial matrices) directly and otherwise saturates the left-column set of
``M2``: a column ``c`` is added when some ``n2`` interpretations of rows of
``M1`` into ``x1..x_k2`` stack to a matrix whose left columns are all present
and whose right column is ``c``.  The implication holds iff the right column
of ``M2`` ends up in the set.

Search order, which fixes the derivation log: absent columns are tried in
lexicographic order, one pass after another until a pass adds nothing; for a
given column, the ``n2`` row slots are filled depth first, each slot trying
rows in increasing order and, per row, value tables ``(f(x1), ..., f(x_k1))``
in lexicographic order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .matrix import ExtendedMatrix, MatrixError, interpret_row, require_simple
from .triviality import is_trivial

Column = tuple[int, ...]


@dataclass(frozen=True)
class Derivation:
    column: Column
    rows: tuple[int, ...]
    interpretations: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "column": list(self.column),
            "rows": list(self.rows),
            "interpretations": [list(f) for f in self.interpretations],
        }


@dataclass(frozen=True)
class SaturationState:
    initial: frozenset
    columns: frozenset
    log: tuple[Derivation, ...]
    complete: bool  # False when stopped early on reaching the goal column


@dataclass(frozen=True)
class LexVerdict:
    holds: bool
    case: str
    saturation: SaturationState | None = None

    @property
    def derived_columns(self) -> list[Column]:
        return [d.column for d in self.saturation.log] if self.saturation else []

    def to_json(self) -> dict:
        sat = self.saturation
        return {
            "outcome": "holds" if self.holds else "fails",
            "case": self.case,
            "derived_columns": [list(c) for c in self.derived_columns],
            "final_columns": [list(c) for c in sorted(sat.columns)] if sat else [],
            "log": [d.to_json() for d in sat.log] if sat else [],
        }


def _row_images(M1: ExtendedMatrix, k2: int):
    """Distinct interpretations of rows of ``M1`` into ``1..k2``.

    Returns ``{y: [(left_tuple, row, table), ...]}`` keeping, for each
    distinct ``(left_tuple, y)``, the first ``(row, table)`` in search order.
    """
    by_target: dict[int, list] = {}
    seen = set()
    for i in range(1, M1.n + 1):
        for f in itertools.product(range(1, k2 + 1), repeat=M1.k):
            lhs, rhs = interpret_row(M1, i, f)
            key = (lhs, rhs[0])
            if key not in seen:
                seen.add(key)
                by_target.setdefault(rhs[0], []).append((lhs, i, f))
    return by_target


def _prefixes(columns) -> set:
    return {c[:a] for c in columns for a in range(len(c) + 1)}


def _derive(target: Column, images, m1: int, prefixes: set):
    """Depth-first search for a stack of row images producing ``target``."""
    n2 = len(target)
    chosen: list = []

    def extend(a: int, partial: tuple) -> bool:
        # partial[j] is the prefix (length a) of the j-th left column
        if a == n2:
            return True
        for lhs, i, f in images.get(target[a], ()):
            nxt = tuple(p + (v,) for p, v in zip(partial, lhs))
            if all(p in prefixes for p in nxt):
                chosen.append((i, f))
                if extend(a + 1, nxt):
                    return True
                chosen.pop()
        return False

    if extend(0, ((),) * m1):
        return Derivation(target, tuple(i for i, _ in chosen), tuple(f for _, f in chosen))
    return None


def saturate(M1: ExtendedMatrix, M2: ExtendedMatrix, goal: Column | None = None) -> SaturationState:
    """Least fixpoint of the column-expansion step starting from ``M2``'s left columns.

    If ``goal`` is given the search stops as soon as that column is present.
    """
    require_simple(M1, "first matrix")
    require_simple(M2, "second matrix")
    initial = frozenset(M2.left_columns())
    columns = set(initial)
    log: list[Derivation] = []
    if goal is not None and goal in columns:
        return SaturationState(initial, frozenset(columns), (), False)
    images = _row_images(M1, M2.k)
    prefixes = _prefixes(columns)
    universe = list(itertools.product(range(1, M2.k + 1), repeat=M2.n))
    changed = True
    while changed:
        changed = False
        for c in universe:
            if c in columns:
                continue
            d = _derive(c, images, M1.m, prefixes)
            if d is None:
                continue
            columns.add(c)
            prefixes |= _prefixes([c])
            log.append(d)
            changed = True
            if c == goal:
                return SaturationState(initial, frozenset(columns), tuple(log), False)
    return SaturationState(initial, frozenset(columns), tuple(log), True)


def implies_lex(M1: ExtendedMatrix, M2: ExtendedMatrix, full_saturation: bool = False) -> LexVerdict:
    """Decide whether every finitely complete category with ``M1``-closed
    relations has ``M2``-closed relations."""
    require_simple(M1, "first matrix")
    require_simple(M2, "second matrix")
    if M1.m == 0:
        return LexVerdict(True, "first-matrix-nullary")
    if is_trivial(M1).trivial:
        return LexVerdict(M2.m > 0, "first-matrix-trivial")
    if is_trivial(M2).trivial:
        return LexVerdict(False, "second-matrix-trivial")
    goal = M2.right_column()
    sat = saturate(M1, M2, None if full_saturation else goal)
    return LexVerdict(goal in sat.columns, "saturation", sat)


def replay(M1: ExtendedMatrix, M2: ExtendedMatrix, verdict: LexVerdict) -> bool:
    """Check a saturation verdict step by step against the two matrices.

    Every logged derivation must stack genuine interpretations of rows of
    ``M1`` whose left columns are present at that point and whose right
    column is the (new) logged column.  A ``holds`` verdict must end with
    ``M2``'s right column present.
    """
    if verdict.case != "saturation":
        raise MatrixError("only saturation verdicts carry a replayable log")
    columns = set(M2.left_columns())
    for d in verdict.saturation.log:
        if len(d.rows) != M2.n or len(d.interpretations) != M2.n or d.column in columns:
            return False
        lefts, rights = [], []
        for i, f in zip(d.rows, d.interpretations):
            if len(f) != M1.k or not all(1 <= v <= M2.k for v in f):
                return False
            lhs, rhs = interpret_row(M1, i, f)
            lefts.append(lhs)
            rights.append(rhs[0])
        if tuple(rights) != d.column:
            return False
        if any(tuple(row[j] for row in lefts) not in columns for j in range(M1.m)):
            return False
        columns.add(d.column)
    if columns != set(verdict.saturation.columns):
        return False
    return (M2.right_column() in columns) == verdict.holds
