"""Extended matrices of variables and the standard families.

Variables are positive integers: ``a`` stands for ``x_a``.  A matrix keeps
its left part (``n x m``, entries in ``1..l``) and right part
(``n x m'``, entries in ``1..k``) as tuples of row tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence, Union


class MatrixError(ValueError):
    """Raised for malformed or out-of-range matrix data."""


@dataclass(frozen=True)
class ExtendedMatrix:
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]
    l: int
    k: int

    def __post_init__(self):
        if not self.left:
            raise MatrixError("a matrix needs at least one row (n >= 1)")
        if len(self.left) != len(self.right):
            raise MatrixError("left and right parts have different row counts")
        if not 0 <= self.l <= self.k:
            raise MatrixError(f"need k >= l >= 0, got l={self.l} k={self.k}")
        m, mp = len(self.left[0]), len(self.right[0])
        for i, (lrow, rrow) in enumerate(zip(self.left, self.right), start=1):
            if len(lrow) != m or len(rrow) != mp:
                raise MatrixError(f"row {i} is ragged")
            for j, v in enumerate(lrow, start=1):
                if not 1 <= v <= self.l:
                    raise MatrixError(f"left entry ({i},{j}) = x{v} outside x1..x{self.l}")
            for j, v in enumerate(rrow, start=1):
                if not 1 <= v <= self.k:
                    raise MatrixError(f"right entry ({i},{j}) = x{v} outside x1..x{self.k}")

    @property
    def n(self) -> int:
        return len(self.left)

    @property
    def m(self) -> int:
        return len(self.left[0])

    @property
    def m_prime(self) -> int:
        return len(self.right[0])

    @property
    def is_simple(self) -> bool:
        return self.m_prime == 1 and self.k == self.l

    @property
    def params(self) -> dict[str, int]:
        return {"n": self.n, "m": self.m, "m'": self.m_prime, "l": self.l, "k": self.k}

    def left_columns(self) -> list[tuple[int, ...]]:
        return [tuple(row[j] for row in self.left) for j in range(self.m)]

    def right_column(self) -> tuple[int, ...]:
        """The single right column of a simple matrix."""
        return tuple(row[0] for row in self.right)

    def targets(self) -> tuple[int, ...]:
        """``(y_1, ..., y_n)`` of a simple matrix."""
        return self.right_column()


def require_simple(M: ExtendedMatrix, what: str = "matrix") -> ExtendedMatrix:
    if not M.is_simple:
        raise MatrixError(f"{what} must be simple (m'=1 and k=l), got {M.params}")
    return M


def infer_bounds(left: Sequence[Sequence[int]], right: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Infer ``(l, k)`` from the entries when the usual shorthand applies.

    The shorthand requires ``m + m' > 0``, the left entries to be exactly
    ``x1..xl`` and the left entries together with the right ones to be
    exactly ``x1..xk``.
    """
    if not left or (not left[0] and not right[0]):
        raise MatrixError("cannot infer l, k: matrix has no columns (m + m' = 0)")
    lvars = {v for row in left for v in row}
    allvars = lvars | {v for row in right for v in row}
    l = len(lvars)
    if lvars != set(range(1, l + 1)):
        raise MatrixError(
            f"cannot infer l: left entries {sorted(lvars)} are not x1..x{l}; declare l and k"
        )
    k = len(allvars)
    if allvars != set(range(1, k + 1)):
        raise MatrixError(
            f"cannot infer k: entries {sorted(allvars)} are not x1..x{k}; declare l and k"
        )
    return l, k


def validate(
    left: Sequence[Sequence[int]],
    right: Sequence[Sequence[int]],
    l: int | None = None,
    k: int | None = None,
) -> ExtendedMatrix:
    """Build a validated matrix, inferring omitted ``l``/``k``."""
    left = tuple(tuple(int(v) for v in row) for row in left)
    right = tuple(tuple(int(v) for v in row) for row in right)
    if not left:
        raise MatrixError("a matrix needs at least one row (n >= 1)")
    if l is None or k is None:
        il, ik = infer_bounds(left, right)
        if l is not None and l != il:
            raise MatrixError(f"declared l={l} but the entries give l={il}")
        if k is not None and k != ik:
            raise MatrixError(f"declared k={k} but the entries give k={ik}")
        l, k = il, ik
    return ExtendedMatrix(left, right, l, k)


def simple(rows: Sequence[Sequence[int]], k: int | None = None) -> ExtendedMatrix:
    """Simple matrix from rows written as ``[x_i1, ..., x_im, y_i]``."""
    left = [row[:-1] for row in rows]
    right = [row[-1:] for row in rows]
    if k is None:
        k = max(v for row in rows for v in row)
    return validate(left, right, k, k)


# -- families ----------------------------------------------------------------

def mal() -> ExtendedMatrix:
    return simple([[1, 2, 2, 1], [1, 1, 2, 2]])


def perm(r: int) -> ExtendedMatrix:
    """``r``-permutability: ``r - 1`` right columns, ``l = 2``, ``k = r``.

    For ``r = 2`` the middle variables vanish and this is ``Mal``.
    """
    if r < 2:
        raise MatrixError(f"Perm needs r >= 2, got {r}")
    mids = list(range(3, r + 1))
    right = [[1, *mids], [*mids, 2]]
    return validate([[1, 2, 2], [1, 1, 2]], right, 2, r)


def ari() -> ExtendedMatrix:
    return simple([[1, 2, 2, 1], [1, 1, 2, 2], [1, 2, 1, 1]])


def maj() -> ExtendedMatrix:
    return simple([[1, 1, 2, 1], [1, 2, 1, 1], [2, 1, 1, 1]])


def cube(n: int, k: int = 2) -> ExtendedMatrix:
    """All ``n``-tuples over ``x1..xk`` except the constant ``x1`` one, in lex order."""
    if n < 2 or k < 2:
        raise MatrixError(f"Cube needs n >= 2 and k >= 2, got n={n} k={k}")
    cols = [c for c in itertools.product(range(1, k + 1), repeat=n) if any(v != 1 for v in c)]
    left = [[c[i] for c in cols] for i in range(n)]
    return validate(left, [[1]] * n, k, k)


def edge(n: int) -> ExtendedMatrix:
    if n < 2:
        raise MatrixError(f"Edge needs n >= 2, got {n}")
    left = [[1] * (n + 1) for _ in range(n)]
    left[0][0] = left[1][0] = 2
    for i in range(n):
        left[i][i + 1] = 2
    return validate(left, [[1]] * n, 2, 2)


FAMILIES = {
    "mal": (mal, ()),
    "perm": (perm, ("r",)),
    "ari": (ari, ()),
    "maj": (maj, ()),
    "cube": (cube, ("n", "k")),
    "edge": (edge, ("n",)),
}


def family(name: str, **params: int) -> ExtendedMatrix:
    """Look up a named family (case-insensitive) and instantiate it."""
    try:
        ctor, allowed = FAMILIES[name.lower()]
    except KeyError:
        raise MatrixError(f"unknown family {name!r}; expected one of {sorted(FAMILIES)}") from None
    extra = set(params) - set(allowed)
    if extra:
        raise MatrixError(f"family {name} takes no parameter(s) {sorted(extra)}")
    try:
        return ctor(**params)
    except TypeError:
        raise MatrixError(f"family {name} needs parameter(s) {list(allowed)}") from None


# -- constructions -------------------------------------------------------------

def intersect(M1: ExtendedMatrix, M2: ExtendedMatrix) -> ExtendedMatrix:
    """Simple matrix whose condition is the conjunction of those of ``M1`` and ``M2``.

    Left columns are indexed by pairs ``(j1, j2)``, ``j1`` major.
    """
    require_simple(M1, "first matrix")
    require_simple(M2, "second matrix")
    pairs = list(itertools.product(range(M1.m), range(M2.m)))
    left = [[row[j1] for j1, _ in pairs] for row in M1.left]
    left += [[row[j2] for _, j2 in pairs] for row in M2.left]
    k = max(M1.k, M2.k)
    return ExtendedMatrix(
        tuple(tuple(r) for r in left), M1.right + M2.right, k, k
    )


def interpret_row(
    M: ExtendedMatrix, i: int, f: Union[Sequence, Mapping[int, object]]
) -> tuple[tuple, tuple]:
    """Apply ``f`` to the entries of row ``i`` (1-based).

    ``f`` is either a sequence whose ``a-1``-th item is the value of ``x_a``
    or a mapping keyed by variable index.
    """
    if not 1 <= i <= M.n:
        raise MatrixError(f"row index {i} outside 1..{M.n}")
    get = f.__getitem__ if isinstance(f, Mapping) else (lambda a: f[a - 1])
    return (
        tuple(get(v) for v in M.left[i - 1]),
        tuple(get(v) for v in M.right[i - 1]),
    )


# -- the variety V_M -----------------------------------------------------------

@dataclass(frozen=True)
class Term:
    symbol: str
    args: tuple[int, ...]

    def __str__(self):
        return f"{self.symbol}({','.join(f'x{a}' for a in self.args)})"


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Union[int, Term]
    row: int
    column: int

    def __str__(self):
        rhs = f"x{self.rhs}" if isinstance(self.rhs, int) else str(self.rhs)
        return f"{self.lhs} = {rhs}"


@dataclass(frozen=True)
class Presentation:
    """Signature and axioms of the generic variety with ``M``-closed relations."""

    symbols: tuple[tuple[str, int], ...]
    equations: tuple[Equation, ...]
    l: int

    def arity(self, symbol: str) -> int:
        return dict(self.symbols)[symbol]

    def __str__(self):
        return "\n".join(str(e) for e in self.equations)


def p_symbols(m_prime: int) -> list[str]:
    return ["p"] if m_prime == 1 else [f"p{j}" for j in range(1, m_prime + 1)]


def presentation(M: ExtendedMatrix) -> Presentation:
    ps = p_symbols(M.m_prime)
    qs = [f"q{a}" for a in range(1, M.k - M.l + 1)]
    xs = tuple(range(1, M.l + 1))
    eqs = []
    for i in range(M.n):
        for j, sym in enumerate(ps):
            y = M.right[i][j]
            rhs = y if y <= M.l else Term(qs[y - M.l - 1], xs)
            eqs.append(Equation(Term(sym, M.left[i]), rhs, i + 1, j + 1))
    symbols = tuple((s, M.m) for s in ps) + tuple((q, M.l) for q in qs)
    return Presentation(symbols, tuple(eqs), M.l)
