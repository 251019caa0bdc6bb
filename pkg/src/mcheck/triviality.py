"""Partitions of column indices and the triviality test for simple matrices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .matrix import ExtendedMatrix, MatrixError, require_simple


@dataclass(frozen=True)
class Partition:
    """Equivalence relation on ``{1, ..., size}``.

    ``reps[j-1]`` is the least element of the block containing ``j``.
    """

    reps: tuple[int, ...]

    def __post_init__(self):
        for j, r in enumerate(self.reps, start=1):
            if not (1 <= r <= j and self.reps[r - 1] == r):
                raise ValueError(f"not a canonical partition: {self.reps}")

    @classmethod
    def from_labels(cls, labels) -> Partition:
        """Group positions by equal label."""
        first: dict = {}
        return cls(tuple(first.setdefault(x, j) for j, x in enumerate(labels, start=1)))

    @classmethod
    def from_blocks(cls, size: int, blocks) -> Partition:
        labels = list(range(size))
        for b, block in enumerate(blocks):
            for j in block:
                labels[j - 1] = -1 - b
        return cls.from_labels(labels)

    @classmethod
    def discrete(cls, size: int) -> Partition:
        return cls(tuple(range(1, size + 1)))

    @property
    def size(self) -> int:
        return len(self.reps)

    def blocks(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for j, r in enumerate(self.reps, start=1):
            out.setdefault(r, []).append(j)
        return list(out.values())

    def related(self, a: int, b: int) -> bool:
        return self.reps[a - 1] == self.reps[b - 1]

    def __le__(self, other: Partition) -> bool:
        """Refinement order: every block of ``self`` lies in a block of ``other``."""
        return all(other.related(j, r) for j, r in enumerate(self.reps, start=1))

    def join(self, other: Partition) -> Partition:
        return join(self, other)


def join(P: Partition, Q: Partition) -> Partition:
    """Least partition coarser than both ``P`` and ``Q``."""
    if P.size != Q.size:
        raise ValueError(f"ground sets differ: {P.size} vs {Q.size}")
    parent = list(range(P.size + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for reps in (P.reps, Q.reps):
        for j, r in enumerate(reps, start=1):
            a, b = find(j), find(r)
            if a != b:
                # keep the smaller index as root
                parent[max(a, b)] = min(a, b)
    return Partition(tuple(find(j) for j in range(1, P.size + 1)))


def row_kernel(M: ExtendedMatrix, i: int) -> Partition:
    """Columns of row ``i`` grouped by equal left entry."""
    if M.m == 0:
        raise MatrixError("row kernel of a matrix with no left columns")
    if not 1 <= i <= M.n:
        raise MatrixError(f"row index {i} outside 1..{M.n}")
    return Partition.from_labels(M.left[i - 1])


@dataclass(frozen=True)
class TrivialityVerdict:
    trivial: bool
    # a row pair (i, i') admitting no witnessing columns, when trivial
    pair: tuple[int, int] | None = None
    # (i, i') -> (j, j') for every pair, when non-trivial
    table: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        if self.trivial:
            return {"outcome": "trivial", "pair": list(self.pair) if self.pair else None}
        return {
            "outcome": "non-trivial",
            "table": [[list(p), list(w)] for p, w in sorted(self.table.items())],
        }


def is_trivial(M: ExtendedMatrix) -> TrivialityVerdict:
    """Decide triviality of a simple matrix.

    ``M`` is non-trivial iff for all rows ``i, i'`` there are columns ``j, j'``
    with ``x_ij = y_i``, ``x_i'j' = y_i'`` and ``j`` related to ``j'`` in the
    join of the two row kernels.  With no left columns ``M`` is trivial.
    """
    require_simple(M)
    if M.m == 0:
        return TrivialityVerdict(True, (1, 1))
    y = M.targets()
    hits = [[j for j, v in enumerate(M.left[i], start=1) if v == y[i]] for i in range(M.n)]
    kernels = [row_kernel(M, i) for i in range(1, M.n + 1)]
    table = {}
    for i, i2 in itertools.product(range(M.n), repeat=2):
        joined = join(kernels[i], kernels[i2])
        found = next(
            ((j, j2) for j in hits[i] for j2 in hits[i2] if joined.related(j, j2)), None
        )
        if found is None:
            return TrivialityVerdict(True, (i + 1, i2 + 1))
        table[(i + 1, i2 + 1)] = found
    return TrivialityVerdict(False, None, table)


def check_triviality_witness(M: ExtendedMatrix, verdict: TrivialityVerdict) -> bool:
    """Re-check a verdict's witness against ``M`` without rerunning the search."""
    y = M.targets()
    if verdict.trivial:
        if M.m == 0:
            return True
        i, i2 = verdict.pair
        joined = join(row_kernel(M, i), row_kernel(M, i2))
        return not any(
            M.left[i - 1][j - 1] == y[i - 1]
            and M.left[i2 - 1][j2 - 1] == y[i2 - 1]
            and joined.related(j, j2)
            for j in range(1, M.m + 1)
            for j2 in range(1, M.m + 1)
        )
    if set(verdict.table) != set(itertools.product(range(1, M.n + 1), repeat=2)):
        return False
    for (i, i2), (j, j2) in verdict.table.items():
        if M.left[i - 1][j - 1] != y[i - 1] or M.left[i2 - 1][j2 - 1] != y[i2 - 1]:
            return False
        if not join(row_kernel(M, i), row_kernel(M, i2)).related(j, j2):
            return False
    return True
