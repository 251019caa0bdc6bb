"""Seeded random simple matrices and the cross-validation run over them."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cubeterm import (
    TwoElementAlgebra,
    build_counterexample_algebra,
    check_algebra_witness,
    comparison_bound,
    implies_cube_general,
    implies_cube_simple,
)
from .lex import implies_lex, replay
from .matrix import ExtendedMatrix, cube, intersect, simple

SAFE_BOUNDS = {"nmax": 6, "mmax": 6, "kmax": 4}


def random_simple_matrix(rng: random.Random, nmax: int = 4, mmax: int = 4, kmax: int = 3) -> ExtendedMatrix:
    n = rng.randint(1, nmax)
    m = rng.randint(0, mmax)
    k = rng.randint(1, kmax)
    rows = [[rng.randint(1, k) for _ in range(m + 1)] for _ in range(n)]
    return simple(rows, k)


def random_corpus(seed: int, count: int, nmax: int = 4, mmax: int = 4, kmax: int = 3):
    rng = random.Random(seed)
    for _ in range(count):
        yield random_simple_matrix(rng, nmax, mmax, kmax)


def compact(M: ExtendedMatrix) -> str:
    rows = "; ".join(
        " ".join(f"x{v}" for v in lrow) + (" | " if lrow else "| ") + " ".join(f"x{v}" for v in rrow)
        for lrow, rrow in zip(M.left, M.right)
    )
    return f"k={M.k} [{rows}]"


@dataclass
class InstanceResult:
    verdicts: dict  # n' -> (lex, simple, general)
    problems: list = field(default_factory=list)


def cross_check(M: ExtendedMatrix, n_primes=(2, 3)) -> InstanceResult:
    """Run all three procedures on ``M`` and verify every witness produced."""
    res = InstanceResult({})
    for n_prime in n_primes:
        lex = implies_lex(M, cube(n_prime))
        cov = implies_cube_simple(M, n_prime)
        gen = implies_cube_general(M, n_prime)
        res.verdicts[n_prime] = (lex.holds, cov.holds, gen.holds)
        if not lex.holds == cov.holds == gen.holds:
            res.problems.append(f"n'={n_prime}: lex={lex.holds} cover={cov.holds} general={gen.outcome}")
        if cov.comparisons > comparison_bound(M, n_prime):
            res.problems.append(f"n'={n_prime}: {cov.comparisons} comparisons exceed bound")
        if not cov.holds and not check_algebra_witness(M, n_prime, _as_algebra(M, n_prime)):
            res.problems.append(f"n'={n_prime}: counterexample algebra fails its check")
        if gen.algebra is not None and not check_algebra_witness(M, n_prime, gen.algebra):
            res.problems.append(f"n'={n_prime}: oracle algebra fails its check")
        if lex.case == "saturation" and not replay(M, cube(n_prime), lex):
            res.problems.append(f"n'={n_prime}: saturation log does not replay")
    return res


def _as_algebra(M, n_prime):
    return TwoElementAlgebra((build_counterexample_algebra(M, n_prime),))


def intersection_check(M1: ExtendedMatrix, M2: ExtendedMatrix, n_primes=(2, 3)) -> list[str]:
    problems = []
    M = intersect(M1, M2)
    for n_prime in n_primes:
        joint = implies_cube_simple(M, n_prime).holds
        either = implies_cube_simple(M1, n_prime).holds or implies_cube_simple(M2, n_prime).holds
        if joint != either:
            problems.append(f"n'={n_prime}: intersection={joint} members={either}")
    return problems


def run_corpus(seed: int, count: int, nmax: int = 4, mmax: int = 4, kmax: int = 3) -> tuple[list[str], int]:
    """Cross-validate on ``count`` random matrices; returns report lines and
    the number of disagreements.

    Each matrix is also intersected with its predecessor.
    """
    lines = [f"corpus seed={seed} count={count} nmax={nmax} mmax={mmax} kmax={kmax}"]
    bad = 0
    prev = None
    for idx, M in enumerate(random_corpus(seed, count, nmax, mmax, kmax), start=1):
        res = cross_check(M)
        problems = list(res.problems)
        if prev is not None:
            problems += [f"intersection with #{idx - 1}: {p}" for p in intersection_check(prev, M)]
        flags = " ".join(
            f"n'={n}:{'holds' if v[0] else 'fails'}" for n, v in sorted(res.verdicts.items())
        )
        lines.append(f"#{idx:04d} {compact(M)} {flags} {'ok' if not problems else 'DISAGREE'}")
        for p in problems:
            lines.append(f"  ! {p}")
        bad += bool(problems)
        prev = M
    lines.append(f"summary instances={count} disagreements={bad}")
    return lines, bad
