import dataclasses
import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mcheck import MatrixError, implies_cube_simple, is_trivial, implies_lex, replay, saturate, simple, validate
from mcheck.matrix import ari, cube, edge, maj, mal, perm

from .strategies import simple_matrices


def brute_saturation(M1, M2, rng=None):
    """Fixpoint by trying every stack of n2 row interpretations, optionally shuffled."""
    choices = [
        (i, f)
        for i in range(M1.n)
        for f in itertools.product(range(1, M2.k + 1), repeat=M1.k)
    ]
    stacks = list(itertools.product(choices, repeat=M2.n))
    cols = set(M2.left_columns())
    changed = True
    while changed:
        changed = False
        if rng is not None:
            rng.shuffle(stacks)
        for stack in stacks:
            grid = [[f[v - 1] for v in M1.left[i]] + [f[M1.right[i][0] - 1]] for i, f in stack]
            columns = [tuple(row[j] for row in grid) for j in range(M1.m + 1)]
            if all(c in cols for c in columns[:-1]) and columns[-1] not in cols:
                cols.add(columns[-1])
                changed = True
    return cols


def test_reflexive_mal():
    assert implies_lex(mal(), mal()).holds


@pytest.mark.parametrize("n", [2, 3])
def test_edge_implies_cube(n):
    v = implies_lex(edge(n), cube(n))
    assert v.holds and v.case == "saturation"
    assert replay(edge(n), cube(n), v)


def test_cube3_does_not_imply_edge3():
    v = implies_lex(cube(3), edge(3))
    assert not v.holds
    assert v.saturation.complete
    assert edge(3).right_column() not in v.saturation.columns
    assert replay(cube(3), edge(3), v)


def test_ari_implies_mal():
    v = implies_lex(ari(), mal())
    assert v.holds and v.derived_columns == [(1, 2)]
    assert replay(ari(), mal(), v)


def test_maj_does_not_imply_mal():
    v = implies_lex(maj(), mal())
    assert not v.holds
    assert (1, 2) not in v.saturation.columns
    assert v.saturation.columns == brute_saturation(maj(), mal())


def test_edge2_mal_single_addition():
    v = implies_lex(edge(2), mal())
    assert v.holds and len(v.saturation.log) <= mal().k ** mal().n - mal().m


def test_saturate_adds_nothing_when_goal_present():
    M = simple([[1, 2, 1], [2, 1, 2]])
    state = saturate(M, M, goal=M.right_column())
    assert state.log == ()
    assert implies_lex(M, M).holds


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("k1,k2", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_cube_arity_equivalence(n, k1, k2):
    assert implies_lex(cube(n, k1), cube(n, k2)).holds


def test_degenerate_first_nullary():
    M1 = validate([[]], [[1]], 1, 1)
    assert implies_lex(M1, mal()).case == "first-matrix-nullary"
    assert implies_lex(M1, M1).holds


def test_degenerate_first_trivial():
    T = simple([[1, 1, 2]])
    empty = validate([[]], [[1]], 1, 1)
    v = implies_lex(T, mal())
    assert v.holds and v.case == "first-matrix-trivial"
    assert not implies_lex(T, empty).holds


def test_degenerate_second_trivial():
    T = simple([[1, 1, 2]])
    v = implies_lex(mal(), T)
    assert not v.holds and v.case == "second-matrix-trivial"
    with pytest.raises(MatrixError):
        replay(mal(), T, v)


def test_rejects_general_matrices():
    with pytest.raises(MatrixError):
        implies_lex(perm(3), mal())


def test_full_saturation_flag():
    early = implies_lex(ari(), cube(3))
    full = implies_lex(ari(), cube(3), full_saturation=True)
    assert early.holds == full.holds
    assert full.saturation.complete
    assert full.saturation.columns == brute_saturation(ari(), cube(3))
    assert replay(ari(), cube(3), full)


def test_saturation_bound():
    M1, M2 = edge(3), cube(3)
    state = saturate(M1, M2)
    assert len(state.log) <= M2.k ** M2.n - M2.m


def test_replay_rejects_tampered_log():
    v = implies_lex(ari(), mal())
    d = v.saturation.log[0]
    bad = dataclasses.replace(d, interpretations=((2, 2),) + d.interpretations[1:])
    tampered = dataclasses.replace(v, saturation=dataclasses.replace(v.saturation, log=(bad,)))
    assert not replay(ari(), mal(), tampered)


def _nontrivial(M):
    return M.m > 0 and not is_trivial(M).trivial


@settings(max_examples=80, deadline=None)
@given(simple_matrices(nmax=3, mmax=3, kmax=2), simple_matrices(nmax=3, mmax=3, kmax=2), st.integers(0, 999))
def test_confluence_against_shuffled_brute_force(M1, M2, seed):
    if not (_nontrivial(M1) and _nontrivial(M2)):
        return
    state = saturate(M1, M2)
    assert state.columns == brute_saturation(M1, M2, random.Random(seed))
    v = implies_lex(M1, M2)
    assert v.holds == (M2.right_column() in state.columns)
    assert replay(M1, M2, v)


def _shuffle(M, rng, rename=True):
    rp, cp, ren = list(range(M.n)), list(range(M.m)), list(range(1, M.k + 1))
    rng.shuffle(rp)
    rng.shuffle(cp)
    if rename:
        rng.shuffle(ren)
    rows = [[ren[M.left[i][j] - 1] for j in cp] + [ren[M.right[i][0] - 1]] for i in rp]
    return simple(rows, M.k)


@settings(max_examples=80, deadline=None)
@given(simple_matrices(nmax=3, mmax=3, kmax=2), simple_matrices(nmax=3, mmax=3, kmax=2), st.randoms(use_true_random=False))
def test_invariance(M1, M2, rng):
    expected = implies_lex(M1, M2).holds
    assert implies_lex(_shuffle(M1, rng), M2).holds == expected
    assert implies_lex(M1, _shuffle(M2, rng)).holds == expected


@settings(max_examples=150, deadline=None)
@given(simple_matrices(nmax=4, mmax=4, kmax=3), st.sampled_from([2, 3]))
def test_agrees_with_row_cover(M, n_prime):
    v = implies_lex(M, cube(n_prime))
    assert v.holds == implies_cube_simple(M, n_prime).holds
    if v.case == "saturation":
        assert replay(M, cube(n_prime), v)
