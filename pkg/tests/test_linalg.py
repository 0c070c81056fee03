import random

import sympy
from hypothesis import given, settings, strategies as st

from semiform import linalg


def dense_to_sparse(rows):
    return [{j: x for j, x in enumerate(r) if x} for r in rows]


def sparse_to_dense(vecs, ncols):
    return [[v.get(j, 0) for j in range(ncols)] for v in vecs]


matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=120, deadline=None)
@given(matrices)
def test_rank_and_kernel_match_sympy(rows):
    ncols = len(rows[0])
    M = sympy.Matrix(rows)
    assert linalg.rank(dense_to_sparse(rows)) == M.rank()
    ker = linalg.kernel(dense_to_sparse(rows), ncols)
    assert len(ker) == ncols - M.rank()
    for v in ker:
        assert M * sympy.Matrix([v.get(j, 0) for j in range(ncols)]) == sympy.zeros(len(rows), 1)
    if ker:
        assert sympy.Matrix(sparse_to_dense(ker, ncols)).rank() == len(ker)


@settings(max_examples=60, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_kernel_normal_form_is_order_independent(rows, rnd):
    ncols = len(rows[0])
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    scaled = [[2 * x for x in r] for r in shuffled]
    assert linalg.kernel(dense_to_sparse(rows), ncols) == linalg.kernel(dense_to_sparse(scaled), ncols)


def test_kernel_vectors_are_primitive_with_positive_lead():
    rng = random.Random(5)
    for _ in range(50):
        rows = [[rng.randint(-4, 4) for _ in range(6)] for _ in range(3)]
        for v in linalg.kernel(dense_to_sparse(rows), 6):
            assert v[min(v)] > 0
            assert sympy.gcd_list(list(v.values())) == 1


def test_kernel_matches_sympy_rref():
    rows = [[2, 2, 0], [0, 1, -1]]
    ns = sympy.Matrix(rows).nullspace()
    ker = linalg.kernel(dense_to_sparse(rows), 3)
    assert len(ker) == len(ns) == 1
    assert ker[0] == {0: 1, 1: -1, 2: -1}


def test_fractional_rows_are_cleared():
    from fractions import Fraction
    assert linalg.integer_vector({0: Fraction(1, 2), 2: Fraction(-1, 3)}) == {0: 3, 2: -2}


def test_echelon_membership():
    ech = linalg.Echelon().extend([{0: 1, 1: 1}, {1: 2, 2: 2}])
    assert ech.rank == 2
    assert ech.contains({0: 1, 1: 3, 2: 2})
    assert not ech.contains({2: 1})


def test_empty_inputs():
    assert linalg.kernel([], 3) == [{0: 1}, {1: 1}, {2: 1}]
    assert linalg.kernel([{}], 0) == []
    assert linalg.rank([]) == 0
