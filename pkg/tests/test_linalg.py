import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grpder import (
    ExactMatrix,
    LinearSystem,
    NotAField,
    determinant,
    gcd_list,
    integer_solve,
    kernel_basis,
    smith_normal_form,
    solve,
)
from grpder.linalg import rank
from grpder.rings import GF, QQ, ZZ


def test_kernel_of_zero_matrix_is_standard_basis():
    A = ExactMatrix(QQ, [[0, 0], [0, 0]])
    assert kernel_basis(A) == [[1, 0], [0, 1]]


def test_kernel_of_identity_is_empty():
    A = ExactMatrix.identity(QQ, 3)
    assert kernel_basis(A) == []


def test_kernel_rank_one():
    A = ExactMatrix(QQ, [[1, 2], [2, 4]])
    assert kernel_basis(A) == [[Fraction(-2), Fraction(1)]]


def test_kernel_requires_field():
    with pytest.raises(NotAField):
        kernel_basis(ExactMatrix(ZZ, [[1, 2]]))


def test_solve_identity():
    A = ExactMatrix.identity(QQ, 3)
    assert solve(A, [5, -1, 7]) == [5, -1, 7]


def test_solve_underdetermined_zeroes_free_variables():
    assert solve(ExactMatrix(QQ, [[1, 1]]), [2]) == [2, 0]


def test_solve_inconsistent():
    assert solve(ExactMatrix(QQ, [[1], [1]]), [1, 2]) is None


def test_solve_mod_p():
    A = ExactMatrix(GF(5), [[2, 1], [1, 1]])
    x = A.mul_vec([3, 4])
    got = solve(A, x)
    assert A.mul_vec(got) == x


def test_snf_identity():
    snf = smith_normal_form(ExactMatrix.identity(ZZ, 3))
    assert snf.S == ExactMatrix.identity(ZZ, 3)
    assert snf.U == ExactMatrix.identity(ZZ, 3)
    assert snf.V == ExactMatrix.identity(ZZ, 3)


def test_snf_example():
    A = ExactMatrix(ZZ, [[2, 4], [6, 8]])
    snf = smith_normal_form(A)
    assert snf.diagonal == [2, 4]
    assert snf.U.matmul(A).matmul(snf.V) == snf.S


def test_snf_zero_matrix():
    snf = smith_normal_form(ExactMatrix(ZZ, [[0]]))
    assert snf.S.entries == [[0]]


def test_integer_solve_examples():
    assert integer_solve(ExactMatrix(ZZ, [[1]]), [5]) == [5]
    assert integer_solve(ExactMatrix(ZZ, [[2]]), [3]) is None
    A = ExactMatrix(ZZ, [[2, 4], [6, 8]])
    x = integer_solve(A, [2, 6])
    assert x is not None
    assert A.mul_vec(x) == [2, 6]


def test_gcd_list():
    assert gcd_list([4, 6]) == 2
    assert gcd_list([0, 0]) == 0
    assert gcd_list([-3, 9, 12]) == 3
    assert gcd_list([]) == 0


def test_determinant():
    assert determinant(ExactMatrix(ZZ, [[1, 2], [3, 4]])) == -2
    assert determinant(ExactMatrix(ZZ, [[2, 0], [0, 3]])) == 6
    assert determinant(ExactMatrix(ZZ, [[1, 1], [1, 1]])) == 0


def test_kernel_canonical_under_row_shuffles():
    rng = random.Random(7)
    rows = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0], [1, 3, 4, 4]]
    reference = kernel_basis(ExactMatrix(QQ, rows))
    for _ in range(10):
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert kernel_basis(ExactMatrix(QQ, shuffled)) == reference


def test_linear_system_mod2_kernel():
    system = LinearSystem(2, GF(2))
    system.add_row({0: 1, 1: 1})
    assert system.kernel_basis() == [[1, 1]]


small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def int_matrices(draw, max_dim=6):
    m = draw(st.integers(min_value=1, max_value=max_dim))
    n = draw(st.integers(min_value=1, max_value=max_dim))
    entries = draw(
        st.lists(
            st.lists(small_ints, min_size=n, max_size=n), min_size=m, max_size=m
        )
    )
    return entries


@settings(max_examples=60, deadline=None, derandomize=True)
@given(int_matrices())
def test_snf_invariants(entries):
    A = ExactMatrix(ZZ, entries)
    snf = smith_normal_form(A)
    assert snf.U.matmul(A).matmul(snf.V) == snf.S
    assert abs(determinant(snf.U)) == 1
    assert abs(determinant(snf.V)) == 1
    diag = snf.diagonal
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if a == 0:
            assert b == 0
        else:
            assert b % a == 0
    for i in range(snf.S.rows):
        for j in range(snf.S.cols):
            if i != j:
                assert snf.S.entries[i][j] == 0


@settings(max_examples=60, deadline=None, derandomize=True)
@given(int_matrices(), st.integers(min_value=0, max_value=10**6))
def test_solve_and_kernel_consistency(entries, seed):
    rng = random.Random(seed)
    A = ExactMatrix(QQ, entries)
    n = A.cols
    x_true = [rng.randint(-5, 5) for _ in range(n)]
    b = A.mul_vec(x_true)
    x = solve(A, b)
    assert x is not None
    assert A.mul_vec(x) == b
    kernel = kernel_basis(A)
    for vec in kernel:
        assert all(v == 0 for v in A.mul_vec(vec))
    assert rank(A) + len(kernel) == n


@settings(max_examples=60, deadline=None, derandomize=True)
@given(int_matrices(), st.integers(min_value=0, max_value=10**6))
def test_integer_solve_disjunction(entries, seed):
    rng = random.Random(seed)
    A = ExactMatrix(ZZ, entries)
    b = [rng.randint(-9, 9) for _ in range(A.rows)]
    x = integer_solve(A, b)
    if x is not None:
        assert all(isinstance(v, int) for v in x)
        assert A.mul_vec(x) == b
    else:
        rational = solve(ExactMatrix(QQ, entries), b)
        snf = smith_normal_form(A)
        c = snf.U.mul_vec(b)
        diag = snf.diagonal
        broken = any(
            (diag[i] == 0 and c[i] != 0) or (diag[i] != 0 and c[i] % diag[i] != 0)
            for i in range(len(diag))
        ) or any(c[i] != 0 for i in range(len(diag), A.rows))
        assert rational is None or broken


def test_matrix_shape_errors():
    with pytest.raises(ValueError):
        ExactMatrix(ZZ, [])
    with pytest.raises(ValueError):
        ExactMatrix(ZZ, [[1, 2], [3]])
    with pytest.raises(ValueError):
        solve(ExactMatrix(QQ, [[1, 2]]), [1, 2])


def test_particular_solution_requires_augmented():
    system = LinearSystem(2, QQ)
    system.add_row({0: 1})
    with pytest.raises(ValueError):
        system.particular_solution()
    augmented = LinearSystem(2, QQ, augmented=True)
    augmented.add_row({0: 1}, Fraction(1, 2))
    with pytest.raises(ValueError):
        augmented.kernel_basis()
    assert augmented.particular_solution() == [Fraction(1, 2), 0]
