import random

import pytest
from hypothesis import given, settings, strategies as st

from dvfreduce.errors import BoundsError, FormatError
from dvfreduce.gf2core import (
    Gf2Matrix,
    column_support,
    format_matrix,
    from_rows,
    parse_matrix,
    rank_dense,
)
from oracles import matmul_lists, rank_by_span, rank_gauss_lists
from strategies import WORKED_EXAMPLE, bit_rows, matrices


def test_from_rows_worked_example(worked):
    assert worked.shape == (4, 4)
    assert worked.to_rows() == WORKED_EXAMPLE
    assert worked.nnz == 9


def test_from_rows_empty():
    M = from_rows([])
    assert M.shape == (0, 0)
    assert list(M.entries()) == []


def test_from_rows_zero_matrix():
    M = from_rows([[0, 0], [0, 0]])
    assert M.shape == (2, 2)
    assert list(M.entries()) == []


@pytest.mark.parametrize("rows", [[[1, 0], [1]], [[1, 2]], [[0, -1]]])
def test_from_rows_rejects_bad_input(rows):
    with pytest.raises(FormatError):
        from_rows(rows)


def test_get(worked):
    assert worked.get(0, 0) == 1
    assert worked.get(2, 0) == 0


@pytest.mark.parametrize("i,j", [(4, 0), (0, 4), (-1, 0)])
def test_get_out_of_range(worked, i, j):
    with pytest.raises(BoundsError):
        worked.get(i, j)


@given(matrices(min_rows=1), st.data())
def test_read_after_write(M, data):
    i = data.draw(st.integers(0, M.nrows - 1))
    j = data.draw(st.integers(0, M.ncols - 1))
    bit = data.draw(st.integers(0, 1))
    N = M.set(i, j, bit)
    assert N.get(i, j) == bit
    assert M.set(i, j, 1).get(i, j) == 1
    # untouched entries and the original survive
    assert all(N.get(a, b) == M.get(a, b) for a, b in M.entries() if (a, b) != (i, j))


def test_identity_and_zero_ranks():
    assert rank_dense(Gf2Matrix(0, 0)) == 0
    assert rank_dense(Gf2Matrix(5, 3)) == 0
    for k in range(6):
        assert rank_dense(Gf2Matrix.identity(k)) == k


def test_worked_example_rank(worked):
    # span of the 4 rows has 16 distinct vectors
    assert rank_by_span(WORKED_EXAMPLE) == 4
    assert rank_dense(worked) == 4


def test_column_support(worked):
    assert column_support(worked, 0) == {0, 1}
    assert column_support(worked, 3) == {2}
    assert Gf2Matrix(3, 3).column_support(1) == frozenset()
    with pytest.raises(BoundsError):
        worked.column_support(4)


@given(bit_rows(max_rows=9, max_cols=9))
def test_rank_matches_span_enumeration(rows):
    assert rank_dense(from_rows(rows)) == rank_by_span(rows)


@given(bit_rows(max_rows=12, max_cols=12))
def test_rank_bounded_by_shape(rows):
    M = from_rows(rows)
    assert rank_dense(M) <= min(M.shape)


@settings(max_examples=200)
@given(bit_rows(min_rows=2, max_rows=12, max_cols=12), st.randoms(use_true_random=False))
def test_rank_invariant_under_row_operations(rows, rng):
    M = from_rows(rows)
    r = rank_dense(M)
    perm = rows[:]
    rng.shuffle(perm)
    assert rank_dense(from_rows(perm)) == r
    i, j = rng.sample(range(len(rows)), 2)
    added = [row[:] for row in rows]
    added[i] = [x ^ y for x, y in zip(added[i], added[j])]
    assert rank_dense(from_rows(added)) == r


def test_rank_agrees_with_list_elimination_on_larger_matrices():
    rng = random.Random(5)
    for _ in range(50):
        m, n = rng.randint(1, 60), rng.randint(1, 60)
        rows = [[int(rng.random() < 0.3) for _ in range(n)] for _ in range(m)]
        assert rank_dense(from_rows(rows)) == rank_gauss_lists(rows)


@given(matrices(min_rows=1))
def test_column_support_matches_get(M):
    for j in range(M.ncols):
        assert M.column_support(j) == {i for i in range(M.nrows) if M.get(i, j)}


@given(matrices())
def test_row_and_column_views_agree(M):
    from_cols = {(i, j) for j in range(M.ncols) for i in M.column_support(j)}
    assert from_cols == set(M.entries())
    assert M.transpose().transpose() == M


@given(matrices(), matrices())
def test_matmul_against_lists(A, B):
    if A.ncols != B.nrows:
        with pytest.raises(ValueError):
            A @ B
        return
    C = A @ B
    assert C.shape == (A.nrows, B.ncols)
    assert C.to_rows() == matmul_lists(A.to_rows(), B.to_rows(), B.ncols)


def test_immutable(worked):
    with pytest.raises(AttributeError):
        worked.nrows = 3


class TestTextFormat:
    def test_round_trip(self, worked):
        text = format_matrix(worked)
        assert text == "4 4\n1 1 0 0\n1 1 1 0\n0 0 1 1\n0 1 1 0\n"
        assert parse_matrix(text) == worked

    def test_no_trailing_newline(self):
        assert parse_matrix("1 2\n0 1") == from_rows([[0, 1]])

    def test_empty_shapes(self):
        assert parse_matrix("0 0\n") == Gf2Matrix(0, 0)
        assert parse_matrix("3 0\n\n\n\n") == Gf2Matrix(3, 0)
        assert parse_matrix("0 4\n").shape == (0, 4)

    def test_comments_skipped(self):
        assert parse_matrix("# hello\n1 1\n# mid\n1\n") == from_rows([[1]])

    @pytest.mark.parametrize(
        "text",
        ["", "2\n", "a b\n", "2 2\n1 0\n", "1 2\n1 0 1\n", "1 1\n2\n", "1 1\n1\n0\n"],
    )
    def test_malformed(self, text):
        with pytest.raises(FormatError):
            parse_matrix(text)

    @given(matrices(max_rows=6, max_cols=6))
    def test_round_trip_random(self, M):
        assert parse_matrix(format_matrix(M)) == M
