from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hopfdiff.exactlin import (
    Mat,
    in_span,
    invert,
    kernel,
    rat,
    rat_str,
    row_space_basis,
    solve_affine,
)

F = Fraction


def test_rat_parsing_and_serialization():
    assert rat("3/4") == F(3, 4)
    assert rat("-2") == F(-2)
    assert rat_str(F(1, 2)) == "1/2"
    assert rat_str(F(-5, 3)) == "-5/3"
    assert rat_str(F(7)) == "7"


def test_solve_scalar_division():
    sol = solve_affine(Mat(1, 1, [2]), [F(1)])
    assert sol.particular == [F(1, 2)]
    assert sol.kernel_basis == []


def test_solve_symmetry_case():
    sol = solve_affine(Mat(1, 2, [1, -1]), [F(0)])
    assert sol.particular == [F(0), F(0)]
    assert sol.kernel_basis == [[F(1), F(1)]]


def test_solve_contradictory_rows():
    sol = solve_affine(Mat(2, 1, [1, 1]), [F(0), F(1)])
    assert sol.inconsistent


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_affine(Mat(2, 1, [1, 1]), [F(0)])


def test_kernel_of_identity_is_empty():
    assert kernel(Mat.identity(3)) == []


def test_kernel_of_zero_is_standard_basis():
    basis = kernel(Mat.zero(2, 2))
    assert basis == [[F(1), F(0)], [F(0), F(1)]]


def test_kernel_rank_one():
    # row-reduce [[1,1],[2,2]] by hand: x0 = -x1, free x1 = 1
    basis = kernel(Mat.from_rows([[1, 1], [2, 2]]))
    assert basis == [[F(-1), F(1)]]


def test_invert_identity_and_swap():
    assert invert(Mat.identity(2)) == Mat.identity(2)
    swap = Mat.from_rows([[0, 1], [1, 0]])
    assert invert(swap) == swap


def test_invert_singular_rank_one():
    assert invert(Mat.from_rows([[1, 1], [1, 1]])) is None


def test_invert_requires_square():
    with pytest.raises(ValueError):
        invert(Mat.zero(2, 3))


def test_row_space_and_membership():
    basis = row_space_basis([[F(1), F(1), F(0)], [F(2), F(2), F(0)], [F(0), F(0), F(1)]])
    assert len(basis) == 2
    assert in_span(basis, [F(3), F(3), F(7)])
    assert not in_span(basis, [F(1), F(0), F(0)])


small_rats = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def matrices_with_rhs(draw):
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 4))
    entries = draw(st.lists(small_rats, min_size=rows * cols, max_size=rows * cols))
    rhs = draw(st.lists(small_rats, min_size=rows, max_size=rows))
    return Mat(rows, cols, entries), rhs


@settings(max_examples=120, deadline=None)
@given(matrices_with_rhs())
def test_solution_space_solves_exactly(data):
    a, b = data
    sol = solve_affine(a, b)
    if sol.inconsistent:
        return
    assert a.apply(sol.particular) == [rat(x) for x in b]
    for vec in sol.kernel_basis:
        shifted = [p + v for p, v in zip(sol.particular, vec)]
        assert a.apply(shifted) == [rat(x) for x in b]
        assert a.apply(vec) == [F(0)] * a.rows


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4), st.data())
def test_invert_round_trip(n, data):
    entries = data.draw(st.lists(small_rats, min_size=n * n, max_size=n * n))
    a = Mat(n, n, entries)
    inv = invert(a)
    if inv is None:
        assert kernel(a) != []
    else:
        assert a.mul(inv) == Mat.identity(n)
        assert inv.mul(a) == Mat.identity(n)


@settings(max_examples=50, deadline=None)
@given(matrices_with_rhs())
def test_determinism(data):
    a, b = data
    first = solve_affine(Mat(a.rows, a.cols, list(a.entries)), list(b))
    second = solve_affine(Mat(a.rows, a.cols, list(a.entries)), list(b))
    assert first.particular == second.particular
    assert first.kernel_basis == second.kernel_basis
