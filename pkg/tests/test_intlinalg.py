from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twistlattice import intlinalg as la
from oracles import determinant, determinantal_divisors

small = st.integers(min_value=-6, max_value=6)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@st.composite
def any_matrix(draw):
    r = draw(st.integers(1, 4))
    c = draw(st.integers(1, 4))
    return draw(matrices(r, c))


@st.composite
def square(draw):
    n = draw(st.integers(1, 4))
    return draw(matrices(n, n))


def test_snf_known_example():
    d, u, v = la.smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert [d[i][i] for i in range(3)] == [2, 6, 12]


@given(any_matrix())
def test_snf_transforms_and_divisibility(a):
    d, u, v = la.smith_normal_form(a)
    assert la.mat_mul(la.mat_mul(u, a), v) == d
    assert abs(la.det(u)) == 1 and abs(la.det(v)) == 1
    diag = [d[i][i] for i in range(min(len(a), len(a[0])))]
    assert all(d[i][j] == 0 for i in range(len(d)) for j in range(len(d[0])) if i != j)
    nz = [x for x in diag if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@given(any_matrix())
def test_snf_matches_determinantal_divisors(a):
    assert la.elementary_divisors(a) == determinantal_divisors(a)


@given(square())
def test_det_matches_sympy(a):
    assert la.det(a) == determinant(a)


@given(any_matrix())
def test_integer_kernel_is_saturated_kernel(a):
    n = len(a[0])
    ker = la.integer_kernel(a)
    assert len(ker) == n - la.rank(a)
    for k in ker:
        assert tuple(la.mat_vec(a, k)) == (0,) * len(a)
    if ker:
        # saturated: the kernel basis extends to a unimodular matrix, so its maximal minors are coprime
        assert determinantal_divisors([list(k) for k in ker])[-1] == 1


@given(any_matrix(), st.lists(small, min_size=4, max_size=4))
def test_solve_integer_round_trip(a, x):
    x = x[: len(a[0])]
    b = la.mat_vec(a, x)
    y = la.solve_integer(a, b)
    assert y is not None and tuple(la.mat_vec(a, y)) == tuple(b)


def test_solve_integer_detects_no_solution():
    assert la.solve_integer([[2, 0], [0, 2]], [1, 0]) is None


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=5))
def test_hnf_is_canonical(vecs):
    h = la.hnf_rows(vecs)
    shuffled = list(reversed(vecs)) + [[x + y for x, y in zip(vecs[0], vecs[-1])]]
    assert la.hnf_rows(shuffled) == h
    assert len(h) == la.rank(vecs)


@given(square())
def test_inverse(a):
    if la.det(a) == 0:
        with pytest.raises(ZeroDivisionError):
            la.inverse(a)
    else:
        inv = la.inverse(a)
        assert la.mat_mul(a, inv) == la.identity(len(a))


def test_primitive_and_content():
    assert la.primitive([4, -6, 2]) == (2, -3, 1)
    assert la.primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    assert la.content([4, -6, 2]) == 2
    with pytest.raises(ValueError):
        la.primitive([0, 0])


def test_rational_nullspace_dimension():
    ns = la.rational_nullspace([[1, 2, 3]], 3)
    assert len(ns) == 2
    for v in ns:
        assert sum(a * b for a, b in zip([1, 2, 3], v)) == 0
