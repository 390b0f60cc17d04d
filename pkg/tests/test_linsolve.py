import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ellsigma.exactnum import Rational
from ellsigma.formulas.derive import derive_rhs
from ellsigma.formulas.golden import WP_TABLE
from ellsigma.gradedpoly import parse_poly
from ellsigma.linsolve import (
    InconsistentSystem, RatMatrix, UnderdeterminedSystem, rank, solve_unique,
)

from oracles import dense_solve

entries = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


def test_identity():
    b = [Rational(3), Rational(-1, 2), Rational(7, 5)]
    sol = solve_unique(RatMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), b)
    assert sol.values == b
    assert sol.rank == 3 and sol.unique


def test_singular_consistent():
    A = RatMatrix.from_dense([[1, 2], [2, 4]])
    with pytest.raises(UnderdeterminedSystem) as err:
        solve_unique(A, [3, 6])
    assert err.value.nullity == 1
    assert err.value.free == [1]


def test_singular_allow_free():
    sol = solve_unique(RatMatrix.from_dense([[1, 2], [2, 4]]), [3, 6], allow_free=True)
    assert sol.nullity == 1
    assert sol.values == [3, 0]


def test_inconsistent_witness():
    A = RatMatrix.from_dense([[1, 1], [2, 2], [0, 1]])
    with pytest.raises(InconsistentSystem) as err:
        solve_unique(A, [1, 3, 0])
    assert err.value.row_index == 1
    assert err.value.residual == 1


def test_overdetermined_consistent():
    A = RatMatrix.from_dense([[1, 1], [1, -1], [2, 0]])
    sol = solve_unique(A, [3, 1, 4])
    assert sol.values == [2, 1]
    assert sol.rows_used == 3


def test_rhs_length_checked():
    with pytest.raises(ValueError):
        solve_unique(RatMatrix.from_dense([[1]]), [1, 2])


def test_index_bounds():
    with pytest.raises(IndexError):
        RatMatrix(2, 2)[2, 0] = 1


def test_n2_derivation_coefficients():
    # a1 wp'(u) + a2 wp'(v) + mu1 (b1 wp(u) + b2 wp(v)) + c1 mu1^3 + c2 mu1 mu2 + c3 mu3
    got = derive_rhs(2).wp_form()
    want = parse_poly("1/2*dwp_u + 1/2*dwp_v + 1/2*mu1*wp_u - 1/2*mu1*wp_v", WP_TABLE)
    assert got == want
    for c in ("mu1^3", "mu1*mu2", "mu3"):
        mono = parse_poly(c, WP_TABLE)
        assert next(iter(mono.terms)) not in got.terms


@settings(max_examples=60)
@given(matrices(5, 4), st.lists(entries, min_size=4, max_size=4))
def test_agrees_with_dense_oracle(dense, x0):
    b = [sum(a * x for a, x in zip(row, x0)) for row in dense]
    A = RatMatrix.from_dense(dense)
    want, r = dense_solve(dense, b)
    assert rank(A) == r
    sol = solve_unique(A, b, allow_free=True)
    assert sol.rank == r
    assert A.matvec(sol.values) == b
    if r == 4:
        assert sol.values == want


@settings(max_examples=60)
@given(matrices(4, 4), st.lists(entries, min_size=4, max_size=4), st.randoms(use_true_random=False))
def test_row_order_invariance(dense, b, rng):
    A = RatMatrix.from_dense(dense)
    perm = list(range(4))
    rng.shuffle(perm)
    B = A.permuted_rows(perm)
    pb = [b[p] for p in perm]
    try:
        x = solve_unique(A, b).values
    except (InconsistentSystem, UnderdeterminedSystem) as e:
        with pytest.raises(type(e)):
            solve_unique(B, pb)
        return
    assert solve_unique(B, pb).values == x


@settings(max_examples=40)
@given(matrices(3, 5))
def test_nullity_reported(dense):
    A = RatMatrix.from_dense(dense)
    b = [0, 0, 0]
    _, r = dense_solve(dense, b)
    with pytest.raises(UnderdeterminedSystem) as err:
        solve_unique(A, b)
    assert err.value.nullity == 5 - r


def test_rational_entries():
    A = RatMatrix.from_dense([[Rational(1, 3), Rational(2, 7)], [Rational(-5, 2), 1]])
    b = [Rational(1), Rational(2)]
    x = solve_unique(A, b).values
    want, _ = dense_solve([[Fraction(1, 3), Fraction(2, 7)], [Fraction(-5, 2), 1]], [1, 2])
    assert [Fraction(int(v.numerator), int(v.denominator)) for v in x] == want


def test_sparse_rows():
    rng = random.Random(7)
    n = 60
    rows = [{i: rng.randint(1, 5), (i + 1) % n: rng.randint(-3, 3)} for i in range(n)]
    A = RatMatrix.from_rows(rows, n)
    x0 = [Rational(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
    b = A.matvec(x0)
    assert solve_unique(A, b).values == x0
