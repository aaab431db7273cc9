"""Exact linear algebra tests: elimination, kernels, minimal polynomials."""

import random

import pytest

from hopfcheck.cyclotomic import Cyclotomic, root_of_unity
from hopfcheck.linalg import (
    EchelonBasis,
    Matrix,
    Subspace,
    eigensplit,
    is_diagonalizable,
    kernel,
    matrix_from_json,
    minimal_polynomial,
    poly_eval_matrix,
    poly_gcd,
    poly_is_squarefree,
    rank,
    rref,
    solve,
    vec_eq,
)


def c(v) -> Cyclotomic:
    return Cyclotomic.coerce(v)


def cm(rows) -> Matrix:
    return Matrix([[c(x) for x in r] for r in rows], ncols=len(rows[0]) if rows else 0)


def rand_matrix(rng, nrows, ncols, order=1, span=9):
    from hopfcheck.cyclotomic import phi_degree

    deg = phi_degree(order)
    return Matrix(
        [
            [
                Cyclotomic(order, tuple(rng.randint(-span, span) for _ in range(deg)))
                for _ in range(ncols)
            ]
            for _ in range(nrows)
        ],
        ncols=ncols,
    )


def test_rref_simple():
    rows, pivots = rref(cm([[2, 4], [1, 2]]))
    assert pivots == [0]
    assert vec_eq(rows[0], [c(1), c(2)])


def test_rank_via_product_factorization():
    # A (5x3) @ B (3x5) has rank <= 3, so the kernel has dim >= 2.
    rng = random.Random(11)
    for _ in range(10):
        a = rand_matrix(rng, 5, 3)
        b = rand_matrix(rng, 3, 5)
        m = a @ b
        assert rank(m) <= 3
        ker = kernel(m)
        assert ker.dim >= 2
        for v in ker.basis:
            assert all(not x for x in m.apply(v))


def test_kernel_rank_nullity_random():
    rng = random.Random(23)
    for order in [1, 3]:
        for _ in range(8):
            m = rand_matrix(rng, 4, 6, order=order, span=4)
            ker = kernel(m)
            assert ker.dim + rank(m) == 6


def test_kernel_of_empty_and_zero():
    assert kernel(Matrix([], ncols=0)).dim == 0
    assert kernel(Matrix([], ncols=3)).dim == 3
    assert kernel(Matrix.zeros(2, 4)).dim == 4


def test_solve_consistent_and_inconsistent():
    rng = random.Random(5)
    for _ in range(10):
        m = rand_matrix(rng, 4, 4, order=3, span=3)
        x0 = [Cyclotomic(3, (rng.randint(-3, 3), rng.randint(-3, 3))) for _ in range(4)]
        b = m.apply(x0)
        x = solve(m, b)
        assert x is not None
        assert vec_eq(m.apply(x), b)
    bad = solve(cm([[1, 0], [1, 0]]), [c(1), c(2)])
    assert bad is None


def test_solve_shape_mismatch_raises():
    with pytest.raises(ValueError):
        solve(cm([[1, 0]]), [c(1), c(2)])


def test_minimal_polynomial_basic():
    assert minimal_polynomial(Matrix([], ncols=0)) == [c(1)]
    assert minimal_polynomial(Matrix.zeros(3, 3)) == [c(0), c(1)]
    assert minimal_polynomial(Matrix.identity(4)) == [c(-1), c(1)]
    nil = cm([[0, 1], [0, 0]])
    assert minimal_polynomial(nil) == [c(0), c(0), c(1)]


def test_minimal_polynomial_annihilates_random():
    rng = random.Random(99)
    for _ in range(6):
        m = rand_matrix(rng, 5, 5, span=3)
        poly = minimal_polynomial(m)
        assert poly[-1] == 1
        assert poly_eval_matrix(poly, m).is_zero()


def test_eigensplit_diagonal():
    z = root_of_unity(3)
    m = Matrix(
        [
            [c(1), c(0), c(0)],
            [c(0), c(1), c(0)],
            [c(0), c(0), z],
        ]
    )
    spaces, complete = eigensplit(m, [c(1), z, z * z])
    assert complete
    dims = {(lam == 1, lam == z): s.dim for lam, s in spaces}
    assert dims[(True, False)] == 2
    assert dims[(False, True)] == 1


def test_eigensplit_nilpotent_incomplete():
    nil = cm([[0, 1], [0, 0]])
    spaces, complete = eigensplit(nil, [c(0), c(1), c(-1)])
    assert not complete
    assert len(spaces) == 1 and spaces[0][1].dim == 1


def test_is_diagonalizable():
    assert is_diagonalizable(Matrix.identity(3))
    assert is_diagonalizable(Matrix.zeros(2, 2))
    assert not is_diagonalizable(cm([[0, 1], [0, 0]]))
    assert is_diagonalizable(cm([[0, 1], [1, 0]]))


def test_poly_gcd_and_squarefree():
    # (t-1)^2 (t+2) vs its derivative share the factor (t-1)
    p = [c(2), c(-3), c(0), c(1)]  # t^3 - 3t + 2 = (t-1)^2 (t+2)
    assert not poly_is_squarefree(p)
    q = [c(-1), c(0), c(1)]  # t^2 - 1
    assert poly_is_squarefree(q)
    g = poly_gcd(p, q)
    assert g == [c(-1), c(1)]  # common factor t - 1


def test_echelon_basis_incremental():
    eb = EchelonBasis(3)
    assert eb.add([c(1), c(2), c(0)])
    assert not eb.add([c(2), c(4), c(0)])
    assert eb.add([c(0), c(0), c(5)])
    assert eb.dim == 2
    assert eb.contains([c(3), c(6), c(7)])
    assert not eb.contains([c(0), c(1), c(0)])
    coords = eb.coordinates([c(3), c(6), c(7)])
    assert coords is not None and vec_eq(coords, [c(3), c(7)])


def test_subspace_equality_and_intersection():
    a = Subspace.from_vectors(3, [[c(1), c(0), c(1)], [c(0), c(1), c(0)]])
    b = Subspace.from_vectors(3, [[c(2), c(0), c(2)], [c(0), c(3), c(0)]])
    assert a == b
    w = Subspace.from_vectors(3, [[c(0), c(0), c(1)]])
    inter = a.intersection(w)
    assert inter.dim == 0
    u = Subspace.from_vectors(3, [[c(1), c(0), c(1)]])
    assert a.intersection(u) == u


def test_matrix_json_round_trip():
    z = root_of_unity(3)
    m = Matrix([[z, c(0)], [c(1) / 2, z * z]])
    assert matrix_from_json(m.to_json()) == m


def test_matmul_and_transpose_consistency():
    rng = random.Random(3)
    a = rand_matrix(rng, 3, 4, order=3, span=2)
    b = rand_matrix(rng, 4, 2, order=3, span=2)
    prod = a @ b
    assert prod.transpose() == b.transpose() @ a.transpose()
