import random
from fractions import Fraction

import pytest

from shodvar.linalg import (
    QMat,
    block_diag,
    from_columns,
    hstack,
    minimal_polynomial,
    poly_divmod,
    poly_eval_mat,
    poly_gcd,
    poly_mul,
    vstack,
)

F = Fraction


def M(rows):
    return QMat.from_rows([[F(x) for x in r] for r in rows])


class TestBasics:
    def test_identity_matmul(self):
        a = M([[1, 2], [3, 4]])
        assert QMat.identity(2) @ a == a
        assert a @ QMat.identity(2) == a

    def test_zero_dims(self):
        z = QMat.zeros(0, 3)
        a = M([[1, 2, 3]])
        assert (z @ a.transpose()).shape == (0, 1)
        assert z.rank() == 0
        assert z.nullspace().shape == (3, 3)

    def test_matmul_values(self):
        a = M([[1, 2], [3, 4]])
        b = M([[0, 1], [1, 0]])
        assert a @ b == M([[2, 1], [4, 3]])

    def test_transpose(self):
        a = M([[1, 2, 3], [4, 5, 6]])
        assert a.transpose().shape == (3, 2)
        assert a.transpose().transpose() == a

    def test_hash_eq(self):
        assert hash(M([[1]])) == hash(M([[1]]))
        assert M([[1]]) != M([[2]])


class TestRref:
    def test_rank_of_singular(self):
        a = M([[1, 2], [2, 4]])
        assert a.rank() == 1

    def test_rref_pivots(self):
        a = M([[0, 1, 2], [0, 0, 0], [0, 2, 4]])
        red, pivots = a.rref()
        assert pivots == (1,)
        assert red.rows[0] == (F(0), F(1), F(2))

    def test_nullspace_dimension(self):
        a = M([[1, 1, 0], [0, 0, 1]])
        ns = a.nullspace()
        assert ns.shape == (3, 1)
        assert (a @ ns).is_zero()

    def test_nullspace_of_invertible_is_empty(self):
        a = M([[2, 1], [1, 1]])
        assert a.nullspace().ncols == 0


class TestSolveInverse:
    def test_solve_exact(self):
        a = M([[2, 1], [1, 3]])
        rhs = from_columns([[F(1), F(0)]])
        x = a.solve(rhs)
        assert x is not None and a @ x == rhs

    def test_solve_inconsistent(self):
        a = M([[1, 1], [1, 1]])
        rhs = from_columns([[F(1), F(2)]])
        assert a.solve(rhs) is None

    def test_solve_underdetermined_returns_some_solution(self):
        a = M([[1, 1]])
        rhs = from_columns([[F(3)]])
        x = a.solve(rhs)
        assert x is not None and a @ x == rhs

    def test_inverse(self):
        a = M([[1, 2], [3, 5]])
        assert a.inverse() @ a == QMat.identity(2)
        assert a.is_invertible()
        assert not M([[1, 2], [2, 4]]).is_invertible()

    def test_seeded_roundtrip(self):
        rng = random.Random(7)
        for n in (1, 2, 3, 4):
            rows = [[F(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
            a = QMat.from_rows(rows)
            rhs = from_columns([[F(rng.randint(-3, 3)) for _ in range(n)]])
            x = a.solve(rhs)
            if x is not None:
                assert a @ x == rhs


class TestStacking:
    def test_hstack_vstack(self):
        a = M([[1], [2]])
        b = M([[3], [4]])
        assert hstack([a, b]) == M([[1, 3], [2, 4]])
        assert vstack([a, b]) == M([[1], [2], [3], [4]])

    def test_block_diag(self):
        d = block_diag([M([[1]]), M([[2, 0], [0, 3]])])
        assert d == M([[1, 0, 0], [0, 2, 0], [0, 0, 3]])

    def test_block_diag_empty_parts(self):
        d = block_diag([QMat.zeros(0, 0), M([[5]])])
        assert d == M([[5]])


class TestPoly:
    def test_divmod(self):
        # (x^2 - 1) = (x - 1)(x + 1)
        q, r = poly_divmod([F(-1), F(0), F(1)], [F(-1), F(1)])
        assert q == [F(1), F(1)] and r == []

    def test_gcd_monic(self):
        g = poly_gcd([F(-1), F(0), F(1)], [F(1), F(1)])
        assert g == [F(1), F(1)]

    def test_mul(self):
        assert poly_mul([F(1), F(1)], [F(-1), F(1)]) == [F(-1), F(0), F(1)]

    def test_eval_mat(self):
        a = M([[0, 1], [0, 0]])
        p = poly_eval_mat([F(0), F(0), F(1)], a)  # a^2
        assert p.is_zero()


class TestMinimalPolynomial:
    def test_identity(self):
        # x - 1
        assert minimal_polynomial(QMat.identity(3)) == [F(-1), F(1)]

    def test_nilpotent(self):
        a = M([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        assert minimal_polynomial(a) == [F(0), F(0), F(0), F(1)]

    def test_idempotent(self):
        a = M([[1, 0], [0, 0]])
        # x^2 - x
        assert minimal_polynomial(a) == [F(0), F(-1), F(1)]

    def test_companion(self):
        # companion of x^2 - x - 1
        a = M([[0, 1], [1, 1]])
        assert minimal_polynomial(a) == [F(-1), F(-1), F(1)]

    def test_annihilates(self):
        rng = random.Random(11)
        for _ in range(5):
            n = rng.randint(1, 4)
            a = QMat.from_rows(
                [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
            )
            mp = minimal_polynomial(a)
            assert poly_eval_mat(mp, a).is_zero()
            assert mp[-1] == 1


def test_min_poly_zero_matrix():
    assert minimal_polynomial(QMat.zeros(2, 2)) == [F(0), F(1)]


def test_min_poly_degenerate():
    assert minimal_polynomial(QMat.zeros(0, 0)) == [F(1)]
