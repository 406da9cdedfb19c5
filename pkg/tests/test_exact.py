import random
from fractions import Fraction

import pytest

from gkzf.errors import ColumnRankDeficient, RankDeficient
from gkzf.exact import (
    det_int,
    hermite_normal_form,
    identity_rows,
    integer_rank,
    invariant_factors,
    is_primitive_lattice_basis,
    kernel_basis,
    mat_vec,
    maximal_minor_gcd,
    solve_any,
    solve_linear,
    span_contains,
    transpose,
)
from paper_data import GRID33, GRID_CASE1_G, HEXAGON

F = Fraction


def in_lattice(basis, u):
    sol = solve_any(transpose(basis), u)
    return sol is not None and all(x.denominator == 1 for x in sol)


def test_kernel_hexagon():
    ker = kernel_basis(HEXAGON)
    assert len(ker) == 3
    for u in ker:
        assert not any(mat_vec(HEXAGON, u))
    # d2*d5 - d1*d4 lies in the toric ideal, so its vector is in the kernel
    assert in_lattice(ker, (-1, 1, 0, -1, 1, 0))


def test_kernel_identity_trivial():
    assert kernel_basis(identity_rows(4)) == ()


def test_kernel_grid33_contains_all_g():
    ker = kernel_basis(GRID33)
    assert len(ker) == 4
    for g in GRID_CASE1_G:
        assert in_lattice(ker, g)


def test_kernel_declared_rank():
    with pytest.raises(RankDeficient):
        kernel_basis(GRID33, expected_rank=6)  # actual rank is 5
    assert len(kernel_basis(GRID33, expected_rank=5)) == 4


def test_kernel_smith_certificate_random():
    rng = random.Random(7)
    for _ in range(25):
        d, n = rng.randint(1, 4), rng.randint(2, 6)
        m = tuple(
            tuple(rng.randint(-4, 4) for _ in range(n)) for _ in range(d)
        )
        ker = kernel_basis(m)
        assert len(ker) == n - integer_rank(m)
        for u in ker:
            assert not any(mat_vec(m, u))
        assert is_primitive_lattice_basis(ker)
        if ker:
            assert all(f == 1 for f in invariant_factors(ker))


def test_hermite_transform_unimodular():
    rng = random.Random(3)
    for _ in range(20):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        m = tuple(
            tuple(rng.randint(-6, 6) for _ in range(nc)) for _ in range(nr)
        )
        h, u = hermite_normal_form(m)
        assert abs(det_int(u)) == 1
        for i in range(nr):
            assert h[i] == mat_vec(transpose(tuple(zip(*m))), u[i]) or h[i] == tuple(
                sum(u[i][k] * m[k][j] for k in range(nr)) for j in range(nc)
            )


def test_solve_identity():
    b = (F(1, 3), F(2), F(5))
    assert solve_linear(identity_rows(3), b) == b


def test_solve_grid_facet_homogeneous():
    cols = [tuple(row[j] for row in GRID33) for j in (2, 4, 6, 7, 8)]
    m = tuple(zip(*cols))
    assert solve_linear(m, (0,) * 6) == (F(0),) * 5


def test_solve_hexagon_scaled_column():
    a4 = tuple(row[3] for row in HEXAGON)
    m = tuple((x,) for x in a4)
    c = F(1, 3)
    assert solve_linear(m, tuple(c * x for x in a4)) == (c,)
    assert solve_linear(m, (1, 1, 1)) is None


def test_solve_column_rank_deficient():
    with pytest.raises(ColumnRankDeficient):
        solve_linear(((1, 2), (2, 4), (0, 0)), (1, 2, 0))


def test_solve_roundtrip_random():
    rng = random.Random(11)
    for _ in range(30):
        nc = rng.randint(1, 4)
        nr = nc + rng.randint(0, 2)
        while True:
            m = tuple(
                tuple(F(rng.randint(-5, 5)) for _ in range(nc))
                for _ in range(nr)
            )
            cols = tuple(zip(*m))
            if is_full_column_rank(m, nc):
                break
        x = tuple(F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(nc))
        assert solve_linear(m, mat_vec(m, x)) == x


def is_full_column_rank(m, nc):
    from gkzf.exact import rational_rank

    return rational_rank(m) == nc


def test_maximal_minor_gcd():
    assert maximal_minor_gcd(GRID33) == 1
    assert maximal_minor_gcd(identity_rows(3)) == 1
    assert maximal_minor_gcd(((2, 0), (0, 2))) == 4


def test_span_contains():
    cols = [(1, 0, 0, 0, 0, 1), (0, 0, 1, 1, 0, 0)]
    assert span_contains(cols, (2, 0, -1, -1, 0, 2))
    assert not span_contains(cols, (F(1, 2),) * 6)
    assert span_contains([], (0, 0))
    assert not span_contains([], (1, 0))
