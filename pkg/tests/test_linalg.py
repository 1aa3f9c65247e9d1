"""Exact matrix and echelon-subspace machinery."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hcdirac.linalg import Matrix, Subspace, quotient_dim, quotient_matrix
from hcdirac.scalars import I, ONE, SQRT2, ZERO, Scalar


def rand_matrix(rng, nrows, ncols, density=0.6):
    rows = []
    for _ in range(nrows):
        row = []
        for _ in range(ncols):
            if rng.random() < density:
                row.append(Scalar(Fraction(rng.randint(-4, 4), rng.randint(1, 3))))
            else:
                row.append(ZERO)
        rows.append(row)
    return Matrix(rows)


def test_matrix_basics():
    a = Matrix([[ONE, SQRT2], [ZERO, I]])
    assert a.transpose().rows[0] == (ONE, ZERO)
    assert a.conj_transpose().rows[1] == (SQRT2, -I)
    assert (a - a).is_zero()
    assert Matrix.identity(2).scalar_value() == ONE
    assert Matrix.identity(2).scale(SQRT2).scalar_value() == SQRT2
    assert a.scalar_value() is None
    assert a.trace() == ONE + I


def test_matvec_and_mul_agree():
    rng = random.Random(3)
    a = rand_matrix(rng, 4, 5)
    b = rand_matrix(rng, 5, 3)
    prod = a * b
    for j in range(3):
        assert prod.column(j) == a.matvec(b.column(j))


def test_rank_nullity_random():
    rng = random.Random(8)
    for _ in range(25):
        m = rand_matrix(rng, rng.randint(1, 6), rng.randint(1, 6), density=0.5)
        ker = Subspace.kernel(m)
        im = Subspace.image(m)
        assert ker.dim + im.dim == m.ncols
        for vec in ker.basis:
            assert all(not v for v in m.matvec(vec))


def test_kernel_edge_cases():
    z = Matrix.zeros(3, 3)
    assert Subspace.kernel(z).dim == 3
    assert Subspace.kernel(Matrix.identity(4)).dim == 0


def test_echelon_form_is_reduced():
    rng = random.Random(4)
    vs = [tuple(rand_matrix(rng, 1, 6).rows[0]) for _ in range(5)]
    space = Subspace.from_vectors(vs, 6)
    assert space.pivots == sorted(space.pivots)
    for bvec, p in zip(space.basis, space.pivots):
        assert bvec[p] == ONE
        for other, q in zip(space.basis, space.pivots):
            if q != p:
                assert not other[p]


def test_membership_and_coords():
    v1 = (ONE, ZERO, SQRT2)
    v2 = (ZERO, ONE, I)
    space = Subspace.from_vectors([v1, v2], 3)
    combo = tuple(a + b * SQRT2 for a, b in zip(v1, v2))
    assert space.contains(combo)
    coords = space.coords(combo)
    rebuilt = [ZERO] * 3
    for c, b in zip(coords, space.basis):
        rebuilt = [r + c * x for r, x in zip(rebuilt, b)]
    assert tuple(rebuilt) == combo
    assert not space.contains((ONE, ONE, ZERO))
    with pytest.raises(ValueError):
        space.coords((ONE, ONE, ZERO))


def test_intersection_against_brute_force():
    rng = random.Random(12)
    for _ in range(10):
        a = Subspace.from_vectors(
            [tuple(rand_matrix(rng, 1, 5).rows[0]) for _ in range(2)], 5
        )
        b_vecs = [tuple(rand_matrix(rng, 1, 5).rows[0]) for _ in range(2)]
        # force an overlap
        if a.basis:
            b_vecs.append(a.basis[0])
        b = Subspace.from_vectors(b_vecs, 5)
        inter = a.intersect(b)
        for vec in inter.basis:
            assert a.contains(vec) and b.contains(vec)
        assert inter.dim >= max(0, a.dim + b.dim - 5)
        if a.basis:
            assert inter.contains(a.basis[0]) or not b.contains(a.basis[0])


def test_quotient_dim_and_matrix():
    space = Subspace.full(3)
    sub = Subspace.from_vectors([(ONE, ZERO, ZERO)], 3)
    assert quotient_dim(space, sub) == 2
    with pytest.raises(ValueError):
        quotient_dim(sub, space)
    # a diagonal operator descends with the remaining eigenvalues
    m = Matrix([[ONE, ZERO, ZERO], [ZERO, SQRT2, ZERO], [ZERO, ZERO, SQRT2]])
    q, reps = quotient_matrix(m, space, sub)
    assert q.nrows == 2
    assert q.scalar_value() == SQRT2


def test_invariance_and_restriction():
    m = Matrix([[ONE, ONE], [ZERO, ONE]])
    line = Subspace.from_vectors([(ONE, ZERO)], 2)
    assert line.is_invariant(m)
    assert line.restricted_matrix(m).scalar_value() == ONE
    other = Subspace.from_vectors([(ZERO, ONE)], 2)
    assert not other.is_invariant(m)
