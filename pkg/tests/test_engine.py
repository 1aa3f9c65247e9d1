"""Straightening engine: relations, normal forms, associativity, parity."""

from __future__ import annotations

import random

import pytest

from hcdirac.engine import (
    AlgebraParams,
    AlgElem,
    PbwMonomial,
    algebra_for,
    check_pbw_consistency,
    check_relations_in_engine,
    from_string,
    generator,
    linear_combine,
    multiply,
    parity,
    random_element,
    supercommutator,
)
from hcdirac.scalars import HALF, I, ONE, SQRT2, ZERO, Scalar
from hcdirac.weyl import SignedPerm

A2 = AlgebraParams("A", 2, ONE)
A3 = AlgebraParams("A", 3, ONE)
B2 = AlgebraParams("B", 2, ONE, k_short=ONE, N=Scalar(3))
B2_FREE = AlgebraParams("B", 2, ONE, k_short=ONE, N=Scalar(2) + SQRT2)
D2 = AlgebraParams("D", 2, ONE, N=Scalar(2))
D3 = AlgebraParams("D", 3, ONE, N=Scalar(4))


def mono(params, exps, cliff, images):
    return PbwMonomial(tuple(exps), cliff, SignedPerm(tuple(images)))


def test_params_validation():
    with pytest.raises(ValueError):
        AlgebraParams("A", 2, ONE, k_short=ONE)
    with pytest.raises(ValueError):
        AlgebraParams("D", 2, ONE, k_short=ONE)
    with pytest.raises(ValueError):
        AlgebraParams("E", 2, ONE)
    with pytest.raises(TypeError):
        AlgebraParams("A", 2, 1)  # type: ignore[arg-type]


def test_generators():
    x1 = generator(A2, "x", 1)
    assert x1.terms == {mono(A2, (1, 0), 0, (1, 2)): ONE}
    c2 = generator(A2, "c", 2)
    assert c2.terms == {mono(A2, (0, 0), 0b10, (1, 2)): ONE}
    s12 = generator(A2, "w", SignedPerm((2, 1)))
    assert s12.terms == {mono(A2, (0, 0), 0, (2, 1)): ONE}


def test_type_d_rejects_odd_window():
    with pytest.raises(ValueError):
        generator(D2, "w", SignedPerm((1, -2)))
    generator(D2, "w", SignedPerm((-1, -2)))  # even sign count is fine


def test_clifford_square():
    c1 = generator(A3, "c", 1)
    assert multiply(A3, c1, c1) == -algebra_for(A3).one()


def test_simple_past_x_example():
    # s_12 x_1 = x_2 s_12 - k + k c_1 c_2
    alg = algebra_for(A3)
    s12 = alg.w(SignedPerm((2, 1, 3)))
    got = multiply(A3, s12, alg.x(1))
    expected = (
        multiply(A3, alg.x(2), s12)
        - alg.one()
        + multiply(A3, alg.c(1), alg.c(2))
    )
    assert got == expected


def test_x_noncommutativity_type_b():
    # x_2 x_1 = x_1 x_2 + N c_1 c_2
    alg = algebra_for(B2)
    got = multiply(B2, alg.x(2), alg.x(1))
    expected = multiply(B2, alg.x(1), alg.x(2)) + multiply(B2, alg.c(1), alg.c(2)).scale(
        B2.N
    )
    assert got == expected


def test_short_reflection_past_x():
    # s_n x_n = -x_n s_n - sqrt2 k_s
    alg = algebra_for(B2)
    sn = alg.w(SignedPerm((1, -2)))
    got = multiply(B2, sn, alg.x(2))
    expected = -multiply(B2, alg.x(2), sn) - alg.one().scale(SQRT2 * B2.k_short)
    assert got == expected


def test_linear_combine():
    a = random_element(A2, random.Random(3))
    assert linear_combine([(ONE, a), (-ONE, a)]).is_zero()
    assert linear_combine([(ZERO, a)]).is_zero()
    alg = algebra_for(A2)
    elem = linear_combine([(SQRT2, alg.c(1)), (SQRT2, alg.c(2))])
    assert elem == alg.c(1).scale(SQRT2) + alg.c(2).scale(SQRT2)
    with pytest.raises(ValueError):
        linear_combine([])


def test_parity_classes():
    alg = algebra_for(A2)
    assert parity(alg.c(1)) == "odd"
    assert parity(multiply(A2, alg.x(1), alg.c(1))) == "odd"
    assert parity(alg.one()) == "even"
    assert parity(alg.c(1) + alg.one()) == "mixed"
    assert parity(alg.zero()) == "even"


def test_parity_multiplicative():
    rng = random.Random(11)
    alg = algebra_for(B2)
    for _ in range(60):
        a = random_element(B2, rng, max_deg=1, max_terms=1)
        b = random_element(B2, rng, max_deg=1, max_terms=1)
        pa, pb = parity(a), parity(b)
        prod = multiply(B2, a, b)
        if prod.is_zero():
            continue
        expect = "even" if pa == pb else "odd"
        assert parity(prod) == expect


def test_supercommutator_examples():
    alg = algebra_for(B2)
    assert supercommutator(B2, alg.c(1), alg.c(2)).is_zero()
    assert supercommutator(B2, alg.x(1), alg.x(2)) == multiply(
        B2, alg.c(2), alg.c(1)
    ).scale(B2.N)
    algA = algebra_for(A2)
    assert supercommutator(A2, algA.x(1), algA.x(2)).is_zero()
    with pytest.raises(ValueError):
        supercommutator(A2, algA.c(1) + algA.one(), algA.c(2))


@pytest.mark.parametrize("params", [A2, A3, B2, B2_FREE, D2, D3])
def test_relation_closure(params):
    report = check_relations_in_engine(params)
    assert report["status"] == "pass", report["failures"]


def test_identity_is_neutral():
    rng = random.Random(5)
    alg = algebra_for(B2)
    one = alg.one()
    for _ in range(20):
        a = random_element(B2, rng)
        assert multiply(B2, one, a) == a
        assert multiply(B2, a, one) == a


def test_group_algebra_embedding():
    rng = random.Random(17)
    from hcdirac.engine import random_group_element

    for params in (A3, B2):
        alg = algebra_for(params)
        for _ in range(200):
            u = random_group_element(params, rng)
            v = random_group_element(params, rng)
            assert multiply(params, alg.w(u), alg.w(v)) == alg.w(u * v)


def test_omega_h_supercentral():
    from hcdirac.dirac import casimirs

    for params in (A2, B2):
        alg = algebra_for(params)
        omega_h, _ = casimirs(params)
        gens = [alg.x(i) for i in range(1, params.n + 1)]
        gens += [alg.c(i) for i in range(1, params.n + 1)]
        gens += [alg.w(s) for s in alg.ctx.simple_reflections]
        for g in gens:
            assert supercommutator(params, omega_h, g).is_zero()


@pytest.mark.parametrize("params", [A2, B2, D2])
def test_pbw_consistency_smoke(params):
    report = check_pbw_consistency(params, trials=25, max_deg=2, seed=42)
    assert report["status"] == "pass", report["failures"]


def test_pbw_consistency_zero_element_trivial():
    zero = algebra_for(A2).zero()
    a = random_element(A2, random.Random(0))
    assert multiply(A2, multiply(A2, zero, a), a).is_zero()


def test_type_d_products_stay_in_subalgebra():
    rng = random.Random(23)
    for _ in range(40):
        a = random_element(D3, rng)
        b = random_element(D3, rng)
        prod = multiply(D3, a, b)
        assert all(m.w.neg_count() % 2 == 0 for m in prod.terms)


def test_serialization_roundtrip():
    rng = random.Random(31)
    for params in (A3, B2):
        for _ in range(40):
            a = random_element(params, rng)
            assert from_string(params, a.to_string()) == a
    assert from_string(A2, "0").is_zero()
    alg = algebra_for(A2)
    elem = multiply(A2, alg.x(1), alg.x(1)) + alg.c(2).scale(SQRT2)
    assert elem.to_string() == "(1*r2)*c2*[1,2] + (1)*x1^2*[1,2]"
    assert from_string(A2, elem.to_string()) == elem


def test_serialization_rejects_garbage():
    with pytest.raises(ValueError):
        from_string(A2, "(1)*y1*[1,2]")
    with pytest.raises(ValueError):
        from_string(A2, "x1")


def test_params_mismatch_raises():
    a = algebra_for(A2).one()
    b = algebra_for(A3).one()
    with pytest.raises(ValueError):
        multiply(A2, a, b)
