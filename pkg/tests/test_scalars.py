"""Field axioms and text round-trips for the Q(i, sqrt2) arithmetic."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from hcdirac.scalars import I, I_SQRT2, ONE, SQRT2, ZERO, Scalar, scalar_arith, scalar_embed


def random_scalar(rng: random.Random) -> Scalar:
    def q():
        return Fraction(rng.randint(-6, 6), rng.randint(1, 5))

    return Scalar(q(), q(), q(), q())


def test_defining_relations():
    assert SQRT2 * SQRT2 == Scalar(2)
    assert I * I == Scalar(-1)
    assert I_SQRT2 * I_SQRT2 == Scalar(-2)
    assert I * SQRT2 == I_SQRT2


def test_difference_of_squares():
    assert (ONE + SQRT2) * (ONE - SQRT2) == Scalar(-1)


def test_embed():
    assert scalar_embed(0) == ZERO
    assert scalar_embed(1) * random_scalar(random.Random(5)) == random_scalar(random.Random(5))
    assert scalar_embed(Fraction(1, 2)) + scalar_embed(Fraction(1, 2)) == ONE


def test_field_axioms_random():
    rng = random.Random(20240817)
    for _ in range(1000):
        x, y, z = (random_scalar(rng) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z


def test_inverse_random():
    rng = random.Random(99)
    count = 0
    while count < 200:
        x = random_scalar(rng)
        if not x:
            continue
        count += 1
        assert x.inverse() * x == ONE
        assert x / x == ONE


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        scalar_arith("inv", ZERO)


def test_conjugation_is_automorphism():
    rng = random.Random(7)
    for _ in range(200):
        x, y = random_scalar(rng), random_scalar(rng)
        assert (x * y).conjugate() == x.conjugate() * y.conjugate()
        assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    assert I.conjugate() == -I
    assert SQRT2.conjugate() == SQRT2


def test_scalar_arith_dispatch():
    assert scalar_arith("add", ONE, ONE) == Scalar(2)
    assert scalar_arith("mul", SQRT2, SQRT2) == Scalar(2)
    assert scalar_arith("neg", ONE) == Scalar(-1)
    with pytest.raises(ValueError):
        scalar_arith("pow", ONE, ONE)


def test_render_parse_roundtrip():
    rng = random.Random(13)
    for _ in range(200):
        x = random_scalar(rng)
        assert Scalar.parse(x.render()) == x
    assert Scalar.parse("1/2 + -3/2*r2 + 0*i + 2*i*r2") == Scalar(
        Fraction(1, 2), Fraction(-3, 2), 0, 2
    )


def test_compact_roundtrip():
    rng = random.Random(14)
    for _ in range(200):
        x = random_scalar(rng)
        assert Scalar.parse_compact(x.compact()) == x
    assert ZERO.compact() == "0"
    assert (ONE + SQRT2).compact() == "1+1*r2"


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        Scalar.parse("1 + 2")
    with pytest.raises(ValueError):
        Scalar.parse_compact("1*i+2*i")


def test_power():
    assert SQRT2**2 == Scalar(2)
    assert (ONE + I) ** 4 == Scalar(-4)
    assert SQRT2 ** (-2) == Scalar(Fraction(1, 2))


def test_hash_consistency():
    assert hash(Scalar(1, 0, 0, 0)) == hash(ONE)
    assert len({ONE, Scalar(1), SQRT2}) == 2
