"""Exact arithmetic in the quartic field Q(i, sqrt(2)).

Every constant appearing in the algebra relations and module actions lives
here once the deformation parameters are specialised to rationals: sqrt(2)
enters through the Clifford-weighted reflections, i through the type-B
module actions.  An element is stored as four arbitrary-precision rationals

    a + b*sqrt(2) + c*i + d*i*sqrt(2)

and all operations are exact; there is no floating point anywhere in this
package.
"""

from __future__ import annotations

import re
from fractions import Fraction

RationalLike = "int | Fraction"

_COMPACT_TOKEN = re.compile(r"[+-]?[^+-]+")


class Scalar:
    """An element a + b*sqrt2 + c*i + d*i*sqrt2 with rational a, b, c, d."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0) -> None:
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> Scalar:
        """Internal constructor for components already known to be Fractions."""
        self = object.__new__(cls)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)
        return self

    @classmethod
    def from_rational(cls, q) -> Scalar:
        """Embed a rational as q + 0*sqrt2 + 0*i + 0*i*sqrt2."""
        return cls(Fraction(q))

    @staticmethod
    def _coerce(value) -> "Scalar | None":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(value)
        return None

    # -- ring structure ----------------------------------------------------

    def __add__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not (self.a or self.b or self.c or self.d):
            return other
        if not (other.a or other.b or other.c or other.d):
            return self
        return Scalar._raw(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar._raw(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar._raw(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def __rsub__(self, other) -> Scalar:
        return (-self) + other

    def __mul__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        # Purely rational factors are by far the most common case.
        if not (b1 or c1 or d1):
            if not a1:
                return ZERO
            return Scalar._raw(a1 * other.a, a1 * other.b, a1 * other.c, a1 * other.d)
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        if not (b2 or c2 or d2):
            if not a2:
                return ZERO
            return Scalar._raw(a1 * a2, b1 * a2, c1 * a2, d1 * a2)
        # (sqrt2)^2 = 2, i^2 = -1, (i*sqrt2)^2 = -2.
        return Scalar._raw(
            a1 * a2 + 2 * b1 * b2 - c1 * c2 - 2 * d1 * d2,
            a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        """Exact multiplicative inverse; raises ZeroDivisionError on zero."""
        conj_i = self.conjugate()
        p = self * conj_i  # lands in Q(sqrt2)
        p_bar = Scalar(p.a, -p.b, p.c, -p.d)
        norm = (p * p_bar).a  # rational field norm
        if norm == 0:
            raise ZeroDivisionError("inversion of zero in Q(i, sqrt2)")
        return conj_i * p_bar * Scalar(Fraction(1, 1) / norm)

    def __truediv__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> Scalar:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced * self.inverse()

    def __pow__(self, exponent: int) -> Scalar:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> Scalar:
        """Complex conjugation i -> -i; a field automorphism fixing sqrt2."""
        return Scalar._raw(self.a, self.b, -self.c, -self.d)

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def is_real(self) -> bool:
        return not (self.c or self.d)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.a

    # -- text forms ----------------------------------------------------------

    def render(self) -> str:
        """Canonical four-component form 'a + b*r2 + c*i + d*i*r2'."""
        return f"{self.a} + {self.b}*r2 + {self.c}*i + {self.d}*i*r2"

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Inverse of render()."""
        parts = text.split(" + ")
        if len(parts) != 4:
            raise ValueError(f"malformed scalar {text!r}")
        suffixes = ("", "*r2", "*i", "*i*r2")
        comps = []
        for part, suffix in zip(parts, suffixes):
            if suffix and not part.endswith(suffix):
                raise ValueError(f"malformed scalar component {part!r}")
            comps.append(Fraction(part[: len(part) - len(suffix)] if suffix else part))
        return cls(*comps)

    def compact(self) -> str:
        """Short form with zero components omitted, e.g. '1/2-1*i'."""
        pieces = []
        for value, suffix in ((self.a, ""), (self.b, "*r2"), (self.c, "*i"), (self.d, "*i*r2")):
            if not value:
                continue
            text = f"{value}{suffix}"
            if pieces and not text.startswith("-"):
                pieces.append("+")
            pieces.append(text)
        return "".join(pieces) if pieces else "0"

    @classmethod
    def parse_compact(cls, text: str) -> Scalar:
        """Inverse of compact()."""
        if text == "0":
            return ZERO
        comps = {"": None, "*r2": None, "*i": None, "*i*r2": None}
        tokens = _COMPACT_TOKEN.findall(text)
        if "".join(tokens) != text:
            raise ValueError(f"malformed scalar {text!r}")
        for token in tokens:
            for suffix in ("*i*r2", "*r2", "*i", ""):
                if token.endswith(suffix):
                    if comps[suffix] is not None:
                        raise ValueError(f"repeated component in {text!r}")
                    comps[suffix] = Fraction(token[: len(token) - len(suffix)] if suffix else token)
                    break
        return cls(*(comps[s] or 0 for s in ("", "*r2", "*i", "*i*r2")))

    def __str__(self) -> str:
        return self.compact()

    def __repr__(self) -> str:
        return f"Scalar({self.a}, {self.b}, {self.c}, {self.d})"


ZERO = Scalar(0)
ONE = Scalar(1)
TWO = Scalar(2)
HALF = Scalar(Fraction(1, 2))
SQRT2 = Scalar(0, 1)
HALF_SQRT2 = Scalar(0, Fraction(1, 2))
I = Scalar(0, 0, 1)
I_SQRT2 = Scalar(0, 0, 0, 1)


def scalar_arith(op: str, lhs: Scalar, rhs: Scalar | None = None) -> Scalar:
    """Dispatch form of the field operations (add, mul, neg, inv)."""
    if op == "add":
        return lhs + rhs
    if op == "mul":
        return lhs * rhs
    if op == "neg":
        return -lhs
    if op == "inv":
        return lhs.inverse()
    raise ValueError(f"unknown scalar operation {op!r}")


def scalar_embed(q) -> Scalar:
    """Embed a rational number into the field."""
    return Scalar.from_rational(q)
