"""PBW normal-form engine for the Hecke-Clifford superalgebras of types A, B, D.

Elements are sparse linear combinations of basis words

    x_1^{m_1} ... x_n^{m_n} c_1^{e_1} ... c_n^{e_n} w

with scalar coefficients in Q(i, sqrt2).  The only rewriting primitive is
left multiplication by a single generator on a basis word; general products
iterate it right-to-left over the generator string of the left factor.

Straightening strategy.  A group element is pushed past the x-block one
simple reflection at a time (using a reduced word), and each crossing of a
simple reflection over a single x-generator produces a main term of the same
x-degree plus correction terms of strictly smaller x-degree.  Clifford
generators cross the x-block with a sign only, and type-B x-generators cross
each other at the cost of an N-weighted Clifford correction, again of smaller
x-degree.  The measure (x-degree, then remaining disorder) strictly
decreases, so the rewriting terminates; confluence is not assumed but tested
through associativity (check_pbw_consistency).

Type D has no standalone engine: its elements live inside the type-B engine
with the short-root parameter frozen at zero, and only group elements with an
even number of sign flips are accepted as input.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .scalars import HALF, I, I_SQRT2, ONE, SQRT2, TWO, ZERO, Scalar
from .weyl import Root, RootSystemCtx, SignedPerm, reflection_perm


# ---------------------------------------------------------------------------
# Clifford / signed-permutation sign bookkeeping (shared with the Sergeev
# machinery in centers.py).


def cliff_insert(i: int, mask: int) -> tuple[int, int]:
    """Left-multiply c_i onto the sorted Clifford word c^mask.

    Returns (sign, new_mask); uses c_i c_j = -c_j c_i and c_i^2 = -1.
    """
    below = (mask & ((1 << (i - 1)) - 1)).bit_count()
    sign = -1 if below & 1 else 1
    bit = 1 << (i - 1)
    if mask & bit:
        return -sign, mask & ~bit
    return sign, mask | bit


def cliff_mul(mask1: int, mask2: int) -> tuple[int, int]:
    """Product c^mask1 * c^mask2 as (sign, mask)."""
    sign = 1
    mask = mask2
    for i in range(mask1.bit_length(), 0, -1):
        if mask1 & (1 << (i - 1)):
            s, mask = cliff_insert(i, mask)
            sign *= s
    return sign, mask


def perm_on_cliff(w: SignedPerm, mask: int) -> tuple[int, int]:
    """Push w left past c^mask: w c^mask = sign * c^new_mask * w.

    Uses w c_i = c_{w(i)} w, with c_{-j} read as -c_j.
    """
    sign = 1
    images = []
    for i in range(1, mask.bit_length() + 1):
        if mask & (1 << (i - 1)):
            v = w.image(i)
            if v < 0:
                sign = -sign
                v = -v
            images.append(v)
    # Sort the relabelled word back into ascending order.
    for a in range(len(images)):
        for b in range(a + 1, len(images)):
            if images[a] > images[b]:
                sign = -sign
    new_mask = 0
    for v in images:
        new_mask |= 1 << (v - 1)
    return sign, new_mask


# ---------------------------------------------------------------------------
# Parameters and element containers.


@dataclass(frozen=True)
class AlgebraParams:
    """Specialised parameters of one Hecke-Clifford algebra.

    Type A uses the single coupling k_long; types B and D add the
    x-noncommutativity constant N, and type B a short-root coupling.
    Type D is realised inside the ambient type-B engine with k_short = 0.
    """

    type: str
    n: int
    k_long: Scalar
    k_short: Scalar = ZERO
    N: Scalar = ZERO

    def __post_init__(self):
        if self.type not in ("A", "B", "D"):
            raise ValueError(f"unknown algebra type {self.type!r}")
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        for name in ("k_long", "k_short", "N"):
            if not isinstance(getattr(self, name), Scalar):
                raise TypeError(f"{name} must be a Scalar")
        if self.type == "A" and (self.k_short or self.N):
            raise ValueError("type A admits only the single parameter k_long")
        if self.type == "D" and self.k_short:
            raise ValueError("type D forces k_short = 0")

    def k_for(self, root: Root) -> Scalar:
        return self.k_short if root.kind == "short" else self.k_long


class PbwMonomial(NamedTuple):
    """One basis word x^exps c^cliff w (cliff is a bitmask over 1..n)."""

    exps: tuple[int, ...]
    cliff: int
    w: SignedPerm

    def x_degree(self) -> int:
        return sum(self.exps)

    def parity(self) -> int:
        return self.cliff.bit_count() & 1

    def sort_key(self):
        return (self.exps, self.cliff, self.w.images)

    def render(self, coef: Scalar) -> str:
        parts = [f"({coef.compact()})"]
        for i, m in enumerate(self.exps, start=1):
            if m == 1:
                parts.append(f"x{i}")
            elif m > 1:
                parts.append(f"x{i}^{m}")
        for i in range(1, len(self.exps) + 1):
            if self.cliff & (1 << (i - 1)):
                parts.append(f"c{i}")
        parts.append(str(self.w))
        return "*".join(parts)


Terms = dict[PbwMonomial, Scalar]


def _add_term(terms: Terms, mono: PbwMonomial, coef: Scalar) -> None:
    new = terms.get(mono, ZERO) + coef
    if new:
        terms[mono] = new
    else:
        terms.pop(mono, None)


class AlgElem:
    """A finite Scalar-linear combination of PBW basis words."""

    __slots__ = ("params", "terms")

    def __init__(self, params: AlgebraParams, terms: Terms | None = None):
        self.params = params
        self.terms: Terms = {m: c for m, c in (terms or {}).items() if c}

    def is_zero(self) -> bool:
        return not self.terms

    def x_degree(self) -> int:
        return max((m.x_degree() for m in self.terms), default=0)

    def is_seg(self) -> bool:
        """True when supported on x-degree-zero words (the Seg(W) part)."""
        return all(m.x_degree() == 0 for m in self.terms)

    def sorted_terms(self) -> list[tuple[PbwMonomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def __add__(self, other: AlgElem) -> AlgElem:
        if self.params != other.params:
            raise ValueError("params mismatch")
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            _add_term(out, mono, coef)
        return AlgElem(self.params, out)

    def __sub__(self, other: AlgElem) -> AlgElem:
        return self + (-other)

    def __neg__(self) -> AlgElem:
        return AlgElem(self.params, {m: -c for m, c in self.terms.items()})

    def scale(self, scalar: Scalar) -> AlgElem:
        if not scalar:
            return AlgElem(self.params)
        return AlgElem(self.params, {m: c * scalar for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            return multiply(self.params, self, other)
        coerced = Scalar._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.scale(coerced)

    def __rmul__(self, other):
        coerced = Scalar._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.scale(coerced)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    def __hash__(self):
        return hash((self.params, frozenset(self.terms.items())))

    def to_string(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(mono.render(coef) for mono, coef in self.sorted_terms())

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"<AlgElem {self.to_string()}>"


def from_string(params: AlgebraParams, text: str) -> AlgElem:
    """Parse the deterministic text form produced by AlgElem.to_string()."""
    if text == "0":
        return AlgElem(params)
    terms: Terms = {}
    for piece in text.split(" + "):
        if not piece.startswith("("):
            raise ValueError(f"malformed monomial {piece!r}")
        close = piece.index(")")
        coef = Scalar.parse_compact(piece[1:close])
        exps = [0] * params.n
        cliff = 0
        w = None
        rest = piece[close + 1 :]
        if not rest.startswith("*"):
            raise ValueError(f"malformed monomial {piece!r}")
        for token in rest[1:].split("*"):
            if token.startswith("["):
                w = SignedPerm.parse(token)
            elif token.startswith("x"):
                base, _, power = token.partition("^")
                exps[int(base[1:]) - 1] += int(power) if power else 1
            elif token.startswith("c"):
                cliff |= 1 << (int(token[1:]) - 1)
            else:
                raise ValueError(f"malformed factor {token!r}")
        if w is None:
            raise ValueError(f"missing group factor in {piece!r}")
        _add_term(terms, PbwMonomial(tuple(exps), cliff, w), coef)
    return AlgElem(params, terms)


# ---------------------------------------------------------------------------
# The straightening engine proper.


class Algebra:
    """Normal-form multiplication engine for one parameter set.

    Immutable after construction apart from internal memo tables; all public
    operations are pure, so one instance is safe to share between threads.
    """

    def __init__(self, params: AlgebraParams):
        self.params = params
        # The ambient group whose simple reflections drive the rewriting:
        # type D elements are straightened inside W(B_n).
        self.push_ctx = RootSystemCtx("A" if params.type == "A" else "B", params.n)
        # The group of the algebra itself (used for membership and roots).
        self.ctx = RootSystemCtx(params.type, params.n)
        self.simples = self.push_ctx.simple_reflections
        self._simple_cache: dict[tuple[int, PbwMonomial], tuple] = {}
        self._x_cache: dict[tuple[int, PbwMonomial], tuple] = {}
        self._mono_cache: dict[tuple[PbwMonomial, PbwMonomial], tuple] = {}
        self._id = SignedPerm.identity(params.n)
        self._zero_exps = (0,) * params.n

    # -- element constructors ------------------------------------------------

    def zero(self) -> AlgElem:
        return AlgElem(self.params)

    def one(self) -> AlgElem:
        return AlgElem(self.params, {PbwMonomial(self._zero_exps, 0, self._id): ONE})

    def x(self, i: int) -> AlgElem:
        self._check_index(i)
        exps = list(self._zero_exps)
        exps[i - 1] = 1
        return AlgElem(self.params, {PbwMonomial(tuple(exps), 0, self._id): ONE})

    def c(self, i: int) -> AlgElem:
        self._check_index(i)
        return AlgElem(self.params, {PbwMonomial(self._zero_exps, 1 << (i - 1), self._id): ONE})

    def w(self, perm: SignedPerm) -> AlgElem:
        if perm.n != self.params.n:
            raise ValueError("rank mismatch")
        if not self.ctx.is_member(perm):
            raise ValueError(f"{perm} is not an element of W({self.params.type}_{self.params.n})")
        return AlgElem(self.params, {PbwMonomial(self._zero_exps, 0, perm): ONE})

    def scalar(self, value: Scalar) -> AlgElem:
        return self.one().scale(value)

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.params.n:
            raise ValueError(f"index {i} out of range 1..{self.params.n}")

    # -- single-generator left multiplication on basis words ------------------

    def _lmul_c_mono(self, i: int, mono: PbwMonomial) -> tuple[int, PbwMonomial]:
        sign = -1 if mono.exps[i - 1] & 1 else 1
        s2, cliff = cliff_insert(i, mono.cliff)
        return sign * s2, PbwMonomial(mono.exps, cliff, mono.w)

    def _lmul_c(self, i: int, terms: Terms) -> Terms:
        out: Terms = {}
        for mono, coef in terms.items():
            sign, mono2 = self._lmul_c_mono(i, mono)
            _add_term(out, mono2, coef if sign > 0 else -coef)
        return out

    def _lmul_x(self, i: int, mono: PbwMonomial) -> tuple:
        """x_i * mono in normal form, as ((monomial, coefficient), ...)."""
        key = (i, mono)
        cached = self._x_cache.get(key)
        if cached is not None:
            return cached
        j = next((t for t in range(1, i) if mono.exps[t - 1] > 0), None)
        out: Terms = {}
        if j is None:
            exps = list(mono.exps)
            exps[i - 1] += 1
            out[PbwMonomial(tuple(exps), mono.cliff, mono.w)] = ONE
        else:
            exps = list(mono.exps)
            exps[j - 1] -= 1
            inner = PbwMonomial(tuple(exps), mono.cliff, mono.w)
            # x_i x_j = x_j x_i + N c_j c_i   (the correction drops two
            # x-factors, so the recursion is well founded)
            for mono2, coef2 in self._lmul_x(i, inner):
                for mono3, coef3 in self._lmul_x(j, mono2):
                    _add_term(out, mono3, coef2 * coef3)
            if self.params.N:
                s1, m1 = self._lmul_c_mono(i, inner)
                s2, m2 = self._lmul_c_mono(j, m1)
                _add_term(out, m2, self.params.N * (s1 * s2))
        result = tuple(out.items())
        self._x_cache[key] = result
        return result

    def _lmul_simple(self, idx: int, mono: PbwMonomial) -> tuple:
        """s_idx * mono in normal form, as ((monomial, coefficient), ...)."""
        key = (idx, mono)
        cached = self._simple_cache.get(key)
        if cached is not None:
            return cached
        s = self.simples[idx]
        n = self.params.n
        out: Terms = {}
        j = next((t for t in range(1, n + 1) if mono.exps[t - 1] > 0), None)
        if j is None:
            sign, cliff = perm_on_cliff(s, mono.cliff)
            mono2 = PbwMonomial(mono.exps, cliff, s * mono.w)
            out[mono2] = ONE if sign > 0 else -ONE
        else:
            exps = list(mono.exps)
            exps[j - 1] -= 1
            inner = PbwMonomial(tuple(exps), mono.cliff, mono.w)
            short_case = self.params.type != "A" and idx == n - 1
            sign = ONE
            corrections: list[tuple[Scalar, int]] = []  # (coefficient, cliff mask)
            if short_case:
                # s_n x_n = -x_n s_n - sqrt2 * k_short;  s_n x_j = x_j s_n.
                target = j
                if j == n:
                    sign = -ONE
                    corrections.append((-(SQRT2 * self.params.k_short), 0))
            else:
                t = idx + 1
                mask_tt = (1 << (t - 1)) | (1 << t)
                if j == t:
                    # s_t x_t = x_{t+1} s_t + k(-1 + c_t c_{t+1})
                    target = t + 1
                    corrections.append((-self.params.k_long, 0))
                    corrections.append((self.params.k_long, mask_tt))
                elif j == t + 1:
                    # s_t x_{t+1} = x_t s_t + k(1 + c_t c_{t+1})
                    target = t
                    corrections.append((self.params.k_long, 0))
                    corrections.append((self.params.k_long, mask_tt))
                else:
                    target = j
            for mono2, coef2 in self._lmul_simple(idx, inner):
                for mono3, coef3 in self._lmul_x(target, mono2):
                    _add_term(out, mono3, sign * coef2 * coef3)
            for coef, mask in corrections:
                if not coef:
                    continue
                cur: Terms = {inner: coef}
                for i in range(n, 0, -1):
                    if mask & (1 << (i - 1)):
                        cur = self._lmul_c(i, cur)
                for mono3, coef3 in cur.items():
                    _add_term(out, mono3, coef3)
        result = tuple(out.items())
        self._simple_cache[key] = result
        return result

    def _lmul_w(self, w: SignedPerm, terms: Terms) -> Terms:
        if w.is_identity():
            return dict(terms)
        word = None
        out: Terms = {}
        for mono, coef in terms.items():
            if mono.x_degree() == 0:
                sign, cliff = perm_on_cliff(w, mono.cliff)
                mono2 = PbwMonomial(mono.exps, cliff, w * mono.w)
                _add_term(out, mono2, coef if sign > 0 else -coef)
            else:
                if word is None:
                    word = self.push_ctx.reduced_word(w)
                cur: Terms = {mono: coef}
                for idx in reversed(word):
                    nxt: Terms = {}
                    for m2, c2 in cur.items():
                        for m3, c3 in self._lmul_simple(idx, m2):
                            _add_term(nxt, m3, c2 * c3)
                    cur = nxt
                for m3, c3 in cur.items():
                    _add_term(out, m3, c3)
        return out

    def _mono_product(self, left: PbwMonomial, right: PbwMonomial) -> tuple:
        """Normal form of the product of two basis words (memoised)."""
        key = (left, right)
        cached = self._mono_cache.get(key)
        if cached is not None:
            return cached
        cur: Terms = {right: ONE}
        if not left.w.is_identity():
            cur = self._lmul_w(left.w, cur)
        for i in range(self.params.n, 0, -1):
            if left.cliff & (1 << (i - 1)):
                cur = self._lmul_c(i, cur)
        for i in range(self.params.n, 0, -1):
            for _ in range(left.exps[i - 1]):
                nxt: Terms = {}
                for mono, coef in cur.items():
                    for m2, c2 in self._lmul_x(i, mono):
                        _add_term(nxt, m2, coef * c2)
                cur = nxt
        result = tuple(cur.items())
        self._mono_cache[key] = result
        return result

    def multiply(self, a: AlgElem, b: AlgElem) -> AlgElem:
        if a.params != self.params or b.params != self.params:
            raise ValueError("params mismatch")
        out: Terms = {}
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                coef = ca * cb
                for mono, c in self._mono_product(ma, mb):
                    _add_term(out, mono, coef * c)
        return AlgElem(self.params, out)


_ALGEBRAS: dict[AlgebraParams, Algebra] = {}


def algebra_for(params: AlgebraParams) -> Algebra:
    """Shared engine instance for a parameter set (engines are stateless)."""
    alg = _ALGEBRAS.get(params)
    if alg is None:
        alg = _ALGEBRAS[params] = Algebra(params)
    return alg


# ---------------------------------------------------------------------------
# Spec-level operations.


def generator(params: AlgebraParams, kind: str, arg) -> AlgElem:
    """One of the generators: x(i), c(i), or a group element w."""
    alg = algebra_for(params)
    if kind == "x":
        return alg.x(arg)
    if kind == "c":
        return alg.c(arg)
    if kind == "w":
        return alg.w(arg)
    raise ValueError(f"unknown generator kind {kind!r}")


def multiply(params: AlgebraParams, a: AlgElem, b: AlgElem) -> AlgElem:
    return algebra_for(params).multiply(a, b)


def linear_combine(terms: Iterable[tuple[Scalar, AlgElem]]) -> AlgElem:
    terms = list(terms)
    if not terms:
        raise ValueError("linear_combine needs at least one term")
    params = terms[0][1].params
    out: Terms = {}
    for coef, elem in terms:
        if elem.params != params:
            raise ValueError("params mismatch")
        if not coef:
            continue
        for mono, c in elem.terms.items():
            _add_term(out, mono, coef * c)
    return AlgElem(params, out)


def parity(a: AlgElem) -> str:
    """'even', 'odd' or 'mixed'; the zero element counts as even."""
    parities = {mono.parity() for mono in a.terms}
    if parities <= {0}:
        return "even"
    if parities == {1}:
        return "odd"
    return "mixed"


def supercommutator(params: AlgebraParams, a: AlgElem, b: AlgElem) -> AlgElem:
    """ab - (-1)^{deg a deg b} ba for parity-homogeneous a, b."""
    pa, pb = parity(a), parity(b)
    if "mixed" in (pa, pb):
        raise ValueError("supercommutator requires parity-homogeneous arguments")
    sign = -1 if (pa == "odd" and pb == "odd") else 1
    ab = multiply(params, a, b)
    ba = multiply(params, b, a)
    return ab - ba if sign > 0 else ab + ba


def random_group_element(params: AlgebraParams, rng: random.Random) -> SignedPerm:
    values = list(range(1, params.n + 1))
    rng.shuffle(values)
    if params.type != "A":
        values = [v if rng.random() < 0.5 else -v for v in values]
    if params.type == "D" and sum(1 for v in values if v < 0) % 2:
        values[0] = -values[0]
    return SignedPerm(tuple(values))


_COEFF_POOL = (ONE, -ONE, TWO, HALF, SQRT2, -SQRT2, I, I_SQRT2, ONE + SQRT2)


def random_element(
    params: AlgebraParams, rng: random.Random, max_deg: int = 2, max_terms: int = 3
) -> AlgElem:
    """A small random element used by the consistency checks."""
    terms: Terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * params.n
        for _ in range(rng.randint(0, max_deg)):
            exps[rng.randrange(params.n)] += 1
        cliff = rng.randrange(1 << params.n)
        mono = PbwMonomial(tuple(exps), cliff, random_group_element(params, rng))
        _add_term(terms, mono, rng.choice(_COEFF_POOL))
    return AlgElem(params, terms)


def check_pbw_consistency(
    params: AlgebraParams, trials: int, max_deg: int = 2, seed: int = 0
) -> dict:
    """Associativity of `trials` random triples, the engine's soundness oracle."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        a = random_element(params, rng, max_deg)
        b = random_element(params, rng, max_deg)
        c = random_element(params, rng, max_deg)
        left = multiply(params, multiply(params, a, b), c)
        right = multiply(params, a, multiply(params, b, c))
        if left != right:
            failures.append(
                {"trial": t, "a": a.to_string(), "b": b.to_string(), "c": c.to_string()}
            )
    return {
        "check": "pbw_consistency",
        "type": params.type,
        "n": params.n,
        "trials": trials,
        "max_deg": max_deg,
        "seed": seed,
        "status": "pass" if not failures else "fail",
        "failures": failures,
    }


# ---------------------------------------------------------------------------
# Defining relations, shared by the engine tests and the module checker.
# Each relation is (name, [(coefficient, word), ...]) asserting that the sum
# of the scalar-weighted generator words vanishes.  Words use the tokens
# ("x", i), ("c", i), ("s", k) for the k-th standard simple reflection and
# ("sd",) for the type-D fork generator.

Relation = tuple[str, list[tuple[Scalar, tuple]]]


def defining_relations(params: AlgebraParams) -> list[Relation]:
    n = params.n
    k = params.k_long
    rels: list[Relation] = []

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            terms = [(ONE, (("x", i), ("x", j))), (-ONE, (("x", j), ("x", i)))]
            if params.type != "A":
                terms.append((-params.N, (("c", j), ("c", i))))
            rels.append((f"x{i}_x{j}", terms))
    for i in range(1, n + 1):
        rels.append((f"x{i}_c{i}", [(ONE, (("x", i), ("c", i))), (ONE, (("c", i), ("x", i)))]))
        for j in range(1, n + 1):
            if i != j:
                rels.append(
                    (f"x{i}_c{j}", [(ONE, (("x", i), ("c", j))), (-ONE, (("c", j), ("x", i)))])
                )
    for i in range(1, n + 1):
        rels.append((f"c{i}_sq", [(ONE, (("c", i), ("c", i))), (ONE, ())]))
        for j in range(i + 1, n + 1):
            rels.append(
                (f"c{i}_c{j}", [(ONE, (("c", i), ("c", j))), (ONE, (("c", j), ("c", i)))])
            )

    simple_tokens: list[tuple[tuple, SignedPerm]] = []
    a_ctx = RootSystemCtx("A", n)
    for t in range(1, n):
        simple_tokens.append(((("s", t),), a_ctx.simple_reflections[t - 1]))
    if params.type == "B":
        simple_tokens.append(((("sn",),), reflection_perm(Root("short", n), n)))
    elif params.type == "D" and n >= 2:
        simple_tokens.append(((("sd",),), reflection_perm(Root("sum", n - 1, n), n)))

    for tok, perm in simple_tokens:
        name = tok[0][0] if len(tok[0]) == 1 else f"s{tok[0][1]}"
        rels.append((f"{name}_sq", [(ONE, tok + tok), (-ONE, ())]))
        for i in range(1, n + 1):
            v = perm.image(i)
            sign = ONE if v > 0 else -ONE
            rels.append(
                (
                    f"{name}_c{i}",
                    [(ONE, tok + (("c", i),)), (-sign, (("c", abs(v)),) + tok)],
                )
            )

    # Cross relations between simple reflections and the x-generators.
    for t in range(1, n):
        st = (("s", t),)
        mask_pair = ((("c", t), ("c", t + 1)),)
        rels.append(
            (
                f"s{t}_x{t}",
                [
                    (ONE, st + (("x", t),)),
                    (-ONE, (("x", t + 1),) + st),
                    (k, ()),
                    (-k, mask_pair[0]),
                ],
            )
        )
        # Derived companion: s_t x_{t+1} = x_t s_t + k(1 + c_t c_{t+1}).
        rels.append(
            (
                f"s{t}_x{t + 1}",
                [
                    (ONE, st + (("x", t + 1),)),
                    (-ONE, (("x", t),) + st),
                    (-k, ()),
                    (-k, mask_pair[0]),
                ],
            )
        )
        for j in range(1, n + 1):
            if j not in (t, t + 1):
                rels.append(
                    (f"s{t}_x{j}", [(ONE, st + (("x", j),)), (-ONE, (("x", j),) + st)])
                )

    if params.type == "B":
        sn = (("sn",),)
        rels.append(
            (
                "sn_xn",
                [
                    (ONE, sn + (("x", n),)),
                    (ONE, (("x", n),) + sn),
                    (SQRT2 * params.k_short, ()),
                ],
            )
        )
        for j in range(1, n):
            rels.append((f"sn_x{j}", [(ONE, sn + (("x", j),)), (-ONE, (("x", j),) + sn)]))
    if params.type == "D" and n >= 2:
        sd = (("sd",),)
        # s_{n-1,-n} x_{n-1} + x_n s_{n-1,-n} = k(-1 + c_n c_{n-1}); derived
        # from the type-B presentation (the Clifford factors anticommute, so
        # their order carries a sign).
        rels.append(
            (
                "sd_xfork",
                [
                    (ONE, sd + (("x", n - 1),)),
                    (ONE, (("x", n),) + sd),
                    (k, ()),
                    (-k, (("c", n), ("c", n - 1))),
                ],
            )
        )
        rels.append(
            (
                "sd_xfork2",
                [
                    (ONE, sd + (("x", n),)),
                    (ONE, (("x", n - 1),) + sd),
                    (k, ()),
                    (-k, (("c", n - 1), ("c", n))),
                ],
            )
        )
        for j in range(1, n - 1):
            rels.append((f"sd_x{j}", [(ONE, sd + (("x", j),)), (-ONE, (("x", j),) + sd)]))

    # Braid relations of the group.
    for t in range(1, n - 1):
        a, b = ("s", t), ("s", t + 1)
        rels.append((f"braid_s{t}", [(ONE, (a, b, a)), (-ONE, (b, a, b))]))
    for t in range(1, n):
        for u in range(t + 2, n):
            a, b = ("s", t), ("s", u)
            rels.append((f"comm_s{t}_s{u}", [(ONE, (a, b)), (-ONE, (b, a))]))
    if params.type == "B" and n >= 2:
        a, b = ("s", n - 1), ("sn",)
        rels.append(("braid_sn", [(ONE, (a, b, a, b)), (-ONE, (b, a, b, a))]))
        for t in range(1, n - 1):
            rels.append((f"comm_s{t}_sn", [(ONE, (("s", t), b)), (-ONE, (b, ("s", t)))]))
    if params.type == "D" and n >= 2:
        b = ("sd",)
        for t in range(1, n):
            if t == n - 2:
                a = ("s", t)
                rels.append(("braid_sd", [(ONE, (a, b, a)), (-ONE, (b, a, b))]))
            else:
                rels.append((f"comm_s{t}_sd", [(ONE, (("s", t), b)), (-ONE, (b, ("s", t)))]))
    return rels


def eval_relation_tokens(params: AlgebraParams, word: tuple) -> AlgElem:
    """Evaluate a relation word inside the engine."""
    alg = algebra_for(params)
    result = alg.one()
    for token in word:
        if token[0] == "x":
            factor = alg.x(token[1])
        elif token[0] == "c":
            factor = alg.c(token[1])
        elif token[0] == "s":
            factor = alg.w(RootSystemCtx("A", params.n).simple_reflections[token[1] - 1])
        elif token[0] == "sn":
            factor = alg.w(reflection_perm(Root("short", params.n), params.n))
        elif token[0] == "sd":
            factor = alg.w(reflection_perm(Root("sum", params.n - 1, params.n), params.n))
        else:
            raise ValueError(f"unknown token {token!r}")
        result = alg.multiply(result, factor)
    return result


def check_relations_in_engine(params: AlgebraParams) -> dict:
    """Normalise LHS - RHS of every defining relation; all must vanish."""
    failures = []
    for name, terms in defining_relations(params):
        total = algebra_for(params).zero()
        for coef, word in terms:
            total = total + eval_relation_tokens(params, word).scale(coef)
        if not total.is_zero():
            failures.append({"relation": name, "residual": total.to_string()})
    return {
        "check": "relation_closure",
        "type": params.type,
        "n": params.n,
        "status": "pass" if not failures else "fail",
        "failures": failures,
    }
