"""Distinguished elements: twisted reflections, dressed generators, the Dirac
element and the two Casimir-type elements, plus in-algebra identity checks.

The Dirac element is built from the uniform formula

    D = sum_i y_i + (sqrt2/2) * sum_{alpha > 0} k_alpha |<alpha,alpha>| stilde_alpha

which specialises to the long/short split displays for each type; the
construction cross-checks it against sum_i y'_i and sum_i x'_i c_i.

The square of D differs from Omega_H - Omega_Seg by the constant
n(n-1)/2 * N coming from y_i y_j + y_j y_i = N; the constant vanishes in
type A and whenever the x-generators commute (N = 0).  verify_identities
asserts the corrected identity exactly and reports whether the plain form
holds for the given parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import AlgebraParams, AlgElem, algebra_for, multiply, parity
from .scalars import HALF_SQRT2, ONE, SQRT2, Scalar
from .weyl import Root, SignedPerm


def clifford_root_element(params: AlgebraParams, root: Root) -> AlgElem:
    """c_alpha: (sqrt2/2)(c_i -+ c_j) for long roots, c_i for short ones."""
    alg = algebra_for(params)
    if root.kind == "short":
        return alg.c(root.i)
    sign = ONE if root.kind == "sum" else -ONE
    return alg.c(root.i).scale(HALF_SQRT2) + alg.c(root.j).scale(HALF_SQRT2 * sign)


def twisted_reflection(params: AlgebraParams, root: Root) -> AlgElem:
    """stilde_alpha = s_alpha c_alpha in normal form, for positive alpha."""
    alg = algebra_for(params)
    if not alg.ctx.contains_root(root):
        raise ValueError(f"{root} is not a positive root of type {params.type}, n={params.n}")
    s = alg.w(alg.ctx.reflection(root))
    return alg.multiply(s, clifford_root_element(params, root))


def _roots_touching(params: AlgebraParams, i: int) -> list[Root]:
    alg = algebra_for(params)
    out = []
    for root in alg.ctx.positive_roots:
        touched = (root.i == i) if root.kind == "short" else (i in (root.i, root.j))
        if touched:
            out.append(root)
    return out


def dressed_generators(params: AlgebraParams, i: int) -> tuple[AlgElem, AlgElem, AlgElem]:
    """(y_i, y'_i, x'_i) with y_i = x_i c_i and x'_i = -y'_i c_i."""
    alg = algebra_for(params)
    y = alg.multiply(alg.x(i), alg.c(i))
    y_prime = y
    for root in _roots_touching(params, i):
        coef = HALF_SQRT2 * params.k_for(root)
        if coef:
            y_prime = y_prime + twisted_reflection(params, root).scale(coef)
    x_prime = alg.multiply(y_prime, alg.c(i)).scale(-ONE)
    return y, y_prime, x_prime


def dirac_element(params: AlgebraParams) -> AlgElem:
    """D = sum_i y_i + (sqrt2/2) sum_{alpha>0} k_alpha |<alpha,alpha>| stilde_alpha."""
    alg = algebra_for(params)
    total = alg.zero()
    for i in range(1, params.n + 1):
        total = total + alg.multiply(alg.x(i), alg.c(i))
    for root in alg.ctx.positive_roots:
        coef = HALF_SQRT2 * params.k_for(root) * root.length_sq()
        if coef:
            total = total + twisted_reflection(params, root).scale(coef)
    return total


def casimirs(params: AlgebraParams) -> tuple[AlgElem, AlgElem]:
    """(Omega_H, Omega_Seg) = (sum x_i^2, the weighted reflection double sum)."""
    alg = algebra_for(params)
    omega_h = alg.zero()
    for i in range(1, params.n + 1):
        omega_h = omega_h + alg.multiply(alg.x(i), alg.x(i))
    omega_seg = alg.zero()
    roots = alg.ctx.positive_roots
    stilde = {root: twisted_reflection(params, root) for root in roots}
    half = Scalar(Fraction(1, 2))
    for alpha in roots:
        s_alpha = alg.ctx.reflection(alpha)
        k_alpha = params.k_for(alpha)
        if not k_alpha:
            continue
        for beta in roots:
            _, sign = s_alpha.act_root(beta)
            if sign > 0:
                continue
            coef = half * alpha.length_sq() * beta.length_sq() * k_alpha * params.k_for(beta)
            if coef:
                omega_seg = omega_seg + alg.multiply(stilde[alpha], stilde[beta]).scale(coef)
    return omega_h, omega_seg


def d_squared_constant(params: AlgebraParams) -> Scalar:
    """The constant n(n-1)/2 * N separating D^2 from Omega_H - Omega_Seg."""
    return params.N * Scalar(Fraction(params.n * (params.n - 1), 2))


@dataclass(frozen=True)
class DiracBundle:
    """All distinguished elements for one parameter set, cross-checked."""

    params: AlgebraParams
    D: AlgElem
    omega_h: AlgElem
    omega_seg: AlgElem
    stilde: dict
    y: tuple
    y_prime: tuple
    x_prime: tuple


def dirac_bundle(params: AlgebraParams) -> DiracBundle:
    alg = algebra_for(params)
    D = dirac_element(params)
    omega_h, omega_seg = casimirs(params)
    stilde = {root: twisted_reflection(params, root) for root in alg.ctx.positive_roots}
    dressed = [dressed_generators(params, i) for i in range(1, params.n + 1)]
    y = tuple(d[0] for d in dressed)
    y_prime = tuple(d[1] for d in dressed)
    x_prime = tuple(d[2] for d in dressed)

    sum_y_prime = alg.zero()
    sum_xc = alg.zero()
    for i in range(params.n):
        sum_y_prime = sum_y_prime + y_prime[i]
        sum_xc = sum_xc + alg.multiply(x_prime[i], alg.c(i + 1))
    if D != sum_y_prime or D != sum_xc:
        raise AssertionError("Dirac element presentations disagree")
    if parity(D) not in ("odd", "even"):  # zero D (n=1, k=0 short) counts as even
        raise AssertionError("Dirac element is not parity homogeneous")
    if parity(omega_h) != "even" or parity(omega_seg) != "even":
        raise AssertionError("Casimir elements must be even")
    if not omega_seg.is_seg():
        raise AssertionError("Omega_Seg must have x-degree zero")
    return DiracBundle(params, D, omega_h, omega_seg, stilde, y, y_prime, x_prime)


def _root_sum_square_checks(params: AlgebraParams) -> list[dict]:
    alg = algebra_for(params)
    roots = alg.ctx.positive_roots
    stilde = {root: twisted_reflection(params, root) for root in roots}
    longs = [r for r in roots if r.length_sq() == 2]
    shorts = [r for r in roots if r.length_sq() == 1]

    def sum_of(rs):
        total = alg.zero()
        for r in rs:
            total = total + stilde[r]
        return total

    def pair_sum(first, second):
        total = alg.zero()
        for alpha in first:
            s_alpha = alg.ctx.reflection(alpha)
            for beta in second:
                _, sign = s_alpha.act_root(beta)
                if sign < 0:
                    total = total + alg.multiply(stilde[alpha], stilde[beta])
        return total

    checks = []
    long_sum, short_sum = sum_of(longs), sum_of(shorts)
    lhs = alg.multiply(long_sum, long_sum)
    checks.append(("root_sum_sq_long", lhs - pair_sum(longs, longs)))
    lhs = alg.multiply(short_sum, short_sum)
    checks.append(("root_sum_sq_short", lhs - pair_sum(shorts, shorts)))
    mixed = alg.multiply(long_sum, short_sum) + alg.multiply(short_sum, long_sum)
    target = pair_sum(longs, shorts) + pair_sum(shorts, longs)
    checks.append(("root_sum_sq_mixed", mixed - target))
    return [
        {"check": name, "status": "pass" if residual.is_zero() else "fail",
         **({} if residual.is_zero() else {"witness": residual.to_string()})}
        for name, residual in checks
    ]


def verify_identities(params: AlgebraParams) -> dict:
    """Exact normal-form checks: D^2, Weyl/Clifford commutation, root sums."""
    alg = algebra_for(params)
    bundle = dirac_bundle(params)
    checks = []

    d_sq = alg.multiply(bundle.D, bundle.D)
    residual = d_sq - (bundle.omega_h - bundle.omega_seg)
    correction = alg.scalar(d_squared_constant(params))
    entry = {
        "check": "d_squared",
        "status": "pass" if residual == correction else "fail",
        "n_correction": d_squared_constant(params).compact(),
        "plain_identity": residual.is_zero(),
    }
    if entry["status"] == "fail":
        entry["witness"] = (residual - correction).to_string()
    checks.append(entry)

    for idx, s in enumerate(alg.ctx.simple_reflections):
        ws = alg.w(s)
        residual = alg.multiply(ws, bundle.D) - alg.multiply(bundle.D, ws)
        checks.append(
            {"check": f"w_comm_s{idx + 1}", "status": "pass" if residual.is_zero() else "fail",
             **({} if residual.is_zero() else {"witness": residual.to_string()})}
        )
    for i in range(1, params.n + 1):
        ci = alg.c(i)
        residual = alg.multiply(ci, bundle.D) + alg.multiply(bundle.D, ci)
        checks.append(
            {"check": f"c{i}_anticomm", "status": "pass" if residual.is_zero() else "fail",
             **({} if residual.is_zero() else {"witness": residual.to_string()})}
        )
    checks.extend(_root_sum_square_checks(params))

    status = "pass" if all(c["status"] == "pass" for c in checks) else "fail"
    return {
        "suite": "dirac_identities",
        "type": params.type,
        "n": params.n,
        "k_long": params.k_long.compact(),
        "k_short": params.k_short.compact(),
        "N": params.N.compact(),
        "checks": checks,
        "status": status,
    }
