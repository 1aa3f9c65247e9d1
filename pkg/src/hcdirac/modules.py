"""Finite-dimensional modules with exact generator matrices.

Contents: the irreducible Clifford supermodule U(n), the Steinberg-type
modules for types A, B, D, the induced modules X_lambda of type A, matrix
realisation of arbitrary algebra elements, the positive-definite Hermitian
form on X_lambda, and a relation checker that verifies every defining
relation as a matrix identity (run by every constructor).

The induced module is computed by straightening: a generator applied to a
basis vector w_t (x) v is normalised in the engine, and each resulting PBW
word is pushed back into the coset-representative basis by moving x- and
c-factors rightwards across the group part, one factor at a time.  Every
step either lands in the parabolic subalgebra or strictly drops the
x-degree, so the recursion terminates.
"""

from __future__ import annotations

from fractions import Fraction

from .engine import (
    AlgebraParams,
    AlgElem,
    PbwMonomial,
    algebra_for,
    cliff_insert,
    cliff_mul,
    defining_relations,
    perm_on_cliff,
)
from .linalg import Matrix, Subspace, quotient_dim
from .partitions import Partition
from .scalars import HALF_SQRT2, I, ONE, SQRT2, TWO, ZERO, Scalar
from .weyl import Root, RootSystemCtx, SignedPerm, reflection_perm


class ModuleRep:
    """A representation given by exact generator matrices plus parities."""

    def __init__(
        self,
        params: AlgebraParams | None,
        kind: str,
        basis_labels: list[str],
        parity: list[int],
        gens: dict[str, Matrix],
        lam: Partition | None = None,
        cosets: list[SignedPerm] | None = None,
        check: bool = True,
    ):
        self.params = params
        self.kind = kind
        self.basis_labels = list(basis_labels)
        self.parity = tuple(parity)
        self.gens = dict(gens)
        self.lam = lam
        self.cosets = list(cosets) if cosets is not None else None
        self.dim = len(self.basis_labels)
        self.ctx = RootSystemCtx(params.type, params.n) if params is not None else None
        self._group_cache: dict[tuple[int, ...], Matrix] = {}
        if check:
            report = check_module_relations(self)
            if report["status"] != "pass":
                raise AssertionError(f"module relations fail: {report['failures']}")

    # -- matrix realisation ----------------------------------------------

    def gen(self, key: str) -> Matrix:
        return self.gens[key]

    def _simple_key(self, idx: int) -> str:
        n = self.params.n
        if self.params.type == "B" and idx == n - 1:
            return "sn"
        if self.params.type == "D" and idx == n - 1:
            return "sd"
        return f"s{idx + 1}"

    def group_matrix(self, w: SignedPerm) -> Matrix:
        if self.params is None:
            raise ValueError("module has no group action")
        cached = self._group_cache.get(w.images)
        if cached is None:
            cached = Matrix.identity(self.dim)
            for idx in self.ctx.reduced_word(w):
                cached = cached * self.gens[self._simple_key(idx)]
            self._group_cache[w.images] = cached
        return cached

    def mono_matrix(self, mono: PbwMonomial) -> Matrix:
        out = self.group_matrix(mono.w)
        n = self.params.n
        for i in range(n, 0, -1):
            if mono.cliff & (1 << (i - 1)):
                out = self.gens[f"c{i}"] * out
        for i in range(n, 0, -1):
            for _ in range(mono.exps[i - 1]):
                out = self.gens[f"x{i}"] * out
        return out

    def act(self, elem: AlgElem) -> Matrix:
        """pi(elem) as an exact dim x dim matrix."""
        if self.params is None or elem.params != self.params:
            raise ValueError("params mismatch")
        rows = [[ZERO] * self.dim for _ in range(self.dim)]
        for mono, coef in elem.terms.items():
            mat = self.mono_matrix(mono)
            for r in range(self.dim):
                mrow = mat.rows[r]
                orow = rows[r]
                for c in range(self.dim):
                    if mrow[c]:
                        orow[c] = orow[c] + coef * mrow[c]
        return Matrix(rows)

    def summary(self) -> dict:
        out = {"kind": self.kind, "dim": self.dim}
        if self.params is not None:
            out.update(
                {
                    "type": self.params.type,
                    "n": self.params.n,
                    "k_long": self.params.k_long.compact(),
                    "k_short": self.params.k_short.compact(),
                    "N": self.params.N.compact(),
                }
            )
        if self.lam is not None:
            out["lambda"] = str(self.lam)
        return out

    def __repr__(self):
        return f"<ModuleRep {self.kind} dim {self.dim}>"


def act_matrix(module: ModuleRep, elem: AlgElem) -> Matrix:
    return module.act(elem)


# ---------------------------------------------------------------------------
# Relation checking (direct matrix arithmetic; independent of the engine's
# straightening, so engine and modules certify each other).


def _token_matrix(module: ModuleRep, token) -> Matrix:
    if token[0] == "x":
        return module.gens[f"x{token[1]}"]
    if token[0] == "c":
        return module.gens[f"c{token[1]}"]
    if token[0] == "s":
        return module.gens[f"s{token[1]}"]
    if token[0] in ("sn", "sd"):
        return module.gens[token[0]]
    raise ValueError(f"unknown token {token!r}")


def _clifford_relations(n: int):
    rels = []
    for i in range(1, n + 1):
        rels.append((f"c{i}_sq", [(ONE, (("c", i), ("c", i))), (ONE, ())]))
        for j in range(i + 1, n + 1):
            rels.append((f"c{i}_c{j}", [(ONE, (("c", i), ("c", j))), (ONE, (("c", j), ("c", i)))]))
    return rels


def check_module_relations(module: ModuleRep) -> dict:
    """Assert every defining relation as an exact matrix identity."""
    if module.params is None:
        n = max(int(k[1:]) for k in module.gens)
        rels = _clifford_relations(n)
    else:
        rels = defining_relations(module.params)
    identity = Matrix.identity(module.dim)
    failures = []
    for name, terms in rels:
        rows = [[ZERO] * module.dim for _ in range(module.dim)]
        for coef, word in terms:
            prod = identity
            for token in word:
                prod = prod * _token_matrix(module, token)
            for r in range(module.dim):
                prow = prod.rows[r]
                orow = rows[r]
                for c in range(module.dim):
                    if prow[c]:
                        orow[c] = orow[c] + coef * prow[c]
        if not Matrix(rows).is_zero():
            failures.append(name)
    # Structural check: c-generators are odd maps, everything else even.
    for key, mat in module.gens.items():
        flip = 1 if key.startswith("c") else 0
        for r in range(module.dim):
            for c in range(module.dim):
                if mat.rows[r][c] and module.parity[r] != module.parity[c] ^ flip:
                    failures.append(f"parity_{key}")
                    break
            else:
                continue
            break
    return {
        "check": "module_relations",
        "kind": module.kind,
        "dim": module.dim,
        "status": "pass" if not failures else "fail",
        "failures": failures,
    }


# ---------------------------------------------------------------------------
# The Clifford supermodule U(n).


def _pauli() -> tuple[Matrix, Matrix, Matrix, Matrix]:
    sx = Matrix([[ZERO, ONE], [ONE, ZERO]])
    sy = Matrix([[ZERO, -I], [I, ZERO]])
    sz = Matrix([[ONE, ZERO], [ZERO, -ONE]])
    id2 = Matrix.identity(2)
    return sx, sy, sz, id2


def _kron(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for i in range(a.nrows):
        for k in range(b.nrows):
            row = []
            for j in range(a.ncols):
                aij = a.rows[i][j]
                row.extend([aij * b.rows[k][l] for l in range(b.ncols)])
            rows.append(row)
    return Matrix(rows)


def clifford_c_matrices(n: int) -> tuple[list[Matrix], list[int]]:
    """Jordan-Wigner matrices for c_1..c_n with c_i^2 = -1, plus parities."""
    sx, sy, sz, id2 = _pauli()
    qubits = (n + 1) // 2
    cs = []
    for j in range(1, n + 1):
        t = (j + 1) // 2
        factors = [sz] * (t - 1) + [sx if j % 2 else sy] + [id2] * (qubits - t)
        mat = factors[0]
        for f in factors[1:]:
            mat = _kron(mat, f)
        cs.append(mat.scale(I))
    parity = [bin(b).count("1") & 1 for b in range(1 << qubits)]
    return cs, parity


def clifford_supermodule(n: int) -> ModuleRep:
    """The irreducible Cl_n-supermodule: dim 2^{n/2} (n even), 2^{(n+1)/2} (odd)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    cs, parity = clifford_c_matrices(n)
    gens = {f"c{i}": mat for i, mat in enumerate(cs, start=1)}
    labels = [f"u{b}" for b in range(len(parity))]
    return ModuleRep(None, "clifford", labels, parity, gens)


# ---------------------------------------------------------------------------
# Steinberg-type modules.


def _cl_basis_w_matrix(w: SignedPerm, n: int) -> Matrix:
    """Action of a group element on the Clifford-monomial basis of Cl_n."""
    dim = 1 << n
    rows = [[ZERO] * dim for _ in range(dim)]
    for mask in range(dim):
        sign, m2 = perm_on_cliff(w, mask)
        rows[m2][mask] = ONE if sign > 0 else -ONE
    return Matrix(rows)


def _cl_basis_c_matrix(i: int, n: int) -> Matrix:
    dim = 1 << n
    rows = [[ZERO] * dim for _ in range(dim)]
    for mask in range(dim):
        sign, m2 = cliff_insert(i, mask)
        rows[m2][mask] = ONE if sign > 0 else -ONE
    return Matrix(rows)


def _st_lambda_x_matrix(i: int, lam: Partition, k: Scalar, n: int) -> Matrix:
    """x_i on St_lambda: k * sum over same-block j < i of s_{ij}(1 - c_i c_j)."""
    dim = 1 << n
    out = Matrix.zeros(dim, dim)
    start, stop = next(b for b in lam.blocks() if b[0] <= i <= b[1])
    identity = Matrix.identity(dim)
    ci = _cl_basis_c_matrix(i, n)
    for j in range(start, i):
        sij = _cl_basis_w_matrix(reflection_perm(Root("diff", j, i), n), n)
        cj = _cl_basis_c_matrix(j, n)
        out = out + (sij * (identity - ci * cj)).scale(k)
    return out


def _cliff_labels(n: int) -> list[str]:
    labels = []
    for mask in range(1 << n):
        word = "".join(f"c{i}" for i in range(1, n + 1) if mask & (1 << (i - 1)))
        labels.append(word or "1")
    return labels


def _steinberg_a(params: AlgebraParams) -> ModuleRep:
    n = params.n
    lam = Partition((n,))
    gens: dict[str, Matrix] = {}
    for i in range(1, n + 1):
        gens[f"c{i}"] = _cl_basis_c_matrix(i, n)
        gens[f"x{i}"] = _st_lambda_x_matrix(i, lam, params.k_long, n)
    ctx = RootSystemCtx("A", n)
    for t, s in enumerate(ctx.simple_reflections, start=1):
        gens[f"s{t}"] = _cl_basis_w_matrix(s, n)
    parity = [mask.bit_count() & 1 for mask in range(1 << n)]
    return ModuleRep(params, "steinberg", _cliff_labels(n), parity, gens, lam=lam)


def forced_n_constant(params: AlgebraParams) -> Scalar:
    """The N value for which the Steinberg module of type B/D exists."""
    base = TWO * (params.n - 1) * params.k_long * params.k_long
    if params.type == "B":
        return base + SQRT2 * params.k_long * params.k_short
    return base


def _graded_pair_op(p_mat: Matrix, q_mat: Matrix, parity_u: list[int], sign_on_odd: bool, coef: Scalar) -> Matrix:
    """coef * (P u) (x) (Q v), optionally twisted by (-1)^{deg u}."""
    du = p_mat.nrows
    dv = q_mat.nrows
    rows = [[ZERO] * (du * dv) for _ in range(du * dv)]
    for p in range(du):
        factor = coef
        if sign_on_odd and parity_u[p]:
            factor = -factor
        for p2 in range(du):
            a = p_mat.rows[p2][p]
            if not a:
                continue
            for q in range(dv):
                for q2 in range(dv):
                    b = q_mat.rows[q2][q]
                    if b:
                        rows[p2 * dv + q2][p * dv + q] = factor * a * b
    return Matrix(rows)


def _steinberg_b_ambient(params: AlgebraParams) -> dict[str, Matrix]:
    """Generator matrices of the type-B Steinberg action on U(n) (x) U(n)."""
    n = params.n
    cs, parity_u = clifford_c_matrices(n)
    du = len(parity_u)
    id_u = Matrix.identity(du)
    gens: dict[str, Matrix] = {}
    for i in range(1, n + 1):
        a_i = Matrix.zeros(du, du)
        for t in range(1, i):
            a_i = a_i + cs[t - 1].scale(params.k_long)
        a_i = a_i + cs[i - 1].scale(params.k_long * (n - i) + HALF_SQRT2 * params.k_short)
        gens[f"x{i}"] = _graded_pair_op(a_i, cs[i - 1], parity_u, True, -I)
        gens[f"c{i}"] = _graded_pair_op(id_u, cs[i - 1], parity_u, True, ONE)
    for t in range(1, n):
        b_t = (cs[t - 1] - cs[t]).scale(HALF_SQRT2)
        gens[f"s{t}"] = _graded_pair_op(b_t, b_t, parity_u, True, I)
    gens["sn"] = _graded_pair_op(cs[n - 1], cs[n - 1], parity_u, True, I)
    return gens


def steinberg_module(params: AlgebraParams) -> ModuleRep:
    """The Steinberg-type module; for B/D the N parameter is forced."""
    if params.type == "A":
        return _steinberg_a(params)
    if params.N != forced_n_constant(params):
        raise ValueError(
            f"type {params.type} Steinberg module requires N = "
            f"{forced_n_constant(params).compact()}, got {params.N.compact()}"
        )
    gens = _steinberg_b_ambient(params)
    _, parity_u = clifford_c_matrices(params.n)
    du = len(parity_u)
    parity = [(parity_u[p] + parity_u[q]) & 1 for p in range(du) for q in range(du)]
    labels = [f"u{p}*v{q}" for p in range(du) for q in range(du)]
    if params.type == "D":
        if params.n >= 2:
            sn = gens.pop("sn")
            gens["sd"] = sn * gens[f"s{params.n - 1}"] * sn
        else:
            gens.pop("sn")
    return ModuleRep(params, "steinberg", labels, parity, gens)


# ---------------------------------------------------------------------------
# Induced modules X_lambda (type A).


def minimal_coset_reps(lam: Partition) -> list[SignedPerm]:
    """Length-minimal representatives of S_n / S_lambda, deterministic order."""
    n = lam.n
    ctx = RootSystemCtx("A", n)
    blocks = lam.blocks()
    by_coset: dict[tuple, SignedPerm] = {}
    for w in ctx.elements():
        key = tuple(frozenset(w.image(i) for i in range(start, stop + 1)) for start, stop in blocks)
        best = by_coset.get(key)
        if best is None or (ctx.length(w), w.images) < (ctx.length(best), best.images):
            by_coset[key] = w
    reps = sorted(by_coset.values(), key=lambda w: (ctx.length(w), w.images))
    return reps


class _InducedBuilder:
    """Scratch state for straightening generators into the X_lambda basis."""

    def __init__(self, lam: Partition, k: Scalar):
        self.lam = lam
        self.n = lam.n
        self.params = AlgebraParams("A", self.n, k)
        self.alg = algebra_for(self.params)
        self.cl_dim = 1 << self.n
        self.reps = minimal_coset_reps(lam)
        self.rep_index = {w.images: t for t, w in enumerate(self.reps)}
        blocks = lam.blocks()
        self.coset_factor: dict[tuple[int, ...], tuple[int, SignedPerm]] = {}
        for w in RootSystemCtx("A", self.n).elements():
            key = tuple(frozenset(w.image(i) for i in range(s, e + 1)) for s, e in blocks)
            self._register(w, key)
        self.st_x = [
            _st_lambda_x_matrix(i, lam, k, self.n) for i in range(1, self.n + 1)
        ]
        self._st_w_cache: dict[tuple[int, ...], Matrix] = {}
        self._push_cache: dict[tuple[int, tuple[int, ...]], tuple[int, AlgElem]] = {}

    def _register(self, w: SignedPerm, key) -> None:
        # Representative lookup is rebuilt here so factorisation needs no
        # search: w = w_t * u with u in S_lambda.
        if not hasattr(self, "_coset_of"):
            self._coset_of = {}
            blocks = self.lam.blocks()
            for t, rep in enumerate(self.reps):
                rkey = tuple(
                    frozenset(rep.image(i) for i in range(s, e + 1)) for s, e in blocks
                )
                self._coset_of[rkey] = t
        t = self._coset_of[key]
        u = self.reps[t].inverse() * w
        self.coset_factor[w.images] = (t, u)

    def st_w(self, u: SignedPerm) -> Matrix:
        cached = self._st_w_cache.get(u.images)
        if cached is None:
            cached = self._st_w_cache[u.images] = _cl_basis_w_matrix(u, self.n)
        return cached

    def push_x(self, i: int, w: SignedPerm) -> tuple[int, AlgElem]:
        """x_i w = w x_j + corr with j = w^{-1}(i) and corr of x-degree 0."""
        key = (i, w.images)
        cached = self._push_cache.get(key)
        if cached is None:
            j = w.inverse().image(i)
            xi_w = self.alg.multiply(self.alg.x(i), self.alg.w(w))
            w_xj = self.alg.multiply(self.alg.w(w), self.alg.x(j))
            cached = self._push_cache[key] = (j, xi_w - w_xj)
        return cached

    def basis_index(self, t: int, mask: int) -> int:
        return t * self.cl_dim + mask

    def eval_elem(self, elem: AlgElem, vec: list[Scalar], coef: Scalar, out: list[Scalar]):
        for mono, c in elem.terms.items():
            self.eval_mono(mono, vec, coef * c, out)

    def eval_mono(self, mono: PbwMonomial, vec: list[Scalar], coef: Scalar, out: list[Scalar]):
        i = next((t for t in range(self.n, 0, -1) if mono.exps[t - 1] > 0), None)
        if i is None:
            t, u = self.coset_factor[mono.w.images]
            rep = self.reps[t]
            sign, eps2 = perm_on_cliff(rep.inverse(), mono.cliff)
            moved = self.st_w(u).matvec(vec)
            scale = coef if sign > 0 else -coef
            for mask, value in enumerate(moved):
                if value:
                    s2, m2 = cliff_mul(eps2, mask)
                    out[self.basis_index(t, m2)] += scale * value * s2
            return
        exps = list(mono.exps)
        exps[i - 1] -= 1
        rest = PbwMonomial(tuple(exps), mono.cliff, mono.w)
        sign0 = -ONE if mono.cliff & (1 << (i - 1)) else ONE
        j, corr = self.push_x(i, mono.w)
        self.eval_mono(rest, list(self.st_x[j - 1].matvec(vec)), coef * sign0, out)
        if not corr.is_zero():
            head = AlgElem(
                self.params,
                {PbwMonomial(rest.exps, rest.cliff, SignedPerm.identity(self.n)): ONE},
            )
            self.eval_elem(self.alg.multiply(head, corr), vec, coef * sign0, out)

    def generator_matrix(self, elem: AlgElem) -> Matrix:
        dim = len(self.reps) * self.cl_dim
        cols = []
        for t, rep in enumerate(self.reps):
            shifted = self.alg.multiply(elem, self.alg.w(rep))
            for mask in range(self.cl_dim):
                vec = [ZERO] * self.cl_dim
                vec[mask] = ONE
                out = [ZERO] * dim
                self.eval_elem(shifted, vec, ONE, out)
                cols.append(out)
        return Matrix.from_columns(cols, dim)


def induced_module(lam: Partition, k: Scalar) -> ModuleRep:
    """X_lambda on the basis {minimal coset rep} x {Clifford monomials}."""
    builder = _InducedBuilder(lam, k)
    n = builder.n
    alg = builder.alg
    gens: dict[str, Matrix] = {}
    for i in range(1, n + 1):
        gens[f"x{i}"] = builder.generator_matrix(alg.x(i))
        gens[f"c{i}"] = builder.generator_matrix(alg.c(i))
    for t, s in enumerate(RootSystemCtx("A", n).simple_reflections, start=1):
        gens[f"s{t}"] = builder.generator_matrix(alg.w(s))
    cl_labels = _cliff_labels(n)
    labels = [f"{rep}|{cl}" for rep in builder.reps for cl in cl_labels]
    parity = [mask.bit_count() & 1 for _ in builder.reps for mask in range(1 << n)]
    return ModuleRep(
        builder.params,
        "induced",
        labels,
        parity,
        gens,
        lam=lam,
        cosets=builder.reps,
    )


# ---------------------------------------------------------------------------
# Hermitian form on X_lambda.


def _in_parabolic(u: SignedPerm, lam: Partition) -> bool:
    """Whether u lies in S_lambda, i.e. preserves every block of positions."""
    return all(
        all(start <= u.image(i) <= stop for i in range(start, stop + 1))
        for start, stop in lam.blocks()
    )


def hermitian_form(module: ModuleRep) -> tuple[Matrix, dict]:
    """Gram matrix of the induced-module form, plus the anti-adjoint check.

    <w_t (x) v1, w_s (x) v2> = delta_{cosets} <pi(w_s^{-1} w_t) v1, v2>_lambda
    with the Clifford monomials orthonormal for <.,.>_lambda.
    """
    if module.kind != "induced":
        raise ValueError("hermitian_form is defined for induced modules only")
    from .dirac import dirac_element

    n = module.params.n
    cl_dim = 1 << n
    reps = module.cosets
    dim = module.dim
    rows = [[ZERO] * dim for _ in range(dim)]
    for t, wt in enumerate(reps):
        for s, ws in enumerate(reps):
            u = ws.inverse() * wt
            if not _in_parabolic(u, module.lam):
                continue
            mat = _cl_basis_w_matrix(u, n)
            for mask_i in range(cl_dim):
                moved = mat.column(mask_i)  # pi(u) applied to c^I
                for mask_j in range(cl_dim):
                    if moved[mask_j]:
                        rows[t * cl_dim + mask_i][s * cl_dim + mask_j] = moved[mask_j]
    gram = Matrix(rows)
    pi_d = module.act(dirac_element(module.params))
    residual = pi_d.conj_transpose() * gram + gram * pi_d
    report = {
        "check": "dirac_anti_self_adjoint",
        "gram_is_identity": gram == Matrix.identity(dim),
        "status": "pass" if residual.is_zero() else "fail",
    }
    return gram, report


# ---------------------------------------------------------------------------
# Subspace operation dispatcher (exact Gaussian elimination lives in linalg).


def subspace_ops(op: str, *args):
    if op == "kernel":
        return Subspace.kernel(*args)
    if op == "image":
        return Subspace.image(*args)
    if op == "intersect":
        return args[0].intersect(args[1])
    if op == "quotient_dim":
        return quotient_dim(*args)
    if op == "membership":
        return args[0].contains(args[1])
    raise ValueError(f"unknown subspace op {op!r}")
