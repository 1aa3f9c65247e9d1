"""Dirac cohomology, central characters and the Vogan-type consistency check.

H_D(X) = ker pi(D) / (ker pi(D) cap im pi(D)) carries an action of the
x-degree-zero subalgebra because D commutes with the Weyl group and
anticommutes with the Clifford generators; both stabilities are verified
before quotienting.  The induced-module spectrum of Omega_Seg on H_D is
computed exactly: candidate eigenvalues come from the k^2 |phi1(mu)|^2
table over distinct-part partitions, an exact kernel dimension is taken per
candidate, and a characteristic-polynomial fallback reports anything the
table misses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .dirac import casimirs, dirac_element
from .engine import AlgebraParams
from .linalg import Matrix, Subspace, quotient_matrix
from .modules import ModuleRep, induced_module
from .partitions import Partition, all_partitions, distinct_partitions, phi_maps
from .scalars import ONE, ZERO, Scalar


@dataclass(frozen=True)
class CentralCharacter:
    """Multiset of x_i^2 eigenvalues, stored sorted for permutation-equality."""

    values: tuple[Scalar, ...]

    @classmethod
    def from_values(cls, values) -> CentralCharacter:
        return cls(tuple(sorted(values, key=lambda s: (s.a, s.b, s.c, s.d))))

    def __str__(self) -> str:
        return "{" + ", ".join(v.compact() for v in self.values) + "}"


def expected_central_character(lam: Partition, k: Scalar) -> CentralCharacter:
    """{k^2 j(j-1) : blockwise local positions j} for an induced module."""
    ksq = k * k
    values = [ksq * (j * (j - 1)) for p in lam.parts for j in range(1, p + 1)]
    return CentralCharacter.from_values(values)


def _slice_eigenvalue(module: ModuleRep, mat: Matrix, slice_dim: int) -> Scalar:
    """Scalar by which mat acts on the leading slice of the basis, exactly."""
    value = None
    for col in range(slice_dim):
        column = mat.column(col)
        for row, entry in enumerate(column):
            if row >= slice_dim and entry:
                raise ValueError("operator does not preserve the St slice")
        for row in range(slice_dim):
            expected = column[row]
            if row == col:
                if value is None:
                    value = expected
                elif expected != value:
                    raise ValueError("non-scalar action on the St slice")
            elif expected:
                raise ValueError("non-scalar action on the St slice")
    return value if value is not None else ZERO


def central_character(module: ModuleRep) -> CentralCharacter:
    """The multiset of x_i^2 eigenvalues of a quasisimple module.

    Each pi(x_i^2) must act as a scalar either on the whole module or (for
    induced modules) on the 1 (x) St_lambda slice; quasisimplicity is
    additionally witnessed by whole-module scalarity of the first two
    elementary symmetric functions of the x_j^2.
    """
    if module.params is None:
        raise ValueError("module has no polynomial action")
    n = module.params.n
    squares = [module.gen(f"x{i}") * module.gen(f"x{i}") for i in range(1, n + 1)]
    values = []
    slice_dim = (1 << n) if module.kind == "induced" else module.dim
    for i, sq in enumerate(squares, start=1):
        scalar = sq.scalar_value()
        if scalar is None:
            try:
                scalar = _slice_eigenvalue(module, sq, slice_dim)
            except ValueError as exc:
                raise ValueError(f"x_{i}^2 acts non-scalar: not quasisimple") from exc
        values.append(scalar)
    # Symmetric combinations must be scalar on the whole module.
    e1 = Matrix.zeros(module.dim, module.dim)
    for sq in squares:
        e1 = e1 + sq
    e2 = Matrix.zeros(module.dim, module.dim)
    for a in range(n):
        for b in range(a + 1, n):
            e2 = e2 + squares[a] * squares[b]
    e1_scalar, e2_scalar = e1.scalar_value(), e2.scalar_value()
    if e1_scalar is None or e2_scalar is None:
        raise ValueError("symmetric functions of x_i^2 act non-scalar: not quasisimple")
    expect_e1 = sum(values, ZERO)
    expect_e2 = sum((values[a] * values[b] for a in range(n) for b in range(a + 1, n)), ZERO)
    if e1_scalar != expect_e1 or e2_scalar != expect_e2:
        raise ValueError("slice eigenvalues inconsistent with central action")
    return CentralCharacter.from_values(values)


# ---------------------------------------------------------------------------
# Spectra of Omega_Seg.


def char_poly(matrix: Matrix) -> list[Scalar]:
    """Characteristic polynomial coefficients [1, c_1, ..., c_n] (Faddeev-LeVerrier)."""
    n = matrix.nrows
    coeffs = [ONE]
    m = matrix
    for k in range(1, n + 1):
        c = -(m.trace() * Scalar(Fraction(1, k)))
        coeffs.append(c)
        if k < n:
            m = matrix * (m + Matrix.identity(n).scale(c))
    return coeffs


def _candidate_eigenvalues(params: AlgebraParams) -> list[Scalar]:
    ksq = params.k_long * params.k_long
    seen = []
    for mu in distinct_partitions(params.n):
        _, norm_sq, _ = phi_maps(mu)
        value = ksq * norm_sq
        if value not in seen:
            seen.append(value)
    if ZERO not in seen:
        seen.append(ZERO)
    return seen


def _spectrum_of(matrix: Matrix, candidates) -> tuple[list[tuple[Scalar, int]], bool]:
    """Eigenvalues found among candidates with multiplicities; flag completeness."""
    spectrum = []
    total = 0
    for value in candidates:
        shifted = matrix - Matrix.identity(matrix.nrows).scale(value)
        mult = Subspace.kernel(shifted).dim
        if mult:
            spectrum.append((value, mult))
            total += mult
    return spectrum, total == matrix.nrows


def omega_seg_spectrum(module: ModuleRep, subspace: Subspace) -> list[tuple[Scalar, int]]:
    """Exact eigenvalues of pi(Omega_Seg) restricted to a stable subspace."""
    _, omega_seg = casimirs(module.params)
    mat = module.act(omega_seg)
    if not subspace.is_invariant(mat):
        raise ValueError("subspace is not Omega_Seg stable")
    restricted = subspace.restricted_matrix(mat)
    spectrum, complete = _spectrum_of(restricted, _candidate_eigenvalues(module.params))
    if not complete:
        raise ValueError(
            "eigenvalues outside the candidate table; characteristic polynomial "
            f"{[c.compact() for c in char_poly(restricted)]}"
        )
    return spectrum


@dataclass
class CohomologyReport:
    """Exact dimensions and Omega_Seg data for H_D of one module."""

    module: dict
    lam: str | None
    k: str
    dim_ker: int
    dim_im: int
    dim_im_cap_ker: int
    dim_hd: int
    ker_equals_ker_sq: bool
    spectrum: list[tuple[Scalar, int]]
    spectrum_complete: bool
    matched_partition: list[str]
    representatives: list[int] = field(default_factory=list)
    status: str = "pass"

    def to_json(self) -> dict:
        return {
            "module": self.module,
            "lambda": self.lam,
            "k": self.k,
            "dim_ker": self.dim_ker,
            "dim_im": self.dim_im,
            "dim_im_cap_ker": self.dim_im_cap_ker,
            "dim_HD": self.dim_hd,
            "ker_equals_ker_sq": self.ker_equals_ker_sq,
            "omega_seg_spectrum": [[v.compact(), m] for v, m in self.spectrum],
            "spectrum_complete": self.spectrum_complete,
            "matched_partition": self.matched_partition,
            "status": self.status,
        }


def _seg_generator_keys(module: ModuleRep) -> list[str]:
    keys = [f"c{i}" for i in range(1, module.params.n + 1)]
    keys += [k for k in module.gens if k.startswith("s")]
    return keys


def dirac_cohomology(module: ModuleRep) -> CohomologyReport:
    """ker pi(D) / (ker cap im), with Seg-stability verified before quotienting."""
    params = module.params
    d_mat = module.act(dirac_element(params))
    ker = Subspace.kernel(d_mat)
    im = Subspace.image(d_mat)
    inter = ker.intersect(im)
    for key in _seg_generator_keys(module):
        mat = module.gen(key)
        if not (ker.is_invariant(mat) and inter.is_invariant(mat)):
            raise AssertionError(f"Seg generator {key} does not stabilise H_D data")
    ker_sq = Subspace.kernel(d_mat * d_mat)
    _, omega_seg = casimirs(params)
    omega_mat = module.act(omega_seg)
    quotient, rep_idx = quotient_matrix(omega_mat, ker, inter)
    spectrum, complete = _spectrum_of(quotient, _candidate_eigenvalues(params))
    ksq = params.k_long * params.k_long
    matched = []
    for mu in distinct_partitions(params.n):
        _, norm_sq, _ = phi_maps(mu)
        if any(value == ksq * norm_sq for value, _ in spectrum):
            matched.append(str(mu))
    return CohomologyReport(
        module=module.summary(),
        lam=str(module.lam) if module.lam is not None else None,
        k=params.k_long.compact(),
        dim_ker=ker.dim,
        dim_im=im.dim,
        dim_im_cap_ker=inter.dim,
        dim_hd=ker.dim - inter.dim,
        ker_equals_ker_sq=(ker.dim == ker_sq.dim),
        spectrum=spectrum,
        spectrum_complete=complete,
        matched_partition=matched,
        representatives=rep_idx,
        status="pass" if complete else "incomplete",
    )


def verify_vogan(lam: Partition, k: Scalar) -> dict:
    """The computational content of the Vogan-type theorem on X_lambda."""
    if not lam.has_distinct_parts():
        raise ValueError("verify_vogan requires a distinct-part partition")
    if not k:
        raise ValueError("verify_vogan requires k != 0")
    module = induced_module(lam, k)
    report = dirac_cohomology(module)
    omega_h, _ = casimirs(module.params)
    chi_omega_h = module.act(omega_h).scalar_value()
    _, norm1_sq, norm2_sq = phi_maps(lam)
    expected = k * k * norm2_sq

    checks = {
        "hd_nonzero": report.dim_hd > 0,
        "ker_equals_ker_sq": report.ker_equals_ker_sq,
        "ker_cap_im_zero": report.dim_im_cap_ker == 0,
        "omega_h_scalar": chi_omega_h is not None,
        "single_eigenvalue": len(report.spectrum) == 1 and report.spectrum_complete,
        "eigenvalue_matches_norm": all(v == expected for v, _ in report.spectrum),
        "eigenvalue_matches_chi": chi_omega_h is not None
        and all(v == chi_omega_h for v, _ in report.spectrum),
        "label_recovers_lambda": report.matched_partition == [str(lam)],
    }
    return {
        "check": "vogan_consistency",
        "lambda": str(lam),
        "k": k.compact(),
        "dim_HD": report.dim_hd,
        "omega_seg_spectrum": [[v.compact(), m] for v, m in report.spectrum],
        "chi_omega_h": chi_omega_h.compact() if chi_omega_h is not None else None,
        "expected_eigenvalue": expected.compact(),
        "norms_sq": norm1_sq,
        "checks": checks,
        "status": "pass" if all(checks.values()) else "fail",
    }
