"""Dirac cohomology, central characters, phi maps, and the Vogan check."""

from __future__ import annotations

from fractions import Fraction

import pytest

from hcdirac.cohomology import (
    CentralCharacter,
    central_character,
    char_poly,
    dirac_cohomology,
    expected_central_character,
    omega_seg_spectrum,
    verify_vogan,
)
from hcdirac.engine import AlgebraParams
from hcdirac.linalg import Matrix, Subspace
from hcdirac.modules import induced_module, steinberg_module
from hcdirac.partitions import Partition, all_partitions, distinct_partitions, phi_maps
from hcdirac.scalars import HALF, ONE, SQRT2, TWO, ZERO, Scalar

HALF_K = Scalar(Fraction(1, 2))

_MODULES: dict = {}


def cached_module(parts, k):
    key = (parts, k)
    if key not in _MODULES:
        _MODULES[key] = induced_module(Partition(parts), k)
    return _MODULES[key]


def test_distinct_partitions_order():
    assert [str(p) for p in distinct_partitions(3)] == ["3", "2,1"]
    assert [str(p) for p in distinct_partitions(4)] == ["4", "3,1"]
    assert [str(p) for p in distinct_partitions(5)] == ["5", "4,1", "3,2"]


def test_partition_parse_and_validation():
    assert Partition.parse("3,1").parts == (3, 1)
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((0,))


def test_phi_map_examples():
    assert phi_maps(Partition((3,))) == ((-2, 0, 2), 8, 8)
    assert phi_maps(Partition((2, 1))) == ((-1, 1, 0), 2, 2)
    assert phi_maps(Partition((1, 1, 1))) == ((0, 0, 0), 0, 0)
    assert phi_maps(Partition((3, 1)))[1] == 8
    assert phi_maps(Partition((4,)))[1] == 20


def test_phi_norm_identity_up_to_eight():
    for n in range(1, 9):
        for lam in all_partitions(n):
            phi1, n1, n2 = phi_maps(lam)
            assert n1 == n2 == sum((p - 1) * p * (p + 1) for p in lam.parts) // 3


def test_phi_table_distinct_for_small_n():
    # eigenvalue-based labelling is unambiguous for n <= 5
    for n in range(1, 6):
        norms = [phi_maps(mu)[1] for mu in distinct_partitions(n)]
        assert len(set(norms)) == len(norms)


def test_central_character_examples():
    assert central_character(cached_module((2, 1), ONE)) == CentralCharacter.from_values(
        [ZERO, TWO, ZERO]
    )
    assert central_character(cached_module((3,), ONE)) == CentralCharacter.from_values(
        [ZERO, TWO, Scalar(6)]
    )
    assert central_character(cached_module((2, 1), ZERO)) == CentralCharacter.from_values(
        [ZERO, ZERO, ZERO]
    )
    assert expected_central_character(Partition((2, 1)), ONE) == central_character(
        cached_module((2, 1), ONE)
    )


def test_central_character_scales_with_k_squared():
    cc = central_character(cached_module((2,), HALF_K))
    assert cc == CentralCharacter.from_values([ZERO, HALF_K * HALF_K * 2])


def test_dirac_cohomology_on_steinberg():
    for n in (1, 2, 3):
        p = AlgebraParams("A", n, ONE)
        st = steinberg_module(p)
        report = dirac_cohomology(st)
        assert report.dim_hd == st.dim  # D = 0
        assert report.dim_im == 0
        assert report.spectrum_complete


def test_dirac_cohomology_rank_one_induced():
    module = cached_module((1,), ONE)
    report = dirac_cohomology(module)
    assert report.dim_hd == 2
    assert report.spectrum == [(ZERO, 2)]


def test_dirac_cohomology_x21():
    report = dirac_cohomology(cached_module((2, 1), ONE))
    assert report.dim_ker == 8
    assert report.dim_im_cap_ker == 0
    assert report.dim_hd == 8
    assert report.ker_equals_ker_sq
    assert report.spectrum == [(TWO, 8)]
    assert report.matched_partition == ["2,1"]
    json_form = report.to_json()
    assert json_form["omega_seg_spectrum"] == [["2", 8]]
    assert json_form["dim_HD"] == 8


def test_non_distinct_partition_pipeline_runs():
    report = dirac_cohomology(cached_module((1, 1), ONE))
    assert report.dim_hd >= 0  # recorded, not asserted
    assert report.spectrum_complete


def test_hd_dimension_stable_under_k():
    for parts in ((2, 1), (3,)):
        dims = set()
        for k in (ONE, HALF_K):
            dims.add(dirac_cohomology(cached_module(parts, k)).dim_hd)
        assert len(dims) == 1


def test_omega_seg_spectrum_on_subspaces():
    module = cached_module((2, 1), ONE)
    from hcdirac.dirac import dirac_element

    d_mat = module.act(dirac_element(module.params))
    ker = Subspace.kernel(d_mat)
    spectrum = omega_seg_spectrum(module, ker)
    assert spectrum == [(TWO, 8)]
    # whole module at k = 0: Omega_Seg vanishes
    module0 = cached_module((2,), ZERO)
    full = Subspace.full(module0.dim)
    assert omega_seg_spectrum(module0, full) == [(ZERO, module0.dim)]


def test_omega_seg_spectrum_requires_stability():
    module = cached_module((2, 1), ONE)
    bad = Subspace.from_vectors([tuple([ONE] + [ZERO] * (module.dim - 1))], module.dim)
    with pytest.raises(ValueError):
        omega_seg_spectrum(module, bad)


def test_char_poly_of_diagonal():
    m = Matrix([[ONE, ZERO], [ZERO, TWO]])
    coeffs = char_poly(m)
    # t^2 - 3t + 2
    assert coeffs == [ONE, Scalar(-3), TWO]


@pytest.mark.parametrize("parts", [(2, 1), (3,)])
@pytest.mark.parametrize("k", [ONE, HALF_K])
def test_verify_vogan_small(parts, k):
    report = verify_vogan(Partition(parts), k)
    assert report["status"] == "pass", report
    assert report["dim_HD"] > 0


def test_verify_vogan_preconditions():
    with pytest.raises(ValueError):
        verify_vogan(Partition((1, 1)), ONE)
    with pytest.raises(ValueError):
        verify_vogan(Partition((2,)), ZERO)


def test_verify_vogan_eigenvalue_values():
    assert verify_vogan(Partition((2, 1)), ONE)["omega_seg_spectrum"] == [["2", 8]]
    assert verify_vogan(Partition((3,)), ONE)["omega_seg_spectrum"] == [["8", 8]]
