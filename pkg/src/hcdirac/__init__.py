"""Exact Hecke-Clifford superalgebra engine with Dirac cohomology checks."""

from .scalars import Scalar, scalar_arith, scalar_embed
from .weyl import Root, RootSystemCtx, SignedPerm
from .engine import (
    AlgebraParams,
    AlgElem,
    Algebra,
    algebra_for,
    check_pbw_consistency,
    generator,
    linear_combine,
    multiply,
    parity,
    supercommutator,
)
from .dirac import (
    DiracBundle,
    casimirs,
    dirac_bundle,
    dirac_element,
    dressed_generators,
    twisted_reflection,
    verify_identities,
)
from .linalg import Matrix, Subspace
from .partitions import Partition, all_partitions, distinct_partitions, phi_maps
from .modules import (
    ModuleRep,
    act_matrix,
    check_module_relations,
    clifford_supermodule,
    hermitian_form,
    induced_module,
    steinberg_module,
    subspace_ops,
)
from .cohomology import (
    CentralCharacter,
    CohomologyReport,
    central_character,
    dirac_cohomology,
    omega_seg_spectrum,
    verify_vogan,
)
from .centers import (
    jucys_murphy,
    seg_even_center,
    verify_zeta_surjective,
    zeta_on_dirac,
    zeta_on_power_sums,
)
from .cli import report_schema_version

REPORT_SCHEMA_VERSION = "1.0.0"

__version__ = "1.0.0"
