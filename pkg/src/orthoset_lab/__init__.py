"""Exact Hermitian linear algebra over involutive skew fields, the ray-level
orthogonality structures it induces, and constructive two-way translation
between maps on the two sides."""

from .errors import (
    CertificateError,
    DependencyError,
    InconsistencyError,
    InconsistentFixedSubspaceError,
    InputError,
    NotInducedError,
    NotOrthoisoError,
    NotPartialOrthometryError,
    OrthogonalityViolationError,
    OrthosetLabError,
    ParseError,
    PreconditionError,
    TransportDegeneracyError,
    UnsupportedVariantError,
)
from .scalars import GaussianRational, Rational, RationalQuaternion
from .starfields import (
    SfieldMorphism,
    StarSfield,
    apply_morphism,
    compose_morphisms,
    invert_morphism,
)
from .hermspace import (
    HermitianSpace,
    PartialIsometryDescriptor,
    SemilinearMap,
    Subspace,
    SubspaceFrame,
    Vector,
    adjoint_linear,
    compose_maps,
    dual_representative,
    generalized_inverse,
    gram_schmidt,
    herm_form,
    invert_semilinear,
    is_quasiunitary,
    make_partial_isometry,
    orthocomplement,
    project,
    quasi_generalized_inverse,
    standard_space,
)
from .orthoset import (
    ProbeSet,
    Ray,
    RayMap,
    check_axioms,
    dacey_witness,
    frechet_check,
    linearity_witness,
    perp_closure,
    probe_rays_in,
    ray_map_rank,
    ray_of,
    ray_perp,
    verify_adjoint_pair,
)
from .correspondence import (
    CoordinatizationResult,
    PartialOrthometryDecomposition,
    TransportResult,
    WignerResult,
    coordinatize,
    decompose_partial_orthometry,
    fix_subspace_normalize,
    induce,
    partial_wigner,
    piziak_lambda,
    scalar_ratio,
    transport_linear,
    transport_partial,
    transport_unitary,
    wigner_reconstruct,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
