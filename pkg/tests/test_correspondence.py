import random
from fractions import Fraction as F

import pytest

from orthoset_lab.correspondence import (
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
from orthoset_lab.errors import (
    InputError,
    NotInducedError,
    NotOrthoisoError,
    NotPartialOrthometryError,
    OrthogonalityViolationError,
    PreconditionError,
)
from orthoset_lab.hermspace import (
    HermitianSpace,
    SemilinearMap,
    Subspace,
    adjoint_linear,
    compose_maps,
    generalized_inverse,
    invert_semilinear,
    is_quasiunitary,
    quasi_generalized_inverse,
    standard_space,
)
from orthoset_lab.orthoset import ProbeSet, Ray, RayMap, ray_of
from orthoset_lab.sampling import (
    conjugation_map,
    left_scalar_map,
    random_linear_map,
    random_partial_isometry,
    random_quasiunitary,
)
from orthoset_lab.scalars import GaussianRational as GR, RationalQuaternion as RQ
from orthoset_lab.starfields import SfieldMorphism, StarSfield

Q, QI, HQ = StarSfield.Q, StarSfield.QI, StarSfield.HQ


def shear_map(space):
    return SemilinearMap(
        space, space, SfieldMorphism.identity(space.sfield),
        tuple([space.basis_vector(0), space.basis_vector(0) + space.basis_vector(1)]
              + [space.basis_vector(i) for i in range(2, space.dim)]))


# ----------------------------------------------------------------- induce

def test_induce_examples():
    q2 = standard_space(Q, 2)
    zero_map = induce(SemilinearMap.zero(q2, q2))
    x = ray_of(q2.vector([1, 1]))
    assert zero_map(x).is_zero
    tripled = induce(SemilinearMap.identity(q2).scale(F(3)))
    assert tripled(x) == x
    f = induce(shear_map(q2))
    assert f(ray_of(q2.vector([0, 1]))) == ray_of(q2.vector([1, 1]))


@pytest.mark.parametrize("sf", list(StarSfield))
def test_induce_functorial(sf, rng):
    sp = standard_space(sf, 3)
    phi = random_linear_map(sp, sp, rng)
    psi = random_linear_map(sp, sp, rng)
    lhs = induce(compose_maps(phi, psi))
    rhs_inner, rhs_outer = induce(psi), induce(phi)
    ident = induce(SemilinearMap.identity(sp))
    for x in ProbeSet.generate(sp, seed=4, count=24):
        assert lhs(x) == rhs_outer(rhs_inner(x))
        assert ident(x) == x


@pytest.mark.parametrize("sf", list(StarSfield))
def test_induced_maps_agree_exactly_for_left_multiples(sf, rng):
    # rescaling by a scalar never changes the induced ray map, and maps
    # that are not scalar multiples are told apart by some probe ray
    sp = standard_space(sf, 3)
    phi = random_linear_map(sp, sp, rng)
    while phi.rank < 2:
        phi = random_linear_map(sp, sp, rng)
    kappa = sp.sfield.random_nonzero_scalar(rng)
    psi = phi.scale(kappa)
    probes = ProbeSet.generate(sp, seed=8, count=32)
    f, g = induce(phi), induce(psi)
    assert all(f(x) == g(x) for x in probes)
    tweaked = SemilinearMap(
        sp, sp, phi.sigma,
        (phi.images[0] + sp.basis_vector(0),) + phi.images[1:])
    if scalar_ratio(tweaked, phi) is None:
        h = induce(tweaked)
        assert any(f(x) != h(x) for x in probes)


# ----------------------------------------------------------- scalar_ratio

def test_scalar_ratio_examples(rng):
    q2 = standard_space(Q, 2)
    phi = random_linear_map(q2, q2, rng)
    while phi.rank < 2:
        phi = random_linear_map(q2, q2, rng)
    assert scalar_ratio(phi, phi) == F(1)
    assert scalar_ratio(phi.scale(F(5)), phi) == F(5)
    other = shear_map(q2)
    assert scalar_ratio(other, phi) is None


def test_scalar_ratio_checks_twist_over_hq():
    hq2 = standard_space(HQ, 2)
    phi = SemilinearMap.identity(hq2)
    kappa = RQ(1, 2, 0, 1)
    assert scalar_ratio(phi.scale(kappa), phi) == kappa
    # same images but an undeclared twist is not a left multiple
    fake = SemilinearMap(hq2, hq2, SfieldMorphism.identity(HQ),
                         phi.scale(kappa).images)
    assert scalar_ratio(fake, phi) is None


def test_scalar_ratio_rank_precondition():
    q2 = standard_space(Q, 2)
    rank1 = SemilinearMap(q2, q2, SfieldMorphism.identity(Q),
                          (q2.vector([1, 0]), q2.vector([2, 0])))
    with pytest.raises(PreconditionError):
        scalar_ratio(rank1, rank1)


# ----------------------------------------------------------------- piziak

def test_piziak_examples():
    q2 = standard_space(Q, 2)
    assert piziak_lambda(SemilinearMap.identity(q2)) == F(1)
    assert piziak_lambda(SemilinearMap.identity(q2).scale(F(2))) == F(4)
    hq2 = standard_space(HQ, 2)
    phi = left_scalar_map(hq2, RQ(1, 1, 0, 0))
    assert piziak_lambda(phi) == RQ(2)


def test_piziak_rejects_orthogonality_violations():
    q2 = standard_space(Q, 2)
    with pytest.raises(OrthogonalityViolationError) as err:
        piziak_lambda(shear_map(q2))
    assert err.value.witness is not None


def test_piziak_probe_precheck():
    q3 = standard_space(Q, 3)
    probes = ProbeSet.generate(q3, seed=0, count=32)
    lam = piziak_lambda(SemilinearMap.identity(q3).scale(F(-3)), probes)
    assert lam == F(9)
    with pytest.raises(OrthogonalityViolationError):
        piziak_lambda(shear_map(q3), probes)


def test_piziak_dimension_precondition():
    q1 = standard_space(Q, 1)
    with pytest.raises(PreconditionError):
        piziak_lambda(SemilinearMap.identity(q1))


@pytest.mark.parametrize("sf", list(StarSfield))
def test_piziak_matches_certificate(sf, rng):
    for _ in range(5):
        sp = standard_space(sf, 3)
        phi = random_quasiunitary(sp, rng)
        sigma, lam = is_quasiunitary(phi)
        assert piziak_lambda(phi) == lam


# -------------------------------------------------------------- transport

def test_transport_linear_identity_twist():
    q2 = standard_space(Q, 2)
    phi = shear_map(q2)
    tr = transport_linear(phi)
    assert tr.new_space == q2
    assert tr.composed == phi


def test_transport_linear_conjugation():
    qi2 = standard_space(QI, 2)
    phi = compose_maps(conjugation_map(qi2), shear_map(qi2))
    tr = transport_linear(phi)
    assert tr.new_space.gram == qi2.gram  # rational entries are conj-fixed
    assert tr.composed.is_linear
    # the composed map applies the same vectors through re-coordinatization
    u = qi2.vector([GR(1, 2), GR(0, 1)])
    assert tr.composed.apply(u) == tr.tau.apply(phi.apply(u))


def test_transport_linear_inner_twist():
    hq2 = standard_space(HQ, 2)
    phi = left_scalar_map(hq2, RQ(0, 1, 1, 0))
    tr = transport_linear(phi)
    assert tr.composed.is_linear
    assert tr.new_space.gram == hq2.gram


def test_transport_unitary_trivial_case():
    q2 = standard_space(Q, 2)
    phi = SemilinearMap.identity(q2)
    tr = transport_unitary(phi, SfieldMorphism.identity(Q), F(1))
    assert tr.new_space == q2 and tr.composed == phi


def test_transport_unitary_scaled_example():
    q2 = standard_space(Q, 2)
    phi = SemilinearMap.identity(q2).scale(F(2))
    tr = transport_unitary(phi, SfieldMorphism.identity(Q), F(4))
    assert tr.new_space.gram == ((F(1, 4), F(0)), (F(0), F(1, 4)))
    cert = is_quasiunitary(tr.composed)
    assert cert == (SfieldMorphism.identity(Q), F(1))


def test_transport_unitary_quaternion_example():
    hq2 = standard_space(HQ, 2)
    q = RQ(1, 1, 0, 0)
    phi = left_scalar_map(hq2, q)
    sigma, lam = is_quasiunitary(phi)
    assert lam == RQ(2)
    tr = transport_unitary(phi, sigma, lam)
    assert tr.new_space.gram[0][0] == RQ(F(1, 2))
    assert is_quasiunitary(tr.composed)[1] == RQ(1)


def test_transport_unitary_rejects_wrong_certificate():
    q2 = standard_space(Q, 2)
    phi = SemilinearMap.identity(q2).scale(F(2))
    with pytest.raises(InputError):
        transport_unitary(phi, SfieldMorphism.identity(Q), F(2))
    with pytest.raises(InputError):
        transport_unitary(shear_map(q2), SfieldMorphism.identity(Q), F(1))


# ----------------------------------------------------------- coordinatize

def test_coordinatize_identity_oracle():
    q3 = standard_space(Q, 3)
    ident = SemilinearMap.identity(q3)
    probes = ProbeSet.generate(q3, seed=0, count=48)
    result = coordinatize(induce(ident), q3, q3, probes,
                          adjoint=induce(ident))
    assert result.sigma.is_identity
    assert scalar_ratio(result.map, ident) is not None


@pytest.mark.parametrize("sf", list(StarSfield))
def test_coordinatize_round_trip_with_adjoint(sf, rng):
    sp = standard_space(sf, 3)
    phi = random_linear_map(sp, sp, rng)
    while phi.rank < 3:
        phi = random_linear_map(sp, sp, rng)
    probes = ProbeSet.generate(sp, seed=1, count=48)
    result = coordinatize(induce(phi), sp, sp, probes,
                          adjoint=induce(adjoint_linear(phi)))
    assert scalar_ratio(result.map, phi) is not None


@pytest.mark.parametrize("sf", list(StarSfield))
def test_coordinatize_between_different_dimensions(sf, rng):
    h1, h2 = standard_space(sf, 3), standard_space(sf, 5)
    while True:
        phi = random_linear_map(h1, h2, rng)
        if phi.rank == 3:
            break
    probes = ProbeSet.generate(h1, seed=9, count=48)
    result = coordinatize(induce(phi), h1, h2, probes,
                          adjoint=induce(adjoint_linear(phi)))
    assert scalar_ratio(result.map, phi) is not None


def test_wigner_on_weighted_gram(rng):
    space = HermitianSpace.create(Q, 3, [[2, 1, 0], [1, 1, 0], [0, 0, 3]])
    phi0 = random_quasiunitary(space, rng)
    probes = ProbeSet.generate(space, seed=4, count=48)
    wig = wigner_reconstruct(induce(phi0), induce(invert_semilinear(phi0)),
                             space, space, probes)
    assert scalar_ratio(wig.coordinatization.map, phi0) is not None


def test_coordinatize_requires_kernel_knowledge():
    q3 = standard_space(Q, 3)
    probes = ProbeSet.generate(q3, seed=0, count=32)
    with pytest.raises(InputError):
        coordinatize(induce(SemilinearMap.identity(q3)), q3, q3, probes)


def test_coordinatize_rank_precondition():
    q3 = standard_space(Q, 3)
    rank2 = SemilinearMap(q3, q3, SfieldMorphism.identity(Q),
                          (q3.vector([1, 0, 0]), q3.vector([0, 1, 0]),
                           q3.zero_vector()))
    probes = ProbeSet.generate(q3, seed=0, count=32)
    with pytest.raises(PreconditionError):
        coordinatize(induce(rank2), q3, q3, probes,
                     adjoint=induce(adjoint_linear(rank2)))


def test_coordinatize_detects_non_induced_oracle():
    q3 = standard_space(Q, 3)

    def squares(x):
        if x.is_zero:
            return Ray.zero(q3)
        return ray_of(q3.vector([c * c for c in x.rep.coords]))

    oracle = RayMap.from_oracle(q3, q3, squares)
    probes = ProbeSet.generate(q3, seed=0, count=48)
    with pytest.raises(NotInducedError):
        coordinatize(oracle, q3, q3, probes, injective=True)


def test_coordinatize_partial_map_with_kernel_complement():
    q4 = standard_space(Q, 4)
    d, _ = random_partial_isometry(q4, q4, 3, random.Random(8))
    probes = ProbeSet.generate(q4, seed=2, count=48)
    result = coordinatize(induce(d.map), q4, q4, probes,
                          adjoint=induce(quasi_generalized_inverse(d)))
    assert scalar_ratio(result.map, d.map) is not None
    assert result.map.rank == 3
    for v in d.s1.orthocomplement().basis:
        assert result.map.apply(v).is_zero


# --------------------------------------------------------------- wigner

def test_wigner_identity_and_permutation():
    q3 = standard_space(Q, 3)
    probes = ProbeSet.generate(q3, seed=0, count=48)
    ident = SemilinearMap.identity(q3)
    wig = wigner_reconstruct(induce(ident), induce(ident), q3, q3, probes)
    assert wig.lam == F(1) and wig.sigma.is_identity
    perm = SemilinearMap(q3, q3, SfieldMorphism.identity(Q),
                         (q3.basis_vector(1), q3.basis_vector(2),
                          q3.basis_vector(0)))
    wigp = wigner_reconstruct(induce(perm), induce(invert_semilinear(perm)),
                              q3, q3, probes)
    assert wigp.lam == F(1)
    assert scalar_ratio(wigp.coordinatization.map, perm) is not None


@pytest.mark.parametrize("sf", list(StarSfield))
def test_wigner_round_trip(sf, rng):
    for _ in range(3):
        sp = standard_space(sf, rng.randint(3, 4))
        phi0 = random_quasiunitary(sp, rng)
        probes = ProbeSet.generate(sp, seed=5, count=48)
        wig = wigner_reconstruct(induce(phi0), induce(invert_semilinear(phi0)),
                                 sp, sp, probes)
        assert scalar_ratio(wig.coordinatization.map, phi0) is not None
        assert is_quasiunitary(wig.coordinatization.map) is not None


def test_wigner_negative_control_shear():
    q3 = standard_space(Q, 3)
    shear = shear_map(q3)
    probes = ProbeSet.generate(q3, seed=0, count=48)
    with pytest.raises(NotOrthoisoError) as err:
        wigner_reconstruct(induce(shear), induce(invert_semilinear(shear)),
                           q3, q3, probes)
    assert err.value.witness is not None


def test_wigner_dimension_precondition():
    q2 = standard_space(Q, 2)
    ident = SemilinearMap.identity(q2)
    with pytest.raises(PreconditionError):
        wigner_reconstruct(induce(ident), induce(ident), q2, q2,
                           ProbeSet.generate(q2, seed=0, count=16))


# ------------------------------------------------- fixed-subspace pinning

def test_fix_subspace_identity():
    q3 = standard_space(Q, 3)
    s = Subspace.from_vectors(q3, [q3.basis_vector(0), q3.basis_vector(1)])
    ident = SemilinearMap.identity(q3)
    probes = ProbeSet.generate(q3, seed=0, count=48)
    phi = fix_subspace_normalize(induce(ident), s, probes, induce(ident))
    assert phi == ident


def test_fix_subspace_sign_flip():
    q3 = standard_space(Q, 3)
    s = Subspace.from_vectors(q3, [q3.basis_vector(0), q3.basis_vector(1)])
    flip = SemilinearMap(q3, q3, SfieldMorphism.identity(Q),
                         (q3.basis_vector(0), q3.basis_vector(1),
                          -q3.basis_vector(2)))
    probes = ProbeSet.generate(q3, seed=0, count=48)
    phi = fix_subspace_normalize(induce(flip), s, probes, induce(flip))
    assert phi == flip  # reconstruction normalizes back to the flip itself


def test_fix_subspace_global_scaling_gives_identity():
    q3 = standard_space(Q, 3)
    s = Subspace.from_vectors(q3, [q3.basis_vector(0), q3.basis_vector(1)])
    doubled = SemilinearMap.identity(q3).scale(F(2))
    probes = ProbeSet.generate(q3, seed=0, count=48)
    phi = fix_subspace_normalize(induce(doubled), s, probes, induce(doubled))
    assert phi == SemilinearMap.identity(q3)


def test_fix_subspace_rejects_moving_map():
    q3 = standard_space(Q, 3)
    s = Subspace.from_vectors(q3, [q3.basis_vector(0), q3.basis_vector(1)])
    perm = SemilinearMap(q3, q3, SfieldMorphism.identity(Q),
                         (q3.basis_vector(1), q3.basis_vector(0),
                          q3.basis_vector(2)))
    probes = ProbeSet.generate(q3, seed=0, count=48)
    with pytest.raises(InputError):
        fix_subspace_normalize(induce(perm), s, probes, induce(perm))


# ------------------------------------------------------ partial orthometry

def test_decompose_identity():
    q3 = standard_space(Q, 3)
    ident = induce(SemilinearMap.identity(q3))
    probes = ProbeSet.generate(q3, seed=0, count=32)
    dec = decompose_partial_orthometry(ident, ident, probes, probes)
    assert dec.a == Subspace.full(q3) and dec.b == Subspace.full(q3)
    for x in probes:
        assert dec.reassembled(x) == x


def test_decompose_shift_example():
    q3 = standard_space(Q, 3)
    s1 = Subspace.from_vectors(q3, [q3.basis_vector(0), q3.basis_vector(1)])
    s2 = Subspace.from_vectors(q3, [q3.basis_vector(1), q3.basis_vector(2)])
    core = SemilinearMap(s1.frame.space, s2.frame.space,
                         SfieldMorphism.identity(Q),
                         tuple(s2.frame.space.basis()))
    from orthoset_lab.hermspace import make_partial_isometry
    d = make_partial_isometry(s1, s2, core)
    probes = ProbeSet.generate(q3, seed=0, count=32)
    dec = decompose_partial_orthometry(
        induce(d.map), induce(generalized_inverse(d)), probes, probes)
    assert dec.a == s1 and dec.b == s2


def test_decompose_zero_map():
    q2 = standard_space(Q, 2)
    zero = induce(SemilinearMap.zero(q2, q2))
    probes = ProbeSet.generate(q2, seed=0, count=16)
    dec = decompose_partial_orthometry(zero, zero, probes, probes)
    assert dec.a == Subspace.zero(q2) and dec.b == Subspace.zero(q2)


def test_decompose_rejects_broken_adjoint():
    q2 = standard_space(Q, 2)
    shear = shear_map(q2)
    probes = ProbeSet.generate(q2, seed=0, count=24)
    with pytest.raises(NotPartialOrthometryError):
        decompose_partial_orthometry(induce(shear),
                                     induce(invert_semilinear(shear)),
                                     probes, probes)


@pytest.mark.parametrize("sf", list(StarSfield))
@pytest.mark.parametrize("quasi", [False, True])
def test_partial_wigner_round_trip(sf, quasi):
    rng = random.Random(f"pw:{sf.value}:{quasi}")
    h1, h2 = standard_space(sf, 5), standard_space(sf, 5)
    d, core0 = random_partial_isometry(h1, h2, 3, rng, quasi=quasi)
    f = induce(d.map)
    f_adj = induce(quasi_generalized_inverse(d))
    p1 = ProbeSet.generate(h1, seed=3, count=40)
    p2 = ProbeSet.generate(h2, seed=3, count=40)
    result = partial_wigner(f, f_adj, p1, p2)
    assert result.s1 == d.s1 and result.s2 == d.s2
    assert scalar_ratio(result.core, core0) is not None
    induced = induce(result.map)
    for x in p1:
        assert induced(x) == f(x)


def test_partial_wigner_identity_is_identity_isometry():
    q3 = standard_space(Q, 3)
    ident = induce(SemilinearMap.identity(q3))
    p = ProbeSet.generate(q3, seed=0, count=32)
    result = partial_wigner(ident, ident, p, p)
    assert result.s1 == Subspace.full(q3) == result.s2
    assert scalar_ratio(result.map, SemilinearMap.identity(q3)) is not None


def test_partial_wigner_small_core_rejected():
    q4 = standard_space(Q, 4)
    d, _ = random_partial_isometry(q4, q4, 2, random.Random(1))
    p = ProbeSet.generate(q4, seed=0, count=32)
    with pytest.raises(PreconditionError):
        partial_wigner(induce(d.map), induce(quasi_generalized_inverse(d)), p, p)


def test_transport_partial_yields_linear_unitary_core():
    hq5 = standard_space(HQ, 5)
    d, _ = random_partial_isometry(hq5, hq5, 3, random.Random(4), quasi=True)
    tr, linear_d = transport_partial(d)
    assert linear_d.map == tr.composed
    assert linear_d.core.is_linear
    assert generalized_inverse(linear_d) == adjoint_linear(linear_d.map)


def test_generalized_inverse_equals_adjoint_for_linear_partial():
    for sf in StarSfield:
        h = standard_space(sf, 4)
        d, _ = random_partial_isometry(h, h, 3, random.Random(f"gi:{sf.value}"))
        assert generalized_inverse(d) == adjoint_linear(d.map)
