"""Finite-dimensional Hermitian spaces over the supported *-sfields.

Vectors are rows under a left scalar action and forms follow the convention

    <u, v> = sum_ij u_i * G_ij * star(v_j),

linear in the first argument, star-twisted in the second.  Every space
carries an anisotropy certificate checked at construction: over Q and Qi the
leading principal minors of the Gram matrix must be positive rationals, over
HQ the Gram matrix must be diagonal with positive rational entries.  This is
deliberately stronger than anisotropy itself, which is undecidable-in-
practice for arbitrary rational forms without heavy machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import linalg
from .errors import (
    CertificateError,
    DependencyError,
    InputError,
    UnsupportedVariantError,
)
from .scalars import inv_scalar, star_scalar
from .starfields import SfieldMorphism, StarSfield


def _det_commutative(rows):
    """Determinant over a commutative field (Q or Qi entries)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [list(r) for r in rows]
    sign = 1
    det = None
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return m[0][0] - m[0][0]
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        p = m[c][c]
        det = p if det is None else det * p
        p_inv = inv_scalar(p)
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * p_inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det if sign > 0 else -det


def _is_positive_rational(x) -> bool:
    if isinstance(x, Fraction):
        return x > 0
    if isinstance(x, int):
        return x > 0
    # Gaussian rational or quaternion: must be central and positive
    if hasattr(x, "im"):
        return x.im == 0 and x.re > 0
    return x.is_central() and x.a > 0


@dataclass(frozen=True)
class HermitianSpace:
    sfield: StarSfield
    dim: int
    gram: tuple

    def __post_init__(self):
        n = self.dim
        if n < 0:
            raise InputError("dimension must be nonnegative")
        g = self.gram
        if len(g) != n or any(len(row) != n for row in g):
            raise InputError("Gram matrix shape does not match dimension")
        sf = self.sfield
        for row in g:
            for x in row:
                if not sf.is_member(x):
                    raise InputError(
                        f"Gram entry {x!r} is not a scalar of {sf.value}")
        for i in range(n):
            for j in range(i, n):
                if g[j][i] != star_scalar(g[i][j]):
                    raise CertificateError(
                        "Gram matrix is not Hermitian",
                        witness={"i": i, "j": j})
        if sf is StarSfield.HQ:
            for i in range(n):
                for j in range(n):
                    if i != j and g[i][j]:
                        raise CertificateError(
                            "HQ Gram matrices must be diagonal",
                            witness={"i": i, "j": j})
                if i == j and not _is_positive_rational(g[i][i]):
                    raise CertificateError(
                        "HQ Gram diagonal must be positive rational",
                        witness={"i": i})
        else:
            rows = [list(r) for r in g]
            for k in range(1, n + 1):
                minor = _det_commutative([row[:k] for row in rows[:k]])
                if not _is_positive_rational(minor):
                    raise CertificateError(
                        "leading principal minor is not a positive rational",
                        witness={"order": k, "minor": str(minor)})

    @classmethod
    def create(cls, sfield: StarSfield, dim: int, gram=None) -> "HermitianSpace":
        if gram is None:
            gram = tuple(
                tuple(sfield.coerce(1 if i == j else 0) for j in range(dim))
                for i in range(dim))
        else:
            gram = tuple(tuple(sfield.coerce(x) for x in row) for row in gram)
        return cls(sfield, dim, gram)

    @cached_property
    def _diag(self):
        """Diagonal entries when the Gram matrix is diagonal, else None."""
        n = self.dim
        for i in range(n):
            for j in range(n):
                if i != j and self.gram[i][j]:
                    return None
        return tuple(self.gram[i][i] for i in range(n))

    @cached_property
    def _is_identity_gram(self) -> bool:
        d = self._diag
        one = self.sfield.one()
        return d is not None and all(x == one for x in d)

    @cached_property
    def _cells(self):
        """Nonzero Gram cells (i, j, G_ij) for the general form path."""
        return tuple((i, j, self.gram[i][j])
                     for i in range(self.dim) for j in range(self.dim)
                     if self.gram[i][j])

    def form_coords(self, u, v):
        """<u, v> on raw coordinate tuples."""
        acc = None
        if self._is_identity_gram:
            for a, b in zip(u, v):
                if a and b:
                    term = a * star_scalar(b)
                    acc = term if acc is None else acc + term
        elif self._diag is not None:
            for a, g, b in zip(u, self._diag, v):
                if a and b:
                    term = a * g * star_scalar(b)
                    acc = term if acc is None else acc + term
        else:
            for i, j, g in self._cells:
                a, b = u[i], v[j]
                if a and b:
                    term = a * g * star_scalar(b)
                    acc = term if acc is None else acc + term
        return self.sfield.zero() if acc is None else acc

    def vector(self, coords) -> "Vector":
        return Vector(self, tuple(self.sfield.coerce(c) for c in coords))

    def zero_vector(self) -> "Vector":
        return self.vector([0] * self.dim)

    def basis_vector(self, i: int) -> "Vector":
        return self.vector([1 if j == i else 0 for j in range(self.dim)])

    def basis(self) -> list["Vector"]:
        return [self.basis_vector(i) for i in range(self.dim)]

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.sfield, self.dim, self.gram))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        tag = "std" if self._is_identity_gram else "gram"
        return f"HermitianSpace({self.sfield.value}, dim={self.dim}, {tag})"


def standard_space(sfield: StarSfield, dim: int) -> HermitianSpace:
    return HermitianSpace.create(sfield, dim)


@dataclass(frozen=True)
class Vector:
    space: HermitianSpace
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.space.dim:
            raise InputError("coordinate count does not match the space")

    def __hash__(self):
        # coords alone, cached: cheaper than hashing the space and still
        # consistent with the generated __eq__
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash(self.coords)
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        _same_space(self, other)
        return Vector(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        _same_space(self, other)
        return Vector(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vector":
        return Vector(self.space, tuple(-a for a in self.coords))

    def __rmul__(self, alpha) -> "Vector":
        alpha = self.space.sfield.coerce(alpha)
        return Vector(self.space, tuple(alpha * c for c in self.coords))

    def __repr__(self):
        return f"Vector({', '.join(str(c) for c in self.coords)})"


def _same_space(u, v):
    if u.space is not v.space and u.space != v.space:
        raise InputError("vectors live in different spaces")


def herm_form(u: Vector, v: Vector):
    """<u, v>: linear in u, star-twisted in v, <u, v> = star(<v, u>)."""
    _same_space(u, v)
    return u.space.form_coords(u.coords, v.coords)


def gram_schmidt(vectors) -> list[Vector]:
    """Orthogonalise while preserving the left span; the first vector is
    kept as is.  Dependent input raises DependencyError carrying a vanishing
    left combination of the inputs."""
    out: list[Vector] = []
    inv_norms = []
    combos: list[list] = []  # out[i] as left combination of the inputs
    for k, b in enumerate(vectors):
        if out:
            _same_space(out[0], b)
        e = b
        combo = [Fraction(1) if i == k else Fraction(0) for i in range(len(vectors))]
        for i, (o, inv_norm) in enumerate(zip(out, inv_norms)):
            f = herm_form(b, o) * inv_norm
            if f:
                e = e - f * o
                combo = [c - f * ci for c, ci in zip(combo, combos[i])]
        if e.is_zero:
            raise DependencyError(
                "input vectors are linearly dependent",
                witness={"combination": [str(c) for c in combo],
                         "index": k})
        out.append(e)
        inv_norms.append(inv_scalar(herm_form(e, e)))
        combos.append(combo)
    return out


@dataclass(frozen=True)
class Subspace:
    """A subspace held by its reduced left-row-echelon basis, which is the
    canonical representative: two subspaces are equal iff their bases are."""

    space: HermitianSpace
    basis: tuple

    def __post_init__(self):
        rows = [list(v.coords) for v in self.basis]
        reduced, pivots = linalg.rref(rows)
        if len(reduced) != len(rows) or any(
                list(v.coords) != r for v, r in zip(self.basis, reduced)):
            raise InputError("basis is not in reduced echelon form; "
                             "use Subspace.from_vectors")

    @classmethod
    def from_vectors(cls, space: HermitianSpace, vectors) -> "Subspace":
        rows = [list(v.coords) for v in vectors]
        reduced, _ = linalg.rref(rows)
        return cls(space, tuple(space.vector(r) for r in reduced))

    @classmethod
    def zero(cls, space: HermitianSpace) -> "Subspace":
        return cls(space, ())

    @classmethod
    def full(cls, space: HermitianSpace) -> "Subspace":
        return cls.from_vectors(space, space.basis())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, u: Vector) -> bool:
        _same_space_sub(self, u)
        return linalg.in_row_span([list(v.coords) for v in self.basis],
                                  list(u.coords))

    @cached_property
    def orthogonal_basis(self) -> tuple:
        return tuple(gram_schmidt(list(self.basis)))

    def orthocomplement(self) -> "Subspace":
        """All u with <v, u> = 0 for every v in this subspace; computed as a
        left kernel, using <u, v> = star(<v, u>) to put u on the left."""
        space = self.space
        n = space.dim
        g = space.gram
        cols = []
        for i in range(n):
            cols.append([
                _dot_gram_star(g, i, v.coords) for v in self.basis])
        kernel = linalg.left_kernel(cols) if self.basis else \
            [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        return Subspace.from_vectors(space, [space.vector(r) for r in kernel])

    def project(self, u: Vector) -> tuple[Vector, Vector]:
        """Split u = u_S + u_perp with u_S in S and u_perp orthogonal to S."""
        _same_space_sub(self, u)
        u_s = self.space.zero_vector()
        for o in self.orthogonal_basis:
            f = herm_form(u, o) * inv_scalar(herm_form(o, o))
            if f:
                u_s = u_s + f * o
        return u_s, u - u_s

    @cached_property
    def frame(self) -> "SubspaceFrame":
        return SubspaceFrame.for_subspace(self)

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.space!r})"


def _dot_gram_star(gram, i, vcoords):
    acc = None
    for j, vj in enumerate(vcoords):
        if vj and gram[i][j]:
            term = gram[i][j] * star_scalar(vj)
            acc = term if acc is None else acc + term
    return acc if acc is not None else _zero_of(vcoords, gram, i)


def _zero_of(vcoords, gram, i):
    for x in gram[i]:
        return x - x
    for x in vcoords:
        return x - x
    return Fraction(0)


def _same_space_sub(s: Subspace, u: Vector):
    if s.space is not u.space and s.space != u.space:
        raise InputError("vector lives outside the subspace's ambient space")


@dataclass(frozen=True)
class SubspaceFrame:
    """Orthogonal coordinates on a subspace.

    The frame space is a Hermitian space of the subspace's dimension whose
    Gram matrix is the diagonal of self-products of an orthogonal basis;
    it always satisfies the anisotropy certificate, over every sfield.
    """

    subspace: Subspace
    space: HermitianSpace
    vectors: tuple

    @classmethod
    def for_subspace(cls, s: Subspace) -> "SubspaceFrame":
        ortho = s.orthogonal_basis
        sf = s.space.sfield
        diag = tuple(
            tuple(herm_form(o, o) if i == j else sf.zero()
                  for j in range(len(ortho)))
            for i, o in enumerate(ortho))
        inner = HermitianSpace(sf, len(ortho), diag)
        return cls(s, inner, ortho)

    def to_ambient(self, v: Vector) -> Vector:
        if v.space != self.space:
            raise InputError("vector does not use this frame's coordinates")
        ambient = self.subspace.space
        acc = None
        for c, o in zip(v.coords, self.vectors):
            if not c:
                continue
            row = o.coords
            if acc is None:
                acc = [c * x for x in row]
            else:
                for k, x in enumerate(row):
                    if x:
                        acc[k] = acc[k] + c * x
        if acc is None:
            return ambient.zero_vector()
        return Vector(ambient, tuple(acc))

    @cached_property
    def _inv_norms(self):
        return tuple(inv_scalar(herm_form(o, o)) for o in self.vectors)

    def project_coords(self, u: Vector) -> Vector:
        """Frame coordinates of the orthogonal projection of u."""
        coords = tuple(herm_form(u, o) * n
                       for o, n in zip(self.vectors, self._inv_norms))
        return Vector(self.space, coords)

    def from_ambient(self, u: Vector) -> Vector:
        c = self.project_coords(u)
        if self.to_ambient(c) != u:
            raise InputError("vector does not lie in the subspace")
        return c


def orthocomplement(s: Subspace) -> Subspace:
    return s.orthocomplement()


def project(s: Subspace, u: Vector) -> tuple[Vector, Vector]:
    return s.project(u)


def dual_representative(space: HermitianSpace, rho) -> Vector:
    """The vector w with <u, w> = rho(u) for the functional
    rho(u) = sum_i u_i * rho_i."""
    rho = [space.sfield.coerce(x) for x in rho]
    if len(rho) != space.dim:
        raise InputError("functional coefficient count does not match")
    if not any(rho):
        return space.zero_vector()
    kernel = linalg.left_kernel([[x] for x in rho])
    ker_sub = Subspace.from_vectors(space, [space.vector(r) for r in kernel])
    line = ker_sub.orthocomplement()
    assert line.dim == 1
    x0 = line.basis[0]
    rho_x0 = None
    for c, r in zip(x0.coords, rho):
        term = c * r
        rho_x0 = term if rho_x0 is None else rho_x0 + term
    x = inv_scalar(rho_x0) * x0
    return inv_scalar(herm_form(x, x)) * x


@dataclass(frozen=True)
class SemilinearMap:
    """A map phi with phi(sum_i a_i e_i) = sum_i sigma(a_i) * images[i].

    Storing basis images keeps the twist on the input coefficients only,
    which avoids side ambiguity over the quaternions.  The map is linear
    exactly when sigma is the identity.
    """

    domain: HermitianSpace
    codomain: HermitianSpace
    sigma: SfieldMorphism
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.domain.dim:
            raise InputError("need one image per domain basis vector")
        for v in self.images:
            if v.space != self.codomain:
                raise InputError("images must live in the codomain")
        if self.sigma.sfield is not self.domain.sfield or \
                self.domain.sfield is not self.codomain.sfield:
            raise InputError("map and morphism sfields must agree")

    @classmethod
    def identity(cls, space: HermitianSpace) -> "SemilinearMap":
        return cls(space, space, SfieldMorphism.identity(space.sfield),
                   tuple(space.basis()))

    @classmethod
    def zero(cls, domain: HermitianSpace, codomain: HermitianSpace) -> "SemilinearMap":
        return cls(domain, codomain, SfieldMorphism.identity(domain.sfield),
                   tuple(codomain.zero_vector() for _ in range(domain.dim)))

    @property
    def is_linear(self) -> bool:
        return self.sigma.is_identity

    @cached_property
    def matrix(self):
        return [list(v.coords) for v in self.images]

    @cached_property
    def rank(self) -> int:
        return linalg.rank(self.matrix)

    def apply(self, u: Vector) -> Vector:
        if u.space is not self.domain and u.space != self.domain:
            raise InputError("vector is not in the map's domain")
        ident = self.sigma.is_identity
        acc = None
        for a, img in zip(u.coords, self.images):
            if not a:
                continue
            b = a if ident else self.sigma(a)
            row = img.coords
            if acc is None:
                acc = [b * c for c in row]
            else:
                for k, c in enumerate(row):
                    if c:
                        acc[k] = acc[k] + b * c
        if acc is None:
            return self.codomain.zero_vector()
        return Vector(self.codomain, tuple(acc))

    def scale(self, kappa) -> "SemilinearMap":
        """The left multiple kappa * phi; the associated morphism picks up
        an inner twist by kappa."""
        kappa = self.codomain.sfield.coerce(kappa)
        if not kappa:
            raise InputError("scale factor must be nonzero")
        return SemilinearMap(
            self.domain, self.codomain, self.sigma.twisted_by(kappa),
            tuple(kappa * v for v in self.images))

    def __repr__(self):
        return (f"SemilinearMap({self.domain!r} -> {self.codomain!r}, "
                f"sigma={self.sigma.kind})")


def compose_maps(outer: SemilinearMap, inner: SemilinearMap) -> SemilinearMap:
    """outer after inner."""
    if inner.codomain != outer.domain:
        raise InputError("maps do not compose")
    return SemilinearMap(
        inner.domain, outer.codomain,
        outer.sigma.compose(inner.sigma),
        tuple(outer.apply(v) for v in inner.images))


def invert_semilinear(phi: SemilinearMap) -> SemilinearMap:
    """The inverse of a bijective semilinear map; its morphism is sigma^-1."""
    if phi.domain.dim != phi.codomain.dim or phi.rank != phi.domain.dim:
        raise InputError("map is not bijective")
    m_inv = linalg.matrix_inverse(phi.matrix)
    sig_inv = phi.sigma.inverse()
    images = tuple(
        phi.domain.vector([sig_inv(phi.domain.sfield.coerce(x)) for x in row])
        for row in m_inv)
    return SemilinearMap(phi.codomain, phi.domain, sig_inv, images)


def adjoint_linear(phi: SemilinearMap) -> SemilinearMap:
    """The unique linear map phi* with <phi(u), v> = <u, phi*(v)> for all
    u, v; solved exactly from the Gram matrices."""
    if not phi.is_linear:
        raise InputError("adjoint_linear requires a linear map")
    h1, h2 = phi.domain, phi.codomain
    g1 = [list(r) for r in h1.gram]
    g2 = [list(r) for r in h2.gram]
    b = linalg.matmul(phi.matrix, g2)
    x = linalg.matmul(linalg.matrix_inverse(g1), b)
    sf = h1.sfield
    images = tuple(
        h1.vector([star_scalar(sf.coerce(x[k][m])) for k in range(h1.dim)])
        for m in range(h2.dim))
    return SemilinearMap(h2, h1, SfieldMorphism.identity(sf), images)


def is_quasiunitary(phi: SemilinearMap):
    """Certify <phi(u), phi(v)> = sigma(<u, v>) * lam on all basis pairs,
    plus the involution-compatibility facts that let the basis check extend
    to all vectors.  Returns (sigma, lam) or None; raises on non-bijective
    input."""
    h1, h2 = phi.domain, phi.codomain
    if h1.dim != h2.dim or phi.rank != h1.dim:
        raise InputError("quasiunitarity is defined for bijective maps")
    sf2 = h2.sfield
    if h1.dim == 0:
        return phi.sigma, sf2.one()
    sig = phi.sigma
    imgs = phi.images
    lam = inv_scalar(sig(h1.gram[0][0])) * herm_form(imgs[0], imgs[0])
    if not lam:
        return None
    for i in range(h1.dim):
        for j in range(h1.dim):
            if herm_form(imgs[i], imgs[j]) != sig(h1.gram[i][j]) * lam:
                return None
    if star_scalar(lam) != lam:
        return None
    for g in h1.sfield.generators():
        if sig(star_scalar(g)) * lam != lam * star_scalar(sig(g)):
            return None
    return sig, lam


@dataclass(frozen=True)
class PartialIsometryDescriptor:
    """A map that restricts to a (quasi)unitary bijection between s1 and s2
    and vanishes on the orthocomplement of s1."""

    map: SemilinearMap
    s1: Subspace
    s2: Subspace
    core: SemilinearMap


def make_partial_isometry(s1: Subspace, s2: Subspace,
                          core: SemilinearMap) -> PartialIsometryDescriptor:
    """Assemble inclusion(s2) o core o projection(s1); the core acts between
    the orthogonal frame coordinates of s1 and s2."""
    if s1.dim != s2.dim:
        raise InputError("subspaces must have equal dimension")
    f1, f2 = s1.frame, s2.frame
    if core.domain != f1.space or core.codomain != f2.space:
        raise InputError("core must map the s1 frame space to the s2 frame space")
    if s1.dim and is_quasiunitary(core) is None:
        raise InputError("core is not quasiunitary")
    images = []
    for i in range(s1.space.dim):
        pc = f1.project_coords(s1.space.basis_vector(i))
        images.append(f2.to_ambient(core.apply(pc)))
    phi = SemilinearMap(s1.space, s2.space, core.sigma, tuple(images))
    return PartialIsometryDescriptor(phi, s1, s2, core)


def generalized_inverse(d: PartialIsometryDescriptor) -> SemilinearMap:
    """inclusion(s1) o core^-1 o projection(s2) for a linear, unitary core;
    coincides with the adjoint of the assembled map."""
    cert = d.s1.dim and is_quasiunitary(d.core)
    if d.s1.dim and (not d.core.is_linear or cert is None
                     or not cert[0].is_identity
                     or cert[1] != d.core.codomain.sfield.one()):
        raise UnsupportedVariantError(
            "generalized_inverse needs a linear unitary core; "
            "transport the quasi variant first")
    return _reverse_through_core(d)


def quasi_generalized_inverse(d: PartialIsometryDescriptor) -> SemilinearMap:
    """The quasi variant: inclusion(s1) o core^-1 o projection(s2)."""
    return _reverse_through_core(d)


def _reverse_through_core(d: PartialIsometryDescriptor) -> SemilinearMap:
    f1, f2 = d.s1.frame, d.s2.frame
    if d.s1.dim == 0:
        return SemilinearMap.zero(d.s2.space, d.s1.space)
    core_inv = invert_semilinear(d.core)
    images = []
    for i in range(d.s2.space.dim):
        pc = f2.project_coords(d.s2.space.basis_vector(i))
        images.append(f1.to_ambient(core_inv.apply(pc)))
    return SemilinearMap(d.s2.space, d.s1.space, core_inv.sigma, tuple(images))


def random_vector(space: HermitianSpace, rng, bound: int = 10) -> Vector:
    return Vector(space, tuple(space.sfield.random_scalar(rng, bound)
                               for _ in range(space.dim)))


def random_nonzero_vector(space: HermitianSpace, rng, bound: int = 10) -> Vector:
    if space.dim == 0:
        raise InputError("the zero space has no nonzero vectors")
    while True:
        v = random_vector(space, rng, bound)
        if not v.is_zero:
            return v


def random_subspace(space: HermitianSpace, dim: int, rng) -> Subspace:
    """A random subspace of the exact requested dimension."""
    if dim > space.dim:
        raise InputError("requested dimension exceeds the space")
    while True:
        vecs = [random_vector(space, rng) for _ in range(dim)]
        s = Subspace.from_vectors(space, vecs)
        if s.dim == dim:
            return s
