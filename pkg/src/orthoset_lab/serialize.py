"""JSON file formats for spaces, maps, subspaces, rays and probe specs.

Scalar text syntax: rationals are "p/q" or "p"; Gaussian rationals are
{"re": ..., "im": ...}; quaternions are {"a": ..., "b": ..., "c": ...,
"d": ...}; sfield tags are "Q", "Qi", "HQ"; morphisms are {"kind": "id" |
"conj" | "inner"} with the conjugator under "q" for inner morphisms.
Output is canonical: sorted keys, reduced fractions, denominators printed
only when they differ from 1, identity Gram matrices omitted.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import InputError, ParseError
from .hermspace import HermitianSpace, SemilinearMap, Subspace, Vector
from .orthoset import Ray, ray_of
from .scalars import (
    GaussianRational,
    RationalQuaternion,
    rational_from_str,
    rational_to_str,
)
from .starfields import SfieldMorphism, StarSfield


def scalar_to_json(a):
    if isinstance(a, (int, Fraction)):
        return rational_to_str(Fraction(a))
    if isinstance(a, GaussianRational):
        return {"re": rational_to_str(a.re), "im": rational_to_str(a.im)}
    if isinstance(a, RationalQuaternion):
        return {"a": rational_to_str(a.a), "b": rational_to_str(a.b),
                "c": rational_to_str(a.c), "d": rational_to_str(a.d)}
    raise InputError(f"not a scalar: {a!r}")


def scalar_from_json(obj, sfield: StarSfield):
    try:
        if sfield is StarSfield.Q:
            return rational_from_str(obj)
        if sfield is StarSfield.QI:
            if isinstance(obj, str):
                return GaussianRational(rational_from_str(obj))
            return GaussianRational(rational_from_str(obj["re"]),
                                    rational_from_str(obj["im"]))
        if isinstance(obj, str):
            return RationalQuaternion(rational_from_str(obj))
        return RationalQuaternion(rational_from_str(obj["a"]),
                                  rational_from_str(obj["b"]),
                                  rational_from_str(obj["c"]),
                                  rational_from_str(obj["d"]))
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError(f"bad scalar literal {obj!r} for {sfield.value}") from exc


def sfield_from_json(tag) -> StarSfield:
    for sf in StarSfield:
        if sf.value == tag:
            return sf
    raise ParseError(f"unknown sfield tag {tag!r}")


def space_to_json(space: HermitianSpace) -> dict:
    obj = {"sfield": space.sfield.value, "dim": space.dim}
    if not space._is_identity_gram:
        obj["gram"] = [[scalar_to_json(x) for x in row] for row in space.gram]
    return obj


def space_from_json(obj) -> HermitianSpace:
    try:
        sf = sfield_from_json(obj["sfield"])
        dim = int(obj["dim"])
        gram = obj.get("gram")
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad space object: {exc}") from exc
    if gram is None:
        return HermitianSpace.create(sf, dim)
    rows = [[scalar_from_json(x, sf) for x in row] for row in gram]
    return HermitianSpace.create(sf, dim, rows)


def morphism_to_json(sigma: SfieldMorphism) -> dict:
    obj = {"kind": sigma.kind}
    if sigma.kind == "inner":
        obj["q"] = scalar_to_json(sigma.q)
    return obj


def morphism_from_json(obj, sfield: StarSfield) -> SfieldMorphism:
    try:
        kind = obj["kind"]
    except (KeyError, TypeError) as exc:
        raise ParseError("morphism object needs a kind") from exc
    if kind == "id":
        return SfieldMorphism.identity(sfield)
    if kind == "conj":
        if sfield is not StarSfield.QI:
            raise ParseError("conj morphisms exist on Qi only")
        return SfieldMorphism.conjugation()
    if kind == "inner":
        if sfield is not StarSfield.HQ:
            raise ParseError("inner morphisms exist on HQ only")
        return SfieldMorphism.inner(scalar_from_json(obj.get("q"), sfield))
    raise ParseError(f"unknown morphism kind {kind!r}")


def _vector_rows_to_json(vectors) -> list:
    return [[scalar_to_json(c) for c in v.coords] for v in vectors]


def map_to_json(phi: SemilinearMap, adjoint_images=None) -> dict:
    obj = {
        "domain": space_to_json(phi.domain),
        "codomain": space_to_json(phi.codomain),
        "sigma": morphism_to_json(phi.sigma),
        "images": _vector_rows_to_json(phi.images),
    }
    if adjoint_images is not None:
        obj["adjoint_images"] = _vector_rows_to_json(adjoint_images)
    return obj


def map_from_json(obj) -> tuple[SemilinearMap, SemilinearMap | None]:
    """Returns the map and, when the file carries claimed adjoint images,
    the claimed adjoint map."""
    try:
        domain = space_from_json(obj["domain"])
        codomain = space_from_json(obj["codomain"])
        sigma = morphism_from_json(obj["sigma"], domain.sfield)
        rows = obj["images"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad map object: {exc}") from exc
    if len(rows) != domain.dim:
        raise ParseError("image count does not match the domain dimension")
    images = tuple(
        codomain.vector([scalar_from_json(x, codomain.sfield) for x in row])
        for row in rows)
    phi = SemilinearMap(domain, codomain, sigma, images)
    claimed = None
    if "adjoint_images" in obj:
        arows = obj["adjoint_images"]
        if len(arows) != codomain.dim:
            raise ParseError("adjoint image count does not match")
        aimages = tuple(
            domain.vector([scalar_from_json(x, domain.sfield) for x in row])
            for row in arows)
        claimed = SemilinearMap(codomain, domain,
                                SfieldMorphism.identity(domain.sfield), aimages)
    return phi, claimed


def subspace_to_json(s: Subspace) -> dict:
    return {"space": space_to_json(s.space),
            "basis": _vector_rows_to_json(s.basis)}


def subspace_from_json(obj) -> Subspace:
    space, vectors = basis_vectors_from_json(obj)
    return Subspace.from_vectors(space, vectors)


def basis_vectors_from_json(obj) -> tuple[HermitianSpace, list[Vector]]:
    """The raw basis rows of a subspace file, without echelon reduction;
    gram_schmidt-style constructions need the rows as given."""
    try:
        space = space_from_json(obj["space"])
        rows = obj["basis"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad subspace object: {exc}") from exc
    vectors = [space.vector([scalar_from_json(x, space.sfield) for x in row])
               for row in rows]
    return space, vectors


def ray_to_json(r: Ray) -> dict:
    obj = {"space": space_to_json(r.space)}
    obj["rep"] = "zero" if r.is_zero else [scalar_to_json(c) for c in r.rep.coords]
    return obj


def ray_from_json(obj) -> Ray:
    try:
        space = space_from_json(obj["space"])
        rep = obj["rep"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad ray object: {exc}") from exc
    if rep == "zero":
        return Ray.zero(space)
    return ray_of(space.vector([scalar_from_json(x, space.sfield) for x in rep]))


def vector_from_json(obj, space: HermitianSpace) -> Vector:
    if not isinstance(obj, list):
        raise ParseError("vector literal must be a list of scalars")
    return space.vector([scalar_from_json(x, space.sfield) for x in obj])


def probes_from_json(obj) -> tuple[int, int]:
    try:
        return int(obj.get("seed", 0)), int(obj.get("count", 256))
    except (TypeError, ValueError) as exc:
        raise ParseError("bad probe spec") from exc


def dump_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
