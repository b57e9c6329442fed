import glob
import json
from fractions import Fraction as F

import pytest

from orthoset_lab import serialize as sz
from orthoset_lab.errors import ParseError
from orthoset_lab.hermspace import (
    HermitianSpace,
    Subspace,
    standard_space,
)
from orthoset_lab.orthoset import Ray, ray_of
from orthoset_lab.sampling import left_scalar_map
from orthoset_lab.scalars import GaussianRational as GR, RationalQuaternion as RQ
from orthoset_lab.starfields import SfieldMorphism, StarSfield

Q, QI, HQ = StarSfield.Q, StarSfield.QI, StarSfield.HQ


def test_scalar_syntax():
    assert sz.scalar_to_json(F(-3, 7)) == "-3/7"
    assert sz.scalar_to_json(F(5)) == "5"
    assert sz.scalar_to_json(GR(F(1, 2), F(-3))) == {"re": "1/2", "im": "-3"}
    assert sz.scalar_to_json(RQ(1, 0, F(2, 3), 0)) == \
        {"a": "1", "b": "0", "c": "2/3", "d": "0"}
    assert sz.scalar_from_json("3/2", Q) == F(3, 2)
    assert sz.scalar_from_json({"re": "1", "im": "-1"}, QI) == GR(1, -1)
    assert sz.scalar_from_json("4", QI) == GR(4)  # plain rationals lift
    assert sz.scalar_from_json("4", HQ) == RQ(4)


def test_scalar_parse_errors():
    with pytest.raises(ParseError):
        sz.scalar_from_json("x/y", Q)
    with pytest.raises(ParseError):
        sz.scalar_from_json({"re": "1"}, QI)
    with pytest.raises(ParseError):
        sz.sfield_from_json("R")


def test_space_round_trip_identity_gram_omitted():
    sp = standard_space(QI, 3)
    obj = sz.space_to_json(sp)
    assert "gram" not in obj
    assert sz.space_from_json(obj) == sp
    weighted = HermitianSpace.create(Q, 2, [[2, 1], [1, 1]])
    obj2 = sz.space_to_json(weighted)
    assert obj2["gram"] == [["2", "1"], ["1", "1"]]
    assert sz.space_from_json(obj2) == weighted


def test_morphism_round_trip():
    for sigma in (SfieldMorphism.identity(Q), SfieldMorphism.conjugation(),
                  SfieldMorphism.inner(RQ(1, 2, 0, 1))):
        obj = sz.morphism_to_json(sigma)
        assert sz.morphism_from_json(obj, sigma.sfield) == sigma
    with pytest.raises(ParseError):
        sz.morphism_from_json({"kind": "conj"}, Q)
    with pytest.raises(ParseError):
        sz.morphism_from_json({"kind": "inner", "q": "1"}, QI)


def test_map_round_trip(rng):
    hq2 = standard_space(HQ, 2)
    phi = left_scalar_map(hq2, RQ(1, 1, 0, 0))
    obj = sz.map_to_json(phi)
    back, claimed = sz.map_from_json(obj)
    assert back == phi and claimed is None
    adj_obj = sz.map_to_json(phi, adjoint_images=phi.images)
    back2, claimed2 = sz.map_from_json(adj_obj)
    assert claimed2 is not None and claimed2.images == phi.images


def test_subspace_round_trip_canonicalizes():
    q3 = standard_space(Q, 3)
    obj = {"space": sz.space_to_json(q3),
           "basis": [["1", "1", "0"], ["2", "2", "2"]]}
    s = sz.subspace_from_json(obj)
    assert s == Subspace.from_vectors(
        q3, [q3.vector([1, 1, 0]), q3.vector([0, 0, 1])])
    again = sz.subspace_from_json(sz.subspace_to_json(s))
    assert again == s
    space, raw = sz.basis_vectors_from_json(obj)
    assert raw[1] == q3.vector([2, 2, 2])  # raw rows kept for constructions


def test_ray_round_trip():
    q2 = standard_space(Q, 2)
    r = ray_of(q2.vector([2, 4]))
    obj = sz.ray_to_json(r)
    assert obj["rep"] == ["1", "2"]
    assert sz.ray_from_json(obj) == r
    z = sz.ray_to_json(Ray.zero(q2))
    assert z["rep"] == "zero"
    assert sz.ray_from_json(z).is_zero


def test_probe_spec():
    assert sz.probes_from_json({}) == (0, 256)
    assert sz.probes_from_json({"seed": 7, "count": 31}) == (7, 31)


def test_canonical_dump_stable():
    sp = HermitianSpace.create(QI, 2, [[2, GR(0, 1)], [GR(0, -1), 1]])
    text = sz.dump_canonical(sz.space_to_json(sp))
    reparsed = sz.space_from_json(json.loads(text))
    assert sz.dump_canonical(sz.space_to_json(reparsed)) == text


@pytest.mark.parametrize("path", sorted(glob.glob("fixtures/*.json")))
def test_fixtures_round_trip(path):
    obj = sz.load_file(path)
    if "images" in obj:
        value, claimed = sz.map_from_json(obj)
        emitted = sz.map_to_json(
            value, adjoint_images=claimed.images if claimed else None)
        value2, claimed2 = sz.map_from_json(emitted)
        assert value2 == value and claimed2 == claimed
    elif "basis" in obj:
        value = sz.subspace_from_json(obj)
        assert sz.subspace_from_json(json.loads(
            sz.dump_canonical(sz.subspace_to_json(value)))) == value
    else:
        value = sz.space_from_json(obj)
        assert sz.space_from_json(json.loads(
            sz.dump_canonical(sz.space_to_json(value)))) == value


def test_load_file_errors(tmp_path):
    with pytest.raises(ParseError):
        sz.load_file(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        sz.load_file(str(bad))
