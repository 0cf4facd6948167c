from fractions import Fraction

import pytest

from grpder import (
    GroupRingElement,
    NotMultiplicative,
    conjugation_endo,
    identity_endo,
    inner_derivation,
    standard_group,
)
from grpder.rings import GF, QQ, ZZ
from grpder.serialization import (
    derivation_images_from_json,
    derivation_to_json,
    dumps_canonical,
    element_from_json,
    element_to_json,
    endo_from_json,
    endo_to_json,
    group_from_json,
    group_to_json,
)


def test_group_round_trip_bit_exact():
    q8 = standard_group("Q8")
    data = group_to_json(q8)
    clone = group_from_json(data)
    assert clone.table == q8.table
    assert clone.labels == q8.labels
    assert dumps_canonical(group_to_json(clone)) == dumps_canonical(data)


def test_group_json_validates():
    with pytest.raises(Exception):
        group_from_json({"order": 2, "table": [[0, 1], [1, 1]]})
    with pytest.raises(ValueError):
        group_from_json({"order": 3, "table": [[0, 1], [1, 0]]})
    with pytest.raises(ValueError):
        group_from_json({"order": 2})


def test_element_round_trips():
    s3 = standard_group("S3")
    cases = [
        GroupRingElement(s3, ZZ, [1, -2, 0, 3, 0, 0]),
        GroupRingElement(s3, QQ, [Fraction(1, 2), 0, Fraction(-7, 3), 1, 0, 0]),
        GroupRingElement(s3, GF(5), [4, 0, 1, 2, 3, 0]),
    ]
    for el in cases:
        data = element_to_json(el)
        back = element_from_json(s3, data)
        assert back == el


def test_rational_serialization_format():
    c2 = standard_group("C2")
    el = GroupRingElement(c2, QQ, [Fraction(3, 4), 2])
    data = element_to_json(el)
    assert data == {"ring": "Q", "coeffs": ["3/4", 2]}
    fp = GroupRingElement(c2, GF(7), [6, 3])
    assert element_to_json(fp) == {"ring": "Fp", "p": 7, "coeffs": [6, 3]}


def test_element_json_errors():
    c2 = standard_group("C2")
    with pytest.raises(ValueError):
        element_from_json(c2, {"ring": "Q", "coeffs": [1]})
    with pytest.raises(ValueError):
        element_from_json(c2, {"ring": "Q", "coeffs": [1, 2]}, expected_ring=ZZ)
    with pytest.raises(ValueError):
        element_from_json(c2, {"ring": "Fp", "coeffs": [1, 2]})


def test_endomorphism_round_trip_validates():
    q8 = standard_group("Q8")
    phi = conjugation_endo(GroupRingElement.basis(q8, QQ, 2))
    data = endo_to_json(phi)
    back = endo_from_json(q8, data)
    assert back == phi
    bad = endo_to_json(identity_endo(q8, QQ))
    bad["images"][3] = element_to_json(GroupRingElement(q8, QQ, [1] * 8))
    with pytest.raises(NotMultiplicative):
        endo_from_json(q8, bad)


def test_derivation_images_round_trip():
    s3 = standard_group("S3")
    ident = identity_endo(s3, ZZ)
    delta = inner_derivation(GroupRingElement(s3, ZZ, [0, 2, -1, 0, 1, 0]), ident, ident)
    data = derivation_to_json(delta)
    images = derivation_images_from_json(s3, data, ZZ)
    assert all(a == b for a, b in zip(images, delta.images))


def test_dumps_canonical_is_stable():
    payload = {"b": 1, "a": [3, 2, 1]}
    assert dumps_canonical(payload) == dumps_canonical({"a": [3, 2, 1], "b": 1})
    assert dumps_canonical(payload).endswith("\n")
