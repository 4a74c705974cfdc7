import json
import random

import pytest

from qsteiner.errors import WrongLength
from qsteiner.gf import build_tower
from qsteiner.serialize import (
    decode_block,
    decode_elem,
    decode_qpoly,
    decode_subspace,
    encode_block,
    encode_elem,
    encode_qpoly,
    encode_subspace,
)
from qsteiner.steiner import ConstructionParams, classify
from qsteiner.designcheck import enumerate_subspaces


@pytest.mark.parametrize("p,e,M", [(2, 1, 4), (3, 2, 2), (2, 2, 3)])
def test_elem_roundtrip(p, e, M):
    T = build_tower(p, e, M)
    rng = random.Random(0)
    for _ in range(20):
        x = T.random(rng)
        enc = json.loads(json.dumps(encode_elem(x)))
        assert len(enc) == M and all(len(c) == e for c in enc)
        assert decode_elem(T, enc) == x


def test_elem_wrong_length():
    T = build_tower(2, 1, 3)
    with pytest.raises(WrongLength):
        decode_elem(T, [[1], [0]])


def test_qpoly_and_subspace_roundtrip():
    T = build_tower(3, 1, 3)
    rng = random.Random(1)
    from qsteiner.qpoly import QPolynomial
    f = QPolynomial(T, (T.random(rng), T.random(rng), T.one))
    assert decode_qpoly(T, encode_qpoly(f)) == f
    V = next(iter(enumerate_subspaces(T, 3, 2)))
    assert decode_subspace(T, encode_subspace(V)) == V


def test_block_roundtrip_and_validation():
    P = ConstructionParams(build_tower(2, 1, 6), 1)
    T = P.tower
    for W in enumerate_subspaces(T, 3, 2):
        b = classify(P, W)
        enc = json.loads(json.dumps(encode_block(b)))
        assert decode_block(P, enc) == b
    bad = dict(enc, a=encode_elem(T.gen))
    with pytest.raises(ValueError):
        decode_block(P, bad)
    bad = dict(enc, basis=encode_subspace(next(iter(enumerate_subspaces(T, 3, 2)))))
    if bad["basis"] != enc["basis"]:
        with pytest.raises(ValueError):
            decode_block(P, bad)
