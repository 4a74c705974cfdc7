import random

import pytest

from qsteiner import linalg
from qsteiner.gf import build_tower
from qsteiner.moore import annihilator_bottom, annihilator_top, moore_det, moore_matrix
from qsteiner.subspace import Subspace

from oracles import leibniz_det

TOWERS = [build_tower(2, 1, 6), build_tower(3, 1, 4), build_tower(2, 2, 3)]


def random_tuple(T, k, rng):
    return [T.random(rng) for _ in range(k)]


def test_k1_is_identity():
    T = build_tower(3, 1, 3)
    for x in T.elements():
        assert moore_det([x]) == x


def test_f4_example(F4):
    y = F4.gen
    # det [[1, 1], [y, y^2]] = y^2 - y = 1
    assert moore_det([F4.one, y]) == F4.one
    assert leibniz_det(F4, moore_matrix([F4.one, y]).rows) == F4.one


def test_repeated_rows_vanish():
    T = build_tower(2, 1, 5)
    v = T.gen
    assert not moore_det([v, v])
    assert not annihilator_top([v, v])


@pytest.mark.parametrize("T", TOWERS, ids=repr)
@pytest.mark.parametrize("k", [2, 3])
def test_det_matches_leibniz(T, k):
    rng = random.Random(k)
    for _ in range(5):
        vs = random_tuple(T, k, rng)
        assert moore_det(vs) == leibniz_det(T, moore_matrix(vs).rows)


@pytest.mark.parametrize("T", TOWERS, ids=repr)
def test_zero_iff_dependent(T):
    rng = random.Random(11)
    for k in (1, 2, 3):
        for _ in range(10):
            vs = random_tuple(T, k, rng)
            if rng.random() < 0.5 and k > 1:
                vs[-1] = vs[0].scale(rng.randrange(T.q)) + (vs[1].scale(rng.randrange(T.q)) if k > 2 else T.zero)
            independent = linalg.rank(T.base, [v.c for v in vs], T.M) == k
            assert bool(moore_det(vs)) == independent


def test_annihilator_top_q2_k1():
    T = build_tower(2, 1, 3)
    f = annihilator_top([T.one])
    assert [c.c for c in f.coeffs] == [T.one.c, T.one.c]
    assert f.kernel() == Subspace.span(T, [T.one])


def test_annihilator_bottom_q2_t1():
    T = build_tower(2, 1, 3)
    g = annihilator_bottom([T.one])
    assert g.coeffs == (T.one, T.one)
    assert not g(T.one)


@pytest.mark.parametrize("T", TOWERS, ids=repr)
def test_annihilator_kernel_is_span(T):
    rng = random.Random(4)
    for k in (1, 2, 3):
        vs = random_tuple(T, k, rng)
        span = Subspace.span(T, vs)
        f = annihilator_top(vs)
        if span.dim == k:
            assert f.qdegree == k and f.is_separable()
            assert f.kernel() == span
        else:
            assert not f


@pytest.mark.parametrize("T", TOWERS, ids=repr)
def test_bottom_row_identity(T):
    rng = random.Random(9)
    for t in (1, 2, 3):
        vs = random_tuple(T, t, rng)
        g = annihilator_bottom(vs)
        for _ in range(3):
            w = T.random(rng)
            assert g(w) == moore_det([*vs, w])
        for v in vs:
            assert not g(v)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_row_convention_sign(p, t):
    T = build_tower(p, 1, 4)
    rng = random.Random(p + t)
    vs = random_tuple(T, t, rng)
    top, bottom = annihilator_top(vs), annihilator_bottom(vs)
    expected = top if t % 2 == 0 else -top
    assert bottom.coeffs == expected.coeffs


@pytest.mark.parametrize("T", TOWERS, ids=repr)
def test_basis_change_scales_by_det(T):
    rng = random.Random(13)
    F = T.base
    for k in (2, 3):
        vs = random_tuple(T, k, rng)
        A = [[rng.randrange(F.q) for _ in range(k)] for _ in range(k)]
        ws = [sum((v.scale(c) for c, v in zip(row, vs)), T.zero) for row in A]
        d = T.embed(linalg.det(F, A))
        assert linalg.det(F, A) == leibniz_det(F, A)
        assert moore_det(ws) == d * moore_det(vs)
        assert annihilator_top(ws) == annihilator_top(vs).scale(d)
