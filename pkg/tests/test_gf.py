import itertools
import random

import pytest
from hypothesis import given, strategies as st

from qsteiner import linalg
from qsteiner.errors import (
    DimensionMismatch,
    DivisionByZero,
    MixedTowers,
    NonDivisorDegree,
    NotPrime,
    SizeBoundExceeded,
    WrongLength,
)
from qsteiner.gf import BaseField, build_tower, frobenius, smallest_irreducible, subfield_test

from conftest import elems, scalars
from oracles import brute_span, prime_poly_has_factor

T_SMALL = [build_tower(2, 1, 5), build_tower(3, 1, 3), build_tower(2, 2, 3), build_tower(5, 1, 2)]


class TestBuildTower:
    def test_degree_two_over_f2(self):
        # exhaustive over the 4 monic quadratics: only y^2 + y + 1 has no factor
        quads = [(c0, c1, 1) for c0 in range(2) for c1 in range(2)]
        irreducible = [h for h in quads if not prime_poly_has_factor(2, list(h))]
        assert irreducible == [(1, 1, 1)]
        assert build_tower(2, 1, 2).h_ext == (1, 1, 1)

    def test_degree_one_ambient(self):
        T = build_tower(3, 1, 1)
        assert len(T.h_ext) == 2
        assert T.order == 3
        assert sorted(x.c for x in T.elements()) == [(0,), (1,), (2,)]

    def test_base_f4(self):
        T = build_tower(2, 2, 1)
        assert T.h_base == (1, 1, 1)
        assert T.q == 4

    @pytest.mark.parametrize("p,n", [(2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (5, 2)])
    def test_lexicographic_choice_matches_trial_division(self, p, n):
        # candidates in low-degree-first lex order; first without a factor
        expected = next(tuple(c) + (1,) for c in itertools.product(range(p), repeat=n)
                        if not prime_poly_has_factor(p, list(c) + [1]))
        assert smallest_irreducible(BaseField(p, 1, (0, 1)), p, n) == expected

    def test_deterministic(self):
        a = build_tower(3, 2, 3)
        b = build_tower(3, 2, 3)
        assert (a.h_base, a.h_ext) == (b.h_base, b.h_ext)

    def test_not_prime(self):
        with pytest.raises(NotPrime):
            build_tower(4, 1, 2)

    def test_size_bound(self, monkeypatch):
        with pytest.raises(SizeBoundExceeded):
            build_tower(2, 1, 65)
        monkeypatch.setenv("QSTEINER_SIZE_BOUND", "64")
        with pytest.raises(SizeBoundExceeded):
            build_tower(2, 1, 7)
        assert build_tower(2, 1, 6).order == 64


class TestArithmetic:
    def test_f4_examples(self, F4):
        y = F4.gen
        assert y * y == y + F4.one
        assert y.inverse() == y + F4.one
        assert y * (y + F4.one) == F4.one
        for x in F4.elements():
            assert x + F4.zero == x

    def test_inverse_of_zero(self, F4):
        with pytest.raises(DivisionByZero):
            F4.zero.inverse()

    def test_mixed_towers(self):
        with pytest.raises(MixedTowers):
            build_tower(2, 1, 2).one + build_tower(2, 1, 3).one

    @pytest.mark.parametrize("T", T_SMALL, ids=repr)
    def test_exhaustive_small_field(self, T):
        if T.order > 64:
            pytest.skip("exhaustive only for tiny fields")
        xs = list(T.elements())
        assert len(set(xs)) == T.order
        for x in xs:
            if x:
                assert x * x.inverse() == T.one

    @pytest.mark.parametrize("T", T_SMALL, ids=repr)
    @given(data=st.data())
    def test_field_axioms(self, T, data):
        x, y, z = (data.draw(elems(T)) for _ in range(3))
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x
        assert x - x == T.zero
        assert x + (-x) == T.zero
        if x:
            assert x * x.inverse() == T.one
            assert (y / x) * x == y

    @pytest.mark.parametrize("T", T_SMALL, ids=repr)
    @given(data=st.data())
    def test_scale_is_embedded_multiplication(self, T, data):
        x = data.draw(elems(T))
        lam = data.draw(scalars(T))
        assert x.scale(lam) == T.embed(lam) * x

    def test_pow_matches_repeated_multiplication(self):
        T = build_tower(3, 1, 3)
        x = T.gen + T.one
        acc = T.one
        for n in range(30):
            assert x**n == acc
            acc = acc * x
        assert x ** (T.order - 1) == T.one
        assert x**-1 == x.inverse()


class TestFrobenius:
    def test_fixes_base_field(self):
        T = build_tower(2, 2, 3)
        for lam in range(T.q):
            assert frobenius(T.embed(lam), 1) == T.embed(lam)

    def test_f4_example(self, F4):
        assert frobenius(F4.gen, 1) == F4.gen + F4.one

    @pytest.mark.parametrize("T", T_SMALL, ids=repr)
    @given(data=st.data())
    def test_automorphism(self, T, data):
        x, z = data.draw(elems(T)), data.draw(elems(T))
        i, j = data.draw(st.integers(0, 2 * T.M)), data.draw(st.integers(0, 2 * T.M))
        assert x.frob(i) == x ** (T.q ** (i % T.M))
        assert (x * z).frob(i) == x.frob(i) * z.frob(i)
        assert (x + z).frob(i) == x.frob(i) + z.frob(i)
        assert x.frob(i + j) == x.frob(i).frob(j)
        assert x.frob(T.M) == x

    def test_linear_over_fq(self):
        T = build_tower(2, 2, 3)
        rng = random.Random(3)
        for _ in range(20):
            x, z = T.random(rng), T.random(rng)
            a, b = rng.randrange(4), rng.randrange(4)
            assert (x.scale(a) + z.scale(b)).frob(1) == x.frob(1).scale(a) + z.frob(1).scale(b)


class TestSubfield:
    def test_examples(self, F4):
        assert subfield_test(F4.one, 1)
        assert not subfield_test(F4.gen, 1)
        rng = random.Random(0)
        T = build_tower(3, 1, 4)
        for _ in range(5):
            assert subfield_test(T.random(rng), 4)

    def test_non_divisor(self):
        with pytest.raises(NonDivisorDegree):
            subfield_test(build_tower(2, 1, 6).one, 4)

    @pytest.mark.parametrize("p,e,M", [(2, 1, 6), (3, 1, 4), (2, 2, 4)])
    def test_subfield_sizes(self, p, e, M):
        T = build_tower(p, e, M)
        for d in range(1, M + 1):
            if M % d == 0:
                count = sum(1 for x in T.elements() if subfield_test(x, d))
                assert count == T.q**d


class TestCoords:
    def test_examples(self):
        T = build_tower(3, 1, 4)
        assert T.coords(T.zero) == (0, 0, 0, 0)
        assert T.coords(T.gen) == (0, 1, 0, 0)
        rng = random.Random(1)
        for _ in range(10):
            x = T.random(rng)
            assert T.from_coords(T.coords(x)) == x

    def test_wrong_length(self):
        T = build_tower(2, 1, 3)
        with pytest.raises(WrongLength):
            T.from_coords((1, 0))
        with pytest.raises(WrongLength):
            T.from_coords((2, 0, 0))

    @given(data=st.data())
    def test_linear(self, data):
        T = build_tower(2, 2, 3)
        x, z = data.draw(elems(T)), data.draw(elems(T))
        lam = data.draw(scalars(T))
        F = T.base
        assert T.coords(x + z.scale(lam)) == tuple(F.vec_add(x.c, F.vec_scale(lam, z.c)))

    def test_base_field_coefficients_roundtrip(self):
        F = build_tower(3, 2, 1).base
        for a in range(F.q):
            assert F.from_coeffs(F.to_coeffs(a)) == a


class TestLinsolve:
    F2 = BaseField(2, 1, (0, 1))

    def test_identity_and_zero(self):
        F = self.F2
        eye = [[int(i == j) for j in range(4)] for i in range(4)]
        assert linalg.linsolve(F, eye).nullspace == ()
        zero = [[0] * 4 for _ in range(4)]
        assert len(linalg.linsolve(F, zero).nullspace) == 4

    def test_f2_affine_example(self):
        F = self.F2
        # enumerate all 4 candidates for x1 + x2 = 1
        sols = [v for v in itertools.product(range(2), repeat=2) if (v[0] + v[1]) % 2 == 1]
        assert sols == [(0, 1), (1, 0)]
        res = linalg.linsolve(F, [[1, 1]], [1])
        assert res.particular == (1, 0)
        assert res.nullspace == ((1, 1),)

    def test_inconsistent(self):
        assert linalg.linsolve(self.F2, [[1, 1], [1, 1]], [0, 1]) is None

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            linalg.linsolve(self.F2, [[1, 1], [1]])
        with pytest.raises(DimensionMismatch):
            linalg.linsolve(self.F2, [[1, 1]], [1, 0])

    @pytest.mark.parametrize("field", [BaseField(2, 1, (0, 1)), BaseField(3, 1, (0, 1)),
                                       build_tower(2, 2, 1).base], ids=repr)
    @given(data=st.data())
    def test_rank_nullity_and_substitution(self, field, data):
        rows = data.draw(st.integers(1, 5))
        cols = data.draw(st.integers(1, 5))
        A = data.draw(st.lists(st.lists(st.integers(0, field.q - 1), min_size=cols, max_size=cols),
                               min_size=rows, max_size=rows))
        b = data.draw(st.lists(st.integers(0, field.q - 1), min_size=rows, max_size=rows))
        res = linalg.linsolve(field, A, b)
        null = linalg.nullspace(field, A)
        assert linalg.rank(field, A) + len(null) == cols
        if null:
            assert linalg.rref(field, null, cols)[0] == [list(v) for v in null]
        for v in null:
            assert linalg.mat_vec(field, A, v) == [0] * rows
        # oracle: enumerate every candidate vector
        solvable = any(linalg.mat_vec(field, A, x) == b
                       for x in itertools.product(range(field.q), repeat=cols))
        assert (res is not None) == solvable
        if res is not None:
            assert linalg.mat_vec(field, A, res.particular) == b
            assert len(brute_span(field, null, cols)) == field.q ** len(null)
