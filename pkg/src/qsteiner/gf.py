"""Exact arithmetic in the tower F_p < F_q < F_{q^M}.

F_q (q = p^e) elements are plain ints in ``[0, q)``: the base-p digits of
the int, lowest first, are the coefficients of the residue modulo
``h_base``.  Ambient elements are :class:`Elem` values holding a length-M
tuple of such ints, the coordinates in the power basis ``1, y, ..., y^(M-1)``
of a root ``y`` of ``h_ext``.

Both defining polynomials are the lexicographically smallest monic
irreducibles of their degree (coefficient tuples compared lowest degree
first), so a given ``(p, e, M)`` always produces the same tower.  Data
serialized under one rule is only portable to builds using the same rule.
"""

from __future__ import annotations

import itertools
import os
import random
from array import array
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

from . import poly
from .errors import (
    DivisionByZero,
    MixedTowers,
    NonDivisorDegree,
    NotPrime,
    SizeBoundExceeded,
    WrongLength,
)

DEFAULT_SIZE_BOUND = 2**64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def size_bound() -> int:
    """Largest allowed ambient field size; ``QSTEINER_SIZE_BOUND`` overrides."""
    env = os.environ.get("QSTEINER_SIZE_BOUND")
    return int(env) if env else DEFAULT_SIZE_BOUND


class BaseField:
    """The field F_q = F_p[z]/(modulus), elements encoded as ints.

    For ``e == 1`` arithmetic is done modulo p directly; otherwise through
    precomputed q x q tables.
    """

    zero = 0
    one = 1

    def __init__(self, p: int, e: int, modulus: Sequence[int]):
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus = tuple(modulus)
        if e > 1:
            self._build_tables()

    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.q
        prime = BaseField(p, 1, (0, 1))
        digits = [self.to_coeffs(a) for a in range(q)]
        self._add = [[self.from_coeffs([(x + y) % p for x, y in zip(digits[a], digits[b])])
                      for b in range(q)] for a in range(q)]
        self._neg = [self.from_coeffs([(-x) % p for x in digits[a]]) for a in range(q)]
        self._mul = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                r = poly.mod(prime, poly.mul(prime, poly.trim(prime, digits[a]),
                                             poly.trim(prime, digits[b])), self.modulus)
                c = self.from_coeffs(r + [0] * (e - len(r)))
                self._mul[a][b] = self._mul[b][a] = c
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = self._mul[a].index(1)

    def to_coeffs(self, a: int) -> tuple[int, ...]:
        """The length-e coefficient tuple (lowest degree first) of ``a``."""
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.e:
            raise WrongLength(f"expected {self.e} coefficients, got {len(coeffs)}")
        n = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise WrongLength(f"coefficient {c} not in [0, {self.p})")
            n = n * self.p + c
        return n

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p if self.e == 1 else self._add[a][b]

    def neg(self, a: int) -> int:
        return (-a) % self.p if self.e == 1 else self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p if self.e == 1 else self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p if self.e == 1 else self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("0 has no inverse in F_q")
        return pow(a, self.p - 2, self.p) if self.e == 1 else self._inv[a]

    def vec_scale(self, c: int, v: Sequence[int]) -> list[int]:
        if self.e == 1:
            p = self.p
            return [(c * x) % p for x in v]
        row = self._mul[c]
        return [row[x] for x in v]

    def vec_add(self, u: Sequence[int], v: Sequence[int]) -> list[int]:
        if self.e == 1:
            p = self.p
            return [(x + y) % p for x, y in zip(u, v)]
        add = self._add
        return [add[x][y] for x, y in zip(u, v)]

    def vec_sub_scaled(self, u: Sequence[int], c: int, v: Sequence[int]) -> list[int]:
        """``u - c*v`` coordinate-wise."""
        if self.e == 1:
            p = self.p
            return [(x - c * y) % p for x, y in zip(u, v)]
        add, row = self._add, self._mul[self._neg[c]]
        return [add[x][row[y]] for x, y in zip(u, v)]

    def elements(self) -> range:
        return range(self.q)

    def __eq__(self, other) -> bool:
        return (isinstance(other, BaseField)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"BaseField(p={self.p}, e={self.e}, modulus={self.modulus})"


def smallest_irreducible(F, q: int, degree: int) -> tuple:
    """Lexicographically smallest monic irreducible of ``degree`` over ``F``.

    Coefficients are compared lowest degree first.  For degree > 1 the
    constant term must be nonzero, so the scan starts at constant term 1.
    """
    if degree == 1:
        return (F.zero, F.one)
    for c0 in range(1, q):
        for rest in itertools.product(range(q), repeat=degree - 1):
            cand = (c0, *rest, 1)
            if poly.is_irreducible(F, q, cand):
                return cand
    raise AssertionError("no irreducible found")  # pragma: no cover


def _pack(c: Sequence[int], code: str) -> int:
    return int.from_bytes(array(code, c).tobytes(), "little")


def _unpack(n: int, code: str, length: int) -> list[int]:
    """Inverse of :func:`_pack`, zero-padded to ``length`` slots."""
    width = array(code).itemsize
    return array(code, n.to_bytes(length * width, "little")).tolist()


@dataclass(frozen=True)
class Tower:
    """F_p < F_q < F_{q^M} with fixed defining polynomials.

    Implements the field protocol used by :mod:`qsteiner.poly` and
    :mod:`qsteiner.linalg` on :class:`Elem` values.
    """

    p: int
    e: int
    M: int
    h_base: tuple[int, ...]
    h_ext: tuple[int, ...]
    base: BaseField = field(init=False, repr=False, compare=False)
    _cache: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        base = BaseField(self.p, self.e, self.h_base)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "_cache", {})
        M = self.M
        # y^k mod h_ext for k in [M, 2M-2]
        red = []
        cur = [base.neg(c) for c in self.h_ext[:M]]
        for _ in range(M, 2 * M - 1):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = base.vec_sub_scaled(cur, top, self.h_ext[:M])
        object.__setattr__(self, "_red", red)
        # slot width must hold sums of up to 2M products of residues
        bound = 2 * M * (self.p - 1) ** 2 + self.p
        code = "I" if bound < 2**32 else "Q" if bound < 2**64 else None
        object.__setattr__(self, "_slot_code", code)
        object.__setattr__(self, "_red_packed", [_pack(r, code) for r in red] if code else None)
        self._validate_frobenius()

    def __reduce__(self):
        return (build_tower, (self.p, self.e, self.M))

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def order(self) -> int:
        return self.q**self.M

    # -- field protocol ---------------------------------------------------

    @property
    def zero(self) -> Elem:
        return Elem(self, (0,) * self.M)

    @property
    def one(self) -> Elem:
        return self.embed(1)

    def add(self, a: Elem, b: Elem) -> Elem:
        return a + b

    def sub(self, a: Elem, b: Elem) -> Elem:
        return a - b

    def neg(self, a: Elem) -> Elem:
        return -a

    def mul(self, a: Elem, b: Elem) -> Elem:
        return a * b

    def inv(self, a: Elem) -> Elem:
        return a.inverse()

    # -- constructors -----------------------------------------------------

    def elem(self, coords: Sequence[int]) -> Elem:
        """Element with the given F_q coordinates (ints in ``[0, q)``)."""
        if len(coords) != self.M:
            raise WrongLength(f"expected {self.M} coordinates, got {len(coords)}")
        c = tuple(int(x) for x in coords)
        if any(not 0 <= x < self.q for x in c):
            raise WrongLength(f"coordinates must lie in [0, {self.q})")
        return Elem(self, c)

    from_coords = elem

    def coords(self, x: Elem) -> tuple[int, ...]:
        return x.c

    def embed(self, lam: int) -> Elem:
        """The F_q element ``lam`` as an ambient element."""
        return Elem(self, (lam,) + (0,) * (self.M - 1))

    @property
    def gen(self) -> Elem:
        """The root ``y`` of ``h_ext`` (for M = 1 this is the root of x, i.e. 0)."""
        if self.M == 1:
            return Elem(self, (self.base.neg(self.h_ext[0]),))
        return Elem(self, (0, 1) + (0,) * (self.M - 2))

    def random(self, rng: random.Random) -> Elem:
        return Elem(self, tuple(rng.randrange(self.q) for _ in range(self.M)))

    def elements(self) -> Iterator[Elem]:
        for c in itertools.product(range(self.q), repeat=self.M):
            yield Elem(self, tuple(reversed(c)))

    # -- internals --------------------------------------------------------

    def _mul_coords(self, a: tuple, b: tuple) -> tuple:
        M = self.M
        if self.e == 1 and self._slot_code is None:
            p = self.p
            prod = [0] * (2 * M - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        prod[i + j] += x * y
            out = prod[:M]
            for k, r in enumerate(self._red):
                c = prod[M + k] % p
                if c:
                    for j, z in enumerate(r):
                        out[j] += c * z
            return tuple(x % p for x in out)
        if self.e == 1:
            # Kronecker substitution: one big-int product, then unpack slots
            p, code = self.p, self._slot_code
            prod = _unpack(_pack(a, code) * _pack(b, code), code, 2 * M - 1)
            out = _pack([x % p for x in prod[:M]], code)
            for k, r in enumerate(self._red_packed):
                c = prod[M + k] % p
                if c:
                    out += c * r
            return tuple(x % p for x in _unpack(out, code, M))
        B = self.base
        add, mul = B._add, B._mul
        prod = [0] * (2 * M - 1)
        bb = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                row = mul[x]
                for j, y in bb:
                    prod[i + j] = add[prod[i + j]][row[y]]
        out = prod[:M]
        for k, r in enumerate(self._red):
            c = prod[M + k]
            if c:
                out = B.vec_add(out, B.vec_scale(c, r))
        return tuple(out)

    def _apply_cols(self, cols: Sequence[tuple], x: tuple) -> tuple:
        """Apply the F_q-linear map with the given image columns to ``x``."""
        if self.e == 1 and self._slot_code:
            p, code = self.p, self._slot_code
            acc = 0
            for xj, col in zip(x, cols):
                if xj:
                    acc += xj * _pack(col, code)
            return tuple(v % p for v in _unpack(acc, code, self.M))
        B = self.base
        out = [0] * self.M
        for xj, col in zip(x, cols):
            if xj:
                out = B.vec_add(out, B.vec_scale(xj, col))
        return tuple(out)

    def frobenius_columns(self, i: int) -> list[tuple]:
        """Columns of the M x M F_q-matrix of ``x -> x^(q^i)``."""
        i %= self.M
        cache = self._cache
        key = ("frob", i)
        if key not in cache:
            if i == 0:
                cols = [tuple(int(r == j) for r in range(self.M)) for j in range(self.M)]
            elif i == 1:
                cols = [self._basis(j).pow_int(self.q).c for j in range(self.M)]
            else:
                one = self.frobenius_columns(1)
                prev = self.frobenius_columns(i - 1)
                cols = [self._apply_cols(one, col) for col in prev]
            cache[key] = cols
        return cache[key]

    def _basis(self, j: int) -> Elem:
        if self.M == 1:
            return self.one
        c = [0] * self.M
        c[j] = 1
        return Elem(self, tuple(c))

    def basis(self) -> list[Elem]:
        """The power basis ``1, y, ..., y^(M-1)``."""
        return [self._basis(j) for j in range(self.M)]

    def _validate_frobenius(self) -> None:
        cols = self.frobenius_columns(1)
        for j in range(self.M):
            x = self._basis(j)
            y = x
            for _ in range(self.e):
                y = y.pow_int(self.p)
            if y.c != cols[j]:
                raise AssertionError("Frobenius matrix disagrees with p-th powering")


class Elem:
    """An element of the ambient field F_{q^M}."""

    __slots__ = ("tower", "c")

    def __init__(self, tower: Tower, c: tuple):
        self.tower = tower
        self.c = c

    def _other(self, other) -> Elem:
        if not isinstance(other, Elem):
            return NotImplemented
        if other.tower is not self.tower and other.tower != self.tower:
            raise MixedTowers("elements belong to different towers")
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Elem(self.tower, tuple(self.tower.base.vec_add(self.c, other.c)))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Elem(self.tower, tuple(self.tower.base.vec_sub_scaled(self.c, 1, other.c)))

    def __neg__(self):
        B = self.tower.base
        return Elem(self.tower, tuple(B.neg(x) for x in self.c))

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return Elem(self.tower, self.tower._mul_coords(self.c, other.c))

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __pow__(self, n: int):
        return self.pow_int(n)

    def pow_int(self, n: int) -> Elem:
        if n < 0:
            return self.inverse().pow_int(-n)
        result = self.tower.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, lam: int) -> Elem:
        """Multiply by the F_q element ``lam``."""
        return Elem(self.tower, tuple(self.tower.base.vec_scale(lam, self.c)))

    def inverse(self) -> Elem:
        if not any(self.c):
            raise DivisionByZero("0 has no inverse")
        T = self.tower
        B = T.base
        inv = poly.inverse_mod(B, poly.trim(B, self.c), T.h_ext)
        return Elem(T, tuple(inv) + (0,) * (T.M - len(inv)))

    def frob(self, i: int = 1) -> Elem:
        """``self^(q^i)``."""
        T = self.tower
        if i % T.M == 0:
            return self
        return Elem(T, T._apply_cols(T.frobenius_columns(i), self.c))

    def coords(self) -> tuple[int, ...]:
        return self.c

    def in_subfield(self, d: int) -> bool:
        return subfield_test(self, d)

    def __bool__(self) -> bool:
        return any(self.c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Elem):
            return NotImplemented
        return self.c == other.c and (self.tower is other.tower or self.tower == other.tower)

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        return f"Elem({list(self.c)})"


@lru_cache(maxsize=None)
def base_modulus(p: int, e: int) -> tuple[int, ...]:
    return smallest_irreducible(BaseField(p, 1, (0, 1)), p, e)


@lru_cache(maxsize=None)
def _build(p: int, e: int, M: int) -> Tower:
    h_base = base_modulus(p, e)
    base = BaseField(p, e, h_base)
    h_ext = smallest_irreducible(base, base.q, M)
    return Tower(p, e, M, h_base, h_ext)


def build_tower(p: int, e: int, M: int, bound: int | None = None) -> Tower:
    """Deterministic tower F_p < F_{p^e} < F_{p^(eM)}."""
    if not is_prime(p):
        raise NotPrime(f"p = {p} is not prime")
    if e < 1 or M < 1:
        raise ValueError("e and M must be positive")
    bound = size_bound() if bound is None else bound
    if p ** (e * M) > bound:
        raise SizeBoundExceeded(f"q^M = {p}^{e * M} exceeds the size bound {bound}")
    return _build(p, e, M)


def frobenius(x: Elem, i: int) -> Elem:
    return x.frob(i)


def subfield_test(x: Elem, d: int) -> bool:
    """Whether ``x`` lies in F_{q^d}; ``d`` must divide M."""
    if d < 1 or x.tower.M % d:
        raise NonDivisorDegree(f"{d} does not divide M = {x.tower.M}")
    return x.frob(d) == x


def min_subfield_degree(xs: Sequence[Elem], tower: Tower) -> int:
    """Smallest d | M with every element of ``xs`` in F_{q^d}."""
    for d in range(1, tower.M + 1):
        if tower.M % d == 0 and all(x.frob(d) == x for x in xs):
            return d
    return tower.M  # pragma: no cover
