"""Linearized polynomials c_0 x + c_1 x^q + ... + c_k x^(q^k) over F_{q^M}.

Kernels are computed by F_q-linear algebra on the M x M matrix of the
evaluation map, so they are the roots lying in the ambient field.  The
conventional (ordinary-degree) view exists for the gcd cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg, poly
from .errors import BothZero, MixedTowers, NonzeroLinearTerm, ZeroPolynomial
from .gf import Elem, Tower
from .subspace import Subspace


@dataclass(frozen=True)
class QPolynomial:
    """``coeffs[i]`` is the coefficient of ``x^(q^i)``; trailing zeros are trimmed."""

    tower: Tower
    coeffs: tuple[Elem, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        for x in c:
            if x.tower is not self.tower and x.tower != self.tower:
                raise MixedTowers("coefficient from a different tower")
        while c and not c[-1]:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, tower: Tower, i: int, c: Elem | None = None) -> QPolynomial:
        c = tower.one if c is None else c
        return cls(tower, (tower.zero,) * i + (c,))

    @property
    def qdegree(self) -> int:
        """q-degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Ordinary degree q^k."""
        return self.tower.q ** self.qdegree if self.coeffs else -1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x: Elem) -> Elem:
        acc = self.tower.zero
        for i, c in enumerate(self.coeffs):
            if c:
                acc = acc + c * x.frob(i)
        return acc

    evaluate = __call__

    def _require_nonzero(self) -> None:
        if not self.coeffs:
            raise ZeroPolynomial("operation undefined on the zero polynomial")

    def is_separable(self) -> bool:
        self._require_nonzero()
        return bool(self.coeffs[0])

    def matrix(self) -> list[list[int]]:
        """F_q-matrix of ``x -> f(x)`` in the power basis (columns = images of y^j)."""
        T = self.tower
        frobs = [T.frobenius_columns(i) for i in range(len(self.coeffs))]
        cols = []
        for j in range(T.M):
            acc = T.zero
            for i, c in enumerate(self.coeffs):
                if c:
                    acc = acc + c * Elem(T, frobs[i][j])
            cols.append(acc.c)
        return linalg.transpose(cols)

    def kernel(self) -> Subspace:
        """Roots in the ambient field; dimension is at most the q-degree."""
        self._require_nonzero()
        T = self.tower
        return Subspace(T, tuple(tuple(v) for v in linalg.nullspace(T.base, self.matrix(), T.M)))

    def __add__(self, other: QPolynomial) -> QPolynomial:
        T = self.tower
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (T.zero,) * (n - len(self.coeffs))
        b = other.coeffs + (T.zero,) * (n - len(other.coeffs))
        return QPolynomial(T, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> QPolynomial:
        return QPolynomial(self.tower, tuple(-c for c in self.coeffs))

    def __sub__(self, other: QPolynomial) -> QPolynomial:
        return self + (-other)

    def scale(self, lam: Elem) -> QPolynomial:
        return QPolynomial(self.tower, tuple(lam * c for c in self.coeffs))

    def q_shift_root(self) -> QPolynomial:
        """The ``h`` with ``h(x)^q = f(x)``, for ``f`` with zero linear term."""
        self._require_nonzero()
        if self.coeffs[0]:
            raise NonzeroLinearTerm("x-coefficient must be zero")
        back = self.tower.M - 1  # Frobenius inverse on F_{q^M}
        return QPolynomial(self.tower, tuple(c.frob(back) for c in self.coeffs[1:]))

    def to_conventional(self) -> list[Elem]:
        """Coefficients by ordinary degree, lowest first."""
        T = self.tower
        if not self.coeffs:
            return []
        out = [T.zero] * (self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[T.q**i] = c
        return out

    @classmethod
    def from_conventional(cls, tower: Tower, coeffs: Sequence[Elem]) -> QPolynomial:
        q = tower.q
        powers = {q**i: i for i in range(len(coeffs).bit_length() + 1) if q**i < len(coeffs)}
        out = [tower.zero] * (max(powers.values(), default=-1) + 1)
        for n, c in enumerate(coeffs):
            if not c:
                continue
            if n not in powers:
                raise ValueError(f"x^{n} is not a q-power monomial")
            out[powers[n]] = c
        return cls(tower, tuple(out))

    def __repr__(self) -> str:
        return f"QPolynomial({[list(c.c) for c in self.coeffs]})"


def is_separable(f: QPolynomial) -> bool:
    return f.is_separable()


def kernel(f: QPolynomial) -> Subspace:
    return f.kernel()


def qp_sub(f: QPolynomial, g: QPolynomial) -> QPolynomial:
    return f - g


def qp_scale(lam: Elem, f: QPolynomial) -> QPolynomial:
    return f.scale(lam)


def q_shift_root(f: QPolynomial) -> QPolynomial:
    return f.q_shift_root()


def subfield(tower: Tower, d: int) -> Subspace:
    """F_{q^d} inside the ambient, as the kernel of x^(q^d) - x."""
    f = QPolynomial(tower, (-tower.one,) + (tower.zero,) * (d - 1) + (tower.one,))
    return f.kernel()


def conventional_gcd(f: QPolynomial, g: QPolynomial) -> list[Elem]:
    """Monic gcd of ``f`` and ``g`` viewed as ordinary polynomials."""
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    return poly.gcd(f.tower, f.to_conventional(), g.to_conventional())


def kernel_intersection(f: QPolynomial, g: QPolynomial) -> Subspace:
    """Common ambient roots, by one nullspace of the stacked evaluation matrices."""
    f._require_nonzero()
    g._require_nonzero()
    T = f.tower
    stacked = f.matrix() + g.matrix()
    return Subspace(T, tuple(tuple(v) for v in linalg.nullspace(T.base, stacked, T.M)))


def _qth_power_mod(T: Tower, r: list[Elem], h: list[Elem]) -> list[Elem]:
    """``r(x)^q mod h`` using additivity of the q-th power map."""
    q = T.q
    if not r:
        return []
    out = [T.zero] * ((len(r) - 1) * q + 1)
    for i, c in enumerate(r):
        out[i * q] = c.frob(1)
    return poly.mod(T, out, h)


def x_qk_mod(T: Tower, k: int, h: Sequence[Elem]) -> list[Elem]:
    """``x^(q^k) mod h`` over the ambient field."""
    h = list(h)
    r = poly.mod(T, [T.zero, T.one], h)
    for _ in range(k):
        r = _qth_power_mod(T, r, h)
    return r


def ambient_root_count(T: Tower, h: Sequence[Elem]) -> int:
    """Number of distinct roots of ``h`` in F_{q^M}: deg gcd(h, x^(q^M) - x)."""
    h = poly.trim(T, h)
    if not h:
        raise ZeroPolynomial("the zero polynomial has every element as a root")
    r = x_qk_mod(T, T.M, h)
    return poly.deg(poly.gcd(T, h, poly.sub(T, r, [T.zero, T.one])))


def splitting_degree(T: Tower, h: Sequence[Elem], d: int, limit: int = 5040) -> int | None:
    """Smallest j with every root of the squarefree ``h`` in F_{q^(dj)}.

    ``h`` must have coefficients in F_{q^d}.  Returns ``None`` if no
    ``j <= limit`` works.
    """
    h = poly.monic(T, poly.trim(T, h))
    x = poly.mod(T, [T.zero, T.one], h)
    r = x
    for j in range(1, limit + 1):
        for _ in range(d):
            r = _qth_power_mod(T, r, h)
        if r == x:
            return j
    return None
