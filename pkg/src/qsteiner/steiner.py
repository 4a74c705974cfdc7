"""Blocks f_{a,B}, the classes B_a, covering t-spaces and classifying (t+1)-spaces.

For ``a != 0`` and ``B = (b_1, ..., b_t)`` the block polynomial is

    f_{a,B} = a^q x + b_1 x^q + ... + b_t x^(q^t) + (-1)^(t+1) a x^(q^(t+1))

and its kernel is a (t+1)-space.  The class of ``a`` collects all such
kernels; ``a`` and ``lam * a`` (lam in F_q^*) give the same class, so
classes are labelled by a canonical orbit representative.

Everything happens inside a finite ambient F_{q^M}.  A root of
``g(x) = a`` (needed by :func:`cover`) generates an extension of degree at
most ``q^t`` over the field holding the inputs, so inputs from F_{q^m}
are always served by ``M = m * lcm(1, ..., q^t)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .errors import AmbientTooSmall, ShapeViolation, WrongDegree, WrongDim, ZeroA
from .gf import Elem, Tower, min_subfield_degree
from .moore import annihilator_bottom, annihilator_top
from .qpoly import QPolynomial, splitting_degree
from .subspace import Subspace


def recommended_ambient(q: int, t: int, m: int) -> int:
    """Ambient degree guaranteeing every cover of inputs from F_{q^m}."""
    return m * math.lcm(*range(1, q**t + 1))


@dataclass(frozen=True)
class ConstructionParams:
    tower: Tower
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be a positive integer")

    @property
    def q(self) -> int:
        return self.tower.q


@dataclass(frozen=True)
class ClassLabel:
    """Canonical representative of the F_q^*-orbit of a nonzero element:
    its first nonzero coordinate is 1."""

    rep: Elem


@dataclass(frozen=True)
class Block:
    space: Subspace
    label: ClassLabel
    a: Elem
    B: tuple[Elem, ...]
    f: QPolynomial


def _signed(c: Elem, exponent: int) -> Elem:
    return c if exponent % 2 == 0 else -c


def _check_a(a: Elem) -> None:
    if not a:
        raise ZeroA("a must be nonzero")


def f_from_aB(params: ConstructionParams, a: Elem, B: Sequence[Elem]) -> QPolynomial:
    _check_a(a)
    t = params.t
    if len(B) != t:
        raise WrongDim(f"B must have length t = {t}, got {len(B)}")
    return QPolynomial(params.tower, (a.frob(1), *B, _signed(a, t + 1)))


def extract_aB(params: ConstructionParams, f: QPolynomial) -> tuple[Elem, tuple[Elem, ...]]:
    """Inverse of :func:`f_from_aB`; rejects polynomials not of that shape."""
    t = params.t
    if f.qdegree != t + 1:
        raise WrongDegree(f"expected q-degree {t + 1}, got {f.qdegree}")
    c = f.coeffs
    a = _signed(c[t + 1], t + 1)
    if c[0] != a.frob(1):
        raise ShapeViolation("x-coefficient is not a^q")
    return a, tuple(c[1:t + 1])


def canonical_label(a: Elem) -> ClassLabel:
    _check_a(a)
    lead = next(x for x in a.c if x)
    return ClassLabel(a.scale(a.tower.base.inv(lead)))


def _too_small(T: Tower, h: list[Elem], inputs: Sequence[Elem], what: str) -> AmbientTooSmall:
    d = min_subfield_degree(inputs, T)
    j = splitting_degree(T, h, d)
    rec = math.lcm(T.M, d * j) if j else None
    hint = f"; use an ambient of degree {rec}" if rec else ""
    return AmbientTooSmall(f"{what} is not contained in F_(q^{T.M}){hint}", rec)


def block(params: ConstructionParams, a: Elem, B: Sequence[Elem]) -> Block:
    """The block ker f_{a,B}; its full kernel must lie in the ambient."""
    f = f_from_aB(params, a, B)
    space = f.kernel()
    if space.dim < params.t + 1:
        raise _too_small(params.tower, f.to_conventional(), (a, *B),
                         f"kernel of f_(a,B) (found dimension {space.dim} < {params.t + 1})")
    return Block(space, canonical_label(a), a, tuple(B), f)


def cover(params: ConstructionParams, a: Elem, V: Subspace) -> Block:
    """The unique block of the class of ``a`` containing the t-space ``V``.

    Solves ``g(x) = a`` for ``g`` the bottom-row annihilator of ``V``; the
    solutions form a coset of ``V`` and the lexicographically smallest one
    is used.
    """
    _check_a(a)
    T, t = params.tower, params.t
    if V.dim != t:
        raise WrongDim(f"expected a {t}-space, got dimension {V.dim}")
    vs = V.vectors()
    g = annihilator_bottom(vs)
    sol = linalg.linsolve(T.base, g.matrix(), a.c, T.M)
    if sol is None:
        h = g.to_conventional()
        h[0] = h[0] - a
        raise _too_small(T, h, (a, *vs), "a root of g(x) = a")
    # the solution coset is particular + V; reducing by V's RREF gives its lex minimum
    v = Elem(T, tuple(V.reduce(sol.particular)))
    f = annihilator_top([*vs, v])
    a2, B = extract_aB(params, f)
    if a2 != a:
        raise ShapeViolation("Moore determinant of the cover differs from a")
    return Block(V.join(Subspace.span(T, [v])), canonical_label(a), a, B, f)


def classify(params: ConstructionParams, W: Subspace) -> Block:
    """The class containing the (t+1)-space ``W``, with (a, B) canonically scaled."""
    T, t = params.tower, params.t
    if W.dim != t + 1:
        raise WrongDim(f"expected a {t + 1}-space, got dimension {W.dim}")
    f = annihilator_top(W.vectors())
    b, _ = extract_aB(params, f)
    lead = next(x for x in b.c if x)
    f = f.scale(T.embed(T.base.inv(lead)))
    a, B = extract_aB(params, f)
    return Block(W, ClassLabel(a), a, B, f)
