"""Moore matrices, Moore determinants and the two annihilator polynomials.

``annihilator_top`` puts the row ``x, x^q, ..., x^(q^k)`` above the
generator rows, ``annihilator_bottom`` below them.  They differ by the
sign ``(-1)^k``; both are kept because the block polynomial and the
covering polynomial use different conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg
from .gf import Elem
from .qpoly import QPolynomial


@dataclass(frozen=True)
class MooreMatrix:
    generators: tuple[Elem, ...]
    ncols: int

    @property
    def rows(self) -> list[list[Elem]]:
        return [[v.frob(j) for j in range(self.ncols)] for v in self.generators]


def moore_matrix(vs: Sequence[Elem], ncols: int | None = None) -> MooreMatrix:
    return MooreMatrix(tuple(vs), len(vs) if ncols is None else ncols)


def moore_det(vs: Sequence[Elem]) -> Elem:
    """det [v_i^(q^j)], zero iff the v_i are F_q-linearly dependent."""
    if not vs:
        raise ValueError("need at least one generator")
    T = vs[0].tower
    return linalg.det(T, moore_matrix(vs).rows)


def _minors(vs: Sequence[Elem]) -> list[Elem]:
    """Determinants of the k x k submatrices of the k x (k+1) Moore matrix,
    minor i omitting column i."""
    T = vs[0].tower
    rows = moore_matrix(vs, len(vs) + 1).rows
    return [linalg.det(T, [r[:i] + r[i + 1:] for r in rows]) for i in range(len(vs) + 1)]


def annihilator_top(vs: Sequence[Elem]) -> QPolynomial:
    """det of the Moore matrix with the x-row on top, as a q-polynomial."""
    if not vs:
        raise ValueError("need at least one generator")
    T = vs[0].tower
    coeffs = [m if i % 2 == 0 else -m for i, m in enumerate(_minors(vs))]
    return QPolynomial(T, tuple(coeffs))


def annihilator_bottom(vs: Sequence[Elem]) -> QPolynomial:
    """det of the Moore matrix with the x-row at the bottom.

    ``annihilator_bottom(vs)(w) == moore_det([*vs, w])`` for every ``w``.
    """
    if not vs:
        raise ValueError("need at least one generator")
    T = vs[0].tower
    k = len(vs)
    coeffs = [m if (k + i) % 2 == 0 else -m for i, m in enumerate(_minors(vs))]
    return QPolynomial(T, tuple(coeffs))
