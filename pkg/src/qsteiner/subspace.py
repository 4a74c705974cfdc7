"""F_q-subspaces of the ambient field, stored in canonical RREF."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import linalg
from .errors import DimensionMismatch
from .gf import Elem, Tower


@dataclass(frozen=True)
class Subspace:
    """Rows of ``basis`` are the F_q coordinates of a basis, in reduced row
    echelon form.  Two subspaces are equal iff their RREF matrices are."""

    tower: Tower
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, tower: Tower, rows: Iterable[Sequence[int]]) -> Subspace:
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != tower.M:
                raise DimensionMismatch(f"row of length {len(r)}, expected {tower.M}")
        R, _ = linalg.rref(tower.base, rows, tower.M) if rows else ([], [])
        return cls(tower, tuple(tuple(r) for r in R))

    @classmethod
    def span(cls, tower: Tower, elems: Iterable[Elem]) -> Subspace:
        return cls.from_rows(tower, (x.c for x in elems))

    @classmethod
    def zero(cls, tower: Tower) -> Subspace:
        return cls(tower, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(row) if x) for row in self.basis]

    def vectors(self) -> list[Elem]:
        return [Elem(self.tower, row) for row in self.basis]

    def reduce(self, v: Sequence[int]) -> list[int]:
        """``v`` minus its projection along the RREF rows (zero iff v is inside)."""
        F = self.tower.base
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            if v[pc]:
                v = F.vec_sub_scaled(v, v[pc], row)
        return v

    def contains(self, x: Elem) -> bool:
        return not any(self.reduce(x.c))

    def __contains__(self, x: Elem) -> bool:
        return self.contains(x)

    def contains_space(self, other: Subspace) -> bool:
        return all(not any(self.reduce(row)) for row in other.basis)

    def __le__(self, other: Subspace) -> bool:
        return other.contains_space(self)

    def join(self, other: Subspace) -> Subspace:
        return Subspace.from_rows(self.tower, self.basis + other.basis)

    def intersection(self, other: Subspace) -> Subspace:
        if not self.basis or not other.basis:
            return Subspace.zero(self.tower)
        F = self.tower.base
        dA = self.dim
        # columns: basis rows of self, then negated basis rows of other
        cols = list(self.basis) + [[F.neg(x) for x in row] for row in other.basis]
        N = linalg.transpose(cols)
        vecs = []
        for sol in linalg.nullspace(F, N, len(cols)):
            v = [0] * self.tower.M
            for coef, row in zip(sol[:dA], self.basis):
                if coef:
                    v = F.vec_add(v, F.vec_scale(coef, row))
            vecs.append(v)
        return Subspace.from_rows(self.tower, vecs)

    def elements(self) -> Iterator[Elem]:
        """All q^dim elements."""
        F = self.tower.base
        for coefs in itertools.product(range(F.q), repeat=self.dim):
            v = [0] * self.tower.M
            for c, row in zip(coefs, self.basis):
                if c:
                    v = F.vec_add(v, F.vec_scale(c, row))
            yield Elem(self.tower, tuple(v))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, basis={[list(r) for r in self.basis]})"
