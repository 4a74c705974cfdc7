"""JSON encodings shared by every module and the CLI.

* F_q element: array of e ints in [0, p), lowest degree first.
* Ambient element: array of M F_q encodings (power-basis coordinates).
* q-polynomial: array of ambient encodings, index i = coefficient of x^(q^i).
* Subspace: array of RREF basis rows, each row an ambient encoding.
* Block: ``{"label", "a", "B", "f", "basis"}``.
"""

from __future__ import annotations

from typing import Any

from .errors import WrongLength
from .gf import BaseField, Elem, Tower
from .qpoly import QPolynomial
from .steiner import Block, ConstructionParams, canonical_label, extract_aB
from .subspace import Subspace


def encode_base(F: BaseField, a: int) -> list[int]:
    return list(F.to_coeffs(a))


def decode_base(F: BaseField, obj: Any) -> int:
    if not isinstance(obj, list) or not all(isinstance(x, int) for x in obj):
        raise WrongLength(f"F_q element must be a list of {F.e} ints")
    return F.from_coeffs(obj)


def encode_elem(x: Elem) -> list[list[int]]:
    F = x.tower.base
    return [encode_base(F, c) for c in x.c]


def decode_elem(T: Tower, obj: Any) -> Elem:
    if not isinstance(obj, list) or len(obj) != T.M:
        raise WrongLength(f"ambient element must be a list of {T.M} F_q elements")
    return Elem(T, tuple(decode_base(T.base, c) for c in obj))


def encode_qpoly(f: QPolynomial) -> list:
    return [encode_elem(c) for c in f.coeffs]


def decode_qpoly(T: Tower, obj: Any) -> QPolynomial:
    if not isinstance(obj, list):
        raise WrongLength("q-polynomial must be a list of ambient elements")
    return QPolynomial(T, tuple(decode_elem(T, c) for c in obj))


def encode_subspace(V: Subspace) -> list:
    return [encode_elem(x) for x in V.vectors()]


def decode_subspace(T: Tower, obj: Any) -> Subspace:
    """Any list of generators is accepted and canonicalized to RREF."""
    if not isinstance(obj, list):
        raise WrongLength("subspace must be a list of ambient elements")
    return Subspace.span(T, [decode_elem(T, r) for r in obj])


def encode_block(b: Block) -> dict:
    return {
        "label": encode_elem(b.label.rep),
        "a": encode_elem(b.a),
        "B": [encode_elem(x) for x in b.B],
        "f": encode_qpoly(b.f),
        "basis": encode_subspace(b.space),
    }


def decode_block(params: ConstructionParams, obj: dict) -> Block:
    """Parse and re-validate a block: shape of f, label, and f vanishing on the basis."""
    T = params.tower
    f = decode_qpoly(T, obj["f"])
    a, B = extract_aB(params, f)
    if a != decode_elem(T, obj["a"]) or list(B) != [decode_elem(T, x) for x in obj["B"]]:
        raise ValueError("a/B disagree with f")
    label = canonical_label(a)
    if label.rep != decode_elem(T, obj["label"]):
        raise ValueError("label is not the canonical representative of a")
    space = decode_subspace(T, obj["basis"])
    if space.dim != params.t + 1 or any(f(v) for v in space.vectors()):
        raise ValueError("basis does not span a (t+1)-space inside ker f")
    return Block(space, label, a, B, f)
