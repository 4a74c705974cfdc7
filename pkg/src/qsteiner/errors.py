"""Exception types raised across the package.

Every error derives from :class:`QSteinerError`; the CLI maps
:class:`AmbientTooSmall` to its own exit code and everything else to a
usage/domain error.
"""

from __future__ import annotations


class QSteinerError(Exception):
    """Base class for domain errors."""


class NotPrime(QSteinerError, ValueError):
    pass


class SizeBoundExceeded(QSteinerError, ValueError):
    pass


class MixedTowers(QSteinerError, ValueError):
    pass


class NonDivisorDegree(QSteinerError, ValueError):
    pass


class WrongLength(QSteinerError, ValueError):
    pass


class DimensionMismatch(QSteinerError, ValueError):
    pass


class DivisionByZero(QSteinerError, ZeroDivisionError):
    pass


class ZeroPolynomial(QSteinerError, ValueError):
    pass


class NonzeroLinearTerm(QSteinerError, ValueError):
    pass


class BothZero(QSteinerError, ValueError):
    pass


class ZeroA(QSteinerError, ValueError):
    pass


class WrongDim(QSteinerError, ValueError):
    pass


class WrongDegree(QSteinerError, ValueError):
    pass


class ShapeViolation(QSteinerError, ValueError):
    pass


class BadDims(QSteinerError, ValueError):
    pass


class OutOfRange(QSteinerError, ValueError):
    pass


class AmbientTooSmall(QSteinerError):
    """The ambient field F_{q^M} does not contain an object the operation needs.

    ``recommended_M`` is an ambient degree over F_q that is large enough.
    """

    def __init__(self, message: str, recommended_M: int | None = None):
        super().__init__(message)
        self.recommended_M = recommended_M
