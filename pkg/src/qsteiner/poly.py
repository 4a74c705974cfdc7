"""Dense univariate polynomials over a field.

Polynomials are lists of coefficients, lowest degree first, with no
trailing zeros (the zero polynomial is ``[]``).  The field is any object
with ``zero``, ``one``, ``add``, ``sub``, ``neg``, ``mul`` and ``inv``;
both :class:`qsteiner.gf.BaseField` (ints) and :class:`qsteiner.gf.Tower`
(ambient elements) qualify.
"""

from __future__ import annotations

from typing import Any, Sequence

Poly = list


def trim(F, a: Sequence[Any]) -> Poly:
    a = list(a)
    while a and a[-1] == F.zero:
        a.pop()
    return a


def deg(a: Sequence[Any]) -> int:
    """Degree, with -1 for the zero polynomial."""
    return len(a) - 1


def add(F, a: Sequence[Any], b: Sequence[Any]) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return trim(F, out)


def sub(F, a: Sequence[Any], b: Sequence[Any]) -> Poly:
    return add(F, a, [F.neg(c) for c in b])


def scale(F, c, a: Sequence[Any]) -> Poly:
    return trim(F, [F.mul(c, x) for x in a])


def mul(F, a: Sequence[Any], b: Sequence[Any]) -> Poly:
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == F.zero:
            continue
        for j, y in enumerate(b):
            if y != F.zero:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(F, out)


def divmod_(F, a: Sequence[Any], b: Sequence[Any]) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], trim(F, r)
    lead_inv = F.inv(b[-1])
    q = [F.zero] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c == F.zero:
            continue
        c = F.mul(c, lead_inv)
        q[k - db] = c
        for j in range(db + 1):
            r[k - db + j] = F.sub(r[k - db + j], F.mul(c, b[j]))
    return trim(F, q), trim(F, r[:db])


def mod(F, a: Sequence[Any], b: Sequence[Any]) -> Poly:
    return divmod_(F, a, b)[1]


def monic(F, a: Sequence[Any]) -> Poly:
    if not a:
        return []
    inv = F.inv(a[-1])
    return [F.mul(inv, c) for c in a]


def gcd(F, a: Sequence[Any], b: Sequence[Any]) -> Poly:
    """Monic gcd by the Euclidean algorithm; ``gcd(0, 0) = 0``."""
    a, b = trim(F, a), trim(F, b)
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def inverse_mod(F, a: Sequence[Any], m: Sequence[Any]) -> Poly:
    """Inverse of ``a`` modulo ``m`` by the extended Euclidean algorithm."""
    r0, r1 = trim(F, m), mod(F, a, m)
    s0, s1 = [], [F.one]
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible modulo m")
    return scale(F, F.inv(r0[0]), s0)


def powmod(F, a: Sequence[Any], n: int, m: Sequence[Any]) -> Poly:
    result = [F.one]
    base = mod(F, a, m)
    while n:
        if n & 1:
            result = mod(F, mul(F, result, base), m)
        n >>= 1
        if n:
            base = mod(F, mul(F, base, base), m)
    return mod(F, result, m)


def x_power_qk_mod(F, q: int, k: int, m: Sequence[Any]) -> Poly:
    """``x^(q^k) mod m`` by ``k`` successive q-th powerings."""
    r = mod(F, [F.zero, F.one], m)
    for _ in range(k):
        r = powmod(F, r, q, m)
    return r


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(F, q: int, h: Sequence[Any]) -> bool:
    """Rabin's test for a monic ``h`` over a field with ``q`` elements."""
    n = deg(h)
    if n < 1:
        return False
    if n == 1:
        return True
    if h[0] == F.zero:
        return False
    x = [F.zero, F.one]
    if x_power_qk_mod(F, q, n, h) != trim(F, x):
        return False
    for r in _prime_factors(n):
        t = sub(F, x_power_qk_mod(F, q, n // r, h), x)
        if len(gcd(F, h, t)) != 1:
            return False
    return True
