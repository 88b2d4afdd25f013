"""Dense polynomial arithmetic over a small coefficient field.

Polynomials are lists of coefficients, lowest degree first, with no trailing
zeros (the zero polynomial is ``[]``).  The coefficient field is passed as an
object exposing ``add``, ``sub``, ``mul``, ``inv`` and ``zero``/``one``.
Only what is needed to pick moduli at field-construction time lives here.
"""

from __future__ import annotations

from typing import Protocol, Sequence


class CoeffField(Protocol):
    order: int

    def add(self, a: int, b: int) -> int: ...
    def sub(self, a: int, b: int) -> int: ...
    def mul(self, a: int, b: int) -> int: ...
    def inv(self, a: int) -> int: ...


def trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def polymod(F: CoeffField, f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Remainder of ``f`` modulo the nonzero polynomial ``g``."""
    r = trim(list(f))
    dg = len(g) - 1
    lead_inv = F.inv(g[-1])
    while len(r) - 1 >= dg and r:
        coef = F.mul(r[-1], lead_inv)
        shift = len(r) - 1 - dg
        for i, gi in enumerate(g):
            if gi:
                r[shift + i] = F.sub(r[shift + i], F.mul(coef, gi))
        trim(r)
    return r


def polymulmod(F: CoeffField, a: Sequence[int], b: Sequence[int], g: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = F.add(out[i + j], F.mul(ai, bj))
    return polymod(F, out, g)


def polypowmod(F: CoeffField, base: Sequence[int], exp: int, g: Sequence[int]) -> list[int]:
    result: list[int] = [1]
    b = polymod(F, base, g)
    while exp:
        if exp & 1:
            result = polymulmod(F, result, b, g)
        b = polymulmod(F, b, b, g)
        exp >>= 1
    return polymod(F, result, g)


def polysub(F: CoeffField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [
        F.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)
    ]
    return trim(out)


def polygcd(F: CoeffField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, polymod(F, a, b)
    return a


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division (``n`` is small here)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(F: CoeffField, f: Sequence[int]) -> bool:
    """Rabin's test for a monic ``f`` of degree >= 1 over a field of order ``F.order``."""
    deg = len(f) - 1
    if deg == 1:
        return True
    q = F.order
    x = [0, 1]
    if polypowmod(F, x, q**deg, f) != polymod(F, x, f):
        return False
    for r in prime_factors(deg):
        h = polysub(F, polypowmod(F, x, q ** (deg // r), f), x)
        if len(polygcd(F, f, h)) != 1:
            return False
    return True


def is_primitive(F: CoeffField, f: Sequence[int]) -> bool:
    """True iff ``x`` has multiplicative order ``q^deg - 1`` modulo the monic ``f``.

    That order forces every nonzero residue to be a unit, so ``f`` is
    irreducible as well.
    """
    deg = len(f) - 1
    if f[0] == 0:
        return False
    order = F.order**deg - 1
    x = [0, 1]
    if polypowmod(F, x, order, f) != [1]:
        return False
    return all(polypowmod(F, x, order // r, f) != [1] for r in prime_factors(order))
