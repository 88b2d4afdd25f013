"""Exact arithmetic in F_{q^n}, q = p^e, with full log/antilog tables.

Elements are addressed by an integer *code*: the coordinates of the element
in the polynomial basis 1, x, ..., x^{n-1} over F_q, written as base-q digits
(lowest degree = least significant digit).  Each F_q digit is in turn a
base-p encoding of a polynomial over F_p.  For q = 2 a code is simply the
bit-packed coordinate vector.  Nonzero elements are also addressed by their
discrete log with respect to the fixed primitive element alpha = x.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from orbitflags import _poly

MAX_FIELD_SIZE = 1 << 24


class FieldSizeError(ValueError):
    """Requested field exceeds the table-size cap."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of ``n``."""
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


class PrimeField:
    """F_p on codes 0..p-1."""

    def __init__(self, p: int):
        self.p = p
        self.order = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, self.p - 2, self.p)


class BaseField:
    """F_q = F_p[x]/(modulus) on codes 0..q-1 (base-p digits, low degree first)."""

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        self.p = p
        self.e = e
        self.order = p**e
        self.modulus = modulus
        self._fp = PrimeField(p)
        self._mul_cache: dict[tuple[int, int], int] = {}
        self._inv_cache: dict[int, int] = {}

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, d = divmod(a, self.p)
            out.append(d)
        return _poly.trim(out)

    def _undigits(self, digits: Sequence[int]) -> int:
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        return add_digitwise(a, b, self.p)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.e == 1:
            return (-a) % self.p
        return self._undigits([(-d) % self.p for d in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        key = (a, b) if a <= b else (b, a)
        hit = self._mul_cache.get(key)
        if hit is None:
            prod = _poly.polymulmod(self._fp, self._digits(a), self._digits(b), self.modulus)
            hit = self._mul_cache[key] = self._undigits(prod)
        return hit

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        hit = self._inv_cache.get(a)
        if hit is None:
            result, base, k = 1, a, self.order - 2
            while k:
                if k & 1:
                    result = self.mul(result, base)
                base = self.mul(base, base)
                k >>= 1
            hit = self._inv_cache[a] = result
        return hit


def add_digitwise(a: int, b: int, p: int) -> int:
    """Add two codes digit by digit in base ``p`` modulo ``p``."""
    if p == 2:
        return a ^ b
    out, scale = 0, 1
    while a or b:
        a, da = divmod(a, p)
        b, db = divmod(b, p)
        out += ((da + db) % p) * scale
        scale *= p
    return out


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    fp = PrimeField(p)
    for low in itertools.product(range(p), repeat=e):
        f = list(low) + [1]
        if _poly.is_irreducible(fp, f):
            return tuple(f)
    raise RuntimeError(f"no irreducible polynomial of degree {e} over F_{p}")


def _smallest_primitive(base: BaseField, n: int) -> tuple[int, ...]:
    for low in itertools.product(range(base.order), repeat=n):
        if low[0] == 0:
            continue
        f = list(low) + [1]
        if _poly.is_primitive(base, f):
            return tuple(f)
    raise RuntimeError(f"no primitive polynomial of degree {n} over F_{base.order}")


class FieldCtx:
    """Immutable description of F_{q^n} together with its log tables.

    Attributes: ``p``, ``e``, ``q``, ``n``, ``size`` (= q^n), ``order``
    (= q^n - 1, the order of the multiplicative group), ``modulus_base``,
    ``modulus_top`` (coefficient tuples, lowest degree first), ``antilog``
    (exponent -> code), ``log`` (code -> exponent, -1 at zero) and
    ``divisors_of_n``.
    """

    def __init__(self, p: int, e: int, n: int):
        self.p, self.e, self.n = p, e, n
        self.q = p**e
        self.size = self.q**n
        self.order = self.size - 1
        self.modulus_base = _smallest_irreducible(p, e)
        self.base = BaseField(p, e, self.modulus_base)
        self.modulus_top = _smallest_primitive(self.base, n)
        self.divisors_of_n = tuple(divisors(n))
        self.antilog, self.log = self._build_tables()

    def _build_tables(self) -> tuple[np.ndarray, np.ndarray]:
        q, n, base = self.q, self.n, self.base
        top_scale = q ** (n - 1)
        # red[t] is the code of -t * (modulus_top - x^n), added when x^n overflows
        red = []
        for t in range(q):
            code = 0
            for i in reversed(range(n)):
                code = code * q + base.neg(base.mul(t, self.modulus_top[i]))
            red.append(code)
        antilog = np.empty(self.order, dtype=np.int64)
        code = 1
        if self.p == 2:
            mask = self.size - 1
            shift = self.e
            top_shift = self.e * (n - 1)
            for k in range(self.order):
                antilog[k] = code
                code = ((code << shift) & mask) ^ red[code >> top_shift]
        else:
            for k in range(self.order):
                antilog[k] = code
                top, rest = divmod(code, top_scale)
                code = add_digitwise(rest * q, red[top], self.p)
        if code != 1:
            raise RuntimeError("modulus_top is not primitive")
        log = np.full(self.size, -1, dtype=np.int64)
        log[antilog] = np.arange(self.order, dtype=np.int64)
        antilog.flags.writeable = False
        log.flags.writeable = False
        return antilog, log

    def __repr__(self) -> str:
        return f"FieldCtx(F_{{{self.q}^{self.n}}})"

    # --- raw code-level operations -------------------------------------------

    def add_codes(self, a: int, b: int) -> int:
        return add_digitwise(a, b, self.p)

    def neg_code(self, a: int) -> int:
        if self.p == 2:
            return a
        return self.sub_codes(0, a)

    def sub_codes(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        out, scale = 0, 1
        while a or b:
            a, da = divmod(a, self.p)
            b, db = divmod(b, self.p)
            out += ((da - db) % self.p) * scale
            scale *= self.p
        return out

    def mul_codes(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.antilog[(self.log[a] + self.log[b]) % self.order])

    def code_of(self, exponent: int) -> int:
        return int(self.antilog[exponent % self.order])

    def exponent_of(self, code: int) -> int:
        if code == 0:
            raise ZeroDivisionError("zero has no discrete log")
        return int(self.log[code])

    def digits(self, code: int) -> list[int]:
        """Coordinate vector (F_q codes) of an element code, lowest degree first."""
        out = []
        for _ in range(self.n):
            code, d = divmod(code, self.q)
            out.append(d)
        return out

    def undigits(self, digits: Sequence[int]) -> int:
        if len(digits) != self.n:
            raise ValueError(f"expected a vector of length {self.n}, got {len(digits)}")
        code = 0
        for d in reversed(digits):
            if not 0 <= d < self.q:
                raise ValueError(f"coordinate {d} is not an element of F_{self.q}")
            code = code * self.q + d
        return code

    # --- element constructors --------------------------------------------------

    def element(self, exponent: int) -> FieldElement:
        return FieldElement(self, self.code_of(exponent))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def alpha(self) -> FieldElement:
        return self.element(1)

    def subfield_exponent(self, m: int) -> int:
        """(q^n - 1)/(q^m - 1): alpha to this power generates F_{q^m}^*."""
        if m <= 0 or self.n % m:
            raise ValueError(f"{m} does not divide n = {self.n}")
        return self.order // (self.q**m - 1)


@functools.lru_cache(maxsize=None)
def build_field(p: int, e: int, n: int) -> FieldCtx:
    """Build (and memoize) the field F_{q^n} with q = p^e.

    The moduli are the lexicographically smallest admissible polynomials,
    comparing coefficient tuples lowest degree first, so every exponent that
    shows up in output is reproducible.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if e < 1 or n < 1:
        raise ValueError("e and n must be positive")
    if p ** (e * n) > MAX_FIELD_SIZE:
        raise FieldSizeError(f"field of size {p}^{e * n} exceeds the 2^24 table cap")
    return FieldCtx(p, e, n)


@dataclass(frozen=True)
class FieldElement:
    """An element of F_{q^n}; equality and hashing go through its code."""

    ctx: FieldCtx
    code: int

    @property
    def is_zero(self) -> bool:
        return self.code == 0

    @property
    def exponent(self) -> int:
        return self.ctx.exponent_of(self.code)

    @property
    def coords(self) -> tuple[int, ...]:
        return tuple(self.ctx.digits(self.code))

    def _coerce(self, other: object) -> FieldElement:
        if not isinstance(other, FieldElement):
            return NotImplemented  # type: ignore[return-value]
        if other.ctx is not self.ctx:
            raise ValueError("elements belong to different fields")
        return other

    def __add__(self, other: FieldElement) -> FieldElement:
        other = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.add_codes(self.code, other.code))

    def __sub__(self, other: FieldElement) -> FieldElement:
        other = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.sub_codes(self.code, other.code))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.ctx, self.ctx.neg_code(self.code))

    def __mul__(self, other: FieldElement) -> FieldElement:
        other = self._coerce(other)
        return FieldElement(self.ctx, self.ctx.mul_codes(self.code, other.code))

    def inverse(self) -> FieldElement:
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return self.ctx.element(-self.exponent)

    def __truediv__(self, other: FieldElement) -> FieldElement:
        other = self._coerce(other)
        return self * other.inverse()

    def __pow__(self, k: int) -> FieldElement:
        if self.is_zero:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return self.ctx.one if k == 0 else self
        return self.ctx.element(self.exponent * k)

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        return f"a^{self.exponent}"


def multiplicative_order(ctx: FieldCtx, a: FieldElement) -> int:
    if a.is_zero:
        raise ZeroDivisionError("zero has no multiplicative order")
    return ctx.order // math.gcd(a.exponent, ctx.order)


def subfield_generator(ctx: FieldCtx, m: int) -> FieldElement:
    """Primitive element alpha^((q^n-1)/(q^m-1)) of the subfield F_{q^m}."""
    return ctx.element(ctx.subfield_exponent(m))


def to_coords(ctx: FieldCtx, a: FieldElement) -> tuple[int, ...]:
    return tuple(ctx.digits(a.code))


def from_coords(ctx: FieldCtx, v: Sequence[int]) -> FieldElement:
    return FieldElement(ctx, ctx.undigits(v))


def frobenius(a: FieldElement, power: int = 1) -> FieldElement:
    """x -> x^(q^power)."""
    return a ** (a.ctx.q**power)
