"""F_q-subspaces of F_{q^n} under the multiplicative action of F_{q^n}^*."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from orbitflags import fqlinalg
from orbitflags.gfield import FieldCtx, FieldElement, divisors, multiplicative_order

_PROFILE_CHUNK = 1 << 15


@dataclass(frozen=True)
class Subspace:
    """A subspace stored by its canonical RREF basis (tuple of element codes)."""

    ctx: FieldCtx = field(repr=False)
    basis: tuple[int, ...]

    @classmethod
    def span(cls, ctx: FieldCtx, vectors: Iterable[int | FieldElement]) -> Subspace:
        codes = [v.code if isinstance(v, FieldElement) else int(v) for v in vectors]
        return cls(ctx, fqlinalg.rref(ctx, codes))

    @classmethod
    def zero(cls, ctx: FieldCtx) -> Subspace:
        return cls(ctx, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, v: int | FieldElement) -> bool:
        code = v.code if isinstance(v, FieldElement) else v
        return fqlinalg.contains(self.ctx, self.basis, code)

    def __le__(self, other: Subspace) -> bool:
        return fqlinalg.rank(self.ctx, self.basis + other.basis) == other.dim

    def __lt__(self, other: Subspace) -> bool:
        return self.dim < other.dim and self <= other

    def __add__(self, other: Subspace) -> Subspace:
        _check_same(self, other)
        return Subspace(self.ctx, fqlinalg.sum_spaces(self.ctx, self.basis, other.basis))

    def __and__(self, other: Subspace) -> Subspace:
        _check_same(self, other)
        return Subspace(self.ctx, fqlinalg.intersect_spaces(self.ctx, self.basis, other.basis))

    def __mul__(self, b: FieldElement) -> Subspace:
        return scalar_multiply(self, b)

    def shift(self, j: int) -> Subspace:
        """The translate U * alpha^j."""
        ctx = self.ctx
        logs = ctx.log[list(self.basis)] if self.basis else np.empty(0, dtype=np.int64)
        codes = ctx.antilog[(logs + j) % ctx.order]
        return Subspace(ctx, fqlinalg.rref(ctx, (int(c) for c in codes)))

    @functools.cached_property
    def translate_profile(self) -> np.ndarray:
        """Array ``D`` with ``D[j] = d_S(U, U * alpha^j)`` for j in [0, q^n - 1)."""
        return _translate_profile(self)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, basis={self.basis})"


def _check_same(u: Subspace, v: Subspace) -> None:
    if u.ctx is not v.ctx:
        raise ValueError("subspaces live in different fields")


def _batched_rank_gf2(rows: np.ndarray, nbits: int) -> np.ndarray:
    """Rank over F_2 of each bit-packed matrix in a stack of shape (B, r)."""
    rows = rows.copy()
    count, r = rows.shape
    ranks = np.zeros(count, dtype=np.int64)
    used = np.zeros((count, r), dtype=bool)
    idx = np.arange(count)
    for bit in range(nbits - 1, -1, -1):
        has = ((rows >> bit) & 1).astype(bool)
        cand = has & ~used
        exists = cand.any(axis=1)
        piv = cand.argmax(axis=1)
        prow = rows[idx, piv]
        elim = has & exists[:, None]
        elim[idx, piv] = False
        rows ^= np.where(elim, prow[:, None], 0)
        used[idx[exists], piv[exists]] = True
        ranks += exists
    return ranks


def _translate_profile(u: Subspace) -> np.ndarray:
    ctx, k = u.ctx, u.dim
    order = ctx.order
    if k == 0 or k == ctx.n:
        return np.zeros(order, dtype=np.int64)
    logs = ctx.log[list(u.basis)]
    if ctx.q == 2:
        out = np.empty(order, dtype=np.int64)
        for start in range(0, order, _PROFILE_CHUNK):
            js = np.arange(start, min(order, start + _PROFILE_CHUNK), dtype=np.int64)
            moved = ctx.antilog[(logs[None, :] + js[:, None]) % order]
            base = np.broadcast_to(np.asarray(u.basis, dtype=np.int64), moved.shape)
            ranks = _batched_rank_gf2(np.concatenate([base, moved], axis=1), ctx.n)
            out[start : start + len(js)] = 2 * ranks - 2 * k
        return out
    out = np.empty(order, dtype=np.int64)
    for j in range(order):
        moved = (int(c) for c in ctx.antilog[(logs + j) % order])
        out[j] = 2 * fqlinalg.rank(ctx, (*u.basis, *moved)) - 2 * k
    return out


def scalar_multiply(u: Subspace, b: FieldElement) -> Subspace:
    if b.is_zero:
        raise ValueError("cannot act by zero")
    return Subspace.span(u.ctx, (u.ctx.mul_codes(v, b.code) for v in u.basis))


def subspace_distance(u: Subspace, v: Subspace) -> int:
    """dim(U + V) - dim(U ∩ V)."""
    _check_same(u, v)
    total = fqlinalg.rank(u.ctx, u.basis + v.basis)
    return 2 * total - u.dim - v.dim


def span_over_subfield(ctx: FieldCtx, m: int, exponents: Iterable[int]) -> Subspace:
    """F_q-span of F_{q^m} * alpha^e for every e in ``exponents``."""
    c = ctx.subfield_exponent(m)
    vecs = [ctx.code_of(a * c + e) for e in exponents for a in range(m)]
    return Subspace.span(ctx, vecs)


@functools.lru_cache(maxsize=None)
def subfield(ctx: FieldCtx, m: int) -> Subspace:
    """F_{q^m} as an m-dimensional F_q-subspace (spanned by 1, g, ..., g^{m-1})."""
    return span_over_subfield(ctx, m, [0])


def is_field(u: Subspace) -> bool:
    """True iff ``u`` is a subfield of F_{q^n} (subfields are unique per order)."""
    n = u.ctx.n
    return 0 < u.dim and n % u.dim == 0 and u == subfield(u.ctx, u.dim)


def _stab_count(profile: np.ndarray, beta_exp: int, beta_order: int, order: int) -> int:
    js = (np.arange(beta_order, dtype=np.int64) * beta_exp) % order
    return int(np.count_nonzero(profile[js] == 0))


def stabilizer_order(u: Subspace, b: FieldElement) -> int:
    """|{b^j : U b^j = U}|."""
    if b.is_zero:
        raise ValueError("cannot act by zero")
    ctx = u.ctx
    return _stab_count(u.translate_profile, b.exponent, multiplicative_order(ctx, b), ctx.order)


def is_friend(u: Subspace, m: int) -> bool:
    """U is an F_{q^m}-space iff it is fixed by a generator of F_{q^m}^*."""
    return u.shift(u.ctx.subfield_exponent(m)) == u


def best_friend(u: Subspace) -> int:
    """Largest m with U an F_{q^m}-vector space."""
    if u.dim == 0:
        raise ValueError("the zero subspace has no best friend")
    for m in reversed(divisors(math.gcd(u.dim, u.ctx.n))):
        if is_friend(u, m):
            return m
    raise AssertionError("F_q is always a friend")


@dataclass
class SubspaceOrbit:
    """Orb_b(U): translates U b^j listed by increasing j."""

    generator: Subspace
    beta: FieldElement
    elements: list[Subspace]
    stabilizer_order: int

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def min_distance(self) -> int:
        """Minimum subspace distance (0 for a single codeword)."""
        u, b = self.generator, self.beta
        order = multiplicative_order(u.ctx, b)
        js = (np.arange(order, dtype=np.int64) * b.exponent) % u.ctx.order
        vals = u.translate_profile[js]
        vals = vals[vals > 0]
        return int(vals.min()) if len(vals) else 0


def orbit_subspace(u: Subspace, b: FieldElement) -> SubspaceOrbit:
    """Enumerate U, U b, U b^2, ... until the first repetition."""
    if b.is_zero:
        raise ValueError("cannot act by zero")
    order = multiplicative_order(u.ctx, b)
    elements = [u]
    current = u
    while True:
        current = scalar_multiply(current, b)
        if current == u:
            break
        elements.append(current)
    return SubspaceOrbit(u, b, elements, order // len(elements))


def minpoly_degree(ctx: FieldCtx, l: int, m: int) -> int:
    """Degree over F_{q^m} of the minimal polynomial of alpha^l."""
    if ctx.n % m:
        raise ValueError(f"{m} does not divide n = {ctx.n}")
    s = ctx.n // m
    for d in range(1, s + 1):
        if s % d == 0 and (l * ctx.q ** (m * d) - l) % ctx.order == 0:
            return d
    raise AssertionError("unreachable: d = n/m always works")


def regular_form_subspace(
    ctx: FieldCtx, m: int, l: int, t: int, allow_full: bool = False
) -> Subspace:
    """The subspace F_{q^m} + F_{q^m} a^l + ... + F_{q^m} a^{l(t-1)} of dimension m*t.

    ``t`` may not exceed the minimal-polynomial degree ``L`` of alpha^l over
    F_{q^m}; when ``L = n/m`` the case ``t = L`` is the whole field and is
    refused unless ``allow_full`` is set.
    """
    if m <= 0 or ctx.n % m:
        raise ValueError(f"{m} does not divide n = {ctx.n}")
    limit = ctx.order // (ctx.q**m - 1)
    if not 1 <= l < limit:
        raise ValueError(f"l must lie in [1, {limit})")
    if t < 1:
        raise ValueError("t must be positive")
    L = minpoly_degree(ctx, l, m)
    if t > L:
        raise ValueError(f"t = {t} exceeds the minimal polynomial degree L = {L}")
    if t == L and L * m == ctx.n and not allow_full:
        raise ValueError("t = L = n/m gives the whole field")
    u = span_over_subfield(ctx, m, [l * j for j in range(t)])
    assert u.dim == m * t
    return u


def frobenius_fixed_points(ctx: FieldCtx, m: int) -> set[int]:
    """Codes x with x^(q^m) = x, computed by brute force on the log table."""
    qm = ctx.q**m
    return {0} | {
        int(ctx.antilog[j]) for j in range(ctx.order) if (j * qm - j) % ctx.order == 0
    }


def subspace_from_exponents(ctx: FieldCtx, exponents: Sequence[int]) -> Subspace:
    return Subspace.span(ctx, (ctx.code_of(e) for e in exponents))
