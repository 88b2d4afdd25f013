"""Row-space linear algebra over F_q on element codes.

A matrix is a sequence of row codes (see :mod:`orbitflags.gfield`); the
coordinate with the highest degree is the leftmost column.  The canonical
form of a row space is its reduced row echelon form with zero rows dropped,
returned as a tuple of codes in decreasing pivot order, so that two row
spaces are equal iff their canonical tuples are equal.  Over F_2 rows are
plain bitmasks and elimination is done with XOR.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from orbitflags.gfield import FieldCtx

Rows = tuple[int, ...]


def _rref_gf2(rows: Iterable[int]) -> Rows:
    basis: dict[int, int] = {}
    for r in rows:
        for p, b in basis.items():
            if (r >> p) & 1:
                r ^= b
        if r:
            p = r.bit_length() - 1
            for k, b in list(basis.items()):
                if (b >> p) & 1:
                    basis[k] = b ^ r
            basis[p] = r
    return tuple(basis[p] for p in sorted(basis, reverse=True))


def _rank_gf2(rows: Iterable[int]) -> int:
    piv: dict[int, int] = {}
    for r in rows:
        while r:
            p = r.bit_length() - 1
            b = piv.get(p)
            if b is None:
                piv[p] = r
                break
            r ^= b
    return len(piv)


def _rref_general(ctx: FieldCtx, rows: Iterable[int], length: int) -> Rows:
    """Gauss-Jordan on digit vectors of the given length over F_q."""
    F, q = ctx.base, ctx.q

    def to_digits(code: int) -> list[int]:
        out = []
        for _ in range(length):
            code, d = divmod(code, q)
            out.append(d)
        return out

    basis: dict[int, list[int]] = {}  # pivot position -> row with pivot entry 1
    for code in rows:
        r = to_digits(code)
        for p, b in basis.items():
            c = r[p]
            if c:
                r = [F.sub(x, F.mul(c, y)) for x, y in zip(r, b)]
        nz = [i for i, x in enumerate(r) if x]
        if not nz:
            continue
        p = nz[-1]
        inv = F.inv(r[p])
        r = [F.mul(inv, x) for x in r]
        for k, b in list(basis.items()):
            c = b[p]
            if c:
                basis[k] = [F.sub(x, F.mul(c, y)) for x, y in zip(b, r)]
        basis[p] = r
    out = []
    for p in sorted(basis, reverse=True):
        code = 0
        for d in reversed(basis[p]):
            code = code * q + d
        out.append(code)
    return tuple(out)


def rref(ctx: FieldCtx, rows: Iterable[int]) -> Rows:
    """Canonical RREF of the row space spanned by ``rows``."""
    if ctx.q == 2:
        return _rref_gf2(rows)
    return _rref_general(ctx, rows, ctx.n)


def rank(ctx: FieldCtx, rows: Iterable[int]) -> int:
    if ctx.q == 2:
        return _rank_gf2(rows)
    return len(_rref_general(ctx, rows, ctx.n))


def sum_spaces(ctx: FieldCtx, a: Sequence[int], b: Sequence[int]) -> Rows:
    return rref(ctx, (*a, *b))


def intersect_spaces(ctx: FieldCtx, a: Sequence[int], b: Sequence[int]) -> Rows:
    """Basis of rowspace(a) ∩ rowspace(b) by the Zassenhaus algorithm."""
    shift = ctx.size  # left block = q^n * code
    stacked = [x * shift + x for x in a] + [y * shift for y in b]
    if ctx.q == 2:
        ech = _rref_gf2(stacked)
    else:
        ech = _rref_general(ctx, stacked, 2 * ctx.n)
    return rref(ctx, (r for r in ech if r < shift))


def contains(ctx: FieldCtx, a: Sequence[int], v: int) -> bool:
    if not 0 <= v < ctx.size:
        raise ValueError("vector does not have length n")
    if v == 0:
        return True
    return rank(ctx, (*a, v)) == rank(ctx, a)


def combine(ctx: FieldCtx, rows: Sequence[int], coeffs: Sequence[int]) -> int:
    """The F_q-linear combination sum(c_i * row_i)."""
    out = 0
    for c, r in zip(coeffs, rows):
        if c:
            out = ctx.add_codes(out, ctx.mul_codes(c, r))
    return out


def span_elements(ctx: FieldCtx, rows: Sequence[int]) -> Iterator[int]:
    """Every vector of the row space (q^k of them); meant for small k."""
    out = {0}
    for r in rows:
        multiples = [ctx.mul_codes(c, r) for c in range(1, ctx.q)]
        out |= {ctx.add_codes(x, m) for x in out for m in multiples}
    return iter(sorted(out))
