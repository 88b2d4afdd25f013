"""Flags on F_{q^n}: strictly nested chains of proper nonzero subspaces."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Literal, Sequence

import numpy as np

from orbitflags.gfield import FieldCtx, FieldElement
from orbitflags.subspaces import (
    Subspace,
    best_friend,
    is_field,
    scalar_multiply,
    subspace_distance,
)


class FlagError(ValueError):
    """Invalid flag (nesting or dimension violation)."""


@dataclass(frozen=True)
class Flag:
    subspaces: tuple[Subspace, ...]

    @property
    def ctx(self) -> FieldCtx:
        return self.subspaces[0].ctx

    @property
    def type_vector(self) -> tuple[int, ...]:
        return tuple(u.dim for u in self.subspaces)

    def __len__(self) -> int:
        return len(self.subspaces)

    def __getitem__(self, i: int) -> Subspace:
        return self.subspaces[i]

    def __iter__(self):
        return iter(self.subspaces)

    def __mul__(self, b: FieldElement) -> Flag:
        return scalar_multiply_flag(self, b)

    def shift(self, j: int) -> Flag:
        """The translate F * alpha^j."""
        return Flag(tuple(u.shift(j) for u in self.subspaces))

    @functools.cached_property
    def translate_profile(self) -> np.ndarray:
        """``P[j] = d_f(F, F * alpha^j)``, the sum of the subspace profiles."""
        return np.sum([u.translate_profile for u in self.subspaces], axis=0)

    def __repr__(self) -> str:
        return f"Flag(type={self.type_vector})"


def make_flag(subspaces: Sequence[Subspace]) -> Flag:
    """Validate {0} < F_1 < ... < F_r < F_{q^n} and wrap it as a Flag."""
    if not subspaces:
        raise FlagError("a flag needs at least one subspace")
    ctx = subspaces[0].ctx
    for u in subspaces:
        if u.ctx is not ctx:
            raise FlagError("subspaces live in different fields")
        if u.dim == 0 or u.dim == ctx.n:
            raise FlagError(f"dimension {u.dim} is not proper and nonzero")
    for a, b in zip(subspaces, subspaces[1:]):
        if not a < b:
            raise FlagError(f"subspaces of dims {a.dim}, {b.dim} are not strictly nested")
    return Flag(tuple(subspaces))


def _check_types(f: Flag, g: Flag) -> None:
    if f.type_vector != g.type_vector:
        raise FlagError(f"type mismatch: {f.type_vector} vs {g.type_vector}")


def flag_distance(f: Flag, g: Flag) -> int:
    _check_types(f, g)
    return sum(subspace_distance(a, b) for a, b in zip(f, g))


def max_flag_distance(n: int, type_vector: Sequence[int]) -> int:
    """Largest possible flag distance for the type: 2 * sum min(t, n - t)."""
    return 2 * sum(t if t <= n // 2 else n - t for t in type_vector)


def scalar_multiply_flag(f: Flag, b: FieldElement) -> Flag:
    return Flag(tuple(scalar_multiply(u, b) for u in f))


@dataclass(frozen=True)
class FlagClassification:
    kind: Literal["galois", "generalized_galois", "plain"]
    field_positions: tuple[int, ...]
    underlying_type: tuple[int, ...]


def classify_flag(f: Flag) -> FlagClassification:
    positions = tuple(i for i, u in enumerate(f) if is_field(u))
    if not positions:
        return FlagClassification("plain", (), ())
    kind = "galois" if len(positions) == len(f) else "generalized_galois"
    return FlagClassification(kind, positions, tuple(f[i].dim for i in positions))


def best_friend_flag(f: Flag) -> int:
    """Best friend of the flag: the intersection (gcd) of the subspace best friends."""
    return functools.reduce(math.gcd, (best_friend(u) for u in f))


def subflag(f: Flag, indices: Sequence[int]) -> Flag:
    idx = list(indices)
    if not idx or any(b <= a for a, b in zip(idx, idx[1:])):
        raise FlagError("indices must be nonempty and strictly increasing")
    if idx[0] < 0 or idx[-1] >= len(f):
        raise FlagError("index out of range")
    return Flag(tuple(f[i] for i in idx))


def underlying_galois_subflag(f: Flag) -> Flag | None:
    positions = classify_flag(f).field_positions
    return subflag(f, positions) if positions else None
