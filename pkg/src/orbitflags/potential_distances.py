"""Potential distance values of orbit codes generated by generalized Galois flags.

A profile assigns an even distance d_i to every dimension s_i of the type.
Field dimensions t only take 0 or 2t; a field dimension at 2t forces every
lower dimension to its maximum; a field dimension at 0 forces every higher
field dimension to 0.  Two further constraints come from nesting alone:
d_i <= 2 min(s_i, n - s_i) and |d_i - d_(i+1)| <= 2 (s_(i+1) - s_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from orbitflags.flagcodes import FlagCode, check_sweep_size, subgroup_generators
from orbitflags.flags import Flag


@dataclass(frozen=True)
class DistanceProfile:
    n: int
    type_vector: tuple[int, ...]
    field_dims: tuple[int, ...]
    assignment: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.assignment)


def _check(n: int, type_vector: Sequence[int], field_dims: Sequence[int]) -> None:
    if not type_vector or any(b <= a for a, b in zip(type_vector, type_vector[1:])):
        raise ValueError("type vector must be nonempty and strictly increasing")
    if type_vector[0] < 1 or type_vector[-1] >= n:
        raise ValueError("type entries must lie in [1, n)")
    if not set(field_dims) <= set(type_vector):
        raise ValueError("field dimensions must be type entries")
    chain = sorted(field_dims)
    for a, b in zip(chain, chain[1:] + [n]):
        if b % a:
            raise ValueError(f"field dimensions {chain} do not form a divisor chain of {n}")


def _cap(n: int, s: int) -> int:
    return 2 * min(s, n - s)


def distance_profiles(
    n: int, type_vector: Sequence[int], field_dims: Sequence[int]
) -> list[DistanceProfile]:
    """Every valid profile, by exhaustive search (exponential; for tests and small types)."""
    _check(n, type_vector, field_dims)
    types, fields = tuple(type_vector), set(field_dims)
    out: list[DistanceProfile] = []

    def rec(i: int, acc: list[int], all_max: bool, zero_seen: bool) -> None:
        if i == len(types):
            out.append(DistanceProfile(n, types, tuple(sorted(fields)), tuple(acc)))
            return
        s = types[i]
        for d in _choices(n, types, fields, i, acc[-1] if acc else None, all_max, zero_seen):
            rec(i + 1, acc + [d], all_max and d == _cap(n, s), zero_seen or (s in fields and d == 0))

    rec(0, [], True, False)
    return out


def _choices(n, types, fields, i, prev, all_max, zero_seen):
    s = types[i]
    if s in fields:
        cand = [0] if zero_seen else ([0, 2 * s] if all_max else [0])
    else:
        cand = range(0, _cap(n, s) + 1, 2)
    if prev is not None:
        gap = 2 * (s - types[i - 1])
        cand = [d for d in cand if abs(d - prev) <= gap]
    return cand


def potential_values(n: int, type_vector: Sequence[int], field_dims: Sequence[int]) -> list[int]:
    """Sorted set of totals over all valid profiles."""
    _check(n, type_vector, field_dims)
    types, fields = tuple(type_vector), set(field_dims)
    # state (prev value, all lower dims at max, some field dim at 0) -> reachable partial sums
    states: dict[tuple[int | None, bool, bool], set[int]] = {(None, True, False): {0}}
    for i, s in enumerate(types):
        nxt: dict[tuple[int | None, bool, bool], set[int]] = {}
        for (prev, all_max, zero_seen), sums in states.items():
            for d in _choices(n, types, fields, i, prev, all_max, zero_seen):
                key = (d, all_max and d == _cap(n, s), zero_seen or (s in fields and d == 0))
                nxt.setdefault(key, set()).update(x + d for x in sums)
        states = nxt
    return sorted(set().union(*states.values()))


def attained_values(flag: Flag) -> list[int]:
    """Distances of Orb_b(F) over every cyclic subgroup <b> of F_{q^n}^*."""
    check_sweep_size(flag.ctx)
    return sorted({FlagCode(flag, b).min_distance for _, b in subgroup_generators(flag.ctx)})


def pairwise_attained_values(flag: Flag, include_zero: bool = False) -> list[int]:
    """Every d_f(F, F c) for c in F_{q^n}^*; 0 (c in Stab(F)) only on request."""
    check_sweep_size(flag.ctx)
    vals = {int(v) for v in set(flag.translate_profile.tolist())}
    if not include_zero:
        vals.discard(0)
    return sorted(vals)
