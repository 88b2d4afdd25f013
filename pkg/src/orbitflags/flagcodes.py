"""Cyclic orbit flag codes Orb_b(F) = {F b^j}, their parameters and constructions.

Parameters are computed from translate profiles: for the generator flag F,
``P[j] = d_f(F, F alpha^j)`` for every j.  If b = alpha^k has order o then
F b^i is F alpha^(k i), so the stabilizer, the cardinality and the minimum
distance of the code all read off ``P[k i mod (q^n - 1)]`` for i < o.  The
minimum over translates equals the all-pairs minimum because
d_f(F b^a, F b^c) = d_f(F, F b^(c - a)).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from orbitflags.flags import (
    Flag,
    FlagClassification,
    best_friend_flag,
    classify_flag,
    make_flag,
    max_flag_distance,
    scalar_multiply_flag,
)
from orbitflags.gfield import FieldCtx, FieldElement, divisors, multiplicative_order
from orbitflags.subspaces import (
    Subspace,
    SubspaceOrbit,
    best_friend,
    is_friend,
    minpoly_degree,
    orbit_subspace,
    regular_form_subspace,
    span_over_subfield,
    subfield,
)


SWEEP_LIMIT = 1 << 20


class ConstructionError(ValueError):
    """Construction parameters violate the construction's hypotheses."""


class ResourceLimitError(ValueError):
    """An exhaustive sweep was requested on a field larger than SWEEP_LIMIT."""


class FlagCode:
    """The b-cyclic orbit flag code generated by a flag."""

    def __init__(self, generator: Flag, beta: FieldElement):
        if beta.is_zero:
            raise ValueError("cannot act by zero")
        if beta.ctx is not generator.ctx:
            raise ValueError("beta and the flag live in different fields")
        self.generator = generator
        self.beta = beta

    @property
    def ctx(self) -> FieldCtx:
        return self.generator.ctx

    @functools.cached_property
    def beta_order(self) -> int:
        return multiplicative_order(self.ctx, self.beta)

    @functools.cached_property
    def _orbit_profile(self) -> np.ndarray:
        """d_f(F, F b^i) for i in [0, |b|)."""
        js = (np.arange(self.beta_order, dtype=np.int64) * self.beta.exponent) % self.ctx.order
        return self.generator.translate_profile[js]

    @functools.cached_property
    def stabilizer_order(self) -> int:
        return int(np.count_nonzero(self._orbit_profile == 0))

    @property
    def cardinality(self) -> int:
        return self.beta_order // self.stabilizer_order

    def __len__(self) -> int:
        return self.cardinality

    @functools.cached_property
    def min_distance(self) -> int:
        vals = self._orbit_profile[self._orbit_profile > 0]
        return int(vals.min()) if len(vals) else 0

    @functools.cached_property
    def translate_distances(self) -> frozenset[int]:
        """Every value d_f(F, F b^i), including 0."""
        return frozenset(int(v) for v in np.unique(self._orbit_profile))

    @functools.cached_property
    def elements(self) -> list[Flag]:
        """F b^i for i < |C|, built by explicit multiplication."""
        out = [self.generator]
        for _ in range(1, self.cardinality):
            out.append(scalar_multiply_flag(out[-1], self.beta))
        return out

    @functools.cached_property
    def best_friend(self) -> int:
        return best_friend_flag(self.generator)

    def __repr__(self) -> str:
        return (
            f"FlagCode(type={self.generator.type_vector}, |beta|={self.beta_order}, "
            f"size={self.cardinality}, d={self.min_distance})"
        )


def orbit_flag_code(flag: Flag, b: FieldElement) -> FlagCode:
    return FlagCode(flag, b)


def code_min_distance(code: FlagCode) -> int:
    return code.min_distance


def projected_code(code: FlagCode, i: int) -> SubspaceOrbit:
    """The i-th projected code (0-based), Orb_b(F_i)."""
    if not 0 <= i < len(code.generator):
        raise IndexError(f"no subspace at index {i}")
    return orbit_subspace(code.generator[i], code.beta)


def _projected_sizes(code: FlagCode) -> list[int]:
    order = code.beta_order
    js = (np.arange(order, dtype=np.int64) * code.beta.exponent) % code.ctx.order
    return [order // int(np.count_nonzero(u.translate_profile[js] == 0)) for u in code.generator]


def _projected_distances(code: FlagCode) -> list[int]:
    js = (np.arange(code.beta_order, dtype=np.int64) * code.beta.exponent) % code.ctx.order
    out = []
    for u in code.generator:
        vals = u.translate_profile[js]
        vals = vals[vals > 0]
        out.append(int(vals.min()) if len(vals) else 0)
    return out


def is_disjoint(code: FlagCode) -> bool:
    return all(s == code.cardinality for s in _projected_sizes(code))


def is_consistent(code: FlagCode) -> bool:
    return is_disjoint(code) and code.min_distance == sum(_projected_distances(code))


def is_optimum_distance(code: FlagCode) -> bool:
    return code.min_distance == max_flag_distance(code.ctx.n, code.generator.type_vector)


@dataclass(frozen=True)
class ProjectedInfo:
    dim: int
    size: int
    min_distance: int
    best_friend: int


@dataclass(frozen=True)
class CodeReport:
    type_vector: tuple[int, ...]
    beta_order: int
    cardinality: int
    min_distance: int
    max_distance: int
    best_friend: int
    projected: tuple[ProjectedInfo, ...]
    disjoint: bool
    consistent: bool
    classification: FlagClassification


def code_report(code: FlagCode) -> CodeReport:
    sizes = _projected_sizes(code)
    dists = _projected_distances(code)
    projected = tuple(
        ProjectedInfo(u.dim, s, d, best_friend(u))
        for u, s, d in zip(code.generator, sizes, dists)
    )
    disjoint = all(s == code.cardinality for s in sizes)
    return CodeReport(
        type_vector=code.generator.type_vector,
        beta_order=code.beta_order,
        cardinality=code.cardinality,
        min_distance=code.min_distance,
        max_distance=max_flag_distance(code.ctx.n, code.generator.type_vector),
        best_friend=code.best_friend,
        projected=projected,
        disjoint=disjoint,
        consistent=disjoint and code.min_distance == sum(dists),
        classification=classify_flag(code.generator),
    )


def suborbit_decomposition(code: FlagCode, c: int) -> list[FlagCode]:
    """Split Orb_b(F) as the union of Orb_{b^c}(F b^i), i < c."""
    b = code.beta
    return [FlagCode(scalar_multiply_flag(code.generator, b**i), b**c) for i in range(c)]


# --- subgroup bookkeeping -----------------------------------------------------------


def subgroup_generators(ctx: FieldCtx) -> list[tuple[int, FieldElement]]:
    """One generator alpha^((q^n-1)/d) for each subgroup order d, increasing in d."""
    return [(d, ctx.element(ctx.order // d)) for d in divisors(ctx.order)]


def check_sweep_size(ctx: FieldCtx) -> None:
    if ctx.size > SWEEP_LIMIT:
        raise ResourceLimitError(f"q^n = {ctx.size} exceeds the sweep limit {SWEEP_LIMIT}")


@dataclass(frozen=True)
class SweepRow:
    order: int
    cardinality: int
    distance: int


def subgroup_sweep(flag: Flag) -> list[SweepRow]:
    """Cardinality and distance of Orb_b(F) for one b per subgroup of F_{q^n}^*."""
    check_sweep_size(flag.ctx)
    rows = []
    for d, b in subgroup_generators(flag.ctx):
        code = FlagCode(flag, b)
        rows.append(SweepRow(d, code.cardinality, code.min_distance))
    return rows


def subfield_intersection_order(ctx: FieldCtx, b: FieldElement, m: int) -> int:
    """|<b> ∩ F_{q^m}^*|, the unique subgroup of <b> of order gcd(|b|, q^m - 1)."""
    return math.gcd(multiplicative_order(ctx, b), ctx.q**m - 1)


def predicted_cardinality(ctx: FieldCtx, b: FieldElement, m: int) -> int:
    """|b| / |<b> ∩ F_{q^m}^*| for a flag with best friend F_{q^m}."""
    return multiplicative_order(ctx, b) // subfield_intersection_order(ctx, b, m)


@dataclass(frozen=True)
class TableRow:
    beta_exponent: int
    order: int
    intersection_order: int
    orbit_size: int


def table_report(ctx: FieldCtx, m: int, betas: Sequence[FieldElement]) -> list[TableRow]:
    if ctx.n % m:
        raise ValueError(f"{m} does not divide n = {ctx.n}")
    return [
        TableRow(
            b.exponent,
            multiplicative_order(ctx, b),
            subfield_intersection_order(ctx, b, m),
            predicted_cardinality(ctx, b, m),
        )
        for b in betas
    ]


# --- Galois flags -----------------------------------------------------------------------


def _check_divisor_chain(n: int, chain: Sequence[int], *, strict_ratio: bool = False) -> None:
    if not chain:
        raise ConstructionError("empty chain")
    prev = None
    for t in chain:
        if t < 1 or n % t:
            raise ConstructionError(f"{t} does not divide n = {n}")
        if prev is not None and (t <= prev or t % prev):
            raise ConstructionError(f"{prev} does not properly divide {t}")
        prev = t
    if chain[-1] >= n:
        raise ConstructionError("the chain must stay below n")


def galois_construction(ctx: FieldCtx, type_vector: Sequence[int]) -> Flag:
    """The Galois flag (F_{q^t1}, ..., F_{q^tr})."""
    _check_divisor_chain(ctx.n, type_vector)
    return make_flag([subfield(ctx, t) for t in type_vector])


def predict_galois_distance(ctx: FieldCtx, type_vector: Sequence[int], b: FieldElement) -> int:
    """Distance of Orb_b of the Galois flag, read off the stabilizers <b> ∩ F_{q^ti}^*."""
    _check_divisor_chain(ctx.n, type_vector)
    order = multiplicative_order(ctx, b)
    stabs = [math.gcd(order, ctx.q**t - 1) for t in type_vector]
    if stabs[0] == stabs[-1]:
        return 0 if stabs[0] == order else 2 * sum(type_vector)
    j = next(i for i, s in enumerate(stabs) if s != stabs[0])
    return 2 * sum(type_vector[:j])


# --- regular-form constructions ---------------------------------------------------------


def basic_construction(ctx: FieldCtx, m: int, l: int, s_list: Sequence[int]) -> Flag:
    """Flag with F_i = F_{q^m} + F_{q^m} a^l + ... + F_{q^m} a^{l(s_i - 1)}."""
    if not s_list or any(b <= a for a, b in zip(s_list, s_list[1:])) or s_list[0] < 1:
        raise ConstructionError("s_list must be a strictly increasing list of positive ints")
    if m < 1 or ctx.n % m:
        raise ConstructionError(f"{m} does not divide n = {ctx.n}")
    limit = ctx.order // (ctx.q**m - 1)
    # alpha^l lies in F_{q^m} (L = 1) iff limit divides l, so the range excludes it
    if not 1 <= l < limit:
        raise ConstructionError(f"l must lie in [1, {limit}); other l give L = 1 or repeat")
    L = minpoly_degree(ctx, l, m)
    top = L - 1 if L * m == ctx.n else L
    if s_list[-1] > top:
        raise ConstructionError(f"s_r = {s_list[-1]} exceeds {top} (L = {L})")
    return make_flag([regular_form_subspace(ctx, m, l, s) for s in s_list])


def _check_weave_chain(ctx: FieldCtx, chain: Sequence[int]) -> list[int]:
    _check_divisor_chain(ctx.n, chain)
    return list(chain) + [ctx.n]


def weaved_construction(ctx: FieldCtx, chain: Sequence[int]) -> Flag:
    """Weave the basic flags over F_{q^m1} < ... < F_{q^mk} into one flag.

    Block i consists of F_{q^mi} + F_{q^mi} a_{i+1} + ... (j terms) for
    j < m_{i+1}/m_i, where a_{i+1} generates F_{q^m(i+1)}^* (a_{k+1} = alpha).
    """
    ms = _check_weave_chain(ctx, chain)
    subspaces = []
    for m_i, m_next in zip(ms, ms[1:]):
        exp_next = ctx.order // (ctx.q**m_next - 1)
        for j in range(1, m_next // m_i):
            subspaces.append(regular_form_subspace(ctx, m_i, exp_next, j))
    return make_flag(subspaces)


def weaved_distance_bounds(
    ctx: FieldCtx, chain: Sequence[int], b: FieldElement
) -> tuple[int, int]:
    """Lower and upper bounds on d_f(Orb_b(F)) for the weaved flag F."""
    ms = _check_weave_chain(ctx, chain)
    k = len(chain)
    stabs = [subfield_intersection_order(ctx, b, m) for m in chain]
    if stabs[0] == multiplicative_order(ctx, b):
        raise ConstructionError("b lies in F_{q^m1}^*: the code is a single flag")
    Ls = [None, None] + [ms[i] // ms[i - 1] for i in range(1, k + 1)]  # Ls[i] = L_i, 1-based

    def M(i: int) -> int:
        return sum(ms[j] * (Ls[j + 1] - 1) for j in range(1, i))  # ms[j] is m_{j+1}

    if stabs[0] == stabs[-1]:
        i = k + 1
    else:
        i = next(idx for idx, s in enumerate(stabs) if s != stabs[0]) + 1  # 1-based
    m_prev, L = ms[i - 2], Ls[i]
    return 2 * m_prev * (L - 1) + M(i - 1), m_prev * (L * L // 2) + M(i - 1)


def min_distance_lower_bound_by_bf_count(flag: Flag, b: FieldElement) -> int:
    """2 m j, with m the best friend of F and j the subspaces sharing it."""
    m = best_friend_flag(flag)
    if subfield_intersection_order(flag.ctx, b, m) == multiplicative_order(flag.ctx, b):
        raise ConstructionError("b lies in the best friend: the code is a single flag")
    j = sum(1 for u in flag if best_friend(u) == m)
    return 2 * m * j


def extend_flag_by_search(
    flag: Flag,
    target_dim: int,
    required_bf: int,
    accept: Callable[[Flag], bool] | None = None,
    max_candidates: int = 10_000,
    within: Subspace | None = None,
) -> Flag:
    """Append an F_{q^bf}-subspace of ``target_dim`` containing the last subspace.

    Candidates are F_r + F_{q^bf} a^{j1} + F_{q^bf} a^{j2} + ... with
    j1 < j2 < ... explored depth first in increasing order; the first one
    whose best friend is exactly ``required_bf`` (and that passes ``accept``
    on the extended flag, when given) is returned.  With ``within`` only
    generators a^j lying in that subspace are tried.
    """
    ctx = flag.ctx
    last = flag[len(flag) - 1]
    if not last.dim < target_dim < ctx.n:
        raise ConstructionError("target_dim must lie strictly between dim(F_r) and n")
    if ctx.n % required_bf or target_dim % required_bf:
        raise ConstructionError("required_bf must divide n and target_dim")
    if not is_friend(last, required_bf):
        raise ConstructionError(f"F_r is not an F_(q^{required_bf})-space")
    if within is not None and not last <= within:
        raise ConstructionError("F_r is not contained in the search space")
    pool = [j for j in range(ctx.order) if within is None or ctx.code_of(j) in within]
    seen = 0

    def search(current: Subspace, start: int) -> Flag | None:
        nonlocal seen
        if current.dim == target_dim:
            seen += 1
            if seen > max_candidates:
                raise ConstructionError("candidate budget exhausted")
            if best_friend(current) != required_bf:
                return None
            extended = Flag(flag.subspaces + (current,))
            return extended if accept is None or accept(extended) else None
        for pos in range(start, len(pool)):
            j = pool[pos]
            if ctx.code_of(j) in current:
                continue
            found = search(current + span_over_subfield(ctx, required_bf, [j]), pos + 1)
            if found is not None:
                return found
        return None

    found = search(last, 0)
    if found is None:
        raise ConstructionError("no extension found")
    return found
