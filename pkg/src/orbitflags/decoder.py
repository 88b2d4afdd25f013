"""Erasure channel for orbit flag codes: stuttering flags, shot selection, decoding."""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from orbitflags import fqlinalg
from orbitflags.flagcodes import FlagCode
from orbitflags.flags import Flag
from orbitflags.subspaces import Subspace, _batched_rank_gf2, subspace_distance

SeedLike = Union[int, Sequence[int], np.random.Generator]


class DecodingError(RuntimeError):
    """No unique codeword within the decoding radius."""


@dataclass(frozen=True)
class StutteringFlag:
    """Received nested chain X_1 <= ... <= X_r (equalities allowed) with X_i <= F_i."""

    subspaces: tuple[Subspace, ...]
    counts: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __len__(self) -> int:
        return len(self.subspaces)

    def __getitem__(self, i: int) -> Subspace:
        return self.subspaces[i]


@dataclass(frozen=True)
class DecodeOutcome:
    success: bool
    decoded: Flag | None
    shot_used: int | None
    erasures_corrected: int


def is_feasible(dims: Sequence[int], counts: Sequence[int]) -> bool:
    if len(dims) != len(counts):
        return False
    if any(c < 0 or c > d for c, d in zip(counts, dims)):
        return False
    kept = [d - c for d, c in zip(dims, counts)]
    return all(a <= b for a, b in zip(kept, kept[1:]))


def _random_vector(u: Subspace, rng: np.random.Generator) -> int:
    coeffs = rng.integers(0, u.ctx.q, size=u.dim).tolist()
    return fqlinalg.combine(u.ctx, u.basis, coeffs)


def erase(flag: Flag, counts: Sequence[int], rng_seed: SeedLike) -> StutteringFlag:
    """Drop counts[i] dimensions from the i-th subspace, keeping the chain nested.

    X_1 is a uniformly random subspace of F_1 of the kept dimension and each
    X_(i+1) is X_i extended by random vectors of F_(i+1); no rejection needed.
    """
    dims = flag.type_vector
    counts = tuple(int(c) for c in counts)
    if not is_feasible(dims, counts):
        raise ValueError(f"infeasible erasure counts {counts} for type {dims}")
    rng = np.random.default_rng(rng_seed)
    ctx = flag.ctx
    current = Subspace.zero(ctx)
    out = []
    for f, c in zip(flag, counts):
        if c == 0:
            current = f
        while current.dim < f.dim - c:
            v = _random_vector(f, rng)
            if v not in current:
                current = Subspace(ctx, fqlinalg.sum_spaces(ctx, current.basis, (v,)))
        out.append(current)
    return StutteringFlag(tuple(out), counts)


def _projected_params(code: FlagCode, i: int) -> tuple[int, int]:
    """(size, min distance) of the i-th projected code."""
    u = code.generator[i]
    js = (np.arange(code.beta_order, dtype=np.int64) * code.beta.exponent) % code.ctx.order
    vals = u.translate_profile[js]
    size = code.beta_order // int(np.count_nonzero(vals == 0))
    nz = vals[vals > 0]
    return size, int(nz.min()) if len(nz) else 0


def find_correctable_shot(x: StutteringFlag, code: FlagCode) -> int:
    """Smallest (0-based) i with |C_i| = |C| and e_i within the radius of C_i."""
    if len(x) != len(code.generator):
        raise ValueError("received chain and code have different lengths")
    if code.cardinality == 1:
        return 0
    for i, e in enumerate(x.counts):
        size, dist = _projected_params(code, i)
        if size == code.cardinality and e <= (dist - 1) // 2:
            return i
    raise DecodingError("no shot is correctable by its projected code")


def _distances_to_projected(x: Subspace, code: FlagCode, i: int) -> np.ndarray:
    """d_S(X, F_i b^j) for j < |C|."""
    ctx, u = code.ctx, code.generator[i]
    count = code.cardinality
    logs = ctx.log[list(u.basis)]
    js = (np.arange(count, dtype=np.int64) * code.beta.exponent) % ctx.order
    moved = ctx.antilog[(logs[None, :] + js[:, None]) % ctx.order]
    if ctx.q == 2:
        base = np.broadcast_to(np.asarray(x.basis, dtype=np.int64), (count, x.dim))
        ranks = _batched_rank_gf2(np.concatenate([base, moved], axis=1), ctx.n)
    else:
        ranks = np.array(
            [fqlinalg.rank(ctx, (*x.basis, *(int(c) for c in row))) for row in moved]
        )
    return 2 * ranks - x.dim - u.dim


def decode(x: StutteringFlag, code: FlagCode) -> DecodeOutcome:
    """Decode through a correctable shot and return the code flag it determines."""
    i = find_correctable_shot(x, code)
    if code.cardinality == 1:
        return DecodeOutcome(True, code.generator, i, x.total)
    _, dist = _projected_params(code, i)
    d = _distances_to_projected(x[i], code, i)
    hits = np.flatnonzero(d <= (dist - 1) // 2)
    if len(hits) == 0:
        raise DecodingError(f"no projected codeword within radius at shot {i}")
    if len(hits) > 1:
        raise DecodingError(f"ambiguous decoding at shot {i}")
    j = int(hits[0])
    decoded = code.generator.shift(j * code.beta.exponent % code.ctx.order)
    return DecodeOutcome(True, decoded, i, x.total)


def chain_distance(f: Flag, x: StutteringFlag) -> int:
    return sum(subspace_distance(a, b) for a, b in zip(f, x.subspaces))


def exhaustive_decode(x: StutteringFlag, code: FlagCode) -> Flag | None:
    """Nearest code flag by brute force over all codewords; None on a tie."""
    scored = sorted((chain_distance(f, x), k) for k, f in enumerate(code.elements))
    if len(scored) > 1 and scored[0][0] == scored[1][0]:
        return None
    return code.elements[scored[0][1]]


def feasible_patterns(dims: Sequence[int], total: int) -> list[tuple[int, ...]]:
    """Every feasible count vector with the given sum, in lexicographic order."""
    ranges = [range(0, min(d, total) + 1) for d in dims]
    return [
        c for c in itertools.product(*ranges) if sum(c) == total and is_feasible(dims, c)
    ]


@dataclass(frozen=True)
class SimRow:
    total_erasures: int
    trials: int
    successes: int

    @property
    def rate(self) -> float:
        return self.successes / self.trials


def _trial(code: FlagCode, patterns: list[tuple[int, ...]], seed: int, e: int, t: int) -> bool:
    rng = np.random.default_rng((seed, e, t))
    counts = patterns[int(rng.integers(len(patterns)))]
    j = int(rng.integers(code.cardinality))
    sent = code.generator.shift(j * code.beta.exponent % code.ctx.order)
    received = erase(sent, counts, rng)
    try:
        out = decode(received, code)
    except DecodingError:
        return False
    return out.decoded == sent


def channel_sim(
    code: FlagCode, trials: int, max_erasures: int, seed: int, threads: int = 1
) -> list[SimRow]:
    """Success counts per total erasure count e = 0..max_erasures.

    Each trial sends a uniformly random codeword through a uniformly random
    feasible pattern; its RNG stream is keyed by (seed, e, trial) so results do
    not depend on ``threads``.
    """
    if trials <= 0:
        raise ValueError("trials must be positive")
    dims = code.generator.type_vector
    rows = []
    for e in range(max_erasures + 1):
        patterns = feasible_patterns(dims, e)
        if not patterns:
            break
        if threads > 1:
            with ThreadPoolExecutor(threads) as pool:
                ok = sum(pool.map(lambda t: _trial(code, patterns, seed, e, t), range(trials)))
        else:
            ok = sum(_trial(code, patterns, seed, e, t) for t in range(trials))
        rows.append(SimRow(e, trials, int(ok)))
    return rows


def correction_radius(code: FlagCode) -> int:
    return max(code.min_distance - 1, 0) // 2
