from __future__ import annotations

import random

import pytest

from oracles import naive_field, set_dim, span_set
from orbitflags import fqlinalg
from orbitflags.gfield import build_field

C12 = build_field(2, 1, 12)
C34 = build_field(3, 1, 4)


def test_identity_is_canonical():
    rows = [1 << i for i in range(5)]
    assert fqlinalg.rref(C12, rows) == tuple(sorted(rows, reverse=True))


def test_duplicate_rows_collapse():
    assert fqlinalg.rref(C12, [0b1011, 0b1011]) == (0b1011,)
    assert fqlinalg.rank(C34, [5, 5, 7]) == 1  # 7 = 2 * 5 digitwise over F_3


@pytest.mark.parametrize("ctx", [C12, C34])
def test_rref_idempotent_and_span_preserving(ctx):
    rng = random.Random(4)
    F = naive_field(ctx)
    for _ in range(50):
        rows = [rng.randrange(ctx.size) for _ in range(4)]
        r = fqlinalg.rref(ctx, rows)
        assert fqlinalg.rref(ctx, r) == r
        assert span_set(F, r) == span_set(F, rows)
        assert len(r) == set_dim(F, span_set(F, rows))


def test_sum_and_intersection_trivial_cases():
    a = fqlinalg.rref(C12, [3, 12, 48])
    assert fqlinalg.sum_spaces(C12, a, ()) == a
    assert fqlinalg.intersect_spaces(C12, a, ()) == ()
    b = fqlinalg.rref(C12, [3, 12, 48, 1024])
    assert fqlinalg.sum_spaces(C12, a, b) == b
    assert fqlinalg.intersect_spaces(C12, a, b) == a


@pytest.mark.parametrize("ctx,count", [(C12, 1000), (C34, 150)])
def test_dimension_identity(ctx, count):
    rng = random.Random(5)
    F = naive_field(ctx)
    for k in range(count):
        a = [rng.randrange(ctx.size) for _ in range(rng.randint(0, 6))]
        b = [rng.randrange(ctx.size) for _ in range(rng.randint(0, 6))]
        s = fqlinalg.sum_spaces(ctx, a, b)
        i = fqlinalg.intersect_spaces(ctx, a, b)
        assert len(s) + len(i) == fqlinalg.rank(ctx, a) + fqlinalg.rank(ctx, b)
        if k < 60:
            assert span_set(F, i) == span_set(F, a) & span_set(F, b)


def test_contains_matches_enumeration():
    rng = random.Random(6)
    ctx = build_field(2, 1, 8)
    F = naive_field(ctx)
    for _ in range(100):
        a = fqlinalg.rref(ctx, [rng.randrange(256) for _ in range(rng.randint(1, 3))])
        members = span_set(F, a)
        assert all(fqlinalg.contains(ctx, a, v) == (v in members) for v in range(256))
    assert fqlinalg.contains(ctx, (), 0)
    with pytest.raises(ValueError):
        fqlinalg.contains(ctx, (), 256)


def test_combine_and_span_elements():
    a = fqlinalg.rref(C34, [1, 3])
    assert fqlinalg.combine(C34, a, [0, 0]) == 0
    assert set(fqlinalg.span_elements(C34, a)) == span_set(naive_field(C34), a)
