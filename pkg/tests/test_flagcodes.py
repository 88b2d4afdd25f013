from __future__ import annotations

import random

import pytest

from oracles import all_pairs_min_distance, flag_sets, naive_field, naive_orbit
from orbitflags.flagcodes import (
    ConstructionError,
    FlagCode,
    basic_construction,
    code_min_distance,
    code_report,
    extend_flag_by_search,
    galois_construction,
    is_consistent,
    is_disjoint,
    is_optimum_distance,
    min_distance_lower_bound_by_bf_count,
    orbit_flag_code,
    predict_galois_distance,
    predicted_cardinality,
    projected_code,
    subgroup_generators,
    subgroup_sweep,
    suborbit_decomposition,
    table_report,
    weaved_construction,
    weaved_distance_bounds,
)
from orbitflags.flags import best_friend_flag, make_flag, subflag
from orbitflags.gfield import build_field, multiplicative_order, subfield_generator
from orbitflags.subspaces import (
    Subspace,
    is_field,
    minpoly_degree,
    regular_form_subspace,
    subfield,
)

C8, C10, C12 = build_field(2, 1, 8), build_field(2, 1, 10), build_field(2, 1, 12)


def _naive_code(code: FlagCode):
    F = naive_field(code.ctx)
    gen = flag_sets(F, code.generator)
    return F, naive_orbit(F, gen, F.alpha_power(code.beta.exponent))


# --- orbit codes -------------------------------------------------------------------------


def test_singleton_code_when_beta_in_best_friend():
    g = galois_construction(C12, [2, 4])
    code = orbit_flag_code(g, subfield_generator(C12, 2))
    assert code.cardinality == 1 and code.min_distance == 0
    assert is_disjoint(code) and is_consistent(code)
    assert [len(projected_code(code, i)) for i in range(2)] == [1, 1]


def test_zero_beta_rejected():
    with pytest.raises(ValueError):
        FlagCode(galois_construction(C8, [2]), C8.zero)


def test_weaved_n10_cardinality_is_beta_order():
    f = weaved_construction(C10, [1, 5])
    for d, b in subgroup_generators(C10):
        assert FlagCode(f, b).cardinality == d


def test_primitive_cardinality_from_best_friend():
    for flag in (galois_construction(C12, [2, 4]), basic_construction(C12, 3, 1, [1, 2])):
        m = best_friend_flag(flag)
        assert FlagCode(flag, C12.alpha).cardinality == (C12.order) // (2**m - 1)


def test_cardinality_formula_and_enumeration_agree():
    rng = random.Random(11)
    flags = [
        galois_construction(C12, [2, 4]),
        weaved_construction(C12, [2, 4]),
        basic_construction(C12, 2, 65, [1, 2]),
        make_flag([Subspace.span(C12, [1, 7, 99])]),
    ]
    divs = [d for d, _ in subgroup_generators(C12)]
    for flag in flags:
        m = best_friend_flag(flag)
        for d in rng.sample(divs, 6):
            b = C12.element(C12.order // d)
            code = FlagCode(flag, b)
            assert code.cardinality == predicted_cardinality(C12, b, m)
            assert code.cardinality * code.stabilizer_order == code.beta_order
            if code.cardinality <= 300:
                assert len(set(code.elements)) == code.cardinality
                assert code.elements[-1] * b == code.generator


@pytest.mark.parametrize(
    "flag,beta_exp",
    [
        (basic_construction(C8, 2, 1, [1, 2, 3]), 1),
        (basic_construction(C8, 2, 1, [1, 3]), 1),
        (weaved_construction(C10, [1, 5]), 11),
        (weaved_construction(C10, [1, 5]), 31),
        (weaved_construction(C10, [1, 5]), 33),
        (galois_construction(C8, [1, 2, 4]), 3),
        (make_flag([Subspace.span(C8, [1, 2]), Subspace.span(C8, [1, 2, 20])]), 5),
    ],
)
def test_min_distance_matches_all_pairs_oracle(flag, beta_exp):
    code = FlagCode(flag, flag.ctx.element(beta_exp))
    assert code.cardinality <= 100
    F, naive = _naive_code(code)
    assert len(naive) == code.cardinality
    assert code_min_distance(code) == all_pairs_min_distance(F, naive)


def test_projected_codes_of_galois_flag():
    code = FlagCode(galois_construction(C8, [2, 4]), C8.alpha)
    assert [len(projected_code(code, i)) for i in range(2)] == [85, 17]
    assert [projected_code(code, i).min_distance for i in range(2)] == [4, 8]
    assert code.cardinality == 85 and code.min_distance == 4
    with pytest.raises(IndexError):
        projected_code(code, 2)


def test_projected_sizes_divide_cardinality():
    for d, b in subgroup_generators(C12):
        code = FlagCode(basic_construction(C12, 2, 65, [1, 2, 3]), b)
        rep = code_report(code)
        assert all(code.cardinality % p.size == 0 for p in rep.projected)
        assert rep.min_distance % (2 * rep.best_friend) == 0


# --- Galois flags --------------------------------------------------------------------


def test_galois_construction_validation():
    with pytest.raises(ConstructionError):
        galois_construction(C8, [3])
    with pytest.raises(ConstructionError):
        galois_construction(C12, [2, 3])
    with pytest.raises(ConstructionError):
        galois_construction(C8, [2, 8])
    spread = galois_construction(C8, [4])
    assert FlagCode(spread, C8.alpha).cardinality == 17


def test_galois_distances_over_subgroups_n12():
    g = galois_construction(C12, [2, 4])
    assert {r.distance for r in subgroup_sweep(g)} <= {0, 4, 12}


def test_predict_galois_distance_cases():
    assert predict_galois_distance(C12, [2, 4], subfield_generator(C12, 2)) == 0
    assert predict_galois_distance(C12, [2, 4], C12.alpha**5) == 12  # stab 3 at both ends
    assert predict_galois_distance(C12, [2, 4], C12.alpha) == 4
    assert FlagCode(galois_construction(C12, [2, 4]), C12.alpha).min_distance == 4
    with pytest.raises(ConstructionError):
        predict_galois_distance(C12, [4, 2], C12.alpha)


# --- basic construction ----------------------------------------------------------------


def test_basic_n8_full_chain_is_consistent():
    code = FlagCode(basic_construction(C8, 2, 1, [1, 2, 3]), C8.alpha)
    assert (code.cardinality, code.min_distance) == (85, 12)
    assert is_consistent(code)


def test_basic_n8_optimum_distance_type_2_6():
    code = FlagCode(basic_construction(C8, 2, 1, [1, 3]), C8.alpha)
    assert code.generator.type_vector == (2, 6)
    assert (code.cardinality, code.min_distance) == (85, 8)
    assert is_optimum_distance(code)
    assert classify_kind(code) == "generalized_galois"


def classify_kind(code):
    return code_report(code).classification.kind


def test_basic_with_s_equal_L_is_not_disjoint():
    code = FlagCode(basic_construction(C12, 2, 65, [1, 2, 3]), C12.alpha)
    assert (code.cardinality, code.min_distance) == (1365, 8)
    assert not is_disjoint(code)
    assert is_field(code.generator[2])


def test_basic_suborbit_decomposition():
    code = FlagCode(basic_construction(C12, 2, 65, [1, 2, 3]), C12.alpha)
    parts = suborbit_decomposition(code, 65)
    assert len(parts) == 65 and all(p.cardinality == 21 for p in parts)
    union = {f for p in parts for f in p.elements}
    assert len(union) == 1365
    assert union == set(code.elements)


def test_basic_construction_validation():
    with pytest.raises(ConstructionError):
        basic_construction(C8, 2, 1, [1, 4])  # s_r = L = n/m
    with pytest.raises(ConstructionError):
        basic_construction(C12, 2, 65, [1, 4])  # s_r > L
    with pytest.raises(ConstructionError):
        basic_construction(C12, 2, 0, [1])
    with pytest.raises(ConstructionError):
        basic_construction(C12, 5, 1, [1])
    with pytest.raises(ConstructionError):
        basic_construction(C12, 2, 1, [2, 1])


def test_basic_degenerate_L1():
    # alpha^l lies in F_{q^m} exactly when (q^n-1)/(q^m-1) divides l, which the l range excludes
    for l in (65, 130):
        assert minpoly_degree(C12, l, 6) == 1
        with pytest.raises(ConstructionError):
            basic_construction(C12, 6, l, [1])


# --- weaved construction -----------------------------------------------------------------


def test_weaved_shapes():
    f = weaved_construction(C10, [1, 5])
    assert f.type_vector == (1, 2, 3, 4, 5)
    assert is_field(f[0]) and is_field(f[4])
    g = weaved_construction(C12, [2, 4])
    assert g.type_vector == (2, 4, 8)
    assert is_field(g[0]) and is_field(g[1])
    assert weaved_construction(C8, [2]) == basic_construction(C8, 2, 1, [1, 2, 3])
    with pytest.raises(ConstructionError):
        weaved_construction(C12, [4, 2])
    with pytest.raises(ConstructionError):
        weaved_construction(C12, [2, 12])


def test_weaved_primitive_distance():
    for ctx, chain in ((C10, [1, 5]), (C12, [2, 4]), (C12, [1, 3]), (C12, [2, 6]), (C8, [1, 2, 4])):
        code = FlagCode(weaved_construction(ctx, chain), ctx.alpha)
        nxt = chain[1] if len(chain) > 1 else ctx.n
        assert code.min_distance == 2 * (nxt - chain[0])
        assert code.cardinality == ctx.order // (2 ** chain[0] - 1)


def test_weaved_components_consistent():
    # each basic block on its own: F_{q^m_i}-regular form over a_{i+1}
    g = weaved_construction(C12, [2, 4])
    block1 = FlagCode(subflag(g, [0]), C12.alpha)
    block2 = FlagCode(subflag(g, [1, 2]), C12.alpha)
    assert is_consistent(block1) and block1.min_distance == 2 * (4 - 2)
    assert is_consistent(block2) and block2.min_distance == 2 * (12 - 4)


def test_weaved_bounds_examples():
    lo_hi = weaved_distance_bounds(C12, [2, 4], C12.alpha**5)
    code = FlagCode(weaved_construction(C12, [2, 4]), C12.alpha**5)
    assert lo_hi == (20, 20)
    assert (code.min_distance, code.cardinality) == (20, 273)
    assert is_optimum_distance(code)
    f10 = weaved_construction(C10, [1, 5])
    b3 = C10.element(1023 // 3)
    assert weaved_distance_bounds(C10, [1, 5], b3) == (30, 30)
    assert weaved_distance_bounds(C10, [1, 5], C10.alpha) == (8, 12)
    with pytest.raises(ConstructionError):
        weaved_distance_bounds(C10, [1, 5], C10.one)
    assert FlagCode(f10, b3).min_distance == 30


def test_weaved_bounds_case_two_at_first_index():
    # <b> contains F_16^* but meets F_4^* less: b of order 15 * 7 in F_{2^12}
    b = C12.element(C12.order // 105)
    assert multiplicative_order(C12, b) == 105
    lo, hi = weaved_distance_bounds(C12, [2, 4], b)
    assert (lo, hi) == (2 * 2 * 1, 2 * (4 // 2))
    d = FlagCode(weaved_construction(C12, [2, 4]), b).min_distance
    assert lo <= d <= hi


# --- bounds and searches --------------------------------------------------------------------


def test_bf_count_bound():
    c16 = build_field(2, 1, 16)
    g = galois_construction(c16, [2, 4, 8])
    b = c16.alpha**5
    assert min_distance_lower_bound_by_bf_count(g, b) == 4
    assert FlagCode(g, b).min_distance == 12
    basic = basic_construction(C8, 2, 1, [1, 2, 3])
    assert min_distance_lower_bound_by_bf_count(basic, C8.alpha) == 12
    with pytest.raises(ConstructionError):
        min_distance_lower_bound_by_bf_count(g, c16.element(c16.order // 3))


def test_extend_reproduces_optimum_code_of_size_273():
    b = C12.alpha**5
    f = extend_flag_by_search(
        weaved_construction(C12, [2, 4]),
        10,
        2,
        accept=lambda fl: is_optimum_distance(FlagCode(fl, b)),
    )
    code = FlagCode(f, b)
    assert f.type_vector == (2, 4, 8, 10)
    assert (code.cardinality, code.min_distance) == (273, 24)
    assert is_disjoint(code)


def test_extend_reproduces_optimum_code_of_size_65():
    b = C12.alpha**63
    def opt(fl):
        return is_optimum_distance(FlagCode(fl, b))

    f = extend_flag_by_search(make_flag([subfield(C12, 2)]), 4, 2, accept=opt, within=subfield(C12, 6))
    f = make_flag(list(f) + [subfield(C12, 6)])
    f = extend_flag_by_search(f, 8, 2, accept=opt)
    f = extend_flag_by_search(f, 10, 2, accept=opt)
    code = FlagCode(f, b)
    assert f.type_vector == (2, 4, 6, 8, 10) and best_friend_flag(f) == 2
    assert (code.cardinality, code.min_distance) == (65, 36)
    short = FlagCode(subflag(f, [0, 1, 3, 4]), b)
    assert (short.cardinality, short.min_distance) == (65, 24)


def test_extend_basic_witness_and_errors():
    f = extend_flag_by_search(make_flag([subfield(C8, 2)]), 6, 2)
    assert f[1].dim == 6 and f[0] < f[1]
    with pytest.raises(ConstructionError):
        extend_flag_by_search(make_flag([subfield(C8, 2)]), 2, 2)
    with pytest.raises(ConstructionError):
        extend_flag_by_search(make_flag([subfield(C8, 2)]), 5, 2)
    with pytest.raises(ConstructionError):
        extend_flag_by_search(make_flag([subfield(C8, 2)]), 6, 2, accept=lambda _: False,
                              max_candidates=50)


def test_table_report_rows():
    rows = table_report(C12, 2, [C12.alpha ** k for k in (1, 5, 9, 63)])
    assert [(r.order, r.intersection_order, r.orbit_size) for r in rows] == [
        (4095, 3, 1365), (819, 3, 273), (455, 1, 455), (65, 1, 65)
    ]
    with pytest.raises(ValueError):
        table_report(C12, 5, [C12.alpha])


def test_regular_form_block_is_used_by_weave():
    g = weaved_construction(C12, [2, 4])
    assert g[2] == regular_form_subspace(C12, 4, 1, 2)
