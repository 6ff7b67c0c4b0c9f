"""
连接集规范分解、完美码判定、枚举与结构诊断测试
"""

import pytest

from classify import (
    AS_GIVEN,
    HALF_S,
    HALF_SP,
    INNER_OTHER,
    ISOMORPHIC,
    NO_CODE_MULTIPLE_INVOLUTIONS,
    OUTSIDE,
    SWAPPED,
    admissible_parameters,
    admits_perfect_code,
    check_quintic,
    code_structure_report,
    derive_hl,
    enumerate_all_codes,
    enumerate_identity_codes,
    match_canonical_forms,
    necessary_conditions,
    normalize,
    theorem2_range,
)
from graphs.graph import cayley, is_isomorphism
from groups.abelian import group
from oracle.exact_cover import enumerate_perfect_codes
from utils.errors import ContainsIdentity, NotAPerfectCode, NotGenerating, NotInverseClosed, NotQuintic


def test_derive_hl():
    assert derive_hl(group(6, 2), (1, 0), (4, 1)) == (6, 2, 4)
    assert derive_hl(group(6), (1,), (2,)) == (6, 1, 4)
    assert derive_hl(group(6), (2,), (1,)) == (3, 2, 2)


def test_normalize_orientations(k6_instance):
    G, S = k6_instance
    as_given, swapped = normalize(G, S)
    assert (as_given.s, as_given.sp, as_given.s0) == ((1,), (2,), (3,))
    assert (as_given.m, as_given.l, as_given.h) == (6, 1, 4)
    assert as_given.orientation == AS_GIVEN
    assert as_given.s0_category == HALF_S
    assert (swapped.s, swapped.sp) == ((2,), (1,))
    assert swapped.orientation == SWAPPED
    assert swapped.s0_category == HALF_SP


def test_normalize_outside(outside_instance):
    as_given, _ = normalize(*outside_instance)
    assert as_given.s0_category == OUTSIDE


def test_normalize_multiple_involutions():
    G = group(2, 2, 3)
    S = [(0, 0, 1), (0, 0, 2), (0, 1, 0), (1, 0, 0), (1, 1, 0)]
    assert normalize(G, S) == NO_CODE_MULTIPLE_INVOLUTIONS
    verdict = admits_perfect_code(G, S)
    assert not verdict.admits
    assert verdict.terminal_verdict == NO_CODE_MULTIPLE_INVOLUTIONS
    assert enumerate_perfect_codes(cayley(G, S)) == []


def test_check_quintic_errors():
    with pytest.raises(NotQuintic):
        check_quintic(group(6), [(1,), (5,), (2,), (3,)])
    with pytest.raises(ContainsIdentity):
        check_quintic(group(6), [(0,), (1,), (5,), (2,), (4,)])
    with pytest.raises(NotInverseClosed):
        check_quintic(group(8), [(1,), (7,), (2,), (3,), (4,)])
    with pytest.raises(NotGenerating):
        check_quintic(group(12), [(2,), (10,), (4,), (8,), (6,)])


def test_classify_k6(k6_instance):
    G, S = k6_instance
    verdict = admits_perfect_code(G, S)
    assert verdict.admits
    assert verdict.case_tag == "II"
    assert (verdict.m, verdict.l, verdict.h) == (6, 1, 4)
    assert verdict.sign_set == [1]
    assert verdict.orientation == AS_GIVEN
    assert verdict.theorem2_case == "b/3"
    assert enumerate_identity_codes(G, S, verdict) == [((0,),)]


def test_classify_outside(outside_instance):
    G, S = outside_instance
    verdict = admits_perfect_code(G, S)
    assert verdict.case_tag == "I"
    assert verdict.sign_set == [1]
    assert enumerate_identity_codes(G, S) == [((0, 0), (3, 1))]


def test_classify_half_turn(half_turn_instance):
    G, S = half_turn_instance
    verdict = admits_perfect_code(G, S)
    assert verdict.case_tag == "III"
    assert (verdict.m, verdict.l, verdict.h) == (6, 2, 4)
    assert verdict.sign_set == [-1]
    assert enumerate_identity_codes(G, S, verdict) == [((0, 0), (0, 1)), ((0, 0), (3, 0))]


def test_classify_no_code(no_code_instance):
    G, S = no_code_instance
    verdict = admits_perfect_code(G, S)
    assert not verdict.admits
    assert verdict.case_tag is None
    assert verdict.sign_set == []
    assert (verdict.m, verdict.l, verdict.h) == (12, 1, 10)
    assert enumerate_identity_codes(G, S, verdict) == []
    assert enumerate_perfect_codes(cayley(G, S)) == []


def test_classify_antipodal_circulant():
    G = group(12)
    S = [(1,), (11,), (5,), (7,), (6,)]
    verdict = admits_perfect_code(G, S)
    assert verdict.admits
    assert verdict.case_tag == "II"
    g = cayley(G, S)
    oracle = {tuple(g.keys[v] for v in code) for code in enumerate_perfect_codes(g, containing=0)}
    assert set(enumerate_identity_codes(G, S, verdict)) == oracle


def test_classification_agrees_with_oracle(k6_instance, outside_instance, half_turn_instance):
    for G, S in (k6_instance, outside_instance, half_turn_instance):
        g = cayley(G, S)
        oracle = {tuple(g.keys[v] for v in code) for code in enumerate_perfect_codes(g, containing=0)}
        assert set(enumerate_identity_codes(G, S)) == oracle


def test_normalize_inner_involution(lexicographic_instance, inner_involution_instance):
    for G, S in (lexicographic_instance, inner_involution_instance):
        assert {ns.s0_category for ns in normalize(G, S)} == {INNER_OTHER}


@pytest.mark.parametrize("instance, code_count", [
    ("lexicographic_instance", 8),
    ("inner_involution_instance", 2),
])
def test_classify_inner_involution(request, instance, code_count):
    G, S = request.getfixturevalue(instance)
    verdict = admits_perfect_code(G, S)
    assert verdict.admits
    assert verdict.orientation == ISOMORPHIC
    assert verdict.case_tag in ("I", "II", "III")
    assert verdict.isomorphic_form is not None
    assert verdict.sign_set

    g = cayley(G, S)
    oracle = {tuple(g.keys[v] for v in code) for code in enumerate_perfect_codes(g, containing=0)}
    codes = enumerate_identity_codes(G, S, verdict)
    assert len(codes) == code_count
    assert set(codes) == oracle


def test_lexicographic_product_matches_antipodal_circulant(lexicographic_instance):
    G, S = lexicographic_instance
    assert ("II", 24, 1, 13, (1,)) in admissible_parameters(24)

    matches = match_canonical_forms(G, S)
    assert "Γ′(24,1,13)" in [match.form.describe() for match in matches]
    target = cayley(G, S)
    for match in matches:
        grid = match.form.grid
        assert is_isomorphism(grid, target, [match.mapping[v] for v in range(grid.n)])


def test_inner_involution_without_code():
    G = group(4, 2)
    S = [(1, 0), (3, 0), (1, 1), (3, 1), (0, 1)]
    assert {ns.s0_category for ns in normalize(G, S)} == {INNER_OTHER}
    verdict = admits_perfect_code(G, S)
    assert not verdict.admits
    assert verdict.orientation == AS_GIVEN
    assert enumerate_identity_codes(G, S, verdict) == []
    assert enumerate_perfect_codes(cayley(G, S)) == []


def test_enumerate_all_codes(k6_instance, half_turn_instance):
    G, S = k6_instance
    assert enumerate_all_codes(G, S) == [((x,),) for x in range(6)]

    G, S = half_turn_instance
    g = cayley(G, S)
    oracle = sorted(tuple(g.keys[v] for v in code) for code in enumerate_perfect_codes(g))
    assert enumerate_all_codes(G, S) == oracle


def test_theorem2_range():
    assert theorem2_range("I", 6, 1) == "b/3"
    assert theorem2_range("II", 6, 1) == "b/3"
    assert theorem2_range("II", 6, 2) == "b/6"
    assert theorem2_range("III", 6, 2) == "b/3"
    assert theorem2_range("III", 12, 2) == "b/6"


def test_code_structure_report(k6_instance, outside_instance):
    G, S = k6_instance
    report = code_structure_report(G, S, [(0,)])
    assert report.diagonal_signs == [1]
    assert report.minus_three_s_ok
    assert report.minus_three_sp_ok
    assert report.parity_ok

    G, S = outside_instance
    report = code_structure_report(G, S, [(0, 0), (3, 1)])
    assert report.diagonal_signs == [1]


def test_code_structure_report_rejects_non_code(k6_instance):
    G, S = k6_instance
    with pytest.raises(NotAPerfectCode):
        code_structure_report(G, S, [(0,), (1,)])
    with pytest.raises(NotAPerfectCode):
        code_structure_report(G, S, [(1,)])


def test_necessary_conditions(k6_instance):
    ok, errors = necessary_conditions(*k6_instance)
    assert ok and errors == []
    ok, errors = necessary_conditions(group(8), [(1,), (7,), (3,), (5,), (4,)])
    assert not ok
    assert len(errors) == 1


def test_family_codes_map_to_enumerated_codes():
    # φ 把网格上的码族映到标准形式上含单位元的枚举结果
    from codes import CodeFamilyParams, HalfTurnCodeFamily
    from graphs.constructions import canonical_form, phi_map

    G, S = canonical_form("III", 6, 2, 4)
    enumerated = set(enumerate_identity_codes(G, S))
    phi = phi_map(6, 2, 4)
    for t in ((0, 0), (0, 1)):
        family = HalfTurnCodeFamily(CodeFamilyParams(m=6, l=2, h=4, a=-1, t=t))
        image = tuple(sorted(phi[v] for v in family.coordinates()))
        assert image in enumerated


def test_d_coset_contains_identity(half_turn_instance):
    from codes import d_coset

    G, _ = half_turn_instance
    for a in (1, -1):
        assert G.identity in d_coset(G, (1, 0), (4, 1), (3, 1), a, 0, 0)
