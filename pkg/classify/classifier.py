#!/usr/bin/env python3
"""
五度 Cayley 图的完美码判定与含单位元完美码的枚举

判定不预设 (s, s′) 的取法：两种取法各自再考虑 s -> -s（h -> m - h），
对每个变体尝试 a ∈ {1, -1}，按 s0 的位置分派三类情形：
    I   s0 ∉ ⟨s, s′⟩
    II  s0 = (m/2)·s
    III s0 = shift·s + (l/2)·s′，shift = (m + h - lcm(h, m))/2
s0 在 ⟨s, s′⟩ 内部但三种形状都不是时（INNER_OTHER），改用 classify.isomorphism 做图同构匹配。
"""

import itertools
import math
from typing import FrozenSet, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict

from codes.cosets import d_coset
from config.settings import settings
from graphs.graph import cayley, is_perfect_code
from groups.abelian import (
    Element,
    GroupSpec,
    add,
    elements,
    format_element,
    index_of,
    linear,
    neg,
)
from classify.isomorphism import CanonicalMatch, codes_through, match_canonical_forms
from classify.normalize import (
    AS_GIVEN,
    INNER_OTHER,
    ISOMORPHIC,
    NO_CODE_MULTIPLE_INVOLUTIONS,
    OUTSIDE,
    NormalizedSet,
    normalize,
)
from utils.conditions import case_holds, dprime_preconditions
from utils.errors import EnumerationTooLarge, InternalAssertionError
from utils.logger import LogMessages
from utils.numtheory import lcm0, sigma2

THIRD_RANGE = "b/3"
SIXTH_RANGE = "b/6"

Code = Tuple[Element, ...]


class Witness(BaseModel):
    """一个通过判定的 (取法, s 的符号, a, 情形)"""

    model_config = ConfigDict(frozen=True)

    orientation: str
    s_sign: int
    a: int
    case: str
    m: int
    l: int
    h: int
    s: Element
    sp: Element
    s0: Element
    theorem2_case: str

    @property
    def b(self) -> int:
        return math.gcd(abs(self.l - self.a * self.h), self.m)

    @property
    def coset_count(self) -> int:
        return self.b // (3 if self.theorem2_case == THIRD_RANGE else 6)


class Classification(BaseModel):
    """
    判定结果

    admits ⇔ case_tag 非空 ⇔ sign_set 非空。m/l/h/orientation 来自主见证；
    不存在完美码时取 as-given 分解的参数（多对合终止判定时为空）。
    经图同构判定时 orientation 为 isomorphic，m/l/h 取匹配到的网格构造，isomorphic_form 记录其名称。
    """

    model_config = ConfigDict(frozen=True)

    admits: bool
    case_tag: Optional[str] = None
    m: Optional[int] = None
    l: Optional[int] = None
    h: Optional[int] = None
    sign_set: List[int] = []
    orientation: Optional[str] = None
    theorem2_case: Optional[str] = None
    witnesses: List[Witness] = []
    terminal_verdict: Optional[str] = None
    isomorphic_form: Optional[str] = None


def _sign_variants(G: GroupSpec, ns: NormalizedSet) -> List[Tuple[int, Element, int]]:
    """(s 的符号, s, h)：s -> -s 时 h -> (m - h) mod m"""
    return [(1, ns.s, ns.h), (-1, neg(G, ns.s), (-ns.h) % ns.m)]


def _case_of(G: GroupSpec, s: Element, sp: Element, s0: Element,
             m: int, l: int, h: int, outside: bool) -> Optional[str]:
    """按 s0 的位置判定情形（不检查 σ 条件）"""
    if outside:
        return "I"
    if m % 2 == 0 and s0 == linear(G, [(m // 2, s)]):
        return "II"
    if l % 2 == 0 and dprime_preconditions(m, l, h):
        shift = (m + h - lcm0(h, m)) // 2
        if s0 == linear(G, [(shift, s), (l // 2, sp)]):
            return "III"
    return None


def theorem2_range(case: str, m: int, l: int) -> str:
    """枚举时的陪集范围：b/3 或 b/6"""
    if case == "I":
        return THIRD_RANGE
    if case == "II":
        return THIRD_RANGE if sigma2(l) == 0 else SIXTH_RANGE
    return THIRD_RANGE if sigma2(m) == 1 and sigma2(l) == 1 else SIXTH_RANGE


def find_witnesses(G: GroupSpec, candidates: Sequence[NormalizedSet]) -> List[Witness]:
    """按 as-given(+), as-given(-), swapped(+), swapped(-) 的顺序列出全部见证"""
    witnesses = []
    for ns in candidates:
        outside = ns.s0_category == OUTSIDE
        for s_sign, s, h in _sign_variants(G, ns):
            case = _case_of(G, s, ns.sp, ns.s0, ns.m, ns.l, h, outside)
            if case is None:
                continue
            for a in (1, -1):
                if case_holds(case, ns.m, ns.l, h, a):
                    witnesses.append(Witness(
                        orientation=ns.orientation, s_sign=s_sign, a=a, case=case,
                        m=ns.m, l=ns.l, h=h, s=s, sp=ns.sp, s0=ns.s0,
                        theorem2_case=theorem2_range(case, ns.m, ns.l),
                    ))
    return witnesses


def admits_perfect_code(G: GroupSpec, S: Sequence[Element]) -> Classification:
    """
    判定 Cay(G, S) 是否存在完美码

    Raises:
        NotQuintic, NotInverseClosed, NotGenerating, ContainsIdentity
    """
    result = normalize(G, S)
    if result == NO_CODE_MULTIPLE_INVOLUTIONS:
        logger.debug(f"{G} 上的连接集含多个对合，直接判定无完美码")
        return Classification(admits=False, terminal_verdict=NO_CODE_MULTIPLE_INVOLUTIONS)

    witnesses = find_witnesses(G, result)
    if not witnesses and any(ns.s0_category == INNER_OTHER for ns in result):
        matches = match_canonical_forms(G, list(S), first_only=True)
        if matches:
            return _isomorphic_classification(G, S, matches[0])
    if not witnesses:
        as_given = result[0]
        return Classification(admits=False, m=as_given.m, l=as_given.l, h=as_given.h,
                              orientation=AS_GIVEN)

    primary = witnesses[0]
    signs = sorted({w.a for w in witnesses
                    if w.orientation == primary.orientation and w.s_sign == primary.s_sign})
    if len(signs) == 2:
        logger.warning(LogMessages.both_signs_valid(f"{G} {[format_element(x) for x in S]}"))
    return Classification(
        admits=True,
        case_tag=primary.case,
        m=primary.m, l=primary.l, h=primary.h,
        sign_set=signs,
        orientation=primary.orientation,
        theorem2_case=primary.theorem2_case,
        witnesses=witnesses,
    )


def _isomorphic_classification(G: GroupSpec, S: Sequence[Element], match: CanonicalMatch) -> Classification:
    form = match.form
    signs = sorted(form.signs)
    if len(signs) == 2:
        logger.warning(LogMessages.both_signs_valid(f"{G} {[format_element(x) for x in S]}"))
    return Classification(
        admits=True,
        case_tag=form.case,
        m=form.m, l=form.l, h=form.h,
        sign_set=signs,
        orientation=ISOMORPHIC,
        theorem2_case=theorem2_range(form.case, form.m, form.l),
        isomorphic_form=form.describe(),
    )


def _witness_codes(G: GroupSpec, w: Witness) -> List[FrozenSet[Element]]:
    """一个见证给出的全部 ∪_i D^a(i, j_i)，j_0 = 0"""
    count = w.coset_count
    if count > settings.ENUMERATION_MAX_COSETS:
        raise EnumerationTooLarge(
            f"陪集个数 {count} 超过上限 {settings.ENUMERATION_MAX_COSETS}（ENUMERATION_MAX_COSETS）"
        )
    cosets = [
        [d_coset(G, w.s, w.sp, w.s0, w.a, i, j) for j in (0, 1)]
        for i in range(count)
    ]
    codes = []
    for tail in itertools.product((0, 1), repeat=count - 1):
        js = (0,) + tail
        members = set()
        for i, j in enumerate(js):
            members |= cosets[i][j]
        codes.append(frozenset(members))
    return codes


def _canonical(codes) -> List[Code]:
    return sorted(tuple(sorted(code)) for code in set(codes))


def enumerate_identity_codes(G: GroupSpec, S: Sequence[Element],
                             classification: Optional[Classification] = None) -> List[Code]:
    """
    列出所有含单位元的完美码

    每个见证都展开全部 j 向量；同构判定时改为搬运每个同构网格构造上的码族。
    按集合相等去重，返回前逐个用 is_perfect_code 自检。

    Raises:
        InternalAssertionError: 生成的集合不是完美码
    """
    if classification is None:
        classification = admits_perfect_code(G, S)
    if not classification.admits:
        return []

    collected = set()
    for w in classification.witnesses:
        collected.update(_witness_codes(G, w))
    if classification.orientation == ISOMORPHIC:
        for match in match_canonical_forms(G, list(S)):
            collected.update(codes_through(match, G))

    graph = cayley(G, S)
    identity = G.identity
    for code in collected:
        indices = [index_of(G, x) for x in code]
        if identity not in code or not is_perfect_code(graph, indices):
            shown = sorted(format_element(x) for x in code)
            message = f"{G} {[format_element(x) for x in S]} 的枚举结果 {shown} 不是含单位元的完美码"
            logger.error(LogMessages.self_verification_failed(message))
            raise InternalAssertionError(message)
    return _canonical(collected)


def enumerate_all_codes(G: GroupSpec, S: Sequence[Element],
                        identity_codes: Optional[List[Code]] = None) -> List[Code]:
    """全部完美码：含单位元的完美码的所有平移 g + D"""
    if identity_codes is None:
        identity_codes = enumerate_identity_codes(G, S)
    collected = set()
    for code in identity_codes:
        for g in elements(G):
            collected.add(frozenset(add(G, g, x) for x in code))
    return _canonical(collected)

