#!/usr/bin/env python3
"""
五元连接集的规范分解 S = {±s, ±s′, s0} 与参数 (m, l, h)
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple, Union

from groups.abelian import (
    Element,
    GroupSpec,
    add,
    format_element,
    neg,
    order_of,
    reduce,
    scale,
    span,
    validate_connection_set,
)
from utils.errors import ContainsIdentity, NotGenerating, NotInverseClosed, NotQuintic

# 连接集含 3 个或 5 个对合时的终止判定：不存在完美码
NO_CODE_MULTIPLE_INVOLUTIONS = "NO_CODE_MULTIPLE_INVOLUTIONS"

OUTSIDE = "OUTSIDE"
HALF_S = "HALF_S"
HALF_SP = "HALF_SP"
HALF_SUM = "HALF_SUM"
INNER_OTHER = "INNER_OTHER"

AS_GIVEN = "as-given"
SWAPPED = "swapped"
# 通过图同构匹配到网格构造，没有 (s, s′) 取法
ISOMORPHIC = "isomorphic"


@dataclass(frozen=True)
class NormalizedSet:
    """
    一种 (s, s′) 取法下的分解

    Attributes:
        s, sp, s0: 生成元，sp 即 s′，s0 为唯一对合
        m: o(s)
        l: 最小的正整数使 l·s′ ∈ ⟨s⟩
        h: [0, m) 中唯一满足 h·s + l·s′ = 0 的整数
        s0_category: s0 相对 ⟨s, s′⟩ 的位置
        orientation: as-given（按输入顺序）或 swapped
    """
    s: Element
    sp: Element
    s0: Element
    m: int
    l: int
    h: int
    s0_category: str
    orientation: str

    def describe(self) -> str:
        return (f"{self.orientation}: s={format_element(self.s)}, s′={format_element(self.sp)}, "
                f"s0={format_element(self.s0)}, (m,l,h)=({self.m},{self.l},{self.h}), {self.s0_category}")


def derive_hl(G: GroupSpec, s: Element, sp: Element) -> Tuple[int, int, int]:
    """
    计算 (m, l, h)

    Returns:
        m = o(s)；l = min{l >= 1 : l·s′ ∈ ⟨s⟩}；h ∈ [0, m) 满足 h·s = -l·s′
    """
    m = order_of(G, s)
    multiples = {scale(G, k, s): k for k in range(m)}
    current = G.identity
    for l in range(1, order_of(G, sp) + 1):
        current = add(G, current, sp)
        if current in multiples:
            return m, l, multiples[neg(G, current)]
    raise AssertionError("l·s′ 必然在 o(s′) 之内落入 ⟨s⟩")


def categorize_s0(G: GroupSpec, s: Element, sp: Element, s0: Element, m: int) -> str:
    """按元素相等判定 s0 的类别"""
    if s0 not in span(G, [s, sp]):
        return OUTSIDE
    half_s = scale(G, m // 2, s) if m % 2 == 0 else None
    o_sp = order_of(G, sp)
    half_sp = scale(G, o_sp // 2, sp) if o_sp % 2 == 0 else None
    if half_s is not None and s0 == half_s:
        return HALF_S
    if half_sp is not None and s0 == half_sp:
        return HALF_SP
    if half_s is not None and half_sp is not None and s0 == add(G, half_s, half_sp):
        return HALF_SUM
    return INNER_OTHER


def make_normalized(G: GroupSpec, s: Element, sp: Element, s0: Element, orientation: str) -> NormalizedSet:
    m, l, h = derive_hl(G, s, sp)
    return NormalizedSet(
        s=s, sp=sp, s0=s0, m=m, l=l, h=h,
        s0_category=categorize_s0(G, s, sp, s0, m),
        orientation=orientation,
    )


def check_quintic(G: GroupSpec, S: Sequence[Element]) -> List[Element]:
    """
    校验五元连接集并返回约化后的元素（保持输入顺序）

    Raises:
        NotQuintic, ContainsIdentity, NotInverseClosed, NotGenerating
    """
    reduced = [reduce(G, x) for x in S]
    if len(reduced) != 5 or len(set(reduced)) != 5:
        raise NotQuintic(f"连接集必须恰有 5 个互异元素，收到 {[format_element(x) for x in reduced]}")
    report = validate_connection_set(G, reduced)
    if not report.excludes_identity:
        raise ContainsIdentity("连接集包含单位元")
    if not report.inverse_closed:
        raise NotInverseClosed(f"连接集不是逆封闭的: {[format_element(x) for x in reduced]}")
    if not report.generates:
        raise NotGenerating(f"连接集不生成 {G}，Cayley 图不连通")
    return reduced


def normalize(G: GroupSpec, S: Sequence[Element]) -> Union[List[NormalizedSet], str]:
    """
    规范分解

    Returns:
        恰有一个对合时返回 [as-given, swapped] 两个 NormalizedSet；
        含 3 个或 5 个对合时返回 NO_CODE_MULTIPLE_INVOLUTIONS
    """
    reduced = check_quintic(G, S)
    invols = [x for x in reduced if order_of(G, x) == 2]
    if len(invols) != 1:
        return NO_CODE_MULTIPLE_INVOLUTIONS
    s0 = invols[0]
    # 按输入顺序取每个 ± 对中先出现的元素
    firsts: List[Element] = []
    for x in reduced:
        if x == s0:
            continue
        if neg(G, x) not in firsts:
            firsts.append(x)
    s, sp = firsts
    return [
        make_normalized(G, s, sp, s0, AS_GIVEN),
        make_normalized(G, sp, s, s0, SWAPPED),
    ]
