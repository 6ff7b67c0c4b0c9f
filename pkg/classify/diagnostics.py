#!/usr/bin/env python3
"""
完美码的结构诊断与必要条件检查
"""

from typing import List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from graphs.graph import cayley, is_perfect_code
from groups.abelian import Element, GroupSpec, format_element, index_of, linear, order_of, reduce
from classify.normalize import NO_CODE_MULTIPLE_INVOLUTIONS, check_quintic, normalize
from utils.errors import NotAPerfectCode


class StructureReport(BaseModel):
    """
    含单位元完美码 D 的结构事实

    Attributes:
        diagonal_signs: 使 d ∈ D ⇒ d + a·s + s′ + s0 ∈ D 成立的 a
        minus_three_s_ok: 每个 d 都有 d - 3s 或 d - 3s - s0 在 D 中
        minus_three_sp_ok: 每个 d 都有 d - 3s′ 或 d - 3s′ - s0 在 D 中
        parity_ok: 2 | o(s)·o(s′)
    """

    model_config = ConfigDict(frozen=True)

    s: Element
    sp: Element
    s0: Element
    diagonal_signs: List[int]
    minus_three_s_ok: bool
    minus_three_sp_ok: bool
    parity_ok: bool


def code_structure_report(G: GroupSpec, S: Sequence[Element], D: Sequence[Element]) -> StructureReport:
    """
    在 as-given 取法下计算 D 的结构诊断

    Raises:
        NotAPerfectCode: D 不是含单位元的完美码
    """
    reduced = check_quintic(G, S)
    members = {reduce(G, d) for d in D}
    graph = cayley(G, reduced)
    if G.identity not in members or not is_perfect_code(graph, [index_of(G, d) for d in members]):
        raise NotAPerfectCode(f"{sorted(format_element(d) for d in members)} 不是含单位元的完美码")

    result = normalize(G, reduced)
    if result == NO_CODE_MULTIPLE_INVOLUTIONS:
        # 含多个对合时不存在完美码，前面的检查已经拒绝
        raise NotAPerfectCode("连接集含多个对合，不存在完美码")
    ns = result[0]
    s, sp, s0 = ns.s, ns.sp, ns.s0

    diagonal = [
        a for a in (1, -1)
        if all(linear(G, [(1, d), (a, s), (1, sp), (1, s0)]) in members for d in members)
    ]

    def _minus_three(x: Element) -> bool:
        return all(
            linear(G, [(1, d), (-3, x)]) in members or linear(G, [(1, d), (-3, x), (-1, s0)]) in members
            for d in members
        )

    return StructureReport(
        s=s, sp=sp, s0=s0,
        diagonal_signs=diagonal,
        minus_three_s_ok=_minus_three(s),
        minus_three_sp_ok=_minus_three(sp),
        parity_ok=(order_of(G, s) * order_of(G, sp)) % 2 == 0,
    )


def necessary_conditions(G: GroupSpec, S: Sequence[Element]) -> Tuple[bool, List[str]]:
    """
    完美码存在的必要条件：6 | |G| 且连接集恰有一个对合

    Returns:
        (是否满足, 不满足的原因列表)
    """
    errors = []
    if G.order % 6:
        errors.append(f"|G| = {G.order} 不被 6 整除")
    reduced = [reduce(G, x) for x in S]
    invol_count = sum(1 for x in set(reduced) if order_of(G, x) == 2)
    if invol_count != 1:
        errors.append(f"连接集含 {invol_count} 个对合")
    return len(errors) == 0, errors
