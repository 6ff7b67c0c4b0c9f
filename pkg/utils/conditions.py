#!/usr/bin/env python3
"""
分类判定与三个码族前提使用的 σ 条件谓词

所有谓词只依赖整数参数 (m, l, h, a)，返回 bool，从不抛异常。
"""

from typing import Optional

from utils.numtheory import nonzero_product, sigma2

CASES = ("I", "II", "III")


def base_conditions(m: int, l: int, h: int, a: int) -> bool:
    """0 <= h < m，l > 0，6 | m，3 | (l - a·h)"""
    return 0 <= h < m and l > 0 and m % 6 == 0 and (l - a * h) % 3 == 0


def case_one_holds(m: int, l: int, h: int, a: int) -> bool:
    """σ(h)σ(l) ≠ 0 或 σ(m) > σ(l - ah)"""
    return nonzero_product(sigma2(h), sigma2(l)) or sigma2(m) > sigma2(l - a * h)


def case_two_holds(m: int, l: int, h: int, a: int) -> bool:
    """σ(l) = 0 且 σ(m) = σ(l - ah) + 1，或 σ(h)σ(l) ≠ 0 且 σ(m) <= σ(l - ah)"""
    s_m, s_l, s_d = sigma2(m), sigma2(l), sigma2(l - a * h)
    if s_l == 0 and s_m == s_d + 1:
        return True
    return nonzero_product(sigma2(h), s_l) and s_m <= s_d


def case_three_variant(m: int, l: int, h: int) -> Optional[str]:
    """
    第三类的两个分支

    Returns:
        "i"：σ(h) >= σ(m) = σ(l) = 1；"ii"：σ(h) >= σ(m) > σ(l) >= 1；否则 None
    """
    s_m, s_l, s_h = sigma2(m), sigma2(l), sigma2(h)
    if s_h < s_m:
        return None
    if s_m == 1 and s_l == 1:
        return "i"
    if s_m > s_l >= 1:
        return "ii"
    return None


def case_holds(case: str, m: int, l: int, h: int, a: int) -> bool:
    """给定符号 a 时某一类的完整条件（含基本条件）"""
    if not base_conditions(m, l, h, a):
        return False
    if case == "I":
        return case_one_holds(m, l, h, a)
    if case == "II":
        return case_two_holds(m, l, h, a)
    if case == "III":
        return case_three_variant(m, l, h) is not None
    raise ValueError(f"未知分类: {case}")


def dprime_preconditions(m: int, l: int, h: int) -> bool:
    """带半转匹配构造的前提：σ(h) >= σ(m) >= 1 且 σ(l) >= 1"""
    s_m = sigma2(m)
    return sigma2(h) >= s_m >= 1 and sigma2(l) >= 1
