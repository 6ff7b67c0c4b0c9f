#!/usr/bin/env python3
"""
三个显式完美码族

成员判定使用证明中的同余刻画，而不是陈述里的参数化集合：
在 (m,l,h,a) = (6,1,4,1) 处参数化集合有 6 个元素且不独立，同余刻画给出 {(0,0,0),(3,0,1)}。
参数化集合保留为诊断（parametric_agreement）。
"""

from typing import List

from codes.base import BaseCodeFamily, CodeFamilyParams
from graphs.constructions import GridVertex, dprime_shift
from graphs.graph import VertexSet
from utils.conditions import case_one_holds, case_three_variant, case_two_holds
from utils.numtheory import sigma2


class ProductCodeFamily(BaseCodeFamily):
    """Γ × K2 上大小为 ml/3 的完美码"""

    name = "2.3"
    graph_family = "times-k2"
    layered = True
    size_divisor = 3

    def hypothesis_errors(self) -> List[str]:
        p = self.params
        if case_one_holds(p.m, p.l, p.h, p.a):
            return []
        return ["需要 σ(h)σ(l) ≠ 0 或 σ(m) > σ(l - a·h)"]

    def r_count(self) -> int:
        return self.params.b // 3

    def contains(self, vertex: GridVertex) -> bool:
        p = self.params
        i, j, k = vertex
        b = p.b
        for r, t_r in enumerate(p.t):
            if p.l % 2 == 0:
                if (i - 3 * r - p.a * j) % b == 0 and (k - j - t_r) % 2 == 0:
                    return True
            elif (p.a * (i - 3 * r) - b * (k - t_r) - (b + 1) * j) % (2 * b) == 0:
                return True
        return False

    def parametric_point(self, r: int, j: int) -> GridVertex:
        p = self.params
        return ((3 * r + p.a * j) % p.m, j % p.l, (j + p.t[r]) % 2)


class AntipodalCodeFamily(BaseCodeFamily):
    """Γ′ 上大小为 ml/6 的完美码"""

    name = "2.7"
    graph_family = "prime"

    def hypothesis_errors(self) -> List[str]:
        p = self.params
        if case_two_holds(p.m, p.l, p.h, p.a):
            return []
        return ["需要 σ(l) = 0 且 σ(m) = σ(l - a·h) + 1，或 σ(h)σ(l) ≠ 0 且 σ(m) <= σ(l - a·h)"]

    def r_count(self) -> int:
        p = self.params
        return p.b // (3 * p.alpha_l)

    def contains(self, vertex: GridVertex) -> bool:
        p = self.params
        i, j = vertex
        step = p.b // p.alpha_l
        modulus = 2 * step
        for r, t_r in enumerate(p.t):
            if (i - 3 * r - step * t_r - (step + p.a) * j) % modulus == 0:
                return True
        return False

    def parametric_point(self, r: int, j: int) -> GridVertex:
        p = self.params
        return ((3 * r + p.a * j + (j + p.t[r]) * (p.m // 2)) % p.m, j % p.l)


class HalfTurnCodeFamily(BaseCodeFamily):
    """Γ″ 上大小为 ml/6 的完美码，分 (i)/(ii) 两种 r 范围"""

    name = "2.10"
    graph_family = "dprime"

    def variant(self) -> str:
        p = self.params
        return case_three_variant(p.m, p.l, p.h)

    def hypothesis_errors(self) -> List[str]:
        if self.variant() is None:
            return ["需要 σ(h) >= σ(m) = σ(l) = 1 或 σ(h) >= σ(m) > σ(l) >= 1"]
        return []

    def r_count(self) -> int:
        return self.params.b // (3 if self.variant() == "i" else 6)

    def contains(self, vertex: GridVertex) -> bool:
        p = self.params
        i, j = vertex
        b = p.b
        for r, t_r in enumerate(p.t):
            if sigma2(p.l) >= 2:
                if (p.a * (i - 3 * r) - (b // 2 + 1) * j - b * t_r // 2) % b == 0:
                    return True
            elif (j - t_r) % 2 == 0 and (i - 3 * r - p.a * j) % (b // p.beta) == 0:
                return True
        return False

    def parametric_point(self, r: int, j: int) -> GridVertex:
        p = self.params
        shift = dprime_shift(p.m, p.h)
        lift = j + p.t[r]
        return ((3 * r + p.a * j + lift * shift) % p.m, (j + lift * (p.l // 2)) % p.l)


def code_prop23(p: CodeFamilyParams) -> VertexSet:
    """Γ_{m,l,h} × K2 上的完美码（顶点下标）"""
    return ProductCodeFamily(p).vertex_set()


def code_prop27(p: CodeFamilyParams) -> VertexSet:
    """Γ′_{m,l,h} 上的完美码（顶点下标）"""
    return AntipodalCodeFamily(p).vertex_set()


def code_prop210(p: CodeFamilyParams) -> VertexSet:
    """Γ″_{m,l,h} 上的完美码（顶点下标）"""
    return HalfTurnCodeFamily(p).vertex_set()
