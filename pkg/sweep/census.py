#!/usr/bin/env python3
"""
小阶阿贝尔群与五元连接集的穷举

群按阶数的无序分解（因子不增、均 >= 2）列出，同构意义下的重复是允许的。
"""

from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from groups.abelian import Element, GroupSpec, elements, involutions, neg, span

INVOLUTION_CHOICES = ("1", "3", "5", "all")

# 五元集的组成：(对合个数, ± 对个数)
_SHAPES = {"1": [(1, 2)], "3": [(3, 1)], "5": [(5, 0)]}
_SHAPES["all"] = _SHAPES["1"] + _SHAPES["3"] + _SHAPES["5"]


def factorizations(n: int, largest: int = None) -> List[Tuple[int, ...]]:
    """n 分解为不增因子（>= 2）的全部方式，字典序降序"""
    if largest is None:
        largest = n
    if n == 1:
        return [()]
    result = []
    for d in range(min(n, largest), 1, -1):
        if n % d == 0:
            for rest in factorizations(n // d, d):
                result.append((d,) + rest)
    return result


def iter_group_specs(max_order: int, min_order: int = 2) -> Iterator[GroupSpec]:
    for order in range(max(2, min_order), max_order + 1):
        for factors in factorizations(order):
            yield GroupSpec(factors=factors)


def pair_representatives(G: GroupSpec) -> List[Element]:
    """非单位元、非对合元素在 ± 下的代表（取字典序较小者）"""
    reps = []
    for x in elements(G):
        if not any(x):
            continue
        minus = neg(G, x)
        if minus != x and x < minus:
            reps.append(x)
    return reps


def iter_connection_sets(G: GroupSpec, involution_choice: str = "all") -> Iterator[List[Element]]:
    """
    逐个给出生成 G 的逆封闭五元连接集

    元素顺序为 [x, -x, y, -y, 对合...]，对合按字典序。
    """
    if involution_choice not in _SHAPES:
        raise ValueError(f"对合个数必须是 {'/'.join(INVOLUTION_CHOICES)} 之一")
    invols = involutions(G)
    reps = pair_representatives(G)
    for inv_count, pair_count in _SHAPES[involution_choice]:
        for inv_part in combinations(invols, inv_count):
            for pairs in combinations(reps, pair_count):
                S: List[Element] = []
                for x in pairs:
                    S.extend([x, neg(G, x)])
                S.extend(inv_part)
                if len(span(G, S)) == G.order:
                    yield S


def count_involutions(G: GroupSpec, S: Sequence[Element]) -> int:
    return sum(1 for x in S if x == neg(G, x))
