#!/usr/bin/env python3
"""
枚举含单位元完美码用的陪集 D^a(i, j) = {(3i + a·r)·s + r·s′ + (r + j)·s0 | r ∈ Z}
"""

import math
from typing import FrozenSet

from groups.abelian import Element, GroupSpec, format_element, linear, order_of
from utils.errors import InvalidInvolution


def d_coset(G: GroupSpec, s: Element, sp: Element, s0: Element,
            a: int, i: int, j: int) -> FrozenSet[Element]:
    """
    计算 D^a(i, j)

    系数三元组关于 r 的周期整除 lcm(o(s), o(s′), 2)，因此只需遍历一个周期。

    Raises:
        InvalidInvolution: o(s0) ≠ 2
    """
    if order_of(G, s0) != 2:
        raise InvalidInvolution(f"s0 = {format_element(s0)} 的阶不是 2")
    period = math.lcm(order_of(G, s), order_of(G, sp), 2)
    return frozenset(
        linear(G, [(3 * i + a * r, s), (r, sp), (r + j, s0)])
        for r in range(period)
    )
