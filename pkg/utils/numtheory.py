#!/usr/bin/env python3
"""
整数工具：σ（2-adic 赋值）、τ、α、lcm0 等

σ(0) 约定为无穷大（每个 2 的幂都整除 0）；τ 的搜索下标只取 m 的因子。
"""

import math
from typing import List, Union

# 扩展赋值：自然数或无穷大。math.inf 大于任何整数且 inf == inf
INFINITY = math.inf
ExtValuation = Union[int, float]


def sigma2(n: int) -> ExtValuation:
    """
    2-adic 赋值：最大的 i 使得 2^i | n
    
    Args:
        n: 任意整数（按绝对值计算）
        
    Returns:
        赋值；n = 0 时返回 INFINITY
    """
    if n == 0:
        return INFINITY
    n = abs(n)
    return (n & -n).bit_length() - 1


def nonzero_product(x: ExtValuation, y: ExtValuation) -> bool:
    """"σ(h)σ(l) ≠ 0" 的读法：两个因子都不为 0（无穷大不为 0）"""
    return x != 0 and y != 0


def divisors(m: int) -> List[int]:
    """m 的全部正因子，升序"""
    if m < 1:
        raise ValueError(f"divisors 需要正整数，收到 {m}")
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def tau(n: int, m: int) -> int:
    """
    最小的 m 的因子 j，使 gcd(n, m/j) = 1
    
    Args:
        n: 非负整数
        m: 正整数
        
    Returns:
        τ(n, m)，一定整除 m
    """
    if m < 1:
        raise ValueError(f"tau 需要 m >= 1，收到 {m}")
    for j in divisors(m):
        if math.gcd(n, m // j) == 1:
            return j
    return m


def alpha(n: int) -> int:
    """α(n) = (3 + (-1)^n) / 2：偶数为 2，奇数为 1"""
    return 2 if n % 2 == 0 else 1


def lcm0(a: int, b: int) -> int:
    """最小公倍数，约定 lcm(0, x) = lcm(x, 0) = 0"""
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // math.gcd(a, b)


def gcd0(a: int, b: int) -> int:
    """按绝对值计算的最大公约数，gcd(0, m) = m"""
    return math.gcd(a, b)
