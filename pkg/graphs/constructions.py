#!/usr/bin/env python3
"""
网格构造族 Γ、Γ′、Γ″，映射 φ 以及分类的三类情形的标准 Cayley 形式

网格顶点 (a, b) 对应子群 ⟨s, s′⟩ 中的元素 a·s + b·s′，关系为 m·s = 0、
l·s′ = -h·s。行边是加 s，列边与回绕边合起来是加 s′。
顶点 (a, b) 的下标为 a·l + b，带层号时 (a, b, k) 的下标为 2(a·l + b) + k。
"""

from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from graphs.graph import Graph, cartesian_k2, cayley, is_isomorphism
from groups.abelian import Element, GroupSpec, index_of
from utils.conditions import CASES, case_holds, dprime_preconditions
from utils.errors import DegenerateParameters, HypothesisViolation, NotIntegral
from utils.numtheory import lcm0, tau

GridVertex = Tuple[int, ...]

FAMILY_ALIASES = {
    "gamma": "plain",
    "plain": "plain",
    "gamma-prime": "prime",
    "prime": "prime",
    "gamma-dprime": "dprime",
    "dprime": "dprime",
    "gamma-k2": "times-k2",
    "times-k2": "times-k2",
}

# 每个变体对应的分类情形（plain 没有第五个生成元）
VARIANT_CASE = {"plain": None, "times-k2": "I", "prime": "II", "dprime": "III"}


def grid_index(l: int, a: int, b: int, k: Optional[int] = None) -> int:
    """网格坐标到顶点下标"""
    base = a * l + b
    return base if k is None else 2 * base + k


def grid_translate(m: int, l: int, h: int, vertex: GridVertex, x: int, y: int) -> GridVertex:
    """
    网格坐标下按群元素 x·s + y·s′ 平移

    b 方向每跨过一次 l 就带出一个 -h·s 的进位。
    """
    a, b = vertex[0], vertex[1]
    bt = b + y
    carry = bt // l
    return ((a + x - carry * h) % m, bt % l) + tuple(vertex[2:])


def dprime_shift(m: int, h: int) -> int:
    """半转匹配的行偏移 (m + h - lcm0(h, m)) / 2"""
    twice = m + h - lcm0(h, m)
    if twice % 2:
        raise DegenerateParameters(f"(m + h - lcm(h, m)) / 2 不是整数: m={m}, h={h}")
    return twice // 2


def _check_ranges(m: int, l: int, h: int) -> None:
    if m < 1 or l < 1:
        raise DegenerateParameters(f"需要 m >= 1 且 l >= 1，收到 m={m}, l={l}")
    if not 0 <= h < m:
        raise DegenerateParameters(f"需要 0 <= h < m，收到 h={h}, m={m}")


def _grid_edges(m: int, l: int, h: int) -> List[Tuple[GridVertex, GridVertex]]:
    edges = []
    for a in range(m):
        for b in range(l):
            edges.append(((a, b), ((a + 1) % m, b)))
            if b != l - 1:
                edges.append(((a, b), (a, b + 1)))
        edges.append(((a, l - 1), ((a - h) % m, 0)))
    return edges


def _assemble(m: int, l: int, edges, degree: int, name: str) -> Graph:
    """去重、检查自环与正则度后组装为 Graph"""
    pairs = set()
    for u, v in edges:
        if u == v:
            raise DegenerateParameters(f"{name}: 边 {u}-{v} 退化为自环")
        iu, iv = grid_index(l, *u), grid_index(l, *v)
        pairs.add((min(iu, iv), max(iu, iv)))
    keys = [(a, b) for a in range(m) for b in range(l)]
    g = Graph.from_edges(m * l, sorted(pairs), keys)
    if g.regular_degree() != degree:
        bad = next(v for v in range(g.n) if g.degree(v) != degree)
        raise DegenerateParameters(
            f"{name}: 顶点 {g.label(bad)} 的度为 {g.degree(bad)}，期望 {degree}-正则"
        )
    return g


def gamma(m: int, l: int, h: int) -> Graph:
    """
    Γ_{m,l,h}：行环、列路径和偏移 h 的回绕边组成的 4-正则图

    Raises:
        DegenerateParameters: 去重后出现自环或度不为 4
    """
    _check_ranges(m, l, h)
    return _assemble(m, l, _grid_edges(m, l, h), 4, f"Γ({m},{l},{h})")


def gamma_prime(m: int, l: int, h: int) -> Graph:
    """Γ′：Γ 加上匹配 (a, b) ~ (a + m/2, b)，5-正则"""
    _check_ranges(m, l, h)
    if m % 2:
        raise DegenerateParameters(f"Γ′({m},{l},{h}) 需要 m 为偶数")
    gamma(m, l, h)
    edges = _grid_edges(m, l, h)
    for a in range(m // 2):
        for b in range(l):
            edges.append(((a, b), (a + m // 2, b)))
    return _assemble(m, l, edges, 5, f"Γ′({m},{l},{h})")


def dprime_partner(m: int, l: int, h: int, vertex: GridVertex) -> GridVertex:
    """Γ″ 匹配中与 vertex 配对的顶点：按对合 shift·s + (l/2)·s′ 平移"""
    return grid_translate(m, l, h, vertex, dprime_shift(m, h), l // 2)


def gamma_dprime(m: int, l: int, h: int) -> Graph:
    """
    Γ″：Γ 加上半转匹配，5-正则

    l/2 行以内的顶点 (a, b) 与 (a + shift, b + l/2) 相连；跨过回绕时按群关系带出 -h 的行偏移，
    因此匹配是群平移，恰好是一个对合。

    Raises:
        DegenerateParameters: σ(h) >= σ(m) >= 1、σ(l) >= 1 不成立，或边发生碰撞
    """
    _check_ranges(m, l, h)
    if not dprime_preconditions(m, l, h):
        raise DegenerateParameters(f"Γ″({m},{l},{h}) 需要 σ(h) >= σ(m) >= 1 且 σ(l) >= 1")
    gamma(m, l, h)
    edges = _grid_edges(m, l, h)
    for a in range(m):
        for b in range(l):
            edges.append(((a, b), dprime_partner(m, l, h, (a, b))))
    return _assemble(m, l, edges, 5, f"Γ″({m},{l},{h})")


def times_k2(m: int, l: int, h: int) -> Graph:
    """Γ × K2"""
    return cartesian_k2(gamma(m, l, h))


def build_family(name: str, m: int, l: int, h: int) -> Graph:
    """按名称构造（gamma / gamma-prime / gamma-dprime / gamma-k2 及其变体别名）"""
    variant = FAMILY_ALIASES.get(name)
    if variant is None:
        raise ValueError(f"未知构造族: {name}")
    builders = {"plain": gamma, "prime": gamma_prime, "dprime": gamma_dprime, "times-k2": times_k2}
    return builders[variant](m, l, h)


# ---- φ 与标准形式 ----

def _tau_checked(m: int, l: int, h: int) -> int:
    t = tau(h, l)
    if h % t:
        raise NotIntegral(f"τ(h,l) = {t} 不整除 h = {h}，(l·a - h·b)/τ 不是整数 (m={m}, l={l})")
    return t


def phi_map(m: int, l: int, h: int) -> Dict[GridVertex, Tuple[int, int]]:
    """
    φ(a, b) = ((l·a - h·b)/τ mod ml/τ, b mod τ)，τ = τ(h, l)

    Returns:
        网格坐标到 Z_{ml/τ} × Z_τ 坐标的字典

    Raises:
        NotIntegral: τ(h, l) ∤ h
    """
    _check_ranges(m, l, h)
    t = _tau_checked(m, l, h)
    n_big = m * l // t
    return {
        (a, b): (((l * a - h * b) // t) % n_big, b % t)
        for a in range(m)
        for b in range(l)
    }


def _quotient(m: int, l: int, h: int) -> Tuple[int, int]:
    t = _tau_checked(m, l, h)
    return m * l // t, t


def _pack(coords: Sequence[int], t: int) -> Element:
    """τ = 1 时去掉平凡因子 Z1"""
    return tuple(coords) if t > 1 else (coords[0],) + tuple(coords[2:])


def canonical_form(case: Optional[str], m: int, l: int, h: int,
                   require_theorem_conditions: bool = False) -> Tuple[GroupSpec, List[Element]]:
    """
    分类各情形的显式 (群, 连接集)

    连接集顺序固定为 [s, -s, s′, -s′, 第五个生成元]，其中 s = (l/τ, 0)，s′ = (-h/τ, 1)。
    case 为 None 时只返回 Γ 对应的四元连接集。

    Args:
        case: "I" / "II" / "III" / None
        m, l, h: 参数
        require_theorem_conditions: 为 True 时要求至少一个 a ∈ {-1, 1} 满足该情形的全部条件

    Raises:
        DegenerateParameters, NotIntegral, HypothesisViolation
    """
    if case is not None and case not in CASES:
        raise ValueError(f"未知分类: {case}")
    _check_ranges(m, l, h)
    if require_theorem_conditions and case is not None:
        if not any(case_holds(case, m, l, h, a) for a in (1, -1)):
            raise HypothesisViolation(f"参数 ({m},{l},{h}) 不满足第 {case} 类情形的条件")
    n_big, t = _quotient(m, l, h)

    s = (l // t, 0)
    sp = ((-h // t) % n_big, 1 % t)
    base_coords = [s, ((-s[0]) % n_big, 0), sp, ((-sp[0]) % n_big, (-sp[1]) % t)]

    if case == "I":
        G = GroupSpec(factors=(n_big, t, 2) if t > 1 else (n_big, 2))
        S = [_pack(c + (0,), t) for c in base_coords] + [_pack((0, 0, 1), t)]
        return G, S

    G = GroupSpec(factors=(n_big, t) if t > 1 else (n_big,))
    S = [_pack(c, t) for c in base_coords]
    if case is None:
        return G, S
    if case == "II":
        if n_big % 2:
            raise DegenerateParameters(f"ml/τ = {n_big} 为奇数，没有 ml/2τ 形式的对合")
        return G, S + [_pack((n_big // 2, 0), t)]

    # case III
    if not dprime_preconditions(m, l, h):
        raise DegenerateParameters(f"参数 ({m},{l},{h}) 不满足 σ(h) >= σ(m) >= 1 且 σ(l) >= 1")
    numerator = l * (m + lcm0(m, h))
    if numerator % (2 * t):
        raise NotIntegral(f"l(m + lcm(m,h))/2τ 不是整数: ({m},{l},{h})")
    extra = ((numerator // (2 * t)) % n_big, (l // 2) % t)
    return G, S + [_pack(extra, t)]


def verify_phi(variant: str, m: int, l: int, h: int) -> bool:
    """
    检查 φ（×K2 时为 φ × id）是网格构造到标准 Cayley 形式的保邻接双射

    Args:
        variant: plain / times-k2 / prime / dprime（也接受 CLI 构造族名）

    Raises:
        DegenerateParameters, NotIntegral: 构造或 φ 不可用
    """
    variant = FAMILY_ALIASES.get(variant, variant)
    if variant not in VARIANT_CASE:
        raise ValueError(f"未知变体: {variant}")
    grid = build_family(variant, m, l, h)
    phi = phi_map(m, l, h)
    t = tau(h, l)
    G, S = canonical_form(VARIANT_CASE[variant], m, l, h)
    host = cayley(G, S)

    mapping = []
    for key in grid.keys:
        image = phi[(key[0], key[1])]
        coords = image + tuple(key[2:])
        mapping.append(index_of(G, _pack(coords, t)))
    ok = is_isomorphism(grid, host, mapping)
    if not ok:
        logger.error(f"❌ φ 验证失败: 变体 {variant}, 参数 ({m},{l},{h})")
    return ok
