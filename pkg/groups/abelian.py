#!/usr/bin/env python3
"""
有限阿贝尔群：循环群直积、元素运算、阶、生成子群与连接集校验

群写成加法，单位元为 0。元素用 tuple[int, ...] 表示，每个分量约化到 [0, d_i)。
GroupSpec 不做不变因子标准化：Z6xZ2 与 Z2xZ6 是两个不同的规格。
"""

import math
import re
from collections import deque
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from utils.errors import DimensionMismatch, ParseError

Element = Tuple[int, ...]


class GroupSpec(BaseModel):
    """循环因子模数列表描述的有限阿贝尔群"""

    model_config = ConfigDict(frozen=True)

    factors: Tuple[int, ...]

    @field_validator("factors")
    @classmethod
    def _check_factors(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if not value:
            raise ValueError("循环因子列表不能为空")
        for d in value:
            if d < 2:
                raise ValueError(f"循环因子模数必须 >= 2，收到 {d}")
        return tuple(value)

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def rank(self) -> int:
        return len(self.factors)

    @property
    def identity(self) -> Element:
        return (0,) * len(self.factors)

    def __str__(self) -> str:
        return "x".join(f"Z{d}" for d in self.factors)


class ConnectionSetReport(BaseModel):
    """连接集诊断记录（从不抛异常）"""

    model_config = ConfigDict(frozen=True)

    inverse_closed: bool
    excludes_identity: bool
    generates: bool
    involution_count: int
    distinct_count: int

    @property
    def is_cayley_valid(self) -> bool:
        """逆封闭且不含单位元：可以构造 Cayley 图"""
        return self.inverse_closed and self.excludes_identity


def group(*factors: int) -> GroupSpec:
    """快捷构造：group(6, 2) 即 Z6xZ2"""
    return GroupSpec(factors=tuple(factors))


def reduce(G: GroupSpec, residues: Sequence[int]) -> Element:
    """把任意整数向量约化到规范代表"""
    if len(residues) != G.rank:
        raise DimensionMismatch(
            f"元素 {tuple(residues)} 的维数 {len(residues)} 与群 {G} 的因子个数 {G.rank} 不一致"
        )
    return tuple(r % d for r, d in zip(residues, G.factors))


def add(G: GroupSpec, e1: Element, e2: Element) -> Element:
    if len(e1) != G.rank or len(e2) != G.rank:
        raise DimensionMismatch(f"元素 {e1}, {e2} 与群 {G} 维数不一致")
    return tuple((x + y) % d for x, y, d in zip(e1, e2, G.factors))


def scale(G: GroupSpec, k: int, e: Element) -> Element:
    """k·e；k 可以为负，scale(G, -1, e) 是逆元"""
    if len(e) != G.rank:
        raise DimensionMismatch(f"元素 {e} 与群 {G} 维数不一致")
    return tuple((k * x) % d for x, d in zip(e, G.factors))


def neg(G: GroupSpec, e: Element) -> Element:
    return scale(G, -1, e)


def linear(G: GroupSpec, terms: Iterable[Tuple[int, Element]]) -> Element:
    """线性组合 Σ k_i·e_i"""
    total = [0] * G.rank
    for k, e in terms:
        if len(e) != G.rank:
            raise DimensionMismatch(f"元素 {e} 与群 {G} 维数不一致")
        for idx, x in enumerate(e):
            total[idx] += k * x
    return tuple(t % d for t, d in zip(total, G.factors))


def order_of(G: GroupSpec, e: Element) -> int:
    """
    元素的阶：各分量 d_i / gcd(d_i, r_i) 的最小公倍数

    Args:
        G: 群
        e: 元素

    Returns:
        最小的 m >= 1 使 m·e = 0
    """
    if len(e) != G.rank:
        raise DimensionMismatch(f"元素 {e} 与群 {G} 维数不一致")
    result = 1
    for r, d in zip(e, G.factors):
        result = math.lcm(result, d // math.gcd(d, r % d))
    return result


def span(G: GroupSpec, gens: Sequence[Element]) -> FrozenSet[Element]:
    """生成子群（有限群中对加法封闭即对取逆封闭）"""
    gens = [reduce(G, g) for g in gens]
    identity = G.identity
    seen = {identity}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = add(G, x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


@lru_cache(maxsize=256)
def elements(G: GroupSpec) -> Tuple[Element, ...]:
    """全部元素，字典序（第一个分量最高位）"""
    result: List[Element] = [()]
    for d in G.factors:
        result = [e + (r,) for e in result for r in range(d)]
    return tuple(result)


def index_of(G: GroupSpec, e: Element) -> int:
    """元素在字典序中的下标（混合进制）"""
    if len(e) != G.rank:
        raise DimensionMismatch(f"元素 {e} 与群 {G} 维数不一致")
    idx = 0
    for r, d in zip(e, G.factors):
        idx = idx * d + (r % d)
    return idx


def involutions(G: GroupSpec) -> List[Element]:
    """所有阶恰为 2 的元素，字典序"""
    halves = [(0,) if d % 2 else (0, d // 2) for d in G.factors]
    result: List[Element] = [()]
    for options in halves:
        result = [e + (r,) for e in result for r in options]
    return [e for e in result if any(e)]


def validate_connection_set(G: GroupSpec, S: Sequence[Element]) -> ConnectionSetReport:
    """
    计算连接集的全部诊断标志

    Args:
        G: 群
        S: 连接集（可能含重复）

    Returns:
        ConnectionSetReport；generates 表示 span(S) = G，即 Cayley 图连通
    """
    reduced = [reduce(G, x) for x in S]
    distinct = set(reduced)
    return ConnectionSetReport(
        inverse_closed=all(neg(G, x) in distinct for x in distinct),
        excludes_identity=G.identity not in distinct,
        generates=len(span(G, sorted(distinct))) == G.order,
        involution_count=sum(1 for x in distinct if order_of(G, x) == 2),
        distinct_count=len(distinct),
    )


# ---- 文本格式 ----

_GROUP_FACTOR = re.compile(r"z(\d+)", re.IGNORECASE)
_INTEGER = re.compile(r"[+-]?\d+")


def parse_group(text: str) -> GroupSpec:
    """
    解析群规格字符串，如 "Z6xZ2"（不区分大小写）

    Raises:
        ParseError: 带出错位置
    """
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s:
        raise ParseError("群规格为空", 0)
    factors = []
    pos = 0
    while True:
        match = _GROUP_FACTOR.match(s, pos)
        if not match:
            raise ParseError(f"期望形如 Z<n> 的循环因子: {text!r}", offset + pos)
        d = int(match.group(1))
        if d < 2:
            raise ParseError(f"循环因子模数必须 >= 2: Z{d}", offset + match.start(1))
        factors.append(d)
        pos = match.end()
        if pos == len(s):
            break
        if s[pos] not in "xX":
            raise ParseError(f"期望分隔符 'x': {text!r}", offset + pos)
        pos += 1
    return GroupSpec(factors=tuple(factors))


def parse_element(text: str, G: GroupSpec = None) -> Element:
    """
    解析元素字面量 "(r1,r2,...)"；一维时也接受不带括号的整数

    Args:
        text: 字面量
        G: 给定时检查维数并约化

    Raises:
        ParseError: 带出错位置
    """
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s:
        raise ParseError("元素字面量为空", offset)
    if s[0] != "(":
        match = _INTEGER.fullmatch(s)
        if not match:
            raise ParseError(f"无法解析元素: {text!r}", offset)
        values = [int(s)]
    else:
        if s[-1] != ")":
            raise ParseError(f"缺少右括号: {text!r}", offset + len(s))
        values = []
        pos = 1
        inner_end = len(s) - 1
        while True:
            while pos < inner_end and s[pos] == " ":
                pos += 1
            match = _INTEGER.match(s, pos)
            if not match or match.end() > inner_end:
                raise ParseError(f"期望整数分量: {text!r}", offset + pos)
            values.append(int(match.group()))
            pos = match.end()
            while pos < inner_end and s[pos] == " ":
                pos += 1
            if pos == inner_end:
                break
            if s[pos] != ",":
                raise ParseError(f"期望分隔符 ',': {text!r}", offset + pos)
            pos += 1
    if G is None:
        return tuple(values)
    if len(values) != G.rank:
        raise ParseError(f"元素 {text!r} 有 {len(values)} 个分量，群 {G} 需要 {G.rank} 个", offset)
    return reduce(G, values)


def parse_element_list(text: str, G: GroupSpec = None) -> List[Element]:
    """解析以 ';' 分隔的元素列表，如 "(1);(5);(2)" """
    if not text.strip():
        raise ParseError("元素列表为空", 0)
    result = []
    pos = 0
    for chunk in text.split(";"):
        try:
            result.append(parse_element(chunk, G))
        except ParseError as e:
            local = e.position if e.position is not None else 0
            raise ParseError(str(e).rsplit(" (位置", 1)[0], pos + local) from None
        pos += len(chunk) + 1
    return result


def format_element(e: Element) -> str:
    return "(" + ",".join(str(r) for r in e) + ")"
