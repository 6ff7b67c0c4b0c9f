#!/usr/bin/env python3
"""
码族基类与参数模型
"""

import math
from typing import List, Set, Tuple

from pydantic import BaseModel, ConfigDict, computed_field, field_validator

from graphs.constructions import GridVertex, build_family, grid_index
from graphs.graph import Graph, VertexSet, vertex_set
from utils.conditions import base_conditions
from utils.errors import HypothesisViolation
from utils.numtheory import alpha, sigma2


class CodeFamilyParams(BaseModel):
    """
    驱动所有码族公式的参数

    b = gcd(|l - a·h|, m)，约定 gcd(0, m) = m。
    """

    model_config = ConfigDict(frozen=True)

    m: int
    l: int
    h: int
    a: int = 1
    t: Tuple[int, ...] = ()

    @field_validator("a")
    @classmethod
    def _check_sign(cls, value: int) -> int:
        if value not in (-1, 1):
            raise ValueError(f"符号 a 必须是 -1 或 1，收到 {value}")
        return value

    @field_validator("t")
    @classmethod
    def _check_bits(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if any(bit not in (0, 1) for bit in value):
            raise ValueError(f"t 向量只能包含 0/1，收到 {list(value)}")
        return tuple(value)

    @computed_field
    @property
    def b(self) -> int:
        return math.gcd(abs(self.l - self.a * self.h), self.m)

    @computed_field
    @property
    def alpha_l(self) -> int:
        return alpha(self.l)

    @computed_field
    @property
    def beta(self) -> int:
        return 1 if sigma2(self.m) == 1 else 2

    def with_t(self, t) -> "CodeFamilyParams":
        return self.model_copy(update={"t": tuple(t)})


class BaseCodeFamily:
    """
    显式码族的公共流程：前提检查、r 范围、同余成员判定和参数化集合诊断

    子类给出 name、graph_family、layered、r_count()、hypothesis_errors()、
    contains() 和 parametric_point()。
    """

    name: str = ""
    graph_family: str = ""
    layered: bool = False
    size_divisor: int = 6

    def __init__(self, params: CodeFamilyParams):
        self.params = params

    # ---- 前提 ----

    def hypothesis_errors(self) -> List[str]:
        raise NotImplementedError

    def check_hypotheses(self) -> Tuple[bool, List[str]]:
        """
        Returns:
            (是否满足, 不满足的原因列表)
        """
        p = self.params
        errors = []
        if not base_conditions(p.m, p.l, p.h, p.a):
            errors.append(f"需要 0 <= h < m、l > 0、6 | m、3 | (l - a·h)，收到 (m,l,h,a)=({p.m},{p.l},{p.h},{p.a})")
            return False, errors
        errors.extend(self.hypothesis_errors())
        if not errors and len(p.t) != self.r_count():
            errors.append(f"t 向量长度必须为 {self.r_count()}，收到 {len(p.t)}")
        return len(errors) == 0, errors

    def ensure_hypotheses(self) -> None:
        ok, errors = self.check_hypotheses()
        if not ok:
            raise HypothesisViolation(f"码族 {self.name}: " + "；".join(errors))

    def r_count(self) -> int:
        raise NotImplementedError

    # ---- 生成 ----

    def contains(self, vertex: GridVertex) -> bool:
        raise NotImplementedError

    def grid_vertices(self) -> List[GridVertex]:
        p = self.params
        layers = (0, 1) if self.layered else (None,)
        result = []
        for i in range(p.m):
            for j in range(p.l):
                for k in layers:
                    result.append((i, j) if k is None else (i, j, k))
        return result

    def coordinates(self) -> List[GridVertex]:
        """满足同余刻画的全部网格坐标，字典序"""
        self.ensure_hypotheses()
        return [v for v in self.grid_vertices() if self.contains(v)]

    def vertex_set(self) -> VertexSet:
        """对应构造图上的顶点下标集合"""
        l = self.params.l
        return vertex_set(grid_index(l, *v) for v in self.coordinates())

    def expected_size(self) -> int:
        return self.params.m * self.params.l // self.size_divisor

    def build_graph(self) -> Graph:
        p = self.params
        return build_family(self.graph_family, p.m, p.l, p.h)

    # ---- 参数化集合（诊断） ----

    def parametric_point(self, r: int, j: int) -> GridVertex:
        raise NotImplementedError

    def parametric_set(self) -> Set[GridVertex]:
        """参数化并集 ∪_r C^a(r, t_r)，坐标逐个取模"""
        self.ensure_hypotheses()
        p = self.params
        period = 2 * math.lcm(p.m, p.l)
        return {
            self.parametric_point(r, j)
            for r in range(self.r_count())
            for j in range(period)
        }

    def parametric_agreement(self) -> bool:
        return self.parametric_set() == set(self.coordinates())
