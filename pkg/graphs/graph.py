#!/usr/bin/env python3
"""
有限简单无向图、Cayley 图、与 K2 的笛卡尔积以及完美码判定

顶点按标签的字典序编号，邻接表升序，所有输出都是确定性的。
闭邻域用 Python 整数做位集：第 v 位为 1 表示 v 在集合中。
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from groups.abelian import (
    Element,
    GroupSpec,
    add,
    elements,
    format_element,
    index_of,
    validate_connection_set,
)
from utils.errors import InvalidConnectionSet

VertexSet = Tuple[int, ...]


def vertex_set(members: Iterable[int]) -> VertexSet:
    """规范化为严格递增的下标元组"""
    return tuple(sorted(set(members)))


@dataclass(frozen=True)
class Graph:
    """
    有限简单无向图

    Attributes:
        n: 顶点数
        adjacency: 每个顶点的升序邻居下标
        keys: 可选，顶点下标到标签对象（群元素或网格坐标）的映射
    """
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    keys: Optional[Tuple[Hashable, ...]] = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]],
                   keys: Optional[Sequence[Hashable]] = None) -> "Graph":
        """由边集构造；重复边合并，自环调用方必须事先排除"""
        neighbors: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"自环 {u}-{v} 不允许出现在简单图中")
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(
            n=n,
            adjacency=tuple(tuple(sorted(nb)) for nb in neighbors),
            keys=tuple(keys) if keys is not None else None,
        )

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def regular_degree(self) -> Optional[int]:
        """k-正则时返回 k，否则 None"""
        if self.n == 0:
            return 0
        k = len(self.adjacency[0])
        return k if all(len(nb) == k for nb in self.adjacency) else None

    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adjacency), default=0)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """所有边 (u, v)，u < v，按字典序"""
        for u, nb in enumerate(self.adjacency):
            for v in nb:
                if u < v:
                    yield u, v

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    @cached_property
    def _neighbor_sets(self) -> Tuple[frozenset, ...]:
        return tuple(frozenset(nb) for nb in self.adjacency)

    @cached_property
    def closed_masks(self) -> Tuple[int, ...]:
        """每个顶点闭邻域 N[v] 的位集"""
        masks = []
        for v, nb in enumerate(self.adjacency):
            mask = 1 << v
            for u in nb:
                mask |= 1 << u
            masks.append(mask)
        return tuple(masks)

    @cached_property
    def _key_index(self) -> dict:
        if self.keys is None:
            return {}
        return {key: i for i, key in enumerate(self.keys)}

    def index_of_key(self, key: Hashable) -> int:
        """标签对象对应的顶点下标"""
        if self.keys is None:
            return int(key)
        try:
            return self._key_index[key]
        except KeyError:
            raise KeyError(f"图中没有标签为 {key} 的顶点") from None

    def label(self, v: int) -> str:
        if self.keys is None:
            return str(v)
        return format_element(self.keys[v])

    def labels_of(self, C: Iterable[int]) -> List[str]:
        return [self.label(v) for v in sorted(C)]

    def keys_of(self, C: Iterable[int]) -> List[Hashable]:
        if self.keys is None:
            return sorted(C)
        return [self.keys[v] for v in sorted(C)]


def cayley(G: GroupSpec, S: Sequence[Element]) -> Graph:
    """
    构造 Cay(G, S)：x ~ y 当且仅当 y - x ∈ S

    Args:
        G: 群
        S: 逆封闭、不含单位元、元素互异的连接集

    Returns:
        |G| 个顶点的 |S|-正则图，第 i 个顶点是字典序第 i 个元素

    Raises:
        InvalidConnectionSet: 连接集不满足前提
    """
    report = validate_connection_set(G, S)
    if report.distinct_count != len(S):
        raise InvalidConnectionSet(f"连接集含重复元素: {[format_element(x) for x in S]}")
    if not report.excludes_identity:
        raise InvalidConnectionSet("连接集包含单位元")
    if not report.inverse_closed:
        raise InvalidConnectionSet("连接集不是逆封闭的")

    verts = elements(G)
    reduced = [tuple(r % d for r, d in zip(x, G.factors)) for x in S]
    adjacency = tuple(
        tuple(sorted(index_of(G, add(G, x, s)) for s in reduced))
        for x in verts
    )
    return Graph(n=G.order, adjacency=adjacency, keys=verts)


def cartesian_k2(g: Graph) -> Graph:
    """
    Γ × K2：两层拷贝加上层间完美匹配

    顶点 (v, k) 的下标为 2v + k，与标签字典序一致。
    """
    edges = []
    for u, v in g.edges():
        for k in (0, 1):
            edges.append((2 * u + k, 2 * v + k))
    for v in range(g.n):
        edges.append((2 * v, 2 * v + 1))
    keys = None
    if g.keys is not None:
        keys = [_as_tuple(key) + (k,) for key in g.keys for k in (0, 1)]
    return Graph.from_edges(2 * g.n, edges, keys)


def _as_tuple(key: Hashable) -> tuple:
    return key if isinstance(key, tuple) else (key,)


def is_perfect_code(g: Graph, C: Iterable[int]) -> bool:
    """每个顶点的闭邻域恰好含 C 的一个元素"""
    members = set(C)
    if any(v < 0 or v >= g.n for v in members):
        raise ValueError(f"顶点集越界: {sorted(members)}")
    covered = 0
    for v in members:
        mask = g.closed_masks[v]
        if covered & mask:
            return False
        covered |= mask
    return covered == (1 << g.n) - 1


def is_independent(g: Graph, C: Iterable[int]) -> bool:
    members = sorted(set(C))
    member_set = set(members)
    return not any(u in member_set for v in members for u in g.adjacency[v])


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == g.n


def is_isomorphism(g1: Graph, g2: Graph, mapping: Sequence[int]) -> bool:
    """
    检查 mapping（g1 下标 -> g2 下标）是否为保邻接的双射

    边数相等时，单向保边即可推出双向。
    """
    if g1.n != g2.n or len(mapping) != g1.n:
        return False
    if len(set(mapping)) != g1.n or any(not 0 <= t < g2.n for t in mapping):
        return False
    if g1.edge_count != g2.edge_count:
        return False
    return all(g2.has_edge(mapping[u], mapping[v]) for u, v in g1.edges())


def to_networkx(g: Graph) -> nx.Graph:
    """转换为 networkx 图，节点即顶点下标"""
    result = nx.Graph()
    result.add_nodes_from(range(g.n))
    result.add_edges_from(g.edges())
    return result


def adjacency_spectrum(g: Graph) -> np.ndarray:
    """邻接矩阵的升序特征值，同构判定前的快速过滤"""
    matrix = np.zeros((g.n, g.n))
    for u, v in g.edges():
        matrix[u, v] = matrix[v, u] = 1.0
    return np.linalg.eigvalsh(matrix)


def translation_automorphisms_ok(G: GroupSpec, S: Sequence[Element]) -> bool:
    """Cay(G, S) 的每个平移 v -> v + g 都是自同构"""
    g = cayley(G, S)
    verts = elements(G)
    for shift in verts:
        mapping = [index_of(G, add(G, x, shift)) for x in verts]
        if not is_isomorphism(g, g, mapping):
            return False
    return True


def export(g: Graph, fmt: str = "edgelist") -> str:
    """
    导出为确定性文本

    Args:
        g: 图
        fmt: "edgelist"（每行 "u v"，u < v）或 "dot"

    Returns:
        文本
    """
    if fmt == "edgelist":
        return "".join(f"{u} {v}\n" for u, v in g.edges())
    if fmt == "dot":
        lines = ["graph G {"]
        if g.keys is not None:
            for v in range(g.n):
                lines.append(f'  {v} [label="{g.label(v)}"];')
        else:
            for v in range(g.n):
                lines.append(f"  {v};")
        for u, v in g.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"未知导出格式: {fmt}")
