#!/usr/bin/env python3
"""
精确覆盖回溯：用闭邻域划分顶点集来寻找/枚举完美码

每个节点选择可选候选最少的未覆盖顶点分支（同数取下标最小），
候选 c 可选当且仅当 N[c] 完全落在未覆盖集合内。
"""

from typing import List, Optional

from loguru import logger

from graphs.graph import Graph, VertexSet, is_perfect_code
from utils.errors import InternalAssertionError


class CoverSearch:
    """
    一次搜索的私有状态

    Attributes:
        graph: 目标图
        masks: 每个顶点闭邻域的位集
        full: 全体顶点的位集
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.masks = graph.closed_masks
        self.full = (1 << graph.n) - 1
        self.nodes = 0

    def counting_reject(self) -> bool:
        """正则图上 (k+1) ∤ n 时不可能有完美码"""
        k = self.graph.regular_degree()
        return k is not None and self.graph.n % (k + 1) != 0

    def _admissible(self, v: int, uncovered: int) -> List[int]:
        masks = self.masks
        return [c for c in (v,) + self.graph.adjacency[v] if masks[c] & ~uncovered == 0]

    def _pick(self, uncovered: int):
        best_v, best = -1, None
        rest = uncovered
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cands = self._admissible(v, uncovered)
            if best is None or len(cands) < len(best):
                best_v, best = v, cands
                if not cands:
                    break
        return best_v, best

    def search(self, uncovered: int, chosen: List[int], results: List[VertexSet], first_only: bool) -> bool:
        """深度优先；first_only 时找到一个即返回 True"""
        self.nodes += 1
        if uncovered == 0:
            results.append(tuple(sorted(chosen)))
            return first_only
        _, cands = self._pick(uncovered)
        for c in sorted(cands):
            chosen.append(c)
            if self.search(uncovered & ~self.masks[c], chosen, results, first_only):
                chosen.pop()
                return True
            chosen.pop()
        return False

    def run(self, containing: Optional[int] = None, first_only: bool = False) -> List[VertexSet]:
        if self.counting_reject():
            return []
        uncovered, chosen = self.full, []
        if containing is not None:
            if not 0 <= containing < self.graph.n:
                raise ValueError(f"顶点 {containing} 越界（共 {self.graph.n} 个顶点）")
            uncovered &= ~self.masks[containing]
            chosen.append(containing)
        results: List[VertexSet] = []
        self.search(uncovered, chosen, results, first_only)
        for code in results:
            if not is_perfect_code(self.graph, code):
                raise InternalAssertionError(f"预言机输出 {list(code)} 不是完美码")
        logger.debug(f"精确覆盖搜索: {self.graph.n} 个顶点，{self.nodes} 个节点，{len(results)} 个解")
        return sorted(results)


def find_perfect_code(g: Graph) -> Optional[VertexSet]:
    """返回某个完美码，不存在时返回 None"""
    found = CoverSearch(g).run(first_only=True)
    return found[0] if found else None


def enumerate_perfect_codes(g: Graph, containing: Optional[int] = None) -> List[VertexSet]:
    """
    枚举全部完美码（可限定包含某个顶点）

    Args:
        g: 简单图
        containing: 可选，必须包含的顶点下标

    Returns:
        规范排序的完美码列表
    """
    return CoverSearch(g).run(containing=containing)
