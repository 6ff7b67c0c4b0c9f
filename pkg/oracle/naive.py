#!/usr/bin/env python3
"""
朴素双重预言机：闭邻域矩阵上逐个检查固定大小的顶点子集
"""

from itertools import combinations
from typing import List

import numpy as np

from config.settings import settings
from graphs.graph import Graph, VertexSet


def closed_neighborhood_matrix(g: Graph) -> np.ndarray:
    """A[u, v] = 1 当且仅当 u ∈ N[v]"""
    matrix = np.eye(g.n, dtype=np.int8)
    for u, v in g.edges():
        matrix[u, v] = 1
        matrix[v, u] = 1
    return matrix


def naive_enumerate(g: Graph) -> List[VertexSet]:
    """
    枚举所有完美码

    正则图只检查大小为 n/(k+1) 的子集，非正则图检查全部大小。

    Raises:
        ValueError: 顶点数超过 NAIVE_ORACLE_MAX_VERTICES
    """
    if g.n > settings.NAIVE_ORACLE_MAX_VERTICES:
        raise ValueError(
            f"朴素枚举只用于不超过 {settings.NAIVE_ORACLE_MAX_VERTICES} 个顶点的图，收到 {g.n}"
        )
    matrix = closed_neighborhood_matrix(g)
    k = g.regular_degree()
    if k is not None:
        if g.n % (k + 1):
            return []
        sizes = [g.n // (k + 1)]
    else:
        sizes = range(1, g.n + 1)
    codes = []
    for size in sizes:
        for subset in combinations(range(g.n), size):
            if np.all(matrix[:, list(subset)].sum(axis=1) == 1):
                codes.append(tuple(subset))
    return sorted(codes)
