"""
图模块
简单图、Cayley 图与网格构造族
"""

from .graph import (
    Graph,
    VertexSet,
    adjacency_spectrum,
    cartesian_k2,
    cayley,
    export,
    is_connected,
    is_independent,
    is_isomorphism,
    is_perfect_code,
    to_networkx,
    translation_automorphisms_ok,
    vertex_set,
)

__all__ = [
    'Graph',
    'VertexSet',
    'vertex_set',
    'cayley',
    'cartesian_k2',
    'is_perfect_code',
    'is_independent',
    'is_connected',
    'is_isomorphism',
    'translation_automorphisms_ok',
    'export',
    'to_networkx',
    'adjacency_spectrum',
]
