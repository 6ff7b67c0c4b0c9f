"""
预言机模块
独立于分类判定的完美码搜索，作为所有验收检查的基准
"""

from .exact_cover import CoverSearch, enumerate_perfect_codes, find_perfect_code
from .naive import naive_enumerate

__all__ = [
    'CoverSearch',
    'find_perfect_code',
    'enumerate_perfect_codes',
    'naive_enumerate',
]
