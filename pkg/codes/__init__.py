"""
码族模块
三个显式完美码族与枚举用的陪集生成
"""

from .base import BaseCodeFamily, CodeFamilyParams
from .cosets import d_coset
from .factory import CodeFamilyFactory
from .families import (
    ProductCodeFamily,
    AntipodalCodeFamily,
    HalfTurnCodeFamily,
    code_prop23,
    code_prop27,
    code_prop210,
)

__all__ = [
    'CodeFamilyParams',
    'BaseCodeFamily',
    'ProductCodeFamily',
    'AntipodalCodeFamily',
    'HalfTurnCodeFamily',
    'CodeFamilyFactory',
    'code_prop23',
    'code_prop27',
    'code_prop210',
    'd_coset',
]
