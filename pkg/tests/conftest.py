"""
测试公共夹具
"""

import os
import sys

import pytest

# 添加项目根目录到Python路径
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from groups.abelian import group  # noqa: E402


@pytest.fixture
def k6_instance():
    """Z6 上的 {1,5,2,4,3}，即 K6"""
    return group(6), [(1,), (5,), (2,), (4,), (3,)]


@pytest.fixture
def outside_instance():
    """Z6xZ2 上 s0 不在 ⟨s, s′⟩ 中的实例"""
    return group(6, 2), [(1, 0), (5, 0), (2, 0), (4, 0), (0, 1)]


@pytest.fixture
def half_turn_instance():
    """Z6xZ2 上 s0 等于半转对合的实例"""
    return group(6, 2), [(1, 0), (5, 0), (4, 1), (2, 1), (3, 1)]


@pytest.fixture
def no_code_instance():
    return group(12), [(1,), (11,), (2,), (10,), (6,)]


@pytest.fixture
def lexicographic_instance():
    """Z12xZ2 上的 C12[K2]：s0 在 ⟨s, s′⟩ 内部且 (m/2)s = (o(s′)/2)s′"""
    return group(12, 2), [(1, 0), (11, 0), (1, 1), (11, 1), (0, 1)]


@pytest.fixture
def inner_involution_instance():
    """Z6xZ4 上 s0 在 ⟨s, s′⟩ 内部、不等于任何具名对合的实例"""
    return group(6, 4), [(1, 1), (5, 3), (2, 1), (4, 3), (3, 0)]
