"""
扫描模块
小阶群普查、码族扫描与预言机交叉验证
"""

from .census import count_involutions, factorizations, iter_connection_sets, iter_group_specs
from .harness import (
    SweepSummary,
    build_tasks,
    check_instance,
    format_summary,
    run_prop_sweep,
    run_sweep,
)

__all__ = [
    'factorizations',
    'iter_group_specs',
    'iter_connection_sets',
    'count_involutions',
    'SweepSummary',
    'build_tasks',
    'check_instance',
    'run_prop_sweep',
    'run_sweep',
    'format_summary',
]
