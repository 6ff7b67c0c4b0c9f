"""
工具模块
包含日志、异常、整数函数、配置验证和报告读写等通用工具
"""

from .errors import InternalAssertionError, PerfectCodeError
from .numtheory import INFINITY, alpha, lcm0, sigma2, tau

__all__ = [
    'PerfectCodeError',
    'InternalAssertionError',
    'INFINITY',
    'sigma2',
    'tau',
    'alpha',
    'lcm0',
]
