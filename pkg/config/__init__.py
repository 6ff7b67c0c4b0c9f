"""
配置模块
包含日志、扫描范围、预言机阈值等配置
"""

from .settings import settings

__all__ = ['settings'] 
