"""
命令行模块
"""

from .commands import InstanceDescriptor, build_parser, run

__all__ = ['run', 'build_parser', 'InstanceDescriptor']
