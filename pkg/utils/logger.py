#!/usr/bin/env python3
"""
统一日志工具
"""

import os
import sys
from typing import Optional

from loguru import logger

CONSOLE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"


def setup_logging(level: str = "INFO", log_file: Optional[str] = None) -> None:
    """
    设置统一的日志器
    
    控制台输出写到 stderr，stdout 只留给命令的机器可读输出。
    
    Args:
        level: 日志级别
        log_file: 日志文件路径（可选，为空时不写文件）
    """
    logger.remove()  # 移除默认处理器
    
    # 控制台处理器
    logger.add(sys.stderr, format=CONSOLE_FORMAT, level=level.upper())
    
    # 文件处理器（如果指定了日志文件）
    if log_file:
        try:
            log_dir = os.path.dirname(log_file)
            if log_dir:
                os.makedirs(log_dir, exist_ok=True)
            logger.add(
                log_file,
                format=FILE_FORMAT,
                level=level.upper(),
                rotation="1 day",
                retention="30 days",
                encoding="utf-8",
            )
        except Exception as e:
            logger.warning(f"无法创建文件日志处理器: {e}")


# 预定义的日志消息模板
class LogMessages:
    """日志消息模板"""
    
    @staticmethod
    def command_start(command: str) -> str:
        return f"开始执行命令: {command}"
    
    @staticmethod
    def command_failed(command: str, error: str) -> str:
        return f"命令失败: {command}，错误: {error}"
    
    @staticmethod
    def sweep_start(max_order: int, instance_count: int, workers: int) -> str:
        return f"🚀 开始验收扫描: 最大群阶 {max_order}，共 {instance_count} 个实例，{workers} 个工作进程"
    
    @staticmethod
    def sweep_progress(done: int, total: int) -> str:
        return f"📊 扫描进度: {done}/{total}"
    
    @staticmethod
    def sweep_complete(passed: bool, seconds: float) -> str:
        verdict = "✅ 通过" if passed else "❌ 失败"
        return f"扫描完成: {verdict}，耗时 {seconds:.1f} 秒"
    
    @staticmethod
    def mismatch(instance: str, detail: str) -> str:
        return f"❌ 反例实例 {instance}: {detail}"
    
    @staticmethod
    def both_signs_valid(instance: str) -> str:
        return f"⚠️ 实例 {instance} 的符号集 I = {{-1, 1}}，记录备查"
    
    @staticmethod
    def parametric_disagreement(prop: str, params: str) -> str:
        return f"⚠️ 码族 {prop} 参数 {params}: 参数化集合与同余刻画不一致"
    
    @staticmethod
    def not_integral(m: int, l: int, h: int) -> str:
        return f"⚠️ 参数 ({m},{l},{h}): τ(h,l) 不整除 h，φ 不可用，直接在网格图上检验"
    
    @staticmethod
    def self_verification_failed(what: str) -> str:
        return f"❌ 自检失败: {what}"
