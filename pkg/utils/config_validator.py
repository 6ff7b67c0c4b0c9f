#!/usr/bin/env python3
"""
配置验证工具
"""

from typing import Dict, List, Tuple

from config.settings import settings

VALID_LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")
VALID_EXECUTORS = ("process", "thread")


class ConfigValidator:
    """配置验证器"""
    
    @staticmethod
    def validate_sweep_config() -> Tuple[bool, List[str]]:
        """
        验证验收扫描相关配置
        
        Returns:
            (是否有效, 错误消息列表)
        """
        errors = []
        
        # 验证最大群阶
        max_order = settings.SWEEP_MAX_ORDER
        if not isinstance(max_order, int):
            errors.append("最大群阶必须是整数")
        elif max_order < 2:
            errors.append("最大群阶必须至少为2")
        elif max_order > 96:
            errors.append("最大群阶不应超过96，扫描时间会过长")
        
        # 验证工作进程数
        workers = settings.SWEEP_WORKERS
        if not isinstance(workers, int):
            errors.append("工作进程数必须是整数")
        elif workers <= 0:
            errors.append("工作进程数必须大于0")
        elif workers > 64:
            errors.append("工作进程数不应超过64")
        
        # 验证执行器类型
        if settings.SWEEP_EXECUTOR not in VALID_EXECUTORS:
            errors.append(f"执行器类型必须是 {'/'.join(VALID_EXECUTORS)} 之一")
        
        # 验证任务块大小
        chunk_size = settings.SWEEP_CHUNK_SIZE
        if not isinstance(chunk_size, int):
            errors.append("任务块大小必须是整数")
        elif chunk_size <= 0:
            errors.append("任务块大小必须大于0")
        
        # 验证码族扫描范围
        m_values = settings.PROP_SWEEP_M_VALUES
        if not m_values:
            errors.append("码族扫描的 m 取值列表不能为空")
        elif any((not isinstance(m, int)) or m <= 0 or m % 6 != 0 for m in m_values):
            errors.append("码族扫描的 m 取值必须是6的正倍数")
        
        max_l = settings.PROP_SWEEP_MAX_L
        if not isinstance(max_l, int):
            errors.append("码族扫描的最大 l 必须是整数")
        elif max_l < 1:
            errors.append("码族扫描的最大 l 必须至少为1")
        
        return len(errors) == 0, errors
    
    @staticmethod
    def validate_oracle_config() -> Tuple[bool, List[str]]:
        """
        验证预言机配置
        
        Returns:
            (是否有效, 错误消息列表)
        """
        errors = []
        
        naive_max = settings.NAIVE_ORACLE_MAX_VERTICES
        if not isinstance(naive_max, int):
            errors.append("朴素预言机顶点上限必须是整数")
        elif naive_max <= 0:
            errors.append("朴素预言机顶点上限必须大于0")
        elif naive_max > 30:
            errors.append("朴素预言机顶点上限不应超过30，子集枚举会过慢")
        
        max_cosets = settings.ENUMERATION_MAX_COSETS
        if not isinstance(max_cosets, int):
            errors.append("陪集个数上限必须是整数")
        elif max_cosets <= 0:
            errors.append("陪集个数上限必须大于0")
        elif max_cosets > 24:
            errors.append("陪集个数上限不应超过24（j向量个数为 2^(N-1)）")
        
        return len(errors) == 0, errors
    
    @staticmethod
    def validate_logging_config() -> Tuple[bool, List[str]]:
        """
        验证日志配置
        
        Returns:
            (是否有效, 错误消息列表)
        """
        errors = []
        
        level = settings.LOG_LEVEL
        if not isinstance(level, str):
            errors.append("日志级别必须是字符串")
        elif level.upper() not in VALID_LOG_LEVELS:
            errors.append(f"日志级别必须是 {'/'.join(VALID_LOG_LEVELS)} 之一")
        
        if not isinstance(settings.LOG_FILE, str):
            errors.append("日志文件路径必须是字符串")
        
        if not isinstance(settings.REPORT_DIR, str) or not settings.REPORT_DIR:
            errors.append("报告目录必须是非空字符串")
        
        return len(errors) == 0, errors
    
    @staticmethod
    def validate_all_configs() -> Tuple[bool, Dict[str, List[str]]]:
        """
        验证所有配置
        
        Returns:
            (是否全部有效, 各配置类别的错误消息)
        """
        results = {}
        
        # 验证各类配置
        results['sweep'] = ConfigValidator.validate_sweep_config()[1]
        results['oracle'] = ConfigValidator.validate_oracle_config()[1]
        results['logging'] = ConfigValidator.validate_logging_config()[1]
        
        # 检查是否全部有效
        all_valid = all(len(errors) == 0 for errors in results.values())
        
        return all_valid, results
    
    @staticmethod
    def print_config_summary():
        """打印配置摘要（输出到标准错误，标准输出留给命令结果）"""
        import sys
        out = sys.stderr
        print("📋 配置验证摘要", file=out)
        print("=" * 50, file=out)
        
        is_valid, errors_by_category = ConfigValidator.validate_all_configs()
        
        if is_valid:
            print("✅ 所有配置验证通过", file=out)
        else:
            print("❌ 发现配置问题:", file=out)
            for category, errors in errors_by_category.items():
                if errors:
                    print(f"\n🔴 {category.upper()} 配置:", file=out)
                    for error in errors:
                        print(f"   • {error}", file=out)
        
        print("\n📊 当前配置值:", file=out)
        print(f"   最大群阶: {settings.SWEEP_MAX_ORDER}", file=out)
        print(f"   工作进程数: {settings.SWEEP_WORKERS} ({settings.SWEEP_EXECUTOR})", file=out)
        print(f"   任务块大小: {settings.SWEEP_CHUNK_SIZE}", file=out)
        print(f"   码族扫描 m: {settings.PROP_SWEEP_M_VALUES}，l ≤ {settings.PROP_SWEEP_MAX_L}", file=out)
        print(f"   朴素预言机顶点上限: {settings.NAIVE_ORACLE_MAX_VERTICES}", file=out)
        print(f"   日志级别: {settings.LOG_LEVEL}", file=out)
        print(f"   日志文件: {settings.LOG_FILE or '未启用'}", file=out)
        
        return is_valid
