from typing import List
from pydantic_settings import BaseSettings

class Settings(BaseSettings):
    """系统配置"""
    
    # 日志配置
    LOG_LEVEL: str = "INFO"
    LOG_FILE: str = "logs/perfect_codes.log"   # 为空字符串时不写文件
    
    # 验收扫描配置
    SWEEP_MAX_ORDER: int = 24              # 默认扫描的最大群阶
    SWEEP_WORKERS: int = 4                 # 并行工作进程数
    SWEEP_EXECUTOR: str = "process"        # process 或 thread
    SWEEP_CHUNK_SIZE: int = 8              # 每个任务块包含的实例数
    
    # 码族扫描范围
    PROP_SWEEP_M_VALUES: List[int] = [6, 12, 18]
    PROP_SWEEP_MAX_L: int = 6
    
    # 预言机配置
    NAIVE_ORACLE_MAX_VERTICES: int = 18    # 朴素子集枚举的顶点数上限
    ENUMERATION_MAX_COSETS: int = 20       # 含单位元完美码枚举时的陪集个数上限（2^(N-1)个j向量）
    
    # 报告输出
    REPORT_DIR: str = "reports"
    
    class Config:
        env_file = ".env"

# 创建全局配置实例
settings = Settings() 
