#!/usr/bin/env python3
"""
扫描报告读写工具类
"""

import json
import os
from typing import Dict, List, Optional

from loguru import logger


class ReportUtils:
    """报告工具类"""
    
    @staticmethod
    def save_json_report(report: Dict, report_file: str, description: str = "扫描报告") -> bool:
        """
        保存JSON报告到文件
        
        Args:
            report: 要保存的数据
            report_file: 报告文件路径
            description: 数据描述
            
        Returns:
            是否保存成功
        """
        try:
            report_dir = os.path.dirname(report_file)
            if report_dir:
                os.makedirs(report_dir, exist_ok=True)
            with open(report_file, 'w', encoding='utf-8') as f:
                json.dump(report, f, ensure_ascii=False, indent=2)
            
            logger.info(f"💾 {description}已保存: {report_file}")
            return True
            
        except Exception as e:
            logger.warning(f"⚠️ 保存{description}失败: {e}")
            return False
    
    @staticmethod
    def load_json_report(report_file: str, description: str = "扫描报告") -> Optional[Dict]:
        """
        从文件加载JSON报告
        
        Returns:
            报告数据或None
        """
        try:
            if os.path.exists(report_file):
                with open(report_file, 'r', encoding='utf-8') as f:
                    data = json.load(f)
                logger.info(f"📋 加载了{description}: {report_file}")
                return data
            logger.info(f"📋 {description}文件不存在: {report_file}")
            return None
                
        except Exception as e:
            logger.warning(f"⚠️ 读取{description}失败: {e}")
            return None
    
    @staticmethod
    def save_csv_table(rows: List[Dict], csv_file: str, description: str = "实例明细") -> bool:
        """
        把每个实例一行的明细写成CSV
        
        Args:
            rows: 行字典列表（列顺序取第一行的键顺序）
            csv_file: CSV文件路径
            description: 数据描述
            
        Returns:
            是否保存成功
        """
        try:
            import pandas as pd
            
            csv_dir = os.path.dirname(csv_file)
            if csv_dir:
                os.makedirs(csv_dir, exist_ok=True)
            df = pd.DataFrame(rows)
            df.to_csv(csv_file, index=False, encoding='utf-8')
            logger.info(f"💾 {description}已保存: {csv_file}（{len(df)} 行）")
            return True
        
        except Exception as e:
            logger.warning(f"⚠️ 保存{description}失败: {e}")
            return False
    
    @staticmethod
    def resolve_report_path(report_file: str, report_dir: str) -> str:
        """只给文件名时放到报告目录下，带目录的路径原样返回"""
        if os.path.dirname(report_file):
            return report_file
        return os.path.join(report_dir, report_file)

    @staticmethod
    def csv_path_for(report_file: str) -> str:
        """JSON报告旁边的同名CSV路径"""
        root, _ = os.path.splitext(report_file)
        return root + ".csv"
