"""
异常定义

用户输入类错误统一继承 PerfectCodeError（命令行退出码 1），
内部自检失败使用 InternalAssertionError（命令行退出码 2）。
"""

from typing import Optional


class PerfectCodeError(ValueError):
    """所有输入/参数错误的基类"""


class ParseError(PerfectCodeError):
    """群或元素字面量解析失败"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (位置 {position})"
        super().__init__(message)


class DimensionMismatch(PerfectCodeError):
    """元素维数与群的循环因子个数不一致"""


class InvalidConnectionSet(PerfectCodeError):
    """连接集不满足逆封闭/不含单位元/元素互异"""


class DegenerateParameters(PerfectCodeError):
    """构造参数退化：出现自环、重边或正则度不符"""


class NotIntegral(PerfectCodeError):
    """φ 映射或标准形式坐标不是整数"""


class HypothesisViolation(PerfectCodeError):
    """码族的前提条件不成立"""


class InvalidInvolution(PerfectCodeError):
    """给定的 s0 不是对合"""


class NotQuintic(PerfectCodeError):
    """连接集不是 5 个互异元素"""


class NotInverseClosed(PerfectCodeError):
    """连接集不是逆封闭的"""


class NotGenerating(PerfectCodeError):
    """连接集不生成整个群（Cayley 图不连通）"""


class ContainsIdentity(PerfectCodeError):
    """连接集包含单位元"""


class NotAPerfectCode(PerfectCodeError):
    """给定顶点集不是完美码"""


class InternalAssertionError(RuntimeError):
    """内部自检失败（例如枚举结果未通过完美码验证）"""


class EnumerationTooLarge(PerfectCodeError):
    """陪集个数超过配置上限，j 向量过多"""


class UsageError(PerfectCodeError):
    """命令行参数用法错误"""
