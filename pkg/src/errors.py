# -*- coding: utf-8 -*-
"""
异常定义
所有模块共用的异常类型
"""

from typing import Optional


class Sl5Error(Exception):
    """工作台异常基类"""


class CartanMatrixError(Sl5Error, ValueError):
    """Cartan矩阵不是有限型"""


class WeightError(Sl5Error, ValueError):
    """权重长度不符或不是支配权"""


class IntegralityError(Sl5Error, ArithmeticError):
    """Newton递推出现非整数系数"""


class CharacterError(Sl5Error):
    """权重多重集不是Weyl不变的"""


class SeriesError(Sl5Error, ValueError):
    """级数截断或常数项不合法"""


class GradingError(Sl5Error):
    """剥离得到负重数，不构成一致的超代数分级"""

    def __init__(self, level: int, message: Optional[str] = None):
        self.level = level
        super().__init__(message or f"not a consistent superalgebra grading at level {level}")


class PairingError(Sl5Error):
    """配对扩展的自洽性被破坏"""


class ComplexError(Sl5Error):
    """零模复形内部不一致（d²≠0、平移像不稳定或维数不符）"""


class ConstraintError(Sl5Error, ValueError):
    """E(5,10)元素不满足无散度或闭条件"""
