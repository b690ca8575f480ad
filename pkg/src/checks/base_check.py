# -*- coding: utf-8 -*-
"""
校验项基类
"""

import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from ..errors import Sl5Error
from ..models import CheckResult


class BaseCheck(ABC):
    """校验项基类，子类实现run()"""

    def __init__(self, name: str, config: Dict[str, Any], dependencies: Optional[List[str]] = None):
        self.name = name
        self.config = config
        self.dependencies = list(dependencies or [])
        self.logger = logging.getLogger(f"check.{name}")

    @property
    def max_level(self) -> int:
        return int(self.config.get('max_level', 10))

    def execute(self) -> CheckResult:
        """运行校验，数学层抛出的异常转换为失败结果"""
        self.logger.info(f"Check {self.name} started")
        try:
            result = self.run()
        except Sl5Error as e:
            self.logger.error(f"Check {self.name} raised: {e}")
            return CheckResult(name=self.name, passed=False, summary=type(e).__name__, failures=[str(e)])
        status = "passed" if result.passed else "failed"
        self.logger.info(f"Check {self.name} {status}: {result.summary}")
        return result

    @abstractmethod
    def run(self) -> CheckResult:
        """执行具体校验，子类需要实现"""
        pass
