# -*- coding: utf-8 -*-
"""
校验套件
按依赖关系分批，每批内的校验项在线程池中并行执行
"""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List

from ..models import ASSUMPTION, CheckResult, VerifyReport
from .base_check import BaseCheck


class VerificationSuite:
    """协调各校验项，汇总为VerifyReport"""

    def __init__(self, name: str, config: Dict[str, Any], checks: Dict[str, BaseCheck], workers: int = 4):
        self.name = name
        self.config = config
        self.checks = dict(checks)
        self.workers = max(1, workers)
        self.logger = logging.getLogger('verification_suite')
        self.status: Dict[str, str] = {name: 'pending' for name in self.checks}

    def add_check(self, check: BaseCheck):
        self.checks[check.name] = check
        self.status[check.name] = 'pending'
        self.logger.info(f"Added check: {check.name}")

    def determine_run_order(self) -> List[List[str]]:
        """按依赖关系分批；第一批是无依赖的校验项"""
        remaining = set(self.checks)
        batches: List[List[str]] = []
        while remaining:
            completed = set(self.checks) - remaining
            batch = sorted(name for name in remaining
                           if set(self.checks[name].dependencies) & set(self.checks) <= completed)
            if not batch:
                # 循环依赖：剩余的全部放进同一批
                self.logger.warning(f"Circular check dependencies among {sorted(remaining)}")
                batch = sorted(remaining)
            remaining -= set(batch)
            batches.append(batch)
        return batches

    async def _run_check(self, executor: ThreadPoolExecutor, name: str) -> CheckResult:
        self.status[name] = 'running'
        loop = asyncio.get_running_loop()
        try:
            result = await loop.run_in_executor(executor, self.checks[name].execute)
        except Exception as e:
            self.logger.error(f"Check {name} crashed: {e}")
            result = CheckResult(name=name, passed=False, summary="crashed", failures=[str(e)])
        self.status[name] = 'passed' if result.passed else 'failed'
        return result

    async def run(self) -> VerifyReport:
        self.logger.info(f"Running {len(self.checks)} checks (assuming {ASSUMPTION})")
        results: List[CheckResult] = []
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            for batch in self.determine_run_order():
                results.extend(await asyncio.gather(*(self._run_check(executor, name) for name in batch)))
        results.sort(key=lambda r: r.name)
        report = VerifyReport(max_level=int(self.config.get('max_level', 10)),
                              passed=all(r.passed for r in results), items=results)
        failed = [r.name for r in results if not r.passed]
        if failed:
            self.logger.error(f"Failed checks: {', '.join(failed)}")
        else:
            self.logger.info("All checks passed")
        return report
