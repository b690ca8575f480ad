# -*- coding: utf-8 -*-
"""
具体校验项
每个校验项对应verify子命令的一行结果
"""

from typing import Any, Dict, List, Optional

from ..algebra.e510 import coadjoint_generator_spectrum
from ..algebra.koszul import (
    constrained_scalar_closed_form,
    constrained_scalar_series,
    enveloping_series,
    extend_levels_by_pairing,
    free_superalgebra_uea,
    grading_sign_report,
    minimal_orbit_series,
    on_shell_scalar_closed_form,
    on_shell_scalar_series,
    p4_non_containment_report,
    peel_levels,
    verify_free_generation,
)
from ..algebra.repring import parse_module
from ..algebra.repseries import inverse, series_identity_check
from ..models import CheckResult, IdentityReport
from ..superfields.superspace import superspace_operator_check
from .base_check import BaseCheck


def _from_identity(name: str, report: IdentityReport) -> CheckResult:
    failures = [f"t^{m.degree}: expected {m.expected}, got {m.actual}" for m in report.mismatches]
    failures.extend(report.details.get('failures', []))
    summary = "identity holds" if report.passed else f"{len(failures)} mismatches"
    return CheckResult(name=name, passed=report.passed, summary=summary, failures=failures,
                       data=report.model_dump())


class FreeGenerationCheck(BaseCheck):
    """B(E4)第3层以上由E(5,10)余伴随谱自由生成"""

    def __init__(self, config: Dict[str, Any], dependencies: Optional[List[str]] = None):
        super().__init__('free_generation', config, dependencies)

    def run(self) -> CheckResult:
        report = verify_free_generation(self.max_level, self.config.get('inject_fault_level'))
        failures = [f"level {level} differs" for level in report.mismatched_levels()]
        return CheckResult(name=self.name, passed=report.passed,
                           summary=f"levels 3..{self.max_level} compared", failures=failures,
                           data=report.model_dump())


class SeriesIdentitiesCheck(BaseCheck):
    """约束标量场的两个因子分解恒等式，以及剥离后的往返重构"""

    def __init__(self, config: Dict[str, Any], dependencies: Optional[List[str]] = None):
        super().__init__('series_identities', config, dependencies)

    def run(self) -> CheckResult:
        n = self.max_level
        reports = [
            series_identity_check(constrained_scalar_series(n), constrained_scalar_closed_form(n),
                                  'constrained_scalar'),
            series_identity_check(on_shell_scalar_series(n), on_shell_scalar_closed_form(n),
                                  'on_shell_scalar'),
            series_identity_check(enveloping_series(peel_levels(minimal_orbit_series(n)), n),
                                  inverse(minimal_orbit_series(n)), 'peeling_round_trip'),
        ]
        failures = [f"{r.name} t^{m.degree}: expected {m.expected}, got {m.actual}"
                    for r in reports for m in r.mismatches]
        passed = all(r.passed for r in reports)
        return CheckResult(name=self.name, passed=passed,
                           summary=f"{sum(r.passed for r in reports)}/{len(reports)} identities hold to t^{n}",
                           failures=failures, data={r.name: r.model_dump() for r in reports})


class PairingCheck(BaseCheck):
    """R_{5−p} = conj(R_p)，并核对第−1层与第0层"""

    EXPECTED = {-1: "(2000)+(0011)", 0: "(1001)"}

    def __init__(self, config: Dict[str, Any], dependencies: Optional[List[str]] = None):
        super().__init__('pairing', config, dependencies)

    def run(self) -> CheckResult:
        n = max(self.max_level, 6)
        paired = extend_levels_by_pairing(peel_levels(minimal_orbit_series(n)))
        failures = []
        for level, text in self.EXPECTED.items():
            expected = parse_module(text)
            if paired.module(level) != expected:
                failures.append(f"level {level}: expected {expected}, got {paired.module(level)}")
        twice = extend_levels_by_pairing(paired)
        if twice.levels != paired.levels:
            failures.append("pairing extension is not idempotent")
        return CheckResult(name=self.name, passed=not failures,
                           summary=f"levels {min(paired.levels)}..{max(paired.levels)} consistent"
                           if not failures else "pairing mismatch",
                           failures=failures,
                           data={str(p): str(r) for p, r in paired.sorted_levels() if p <= 0})


class GradingSignCheck(BaseCheck):
    """(1−P)^{-1} 在第p层的系数全部带符号 (−1)^p"""

    def __init__(self, config: Dict[str, Any], dependencies: Optional[List[str]] = None):
        super().__init__('grading_sign', config, dependencies)

    def run(self) -> CheckResult:
        uea = free_superalgebra_uea(coadjoint_generator_spectrum(max(self.max_level, 3)), self.max_level)
        return _from_identity(self.name, grading_sign_report(uea))


class P4NonContainmentCheck(BaseCheck):
    """受限代数中第2（或3）层以上构成理想所需的两个张量积排除"""

    def __init__(self, config: Dict[str, Any], dependencies: Optional[List[str]] = None):
        super().__init__('p4_non_containment', config, dependencies)

    def run(self) -> CheckResult:
        return _from_identity(self.name, p4_non_containment_report())


class SuperspaceOperatorsCheck(BaseCheck):
    """Q、D的反对易关系与挠率"""

    def __init__(self, config: Dict[str, Any], dependencies: Optional[List[str]] = None):
        super().__init__('superspace_operators', config, dependencies)

    def run(self) -> CheckResult:
        return _from_identity(self.name, superspace_operator_check(self.config.get('theta_subsets')))


CHECK_CLASSES = {
    'free_generation': FreeGenerationCheck,
    'series_identities': SeriesIdentitiesCheck,
    'pairing': PairingCheck,
    'grading_sign': GradingSignCheck,
    'p4_non_containment': P4NonContainmentCheck,
    'superspace_operators': SuperspaceOperatorsCheck,
}


def create_checks(config: Dict[str, Any], dependencies: Optional[Dict[str, List[str]]] = None,
                  enabled: Optional[List[str]] = None) -> Dict[str, BaseCheck]:
    """创建所有（或指定的）校验项"""
    dependencies = dependencies or {}
    names = enabled if enabled is not None else list(CHECK_CLASSES)
    checks = {}
    for name in names:
        if name not in CHECK_CLASSES:
            raise ValueError(f"unknown check {name!r}")
        checks[name] = CHECK_CLASSES[name](config, dependencies.get(name, []))
    return checks
