# -*- coding: utf-8 -*-
"""
极小轨道Hilbert级数与超代数分级剥离
包括自由超代数包络级数、自由生成定理校验以及层级配对扩展
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..errors import GradingError, PairingError, SeriesError
from ..models import (
    ASSUMPTION,
    DegreeMismatch,
    FreeGenerationReport,
    IdentityReport,
    LevelEntry,
    terms_of,
)
from .liecore import RootSystem
from .repring import VirtualModule, sl5
from .repseries import DEFAULT_TRUNCATION, RepSeries, geometric_factor, inverse, sigma_series

logger = logging.getLogger('koszul')


def parity_of(level: int) -> str:
    return 'odd' if level % 2 else 'even'


@dataclass(frozen=True)
class LevelDecomposition:
    """层级 p -> R_p，统计性由 p 的奇偶决定"""
    levels: Dict[int, VirtualModule]
    provenance: str
    truncation: int

    def module(self, level: int) -> VirtualModule:
        value = self.levels.get(level)
        if value is None:
            return VirtualModule.zero(sl5())
        return value

    def parity(self, level: int) -> str:
        return parity_of(level)

    def sorted_levels(self) -> List[Tuple[int, VirtualModule]]:
        return sorted(self.levels.items())


@dataclass(frozen=True)
class GeneratorSpectrum:
    """(层级, 模, 奇偶) 列表"""
    entries: Tuple[Tuple[int, VirtualModule, str], ...] = field(default_factory=tuple)

    def __iter__(self):
        return iter(self.entries)


def minimal_orbit_series(truncation: int = DEFAULT_TRUNCATION,
                         root_system: Optional[RootSystem] = None) -> RepSeries:
    """Z_λ(t) = ⊕_p (00p0) t^p"""
    if truncation < 0:
        raise SeriesError("truncation must be non-negative")
    root_system = root_system or sl5()
    return RepSeries(root_system, truncation, {
        p: VirtualModule.irreducible(root_system, (0, 0, p, 0)) for p in range(truncation + 1)
    })


def constrained_scalar_series(truncation: int = DEFAULT_TRUNCATION) -> RepSeries:
    """Z_λ ⊗ (1−t)^{(0010)}"""
    root_system = sl5()
    theta = VirtualModule.irreducible(root_system, (0, 0, 1, 0))
    return minimal_orbit_series(truncation, root_system) * geometric_factor(theta, 1, 'plus', truncation)


def constrained_scalar_closed_form(truncation: int = DEFAULT_TRUNCATION) -> RepSeries:
    """(0000) ⊖ (1000)t² ⊕ (0001)t³ ⊖ (0000)t⁵"""
    root_system = sl5()

    def irreducible(labels):
        return VirtualModule.irreducible(root_system, labels)

    return RepSeries(root_system, truncation, {
        0: irreducible((0, 0, 0, 0)),
        2: -irreducible((1, 0, 0, 0)),
        3: irreducible((0, 0, 0, 1)),
        5: -irreducible((0, 0, 0, 0)),
    })


def on_shell_scalar_series(truncation: int = DEFAULT_TRUNCATION) -> RepSeries:
    """从 Z_λ ⊗ (1−t)^{(0010)} 中除去 (1−t²)^{(1000)}"""
    vector = VirtualModule.irreducible(sl5(), (1, 0, 0, 0))
    return constrained_scalar_series(truncation) * geometric_factor(vector, 2, 'minus', truncation)


def on_shell_scalar_closed_form(truncation: int = DEFAULT_TRUNCATION) -> RepSeries:
    """(0000) ⊕ ⊕_i (i001)t^{3+2i} ⊖ ⊕_i (i100)t^{4+2i}，即 1 − P(t)"""
    root_system = sl5()
    coefficients = {0: VirtualModule.trivial(root_system)}
    for i in range(truncation):
        if 3 + 2 * i <= truncation:
            coefficients[3 + 2 * i] = VirtualModule.irreducible(root_system, (i, 0, 0, 1))
        if 4 + 2 * i <= truncation:
            coefficients[4 + 2 * i] = -VirtualModule.irreducible(root_system, (i, 1, 0, 0))
    return RepSeries(root_system, truncation, coefficients)


def _peel(series: RepSeries, truncation: int, level_sign, provenance: str) -> LevelDecomposition:
    trivial = VirtualModule.trivial(series.root_system)
    if series.coefficient(0) != trivial:
        raise SeriesError(f"series to peel has constant term {series.coefficient(0)}")
    residual = series.truncate(truncation)
    levels: Dict[int, VirtualModule] = {}
    for p in range(1, truncation + 1):
        exponent = residual.coefficient(p)
        if exponent.is_zero:
            continue
        level_module = exponent.scale(level_sign(p))
        if not level_module.is_nonnegative:
            logger.error(f"Negative multiplicity at level {p}: {level_module}")
            raise GradingError(p)
        levels[p] = level_module
        logger.debug(f"Level {p}: {level_module}")
        if p < truncation:
            residual = residual * sigma_series(-exponent, p, truncation)
    return LevelDecomposition(levels=levels, provenance=provenance, truncation=truncation)


def peel_levels(z: RepSeries, truncation: Optional[int] = None) -> LevelDecomposition:
    """
    由 z ⊗ Π_p (1−t^p)^{−(−1)^p R_p} = 1 逐级求 R_p

    剥离在z一侧进行：z = Π_p σ_{t^p}(E_p)，E_p = (−1)^{p+1} R_p，
    每一步乘以 σ_{t^p}(−E_p) 消去 t^p 项
    """
    truncation = z.truncation if truncation is None else truncation
    return _peel(z, truncation, lambda p: 1 if p % 2 else -1, 'peeled')


def peel_enveloping_series(u: RepSeries, truncation: Optional[int] = None) -> LevelDecomposition:
    """直接剥离包络代数级数 u = Π_p (1−t^p)^{−(−1)^p R_p}"""
    truncation = u.truncation if truncation is None else truncation
    return _peel(u, truncation, lambda p: -1 if p % 2 else 1, 'free')


def enveloping_series(levels: LevelDecomposition, truncation: int) -> RepSeries:
    """Π_p (1−t^p)^{−(−1)^p R_p}"""
    root_system = sl5()
    product = RepSeries.unit(root_system, truncation)
    for p, r in levels.sorted_levels():
        if 1 <= p <= truncation:
            product = product * geometric_factor(r, p, 'minus' if p % 2 == 0 else 'plus', truncation)
    return product


def free_superalgebra_uea(gen: GeneratorSpectrum, truncation: int = DEFAULT_TRUNCATION) -> RepSeries:
    """(1 − P(t))^{-1}，奇生成元在P中带负号"""
    root_system = sl5()
    generators: Dict[int, VirtualModule] = {}
    for level, value, parity in gen:
        if level < 1:
            raise SeriesError(f"generator at level {level}: the free algebra would not be locally finite")
        signed = -value if parity == 'odd' else value
        generators[level] = generators.get(level, VirtualModule.zero(root_system)) + signed
    p_series = RepSeries(root_system, truncation, generators)
    return inverse(RepSeries.unit(root_system, truncation) - p_series)


def grading_sign_report(uea: RepSeries) -> IdentityReport:
    """每个 t^p 系数的全部重数符号都应为 (−1)^p"""
    mismatches = []
    for p in range(1, uea.truncation + 1):
        coefficient = uea.coefficient(p)
        expected = -1 if p % 2 else 1
        if any(m * expected < 0 for _, m in coefficient.items()):
            mismatches.append(DegreeMismatch(
                degree=p,
                expected=f"all multiplicities of sign {expected:+d}",
                actual=str(coefficient)))
    return IdentityReport(name='grading_sign', truncation=uea.truncation,
                          passed=not mismatches, mismatches=mismatches)


def p4_non_containment_report() -> IdentityReport:
    """(2000)⊗(1000) 不含 (0010)，(0011)⊗(0001) 不含 (1000)"""
    root_system = sl5()
    cases = [((2, 0, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0)),
             ((0, 0, 1, 1), (0, 0, 0, 1), (1, 0, 0, 0))]
    mismatches = []
    details = {}
    for left, right, excluded in cases:
        product = VirtualModule.irreducible(root_system, left) * VirtualModule.irreducible(root_system, right)
        key = f"{VirtualModule.irreducible(root_system, left)}x{VirtualModule.irreducible(root_system, right)}"
        details[key] = str(product)
        if product.contains(excluded):
            mismatches.append(DegreeMismatch(
                degree=0,
                expected=f"{key} without {VirtualModule.irreducible(root_system, excluded)}",
                actual=str(product)))
    return IdentityReport(name='p4_non_containment', truncation=0, passed=not mismatches,
                          mismatches=mismatches, details=details)


def verify_free_generation(truncation: int = DEFAULT_TRUNCATION,
                           inject_fault_level: Optional[int] = None) -> FreeGenerationReport:
    """
    B(E4)第3层以上的层级用两种方式计算并逐层比较：
    剥离 Z_λ，以及剥离由E(5,10)余伴随谱自由生成的包络级数
    """
    if truncation < 3:
        raise SeriesError(f"free generation starts at level 3, truncation {truncation} is too small")
    from .e510 import coadjoint_generator_spectrum

    logger.info(f"Verifying free generation up to level {truncation} (assuming {ASSUMPTION})")
    spectrum = coadjoint_generator_spectrum(truncation)
    with ThreadPoolExecutor(max_workers=2) as executor:
        peeled_future = executor.submit(peel_levels, minimal_orbit_series(truncation), truncation)
        free_future = executor.submit(
            lambda: peel_enveloping_series(free_superalgebra_uea(spectrum, truncation), truncation))
        peeled = peeled_future.result()
        free = free_future.result()

    report = FreeGenerationReport(max_level=truncation)
    for level in range(3, truncation + 1):
        left = peeled.module(level)
        if inject_fault_level == level:
            left = left + VirtualModule.trivial(left.root_system)
            logger.warning(f"Injected fault at level {level}")
        right = free.module(level)
        equal = left == right
        if not equal:
            logger.error(f"Free generation mismatch at level {level}: peeled {left}, free {right}")
        report.levels.append(LevelEntry(level=level, peeled=terms_of(left),
                                        free=terms_of(right), equal=equal))
    return report


def extend_levels_by_pairing(levels: LevelDecomposition,
                             truncation: Optional[int] = None) -> LevelDecomposition:
    """R_{5−p} = conj(R_p)；两侧都已知的层级必须自洽"""
    truncation = levels.truncation if truncation is None else truncation
    known = {p: r for p, r in levels.levels.items() if p <= truncation}
    extended = dict(known)
    for p, r in sorted(known.items()):
        partner = 5 - p
        image = r.conjugate()
        if partner in known:
            if known[partner] != image:
                raise PairingError(
                    f"pairing violated: conj(R_{p}) = {image} but R_{partner} = {known[partner]}")
        else:
            extended[partner] = image
    return LevelDecomposition(levels=extended, provenance='paired', truncation=truncation)
