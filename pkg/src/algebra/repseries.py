# -*- coding: utf-8 -*-
"""
以虚模为系数的截断形式幂级数
配分函数恒等式都在这个代数里计算
"""

import logging
from typing import Dict, List, Literal, Mapping, Optional, Sequence, Union

from ..errors import SeriesError, WeightError
from ..models import DegreeMismatch, IdentityReport
from .liecore import RootSystem
from .repring import VirtualModule, sym_powers

logger = logging.getLogger('repseries')

DEFAULT_TRUNCATION = 10


class RepSeries:
    """c_0 + c_1 t + ... + c_N t^N，系数共享同一个根系"""

    __slots__ = ('root_system', 'truncation', '_coefficients')

    def __init__(self, root_system: RootSystem, truncation: int,
                 coefficients: Optional[Union[Mapping[int, VirtualModule], Sequence[VirtualModule]]] = None):
        if truncation < 0:
            raise SeriesError(f"truncation order must be non-negative, got {truncation}")
        self.root_system = root_system
        self.truncation = truncation
        zero = VirtualModule.zero(root_system)
        self._coefficients: List[VirtualModule] = [zero] * (truncation + 1)
        if coefficients is None:
            return
        pairs = coefficients.items() if isinstance(coefficients, Mapping) else enumerate(coefficients)
        for degree, value in pairs:
            if degree < 0:
                raise SeriesError(f"negative degree {degree}")
            if degree > truncation:
                continue
            if value.root_system.cartan != root_system.cartan:
                raise WeightError("series coefficients live over different Cartan matrices")
            self._coefficients[degree] = self._coefficients[degree] + value

    @classmethod
    def unit(cls, root_system: RootSystem, truncation: int = DEFAULT_TRUNCATION) -> 'RepSeries':
        return cls(root_system, truncation, {0: VirtualModule.trivial(root_system)})

    @classmethod
    def monomial(cls, value: VirtualModule, degree: int, truncation: int = DEFAULT_TRUNCATION) -> 'RepSeries':
        return cls(value.root_system, truncation, {degree: value})

    def coefficient(self, p: int) -> VirtualModule:
        if not 0 <= p <= self.truncation:
            raise SeriesError(f"degree {p} outside 0..{self.truncation}")
        return self._coefficients[p]

    def truncate(self, order: int) -> 'RepSeries':
        if not 0 <= order <= self.truncation:
            raise SeriesError(f"cannot truncate order {self.truncation} series at {order}")
        return RepSeries(self.root_system, order, self._coefficients[:order + 1])

    def degrees(self) -> List[int]:
        """非零系数所在的次数"""
        return [p for p, c in enumerate(self._coefficients) if not c.is_zero]

    @property
    def is_unit(self) -> bool:
        return (self._coefficients[0] == VirtualModule.trivial(self.root_system)
                and all(c.is_zero for c in self._coefficients[1:]))

    def _aligned(self, other: 'RepSeries'):
        if other.root_system.cartan != self.root_system.cartan:
            raise WeightError("series live over different Cartan matrices")
        order = min(self.truncation, other.truncation)
        return order, self._coefficients[:order + 1], other._coefficients[:order + 1]

    def __add__(self, other: 'RepSeries') -> 'RepSeries':
        order, a, b = self._aligned(other)
        return RepSeries(self.root_system, order, [x + y for x, y in zip(a, b)])

    def __neg__(self) -> 'RepSeries':
        return RepSeries(self.root_system, self.truncation, [-c for c in self._coefficients])

    def __sub__(self, other: 'RepSeries') -> 'RepSeries':
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RepSeries):
            return mul(self, other)
        if isinstance(other, (int, VirtualModule)):
            return RepSeries(self.root_system, self.truncation, [c * other for c in self._coefficients])
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepSeries):
            return NotImplemented
        order, a, b = self._aligned(other)
        return a == b

    def __str__(self) -> str:
        parts = []
        for p, c in enumerate(self._coefficients):
            if c.is_zero:
                continue
            text = str(c)
            if len(c) > 1:
                text = f"[{text}]"
            if p == 1:
                text += " t"
            elif p > 1:
                text += f" t^{p}"
            parts.append(text)
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(t^{self.truncation + 1})"

    def __repr__(self) -> str:
        return f"RepSeries({self})"

    def to_json(self) -> Dict:
        return {
            "truncation": self.truncation,
            "coefficients": [
                {"degree": p, "modules": c.to_json()}
                for p, c in enumerate(self._coefficients) if not c.is_zero
            ],
        }

    @classmethod
    def from_json(cls, root_system: RootSystem, data: Dict) -> 'RepSeries':
        return cls(root_system, data["truncation"], {
            entry["degree"]: VirtualModule.from_json(root_system, entry["modules"])
            for entry in data["coefficients"]
        })


def mul(a: RepSeries, b: RepSeries) -> RepSeries:
    """柯西积，系数乘法为张量积；截断到两者较小的阶"""
    order, x, y = a._aligned(b)
    support_x = [(i, c) for i, c in enumerate(x) if not c.is_zero]
    support_y = [(j, c) for j, c in enumerate(y) if not c.is_zero]
    out = [VirtualModule.zero(a.root_system) for _ in range(order + 1)]
    for i, ci in support_x:
        for j, cj in support_y:
            if i + j > order:
                break
            out[i + j] = out[i + j] + ci * cj
    return RepSeries(a.root_system, order, out)


def inverse(a: RepSeries) -> RepSeries:
    root_system = a.root_system
    trivial = VirtualModule.trivial(root_system)
    if a.coefficient(0) != trivial:
        raise SeriesError(f"constant term {a.coefficient(0)} is not the trivial module")
    support = [(i, c) for i, c in enumerate(a._coefficients) if i > 0 and not c.is_zero]
    out = [trivial]
    for n in range(1, a.truncation + 1):
        total = VirtualModule.zero(root_system)
        for i, c in support:
            if i > n:
                break
            if not out[n - i].is_zero:
                total = total + c * out[n - i]
        out.append(-total)
    return RepSeries(root_system, a.truncation, out)


def sigma_series(x: VirtualModule, p: int, truncation: int = DEFAULT_TRUNCATION) -> RepSeries:
    """σ_{t^p}(x) = Σ_k Sym^k(x) t^{pk}，x可以是虚模"""
    if p <= 0:
        raise SeriesError(f"geometric factor needs p >= 1, got {p}")
    powers = sym_powers(x, truncation // p)
    return RepSeries(x.root_system, truncation, {p * k: s for k, s in enumerate(powers)})


def geometric_factor(r: VirtualModule, p: int, sign: Literal['plus', 'minus'],
                     truncation: int = DEFAULT_TRUNCATION) -> RepSeries:
    """(1−t^p)^{−r}（sign=minus，对称幂级数）或 (1−t^p)^{+r}（sign=plus，交错外幂级数）"""
    if sign == 'minus':
        return sigma_series(r, p, truncation)
    if sign == 'plus':
        return sigma_series(-r, p, truncation)
    raise SeriesError(f"unknown sign {sign!r}")


def series_identity_check(lhs: RepSeries, rhs: RepSeries, name: str = 'series_identity') -> IdentityReport:
    """逐项比较两个级数，给出所有不相等的次数"""
    order, a, b = lhs._aligned(rhs)
    mismatches = [
        DegreeMismatch(degree=p, expected=str(y), actual=str(x))
        for p, (x, y) in enumerate(zip(a, b)) if x != y
    ]
    if mismatches:
        logger.error(f"{name}: first mismatch at t^{mismatches[0].degree}")
    return IdentityReport(name=name, truncation=order, passed=not mismatches, mismatches=mismatches)
