# -*- coding: utf-8 -*-
"""
超空间算符
Q^{mn} = ∂/∂θ_{mn} + ε^{mnpqr}θ_{pq}∂_r，D^{mn} 的第二项取负号；
作用在形如 θ_J ∂^a f 的项上（f为一般的x函数），从而一次覆盖全部x单项式
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from ..algebra.e510 import EPSILON
from ..models import IdentityReport
from .quotient_ring import PAIRS, RANK

logger = logging.getLogger('superspace')

Term = Tuple[int, Tuple[int, ...]]      # (θ子集掩码, 对f的求导多重指标)
Superfield = Dict[Term, int]

ZERO_DERIVATIVE = (0,) * RANK


def _sign_before(mask: int, bit: int) -> int:
    """把θ_bit移过掩码中排在它前面的θ所得的符号"""
    return -1 if bin(mask & ((1 << bit) - 1)).count('1') % 2 else 1


def _raise(derivative: Tuple[int, ...], r: int) -> Tuple[int, ...]:
    return tuple(a + 1 if i == r else a for i, a in enumerate(derivative))


def _accumulate(target: Superfield, key: Term, value: int):
    total = target.get(key, 0) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


@dataclass(frozen=True)
class SuperspaceOperator:
    """一阶奇算符：∂/∂θ_pair ± ε θ ∂_x"""
    kind: str
    pair: int

    @property
    def epsilon_sign(self) -> int:
        return 1 if self.kind == 'Q' else -1

    def __str__(self) -> str:
        m, n = PAIRS[self.pair]
        return f"{self.kind}^{{{m + 1}{n + 1}}}"

    def apply(self, field: Superfield) -> Superfield:
        m, n = PAIRS[self.pair]
        out: Superfield = {}
        for (mask, derivative), c in field.items():
            bit = 1 << self.pair
            if mask & bit:
                _accumulate(out, (mask ^ bit, derivative), c * _sign_before(mask, self.pair))
            for b, (p, q) in enumerate(PAIRS):
                if len({m, n, p, q}) < 4 or mask & (1 << b):
                    continue
                r = ({0, 1, 2, 3, 4} - {m, n, p, q}).pop()
                value = c * self.epsilon_sign * EPSILON[(m, n, p, q, r)] * _sign_before(mask, b)
                _accumulate(out, (mask | (1 << b), _raise(derivative, r)), value)
        return out


def Q(pair: int) -> SuperspaceOperator:
    return SuperspaceOperator('Q', pair)


def D(pair: int) -> SuperspaceOperator:
    return SuperspaceOperator('D', pair)


def anticommutator(a: SuperspaceOperator, b: SuperspaceOperator, field: Superfield) -> Superfield:
    first = a.apply(b.apply(field))
    for key, value in b.apply(a.apply(field)).items():
        _accumulate(first, key, value)
    return first


def epsilon_derivative(a: int, b: int, factor: int, field: Superfield) -> Superfield:
    """factor · ε^{mnpqr} ∂_r 作用在field上，(mn)、(pq)由对编号a、b给出"""
    m, n = PAIRS[a]
    p, q = PAIRS[b]
    if len({m, n, p, q}) < 4:
        return {}
    r = ({0, 1, 2, 3, 4} - {m, n, p, q}).pop()
    coefficient = factor * EPSILON[(m, n, p, q, r)]
    return {(mask, _raise(derivative, r)): c * coefficient for (mask, derivative), c in field.items()}


def torsion(a: int, b: int, r: int) -> int:
    """由 {D^a, D^b} = −T^{a,b,r} ∂_r 读出挠率"""
    result = anticommutator(D(a), D(b), {(0, ZERO_DERIVATIVE): 1})
    return -result.get((0, _raise(ZERO_DERIVATIVE, r)), 0)


def evaluate_on_monomial(field: Superfield, exponent: Tuple[int, ...]) -> Dict[Tuple[int, Tuple[int, ...]], int]:
    """把一般函数f替换为x单项式x^exponent"""
    out: Dict[Tuple[int, Tuple[int, ...]], int] = {}
    for (mask, derivative), c in field.items():
        if any(d > e for d, e in zip(derivative, exponent)):
            continue
        factor = 1
        lowered = []
        for d, e in zip(derivative, exponent):
            for k in range(d):
                factor *= e - k
            lowered.append(e - d)
        key = (mask, tuple(lowered))
        total = out.get(key, 0) + c * factor
        if total:
            out[key] = total
        else:
            out.pop(key, None)
    return out


def bracket_on_monomial(a: SuperspaceOperator, b: SuperspaceOperator, mask: int,
                        exponent: Tuple[int, ...]) -> Dict[Tuple[int, Tuple[int, ...]], int]:
    """{a, b} 作用在 θ_mask x^exponent 上"""
    return evaluate_on_monomial(anticommutator(a, b, {(mask, ZERO_DERIVATIVE): 1}), exponent)


def superspace_operator_check(masks: Optional[Iterable[int]] = None) -> IdentityReport:
    """
    对所有θ子集检验 {Q,Q} = 2ε∂、{D,D} = −2ε∂（55个无序对），
    {D,Q} = 0 与 T = 2ε（100个有序对）
    """
    masks = list(range(1 << len(PAIRS))) if masks is None else list(masks)
    failures = []
    checked = 0
    for a in range(len(PAIRS)):
        for b in range(len(PAIRS)):
            for mask in masks:
                field = {(mask, ZERO_DERIVATIVE): 1}
                cases = [('{D,Q}', anticommutator(D(a), Q(b), field), {})]
                if b >= a:
                    cases.append(('{Q,Q}', anticommutator(Q(a), Q(b), field), epsilon_derivative(a, b, 2, field)))
                    cases.append(('{D,D}', anticommutator(D(a), D(b), field),
                                  epsilon_derivative(a, b, -2, field)))
                for name, lhs, rhs in cases:
                    checked += 1
                    if lhs != rhs:
                        failures.append(f"{name} for pairs {PAIRS[a]},{PAIRS[b]} on theta mask {mask}")
            for r in range(RANK):
                m, n = PAIRS[a]
                p, q = PAIRS[b]
                expected = 0
                if len({m, n, p, q, r}) == 5:
                    expected = 2 * EPSILON[(m, n, p, q, r)]
                if torsion(a, b, r) != expected:
                    failures.append(f"torsion T^{{{PAIRS[a]},{PAIRS[b]},{r}}}")
    for message in failures[:10]:
        logger.error(f"Superspace identity failed: {message}")
    return IdentityReport(name='superspace_operators', truncation=2, passed=not failures,
                          details={"theta_subsets": len(masks), "identities_checked": checked,
                                   "failures": failures[:20]})
