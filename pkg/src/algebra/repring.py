# -*- coding: utf-8 -*-
"""
表示环运算
虚模的张量积（Klimyk公式）、Adams运算以及对称幂与外幂（Newton递推）
"""

import logging
import re
from functools import lru_cache
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from ..errors import IntegralityError, WeightError
from .liecore import (
    A4,
    RootSystem,
    Weight,
    WeightMultiset,
    build_root_system,
    conjugate,
    decompose_character,
    reflect_to_dominant,
    weight_diagram,
    weyl_dim,
)

logger = logging.getLogger('repring')

_TERM = re.compile(r'([+-]?)\s*(\d*)\s*\(([^)]*)\)')


def format_weight(weight: Weight) -> str:
    if all(0 <= x <= 9 for x in weight):
        return '(' + ''.join(str(x) for x in weight) + ')'
    return '(' + ','.join(str(x) for x in weight) + ')'


class VirtualModule:
    """表示环中的元素：支配最高权到整数重数的有限映射"""

    __slots__ = ('root_system', '_terms')

    def __init__(self, root_system: RootSystem, terms: Optional[Mapping[Weight, int]] = None):
        self.root_system = root_system
        clean: Dict[Weight, int] = {}
        for weight, m in (terms or {}).items():
            weight = root_system.check_weight(weight, dominant=True)
            clean[weight] = clean.get(weight, 0) + int(m)
        self._terms = {w: m for w, m in clean.items() if m}

    @classmethod
    def _trusted(cls, root_system: RootSystem, terms: Dict[Weight, int]) -> 'VirtualModule':
        module = cls.__new__(cls)
        module.root_system = root_system
        module._terms = {w: m for w, m in terms.items() if m}
        return module

    @classmethod
    def zero(cls, root_system: RootSystem) -> 'VirtualModule':
        return cls._trusted(root_system, {})

    @classmethod
    def irreducible(cls, root_system: RootSystem, labels, multiplicity: int = 1) -> 'VirtualModule':
        return cls(root_system, {tuple(labels): multiplicity})

    @classmethod
    def trivial(cls, root_system: RootSystem) -> 'VirtualModule':
        return cls._trusted(root_system, {(0,) * root_system.rank: 1})

    @classmethod
    def from_character(cls, root_system: RootSystem, chars: WeightMultiset) -> 'VirtualModule':
        return cls._trusted(root_system, decompose_character(root_system, chars))

    # 访问
    def items(self) -> List[Tuple[Weight, int]]:
        return sorted(self._terms.items())

    def __iter__(self) -> Iterator[Tuple[Weight, int]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def multiplicity(self, weight) -> int:
        return self._terms.get(tuple(weight), 0)

    def contains(self, weight) -> bool:
        return self.multiplicity(weight) > 0

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_nonnegative(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    @property
    def dim(self) -> int:
        return sum(m * weyl_dim(self.root_system, w) for w, m in self._terms.items())

    def character(self) -> WeightMultiset:
        chars: WeightMultiset = {}
        for highest, m in self._terms.items():
            for w, mult in weight_diagram(self.root_system, highest):
                chars[w] = chars.get(w, 0) + m * mult
        return {w: m for w, m in chars.items() if m}

    def conjugate(self) -> 'VirtualModule':
        return VirtualModule._trusted(
            self.root_system,
            {conjugate(self.root_system, w): m for w, m in self._terms.items()})

    # 环运算
    def _check_compatible(self, other: 'VirtualModule'):
        if not isinstance(other, VirtualModule):
            raise TypeError(f"expected VirtualModule, got {type(other).__name__}")
        if other.root_system.cartan != self.root_system.cartan:
            raise WeightError("virtual modules live over different Cartan matrices")

    def __add__(self, other: 'VirtualModule') -> 'VirtualModule':
        self._check_compatible(other)
        terms = dict(self._terms)
        for w, m in other._terms.items():
            terms[w] = terms.get(w, 0) + m
        return VirtualModule._trusted(self.root_system, terms)

    def __neg__(self) -> 'VirtualModule':
        return VirtualModule._trusted(self.root_system, {w: -m for w, m in self._terms.items()})

    def __sub__(self, other: 'VirtualModule') -> 'VirtualModule':
        return self + (-other)

    def scale(self, factor: int) -> 'VirtualModule':
        return VirtualModule._trusted(self.root_system,
                                      {w: factor * m for w, m in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return tensor(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero
        if not isinstance(other, VirtualModule):
            return NotImplemented
        return self.root_system.cartan == other.root_system.cartan and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.root_system.cartan, frozenset(self._terms.items())))

    # 序列化
    def __str__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for w, m in self.items():
            sign = '-' if m < 0 else '+'
            count = '' if abs(m) == 1 else str(abs(m))
            parts.append(f"{sign}{count}{format_weight(w)}")
        text = ''.join(parts)
        return text[1:] if text.startswith('+') else text

    def __repr__(self) -> str:
        return f"VirtualModule({self})"

    def to_json(self) -> List[Dict]:
        return [{"dynkin": list(w), "multiplicity": m} for w, m in self.items()]

    @classmethod
    def from_json(cls, root_system: RootSystem, data: List[Dict]) -> 'VirtualModule':
        return cls(root_system, {tuple(t["dynkin"]): t["multiplicity"] for t in data})


def sl5() -> RootSystem:
    return build_root_system(A4)


def parse_module(text: str, root_system: Optional[RootSystem] = None) -> VirtualModule:
    """解析 "(0002)+(1100)"、"2(0001)"、"-(1000)"、"0" 这类写法"""
    root_system = root_system or sl5()
    text = text.strip()
    if text in ('', '0'):
        return VirtualModule.zero(root_system)
    terms: Dict[Weight, int] = {}
    position = 0
    for match in _TERM.finditer(text):
        if text[position:match.start()].strip():
            raise ValueError(f"cannot parse module expression {text!r}")
        position = match.end()
        sign = -1 if match.group(1) == '-' else 1
        count = int(match.group(2)) if match.group(2) else 1
        body = match.group(3)
        labels = tuple(int(x) for x in (body.split(',') if ',' in body else body))
        terms[labels] = terms.get(labels, 0) + sign * count
    if text[position:].strip():
        raise ValueError(f"cannot parse module expression {text!r}")
    return VirtualModule(root_system, terms)


@lru_cache(maxsize=None)
def _tensor_irreducible(root_system: RootSystem, first: Weight, second: Weight) -> Tuple[Tuple[Weight, int], ...]:
    """Klimyk：较小因子的权重图加到另一个的最高权上，再反射回支配区"""
    if weyl_dim(root_system, first) > weyl_dim(root_system, second):
        first, second = second, first
    shifted = tuple(x + 1 for x in second)
    out: Dict[Weight, int] = {}
    for nu, m in weight_diagram(root_system, first):
        dominant, sign = reflect_to_dominant(root_system, tuple(a + b for a, b in zip(nu, shifted)))
        if 0 in dominant:
            continue
        highest = tuple(x - 1 for x in dominant)
        out[highest] = out.get(highest, 0) + sign * m
    return tuple(sorted((w, m) for w, m in out.items() if m))


def tensor(a: VirtualModule, b: VirtualModule) -> VirtualModule:
    a._check_compatible(b)
    root_system = a.root_system
    terms: Dict[Weight, int] = {}
    for w1, m1 in a._terms.items():
        for w2, m2 in b._terms.items():
            key = (w1, w2) if w1 <= w2 else (w2, w1)
            for w, m in _tensor_irreducible(root_system, *key):
                terms[w] = terms.get(w, 0) + m1 * m2 * m
    return VirtualModule._trusted(root_system, terms)


@lru_cache(maxsize=None)
def _adams_irreducible(root_system: RootSystem, highest: Weight, k: int) -> Tuple[Tuple[Weight, int], ...]:
    out: Dict[Weight, int] = {}
    for nu, m in weight_diagram(root_system, highest):
        dominant, sign = reflect_to_dominant(root_system, tuple(k * x + 1 for x in nu))
        if 0 in dominant:
            continue
        w = tuple(x - 1 for x in dominant)
        out[w] = out.get(w, 0) + sign * m
    return tuple(sorted((w, m) for w, m in out.items() if m))


def adams(r: VirtualModule, k: int) -> VirtualModule:
    if k < 1:
        raise ValueError(f"Adams operation needs k >= 1, got {k}")
    if k == 1:
        return r
    terms: Dict[Weight, int] = {}
    for highest, m in r._terms.items():
        for w, mult in _adams_irreducible(r.root_system, highest, k):
            terms[w] = terms.get(w, 0) + m * mult
    return VirtualModule._trusted(r.root_system, terms)


def _divide_exact(value: VirtualModule, k: int) -> VirtualModule:
    terms = {}
    for w, m in value._terms.items():
        q, rem = divmod(m, k)
        if rem:
            raise IntegralityError(f"multiplicity {m} of {format_weight(w)} is not divisible by {k}")
        terms[w] = q
    return VirtualModule._trusted(value.root_system, terms)


def _newton_powers(r: VirtualModule, k: int, alternating: bool) -> List[VirtualModule]:
    powers = [VirtualModule.trivial(r.root_system)]
    psi = [None] + [adams(r, i) for i in range(1, k + 1)]
    for n in range(1, k + 1):
        total = VirtualModule.zero(r.root_system)
        for i in range(1, n + 1):
            term = tensor(psi[i], powers[n - i])
            if alternating and i % 2 == 0:
                total = total - term
            else:
                total = total + term
        powers.append(_divide_exact(total, n))
    return powers


def sym_powers(r: VirtualModule, k: int) -> List[VirtualModule]:
    """[Sym^0 r, ..., Sym^k r]"""
    if k < 0:
        raise ValueError("power must be non-negative")
    return _newton_powers(r, k, alternating=False)


def ext_powers(r: VirtualModule, k: int) -> List[VirtualModule]:
    """[∧^0 r, ..., ∧^k r]"""
    if k < 0:
        raise ValueError("power must be non-negative")
    return _newton_powers(r, k, alternating=True)


def sym_power(r: VirtualModule, k: int) -> VirtualModule:
    return sym_powers(r, k)[k]


def ext_power(r: VirtualModule, k: int) -> VirtualModule:
    return ext_powers(r, k)[k]
