# -*- coding: utf-8 -*-
"""
有限型根系基础数据
Weyl维数、Freudenthal权重重数与特征标分解，对任意有限型Cartan矩阵通用，默认实例为A4
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..errors import CartanMatrixError, CharacterError, WeightError

Weight = Tuple[int, ...]
WeightMultiset = Dict[Weight, int]
# QQ 的元素（gmpy2.mpq 或 PythonMPQ）
Rational = Any

logger = logging.getLogger('liecore')


def _symmetrizer(entries: Tuple[Tuple[int, ...], ...]) -> List[Rational]:
    """求对角矩阵D使得A·D对称（逐个连通分支传播）"""
    rank = len(entries)
    d: List[Rational] = [None] * rank
    for start in range(rank):
        if d[start] is not None:
            continue
        d[start] = QQ(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(rank):
                if j == i or entries[i][j] == 0:
                    continue
                value = d[i] * QQ(entries[j][i], entries[i][j])
                if d[j] is None:
                    d[j] = value
                    stack.append(j)
                elif d[j] != value:
                    raise CartanMatrixError("Cartan matrix is not symmetrizable")
    return d


def _validate_cartan(entries: Tuple[Tuple[int, ...], ...]) -> List[Rational]:
    rank = len(entries)
    if rank == 0 or any(len(row) != rank for row in entries):
        raise CartanMatrixError("Cartan matrix must be square and non-empty")
    for i in range(rank):
        if entries[i][i] != 2:
            raise CartanMatrixError(f"diagonal entry {i} is {entries[i][i]}, expected 2")
        for j in range(rank):
            if i == j:
                continue
            if entries[i][j] > 0:
                raise CartanMatrixError(f"off-diagonal entry ({i},{j}) is positive")
            if (entries[i][j] == 0) != (entries[j][i] == 0):
                raise CartanMatrixError(f"entries ({i},{j}) and ({j},{i}) must vanish together")
    d = _symmetrizer(entries)
    sym = DomainMatrix([[entries[i][j] * d[j] for j in range(rank)] for i in range(rank)], (rank, rank), QQ)
    for k in range(1, rank + 1):
        minor = sym[:k, :k].det()
        if minor <= 0:
            raise CartanMatrixError(
                f"Cartan matrix is not of finite type: leading minor of order {k} is {minor}")
    return d


@dataclass(frozen=True)
class CartanMatrix:
    """Cartan矩阵，第i行是单根α_i的Dynkin标签"""
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(int(a) for a in row) for row in self.entries)
        object.__setattr__(self, 'entries', entries)
        _validate_cartan(entries)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @classmethod
    def of_type(cls, kind: str, rank: int) -> 'CartanMatrix':
        """经典型A_n, B_n, C_n, D_n"""
        kind = kind.upper()
        if rank < 1:
            raise CartanMatrixError("rank must be positive")
        rows = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            rows[i][i] = 2
            if i + 1 < rank:
                rows[i][i + 1] = rows[i + 1][i] = -1
        if kind in ('B', 'C') and rank >= 2:
            if kind == 'B':
                rows[rank - 2][rank - 1] = -2
            else:
                rows[rank - 1][rank - 2] = -2
        elif kind == 'D' and rank >= 4:
            rows[rank - 2][rank - 1] = rows[rank - 1][rank - 2] = 0
            rows[rank - 3][rank - 1] = rows[rank - 1][rank - 3] = -1
        elif kind != 'A':
            raise CartanMatrixError(f"unsupported type {kind}{rank}")
        return cls(tuple(tuple(row) for row in rows))


A4 = CartanMatrix.of_type('A', 4)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """正根（Dynkin标签与单根坐标）、Weyl向量与内积数据"""
    cartan: CartanMatrix
    positive_roots: Tuple[Weight, ...]
    root_coordinates: Tuple[Tuple[int, ...], ...]
    rho: Weight
    symmetrizer: Tuple[Rational, ...]
    gram: Tuple[Tuple[Rational, ...], ...]
    height_vector: Tuple[Rational, ...]

    @property
    def rank(self) -> int:
        return self.cartan.rank

    def simple_root(self, i: int) -> Weight:
        return self.cartan.entries[i]

    def reflect(self, weight: Weight, i: int) -> Weight:
        """单反射 s_i(w) = w − ⟨w, α_i^∨⟩ α_i"""
        k = weight[i]
        if k == 0:
            return weight
        row = self.cartan.entries[i]
        return tuple(w - k * a for w, a in zip(weight, row))

    def inner(self, a: Weight, b: Weight) -> Rational:
        total = QQ(0)
        for i, x in enumerate(a):
            if x:
                row = self.gram[i]
                total += x * sum((row[j] * y for j, y in enumerate(b) if y), QQ(0))
        return total

    def pair_with_root(self, weight: Weight, coordinates: Tuple[int, ...]) -> Rational:
        """(w, α)，α以单根坐标给出"""
        return sum((c * d * w for c, d, w in zip(coordinates, self.symmetrizer, weight) if c),
                   QQ(0))

    def height(self, weight: Weight) -> Rational:
        return sum((h * w for h, w in zip(self.height_vector, weight) if w), QQ(0))

    def check_weight(self, weight, dominant: bool = False) -> Weight:
        weight = tuple(int(x) for x in weight)
        if len(weight) != self.rank:
            raise WeightError(f"weight {weight} has length {len(weight)}, expected rank {self.rank}")
        if dominant and any(x < 0 for x in weight):
            raise WeightError(f"weight {weight} is not dominant")
        return weight


@lru_cache(maxsize=None)
def build_root_system(cartan: CartanMatrix) -> RootSystem:
    """单反射闭包枚举正根"""
    entries = cartan.entries
    rank = cartan.rank

    def labels_of(coordinates):
        return tuple(sum(coordinates[j] * entries[j][i] for j in range(rank)) for i in range(rank))

    simple = [tuple(1 if k == i else 0 for k in range(rank)) for i in range(rank)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        next_frontier = []
        for coordinates in frontier:
            labels = labels_of(coordinates)
            for i in range(rank):
                if labels[i] == 0:
                    continue
                image = list(coordinates)
                image[i] -= labels[i]
                image = tuple(image)
                if all(c >= 0 for c in image) and any(image) and image not in found:
                    found.add(image)
                    next_frontier.append(image)
        frontier = next_frontier

    coordinates = tuple(sorted(found, key=lambda c: (sum(c), c)))
    roots = tuple(labels_of(c) for c in coordinates)

    d = _validate_cartan(entries)
    inverse = DomainMatrix([[QQ(x) for x in row] for row in entries], (rank, rank), QQ).inv().to_list()
    gram = tuple(tuple(inverse[j][i] * d[i] for j in range(rank)) for i in range(rank))
    heights = tuple(sum((inverse[j][i] for i in range(rank)), QQ(0)) for j in range(rank))

    system = RootSystem(
        cartan=cartan,
        positive_roots=roots,
        root_coordinates=coordinates,
        rho=(1,) * rank,
        symmetrizer=tuple(d),
        gram=gram,
        height_vector=heights,
    )
    logger.debug(f"Built root system of rank {rank} with {len(roots)} positive roots")
    return system


def reflect_to_dominant(root_system: RootSystem, weight: Weight) -> Tuple[Weight, int]:
    """把权重反射到支配区，返回(支配共轭, 所用反射次数的符号)"""
    sign = 1
    current = tuple(weight)
    while True:
        for i, x in enumerate(current):
            if x < 0:
                current = root_system.reflect(current, i)
                sign = -sign
                break
        else:
            return current, sign


def weyl_orbit(root_system: RootSystem, weight: Weight) -> Tuple[Weight, ...]:
    start = tuple(weight)
    seen = {start}
    frontier = [start]
    while frontier:
        next_frontier = []
        for w in frontier:
            for i in range(root_system.rank):
                image = root_system.reflect(w, i)
                if image not in seen:
                    seen.add(image)
                    next_frontier.append(image)
        frontier = next_frontier
    return tuple(sorted(seen, reverse=True))


def weyl_dim(root_system: RootSystem, highest: Weight) -> int:
    highest = root_system.check_weight(highest, dominant=True)
    shifted = tuple(x + 1 for x in highest)
    numerator = QQ(1)
    denominator = QQ(1)
    for coordinates in root_system.root_coordinates:
        numerator *= root_system.pair_with_root(shifted, coordinates)
        denominator *= root_system.pair_with_root(root_system.rho, coordinates)
    value = numerator / denominator
    assert value.denominator == 1
    return int(value)


def conjugate(root_system: RootSystem, highest: Weight) -> Weight:
    """对偶模的最高权 −w₀(λ)，A_n上即标签反转"""
    highest = root_system.check_weight(highest, dominant=True)
    return reflect_to_dominant(root_system, tuple(-x for x in highest))[0]


@lru_cache(maxsize=None)
def dominant_weights(root_system: RootSystem, highest: Weight) -> Tuple[Tuple[Weight, int], ...]:
    """Freudenthal递推，只在支配区内进行，按高度降序返回(支配权, 重数)"""
    highest = root_system.check_weight(highest, dominant=True)
    found = {highest}
    frontier = [highest]
    while frontier:
        next_frontier = []
        for w in frontier:
            for root in root_system.positive_roots:
                lower = tuple(a - b for a, b in zip(w, root))
                if all(x >= 0 for x in lower) and lower not in found:
                    found.add(lower)
                    next_frontier.append(lower)
        frontier = next_frontier

    ordered = sorted(found, key=lambda w: (root_system.height(w), w), reverse=True)
    shifted_top = tuple(x + 1 for x in highest)
    top_norm = root_system.inner(shifted_top, shifted_top)
    multiplicities = {highest: 1}
    for mu in ordered[1:]:
        total = QQ(0)
        for root, coordinates in zip(root_system.positive_roots, root_system.root_coordinates):
            nu = tuple(a + b for a, b in zip(mu, root))
            while True:
                dominant, _ = reflect_to_dominant(root_system, nu)
                m = multiplicities.get(dominant)
                if not m:
                    break
                total += m * root_system.pair_with_root(nu, coordinates)
                nu = tuple(a + b for a, b in zip(nu, root))
        shifted = tuple(x + 1 for x in mu)
        value = 2 * total / (top_norm - root_system.inner(shifted, shifted))
        assert value.denominator == 1 and value > 0
        multiplicities[mu] = int(value)
    return tuple((w, multiplicities[w]) for w in ordered)


@lru_cache(maxsize=None)
def weight_diagram(root_system: RootSystem, highest: Weight) -> Tuple[Tuple[Weight, int], ...]:
    diagram = []
    for mu, m in dominant_weights(root_system, highest):
        diagram.extend((w, m) for w in weyl_orbit(root_system, mu))
    return tuple(diagram)


def freudenthal_multiplicities(root_system: RootSystem, highest: Weight) -> WeightMultiset:
    return dict(weight_diagram(root_system, highest))


def decompose_dominant(root_system: RootSystem, dominant: WeightMultiset) -> Dict[Weight, int]:
    """从支配权重数贪心剥离最高权（按高度，字典序打破平局）"""
    residual = {tuple(w): m for w, m in dominant.items() if m}
    result: Dict[Weight, int] = {}
    while residual:
        top = max(residual, key=lambda w: (root_system.height(w), w))
        m = residual[top]
        result[top] = m
        for mu, mult in dominant_weights(root_system, top):
            value = residual.get(mu, 0) - m * mult
            if value:
                residual[mu] = value
            else:
                residual.pop(mu, None)
    return result


def decompose_character(root_system: RootSystem, chars: WeightMultiset) -> Dict[Weight, int]:
    """把Weyl不变的权重多重集分解为不可约模的整系数组合"""
    support = {root_system.check_weight(w): m for w, m in chars.items() if m}
    for w, m in support.items():
        dominant, _ = reflect_to_dominant(root_system, w)
        if support.get(dominant, 0) != m:
            raise CharacterError(
                f"weight multiset is not Weyl invariant: {w} has multiplicity {m}, "
                f"its dominant conjugate {dominant} has {support.get(dominant, 0)}")
    dominant_part = {w: m for w, m in support.items() if all(x >= 0 for x in w)}
    for w, m in dominant_part.items():
        for image in weyl_orbit(root_system, w):
            if support.get(image, 0) != m:
                raise CharacterError(
                    f"weight multiset is not Weyl invariant: {w} has multiplicity {m}, "
                    f"its conjugate {image} has {support.get(image, 0)}")
    return decompose_dominant(root_system, dominant_part)
