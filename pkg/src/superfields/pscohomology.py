# -*- coding: utf-8 -*-
"""
零模纯旋量BRST上同调
复形 ∧θ ⊗ (商环 ⊗ M)/平移像，微分 d = λ_{mn} ∂/∂θ_{mn}。
平移商模按 (λ次数, 权) 一次行化简并缓存，复形直接搭在商坐标上，
按总次数 n = g + k 和环面权分块做有理秩计算
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from sympy.polys.domains import QQ

from ..algebra.koszul import constrained_scalar_series, minimal_orbit_series
from ..algebra.liecore import Weight, decompose_character, decompose_dominant
from ..algebra.linalg import columns_matrix, is_zero, matmul, rank, rref, sparse_matrix
from ..algebra.repring import VirtualModule, sl5
from ..algebra.repseries import RepSeries, inverse
from ..errors import ComplexError
from ..models import CohomologyClass, CohomologyReport, DegreeMismatch, IdentityReport, terms_of
from .quotient_ring import (
    PAIR_INDEX,
    PAIR_WEIGHTS,
    PAIRS,
    RANK,
    GLWeight,
    Monomial,
    add,
    dynkin_labels,
    is_valid_weight,
    quotient_slice,
    reduce_product,
    sub,
    unit,
)

logger = logging.getLogger('pscohomology')

THETA_COUNT = len(PAIRS)
DEFAULT_N_MAX = 10

# (λ单项式, θ掩码, 场分量)
Element = Tuple[Monomial, int, int]
ShiftTerm = Tuple[int, int, int]      # (符号, 对编号, 场分量)


def _neg(weight: GLWeight) -> GLWeight:
    return tuple(-x for x in weight)


def _theta_weight(mask: int) -> GLWeight:
    weight = [0] * RANK
    for i, (m, n) in enumerate(PAIRS):
        if mask >> i & 1:
            weight[m] += 1
            weight[n] += 1
    return tuple(weight)


def _masks_of_size(k: int) -> List[int]:
    return [sum(1 << i for i in chosen) for chosen in combinations(range(THETA_COUNT), k)]


@dataclass(frozen=True)
class SuperfieldSpec:
    """
    超场描述：场模、各分量的GL权、平移场的各分量权以及平移映射
    平移映射把 ϱ_s 送到 Σ 符号·λ_pair·f_c
    """
    name: str
    module: Weight
    field_weights: Tuple[GLWeight, ...]
    shift: str = 'none'
    shift_weights: Tuple[GLWeight, ...] = ()
    shift_map: Tuple[Tuple[ShiftTerm, ...], ...] = ()

    def __post_init__(self):
        if len(self.shift_map) != len(self.shift_weights):
            raise ValueError(f"{self.name}: shift map has {len(self.shift_map)} entries "
                             f"for {len(self.shift_weights)} shift components")
        for s, terms in enumerate(self.shift_map):
            for sign, pair, c in terms:
                # 平移恰好把λ次数升高1
                if sub(self.field_weights[c], PAIR_WEIGHTS[pair]) != self.shift_weights[s]:
                    raise ValueError(f"{self.name}: shift component {s} does not map to "
                                     f"lambda-degree one with matching weight")

    @property
    def has_shift(self) -> bool:
        return bool(self.shift_weights)

    @property
    def weight_offset(self) -> int:
        """支配块键的坐标和为 2n − offset"""
        return sum(sum(w) for w in self.field_weights) // len(self.field_weights)


def _scalar_spec() -> SuperfieldSpec:
    return SuperfieldSpec(name='scalar', module=(0, 0, 0, 0), field_weights=((0,) * RANK,))


def _vector_spec() -> SuperfieldSpec:
    triples = [(m, n, p) for m, n, p in combinations(range(RANK), 3)]
    shift_map = tuple(
        ((1, PAIR_INDEX[(n, p)], m), (-1, PAIR_INDEX[(m, p)], n), (1, PAIR_INDEX[(m, n)], p))
        for m, n, p in triples)
    return SuperfieldSpec(
        name='vector', module=(1, 0, 0, 0),
        field_weights=tuple(_neg(unit(m)) for m in range(RANK)),
        shift='Phi^m ~ Phi^m + lambda_{np} rho^{mnp}',
        shift_weights=tuple(_neg(add(add(unit(m), unit(n)), unit(p))) for m, n, p in triples),
        shift_map=shift_map)


def _oneform_spec() -> SuperfieldSpec:
    shift_map = tuple(
        tuple((1 if m < n else -1, PAIR_INDEX[(min(m, n), max(m, n))], m)
              for m in range(RANK) if m != n)
        for n in range(RANK))
    return SuperfieldSpec(
        name='oneform', module=(0, 0, 0, 1),
        field_weights=tuple(unit(m) for m in range(RANK)),
        shift='Xi_m ~ Xi_m + lambda_{mn} rho^n',
        shift_weights=tuple(_neg(unit(n)) for n in range(RANK)),
        shift_map=shift_map)


SCALAR = _scalar_spec()
VECTOR = _vector_spec()
ONEFORM = _oneform_spec()
PRESETS: Dict[str, SuperfieldSpec] = {spec.name: spec for spec in (SCALAR, VECTOR, ONEFORM)}


def superfield_spec(name: str) -> SuperfieldSpec:
    if name not in PRESETS:
        raise ValueError(f"unknown superfield {name!r}, expected one of {sorted(PRESETS)}")
    return PRESETS[name]


ModuleCoordinate = Tuple[Monomial, int]      # (λ单项式, 场分量)
Vector = Dict[ModuleCoordinate, object]


def _ring_basis(degree: int, weight: GLWeight) -> Tuple[Monomial, ...]:
    if not is_valid_weight(degree, weight):
        return ()
    return quotient_slice(degree, weight).basis


@dataclass(frozen=True)
class ModuleSlice:
    """
    平移商模 (商环 ⊗ M)/平移像 在λ次数degree、模权weight处的一片
    模权 u 使分量c的λ单项式权为 u + 场权_c
    """
    degree: int
    weight: GLWeight
    coordinates: Tuple[ModuleCoordinate, ...]
    basis: Tuple[ModuleCoordinate, ...]
    normal_forms: Dict[ModuleCoordinate, Vector]
    relations: Tuple[Vector, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def reduce(self, vector: Vector) -> Vector:
        out: Vector = {}
        for coordinate, v in vector.items():
            for b, w in self.normal_forms[coordinate].items():
                out[b] = out.get(b, 0) + v * w
        return {b: w for b, w in out.items() if w}


def _multiply_into(spec: SuperfieldSpec, vector: Vector, pair: int) -> Vector:
    """λ_pair · vector，只在商环中约化"""
    out: Vector = {}
    for (a, c), v in vector.items():
        for a2, w in reduce_product(a, pair).items():
            out[(a2, c)] = out.get((a2, c), 0) + v * w
    return out


@lru_cache(maxsize=None)
def module_slice(spec: SuperfieldSpec, degree: int, weight: GLWeight) -> ModuleSlice:
    coordinates = tuple((a, c) for c, field_weight in enumerate(spec.field_weights)
                        for a in _ring_basis(degree, add(weight, field_weight)))
    column = {coordinate: j for j, coordinate in enumerate(coordinates)}
    relations: List[Vector] = []
    if spec.has_shift and degree >= 1:
        for s, shift_weight in enumerate(spec.shift_weights):
            for b in _ring_basis(degree - 1, add(weight, shift_weight)):
                relation: Vector = {}
                for sign, pair, c in spec.shift_map[s]:
                    for a, v in reduce_product(b, pair).items():
                        relation[(a, c)] = relation.get((a, c), 0) + sign * v
                relations.append(relation)
    rows = {i: {column[coordinate]: v for coordinate, v in relation.items()}
            for i, relation in enumerate(relations)}
    reduced, pivots = rref(sparse_matrix(rows, len(rows), len(coordinates)))
    pivot_rows = {j: i for i, j in enumerate(pivots)}
    basis = tuple(x for j, x in enumerate(coordinates) if j not in pivot_rows)
    normal_forms: Dict[ModuleCoordinate, Vector] = {}
    for j, x in enumerate(coordinates):
        if j not in pivot_rows:
            normal_forms[x] = {x: QQ(1)}
        else:
            row = reduced.get(pivot_rows[j], {})
            normal_forms[x] = {coordinates[i]: -v for i, v in row.items() if i != j and v}
    piece = ModuleSlice(degree=degree, weight=tuple(weight), coordinates=coordinates, basis=basis,
                        normal_forms=normal_forms, relations=tuple(relations))
    _check_submodule(spec, piece)
    return piece


def _check_submodule(spec: SuperfieldSpec, piece: ModuleSlice):
    """λ乘以低一次的平移像必须落在本片的平移像里，d 才能下降到商复形"""
    if not spec.has_shift or piece.degree < 2:
        return
    for pair, pair_weight in enumerate(PAIR_WEIGHTS):
        lower = sub(piece.weight, pair_weight)
        if not any(_ring_basis(piece.degree - 1, add(lower, w)) for w in spec.field_weights):
            continue
        for relation in module_slice(spec, piece.degree - 1, lower).relations:
            if piece.reduce(_multiply_into(spec, relation, pair)):
                raise ComplexError(f"{spec.name}: shift image not stable under lambda_{PAIRS[pair]} "
                                   f"at degree {piece.degree}, weight {piece.weight}")


def multiply(spec: SuperfieldSpec, degree: int, weight: GLWeight, coordinate: ModuleCoordinate,
             pair: int) -> Vector:
    """λ_pair 作用在商模基元上，结果用 (degree+1, weight+pair权) 片的基表示"""
    target = module_slice(spec, degree + 1, add(weight, PAIR_WEIGHTS[pair]))
    return target.reduce(_multiply_into(spec, {coordinate: 1}, pair))


@dataclass
class BlockComplex:
    """
    固定总次数n和块键κ的商复形 ∧θ ⊗ (平移商模)
    F[g] 是 (g, n−g) 处的基元素，D[g]: F[g] → F[g+1]
    """
    spec: SuperfieldSpec
    n: int
    key: GLWeight
    lambda_max: Optional[int] = None
    elements: Dict[int, List[Element]] = field(default_factory=dict)
    differentials: Dict[int, object] = field(default_factory=dict)
    _ranks: Dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def degrees(self) -> List[int]:
        """上同调所在的λ次数"""
        top = self.n if self.lambda_max is None else min(self.n, self.lambda_max)
        return [g for g in sorted(self.elements) if g <= top]

    @property
    def is_empty(self) -> bool:
        return not any(self.elements.get(g) for g in self.degrees)

    def dims(self) -> Dict[Tuple[int, int], int]:
        """(g, k) -> 商空间维数"""
        return {(g, self.n - g): len(self.elements[g]) for g in self.degrees}

    def rank(self, g: int) -> int:
        if g not in self.differentials:
            return 0
        if g not in self._ranks:
            self._ranks[g] = rank(self.differentials[g])
        return self._ranks[g]

    def verify(self):
        for g in sorted(self.differentials):
            if g + 1 in self.differentials:
                if not is_zero(matmul(self.differentials[g + 1], self.differentials[g])):
                    raise ComplexError(f"d^2 != 0 in block {self.key} at n={self.n}, g={g}")

    def cohomology(self) -> Dict[Tuple[int, int], int]:
        out = {}
        for g in self.degrees:
            h = len(self.elements[g]) - self.rank(g) - self.rank(g - 1)
            if h < 0:
                raise ComplexError(f"negative cohomology dimension {h} in block {self.key} "
                                   f"at (g, k) = ({g}, {self.n - g})")
            if h:
                out[(g, self.n - g)] = h
        return out


def _elements(spec: SuperfieldSpec, key: GLWeight, g: int, k: int) -> List[Element]:
    if g < 0 or not 0 <= k <= THETA_COUNT:
        return []
    found = []
    for mask in _masks_of_size(k):
        piece = module_slice(spec, g, sub(key, _theta_weight(mask)))
        found.extend((a, mask, c) for a, c in piece.basis)
    return found


def _differential_columns(spec: SuperfieldSpec, key: GLWeight, g: int, elements: List[Element],
                          index: Dict[Element, int]) -> List[Dict[int, object]]:
    columns = []
    for a, mask, c in elements:
        weight = sub(key, _theta_weight(mask))
        column: Dict[int, object] = {}
        for i in range(THETA_COUNT):
            if not mask >> i & 1:
                continue
            sign = -1 if bin(mask & ((1 << i) - 1)).count('1') % 2 else 1
            for (a2, c2), v in multiply(spec, g, weight, (a, c), i).items():
                row = index[(a2, mask ^ (1 << i), c2)]
                column[row] = column.get(row, 0) + sign * v
        columns.append(column)
    return columns


def build_zero_mode_complex(spec: SuperfieldSpec, n: int, key: GLWeight,
                            lambda_max: Optional[int] = None) -> BlockComplex:
    """
    构造总次数n、块键κ的商复形并检验 d² = 0
    lambda_max 给定时只搭到λ次数 lambda_max+1，够算 g ≤ lambda_max 的上同调
    """
    if n < 0:
        raise ValueError(f"total degree must be non-negative, got {n}")
    block = BlockComplex(spec=spec, n=n, key=tuple(key), lambda_max=lambda_max)
    top = n if lambda_max is None else min(n, lambda_max + 1)
    for g in range(max(0, n - THETA_COUNT), top + 1):
        block.elements[g] = _elements(spec, block.key, g, n - g)
    for g, elements in block.elements.items():
        if g + 1 in block.elements and (lambda_max is None or g <= lambda_max):
            index = {e: i for i, e in enumerate(block.elements[g + 1])}
            block.differentials[g] = columns_matrix(
                _differential_columns(spec, block.key, g, elements, index), len(block.elements[g + 1]))
    block.verify()
    return block



def _non_decreasing(length: int, low: int, high: int, total: int) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        if total == 0:
            yield ()
        return
    for x in range(low, high + 1):
        if x * length > total:
            break
        for rest in _non_decreasing(length - 1, x, high, total - x):
            yield (x,) + rest


def _all_keys(low: int, high: int, total: int, length: int = RANK) -> Iterator[Tuple[int, ...]]:
    if length == 0:
        if total == 0:
            yield ()
        return
    for x in range(low, high + 1):
        remaining = total - x
        if low * (length - 1) <= remaining <= high * (length - 1):
            for rest in _all_keys(low, high, remaining, length - 1):
                yield (x,) + rest


def block_keys(spec: SuperfieldSpec, n: int, dominant_only: bool = True) -> List[GLWeight]:
    """
    块键 κ = (λ权 + θ权 − 场权)，坐标落在 [−1, n+1]
    分量权是 −κ，所以支配块对应单调不减的κ
    """
    total = 2 * n - spec.weight_offset
    if dominant_only:
        return list(_non_decreasing(RANK, -1, n + 1, total))
    return list(_all_keys(-1, n + 1, total))


@dataclass
class CohomologyTable:
    """(g, k) -> 上同调的分量模"""
    spec: SuperfieldSpec
    n_max: int
    lambda_max: Optional[int] = None
    entries: Dict[Tuple[int, int], VirtualModule] = field(default_factory=dict)

    def module(self, g: int, k: int) -> VirtualModule:
        return self.entries.get((g, k), VirtualModule.zero(sl5()))

    def sorted_entries(self) -> List[Tuple[Tuple[int, int], VirtualModule]]:
        return sorted(self.entries.items())

    def euler_series(self) -> RepSeries:
        """Σ (−1)^k H_{g,k} t^{g+k}"""
        coefficients: Dict[int, VirtualModule] = {}
        for (g, k), value in self.entries.items():
            signed = -value if k % 2 else value
            coefficients[g + k] = coefficients.get(g + k, VirtualModule.zero(sl5())) + signed
        return RepSeries(sl5(), self.n_max, coefficients)

    def to_report(self) -> CohomologyReport:
        return CohomologyReport(
            field=self.spec.name, n_max=self.n_max, lambda_max=self.lambda_max,
            classes=[CohomologyClass(lambda_degree=g, theta_degree=k, modules=terms_of(value))
                     for (g, k), value in self.sorted_entries()])


def _block_cohomology(spec: SuperfieldSpec, n: int, key: GLWeight,
                      lambda_max: Optional[int]) -> Tuple[GLWeight, Dict[Tuple[int, int], int]]:
    block = build_zero_mode_complex(spec, n, key, lambda_max)
    if block.is_empty:
        return block.key, {}
    result = block.cohomology()
    if result:
        logger.debug(f"{spec.name} n={n} block {block.key}: {result}")
    return block.key, result


def zero_mode_cohomology(spec: SuperfieldSpec, n_max: int = DEFAULT_N_MAX, workers: int = 1,
                         full_weights: bool = False, lambda_max: Optional[int] = None) -> CohomologyTable:
    """
    逐个总次数、逐个权块计算上同调维数，再合成为不可约模
    full_weights=True 时计算所有权块并检验Weyl不变性；lambda_max 限制λ次数
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    if lambda_max is not None and lambda_max < 0:
        raise ValueError(f"lambda_max must be non-negative, got {lambda_max}")
    root_system = sl5()
    cap = "" if lambda_max is None else f", lambda-degree <= {lambda_max}"
    logger.info(f"Computing zero-mode cohomology of the {spec.name} field up to n={n_max}{cap}")
    table = CohomologyTable(spec=spec, n_max=n_max, lambda_max=lambda_max)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        for n in range(n_max + 1):
            keys = block_keys(spec, n, dominant_only=not full_weights)
            results = sorted(executor.map(lambda key: _block_cohomology(spec, n, key, lambda_max), keys))
            multiplicities: Dict[Tuple[int, int], Dict[Weight, int]] = {}
            for key, dims in results:
                labels = dynkin_labels(_neg(key))
                for bidegree, h in dims.items():
                    bucket = multiplicities.setdefault(bidegree, {})
                    bucket[labels] = bucket.get(labels, 0) + h
            for bidegree, chars in sorted(multiplicities.items()):
                if full_weights:
                    decomposition = decompose_character(root_system, chars)
                else:
                    decomposition = decompose_dominant(root_system, chars)
                module = VirtualModule(root_system, decomposition)
                if not module.is_zero:
                    table.entries[bidegree] = module
                    logger.info(f"{spec.name} H{bidegree} = {module}")
    return table


def euler_characteristic_crosscheck(truncation: int = 8, table: Optional[CohomologyTable] = None,
                                    workers: int = 1) -> IdentityReport:
    """标量场：Σ(−1)^k H_{g,k} t^{g+k} 与 Z_λ ⊗ (1−t)^{(0010)} 逐项比较"""
    if table is None:
        table = zero_mode_cohomology(SCALAR, truncation, workers=workers)
    elif table.spec.name != 'scalar':
        raise ValueError("the Euler characteristic closed form is only available for the scalar field")
    truncation = min(truncation, table.n_max)
    if table.lambda_max is not None:
        # t^p 需要 g ≤ p 的全部格子
        truncation = min(truncation, table.lambda_max)
    lhs = table.euler_series().truncate(truncation)
    rhs = constrained_scalar_series(truncation)
    mismatches = [
        DegreeMismatch(degree=p, expected=str(rhs.coefficient(p)), actual=str(lhs.coefficient(p)))
        for p in range(truncation + 1) if lhs.coefficient(p) != rhs.coefficient(p)
    ]
    for mismatch in mismatches:
        logger.error(f"Euler characteristic mismatch at t^{mismatch.degree}: "
                     f"cohomology {mismatch.actual}, series {mismatch.expected}")
    return IdentityReport(name='euler_characteristic', truncation=truncation, passed=not mismatches,
                          mismatches=mismatches, details={"series": str(rhs)})


def field_series(spec: SuperfieldSpec, truncation: int = DEFAULT_N_MAX) -> RepSeries:
    """实验性：θ次数0处各λ次数的商空间（平移后）分解"""
    root_system = sl5()
    coefficients: Dict[int, VirtualModule] = {}
    for g in range(truncation + 1):
        chars: Dict[Weight, int] = {}
        for key in block_keys(spec, g):
            dimension = module_slice(spec, g, key).dimension
            if dimension:
                labels = dynkin_labels(_neg(key))
                chars[labels] = chars.get(labels, 0) + dimension
        coefficients[g] = VirtualModule(root_system, decompose_dominant(root_system, chars))
    return RepSeries(root_system, truncation, coefficients)


def experimental_field_character(spec: SuperfieldSpec, truncation: int = DEFAULT_N_MAX) -> RepSeries:
    """实验性，不保证正确：field_series ⊗ Z_λ^{-1}"""
    logger.warning(f"experimental_field_character({spec.name}) carries no correctness claim")
    return field_series(spec, truncation) * inverse(minimal_orbit_series(truncation))
