# -*- coding: utf-8 -*-
"""
纯旋量约束 λ_{[mn}λ_{pq]} = 0 的商环
按环面权分片做有理行化简，非主元单项式构成基
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from sympy.polys.domains import QQ

from ..algebra.liecore import freudenthal_multiplicities, weyl_dim
from ..algebra.linalg import rref, sparse_matrix
from ..algebra.repring import sl5
from ..errors import ComplexError

logger = logging.getLogger('quotient_ring')

RANK = 5
PAIRS: Tuple[Tuple[int, int], ...] = tuple((m, n) for m in range(RANK) for n in range(m + 1, RANK))
PAIR_INDEX: Dict[Tuple[int, int], int] = {pair: i for i, pair in enumerate(PAIRS)}

GLWeight = Tuple[int, ...]
Monomial = Tuple[int, ...]


def unit(m: int) -> GLWeight:
    return tuple(1 if i == m else 0 for i in range(RANK))


def add(a: GLWeight, b: GLWeight) -> GLWeight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: GLWeight, b: GLWeight) -> GLWeight:
    return tuple(x - y for x, y in zip(a, b))


PAIR_WEIGHTS: Tuple[GLWeight, ...] = tuple(add(unit(m), unit(n)) for m, n in PAIRS)


def dynkin_labels(weight: GLWeight) -> Tuple[int, ...]:
    """GL(5)权 -> SL(5) Dynkin标签"""
    return tuple(weight[i] - weight[i + 1] for i in range(RANK - 1))


def _plucker_relations() -> List[Tuple[GLWeight, Tuple[Tuple[int, Monomial], ...]]]:
    """对每个r，{i<j<k<l}为其补集：λ_ijλ_kl − λ_ikλ_jl + λ_ilλ_jk"""
    relations = []
    for r in range(RANK):
        i, j, k, l = [x for x in range(RANK) if x != r]
        terms = []
        for sign, first, second in ((1, (i, j), (k, l)), (-1, (i, k), (j, l)), (1, (i, l), (j, k))):
            exponent = [0] * len(PAIRS)
            exponent[PAIR_INDEX[first]] += 1
            exponent[PAIR_INDEX[second]] += 1
            terms.append((sign, tuple(exponent)))
        weight = tuple(0 if x == r else 1 for x in range(RANK))
        relations.append((weight, tuple(terms)))
    return relations


PLUCKER_RELATIONS = _plucker_relations()


def monomial_weight(monomial: Monomial) -> GLWeight:
    weight = [0] * RANK
    for (m, n), a in zip(PAIRS, monomial):
        if a:
            weight[m] += a
            weight[n] += a
    return tuple(weight)


def is_valid_weight(degree: int, weight: GLWeight) -> bool:
    return (degree >= 0 and sum(weight) == 2 * degree
            and all(0 <= x <= degree for x in weight))


@lru_cache(maxsize=None)
def monomials_of_weight(degree: int, weight: GLWeight) -> Tuple[Monomial, ...]:
    """Sym^degree 中权为weight的全部单项式，按字典序降序"""
    if not is_valid_weight(degree, weight):
        return ()
    found: List[Monomial] = []
    exponent = [0] * len(PAIRS)

    def extend(index: int, remaining: List[int]):
        if index == len(PAIRS):
            if not any(remaining):
                found.append(tuple(exponent))
            return
        m, n = PAIRS[index]
        # 剩余的对只涉及指标大于m的坐标
        if any(remaining[x] for x in range(m)):
            return
        for a in range(min(remaining[m], remaining[n]) + 1):
            exponent[index] = a
            remaining[m] -= a
            remaining[n] -= a
            extend(index + 1, remaining)
            remaining[m] += a
            remaining[n] += a
        exponent[index] = 0

    extend(0, list(weight))
    return tuple(sorted(found, reverse=True))


@dataclass(frozen=True)
class QuotientSlice:
    """商环中固定次数、固定环面权的一片"""
    degree: int
    weight: GLWeight
    monomials: Tuple[Monomial, ...]
    basis: Tuple[Monomial, ...]
    normal_forms: Dict[Monomial, Dict[Monomial, object]]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def reduce(self, monomial: Monomial) -> Dict[Monomial, object]:
        return self.normal_forms[monomial]


@lru_cache(maxsize=None)
def quotient_slice(degree: int, weight: GLWeight) -> QuotientSlice:
    monomials = monomials_of_weight(degree, weight)
    column = {m: j for j, m in enumerate(monomials)}
    rows: Dict[int, Dict[int, int]] = {}
    if degree >= 2 and monomials:
        for relation_weight, terms in PLUCKER_RELATIONS:
            for base in monomials_of_weight(degree - 2, sub(weight, relation_weight)):
                row: Dict[int, int] = {}
                for sign, exponent in terms:
                    j = column[add(base, exponent)]
                    row[j] = row.get(j, 0) + sign
                rows[len(rows)] = row
    reduced, pivots = rref(sparse_matrix(rows, len(rows), len(monomials)))
    pivot_rows = {j: i for i, j in enumerate(pivots)}
    basis = tuple(m for j, m in enumerate(monomials) if j not in pivot_rows)
    normal_forms: Dict[Monomial, Dict[Monomial, object]] = {}
    for j, m in enumerate(monomials):
        if j not in pivot_rows:
            normal_forms[m] = {m: QQ(1)}
        else:
            row = reduced.get(pivot_rows[j], {})
            normal_forms[m] = {monomials[k]: -v for k, v in row.items() if k != j and v}

    # 基元权重数必须等于(0g00)中对应权的重数
    expected = freudenthal_multiplicities(sl5(), (0, degree, 0, 0)).get(dynkin_labels(weight), 0) \
        if monomials else 0
    if len(basis) != expected:
        raise ComplexError(
            f"quotient slice of degree {degree} and weight {weight} has dimension {len(basis)}, "
            f"expected {expected}")
    return QuotientSlice(degree=degree, weight=weight, monomials=monomials, basis=basis,
                         normal_forms=normal_forms)


def multiply_pair(monomial: Monomial, pair: int) -> Monomial:
    exponent = list(monomial)
    exponent[pair] += 1
    return tuple(exponent)


def reduce_product(monomial: Monomial, pair: int) -> Dict[Monomial, object]:
    """λ_pair · monomial 化为商环基上的组合"""
    product = multiply_pair(monomial, pair)
    return quotient_slice(sum(product), monomial_weight(product)).reduce(product)


def _weights_of_degree(degree: int) -> List[GLWeight]:
    out = []

    def extend(prefix: List[int], remaining: int):
        if len(prefix) == RANK - 1:
            if 0 <= remaining <= degree:
                out.append(tuple(prefix + [remaining]))
            return
        for x in range(min(degree, remaining) + 1):
            extend(prefix + [x], remaining - x)

    extend([], 2 * degree)
    return out


@dataclass(frozen=True)
class LambdaQuotientBasis:
    degree: int
    slices: Tuple[QuotientSlice, ...]

    @property
    def dimension(self) -> int:
        return sum(s.dimension for s in self.slices)

    @property
    def basis(self) -> List[Monomial]:
        return [m for s in self.slices for m in s.basis]

    def reduce(self, monomial: Monomial) -> Dict[Monomial, object]:
        return quotient_slice(self.degree, monomial_weight(monomial)).reduce(monomial)


def lambda_quotient_basis(degree: int) -> LambdaQuotientBasis:
    if degree < 0:
        raise ValueError(f"degree must be non-negative, got {degree}")
    slices = tuple(
        quotient_slice(degree, w) for w in _weights_of_degree(degree)
        if monomials_of_weight(degree, w)
    )
    basis = LambdaQuotientBasis(degree=degree, slices=slices)
    expected = weyl_dim(sl5(), (0, 0, degree, 0))
    if basis.dimension != expected:
        raise ComplexError(f"quotient ring in degree {degree} has dimension {basis.dimension}, "
                           f"expected {expected}")
    logger.debug(f"Quotient basis in degree {degree}: {basis.dimension}")
    return basis
