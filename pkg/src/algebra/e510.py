# -*- coding: utf-8 -*-
"""
例外超代数E(5,10)
层级模、余伴随生成元谱，以及用多项式无散度向量场和闭2-形式实现的具体模型
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import comb
from typing import Dict, List, Tuple

from sympy.combinatorics import Permutation
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..errors import ConstraintError, WeightError
from ..models import DimensionRow, E510Report, IdentityReport
from .koszul import GeneratorSpectrum, parity_of
from .liecore import weyl_dim
from .linalg import columns_matrix, rank
from .repring import VirtualModule, format_weight, sl5

logger = logging.getLogger('e510')

DIM = 5
PAIRS: Tuple[Tuple[int, int], ...] = tuple((m, n) for m in range(DIM) for n in range(m + 1, DIM))
PAIR_INDEX: Dict[Tuple[int, int], int] = {pair: i for i, pair in enumerate(PAIRS)}
TRIPLES: Tuple[Tuple[int, int, int], ...] = tuple(
    (m, n, p) for m in range(DIM) for n in range(m + 1, DIM) for p in range(n + 1, DIM))

# ε^{12345} = 1
EPSILON: Dict[Tuple[int, ...], int] = {
    perm: Permutation(list(perm)).signature() for perm in permutations(range(DIM))
}


def level_module(level: int) -> Tuple[VirtualModule, str]:
    """第2−2i层为(100i)偶，第1−2i层为(001i)奇"""
    if level > 2:
        raise WeightError(f"E(5,10) has finite depth: no level {level} above 2")
    root_system = sl5()
    if level % 2 == 0:
        i = (2 - level) // 2
        return VirtualModule.irreducible(root_system, (1, 0, 0, i)), 'even'
    i = (1 - level) // 2
    return VirtualModule.irreducible(root_system, (0, 0, 1, i)), 'odd'


def coadjoint_generator_spectrum(truncation: int) -> GeneratorSpectrum:
    """E(5,10)第ℓ层的共轭放在B(E4)第5−ℓ层"""
    if truncation < 3:
        raise ValueError(f"coadjoint spectrum starts at level 3, got truncation {truncation}")
    entries = []
    for b_level in range(3, truncation + 1):
        value, _ = level_module(5 - b_level)
        entries.append((b_level, value.conjugate(), parity_of(b_level)))
    return GeneratorSpectrum(entries=tuple(entries))


def level_spectrum(truncation: int) -> List[Tuple[int, VirtualModule, str]]:
    """E(5,10)第2层到第5−N层，与B(E4)第3..N层一一对应"""
    if truncation < 3:
        raise ValueError(f"level spectrum needs truncation >= 3, got {truncation}")
    return [(level, *level_module(level)) for level in range(2, 4 - truncation, -1)]


# 多项式模型

@lru_cache(maxsize=None)
def polynomial_ring(parameters: int = 0) -> PolyRing:
    """QQ[x1..x5]，可附加符号参数 s1..sk（只对x求导）"""
    names = [f"x{m + 1}" for m in range(DIM)] + [f"s{i + 1}" for i in range(parameters)]
    return ring(",".join(names), QQ)[0]


def _d(poly: PolyElement, m: int) -> PolyElement:
    return poly.diff(poly.ring.gens[m])


@dataclass(frozen=True, eq=False)
class PolyVectorField:
    """ξ = ξ^m ∂_m"""
    components: Tuple[PolyElement, ...]

    @property
    def ring(self) -> PolyRing:
        return self.components[0].ring

    @classmethod
    def zero(cls, R: PolyRing) -> 'PolyVectorField':
        return cls(tuple(R.zero for _ in range(DIM)))

    def __add__(self, other: 'PolyVectorField') -> 'PolyVectorField':
        return PolyVectorField(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: 'PolyVectorField') -> 'PolyVectorField':
        return PolyVectorField(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> 'PolyVectorField':
        return PolyVectorField(tuple(-a for a in self.components))

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyVectorField) and all(
            a == b for a, b in zip(self.components, other.components))

    @property
    def is_zero(self) -> bool:
        return not any(self.components)


@dataclass(frozen=True, eq=False)
class PolyTwoForm:
    """χ = Σ_{m<n} χ_{mn} dx^m∧dx^n，分量按PAIRS排列"""
    components: Tuple[PolyElement, ...]

    @property
    def ring(self) -> PolyRing:
        return self.components[0].ring

    @classmethod
    def zero(cls, R: PolyRing) -> 'PolyTwoForm':
        return cls(tuple(R.zero for _ in PAIRS))

    def get(self, m: int, n: int) -> PolyElement:
        if m == n:
            return self.ring.zero
        if m < n:
            return self.components[PAIR_INDEX[(m, n)]]
        return -self.components[PAIR_INDEX[(n, m)]]

    def __add__(self, other: 'PolyTwoForm') -> 'PolyTwoForm':
        return PolyTwoForm(tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: 'PolyTwoForm') -> 'PolyTwoForm':
        return PolyTwoForm(tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> 'PolyTwoForm':
        return PolyTwoForm(tuple(-a for a in self.components))

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyTwoForm) and all(
            a == b for a, b in zip(self.components, other.components))

    @property
    def is_zero(self) -> bool:
        return not any(self.components)


@dataclass(frozen=True, eq=False)
class E510Element:
    even: PolyVectorField
    odd: PolyTwoForm

    @classmethod
    def from_vector(cls, xi: PolyVectorField) -> 'E510Element':
        return cls(xi, PolyTwoForm.zero(xi.ring))

    @classmethod
    def from_form(cls, chi: PolyTwoForm) -> 'E510Element':
        return cls(PolyVectorField.zero(chi.ring), chi)

    def __add__(self, other: 'E510Element') -> 'E510Element':
        return E510Element(self.even + other.even, self.odd + other.odd)

    def __sub__(self, other: 'E510Element') -> 'E510Element':
        return E510Element(self.even - other.even, self.odd - other.odd)

    def __neg__(self) -> 'E510Element':
        return E510Element(-self.even, -self.odd)

    def __eq__(self, other) -> bool:
        return isinstance(other, E510Element) and self.even == other.even and self.odd == other.odd

    @property
    def is_zero(self) -> bool:
        return self.even.is_zero and self.odd.is_zero

    def homogeneous_parts(self) -> List[Tuple[int, 'E510Element']]:
        parts = []
        if not self.even.is_zero:
            parts.append((0, E510Element.from_vector(self.even)))
        if not self.odd.is_zero:
            parts.append((1, E510Element.from_form(self.odd)))
        return parts


def divergence(xi: PolyVectorField) -> PolyElement:
    total = xi.ring.zero
    for m, component in enumerate(xi.components):
        total += _d(component, m)
    return total


def exterior_derivative(chi: PolyTwoForm) -> Tuple[PolyElement, ...]:
    """(dχ)_{mnp} = ∂_mχ_{np} − ∂_nχ_{mp} + ∂_pχ_{mn}，m<n<p"""
    return tuple(
        _d(chi.get(n, p), m) - _d(chi.get(m, p), n) + _d(chi.get(m, n), p)
        for m, n, p in TRIPLES
    )


def is_divergence_free(xi: PolyVectorField) -> bool:
    return not divergence(xi)


def is_closed(chi: PolyTwoForm) -> bool:
    return not any(exterior_derivative(chi))


def lie_derivative_vector(xi: PolyVectorField, eta: PolyVectorField) -> PolyVectorField:
    """[ξ,η]^m = ξ^n∂_nη^m − η^n∂_nξ^m"""
    R = xi.ring
    out = []
    for m in range(DIM):
        total = R.zero
        for n in range(DIM):
            if xi.components[n]:
                total += xi.components[n] * _d(eta.components[m], n)
            if eta.components[n]:
                total -= eta.components[n] * _d(xi.components[m], n)
        out.append(total)
    return PolyVectorField(tuple(out))


def lie_derivative_form(xi: PolyVectorField, chi: PolyTwoForm) -> PolyTwoForm:
    """(L_ξχ)_{mn} = ξ^p∂_pχ_{mn} + χ_{pn}∂_mξ^p + χ_{mp}∂_nξ^p"""
    R = chi.ring
    gradients = [[_d(xi.components[p], m) for m in range(DIM)] for p in range(DIM)]
    out = []
    for m, n in PAIRS:
        total = R.zero
        for p in range(DIM):
            if xi.components[p]:
                total += xi.components[p] * _d(chi.get(m, n), p)
            if gradients[p][m]:
                total += chi.get(p, n) * gradients[p][m]
            if gradients[p][n]:
                total += chi.get(m, p) * gradients[p][n]
        out.append(total)
    return PolyTwoForm(tuple(out))


def star_wedge(chi: PolyTwoForm, psi: PolyTwoForm) -> PolyVectorField:
    """⋆(χ∧ψ)^r = ε^{mnpqr} χ_{mn} ψ_{pq}，对全部指标求和"""
    R = chi.ring
    out = [R.zero for _ in range(DIM)]
    for (m, n), a in zip(PAIRS, chi.components):
        if not a:
            continue
        for (p, q), b in zip(PAIRS, psi.components):
            if not b or len({m, n, p, q}) < 4:
                continue
            r = ({0, 1, 2, 3, 4} - {m, n, p, q}).pop()
            out[r] += 4 * EPSILON[(m, n, p, q, r)] * a * b
    return PolyVectorField(tuple(out))


def check_constraints(element: E510Element):
    if not is_divergence_free(element.even):
        raise ConstraintError("even part is not divergence-free")
    if not is_closed(element.odd):
        raise ConstraintError("odd part is not closed")


def bracket(a: E510Element, b: E510Element, check: bool = True) -> E510Element:
    """[P_ξ,P_η]=P_{L_ξη}，[P_ξ,Q_χ]=Q_{L_ξχ}，[Q_χ,Q_ψ]=P_{⋆(χ∧ψ)}"""
    if check:
        check_constraints(a)
        check_constraints(b)
    even = lie_derivative_vector(a.even, b.even) + star_wedge(a.odd, b.odd)
    odd = lie_derivative_form(a.even, b.odd) - lie_derivative_form(b.even, a.odd)
    return E510Element(even, odd)


def jacobi_test(a: E510Element, b: E510Element, c: E510Element) -> E510Element:
    """分次Jacobi子 [a,[b,c]] − [[a,b],c] − (−1)^{|a||b|}[b,[a,c]]，逐齐次分量求和"""
    R = a.even.ring
    residual = E510Element(PolyVectorField.zero(R), PolyTwoForm.zero(R))
    for pa, x in a.homogeneous_parts():
        for pb, y in b.homogeneous_parts():
            for _, z in c.homogeneous_parts():
                term = bracket(x, bracket(y, z, False), False) - bracket(bracket(x, y, False), z, False)
                other = bracket(y, bracket(x, z, False), False)
                if pa * pb:
                    term = term + other
                else:
                    term = term - other
                residual = residual + term
    return residual


# 随机元素（按构造满足约束）

def _exponents(degree: int, variables: int = DIM) -> List[Tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(variables), degree):
        exponent = [0] * variables
        for v in combo:
            exponent[v] += 1
        out.append(tuple(exponent))
    return out


def _random_coefficient(rng: random.Random) -> int:
    return rng.choice([-3, -2, -1, 1, 2, 3])


def random_polynomial(R: PolyRing, rng: random.Random, max_degree: int, terms: int = 2) -> PolyElement:
    padding = (0,) * (R.ngens - DIM)
    data = {}
    for _ in range(terms):
        exponent = rng.choice(_exponents(rng.randint(0, max_degree))) + padding
        data[exponent] = data.get(exponent, 0) + _random_coefficient(rng)
    return R.from_dict({k: v for k, v in data.items() if v})


def random_vector_field(R: PolyRing, rng: random.Random, max_degree: int) -> PolyVectorField:
    """平面旋度之和加一个无迹线性部分"""
    components = [R.zero for _ in range(DIM)]
    for _ in range(2):
        i, j = rng.sample(range(DIM), 2)
        f = random_polynomial(R, rng, max_degree + 1)
        components[i] += _d(f, j)
        components[j] -= _d(f, i)
    if max_degree >= 1:
        gens = R.gens
        trace = 0
        for m in range(DIM):
            for n in range(DIM):
                if m == DIM - 1 and n == DIM - 1:
                    value = -trace
                else:
                    value = rng.randint(-2, 2)
                    if m == n:
                        trace += value
                if value:
                    components[m] += value * gens[n]
    return PolyVectorField(tuple(components))


def exterior_derivative_one_form(beta: Tuple[PolyElement, ...]) -> PolyTwoForm:
    return PolyTwoForm(tuple(_d(beta[n], m) - _d(beta[m], n) for m, n in PAIRS))


def random_two_form(R: PolyRing, rng: random.Random, max_degree: int) -> PolyTwoForm:
    """χ = dβ"""
    beta = tuple(random_polynomial(R, rng, max_degree + 1) for _ in range(DIM))
    return exterior_derivative_one_form(beta)


def random_element(R: PolyRing, rng: random.Random, max_degree: int) -> E510Element:
    """奇偶混合的元素；每个分量以一定概率置零，覆盖所有奇偶组合"""
    even = random_vector_field(R, rng, max_degree)
    odd = random_two_form(R, rng, max_degree)
    choice = rng.randrange(3)
    if choice == 0:
        odd = PolyTwoForm.zero(R)
    elif choice == 1:
        even = PolyVectorField.zero(R)
    return E510Element(even, odd)


def _trial_seed(seed: int, trial: int) -> int:
    return seed * 1_000_003 + trial


def _run_trial(seed: int, trial: int, max_degree: int) -> List[str]:
    R = polynomial_ring()
    rng = random.Random(_trial_seed(seed, trial))
    a, b, c = (random_element(R, rng, max_degree) for _ in range(3))
    failures = []
    for label, (x, y) in (('ab', (a, b)), ('bc', (b, c)), ('ac', (a, c))):
        product = bracket(x, y)
        if not is_divergence_free(product.even) or not is_closed(product.odd):
            failures.append(f"trial {trial}: bracket {label} leaves the algebra")
    if not jacobi_test(a, b, c).is_zero:
        failures.append(f"trial {trial}: nonzero jacobiator")
    return failures


def run_jacobi_trials(trials: int = 100, max_degree: int = 3, seed: int = 7,
                      workers: int = 1) -> E510Report:
    """固定种子的随机三元组：闭合性与Jacobi恒等式"""
    logger.info(f"Running {trials} Jacobi trials (max degree {max_degree}, seed {seed})")
    with ThreadPoolExecutor(max_workers=max(1, workers)) as executor:
        results = list(executor.map(lambda t: _run_trial(seed, t, max_degree), range(trials)))
    failures = [message for result in results for message in result]
    for message in failures:
        logger.error(message)
    return E510Report(trials=trials, max_degree=max_degree, seed=seed, failures=failures)


def closure_check(trials: int = 20, max_degree: int = 3, seed: int = 7) -> IdentityReport:
    R = polynomial_ring()
    failures = []
    for trial in range(trials):
        rng = random.Random(_trial_seed(seed, trial))
        a, b = random_element(R, rng, max_degree), random_element(R, rng, max_degree)
        product = bracket(a, b)
        if not is_divergence_free(product.even):
            failures.append(f"trial {trial}: even part not divergence-free")
        if not is_closed(product.odd):
            failures.append(f"trial {trial}: odd part not closed")
    return IdentityReport(name='closure', truncation=max_degree, passed=not failures,
                          details={"trials": trials, "seed": seed, "failures": failures})


def key_identity_check(generic_terms: int = 3, seed: int = 7) -> IdentityReport:
    """
    γ = Σ s_i γ_i，γ_i 为系数次数≤2的稠密随机闭2-形式，s_i 为符号参数；
    L_{⋆(γ∧γ)}γ 作为 s 的多项式必须恒为零
    """
    R = polynomial_ring(generic_terms)
    rng = random.Random(seed)
    padding = (0,) * generic_terms
    monomials = [e for d in range(4) for e in _exponents(d)]
    gamma = PolyTwoForm.zero(R)
    for i in range(generic_terms):
        beta = tuple(
            R.from_dict({e + padding: c for e in monomials if (c := rng.randint(-5, 5))})
            for _ in range(DIM))
        piece = exterior_derivative_one_form(beta)
        parameter = R.gens[DIM + i]
        gamma = gamma + PolyTwoForm(tuple(parameter * c for c in piece.components))
    if not is_closed(gamma):
        raise ConstraintError("generic form is not closed")
    residual = lie_derivative_form(star_wedge(gamma, gamma), gamma)
    passed = residual.is_zero
    if not passed:
        logger.error("L_{*(g^g)} g does not vanish for the generic closed form")
    return IdentityReport(name='key_identity', truncation=2, passed=passed,
                          details={"generic_terms": generic_terms, "seed": seed})


def _divergence_rank(degree: int) -> int:
    if degree == 0:
        return 0
    targets = {e: i for i, e in enumerate(_exponents(degree - 1))}
    columns = []
    for m in range(DIM):
        for exponent in _exponents(degree):
            column = {}
            if exponent[m]:
                lowered = list(exponent)
                lowered[m] -= 1
                column[targets[tuple(lowered)]] = exponent[m]
            columns.append(column)
    return rank(columns_matrix(columns, len(targets)))


def _exterior_rank(degree: int) -> int:
    if degree == 0:
        return 0
    lower = _exponents(degree - 1)
    targets = {(t, e): i for i, (t, e) in enumerate((t, e) for t in range(len(TRIPLES)) for e in lower)}
    columns = []
    for m, n in PAIRS:
        for exponent in _exponents(degree):
            column: Dict[int, int] = {}
            for t, triple in enumerate(TRIPLES):
                if m not in triple or n not in triple:
                    continue
                p = next(x for x in triple if x not in (m, n))
                if not exponent[p]:
                    continue
                # χ_{mn} 在 (dχ)_{triple} 中的符号
                order = list(triple)
                sign = 1 if (order.index(p) % 2 == 0) else -1
                lowered = list(exponent)
                lowered[p] -= 1
                row = targets[(t, tuple(lowered))]
                column[row] = column.get(row, 0) + sign * exponent[p]
            columns.append(column)
    return rank(columns_matrix(columns, len(targets)))


def graded_dimension_crosscheck(i_max: int = 4) -> List[DimensionRow]:
    """系数次数i的无散度向量场与闭2-形式的维数对比 weyl_dim(100i)、(001i)"""
    root_system = sl5()
    rows = []
    for i in range(i_max + 1):
        cols = DIM * comb(i + 4, 4)
        counted = cols - (comb(i + 3, 4) if i >= 1 else 0)
        weight = (1, 0, 0, i)
        expected = weyl_dim(root_system, weight)
        by_rank = cols - _divergence_rank(i)
        rows.append(DimensionRow(degree=i, kind='vector', counted=counted, rank_based=by_rank,
                                 weyl=expected, module=format_weight(weight),
                                 equal=counted == by_rank == expected))

        cols = len(PAIRS) * comb(i + 4, 4)
        counted = sum((-1) ** j * comb(DIM, j) * comb(i + 2 - j + 4, 4)
                      for j in range(2, DIM + 1) if i + 2 - j >= 0)
        weight = (0, 0, 1, i)
        expected = weyl_dim(root_system, weight)
        by_rank = cols - _exterior_rank(i)
        rows.append(DimensionRow(degree=i, kind='two_form', counted=counted, rank_based=by_rank,
                                 weyl=expected, module=format_weight(weight),
                                 equal=counted == by_rank == expected))
    for row in rows:
        if not row.equal:
            logger.error(f"Dimension mismatch for {row.kind} of degree {row.degree}: {row}")
    return rows
