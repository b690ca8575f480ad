# -*- coding: utf-8 -*-
"""
有理数上的稀疏精确线性代数（sympy DomainMatrix）
"""

from typing import Any, Dict, List, Mapping, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

SparseRows = Dict[int, Dict[int, Any]]


def sparse_matrix(rows: Mapping[int, Mapping[int, Any]], nrows: int, ncols: int) -> DomainMatrix:
    clean: SparseRows = {}
    for i, row in rows.items():
        entries = {j: QQ.convert(v) for j, v in row.items() if v}
        if entries:
            clean[i] = entries
    return DomainMatrix(clean, (nrows, ncols), QQ)


def columns_matrix(columns: Sequence[Mapping[int, Any]], nrows: int) -> DomainMatrix:
    """按列给出的稀疏向量拼成矩阵"""
    rows: SparseRows = {}
    for j, column in enumerate(columns):
        for i, v in column.items():
            if v:
                rows.setdefault(i, {})[j] = v
    return sparse_matrix(rows, nrows, len(columns))


def rank(matrix: DomainMatrix) -> int:
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return 0
    return matrix.rank()


def matmul(left: DomainMatrix, right: DomainMatrix) -> DomainMatrix:
    return left.matmul(right)


def is_zero(matrix: DomainMatrix) -> bool:
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return True
    return matrix.is_zero_matrix


def rref(matrix: DomainMatrix) -> Tuple[Dict[int, Dict[int, Any]], Tuple[int, ...]]:
    """返回(行简化阶梯形的稀疏行, 主元列)"""
    nrows, ncols = matrix.shape
    if nrows == 0 or ncols == 0:
        return {}, ()
    reduced, pivots = matrix.to_sparse().rref()
    rows = {i: dict(row) for i, row in reduced.to_sparse().rep.items()}
    return rows, tuple(pivots)

