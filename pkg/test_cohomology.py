#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
纯旋量商环、超空间算符与零模上同调测试
"""

import logging

import pytest

from src.algebra.repring import parse_module
from src.superfields.pscohomology import (
    ONEFORM,
    SCALAR,
    VECTOR,
    SuperfieldSpec,
    block_keys,
    build_zero_mode_complex,
    euler_characteristic_crosscheck,
    experimental_field_character,
    field_series,
    module_slice,
    superfield_spec,
    zero_mode_cohomology,
)
from src.superfields.quotient_ring import PAIR_INDEX, lambda_quotient_basis
from src.superfields.superspace import D, Q, bracket_on_monomial, superspace_operator_check, torsion
from testing_utils import run_tests

logger = logging.getLogger('test_cohomology')

N_MAX = 5

SCALAR_TABLE = {
    (0, 0): "(0000)",
    (1, 1): "(1000)",
    (1, 2): "(0001)",
    (2, 3): "(0000)",
}

VECTOR_TABLE = {
    (0, 0): "(0001)",
    (0, 1): "(0100)",
    (1, 2): "(0010)",
    (1, 3): "(1000)",
}

ONEFORM_TABLE = {
    (0, 0): "(1000)",
    (0, 1): "(0001)",
    (1, 1): "(2000)",
    (1, 2): "(0000)+(1001)",
    (1, 3): "(0010)",
}


def as_text(table):
    return {bidegree: str(module) for bidegree, module in table.sorted_entries()}


def test_quotient_ring_dimensions():
    for degree, dim in [(0, 1), (1, 10), (2, 50), (3, 175)]:
        assert lambda_quotient_basis(degree).dimension == dim
    basis = lambda_quotient_basis(2)
    for monomial in basis.basis[:10]:
        assert basis.reduce(monomial) == {monomial: 1}
    with pytest.raises(ValueError):
        lambda_quotient_basis(-1)
    logger.info("✅ Quotient ring test passed")


def test_superspace_operators():
    report = superspace_operator_check(masks=[0, 1, 5, 1023])
    assert report.passed, report.details["failures"]
    assert report.details["theta_subsets"] == 4
    assert report.details["identities_checked"] == 4 * (100 + 2 * 55)

    q12, q34 = Q(PAIR_INDEX[(0, 1)]), Q(PAIR_INDEX[(2, 3)])
    assert bracket_on_monomial(q12, q34, 0, (0, 0, 0, 0, 1)) == {(0, (0, 0, 0, 0, 0)): 2}
    assert bracket_on_monomial(D(PAIR_INDEX[(0, 1)]), q34, 0, (0, 0, 0, 0, 1)) == {}
    assert bracket_on_monomial(D(PAIR_INDEX[(2, 3)]), q12, 0, (0, 0, 0, 0, 1)) == {}
    assert bracket_on_monomial(D(PAIR_INDEX[(2, 3)]), q12, 0, (1, 0, 0, 0, 0)) == {}
    assert bracket_on_monomial(q12, q34, 0, (1, 0, 0, 0, 0)) == {}
    logger.info("✅ Superspace operator test passed")


def test_torsion():
    assert torsion(PAIR_INDEX[(0, 1)], PAIR_INDEX[(2, 3)], 4) == 2
    assert torsion(PAIR_INDEX[(0, 2)], PAIR_INDEX[(1, 3)], 4) == -2
    assert torsion(PAIR_INDEX[(0, 1)], PAIR_INDEX[(0, 2)], 4) == 0
    logger.info("✅ Torsion test passed")


def test_superfield_presets():
    assert superfield_spec('scalar') is SCALAR
    assert VECTOR.has_shift and ONEFORM.has_shift
    assert not SCALAR.has_shift
    with pytest.raises(ValueError):
        superfield_spec('tensor')
    with pytest.raises(ValueError):
        SuperfieldSpec(name='bad', module=(1, 0, 0, 0), field_weights=((-1, 0, 0, 0, 0),),
                       shift_weights=((0, 0, 0, 0, 0),), shift_map=())
    logger.info("✅ Superfield preset test passed")


def test_vector_quotient_dimension():
    total = sum(build_zero_mode_complex(VECTOR, 1, key).dims().get((1, 0), 0)
                for key in block_keys(VECTOR, 1, dominant_only=False))
    assert total == 40
    logger.info("✅ Vector quotient dimension test passed")


def test_scalar_cohomology():
    table = zero_mode_cohomology(SCALAR, N_MAX, workers=2)
    assert as_text(table) == SCALAR_TABLE
    assert table.module(3, 0).is_zero

    report = table.to_report()
    assert report.field == 'scalar'
    assert (report.classes[0].lambda_degree, report.classes[0].theta_degree) == (0, 0)
    logger.info("✅ Scalar cohomology test passed")


def test_vector_cohomology():
    table = zero_mode_cohomology(VECTOR, N_MAX, workers=2)
    assert as_text(table) == VECTOR_TABLE
    logger.info("✅ Vector cohomology test passed")


def test_oneform_cohomology():
    table = zero_mode_cohomology(ONEFORM, N_MAX, workers=2)
    assert as_text(table) == ONEFORM_TABLE
    logger.info("✅ One-form cohomology test passed")


def test_full_weight_audit():
    dominant = zero_mode_cohomology(SCALAR, 3)
    full = zero_mode_cohomology(SCALAR, 3, full_weights=True)
    assert as_text(full) == as_text(dominant)
    logger.info("✅ Full weight audit test passed")


def test_euler_characteristic():
    table = zero_mode_cohomology(SCALAR, N_MAX)
    report = euler_characteristic_crosscheck(N_MAX, table=table)
    assert report.passed, report.mismatches
    assert table.euler_series().coefficient(2) == -parse_module("(1000)")

    with pytest.raises(ValueError):
        euler_characteristic_crosscheck(3, table=zero_mode_cohomology(VECTOR, 1))
    logger.info("✅ Euler characteristic test passed")


def test_experimental_field_series():
    series = field_series(VECTOR, 2)
    assert series.coefficient(0) == parse_module("(0001)")
    assert series.coefficient(1).dim == 40
    character = experimental_field_character(VECTOR, 2)
    assert character.coefficient(0) == parse_module("(0001)")
    logger.info("✅ Experimental field series test passed")


def test_lambda_degree_cap():
    key = block_keys(SCALAR, 6)[0]
    capped = build_zero_mode_complex(SCALAR, 6, key, lambda_max=2)
    assert max(capped.degrees) <= 2
    assert max(capped.elements) <= 3
    assert max(capped.differentials, default=-1) <= 2
    with pytest.raises(ValueError):
        zero_mode_cohomology(SCALAR, 3, lambda_max=-1)

    table = zero_mode_cohomology(SCALAR, 4, lambda_max=1)
    assert as_text(table) == {b: m for b, m in SCALAR_TABLE.items() if b[0] <= 1}
    assert table.to_report().lambda_max == 1
    assert euler_characteristic_crosscheck(4, table=table).truncation == 1
    logger.info("✅ Lambda degree cap test passed")


def test_module_slice_reduction():
    keys = block_keys(VECTOR, 1, dominant_only=False)
    assert sum(module_slice(VECTOR, 1, key).dimension for key in keys) == 40
    relations = 0
    for key in block_keys(VECTOR, 2):
        piece = module_slice(VECTOR, 2, key)
        for coordinate in piece.basis:
            assert piece.reduce({coordinate: 1}) == {coordinate: 1}
        for relation in piece.relations:
            assert piece.reduce(relation) == {}
        relations += len(piece.relations)
    assert relations > 0
    logger.info("✅ Module slice test passed")


def test_scalar_cohomology_full_range():
    """不限λ次数时标量场在 g ≥ 3 没有上同调"""
    table = zero_mode_cohomology(SCALAR, 8, workers=4)
    assert all(g < 3 for g, _ in table.entries)
    assert as_text(table) == SCALAR_TABLE
    assert euler_characteristic_crosscheck(8, table=table).passed
    logger.info("✅ Full range scalar cohomology test passed")


def test_tables_stable_to_degree_ten():
    for spec, expected in [(SCALAR, SCALAR_TABLE), (VECTOR, VECTOR_TABLE), (ONEFORM, ONEFORM_TABLE)]:
        at_eight = zero_mode_cohomology(spec, 8, workers=4, lambda_max=3)
        at_ten = zero_mode_cohomology(spec, 10, workers=4, lambda_max=3)
        assert as_text(at_eight) == as_text(at_ten) == expected, spec.name
    logger.info("✅ Table stability test passed")


def run_all_tests():
    """运行所有测试"""
    return run_tests("cohomology", [
        ("Quotient Ring", test_quotient_ring_dimensions),
        ("Superspace Operators", test_superspace_operators),
        ("Torsion", test_torsion),
        ("Superfield Presets", test_superfield_presets),
        ("Vector Quotient Dimension", test_vector_quotient_dimension),
        ("Scalar Cohomology", test_scalar_cohomology),
        ("Vector Cohomology", test_vector_cohomology),
        ("One-form Cohomology", test_oneform_cohomology),
        ("Full Weight Audit", test_full_weight_audit),
        ("Euler Characteristic", test_euler_characteristic),
        ("Experimental Field Series", test_experimental_field_series),
        ("Lambda Degree Cap", test_lambda_degree_cap),
        ("Module Slice", test_module_slice_reduction),
        ("Full Range Scalar Cohomology", test_scalar_cohomology_full_range),
        ("Table Stability", test_tables_stable_to_degree_ten),
    ])


if __name__ == "__main__":
    run_all_tests()
