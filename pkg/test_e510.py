#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
E(5,10)测试：层级模、括号、闭合性、Jacobi恒等式与分次维数
"""

import logging
import random

import pytest

from src.algebra.e510 import (
    PAIR_INDEX,
    E510Element,
    PolyTwoForm,
    PolyVectorField,
    bracket,
    closure_check,
    divergence,
    exterior_derivative,
    graded_dimension_crosscheck,
    jacobi_test,
    key_identity_check,
    lie_derivative_form,
    lie_derivative_vector,
    level_module,
    level_spectrum,
    polynomial_ring,
    random_element,
    random_two_form,
    random_vector_field,
    run_jacobi_trials,
)
from src.algebra.repring import parse_module
from src.errors import ConstraintError, WeightError
from testing_utils import run_tests

logger = logging.getLogger('test_e510')


def constant_form(R, pair):
    components = [R.zero] * len(PAIR_INDEX)
    components[PAIR_INDEX[pair]] = R.one
    return PolyTwoForm(tuple(components))


def test_level_modules():
    assert level_module(2) == (parse_module("(1000)"), 'even')
    assert level_module(1) == (parse_module("(0010)"), 'odd')
    assert level_module(0) == (parse_module("(1001)"), 'even')
    assert level_module(-1) == (parse_module("(0011)"), 'odd')
    assert level_module(-2) == (parse_module("(1002)"), 'even')
    with pytest.raises(WeightError):
        level_module(3)
    logger.info("✅ Level module test passed")


def test_level_spectrum():
    spectrum = level_spectrum(6)
    text = ", ".join(f"{level}: {module}" for level, module, _ in spectrum)
    assert text == "2: (1000), 1: (0010), 0: (1001), -1: (0011)"
    assert [parity for _, _, parity in spectrum] == ['even', 'odd', 'even', 'odd']
    with pytest.raises(ValueError):
        level_spectrum(2)
    logger.info("✅ Level spectrum test passed")


def test_constant_form_bracket():
    R = polynomial_ring()
    chi = E510Element.from_form(constant_form(R, (0, 1)))
    psi = E510Element.from_form(constant_form(R, (2, 3)))
    product = bracket(chi, psi)
    assert product.odd.is_zero
    assert tuple(product.even.components) == (R.zero, R.zero, R.zero, R.zero, 4 * R.one)
    assert bracket(chi, chi).is_zero
    logger.info("✅ Constant form bracket test passed")


def test_constraint_error():
    R = polynomial_ring()
    x1 = R.gens[0]
    bad = E510Element.from_vector(PolyVectorField((x1, R.zero, R.zero, R.zero, R.zero)))
    good = E510Element.from_form(constant_form(R, (0, 1)))
    with pytest.raises(ConstraintError):
        bracket(bad, good)
    logger.info("✅ Constraint error test passed")


def test_jacobi_on_simple_elements():
    R = polynomial_ring()
    x = R.gens
    rotation = E510Element.from_vector(PolyVectorField((x[1], -x[0], R.zero, R.zero, R.zero)))
    chi = E510Element.from_form(constant_form(R, (0, 1)))
    psi = E510Element.from_form(constant_form(R, (2, 3)))
    assert jacobi_test(rotation, chi, psi).is_zero
    assert jacobi_test(chi, psi, chi).is_zero
    logger.info("✅ Jacobi test passed")


def test_bracket_graded_antisymmetry():
    R = polynomial_ring()
    rng = random.Random(23)
    for _ in range(3):
        vectors = [E510Element.from_vector(random_vector_field(R, rng, 2)) for _ in range(2)]
        forms = [E510Element.from_form(random_two_form(R, rng, 2)) for _ in range(2)]
        for a, b in [(vectors[0], vectors[1]), (vectors[0], forms[0]), (forms[0], vectors[1])]:
            assert bracket(a, b) == -bracket(b, a)
        # 奇-奇括号对称
        assert bracket(forms[0], forms[1]) == bracket(forms[1], forms[0])
    logger.info("✅ Graded antisymmetry test passed")


def test_derivatives():
    R = polynomial_ring()
    x = R.gens
    zero = R.zero
    xi = PolyVectorField((x[0], zero, zero, zero, zero))
    eta = PolyVectorField((x[1], zero, zero, zero, zero))
    assert divergence(xi) == R.one

    shear = PolyVectorField((zero, x[0], zero, zero, zero))
    lifted = PolyVectorField((x[1], zero, zero, zero, zero))
    assert lie_derivative_vector(shear, lifted) == PolyVectorField((x[0], -x[1], zero, zero, zero))
    assert lie_derivative_vector(xi, eta) == PolyVectorField((-x[1], zero, zero, zero, zero))

    squeeze = PolyVectorField((x[0], -x[1], zero, zero, zero))
    assert divergence(squeeze) == zero
    assert lie_derivative_form(squeeze, constant_form(R, (0, 2))) == constant_form(R, (0, 2))
    assert lie_derivative_form(squeeze, constant_form(R, (0, 1))).is_zero

    components = [zero] * len(PAIR_INDEX)
    components[PAIR_INDEX[(0, 1)]] = x[2]
    d_chi = exterior_derivative(PolyTwoForm(tuple(components)))
    assert d_chi[0] == R.one
    assert not any(d_chi[1:])
    logger.info("✅ Derivative test passed")


def test_random_elements_satisfy_constraints():
    R = polynomial_ring()
    rng = random.Random(11)
    for _ in range(6):
        assert not divergence(random_vector_field(R, rng, 2))
        assert not any(exterior_derivative(random_two_form(R, rng, 2)))
        element = random_element(R, rng, 2)
        assert not divergence(element.even)
        assert not any(exterior_derivative(element.odd))
    logger.info("✅ Random element test passed")


def test_random_trials():
    report = run_jacobi_trials(trials=4, max_degree=2, seed=7, workers=2)
    assert report.failures == []
    assert report.passed
    again = run_jacobi_trials(trials=4, max_degree=2, seed=7, workers=1)
    assert again.model_dump() == report.model_dump()
    assert closure_check(trials=4, max_degree=2, seed=7).passed
    logger.info("✅ Random trial test passed")


def test_key_identity():
    report = key_identity_check(generic_terms=2, seed=7)
    assert report.passed
    logger.info("✅ Key identity test passed")


def test_graded_dimensions():
    rows = graded_dimension_crosscheck(4)
    assert all(row.equal for row in rows)
    vectors = {row.degree: row.weyl for row in rows if row.kind == 'vector'}
    forms = {row.degree: row.weyl for row in rows if row.kind == 'two_form'}
    assert vectors == {0: 5, 1: 24, 2: 70, 3: 160, 4: 315}
    assert forms == {0: 10, 1: 40, 2: 105, 3: 224, 4: 420}
    assert len(rows) == 10
    logger.info("✅ Graded dimension test passed")


def run_all_tests():
    """运行所有测试"""
    return run_tests("e510", [
        ("Level Modules", test_level_modules),
        ("Level Spectrum", test_level_spectrum),
        ("Constant Form Bracket", test_constant_form_bracket),
        ("Constraint Error", test_constraint_error),
        ("Jacobi", test_jacobi_on_simple_elements),
        ("Graded Antisymmetry", test_bracket_graded_antisymmetry),
        ("Derivatives", test_derivatives),
        ("Random Elements", test_random_elements_satisfy_constraints),
        ("Random Trials", test_random_trials),
        ("Key Identity", test_key_identity),
        ("Graded Dimensions", test_graded_dimensions),
    ])


if __name__ == "__main__":
    run_all_tests()
