#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
表示值幂级数测试：求逆、几何因子以及两个配分函数恒等式
"""

import logging
import random
from itertools import product

import pytest

from src.algebra.koszul import (
    constrained_scalar_closed_form,
    constrained_scalar_series,
    minimal_orbit_series,
    on_shell_scalar_closed_form,
    on_shell_scalar_series,
)
from src.algebra.repring import VirtualModule, parse_module, sl5
from src.algebra.repseries import (
    RepSeries,
    geometric_factor,
    inverse,
    mul,
    series_identity_check,
    sigma_series,
)
from src.errors import SeriesError
from testing_utils import run_tests

logger = logging.getLogger('test_series')

N = 8


def test_minimal_orbit_series():
    z = minimal_orbit_series(N)
    assert z.coefficient(0) == VirtualModule.trivial(sl5())
    assert z.coefficient(1) == parse_module("(0010)")
    assert z.coefficient(2).dim == 50
    assert z.coefficient(3).dim == 175
    with pytest.raises(SeriesError):
        minimal_orbit_series(-1)
    logger.info("✅ Minimal orbit series test passed")


def test_inverse():
    z = minimal_orbit_series(N)
    z_inverse = inverse(z)
    assert z_inverse.coefficient(1) == -parse_module("(0010)")
    assert z_inverse.coefficient(2) == parse_module("(1000)+(0101)")
    assert z_inverse.coefficient(2).dim == 50
    assert (z * z_inverse).is_unit
    assert inverse(z_inverse) == z
    assert inverse(RepSeries.unit(sl5(), N)).is_unit
    logger.info("✅ Inverse test passed")


def test_inverse_requires_unit_constant():
    doubled = RepSeries(sl5(), 3, {0: parse_module("2(0000)")})
    with pytest.raises(SeriesError):
        inverse(doubled)
    logger.info("✅ Inverse precondition test passed")


def test_geometric_factors():
    theta = parse_module("(0010)")
    symmetric = geometric_factor(theta, 1, 'minus', N)
    alternating = geometric_factor(theta, 1, 'plus', N)
    assert symmetric.coefficient(2) == parse_module("(0020)+(1000)")
    assert alternating.coefficient(1) == -theta
    assert alternating.coefficient(2) == parse_module("(0101)")
    assert (symmetric * alternating).is_unit

    spaced = geometric_factor(parse_module("(1000)"), 2, 'minus', N)
    assert spaced.degrees() == [0, 2, 4, 6, 8]
    with pytest.raises(SeriesError):
        geometric_factor(theta, 0, 'minus', N)
    with pytest.raises(SeriesError):
        geometric_factor(theta, 1, 'sideways', N)
    logger.info("✅ Geometric factor test passed")


def test_constrained_scalar_identity():
    lhs = constrained_scalar_series(N)
    report = series_identity_check(lhs, constrained_scalar_closed_form(N), 'constrained_scalar')
    assert report.passed, report.mismatches
    assert lhs.degrees() == [0, 2, 3, 5]
    assert lhs.coefficient(5) == -VirtualModule.trivial(sl5())
    logger.info("✅ Constrained scalar identity test passed")


def test_on_shell_scalar_identity():
    lhs = on_shell_scalar_series(N)
    report = series_identity_check(lhs, on_shell_scalar_closed_form(N), 'on_shell_scalar')
    assert report.passed, report.mismatches
    assert lhs.coefficient(3) == parse_module("(0001)")
    assert lhs.coefficient(4) == -parse_module("(0100)")
    assert lhs.coefficient(5) == parse_module("(1001)")
    assert lhs.coefficient(6) == -parse_module("(1100)")
    logger.info("✅ On-shell scalar identity test passed")


def test_identity_report_lists_mismatches():
    report = series_identity_check(minimal_orbit_series(4), RepSeries.unit(sl5(), 4), 'broken')
    assert not report.passed
    assert [m.degree for m in report.mismatches] == [1, 2, 3, 4]
    assert report.mismatches[0].actual == "(0010)"
    logger.info("✅ Identity report test passed")


def test_text_and_json():
    series = constrained_scalar_closed_form(5)
    assert str(series) == "(0000) + -(1000) t^2 + (0001) t^3 + -(0000) t^5 + O(t^6)"
    data = series.to_json()
    assert data["truncation"] == 5
    assert [entry["degree"] for entry in data["coefficients"]] == [0, 2, 3, 5]
    assert RepSeries.from_json(sl5(), data) == series
    logger.info("✅ Text and JSON test passed")


def labels_up_to(bound: int):
    return list(product(range(bound + 1), repeat=4))


def random_series(rng: random.Random, truncation: int) -> RepSeries:
    coefficients = {}
    for degree in range(truncation + 1):
        terms = {w: rng.randint(-2, 2) for w in rng.sample(labels_up_to(1), 3)}
        coefficients[degree] = VirtualModule(sl5(), terms)
    coefficients[0] = VirtualModule.trivial(sl5())
    return RepSeries(sl5(), truncation, coefficients)


def test_sigma_times_exterior_is_unit():
    for labels in labels_up_to(2):
        x = VirtualModule.irreducible(sl5(), labels)
        order = 3 if max(labels) <= 1 else 2
        product_series = sigma_series(x, 1, order) * geometric_factor(x, 1, 'plus', order)
        assert product_series.is_unit, labels
    logger.info("✅ Sigma times exterior test passed")


def test_mul_is_associative():
    rng = random.Random(510)
    for _ in range(5):
        a, b, c = (random_series(rng, 3) for _ in range(3))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, b) == mul(b, a)
    logger.info("✅ Series associativity test passed")


def run_all_tests():
    """运行所有测试"""
    return run_tests("series", [
        ("Minimal Orbit Series", test_minimal_orbit_series),
        ("Inverse", test_inverse),
        ("Inverse Precondition", test_inverse_requires_unit_constant),
        ("Geometric Factors", test_geometric_factors),
        ("Constrained Scalar Identity", test_constrained_scalar_identity),
        ("On-shell Scalar Identity", test_on_shell_scalar_identity),
        ("Identity Report", test_identity_report_lists_mismatches),
        ("Text and JSON", test_text_and_json),
        ("Sigma Times Exterior", test_sigma_times_exterior_is_unit),
        ("Series Associativity", test_mul_is_associative),
    ])


if __name__ == "__main__":
    run_all_tests()
