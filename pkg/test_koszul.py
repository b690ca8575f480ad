#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
层级剥离、自由生成定理与层级配对测试
"""

import logging

import pytest

from src.algebra.e510 import coadjoint_generator_spectrum
from src.algebra.koszul import (
    GeneratorSpectrum,
    LevelDecomposition,
    enveloping_series,
    extend_levels_by_pairing,
    free_superalgebra_uea,
    grading_sign_report,
    minimal_orbit_series,
    p4_non_containment_report,
    peel_levels,
    verify_free_generation,
)
from src.algebra.repring import VirtualModule, parse_module, sl5
from src.algebra.repseries import RepSeries
from src.errors import GradingError, PairingError, SeriesError
from testing_utils import run_tests

logger = logging.getLogger('test_koszul')

N = 6

EXPECTED_LEVELS = {
    1: "(0010)",
    2: "(1000)",
    3: "(0001)",
    4: "(0100)",
    5: "(1001)",
    6: "(0002)+(1100)",
}


def test_peeled_levels():
    levels = peel_levels(minimal_orbit_series(N), N)
    assert {p: str(r) for p, r in levels.sorted_levels()} == EXPECTED_LEVELS
    assert levels.parity(3) == 'odd'
    assert levels.parity(6) == 'even'
    assert levels.provenance == 'peeled'
    logger.info("✅ Peeled levels test passed")


def test_peeling_round_trip():
    z = minimal_orbit_series(N)
    levels = peel_levels(z, N)
    assert (enveloping_series(levels, N) * z).is_unit
    assert peel_levels(RepSeries.unit(sl5(), N)).levels == {}
    logger.info("✅ Peeling round trip test passed")


def test_peeling_errors():
    trivial = VirtualModule.trivial(sl5())
    with pytest.raises(SeriesError):
        peel_levels(RepSeries(sl5(), 3, {0: trivial.scale(2)}))
    with pytest.raises(GradingError):
        peel_levels(RepSeries(sl5(), 3, {0: trivial, 1: -trivial}))
    logger.info("✅ Peeling error test passed")


def test_free_superalgebra_uea():
    trivial = VirtualModule.trivial(sl5())
    single = GeneratorSpectrum(entries=((1, trivial, 'even'),))
    uea = free_superalgebra_uea(single, 5)
    assert all(uea.coefficient(k) == trivial for k in range(6))

    with pytest.raises(SeriesError):
        free_superalgebra_uea(GeneratorSpectrum(entries=((0, trivial, 'even'),)), 5)

    coadjoint = free_superalgebra_uea(coadjoint_generator_spectrum(N), N)
    assert coadjoint.coefficient(3) == -parse_module("(0001)")
    assert coadjoint.coefficient(6).contains((0, 0, 0, 2))
    logger.info("✅ Free superalgebra test passed")


def test_grading_sign():
    report = grading_sign_report(free_superalgebra_uea(coadjoint_generator_spectrum(8), 8))
    assert report.passed, report.mismatches
    logger.info("✅ Grading sign test passed")


def test_free_generation():
    report = verify_free_generation(N)
    assert report.passed
    assert [entry.level for entry in report.levels] == [3, 4, 5, 6]
    assert report.assumption.startswith("S+(E4)")

    smallest = verify_free_generation(3)
    assert smallest.passed
    assert smallest.levels[0].peeled[0].dynkin == [0, 0, 0, 1]

    with pytest.raises(SeriesError):
        verify_free_generation(2)
    logger.info("✅ Free generation test passed")


def test_free_generation_fault_injection():
    report = verify_free_generation(N, inject_fault_level=4)
    assert not report.passed
    assert report.mismatched_levels() == [4]
    logger.info("✅ Fault injection test passed")


def test_pairing():
    paired = extend_levels_by_pairing(peel_levels(minimal_orbit_series(N), N))
    assert paired.module(-1) == parse_module("(2000)+(0011)")
    assert paired.module(0) == parse_module("(1001)")
    for p in range(1, 5):
        assert paired.module(p).conjugate() == paired.module(5 - p)

    again = extend_levels_by_pairing(paired)
    assert again.levels == paired.levels
    logger.info("✅ Pairing test passed")


def test_pairing_inconsistency():
    broken = LevelDecomposition(levels={1: parse_module("(0010)"), 4: parse_module("(1000)")},
                                provenance='peeled', truncation=4)
    with pytest.raises(PairingError):
        extend_levels_by_pairing(broken)
    logger.info("✅ Pairing inconsistency test passed")


def test_p4_non_containment():
    report = p4_non_containment_report()
    assert report.passed
    assert report.details["(2000)x(1000)"] == "(1100)+(3000)"
    logger.info("✅ P4 non-containment test passed")


def run_all_tests():
    """运行所有测试"""
    return run_tests("koszul", [
        ("Peeled Levels", test_peeled_levels),
        ("Peeling Round Trip", test_peeling_round_trip),
        ("Peeling Errors", test_peeling_errors),
        ("Free Superalgebra", test_free_superalgebra_uea),
        ("Grading Sign", test_grading_sign),
        ("Free Generation", test_free_generation),
        ("Fault Injection", test_free_generation_fault_injection),
        ("Pairing", test_pairing),
        ("Pairing Inconsistency", test_pairing_inconsistency),
        ("P4 Non-containment", test_p4_non_containment),
    ])


if __name__ == "__main__":
    run_all_tests()
