#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
表示环测试：张量积、Adams运算、对称幂与外幂、文本格式
"""

import logging

import pytest

from src.algebra.repring import (
    VirtualModule,
    adams,
    ext_power,
    parse_module,
    sl5,
    sym_power,
    tensor,
)
from src.errors import WeightError
from testing_utils import run_tests

logger = logging.getLogger('test_repring')


def irrep(text: str) -> VirtualModule:
    return parse_module(text)


def test_tensor_products():
    product = tensor(irrep("(2000)"), irrep("(1000)"))
    assert product == parse_module("(3000)+(1100)")
    assert not product.contains((0, 0, 1, 0))

    assert tensor(irrep("(1000)"), irrep("(0001)")) == parse_module("(1001)+(0000)")
    square = tensor(irrep("(0010)"), irrep("(0010)"))
    assert square == parse_module("(0020)+(1000)+(0101)")
    assert square.dim == 100
    logger.info("✅ Tensor product test passed")


def test_tensor_is_commutative_and_distributive():
    a = parse_module("(1000)+(0010)")
    b = parse_module("(0001)-(0100)")
    assert tensor(a, b) == tensor(b, a)
    assert tensor(a, b) == tensor(irrep("(1000)"), b) + tensor(irrep("(0010)"), b)
    assert (a * b).dim == a.dim * b.dim
    logger.info("✅ Commutativity test passed")


def test_tensor_is_associative():
    triples = [
        ("(1000)", "(0010)", "(0001)"),
        ("(0100)+(1000)", "(1001)", "-(0010)"),
        ("(2000)-(0000)", "(0011)", "(1100)"),
    ]
    for a, b, c in triples:
        a, b, c = parse_module(a), parse_module(b), parse_module(c)
        left = tensor(tensor(a, b), c)
        assert left == tensor(a, tensor(b, c))
        assert left.dim == a.dim * b.dim * c.dim
    logger.info("✅ Associativity test passed")


def test_powers():
    assert sym_power(irrep("(0100)"), 2) == parse_module("(0200)+(0001)")
    assert ext_power(irrep("(1000)"), 2) == irrep("(0100)")
    assert ext_power(irrep("(1000)"), 5) == VirtualModule.trivial(sl5())
    assert ext_power(irrep("(1000)"), 6).is_zero
    assert sym_power(irrep("(0010)"), 2) == parse_module("(0020)+(1000)")
    assert sym_power(irrep("(1000)"), 0) == VirtualModule.trivial(sl5())
    logger.info("✅ Power test passed")


def test_adams():
    assert adams(irrep("(1000)"), 2) == parse_module("(2000)-(0100)")
    assert adams(irrep("(0001)"), 1) == irrep("(0001)")
    with pytest.raises(ValueError):
        adams(irrep("(1000)"), 0)
    logger.info("✅ Adams operation test passed")


def test_text_format():
    assert str(parse_module("(1100)+(0002)")) == "(0002)+(1100)"
    assert str(parse_module("2(0001)")) == "2(0001)"
    assert str(-irrep("(1000)")) == "-(1000)"
    assert str(VirtualModule.zero(sl5())) == "0"
    assert parse_module("0").is_zero
    with pytest.raises(ValueError):
        parse_module("(1000)+junk")
    logger.info("✅ Text format test passed")


def test_conjugate_and_weights():
    assert parse_module("(0002)+(1100)").conjugate() == parse_module("(2000)+(0011)")
    with pytest.raises(WeightError):
        VirtualModule.irreducible(sl5(), (1, -1, 0, 0))
    with pytest.raises(WeightError):
        VirtualModule.irreducible(sl5(), (1, 0, 0))
    logger.info("✅ Conjugation test passed")


def test_character_round_trip():
    module = parse_module("(1001)+2(0000)")
    assert VirtualModule.from_character(sl5(), module.character()) == module
    logger.info("✅ Character round trip test passed")


def test_json_and_sign():
    module = parse_module("(0011)+(2000)")
    assert module.to_json() == [{"dynkin": [0, 0, 1, 1], "multiplicity": 1},
                                {"dynkin": [2, 0, 0, 0], "multiplicity": 1}]
    assert VirtualModule.from_json(sl5(), module.to_json()) == module
    assert module.is_nonnegative
    assert not parse_module("-(1000)").is_nonnegative
    assert (module - module).is_zero
    logger.info("✅ JSON and sign test passed")


def run_all_tests():
    """运行所有测试"""
    return run_tests("repring", [
        ("Tensor Products", test_tensor_products),
        ("Commutativity", test_tensor_is_commutative_and_distributive),
        ("Associativity", test_tensor_is_associative),
        ("Powers", test_powers),
        ("Adams Operations", test_adams),
        ("Text Format", test_text_format),
        ("Conjugation", test_conjugate_and_weights),
        ("Character Round Trip", test_character_round_trip),
        ("JSON and Sign", test_json_and_sign),
    ])


if __name__ == "__main__":
    run_all_tests()
