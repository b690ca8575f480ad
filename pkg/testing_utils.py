# -*- coding: utf-8 -*-
"""
测试辅助
各测试脚本共用的日志设置、测试配置与逐项运行器
"""

import logging
from typing import Any, Callable, Dict, List, Tuple


def setup_test_logging():
    """设置测试日志"""
    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )


def load_test_config() -> Dict[str, Any]:
    """加载测试配置：截断阶较小，θ子集只取几个"""
    return {
        'series': {'truncation': 6},
        'cohomology': {'n_max': 5, 'lambda_max': 3, 'workers': 2, 'full_weights': False},
        'e510': {'trials': 4, 'max_degree': 2, 'seed': 7, 'generic_terms': 2},
        'output': {'format': 'text'},
        'logging': {'level': 'INFO', 'file': None},
        'checks': {
            'workers': 2,
            'enabled': ['free_generation', 'grading_sign', 'p4_non_containment',
                        'pairing', 'series_identities', 'superspace_operators'],
            'dependencies': {
                'free_generation': ['series_identities'],
                'pairing': ['series_identities'],
            },
            'theta_subsets': [0, 1, 3, 1023],
        },
    }


def run_tests(title: str, tests: List[Tuple[str, Callable[[], None]]]) -> bool:
    """逐项运行测试并汇总"""
    setup_test_logging()
    logger = logging.getLogger('test_runner')

    logger.info(f"🚀 Starting {title} tests...")

    passed = 0
    failed = 0

    for test_name, test_func in tests:
        try:
            logger.info(f"\n📋 Running {test_name} test...")
            test_func()
            passed += 1
        except Exception as e:
            logger.error(f"❌ {test_name} test failed: {e}")
            failed += 1

    logger.info(f"\n📊 Test Results:")
    logger.info(f"✅ Passed: {passed}")
    logger.info(f"❌ Failed: {failed}")
    logger.info(f"📈 Success Rate: {passed/(passed+failed)*100:.1f}%")

    if failed == 0:
        logger.info("🎉 All tests passed!")
    else:
        logger.warning(f"⚠️  {failed} test(s) failed")
    return failed == 0
