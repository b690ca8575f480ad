#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
SL(5) 计算代数工作台
B(E4)层级剥离、自由生成定理校验、零模上同调表与E(5,10)恒等式
"""

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple

import yaml
from pydantic import BaseModel, Field, ValidationError

from src.algebra.e510 import (
    closure_check,
    graded_dimension_crosscheck,
    key_identity_check,
    level_spectrum,
    run_jacobi_trials,
)
from src.algebra.koszul import (
    constrained_scalar_closed_form,
    constrained_scalar_series,
    extend_levels_by_pairing,
    minimal_orbit_series,
    on_shell_scalar_closed_form,
    on_shell_scalar_series,
    parity_of,
    peel_levels,
)
from src.algebra.repseries import inverse, series_identity_check
from src.errors import Sl5Error
from src.factory.check_factory import CheckFactory
from src.models import (
    DimensionReport,
    E510LevelsReport,
    LevelRow,
    LevelsReport,
    SeriesReport,
    terms_of,
)
from src.services.report_service import ReportService
from src.superfields.pscohomology import experimental_field_character, superfield_spec, zero_mode_cohomology

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# 自由生成定理从第3层开始比较
MIN_VERIFY_LEVEL = 3

DEFAULT_CONFIG: Dict[str, Any] = {
    'series': {'truncation': 10},
    'cohomology': {'n_max': 10, 'lambda_max': 3, 'workers': 1, 'full_weights': False},
    'e510': {'trials': 100, 'max_degree': 3, 'seed': 7, 'generic_terms': 3},
    'output': {'format': 'text'},
    'logging': {'level': 'INFO', 'file': None},
    'checks': {},
}


class RunConfig(BaseModel):
    """一次运行的有效参数：内置默认 < 配置文件 < 命令行"""
    max_level: int = Field(10, ge=1)
    n_max: int = Field(10, ge=0)
    lambda_max: Optional[int] = Field(3, ge=0)
    workers: int = Field(1, ge=1)
    full_weights: bool = False
    trials: int = Field(100, ge=1)
    max_degree: int = Field(3, ge=0)
    seed: int = 7
    generic_terms: int = Field(3, ge=1)
    format: Literal['json', 'text', 'latex'] = 'text'
    out: Optional[str] = None
    field: Optional[Literal['scalar', 'vector', 'oneform']] = None
    inject_fault_level: Optional[int] = None
    theta_subsets: Optional[List[int]] = None


def setup_logging(log_level: str = "INFO", log_file: Optional[str] = None):
    """设置日志"""
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding='utf-8'))
    logging.basicConfig(
        level=getattr(logging, log_level.upper()),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers
    )


def load_config(config_path: str = "config.yaml") -> Dict[str, Any]:
    """加载配置文件，缺失时使用内置默认值"""
    config = {section: dict(values) for section, values in DEFAULT_CONFIG.items()}
    path = Path(config_path)
    if not path.exists():
        logging.getLogger('main').warning(f"Config file {config_path} not found, using defaults")
        return config
    try:
        with open(path, 'r', encoding='utf-8') as f:
            loaded = yaml.safe_load(f) or {}
    except Exception as e:
        logging.getLogger('main').error(f"Error loading config: {e}")
        raise
    for section, values in loaded.items():
        if isinstance(values, dict):
            config.setdefault(section, {}).update(values)
        else:
            config[section] = values
    return config


def build_run_config(config: Dict[str, Any], args: argparse.Namespace) -> RunConfig:
    """合并配置文件与命令行参数"""
    values: Dict[str, Any] = {
        'max_level': config['series'].get('truncation'),
        'n_max': config['cohomology'].get('n_max'),
        'lambda_max': config['cohomology'].get('lambda_max', 3),
        'workers': config['cohomology'].get('workers'),
        'full_weights': config['cohomology'].get('full_weights'),
        'trials': config['e510'].get('trials'),
        'max_degree': config['e510'].get('max_degree'),
        'seed': config['e510'].get('seed'),
        'generic_terms': config['e510'].get('generic_terms'),
        'format': config['output'].get('format'),
        'theta_subsets': (config.get('checks') or {}).get('theta_subsets'),
    }
    flags = {
        'max_level': args.max_level, 'n_max': args.n_max, 'lambda_max': args.lambda_max,
        'workers': args.workers, 'trials': args.trials, 'max_degree': args.max_degree, 'seed': args.seed,
        'format': args.format, 'out': args.out, 'field': getattr(args, 'field', None),
        'inject_fault_level': args.inject_fault,
    }
    if args.full_weights:
        flags['full_weights'] = True
    values.update({k: v for k, v in flags.items() if v is not None})
    # lambda_max: null 表示不限λ次数
    return RunConfig(**{k: v for k, v in values.items() if v is not None or k == 'lambda_max'})


def _level_rows(levels) -> List[LevelRow]:
    return [LevelRow(level=p, modules=terms_of(r), parity=parity_of(p), text=str(r))
            for p, r in levels]


class Sl5Workbench:
    """计算工作台"""

    def __init__(self, config: Dict[str, Any], run_config: RunConfig):
        self.config = config
        self.run_config = run_config
        self.logger = logging.getLogger('workbench')
        self.check_factory = CheckFactory(config)
        self.report_service = ReportService(config.get('output'))

    async def initialize(self):
        """初始化"""
        if not self.check_factory.validate_configuration():
            raise ValueError("Configuration validation failed")
        self.logger.info("Workbench initialized successfully")

    async def run_levels(self) -> Tuple[str, BaseModel, int]:
        n = self.run_config.max_level
        levels = peel_levels(minimal_orbit_series(n), n)
        paired = extend_levels_by_pairing(levels)
        report = LevelsReport(max_level=n, provenance=levels.provenance,
                              levels=_level_rows(levels.sorted_levels()),
                              paired=_level_rows(paired.sorted_levels()))
        return 'levels', report, EXIT_OK

    async def run_verify(self) -> Tuple[str, BaseModel, int]:
        suite = self.check_factory.create_suite(self.run_config.model_dump())
        report = await suite.run()
        return 'verify', report, EXIT_OK if report.passed else EXIT_FAILURE

    async def run_cohomology(self) -> Tuple[str, BaseModel, int]:
        spec = superfield_spec(self.run_config.field or 'scalar')
        table = zero_mode_cohomology(spec, self.run_config.n_max, workers=self.run_config.workers,
                                     full_weights=self.run_config.full_weights,
                                     lambda_max=self.run_config.lambda_max)
        return 'cohomology', table.to_report(), EXIT_OK

    async def run_e510(self, action: str) -> Tuple[str, BaseModel, int]:
        rc = self.run_config
        if action == 'levels':
            rows = _level_rows((level, module) for level, module, _ in level_spectrum(max(rc.max_level, 3)))
            return 'e510_levels', E510LevelsReport(max_level=rc.max_level, levels=rows), EXIT_OK
        if action == 'jacobi':
            report = run_jacobi_trials(rc.trials, rc.max_degree, rc.seed, rc.workers)
            report.identities.append(closure_check(min(rc.trials, 20), rc.max_degree, rc.seed))
            report.identities.append(key_identity_check(rc.generic_terms, rc.seed))
            return 'e510_jacobi', report, EXIT_OK if report.passed else EXIT_FAILURE
        report = DimensionReport(i_max=rc.max_degree, rows=graded_dimension_crosscheck(rc.max_degree))
        return 'e510_dims', report, EXIT_OK if report.passed else EXIT_FAILURE

    async def run_series(self) -> Tuple[str, BaseModel, int]:
        n = self.run_config.max_level
        z = minimal_orbit_series(n)
        series = {
            'Z_lambda': z,
            'Z_lambda_inverse': inverse(z),
            'constrained_scalar': constrained_scalar_series(n),
            'on_shell_scalar': on_shell_scalar_series(n),
        }
        identities = [
            series_identity_check(series['constrained_scalar'], constrained_scalar_closed_form(n),
                                  'constrained_scalar'),
            series_identity_check(series['on_shell_scalar'], on_shell_scalar_closed_form(n),
                                  'on_shell_scalar'),
        ]
        field = self.run_config.field
        if field and field != 'scalar':
            series[f'{field}_character'] = experimental_field_character(superfield_spec(field), n)
        report = SeriesReport(truncation=n, series={k: s.to_json() for k, s in series.items()},
                              text={k: str(s) for k, s in series.items()}, identities=identities,
                              field=field)
        return 'series', report, EXIT_OK if report.passed else EXIT_FAILURE

    async def run(self, command: str, action: Optional[str] = None) -> int:
        runners = {
            'levels': self.run_levels,
            'verify': self.run_verify,
            'cohomology': self.run_cohomology,
            'series': self.run_series,
        }
        try:
            if command == 'e510':
                kind, report, status = await self.run_e510(action)
            else:
                kind, report, status = await runners[command]()
        except Sl5Error as e:
            self.logger.error(f"Internal inconsistency in {command}: {e}")
            return EXIT_FAILURE

        text = self.report_service.render(kind, report, self.run_config.format)
        if self.run_config.out:
            await self.report_service.save(text, self.run_config.out)
        else:
            sys.stdout.write(text)
        return status

    async def cleanup(self):
        """清理资源"""
        self.logger.info("Workbench cleanup completed")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--max-level', type=int, help='series truncation N')
    common.add_argument('--n-max', type=int, help='largest total degree g+k for cohomology')
    common.add_argument('--lambda-max', type=int, help='largest lambda-degree g for cohomology')
    common.add_argument('--format', choices=['json', 'text', 'latex'])
    common.add_argument('--seed', type=int)
    common.add_argument('--trials', type=int)
    common.add_argument('--max-degree', type=int)
    common.add_argument('--workers', type=int)
    common.add_argument('--full-weights', action='store_true', help='compute every weight block')
    common.add_argument('--out', help='write the report to this path')
    common.add_argument('--config', default='config.yaml')
    common.add_argument('--log-level')
    common.add_argument('--inject-fault', type=int, metavar='LEVEL', help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(description='SL(5) computer-algebra workbench')
    commands = parser.add_subparsers(dest='command', required=True)
    commands.add_parser('levels', parents=[common], help='peeled B(E4) levels and their pairing')
    commands.add_parser('verify', parents=[common], help='run the verification suite')
    cohomology = commands.add_parser('cohomology', parents=[common], help='zero-mode cohomology tables')
    cohomology.add_argument('--field', choices=['scalar', 'vector', 'oneform'], default='scalar')
    e510 = commands.add_parser('e510', parents=[common], help='E(5,10) levels, identities and dimensions')
    e510.add_argument('action', choices=['levels', 'jacobi', 'dims'])
    series = commands.add_parser('series', parents=[common], help='partition-function identities')
    series.add_argument('--field', choices=['vector', 'oneform'])
    return parser


async def main(argv: Optional[List[str]] = None) -> int:
    """主函数，返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    config = load_config(args.config)
    log_config = config.get('logging') or {}
    setup_logging(args.log_level or log_config.get('level', 'INFO'), log_config.get('file'))
    logger = logging.getLogger('main')

    try:
        run_config = build_run_config(config, args)
    except ValidationError as e:
        logger.error(f"Invalid arguments: {e}")
        sys.stderr.write(f"usage error: {e}\n")
        return EXIT_USAGE
    if args.command == 'verify' and run_config.max_level < MIN_VERIFY_LEVEL:
        logger.error(f"verify needs --max-level >= {MIN_VERIFY_LEVEL}, got {run_config.max_level}")
        sys.stderr.write(f"usage error: verify needs --max-level >= {MIN_VERIFY_LEVEL}\n")
        return EXIT_USAGE

    workbench = Sl5Workbench(config, run_config)
    try:
        await workbench.initialize()
        return await workbench.run(args.command, getattr(args, 'action', None))
    except ValueError as e:
        logger.error(f"Error in main: {e}")
        return EXIT_USAGE
    finally:
        await workbench.cleanup()


if __name__ == "__main__":
    sys.exit(asyncio.run(main()))
