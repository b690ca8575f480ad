# -*- coding: utf-8 -*-
"""
报告服务
JSON由pydantic模型序列化，文本与LaTeX由jinja2模板渲染，异步写文件
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import aiofiles
from jinja2 import BaseLoader, Environment, FileSystemLoader, TemplateNotFound
from pydantic import BaseModel

from ..algebra.repring import format_weight
from ..models import CohomologyReport, LevelsReport

DEFAULT_TEMPLATE_DIR = Path(__file__).resolve().parents[2] / 'templates'
THETA_COUNT = 10

DEFAULT_TEMPLATES: Dict[str, str] = {
    'levels.txt.j2': "{% for row in report.levels %}\n{{ row.level }}: {{ row.text }}\n{% endfor %}\n",
    'levels.tex.j2': (
        "\\begin{tabular}{r|l|l}\n"
        "{% for row in rows %}\n{{ row.level }} & ${{ row.text | latex_module }}$ & {{ row.parity }} \\\\\n"
        "{% endfor %}\n\\end{tabular}\n"),
    'verify.txt.j2': (
        "{% for item in report.items %}\n"
        "{{ item.name }}: {{ 'PASS' if item.passed else 'FAIL' }}\n"
        "{% endfor %}\n"),
    'cohomology.txt.j2': "{% for row in grid.rows %}\n{{ row.label }} | {{ row.cells | join(' | ') }}\n{% endfor %}\n",
    'cohomology.tex.j2': (
        "\\begin{tabular}{ {{- grid.column_spec -}} }\n{{ grid.header | join(' & ') }} \\\\\n\\hline\n"
        "{% for row in grid.rows %}\n{{ row.label }} & {{ row.cells | join(' & ') }} \\\\\n"
        "{% endfor %}\n\\end{tabular}\n"),
    'e510_levels.txt.j2': "{{ lines | join(', ') }}\n",
    'e510_jacobi.txt.j2': "Failures: {{ report.failures | length }}\n",
    'e510_dims.txt.j2': (
        "{% for row in report.rows %}\n"
        "{{ row.kind }} {{ row.degree }}: {{ row.counted }} {{ row.rank_based }} {{ row.weyl }}\n"
        "{% endfor %}\n"),
    'series.txt.j2': "{% for name, text in report.text.items() %}\n{{ name }} = {{ text }}\n{% endfor %}\n",
}


def latex_module(text: str) -> str:
    """(0000)+(1001) -> (0000)\\oplus(1001)"""
    if text.startswith('-'):
        text = '\\ominus' + text[1:]
    return text.replace('+', '\\oplus').replace('-', '\\ominus')


class ReportService:
    """报告渲染与保存服务"""

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        self.config = config or {}
        self.logger = logging.getLogger('report_service')
        template_dir = Path(self.config.get('templates', DEFAULT_TEMPLATE_DIR))
        self.environment = Environment(loader=FileSystemLoader(str(template_dir)),
                                       trim_blocks=True, lstrip_blocks=True)
        self.environment.filters['latex_module'] = latex_module
        self.fallback = Environment(loader=BaseLoader(), trim_blocks=True, lstrip_blocks=True)
        self.fallback.filters['latex_module'] = latex_module

    def _template(self, name: str):
        try:
            return self.environment.get_template(name)
        except TemplateNotFound:
            self.logger.warning(f"Template {name} not found, using default")
            return self.fallback.from_string(DEFAULT_TEMPLATES[name])

    def _render(self, name: str, **context) -> str:
        return self._template(name).render(**context).rstrip('\n') + '\n'

    @staticmethod
    def to_json(report: BaseModel) -> str:
        return json.dumps(report.model_dump(), indent=2) + '\n'

    def render(self, kind: str, report: BaseModel, fmt: str = 'text') -> str:
        """kind: levels | verify | cohomology | e510_levels | e510_jacobi | e510_dims | series"""
        if fmt == 'json':
            return self.to_json(report)
        if kind == 'levels':
            return self.render_levels(report, fmt)
        if kind == 'cohomology':
            return self.render_cohomology(report, fmt)
        if kind == 'e510_levels':
            lines = [f"{row.level}: {row.text}" for row in report.levels]
            return self._render('e510_levels.txt.j2', report=report, lines=lines)
        if fmt == 'latex':
            self.logger.warning(f"No LaTeX layout for {kind}, rendering text")
        return self._render(f"{kind}.txt.j2", report=report)

    def render_levels(self, report: LevelsReport, fmt: str = 'text') -> str:
        if fmt == 'latex':
            rows = report.paired or report.levels
            return self._render('levels.tex.j2', report=report, rows=rows)
        return self._render('levels.txt.j2', report=report)

    def cohomology_grid(self, report: CohomologyReport, fmt: str = 'text') -> Dict[str, Any]:
        """行按 g+k，列按λ次数；算过但为空的格子画点"""
        entries = {(c.lambda_degree, c.theta_degree): c for c in report.classes}
        top = max((g for g, _ in entries), default=0)
        last = min(top + 1, report.n_max)
        if report.lambda_max is not None:
            last = min(last, report.lambda_max)
        columns = list(range(last + 1))
        dot = '$\\bullet$' if fmt == 'latex' else '.'

        def cell(g: int, n: int) -> str:
            k = n - g
            if k < 0 or k > THETA_COUNT:
                return ''
            entry = entries.get((g, k))
            if entry is None:
                return dot
            text = '+'.join(
                (f"{t.multiplicity}" if t.multiplicity != 1 else '') + format_weight(tuple(t.dynkin))
                for t in entry.modules)
            return f"${latex_module(text)}$" if fmt == 'latex' else text

        rows = [{'label': str(n), 'cells': [cell(g, n) for g in columns]} for n in range(report.n_max + 1)]
        if fmt != 'latex':
            width = max([len(c) for row in rows for c in row['cells']] + [1])
            for row in rows:
                row['cells'] = [c.ljust(width) for c in row['cells']]
                row['label'] = row['label'].rjust(2)
        return {
            'columns': columns,
            'rows': rows,
            'column_spec': 'c|' + 'c' * len(columns),
            'header': [''] + [f"$\\lambda^{{{g}}}$" for g in columns],
        }

    def render_cohomology(self, report: CohomologyReport, fmt: str = 'text') -> str:
        grid = self.cohomology_grid(report, fmt)
        name = 'cohomology.tex.j2' if fmt == 'latex' else 'cohomology.txt.j2'
        return self._render(name, report=report, grid=grid)

    async def save(self, text: str, path: str):
        """异步写文件，自动创建父目录"""
        try:
            output_file = Path(path)
            output_file.parent.mkdir(parents=True, exist_ok=True)
            async with aiofiles.open(output_file, 'w', encoding='utf-8') as f:
                await f.write(text)
            self.logger.info(f"Report saved to: {path}")
        except Exception as e:
            self.logger.error(f"Error saving report: {e}")
            raise
