# -*- coding: utf-8 -*-
"""
报告数据模型
JSON输出全部由这些pydantic模型序列化，字段顺序即输出顺序
"""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

ASSUMPTION = "S+(E4) = B+(E4) at positive levels"


class ModuleTerm(BaseModel):
    dynkin: List[int]
    multiplicity: int


def terms_of(module) -> List[ModuleTerm]:
    """VirtualModule -> 有序的项列表"""
    return [ModuleTerm(dynkin=list(w), multiplicity=m) for w, m in module.items()]


class LevelEntry(BaseModel):
    level: int
    peeled: List[ModuleTerm]
    free: List[ModuleTerm]
    equal: bool


class FreeGenerationReport(BaseModel):
    assumption: str = ASSUMPTION
    max_level: int
    levels: List[LevelEntry] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(entry.equal for entry in self.levels)

    def mismatched_levels(self) -> List[int]:
        return [entry.level for entry in self.levels if not entry.equal]


class LevelRow(BaseModel):
    level: int
    modules: List[ModuleTerm]
    parity: str
    text: str


class LevelsReport(BaseModel):
    assumption: str = ASSUMPTION
    max_level: int
    provenance: str
    levels: List[LevelRow] = Field(default_factory=list)
    paired: List[LevelRow] = Field(default_factory=list)


class DegreeMismatch(BaseModel):
    degree: int
    expected: str
    actual: str


class IdentityReport(BaseModel):
    name: str
    truncation: int
    passed: bool
    mismatches: List[DegreeMismatch] = Field(default_factory=list)
    details: Dict[str, Any] = Field(default_factory=dict)


class CohomologyClass(BaseModel):
    lambda_degree: int
    theta_degree: int
    modules: List[ModuleTerm]


class CohomologyReport(BaseModel):
    field: str
    n_max: int
    lambda_max: Optional[int] = None
    classes: List[CohomologyClass] = Field(default_factory=list)


class DimensionRow(BaseModel):
    degree: int
    kind: str
    counted: int
    rank_based: int
    weyl: int
    module: str
    equal: bool


class E510Report(BaseModel):
    trials: int
    max_degree: int
    seed: int
    failures: List[str] = Field(default_factory=list)
    identities: List[IdentityReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and all(r.passed for r in self.identities)


class E510LevelsReport(BaseModel):
    max_level: int
    levels: List[LevelRow] = Field(default_factory=list)


class DimensionReport(BaseModel):
    i_max: int
    rows: List[DimensionRow] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.equal for row in self.rows)


class SeriesReport(BaseModel):
    truncation: int
    series: Dict[str, Any] = Field(default_factory=dict)
    text: Dict[str, str] = Field(default_factory=dict)
    identities: List[IdentityReport] = Field(default_factory=list)
    field: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.identities)


class CheckResult(BaseModel):
    name: str
    passed: bool
    summary: str = ""
    failures: List[str] = Field(default_factory=list)
    data: Optional[Dict[str, Any]] = None


class VerifyReport(BaseModel):
    assumption: str = ASSUMPTION
    max_level: int
    passed: bool
    items: List[CheckResult] = Field(default_factory=list)
