from .reports import (
    ASSUMPTION,
    CheckResult,
    CohomologyClass,
    CohomologyReport,
    DegreeMismatch,
    DimensionReport,
    DimensionRow,
    E510LevelsReport,
    E510Report,
    FreeGenerationReport,
    IdentityReport,
    LevelEntry,
    LevelRow,
    LevelsReport,
    ModuleTerm,
    SeriesReport,
    VerifyReport,
    terms_of,
)

__all__ = [
    'ASSUMPTION', 'CheckResult', 'CohomologyClass', 'CohomologyReport', 'DegreeMismatch',
    'DimensionReport', 'DimensionRow', 'E510LevelsReport', 'E510Report', 'FreeGenerationReport', 'IdentityReport', 'LevelEntry',
    'LevelRow', 'LevelsReport', 'ModuleTerm', 'SeriesReport', 'VerifyReport', 'terms_of',
]
