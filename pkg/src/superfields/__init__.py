from .quotient_ring import LambdaQuotientBasis, lambda_quotient_basis, reduce_product
from .superspace import D, Q, SuperspaceOperator, anticommutator, bracket_on_monomial, superspace_operator_check, torsion
from .pscohomology import (
    ONEFORM,
    PRESETS,
    SCALAR,
    VECTOR,
    BlockComplex,
    CohomologyTable,
    SuperfieldSpec,
    build_zero_mode_complex,
    euler_characteristic_crosscheck,
    experimental_field_character,
    field_series,
    superfield_spec,
    zero_mode_cohomology,
)

__all__ = [
    'LambdaQuotientBasis', 'lambda_quotient_basis', 'reduce_product',
    'D', 'Q', 'SuperspaceOperator', 'anticommutator', 'bracket_on_monomial',
    'superspace_operator_check', 'torsion',
    'ONEFORM', 'PRESETS', 'SCALAR', 'VECTOR', 'BlockComplex', 'CohomologyTable', 'SuperfieldSpec',
    'build_zero_mode_complex', 'euler_characteristic_crosscheck', 'experimental_field_character',
    'field_series', 'superfield_spec', 'zero_mode_cohomology',
]
