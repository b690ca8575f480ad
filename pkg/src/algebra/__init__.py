from .liecore import (
    A4,
    CartanMatrix,
    RootSystem,
    build_root_system,
    conjugate,
    decompose_character,
    decompose_dominant,
    dominant_weights,
    freudenthal_multiplicities,
    reflect_to_dominant,
    weyl_dim,
    weyl_orbit,
)
from .repring import VirtualModule, adams, ext_power, parse_module, sl5, sym_power, tensor
from .repseries import RepSeries, geometric_factor, inverse, mul, series_identity_check, sigma_series
from .koszul import (
    GeneratorSpectrum,
    LevelDecomposition,
    constrained_scalar_closed_form,
    constrained_scalar_series,
    enveloping_series,
    extend_levels_by_pairing,
    free_superalgebra_uea,
    grading_sign_report,
    minimal_orbit_series,
    on_shell_scalar_closed_form,
    on_shell_scalar_series,
    p4_non_containment_report,
    peel_enveloping_series,
    peel_levels,
    verify_free_generation,
)
from .e510 import (
    E510Element,
    bracket,
    closure_check,
    coadjoint_generator_spectrum,
    graded_dimension_crosscheck,
    jacobi_test,
    key_identity_check,
    level_module,
    level_spectrum,
    run_jacobi_trials,
)

__all__ = [
    'A4', 'CartanMatrix', 'RootSystem', 'build_root_system', 'conjugate', 'decompose_character',
    'decompose_dominant', 'dominant_weights', 'freudenthal_multiplicities', 'reflect_to_dominant',
    'weyl_dim', 'weyl_orbit',
    'VirtualModule', 'adams', 'ext_power', 'parse_module', 'sl5', 'sym_power', 'tensor',
    'RepSeries', 'geometric_factor', 'inverse', 'mul', 'series_identity_check', 'sigma_series',
    'GeneratorSpectrum', 'LevelDecomposition', 'constrained_scalar_closed_form',
    'constrained_scalar_series', 'enveloping_series', 'extend_levels_by_pairing',
    'free_superalgebra_uea', 'grading_sign_report', 'minimal_orbit_series',
    'on_shell_scalar_closed_form', 'on_shell_scalar_series', 'p4_non_containment_report',
    'peel_enveloping_series', 'peel_levels', 'verify_free_generation',
    'E510Element', 'bracket', 'closure_check', 'coadjoint_generator_spectrum',
    'graded_dimension_crosscheck', 'jacobi_test', 'key_identity_check', 'level_module', 'level_spectrum',
    'run_jacobi_trials',
]
