"""
分类模块
连接集规范分解、完美码判定、含单位元完美码枚举与结构诊断
"""

from .classifier import (
    Classification,
    Witness,
    admits_perfect_code,
    enumerate_all_codes,
    enumerate_identity_codes,
    find_witnesses,
    theorem2_range,
)
from .isomorphism import CanonicalForm, CanonicalMatch, admissible_parameters, match_canonical_forms
from .diagnostics import StructureReport, code_structure_report, necessary_conditions
from .normalize import (
    AS_GIVEN,
    HALF_S,
    HALF_SP,
    HALF_SUM,
    INNER_OTHER,
    ISOMORPHIC,
    NO_CODE_MULTIPLE_INVOLUTIONS,
    OUTSIDE,
    SWAPPED,
    NormalizedSet,
    check_quintic,
    derive_hl,
    normalize,
)

__all__ = [
    'NormalizedSet',
    'NO_CODE_MULTIPLE_INVOLUTIONS',
    'OUTSIDE',
    'HALF_S',
    'HALF_SP',
    'HALF_SUM',
    'INNER_OTHER',
    'AS_GIVEN',
    'SWAPPED',
    'ISOMORPHIC',
    'check_quintic',
    'normalize',
    'derive_hl',
    'Classification',
    'Witness',
    'find_witnesses',
    'theorem2_range',
    'admits_perfect_code',
    'enumerate_identity_codes',
    'enumerate_all_codes',
    'StructureReport',
    'code_structure_report',
    'necessary_conditions',
    'CanonicalForm',
    'CanonicalMatch',
    'admissible_parameters',
    'match_canonical_forms',
]
