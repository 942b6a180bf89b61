"""
Lie algebroids in structure-function form, phi0-twisted operators and Jacobi pairs.
"""

from algebroids.checks import CheckReport, CheckResult, first_nonzero
from algebroids.algebroid import Algebroid
from algebroids.twisted import (
    check_morphism_pair,
    check_twisted_schouten_identities,
    require_cocycle,
    twisted_differential,
    twisted_lie_derivative_form,
    twisted_lie_derivative_mv,
    twisted_schouten,
)
from algebroids.jacobi_pair import (
    JacobiStructure,
    build_tm_r,
    build_tstar_m_r,
    jacobi_bracket,
    poissonize,
    verify_jacobi,
)

__all__ = [
    'CheckReport',
    'CheckResult',
    'first_nonzero',
    'Algebroid',
    'require_cocycle',
    'twisted_differential',
    'twisted_lie_derivative_form',
    'twisted_lie_derivative_mv',
    'twisted_schouten',
    'check_morphism_pair',
    'check_twisted_schouten_identities',
    'JacobiStructure',
    'verify_jacobi',
    'jacobi_bracket',
    'poissonize',
    'build_tm_r',
    'build_tstar_m_r',
]
