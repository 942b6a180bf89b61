"""
Generalized Lie bialgebroids: the pair, its compatibility checks, and the
constructions that produce or consume one.

- glb: GLBPair, the compatibility conditions, the induced Jacobi structure
- triangular: pairs built from a bivector with [[P, P]]_phi0 = 0
- lie_bialgebras: the point-base case and the Yang-Baxter construction
- time_extension: the bar/hat extensions over M x R and bialgebroidization
"""

from bialgebroids.glb import (
    GLBPair,
    canonical_pair,
    check_duality,
    check_glb,
    induced_bivector,
    induced_jacobi,
)
from bialgebroids.triangular import check_triangular, triangular
from bialgebroids.lie_bialgebras import (
    BUILTIN_EXAMPLES,
    YangBaxterData,
    check_glb_point,
    yb_center_reduce,
    yb_check,
    yb_construct,
)
from bialgebroids.time_extension import (
    BialgebroidizationResult,
    bar_extension,
    bialgebroidize,
    hat_extension,
    psi_transport,
)

__all__ = [
    'GLBPair',
    'check_glb',
    'check_duality',
    'induced_bivector',
    'induced_jacobi',
    'canonical_pair',
    'triangular',
    'check_triangular',
    'YangBaxterData',
    'BUILTIN_EXAMPLES',
    'yb_check',
    'yb_construct',
    'yb_center_reduce',
    'check_glb_point',
    'bar_extension',
    'hat_extension',
    'psi_transport',
    'bialgebroidize',
    'BialgebroidizationResult',
]
