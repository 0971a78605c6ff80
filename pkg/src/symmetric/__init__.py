"""
Symmetric Functions

Schur polynomial evaluators (bialternant, Jacobi-Trudi, tableau oracle,
Laurent form on the torus), partition bookkeeping and the Cauchy
identities.
"""

from .partitions import (
    cube_indices,
    m_to_partition,
    partition_size,
    partition_to_m,
    schur_dimension,
)
from .schur import (
    complete_homogeneous,
    schur_batch,
    schur_bialternant,
    schur_grid,
    schur_jacobi_trudi,
    schur_laurent,
    standard_lfactor,
    torus_alphabet,
)
from .tableaux import schur_tableau_oracle
from .cauchy import (
    cauchy_determinant_check,
    cauchy_lhs_truncated,
    cauchy_rhs,
)

__all__ = [
    'cube_indices',
    'm_to_partition',
    'partition_size',
    'partition_to_m',
    'schur_dimension',
    'complete_homogeneous',
    'schur_batch',
    'schur_bialternant',
    'schur_grid',
    'schur_jacobi_trudi',
    'schur_laurent',
    'standard_lfactor',
    'torus_alphabet',
    'schur_tableau_oracle',
    'cauchy_determinant_check',
    'cauchy_lhs_truncated',
    'cauchy_rhs',
]
