"""
Whittaker Transforms

Forward transform (finite and truncated lattice sums), inverse transform
(exact constant term and torus quadrature), Stade-type pairing and the
Plancherel pairings.
"""

from .functions import CompactFunction, SpectralFunction
from .forward import (
    forward_transform,
    forward_transform_laurent,
    forward_transform_series,
    measure_weight,
    schur_inverse_image,
)
from .inverse import (
    exact_node_count,
    inverse_transform_exact,
    inverse_transform_quadrature,
    inverse_transform_table,
    vandermonde_laurent,
)
from .pairing import (
    plancherel_geometric,
    plancherel_spectral,
    stade_rhs,
    whittaker_pairing,
)
from .quadrature import torus_mean, torus_nodes

__all__ = [
    'CompactFunction',
    'SpectralFunction',
    'forward_transform',
    'forward_transform_laurent',
    'forward_transform_series',
    'measure_weight',
    'schur_inverse_image',
    'exact_node_count',
    'inverse_transform_exact',
    'inverse_transform_quadrature',
    'inverse_transform_table',
    'vandermonde_laurent',
    'plancherel_geometric',
    'plancherel_spectral',
    'stade_rhs',
    'whittaker_pairing',
    'torus_mean',
    'torus_nodes',
]
