"""Multigraded regularity of modules over products of projective spaces,
computed exactly over a prime field."""

from .algebra import (DEFAULT_PRIME, MonomialIdeal, Poly, PolySyntaxError, RingSpec, block_ideal,
                      ideal_family, irrelevant_ideal, maximal_ideal, parse_poly)
from .cohomology import (DEFAULT_TMAX, NotStabilized, a_star_components, a_star_vector, hb_piece,
                         hm_piece, kunneth_dim, local_cohomology_all, local_cohomology_piece,
                         sheaf_cohomology_piece)
from .degrees import Box, GradingMap, Region
from .groebner import FreeMod, buchberger, kernel_of_map, syzygy_module
from .invariants import (FiberBounds, RegGrid, a_b_inner_region, ci_d_vector, fiber_a_bounds,
                         is_m_regular, reg_grid, reg_inner_region, verify_theorem, witness_indices)
from .modules import Presentation, graded_piece, piece_dim, quotient_ring, slice_module
from .resolution import (BettiTable, Resolution, betti_table, free_resolution, koszul_complex,
                         proj_dim, res_reg_vector)

__version__ = "0.1.0"
