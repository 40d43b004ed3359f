"""Graphs with prescribed spectral radius and the spectral radius order."""

from .algebraic import (
    QuadraticTarget,
    TrigTarget,
    check_condition_quadratic,
    classify_leq2,
    equiangular_count,
    hoffman_alpha,
    lambda_from_alpha,
)
from .constructions import (
    family_bipartite_witness,
    family_join_witness,
    quadratic_realization,
    realize_product,
    realize_quadratic,
    realize_signless_laplacian_radius,
    realize_sum,
    regular_graph,
    verify_equitable,
)
from .errors import SROError
from .graph import (
    Graph,
    cartesian_product,
    complement,
    complete,
    complete_bipartite,
    disjoint_union,
    join,
    kronecker_product,
    line_graph,
    path,
)
from .graphio import decode_graph6, encode_graph6
from .poly import IntPolynomial, RationalBracket, certify_largest_root, char_poly, divides, sturm_count
from .search import KappaCertificate, enumerate_graphs, kappa, verify_radius
from .spectral import is_bipartite, is_connected, perron, spectral_radius, spectrum

__version__ = "0.1.0"
