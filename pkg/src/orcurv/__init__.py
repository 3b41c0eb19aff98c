"""Exact Ollivier-Ricci curvature on graphs and polyhedral surfaces.

The transport problems behind the curvature are solved in exact rational
arithmetic, so every value is a fraction and every optimal coupling comes
with a dual certificate that can be checked independently.
"""

from .complex import (
    Complex2,
    DistanceMatrix,
    ball,
    build_complex,
    degree,
    local_support,
    shortest_distances,
    sphere,
    triangles_on_edge,
)
from .curvature import (
    UNIFORM,
    CurvatureResult,
    WalkSpec,
    concavity_check,
    cone_curvature,
    degree_table_ric,
    forman_curvature,
    jost_liu_bound,
    kappa_one,
    kappa_t,
    laplacian_walk_spec,
    myers_check,
    ollivier_ricci,
)
from .generators import generic_star_pair, parallelepiped, platonic, tiling_patch
from .laplacian import (
    Laplacian,
    harmonic_laplacian,
    jump_normalizer,
    parallelepiped_laplacian,
    weighted_laplacian,
)
from .measures import Measure, ball_uniform, dirac, jump, laplacian_walk, lazy_walk, sphere_uniform
from .transport import (
    TransportInstance,
    TransportSolution,
    brute_force_transport,
    solve_transport,
    verify_certificate,
    wasserstein1,
)

__version__ = "0.1.0"

__all__ = [
    "ball",
    "ball_uniform",
    "brute_force_transport",
    "build_complex",
    "Complex2",
    "concavity_check",
    "cone_curvature",
    "CurvatureResult",
    "degree",
    "degree_table_ric",
    "dirac",
    "DistanceMatrix",
    "forman_curvature",
    "generic_star_pair",
    "harmonic_laplacian",
    "jost_liu_bound",
    "jump",
    "jump_normalizer",
    "kappa_one",
    "kappa_t",
    "Laplacian",
    "laplacian_walk",
    "laplacian_walk_spec",
    "lazy_walk",
    "local_support",
    "Measure",
    "myers_check",
    "ollivier_ricci",
    "parallelepiped",
    "parallelepiped_laplacian",
    "platonic",
    "shortest_distances",
    "solve_transport",
    "sphere",
    "sphere_uniform",
    "tiling_patch",
    "TransportInstance",
    "TransportSolution",
    "triangles_on_edge",
    "UNIFORM",
    "verify_certificate",
    "WalkSpec",
    "wasserstein1",
    "weighted_laplacian",
]
