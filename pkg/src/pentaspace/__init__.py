"""Exact invariants of pentagon spaces.

Moment polytopes of the bending flows, lattice counts, Riemann-Roch
numbers and volumes of nearly-regular pentagon spaces, plus an exhaustive
Duistermaat-Heckman search showing that the regular pentagon space admits
no Hamiltonian circle action.
"""

from .dh import (
    DHConstraints,
    DHProfile,
    critical_values,
    enclosed_lattice_points,
    enumerate_dh,
    karshon_filter,
    verify_no_circle_action,
)
from .errors import *  # noqa: F401,F403
from .geometry import (
    ConvexPolygon,
    HalfPlane,
    area,
    boundary_lattice_count,
    convex_hull,
    intersect_forms,
    intersect_half_planes,
    lattice_count_brute,
    lattice_points,
    pick_count,
)
from .invariants import (
    REGULAR,
    RRPoly,
    betti_numbers,
    euler_characteristic,
    fit_rr_polynomial,
    moment_lattice_count,
    rr_closed_form,
    sample_tuples,
    symplectic_volume,
    topology,
    verify_rr_extension,
)
from .pentagon import (
    EdgeLengths,
    MomentPolytope,
    is_nearly_regular,
    is_smooth,
    is_toric_generic,
    moment_polytope,
)
from .svg import render_polytope_svg
from .rational import Matrix, Rational, Vec2, format_rational, rational_from_string, solve_exact

__version__ = "0.1.0"
