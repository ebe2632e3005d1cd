"""Rigorous upper bounds on the optimal Poincaré constant for Brownian
motion with sticky-reflecting boundary diffusion.

The generator couples an interior Laplacian to a Wentzell boundary
operator (tangential diffusion at rate beta, inward push at rate gamma);
its invariant measure mixes bulk and surface with weight alpha.  This
package computes certified upper bounds on the optimal constant C_alpha
(equivalently, lower bounds on the spectral gap) by interpolating bulk
and boundary Poincaré inequalities, and solves the associated secular
equations exactly for the unit disk and the needle geometry.

Layout: :mod:`stickygap.bessel` (first-kind Bessel functions from
scratch, with a quadrature cross-check), :mod:`stickygap.roots`
(bracketed scanning root finder), :mod:`stickygap.interpolation` (the
generic three-term bound and continuity verdicts), :mod:`stickygap.disk`
(exact disk eigenvalues), :mod:`stickygap.models` (ball, manifold,
partial disk, needle), :mod:`stickygap.cli` (command-line front end).
"""

from .bessel import (bessel_j, bessel_j_prime, bessel_j_quadrature,
                     bessel_j_second)
from .disk import (DiskEigenConfig, disk_exact_gap, disk_secular_fn,
                   disk_secular_fn_full, disk_upper_bound, neumann_disk_gap)
from .disk import exact_curve as disk_exact_curve
from .exceptions import (InvariantViolationError, MissingConstantError,
                         NonFiniteError, NoRootFoundError)
from .interpolation import (BoundConstants, BoundCurve, Verdict, alpha_grid,
                            bound_curve, continuity_at_one, continuity_at_zero,
                            inf_max_affine, interpolation_bound,
                            interpolation_bound_via_infmax, rectangle_limit)
from .models import (BallSpec, ManifoldSpec, NeedleRegime, NeedleSpec,
                     PartialDiskSpec, ball_bound, ball_constants,
                     manifold_bound, manifold_constants, manifold_m1,
                     manifold_m2, needle_bound, needle_constants, needle_gamma,
                     needle_regime, needle_secular_fn,
                     partial_disk_bound, partial_disk_constants,
                     partial_disk_continuity_threshold)
from .roots import (RootResult, RootSearchConfig, all_roots_in,
                    smallest_positive_root)

__version__ = "0.1.0"

__all__ = [
    "BallSpec",
    "BoundConstants",
    "BoundCurve",
    "DiskEigenConfig",
    "InvariantViolationError",
    "ManifoldSpec",
    "MissingConstantError",
    "NeedleRegime",
    "NeedleSpec",
    "NonFiniteError",
    "NoRootFoundError",
    "PartialDiskSpec",
    "RootResult",
    "RootSearchConfig",
    "Verdict",
    "all_roots_in",
    "alpha_grid",
    "ball_bound",
    "ball_constants",
    "bessel_j",
    "bessel_j_prime",
    "bessel_j_quadrature",
    "bessel_j_second",
    "bound_curve",
    "continuity_at_one",
    "continuity_at_zero",
    "disk_exact_curve",
    "disk_exact_gap",
    "disk_secular_fn",
    "disk_secular_fn_full",
    "disk_upper_bound",
    "inf_max_affine",
    "interpolation_bound",
    "interpolation_bound_via_infmax",
    "manifold_bound",
    "manifold_constants",
    "manifold_m1",
    "manifold_m2",
    "needle_bound",
    "needle_constants",
    "needle_gamma",
    "needle_regime",
    "needle_secular_fn",
    "neumann_disk_gap",
    "partial_disk_bound",
    "partial_disk_constants",
    "partial_disk_continuity_threshold",
    "rectangle_limit",
    "smallest_positive_root",
    "__version__",
]
