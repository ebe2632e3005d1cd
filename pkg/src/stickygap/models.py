"""The four worked geometries and their upper-bound specializations.

Each model supplies the five interpolation constants for its geometry and
a closed-form bound that is, by construction, the generic interpolation
bound evaluated at those constants.  Both routes are exposed on purpose
(the specialized formula exactly as printed, and the constants for the
generic machinery) and the tests hold them to 1e-12 of each other.

Models:

* ball: unit ball in R^d with sticky-reflecting diffusion on the whole
  sphere; C_Omega must be supplied for d >= 3, and defaults to
  1/sigma_Omega (computed) for d = 2.
* manifold: compact manifold with boundary under a Ricci lower bound k_R
  and second-fundamental-form lower bound k_2; two independent bounds M1
  (interpolation) and M2 (integral-geometric), combined as their min.
* partial_disk: unit disk whose boundary diffusion runs only on an arc of
  fraction delta of the circle.
* needle: unit disk with a one-dimensional needle of length L attached to
  the boundary; the boundary gap constant comes from a trigonometric
  secular equation with the structural root gamma = 1.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .disk import neumann_disk_gap
from .exceptions import InvariantViolationError, MissingConstantError
from .interpolation import BoundConstants, _check_open_alpha, _require_positive
from .roots import RootResult, RootSearchConfig, smallest_positive_root

_NEEDLE_GAMMA_CFG = RootSearchConfig(x_min=1e-6, x_max=1.0 + 1e-6, step=1e-4, tol=1e-12)
_THRESHOLD_CFG = RootSearchConfig(x_min=0.01, x_max=0.999, step=1e-3, tol=1e-12)


def _check_dim(d) -> int:
    if isinstance(d, bool) or not isinstance(d, (int, np.integer)):
        raise TypeError("dimension d must be an integer")
    d = int(d)
    if d < 2:
        raise ValueError(f"dimension d must be >= 2, got {d}")
    return d


@dataclass(frozen=True)
class BallSpec:
    """Unit ball in R^d: boundary diffusivity beta, inward push rate gamma."""

    d: int
    beta: float
    gamma: float

    def __post_init__(self):
        object.__setattr__(self, "d", _check_dim(self.d))
        object.__setattr__(self, "beta", _require_positive("beta", self.beta))
        object.__setattr__(self, "gamma", _require_positive("gamma", self.gamma))

    @property
    def alpha(self) -> float:
        """Mixing weight alpha = gamma / (d + gamma), always in (0, 1)."""
        return self.gamma / (self.d + self.gamma)


@dataclass(frozen=True)
class ManifoldSpec:
    """Curvature data and input constants for the manifold bounds.

    k_r: Ricci lower bound; k_2: second-fundamental-form lower bound;
    c_omega / c_sigma: bulk and boundary Poincaré constants (inputs here,
    not computed); vol_ratio = |Omega| / |boundary|.
    """

    d: int
    k_r: float
    k_2: float
    c_omega: float
    c_sigma: float
    vol_ratio: float

    def __post_init__(self):
        object.__setattr__(self, "d", _check_dim(self.d))
        for name in ("k_r", "k_2", "c_omega", "c_sigma", "vol_ratio"):
            object.__setattr__(self, name, _require_positive(name, getattr(self, name)))


@dataclass(frozen=True)
class PartialDiskSpec:
    """Unit disk with boundary diffusion on an arc fraction delta in (0, 1)."""

    delta: float

    def __post_init__(self):
        delta = float(self.delta)
        if not (math.isfinite(delta) and 0.0 < delta < 1.0):
            raise ValueError(f"delta must lie strictly between 0 and 1, got {self.delta!r}")
        object.__setattr__(self, "delta", delta)


@dataclass(frozen=True)
class NeedleSpec:
    """Unit disk with an attached needle of the given length; diffusivity beta."""

    length: float
    beta: float

    def __post_init__(self):
        object.__setattr__(self, "length", _require_positive("length", self.length))
        object.__setattr__(self, "beta", _require_positive("beta", self.beta))


class NeedleRegime(enum.Enum):
    BULK_DOMINATES = "bulk_dominates"
    BOUNDARY_DOMINATES = "boundary_dominates"
    MIXED = "mixed"


# ------------------------------------------------------------------ ball

def _resolve_ball_c_omega(d: int, c_omega: float | None) -> float:
    if c_omega is not None:
        return _require_positive("c_omega", c_omega)
    if d == 2:
        return 1.0 / neumann_disk_gap()
    raise MissingConstantError(
        f"c_omega (bulk Neumann Poincaré constant) must be supplied for d = {d}; "
        "only d = 2 has a computed default")


def ball_constants(spec: BallSpec, c_omega: float | None = None) -> BoundConstants:
    """Interpolation constants for the full ball.

    C_Sigma = 1/(beta (d-1)) (sphere Laplacian gap, scaled by the boundary
    diffusivity), K_Sigma_Omega = 1/d, K_1 = (d+1)/(4 d^2), K_2 = 0.
    """
    d = spec.d
    return BoundConstants(
        c_omega=_resolve_ball_c_omega(d, c_omega),
        c_sigma=1.0 / (spec.beta * (d - 1)),
        k_sigma_omega=1.0 / d,
        k1=(d + 1) / (4.0 * d * d),
        k2=0.0,
    )


def _ball_bound_at(d: int, beta: float, c_om: float, a: float) -> float:
    term1 = c_om + (1.0 - a) * (d + 1) / (4.0 * d * d)
    term2 = (4.0 * (1.0 - a) * d + 4.0 * a * d * d * c_om + a * (1.0 - a) * (d + 1)) \
        / (4.0 * d * (a * d + (1.0 - a) * beta * (d - 1)))
    return max(term1, term2)


def ball_bound(spec: BallSpec, c_omega: float | None = None) -> float:
    """Closed-form ball bound at alpha = gamma/(d+gamma).

    max( C_Omega + (1-a)(d+1)/(4d^2),
         (4(1-a)d + 4a d^2 C_Omega + a(1-a)(d+1)) / (4d(a d + (1-a) beta (d-1))) ).
    """
    c_om = _resolve_ball_c_omega(spec.d, c_omega)
    return _ball_bound_at(spec.d, spec.beta, c_om, spec.alpha)


# -------------------------------------------------------------- manifold

def manifold_constants(spec: ManifoldSpec) -> BoundConstants:
    """Interpolation constants behind M1: K = 2/k_2, K_1 = (d-1)/(d k_R), K_2 = 0."""
    return BoundConstants(
        c_omega=spec.c_omega,
        c_sigma=spec.c_sigma,
        k_sigma_omega=2.0 / spec.k_2,
        k1=(spec.d - 1) / (spec.d * spec.k_r),
        k2=0.0,
    )


def manifold_m1(spec: ManifoldSpec, alpha: float) -> float:
    """Interpolation-route manifold bound M1.

    max( C_Omega + (1-a)(d-1)/(d k_R),
         (C_Sigma/(d k_R)) * (2(1-a) d k_R + a d k_2 k_R C_Omega
                              + a(1-a)(d-1) k_2) / (2(1-a) + a k_2 C_Sigma) ).
    """
    a = _check_open_alpha(alpha)
    d, k_r, k_2 = spec.d, spec.k_r, spec.k_2
    c_om, c_sig = spec.c_omega, spec.c_sigma
    term1 = c_om + (1.0 - a) * (d - 1) / (d * k_r)
    term2 = (c_sig / (d * k_r)) \
        * (2.0 * (1.0 - a) * d * k_r + a * d * k_2 * k_r * c_om
           + a * (1.0 - a) * (d - 1) * k_2) \
        / (2.0 * (1.0 - a) + a * k_2 * c_sig)
    return max(term1, term2)


def manifold_m2(spec: ManifoldSpec, alpha: float) -> float:
    """Integral-geometric manifold bound M2.

    max( (3d-1)(1-a) |Omega| / (d a k_2 |boundary|), (d-1)/(d k_R) );
    diverges as alpha -> 0 and tends to (d-1)/(d k_R) as alpha -> 1.
    """
    a = _check_open_alpha(alpha)
    d = spec.d
    term1 = (3.0 * d - 1.0) * (1.0 - a) * spec.vol_ratio / (d * a * spec.k_2)
    term2 = (d - 1) / (d * spec.k_r)
    return max(term1, term2)


def manifold_bound(spec: ManifoldSpec, alpha: float) -> float:
    """min(M1, M2): each is a valid upper bound, so their min is too."""
    return min(manifold_m1(spec, alpha), manifold_m2(spec, alpha))


# ---------------------------------------------------------- partial disk

def _partial_k1(delta):
    return (np.sqrt(1.0 - delta) * math.pi + 0.25 * np.sqrt(3.0 / delta)) ** 2


def partial_disk_constants(spec: PartialDiskSpec) -> BoundConstants:
    """Interpolation constants for boundary diffusion on an arc of fraction delta.

    C_Sigma = 4 delta^2 (interval Poincaré constant of the arc),
    K_Sigma_Omega = 1/(2 delta), K_1 = (sqrt(1-delta) pi + sqrt(3/delta)/4)^2,
    K_2 = 0, and the bulk constant is the computed 1/sigma_Omega.
    """
    delta = spec.delta
    return BoundConstants(
        c_omega=1.0 / neumann_disk_gap(),
        c_sigma=4.0 * delta * delta,
        k_sigma_omega=1.0 / (2.0 * delta),
        k1=float(_partial_k1(delta)),
        k2=0.0,
    )


def partial_disk_bound(spec: PartialDiskSpec, alpha: float) -> float:
    """Closed-form partial-disk bound.

    max( C_Omega + (1-a) K_1(delta),
         (4(1-a) d^2 + 8 a d^3 C_Omega + 8 a (1-a) d^3 K_1(delta))
         / ((1-a) + 8 a d^3) )        with d = delta.
    """
    a = _check_open_alpha(alpha)
    delta = spec.delta
    c_om = 1.0 / neumann_disk_gap()
    k1 = float(_partial_k1(delta))
    d3 = delta ** 3
    term1 = c_om + (1.0 - a) * k1
    term2 = (4.0 * (1.0 - a) * delta * delta + 8.0 * a * d3 * c_om
             + 8.0 * a * (1.0 - a) * d3 * k1) / ((1.0 - a) + 8.0 * a * d3)
    return max(term1, term2)


def partial_disk_continuity_threshold() -> float:
    """Smallest delta where 4 delta^2 = 1/sigma_Omega + K_1(delta).

    Above it the boundary constant C_Sigma = 4 delta^2 dominates the
    alpha -> 0 limit of the bound, so the bound curve interpolates all the
    way to C_Sigma; numerically about 0.862.
    """
    return _threshold_detail().root


def _threshold_detail() -> RootResult:
    c_om = 1.0 / neumann_disk_gap()

    def gap_at(delta):
        return 4.0 * delta * delta - c_om - _partial_k1(delta)

    return smallest_positive_root(gap_at, _THRESHOLD_CFG)


# ---------------------------------------------------------------- needle

def needle_secular_fn(gamma, length: float):
    """Secular function for the needle's boundary eigenvalue problem.

    2 cos(sqrt(g) L) (1 - cos(2 pi sqrt(g))) + sin(sqrt(g) L) sin(2 pi sqrt(g));
    gamma = 1 is always a root (tangentially for some L).  Accepts scalar
    or array gamma >= 0.
    """
    length = _require_positive("length", length)
    g = np.asarray(gamma, dtype=float)
    if g.size and (not np.all(np.isfinite(g)) or float(g.min()) < 0.0):
        raise ValueError("gamma must be non-negative and finite")
    th = np.sqrt(g)
    val = (2.0 * np.cos(th * length) * (1.0 - np.cos(2.0 * math.pi * th))
           + np.sin(th * length) * np.sin(2.0 * math.pi * th))
    return float(val) if g.ndim == 0 else val


@functools.lru_cache(maxsize=None)
def _needle_gamma_cached(length: float) -> float:
    return _needle_gamma_search(length, _NEEDLE_GAMMA_CFG).root


def _needle_gamma_search(length: float, cfg: RootSearchConfig) -> RootResult:
    rr = smallest_positive_root(lambda g: needle_secular_fn(g, length), cfg)
    if rr.root > 1.0 + 1e-9:
        raise InvariantViolationError(
            f"needle eigenvalue search returned gamma={rr.root!r} > 1 for L={length!r}; "
            "gamma_L <= 1 must hold")
    return rr


def needle_gamma(spec: NeedleSpec, cfg: RootSearchConfig | None = None) -> float:
    """Smallest positive root gamma_L of the needle secular equation.

    Guaranteed <= 1 (gamma = 1 is always a root); the default search grid
    covers (1e-6, 1 + 1e-6] at step 1e-4, whose last point catches the
    tangential gamma = 1 case.  For needles much shorter than ~1e-3 the
    true root hugs 1 so closely that the default grid cannot bracket it;
    pass a finer cfg then.  Independent of beta.
    """
    if cfg is None:
        return _needle_gamma_cached(spec.length)
    return _needle_gamma_search(spec.length, cfg).root


def _needle_k2(spec: NeedleSpec) -> float:
    ln = spec.length
    return ln * ln * (math.pi + ln) / (spec.beta * (2.0 * math.pi + ln))


def needle_constants(spec: NeedleSpec) -> BoundConstants:
    """Interpolation constants for the needle geometry.

    C_Sigma = 1/(beta gamma_L); K_1 = 3/8; K_2 = L^2 (pi+L) / (beta (2 pi + L));
    the needle is one-dimensional, so the bulk cannot control the boundary
    variance and K_Sigma_Omega is infinite.
    """
    return BoundConstants(
        c_omega=1.0 / neumann_disk_gap(),
        c_sigma=1.0 / (spec.beta * needle_gamma(spec)),
        k_sigma_omega=math.inf,
        k1=0.375,
        k2=_needle_k2(spec),
    )


def needle_bound(spec: NeedleSpec, alpha: float) -> float:
    """Closed-form needle bound.

    max( 1/sigma_Omega + (3/8)(1-a), 1/(beta gamma_L) + a L^2(pi+L)/(beta(2pi+L)) ).
    """
    a = _check_open_alpha(alpha)
    term1 = 1.0 / neumann_disk_gap() + 0.375 * (1.0 - a)
    term2 = 1.0 / (spec.beta * needle_gamma(spec)) + a * _needle_k2(spec)
    return max(term1, term2)


def needle_regime(spec: NeedleSpec) -> NeedleRegime:
    """Which term of the needle bound controls, over all alpha at once.

    beta >= sigma_Omega (1/gamma_L + L^2(pi+L)/(2pi+L)) makes the bulk
    term dominate for every alpha; beta <= (1/gamma_L)/(1/sigma_Omega + 3/8)
    makes the boundary term dominate; the thresholds never overlap.
    """
    sigma = neumann_disk_gap()
    g = needle_gamma(spec)
    ln = spec.length
    k2_unscaled = ln * ln * (math.pi + ln) / (2.0 * math.pi + ln)
    bulk_threshold = sigma * (1.0 / g + k2_unscaled)
    boundary_threshold = (1.0 / g) / (1.0 / sigma + 0.375)
    if spec.beta >= bulk_threshold:
        return NeedleRegime.BULK_DOMINATES
    if spec.beta <= boundary_threshold:
        return NeedleRegime.BOUNDARY_DOMINATES
    return NeedleRegime.MIXED
