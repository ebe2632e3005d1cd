"""Interpolation upper bound for the sticky-reflection Poincaré constant.

Given the five constants

* C_Omega  -- optimal Neumann Poincaré constant of the bulk,
* C_Sigma  -- Poincaré constant of the boundary diffusion,
* K_Sigma_Omega -- bulk-controls-boundary-variance constant (may be +inf),
* K_1, K_2 -- bulk/boundary Dirichlet-form interaction constants,

the variance of any test function under the mixed measure
alpha*vol + (1-alpha)*surface splits into bulk, boundary and mean-gap
parts, and optimizing the split weight t in [0,1] yields

    C_alpha <= max( C_Omega + (1-alpha) K_1,
                    alpha K_2,
                    ((1-a)K C_S + a C_O C_S + a(1-a)(K K_2 + C_S K_1))
                    / ((1-a)K + a C_S) ),

with the third term degenerating to C_Sigma + alpha*K_2 when K is
infinite.  ``inf_max_affine`` is the scalar optimization underlying the
third term; ``interpolation_bound_via_infmax`` recomputes the bound along
that second route as a permanent cross-check of the closed form.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import InvariantViolationError

#: slack allowed when checking exact values against upper bounds
DOMINANCE_TOL = 1e-9


def _require_positive(name: str, v, allow_inf: bool = False, allow_zero: bool = False):
    v = float(v)
    if math.isnan(v):
        raise ValueError(f"{name} must not be nan")
    if math.isinf(v) and not allow_inf:
        raise ValueError(f"{name} must be finite, got {v!r}")
    if v < 0.0 or (v == 0.0 and not allow_zero):
        raise ValueError(f"{name} must be {'>= 0' if allow_zero else '> 0'}, got {v!r}")
    return v


def _check_open_alpha(alpha) -> float:
    alpha = float(alpha)
    if not (0.0 < alpha < 1.0):
        raise ValueError(f"alpha must lie strictly between 0 and 1, got {alpha!r}")
    return alpha


@dataclass(frozen=True)
class BoundConstants:
    """The five constants feeding the interpolation bound.

    k_sigma_omega may be math.inf (geometries whose bulk cannot control
    the boundary variance, e.g. a lower-dimensional boundary piece).
    """

    c_omega: float
    c_sigma: float
    k_sigma_omega: float
    k1: float
    k2: float

    def __post_init__(self):
        object.__setattr__(self, "c_omega", _require_positive("c_omega", self.c_omega))
        object.__setattr__(self, "c_sigma", _require_positive("c_sigma", self.c_sigma))
        object.__setattr__(self, "k_sigma_omega",
                           _require_positive("k_sigma_omega", self.k_sigma_omega, allow_inf=True))
        object.__setattr__(self, "k1", _require_positive("k1", self.k1, allow_zero=True))
        object.__setattr__(self, "k2", _require_positive("k2", self.k2, allow_zero=True))


@dataclass(frozen=True, eq=False)
class BoundCurve:
    """Sampled alpha grid with upper bounds and optional exact values.

    Construction enforces the dominance invariant: where exact values are
    present, exact[i] <= upper_bounds[i] + 1e-9.
    """

    alphas: np.ndarray
    upper_bounds: np.ndarray
    exact: np.ndarray | None = None

    def __post_init__(self):
        a = np.asarray(self.alphas, dtype=float)
        u = np.asarray(self.upper_bounds, dtype=float)
        if a.ndim != 1 or u.shape != a.shape:
            raise ValueError("alphas and upper_bounds must be 1-D arrays of equal length")
        if a.size and (not np.all(np.isfinite(a)) or a.min() <= 0.0 or a.max() >= 1.0):
            raise ValueError("alphas must lie strictly inside (0, 1)")
        if np.any(np.diff(a) <= 0.0):
            raise ValueError("alphas must be strictly increasing")
        if a.size and (not np.all(np.isfinite(u)) or u.min() <= 0.0):
            raise ValueError("upper_bounds must be finite and positive")
        object.__setattr__(self, "alphas", a)
        object.__setattr__(self, "upper_bounds", u)
        if self.exact is not None:
            e = np.asarray(self.exact, dtype=float)
            if e.shape != a.shape:
                raise ValueError("exact must match alphas in length")
            if e.size and (not np.all(np.isfinite(e)) or e.min() <= 0.0):
                raise ValueError("exact values must be finite and positive")
            worst = float(np.max(e - u)) if e.size else 0.0
            if worst > DOMINANCE_TOL:
                i = int(np.argmax(e - u))
                raise InvariantViolationError(
                    f"exact value exceeds upper bound at alpha={a[i]!r} by {worst:.3e}")
            object.__setattr__(self, "exact", e)

    def __len__(self):
        return self.alphas.size


class Verdict(enum.Enum):
    CONTINUOUS = "continuous"
    DISCONTINUOUS = "discontinuous"
    UNKNOWN = "unknown"


def inf_max_affine(a: float, b: float, c: float, d: float) -> float:
    """inf over t in [0,1] of max(a + b*t, c - d*t), for positive a,b,c,d.

    Closed form: a when c - a < 0 (the rising line already dominates at
    t=0); c - d when c - a > b + d (the falling line dominates at t=1);
    the crossing value (b*c + a*d)/(b + d) otherwise, applied inclusively
    at both case boundaries.  b may be +inf, in which case any t > 0 is
    ruled out and the infimum is max(a, c).
    """
    a = _require_positive("a", a)
    b = _require_positive("b", b, allow_inf=True)
    c = _require_positive("c", c)
    d = _require_positive("d", d)
    if math.isinf(b):
        return max(a, c)
    if c - a < 0.0:
        return a
    if c - a > b + d:
        return c - d
    return (b * c + a * d) / (b + d)


def _third_term(consts: BoundConstants, alpha: float) -> float:
    k = consts.k_sigma_omega
    cs = consts.c_sigma
    if math.isinf(k):
        return cs + alpha * consts.k2
    num = ((1.0 - alpha) * k * cs + alpha * consts.c_omega * cs
           + alpha * (1.0 - alpha) * (k * consts.k2 + cs * consts.k1))
    den = (1.0 - alpha) * k + alpha * cs
    return num / den


def interpolation_bound(consts: BoundConstants, alpha: float) -> float:
    """The three-term interpolation upper bound at mixing weight alpha in (0,1)."""
    alpha = _check_open_alpha(alpha)
    return max(consts.c_omega + (1.0 - alpha) * consts.k1,
               alpha * consts.k2,
               _third_term(consts, alpha))


def interpolation_bound_via_infmax(consts: BoundConstants, alpha: float) -> float:
    """Same bound, recomputed through the underlying inf-max optimization.

    Must agree with :func:`interpolation_bound` to 1e-12; kept as a
    permanent regression guard between the two derivations.
    """
    alpha = _check_open_alpha(alpha)
    a = consts.c_omega + (1.0 - alpha) * consts.k1
    k = consts.k_sigma_omega
    b = math.inf if math.isinf(k) else (1.0 - alpha) / alpha * k
    c = consts.c_sigma + alpha * consts.k2
    d = consts.c_sigma
    return max(alpha * consts.k2, inf_max_affine(a, b, c, d))


def continuity_at_zero(consts: BoundConstants, c_tilde_zero: float | None = None) -> Verdict:
    """Continuity of alpha -> C_alpha at alpha = 0.

    c_tilde_zero is the inverse spectral gap of the bulk motion killed on
    the sticky boundary piece; C_Sigma < c_tilde_zero forces a jump at 0.
    Without it, C_Sigma >= C_Omega + K_1 certifies continuity; anything
    else is genuinely undecided by these constants alone.
    """
    if c_tilde_zero is not None:
        c_tilde_zero = _require_positive("c_tilde_zero", c_tilde_zero)
        if consts.c_sigma < c_tilde_zero:
            return Verdict.DISCONTINUOUS
    if consts.c_sigma >= consts.c_omega + consts.k1:
        return Verdict.CONTINUOUS
    return Verdict.UNKNOWN


def continuity_at_one(consts: BoundConstants) -> Verdict:
    """Continuity at alpha = 1: certified when C_Omega >= K_2 (inclusive)."""
    if consts.c_omega >= consts.k2:
        return Verdict.CONTINUOUS
    return Verdict.UNKNOWN


def rectangle_limit(b: float) -> tuple[float, bool]:
    """alpha -> 0 limit of C_alpha for the rectangle (0,pi) x (0,b) with
    sticky diffusion on one width-b side.

    Returns (max(b^2/pi^2, 4/pi^2), discontinuous_at_zero); the boundary
    constant is C_Sigma = b^2/pi^2, so the limit exceeds it, and the curve
    jumps at 0, exactly when b < 2.
    """
    b = _require_positive("b", b)
    c_sigma = b * b / math.pi ** 2
    limit = max(c_sigma, 4.0 / math.pi ** 2)
    return limit, b < 2.0


def alpha_grid(n_samples: int) -> np.ndarray:
    """Uniform midpoint grid of n_samples points inside (0,1)."""
    if isinstance(n_samples, bool) or not isinstance(n_samples, (int, np.integer)):
        raise TypeError("n_samples must be an integer")
    n_samples = int(n_samples)
    if n_samples < 2:
        raise ValueError(f"n_samples must be >= 2, got {n_samples}")
    return (np.arange(n_samples) + 0.5) / n_samples


def bound_curve(consts: BoundConstants, n_samples: int) -> BoundCurve:
    """Sample interpolation_bound on a midpoint alpha grid."""
    alphas = alpha_grid(n_samples)
    ub = np.array([interpolation_bound(consts, float(a)) for a in alphas])
    return BoundCurve(alphas=alphas, upper_bounds=ub)
