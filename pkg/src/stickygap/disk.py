"""Exact spectral gap on the 2-D unit disk with sticky-reflecting boundary.

Separating variables in polar coordinates reduces the generator's
eigenvalue problem to one transcendental (secular) equation per angular
mode m:

    sqrt(lam) * J_m''(sqrt(lam)) + ((1+alpha)/(1-alpha)) * J_m'(sqrt(lam)) = 0.

Substituting the Bessel ODE for J_m'' gives the equivalent reduced form

    ((m^2 - lam)/sqrt(lam)) * J_m(sqrt(lam)) + (2*alpha/(1-alpha)) * J_m'(sqrt(lam)) = 0,

which avoids the cancellation inside J_m'' and is the form actually
searched; the original form is kept alongside and the two are asserted
against each other in the tests.  The spectral gap is the smallest
positive root over all modes, and the optimal Poincaré constant is its
reciprocal.

``neumann_disk_gap`` solves the alpha-free analogue J_m'(sqrt(lam)) = 0,
whose minimal solution sigma_Omega (first extremum of J_1, squared) is the
classical Neumann gap of the disk and feeds every other module needing
C_Omega = 1/sigma_Omega.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, replace

import numpy as np

from .bessel import bessel_j, bessel_j_prime, bessel_j_second
from .exceptions import InvariantViolationError, NoRootFoundError
from .interpolation import BoundCurve, alpha_grid
from .roots import RootResult, RootSearchConfig, smallest_positive_root

# sigma_Omega is known to two decimals from the disk's Bessel extremum;
# anything outside this window means the solver went off the rails.
_SIGMA_LO, _SIGMA_HI = 3.385, 3.395

_DEFAULT_M_MAX = 50
_NEUMANN_ROOT_CFG = RootSearchConfig(x_min=1e-4, x_max=20.0, step=1e-3, tol=1e-12)


@dataclass(frozen=True)
class DiskEigenConfig:
    """Scan limits for the per-mode eigenvalue search.

    Eigenvalues above lambda_max are never examined, so the reported gap
    is conditional on the gap lying below it (the default 400 is two
    orders above sigma_Omega).  root_cfg overrides the search grid in
    x = sqrt(lambda) space; by default it spans [1e-4, sqrt(lambda_max)].
    """

    m_max: int = _DEFAULT_M_MAX
    lambda_max: float = 400.0
    root_cfg: RootSearchConfig | None = None

    def __post_init__(self):
        if isinstance(self.m_max, bool) or not isinstance(self.m_max, int) or self.m_max < 2:
            raise ValueError(f"m_max must be an integer >= 2, got {self.m_max!r}")
        lm = float(self.lambda_max)
        if not (math.isfinite(lm) and lm > 4.0):
            raise ValueError(f"lambda_max must be finite and > 4, got {self.lambda_max!r}")

    def resolved_root_cfg(self) -> RootSearchConfig:
        if self.root_cfg is not None:
            return self.root_cfg
        return RootSearchConfig(x_min=1e-4, x_max=math.sqrt(float(self.lambda_max)),
                                step=1e-3, tol=1e-12)


def _check_alpha_halfopen(alpha) -> float:
    alpha = float(alpha)
    if not (0.0 <= alpha < 1.0):
        raise ValueError(f"alpha must lie in [0, 1), got {alpha!r}")
    return alpha


def _check_lambda(lam):
    arr = np.asarray(lam, dtype=float)
    if arr.size and (not np.all(np.isfinite(arr)) or float(arr.min()) <= 0.0):
        raise ValueError("lambda must be positive and finite")
    return lam if isinstance(lam, np.ndarray) else float(lam)


def _secular_x(m: int, alpha: float, x):
    # reduced form in x = sqrt(lambda); valid for alpha in [0, 1)
    c = 2.0 * alpha / (1.0 - alpha)
    return ((m * m - x * x) / x) * bessel_j(m, x) + c * bessel_j_prime(m, x)


def disk_secular_fn(m: int, alpha: float, lam):
    """Reduced secular function ((m^2-lam)/sqrt(lam)) J_m + (2a/(1-a)) J_m'.

    Zero exactly at the mode-m eigenvalues.  Accepts scalar or array lam;
    alpha in [0, 1).
    """
    alpha = _check_alpha_halfopen(alpha)
    lam = _check_lambda(lam)
    return _secular_x(m, alpha, np.sqrt(lam) if isinstance(lam, np.ndarray) else math.sqrt(lam))


def disk_secular_fn_full(m: int, alpha: float, lam):
    """Original secular form sqrt(lam) J_m'' + ((1+a)/(1-a)) J_m'.

    Same zeros as :func:`disk_secular_fn`; numerically inferior because of
    cancellation inside J_m''.  Kept for cross-checking only.
    """
    alpha = _check_alpha_halfopen(alpha)
    lam = _check_lambda(lam)
    x = np.sqrt(lam) if isinstance(lam, np.ndarray) else math.sqrt(lam)
    return x * bessel_j_second(m, x) + (1.0 + alpha) / (1.0 - alpha) * bessel_j_prime(m, x)


def _mode_cfg(base: RootSearchConfig, m: int) -> RootSearchConfig | None:
    # For 0 < x <= m both J_m and J_m' are positive, so the secular
    # function is strictly positive there and the search can start just
    # below x = m.  (Skipping that stretch also avoids the region where
    # J_m underflows and would trip the tangential-candidate detector.)
    lo = max(base.x_min, m - 0.5)
    if lo > base.x_max - 10.0 * base.step:
        return None  # provably no root inside the window
    if lo == base.x_min:
        return base
    return replace(base, x_min=lo)


def _mode_root(m: int, alpha: float, base_cfg: RootSearchConfig) -> RootResult | None:
    cfg = _mode_cfg(base_cfg, m)
    if cfg is None:
        return None
    fn = lambda x: _secular_x(m, alpha, x)
    try:
        return smallest_positive_root(fn, cfg)
    except NoRootFoundError:
        return None


def _gap_detail(alpha: float, cfg: DiskEigenConfig, strict_scan: bool):
    base = cfg.resolved_root_cfg()
    best_lam = math.inf
    best_m = -1
    best_rr = None
    for m in range(cfg.m_max + 1):
        if not strict_scan and m * m > best_lam:
            break
        rr = _mode_root(m, alpha, base)
        if rr is None:
            continue
        lam = rr.root ** 2
        if lam <= float(cfg.lambda_max) and lam < best_lam:
            best_lam, best_m, best_rr = lam, m, rr
    if best_m < 0:
        raise NoRootFoundError(
            f"no disk eigenvalue <= {cfg.lambda_max!r} for alpha={alpha!r} "
            f"with modes up to {cfg.m_max}")
    return best_lam, best_m, best_rr


def disk_exact_gap(alpha: float, cfg: DiskEigenConfig | None = None,
                   strict_scan: bool = False) -> tuple[float, int]:
    """Smallest positive eigenvalue and its angular mode, for alpha in [0, 1).

    Scans modes m = 0..cfg.m_max, taking each mode's smallest secular root
    (eigenvalues below root_cfg.x_min**2 are excluded by construction).
    By default the scan stops once m^2 exceeds the best eigenvalue so far,
    which is safe because mode m has no eigenvalue below m^2; pass
    strict_scan=True to force the full sweep to m_max anyway.  Ties go to
    the smaller mode.
    """
    alpha = _check_alpha_halfopen(alpha)
    lam, m, _ = _gap_detail(alpha, cfg or DiskEigenConfig(), strict_scan)
    return lam, m


@functools.lru_cache(maxsize=None)
def _neumann_detail(m_max: int):
    best = math.inf
    best_m = -1
    best_rr = None
    for m in range(m_max + 1):
        if m * m > best:
            break
        mode_cfg = _mode_cfg(_NEUMANN_ROOT_CFG, m)
        if mode_cfg is None:
            continue
        fn = lambda x: bessel_j_prime(m, x)
        try:
            rr = smallest_positive_root(fn, mode_cfg)
        except NoRootFoundError:
            continue
        lam = rr.root ** 2
        if lam < best:
            best, best_m, best_rr = lam, m, rr
    if best_m < 0:
        raise NoRootFoundError("no root of any J_m' found in the scan window")
    if not (_SIGMA_LO < best < _SIGMA_HI):
        raise InvariantViolationError(
            f"computed Neumann disk gap {best!r} falls outside [{_SIGMA_LO}, {_SIGMA_HI}]")
    return best, best_m, best_rr


def neumann_disk_gap(m_max: int = _DEFAULT_M_MAX) -> float:
    """First nonzero Neumann Laplacian eigenvalue of the unit disk.

    sigma_Omega = (first positive extremum of J_1)^2, approximately 3.39,
    found by scanning the roots of J_m'(x) over modes and taking the
    smallest square.  Cached; the result is sanity-checked against the
    two-decimal window [3.385, 3.395].
    """
    return _neumann_detail(int(m_max))[0]


def disk_upper_bound(alpha: float) -> float:
    """Closed-form interpolation bound for the unit disk with beta = 1.

    (8(1-a)s + 16a + 3a(1-a)s) / (8(1+a)s) with s = sigma_Omega; the d=2
    specialization of the general ball bound.
    """
    alpha = float(alpha)
    if not (0.0 < alpha < 1.0):
        raise ValueError(f"alpha must lie strictly between 0 and 1, got {alpha!r}")
    s = neumann_disk_gap()
    return (8.0 * (1.0 - alpha) * s + 16.0 * alpha + 3.0 * alpha * (1.0 - alpha) * s) \
        / (8.0 * (1.0 + alpha) * s)


def exact_curve(n_samples: int, cfg: DiskEigenConfig | None = None,
                strict_scan: bool = False) -> BoundCurve:
    """Exact constant 1/lambda_star and the disk upper bound on a midpoint grid.

    The returned curve carries exact values in .exact and the closed-form
    bound in .upper_bounds; constructing it re-asserts exact <= bound + 1e-9
    at every sample.
    """
    cfg = cfg or DiskEigenConfig()
    alphas = alpha_grid(n_samples)
    exact = np.empty_like(alphas)
    upper = np.empty_like(alphas)
    for i, a in enumerate(alphas):
        lam, _ = disk_exact_gap(float(a), cfg, strict_scan)
        exact[i] = 1.0 / lam
        upper[i] = disk_upper_bound(float(a))
    return BoundCurve(alphas=alphas, upper_bounds=upper, exact=exact)
