"""Smallest-positive-root search: uniform grid bracketing plus bisection.

The scan walks a uniform grid over [x_min, x_max] in chunks, preferring a
single vectorized call per chunk and falling back to pointwise evaluation
for scalar-only functions.  Sign changes are refined by bisection to the
configured tolerance.  Grid points where |f| drops below ``CANDIDATE_TOL``
without an adjacent sign change are reported as unconverged candidates:
tangential (double) roots produce no sign change, and silently skipping
them would be worse than returning an honest low-confidence result.

The scan starts at x_min > 0 by design; the transcendental equations this
package solves all have a trivial root at 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .exceptions import NonFiniteError, NoRootFoundError

CANDIDATE_TOL = 1e-10
_CHUNK = 4096


@dataclass(frozen=True)
class RootSearchConfig:
    """Grid and refinement parameters for a bracketing search.

    x_min excludes the trivial root at 0; step bounds the bracket width, so
    roots closer together than one step can merge.
    """

    x_min: float = 1e-4
    x_max: float = 10.0
    step: float = 1e-3
    tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        for name in ("x_min", "x_max", "step", "tol"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a positive finite real, got {v!r}")
        if not self.x_min < self.x_max:
            raise ValueError(f"x_min must be < x_max, got [{self.x_min}, {self.x_max}]")
        if self.step > (self.x_max - self.x_min) / 10.0:
            raise ValueError("step must be <= (x_max - x_min)/10")
        if isinstance(self.max_iter, bool) or not isinstance(self.max_iter, int) or self.max_iter < 1:
            raise ValueError(f"max_iter must be a positive integer, got {self.max_iter!r}")


@dataclass(frozen=True)
class RootResult:
    """One located root.

    ``converged`` is True for bisection-refined sign changes; False for
    tangential candidates (and for bisections stopped by max_iter), in
    which case ``root`` is only grid-accurate and ``residual`` says how
    small |f| actually got.
    """

    root: float
    bracket: tuple[float, float]
    residual: float
    converged: bool


def _grid(cfg: RootSearchConfig) -> np.ndarray:
    n = int(math.ceil((cfg.x_max - cfg.x_min) / cfg.step)) + 1
    return np.linspace(cfg.x_min, cfg.x_max, n)


def _eval_chunk(f: Callable, xs: np.ndarray) -> np.ndarray:
    try:
        ys = np.asarray(f(xs), dtype=float)
        if ys.shape != xs.shape:
            raise ValueError("shape mismatch")
    except (TypeError, ValueError, IndexError):
        ys = np.fromiter((float(f(float(x))) for x in xs), dtype=float, count=xs.size)
    if not np.all(np.isfinite(ys)):
        bad = int(np.argmin(np.isfinite(ys)))
        raise NonFiniteError(f"f(x={float(xs[bad])!r}) evaluated to a non-finite value")
    return ys


def _eval_scalar(f: Callable, x: float) -> float:
    y = float(f(x))
    if not math.isfinite(y):
        raise NonFiniteError(f"f(x={float(x)!r}) evaluated to a non-finite value")
    return y


def _bisect(f: Callable, lo: float, hi: float, flo: float, fhi: float,
            cfg: RootSearchConfig) -> RootResult:
    converged = False
    for _ in range(cfg.max_iter):
        if 0.5 * (hi - lo) <= cfg.tol:
            converged = True
            break
        mid = 0.5 * (lo + hi)
        fm = _eval_scalar(f, mid)
        if fm == 0.0:
            lo = hi = mid
            flo = fhi = 0.0
            converged = True
            break
        if (flo < 0.0) != (fm < 0.0):
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    root = 0.5 * (lo + hi)
    return RootResult(root=root, bracket=(lo, hi),
                      residual=abs(_eval_scalar(f, root)), converged=converged)


def _candidate(xs: np.ndarray, ys: np.ndarray, i: int, cfg: RootSearchConfig) -> RootResult:
    lo = max(cfg.x_min, float(xs[i]) - cfg.step)
    hi = min(cfg.x_max, float(xs[i]) + cfg.step)
    return RootResult(root=float(xs[i]), bracket=(lo, hi),
                      residual=abs(float(ys[i])), converged=False)


def _scan(f: Callable, cfg: RootSearchConfig, stop_at_first: bool):
    """Walk the grid; yield events (position_key, kind, data) in grid order.

    kind is one of "zero" (exact zero at a grid point), "flip" (sign change
    over a cell) or "cand" (standalone near-zero grid point).  A chunk's
    last point carries over to the next chunk so cells and candidate
    adjacency never straddle an unseen boundary.
    """
    xs = _grid(cfg)
    n = xs.size
    results = []
    start = 0
    tail_x = tail_y = None
    tail_left_flip = False  # did the cell ending at the carried point flip?
    while start < n:
        cx = xs[start:start + _CHUNK]
        cy = _eval_chunk(f, cx)
        if tail_x is not None:
            px = np.concatenate(([tail_x], cx))
            py = np.concatenate(([tail_y], cy))
        else:
            px, py = cx, cy
        neg = py < 0.0
        flip = neg[:-1] != neg[1:]
        is_last_chunk = start + _CHUNK >= n
        events = []
        for i in np.nonzero(py == 0.0)[0]:
            events.append((2 * int(i), "zero", int(i)))
        for i in np.nonzero(flip)[0]:
            if py[i] != 0.0 and py[i + 1] != 0.0:
                events.append((2 * int(i) + 1, "flip", int(i)))
        for i in np.nonzero(np.abs(py) < CANDIDATE_TOL)[0]:
            i = int(i)
            if py[i] == 0.0:
                continue
            if i == py.size - 1 and not is_last_chunk:
                continue  # adjacency to the right is unknown; re-seen next chunk
            if i > 0:
                left_flip = bool(flip[i - 1])
            else:
                left_flip = tail_left_flip if tail_x is not None else False
            right_flip = bool(flip[i]) if i < flip.size else False
            if not left_flip and not right_flip:
                events.append((2 * i, "cand", i))
        for _, kind, i in sorted(events):
            if kind == "zero":
                x0 = float(px[i])
                res = RootResult(root=x0, bracket=(x0, x0), residual=0.0, converged=True)
            elif kind == "flip":
                res = _bisect(f, float(px[i]), float(px[i + 1]),
                              float(py[i]), float(py[i + 1]), cfg)
            else:
                res = _candidate(px, py, i, cfg)
            results.append(res)
            if stop_at_first:
                return results
        tail_x, tail_y = float(cx[-1]), float(cy[-1])
        tail_left_flip = bool(flip[-1]) if flip.size else False
        start += _CHUNK
    return results


def smallest_positive_root(f: Callable, cfg: RootSearchConfig | None = None) -> RootResult:
    """Leftmost root of f in [cfg.x_min, cfg.x_max].

    A sign change is refined by bisection and returned with converged=True.
    If the leftmost event is instead a grid point where |f| < 1e-10 with no
    adjacent sign change (a tangential root the grid cannot bracket), that
    point is returned with converged=False.  Raises NoRootFoundError when
    the scan finds neither, NonFiniteError if f produces nan/inf.
    """
    cfg = cfg or RootSearchConfig()
    found = _scan(f, cfg, stop_at_first=True)
    if not found:
        raise NoRootFoundError(
            f"no sign change of f in [{cfg.x_min!r}, {cfg.x_max!r}] at step {cfg.step!r}")
    return found[0]


def _dedupe(results: Sequence[RootResult], step: float) -> list[RootResult]:
    out: list[RootResult] = []
    for r in sorted(results, key=lambda r: r.root):
        if out and abs(r.root - out[-1].root) < 0.5 * step:
            # same root seen twice (e.g. candidate next to a refined flip);
            # keep the converged one, or the smaller residual
            prev = out[-1]
            if (r.converged, -r.residual) > (prev.converged, -prev.residual):
                out[-1] = r
            continue
        out.append(r)
    return out


def all_roots_in(f: Callable, cfg: RootSearchConfig | None = None) -> list[RootResult]:
    """All roots of f in [cfg.x_min, cfg.x_max], sorted ascending.

    Returns refined sign-change roots plus unconverged tangential
    candidates, deduplicated to at least half a grid step apart.  An empty
    list means the scan saw no roots (unlike smallest_positive_root, this
    is not an error).
    """
    cfg = cfg or RootSearchConfig()
    return _dedupe(_scan(f, cfg, stop_at_first=False), cfg.step)
