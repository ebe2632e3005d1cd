"""
Checking the Bessel evaluator against quadrature
================================================

Everything downstream (disk eigenvalues, hence sigma_Omega and the exact
constant curve) rests on J_m, its derivative, and its second derivative,
all computed in-house: an ascending series for x <= 10 and Miller's
backward recurrence beyond.  The one independent check is the integral
representation J_m(x) = (1/pi) int_0^pi cos(m t - x sin t) dt, evaluated
with composite Simpson quadrature.  This script measures the agreement and
the internal consistency of the derivative formulas.
"""

import numpy as np

from stickygap import (bessel_j, bessel_j_prime, bessel_j_quadrature,
                       bessel_j_second)

print("spot checks against 1024-panel Simpson quadrature:")
for m, x in [(0, 1.0), (1, 2.404825557695773), (3, 7.5), (5, 12.0), (10, 25.0)]:
    ours = bessel_j(m, x)
    ref = bessel_j_quadrature(m, x, 1024)
    print(f"  J_{m:<2d}({x:9.4f}) = {ours:+.15f}   |diff| = {abs(ours - ref):.2e}")

# worst case over a grid spanning both evaluation branches (seam at x = 10)
xs = np.arange(0.0, 30.0 + 1e-9, 0.1)
worst = 0.0
for m in range(11):
    ref = np.array([bessel_j_quadrature(m, float(x), 1024) for x in xs])
    worst = max(worst, float(np.max(np.abs(bessel_j(m, xs) - ref))))
print(f"\nworst |J_m - quadrature| for m <= 10, x in [0, 30]: {worst:.2e}")

# three-term recurrence J_{m-1} + J_{m+1} = (2m/x) J_m, an identity the
# series and the backward recurrence must both satisfy
xs = np.arange(0.5, 30.0, 0.25)
worst = 0.0
for m in range(1, 11):
    resid = bessel_j(m - 1, xs) + bessel_j(m + 1, xs) \
        - (2.0 * m / xs) * bessel_j(m, xs)
    worst = max(worst, float(np.max(np.abs(resid))))
print(f"worst three-term recurrence residual:              {worst:.2e}")

# the defining equation x^2 J'' + x J' + (x^2 - m^2) J = 0 ties all three
# evaluators together
worst = 0.0
for m in range(11):
    resid = xs * xs * bessel_j_second(m, xs) + xs * bessel_j_prime(m, xs) \
        + (xs * xs - m * m) * bessel_j(m, xs)
    worst = max(worst, float(np.max(np.abs(resid))))
print(f"worst differential-equation residual:              {worst:.2e}")
