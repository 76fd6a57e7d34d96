"""Central finite-difference helpers used by the numerical oracles.

All stencils are central.  The second-order rules with step 1e-5 are used for
first-derivative oracles (expected error O(h^2) ~ 1e-10 on unit-scale data);
the fourth-order rules with larger steps are used wherever second derivatives
enter, since the 1e-5 step would drown a second difference in roundoff.
"""

from __future__ import annotations

import numpy as np

DEFAULT_STEP = 1e-5


def d1(f, x, h=DEFAULT_STEP):
    """Second-order central first derivative of f at scalar x."""
    return (np.asarray(f(x + h)) - np.asarray(f(x - h))) / (2.0 * h)


def d1_h4(f, x, h=1e-3):
    """Fourth-order central first derivative of f at scalar x."""
    fm2, fm1 = np.asarray(f(x - 2 * h)), np.asarray(f(x - h))
    fp1, fp2 = np.asarray(f(x + h)), np.asarray(f(x + 2 * h))
    return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h)


def d2_h4(f, x, h=1e-3):
    """Fourth-order central second derivative of f at scalar x."""
    f0 = np.asarray(f(x))
    fm2, fm1 = np.asarray(f(x - 2 * h)), np.asarray(f(x - h))
    fp1, fp2 = np.asarray(f(x + h)), np.asarray(f(x + 2 * h))
    return (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h)


def _shift(x, i, delta):
    x = np.array(x, dtype=float)
    x[i] += delta
    return x


def partial_d1(f, x, i, h=DEFAULT_STEP):
    """Second-order central partial derivative d f / d x_i at vector x."""
    return (np.asarray(f(_shift(x, i, h))) - np.asarray(f(_shift(x, i, -h)))) / (2.0 * h)


def partial_d1_h4(f, x, i, h=5e-3):
    """Fourth-order central partial derivative d f / d x_i at vector x."""
    fm2 = np.asarray(f(_shift(x, i, -2 * h)))
    fm1 = np.asarray(f(_shift(x, i, -h)))
    fp1 = np.asarray(f(_shift(x, i, h)))
    fp2 = np.asarray(f(_shift(x, i, 2 * h)))
    return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h)


def partial_d2_h4(f, x, i, j, h=5e-3):
    """Fourth-order central second partial d^2 f / d x_i d x_j at vector x."""
    if i == j:
        f0 = np.asarray(f(np.asarray(x, dtype=float)))
        fm2 = np.asarray(f(_shift(x, i, -2 * h)))
        fm1 = np.asarray(f(_shift(x, i, -h)))
        fp1 = np.asarray(f(_shift(x, i, h)))
        fp2 = np.asarray(f(_shift(x, i, 2 * h)))
        return (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h)
    return partial_d1_h4(lambda y: partial_d1_h4(f, y, j, h), x, i, h)


def jacobian(f, x, h=DEFAULT_STEP):
    """Second-order central Jacobian of f: R^n -> R^m at vector x, shape (m, n)."""
    x = np.asarray(x, dtype=float)
    cols = [partial_d1(f, x, i, h) for i in range(x.size)]
    return np.stack(cols, axis=-1)
