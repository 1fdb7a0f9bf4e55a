"""Geometry of the positive quadrant under an L_p norm, p in [1, inf].

The angular decomposition of bivariate extremes is taken with respect to
a user-chosen norm order p.  Everything downstream (extreme selection,
angular scores, spectral masses) depends on p only through the functions
collected here.

The order p is an ordinary float; ``math.inf`` selects the max norm and
is handled by an explicit branch in every formula, never by a large
finite exponent.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "NormOrder",
    "check_norm_order",
    "lp_norm",
    "score_f",
    "y_curve",
    "x_boundary",
]

# Norm order: a float in [1, inf]; math.inf is the exact max-norm case.
NormOrder = float

_QUARTER_PI = math.pi / 4.0
_HALF_PI = math.pi / 2.0


def check_norm_order(p: float) -> float:
    """Validate a norm order and return it as a float (inf allowed)."""
    p = float(p)
    if math.isnan(p) or p < 1.0:
        raise ValueError(f"norm order must satisfy p >= 1 (inf allowed), got {p!r}")
    return p


def _maybe_scalar(out: np.ndarray, scalar: bool):
    return float(out) if scalar else out


def lp_norm(x, y, p: float):
    """L_p norm of the componentwise pair ``(x, y)``, elementwise.

    Parameters
    ----------
    x, y : array_like
        Nonnegative components.
    p : float
        Norm order in [1, inf]; ``math.inf`` gives ``max(x, y)``.

    Notes
    -----
    For general finite p the evaluation is ``hi * (1 + (lo/hi)**p)**(1/p)``
    with ``hi = max(x, y)``, which avoids overflow and underflow of the
    raw powers when p is large.  p = 1 and p = 2 use exact direct forms.
    """
    p = check_norm_order(p)
    scalar = np.ndim(x) == 0 and np.ndim(y) == 0
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if math.isinf(p):
        return _maybe_scalar(np.maximum(x, y), scalar)
    if p == 1.0:
        return _maybe_scalar(x + y, scalar)
    if p == 2.0:
        return _maybe_scalar(np.hypot(x, y), scalar)
    hi = np.maximum(x, y)
    lo = np.minimum(x, y)
    safe = np.where(hi > 0.0, hi, 1.0)
    ratio = np.where(hi > 0.0, lo / safe, 0.0)
    out = hi * (1.0 + ratio**p) ** (1.0 / p)
    return _maybe_scalar(out, scalar)


def score_f(theta, p: float):
    """Angular moment score f(theta) = (sin - cos) / ||(sin, cos)||_p.

    Strictly increasing on [0, pi/2] with f(0) = -1, f(pi/4) = 0 and
    f(pi/2) = 1, all three exact; odd about pi/4 in the sense
    f(pi/4 + d) = -f(pi/4 - d).  A discrete angular measure Q satisfies
    the spectral moment constraints exactly when the Q-mean of this
    score vanishes.
    """
    p = check_norm_order(p)
    scalar = np.ndim(theta) == 0
    theta = np.asarray(theta, dtype=float)
    s = np.sin(theta)
    c = np.cos(theta)
    out = (s - c) / lp_norm(s, c, p)
    # the float pi/4 stands for the exact diagonal angle (rank ties map
    # to it through arctan(1)), but sin/cos round one-sidedly there and
    # at pi/2; pin both symmetry points to their exact scores
    out = np.where(theta == _QUARTER_PI, 0.0, out)
    out = np.where(theta == _HALF_PI, 1.0, out)
    return _maybe_scalar(out, scalar)


def y_curve(x, p: float):
    """Second coordinate of the L_p unit-level curve at first coordinate x.

    Solves ``||(1/x, 1/y)||_p = 1`` for y:

    * x < 1: no solution, returns ``inf``;
    * finite p, x = 1: ``inf``;
    * finite p, x > 1: ``(1 + 1/(x**p - 1))**(1/p)``;
    * p = inf, x >= 1: 1.
    """
    p = check_norm_order(p)
    scalar = np.ndim(x) == 0
    x = np.asarray(x, dtype=float)
    out = np.full(x.shape, np.inf)
    if math.isinf(p):
        np.putmask(out, x >= 1.0, 1.0)
        return _maybe_scalar(out, scalar)
    mask = x >= 1.0
    if np.any(mask):
        xm = x[mask]
        with np.errstate(divide="ignore", over="ignore"):
            # t = x**(-p) in (0, 1]; y = (1 - t)**(-1/p), stable for x near 1
            # and for huge x**p (t underflows to 0, y -> 1)
            t = np.exp(-p * np.log(xm))
            ym = np.exp(-np.log1p(-t) / p)
        out[mask] = ym
    return _maybe_scalar(out, scalar)


def x_boundary(theta, p: float):
    """First coordinate where the ray at angle ``theta`` exits the unit level set.

    Equals ``||(1, cot(theta))||_p`` for theta in (0, pi/2]; the limit
    ``inf`` is returned at theta = 0.  Satisfies
    ``y_curve(x_boundary(theta)) = x_boundary(theta) * tan(theta)``
    wherever both sides are finite.
    """
    p = check_norm_order(p)
    scalar = np.ndim(theta) == 0
    theta = np.asarray(theta, dtype=float)
    with np.errstate(divide="ignore"):
        cot = np.cos(theta) / np.sin(theta)
    out = lp_norm(np.ones_like(theta), cot, p)
    out = np.where(theta == 0.0, np.inf, out)
    return _maybe_scalar(out, scalar)
