"""Reference bivariate models with known spectral measures.

Each model packages the exact angular cumulative distribution function
of its spectral measure (closed form where available, adaptive
quadrature of the interior density otherwise) together with, where
supported, an exact sampler for the corresponding bivariate
distribution.  These are the ground truths the estimators are judged
against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .lp_geometry import check_norm_order, lp_norm
from .pseudo_obs import BivariateSample
from .quadrature import adaptive_simpson, cumulative_integral

__all__ = [
    "SpectralModel",
    "logistic_stdf",
    "asym_logistic_spectral_density",
    "asym_logistic_model",
    "sample_logistic",
    "cauchy_quadrant_model",
    "cauchy_fullplane_model",
    "mixture_model",
    "moment_sums",
]

HALF_PI = math.pi / 2.0
QUARTER_PI = math.pi / 4.0

#: offset at which integrable endpoint singularities are cut and
#: replaced by their leading-order analytic contribution
_EDGE_EPS = 1e-10


@dataclass(frozen=True)
class SpectralModel:
    """A spectral measure on [0, pi/2] with optional bivariate sampler.

    Attributes
    ----------
    name : str
        Model family identifier (for example ``"cauchy-quadrant"``).
    params : dict
        Family parameters, empty when there are none.
    p : float
        Norm order the angular decomposition refers to.
    atom_zero, atom_half_pi : float
        Point masses at the two endpoint angles.
    interior_density : callable or None
        Density of the measure on the open interval, None when the
        measure is purely atomic.
    sampler : callable or None
        ``sampler(n, rng) -> BivariateSample`` drawing from the
        bivariate distribution whose spectral measure this is.
    default_ise_interval : (float, float)
        Angle interval used by the benchmark harness when the caller
        does not choose one.
    endpoint_power : float or None
        When the density has integrable algebraic endpoint
        singularities ``theta**(q-1)``, the exponent q; None for
        bounded densities.
    """

    name: str
    params: dict
    p: float
    atom_zero: float
    atom_half_pi: float
    interior_density: Optional[Callable]
    sampler: Optional[Callable] = field(repr=False, default=None)
    default_ise_interval: tuple = (0.0, HALF_PI)
    endpoint_power: Optional[float] = None
    _interior_cdf: Callable = field(repr=False, default=None)

    @property
    def total_mass(self) -> float:
        return float(self.cdf(HALF_PI))

    def describe(self) -> str:
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"{self.name}({inner})"

    def _interior(self, theta: np.ndarray) -> np.ndarray:
        if self._interior_cdf is None:
            return np.zeros_like(theta)
        return np.asarray(self._interior_cdf(theta), dtype=float)

    def cdf_continuous(self, theta):
        """Cumulative mass on [0, theta] excluding the atom at pi/2.

        This is the version integrated against in ISE computations; it
        differs from :meth:`cdf` only at the single point pi/2.
        """
        scalar = np.ndim(theta) == 0
        theta = np.asarray(theta, dtype=float)
        if theta.size and (theta.min() < 0.0 or theta.max() > HALF_PI + 1e-12):
            raise ValueError("angles must lie in [0, pi/2]")
        out = self.atom_zero + self._interior(np.minimum(theta, HALF_PI))
        return float(out) if scalar else out

    def cdf(self, theta):
        """Right-continuous cumulative mass on [0, theta], atoms included."""
        scalar = np.ndim(theta) == 0
        theta = np.asarray(theta, dtype=float)
        out = self.cdf_continuous(theta) + self.atom_half_pi * (theta >= HALF_PI)
        return float(out) if scalar else out

    @property
    def has_sampler(self) -> bool:
        return self.sampler is not None

    def sample(self, n: int, rng: np.random.Generator) -> BivariateSample:
        """Draw n bivariate observations; requires a supported sampler."""
        if self.sampler is None:
            raise NotImplementedError(f"model {self.describe()} has no sampler")
        if n < 1:
            raise ValueError("sample size must be at least 1")
        return self.sampler(int(n), rng)


# ---------------------------------------------------------------------------
# quadrature-backed interior cdfs


def _quad_interior_cdf(density: Callable, power: Optional[float], tol: float = 1e-9):
    """Vectorized cumulative integral of an interior density.

    ``power`` is the algebraic order q of integrable endpoint
    singularities ``K * t**(q-1)``; the mass inside ``_EDGE_EPS`` of an
    endpoint is then ``density(edge) * eps / q`` to leading order, which
    is added analytically instead of chasing the singularity with panel
    refinement.
    """
    if power is not None:
        lo_edge = _EDGE_EPS
        hi_edge = HALF_PI - _EDGE_EPS
        left_corr = density(lo_edge) * _EDGE_EPS / power
        right_corr = density(hi_edge) * _EDGE_EPS / power
    else:
        lo_edge, hi_edge = 0.0, HALF_PI
        left_corr = right_corr = 0.0

    def interior_cdf(theta):
        t = np.asarray(theta, dtype=float)
        flat = np.atleast_1d(t).ravel()
        uniq, inverse = np.unique(flat, return_inverse=True)
        clipped = np.clip(uniq, lo_edge, hi_edge)
        vals = np.asarray(cumulative_integral(density, lo_edge, clipped, tol))
        if power is not None:
            # analytic ramp K*t**q through the cut endpoint segments
            below = np.clip(uniq, 0.0, lo_edge) / lo_edge
            vals = vals + left_corr * below**power
            over = (HALF_PI - np.clip(uniq, hi_edge, HALF_PI)) / _EDGE_EPS
            vals = vals + right_corr * (1.0 - over**power)
        return vals[inverse].reshape(t.shape)

    return interior_cdf


def _arc_norm_cdf(p: float) -> Optional[Callable]:
    """Closed forms of the integral of ||(sin, cos)||_p from 0 to theta."""
    if p == 1.0:

        def cdf1(t):
            t = np.asarray(t, dtype=float)
            return np.sin(t) - np.cos(t) + 1.0

        return cdf1
    if p == 2.0:

        def cdf2(t):
            return np.asarray(t, dtype=float).copy()

        return cdf2
    if math.isinf(p):
        sqrt2 = math.sqrt(2.0)

        def cdfinf(t):
            t = np.asarray(t, dtype=float)
            return np.where(t <= QUARTER_PI, np.sin(t), sqrt2 - np.cos(t))

        return cdfinf
    return None


# ---------------------------------------------------------------------------
# asymmetric logistic family


def logistic_stdf(x1, x2, r: float, psi1: float = 1.0, psi2: float = 1.0):
    """Stable tail dependence function of the asymmetric logistic family.

    l(x1, x2) = (1 - psi1) x1 + (1 - psi2) x2
                + ((psi1 x1)**r + (psi2 x2)**r)**(1/r).

    Homogeneous of order one; r = 1 or psi1 psi2 = 0 degenerates to
    l = x1 + x2 (tail independence), while psi1 = psi2 = 1 and
    r -> inf approaches complete dependence max(x1, x2).
    """
    r, psi1, psi2 = _check_logistic_params(r, psi1, psi2)
    scalar = np.ndim(x1) == 0 and np.ndim(x2) == 0
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    out = (1.0 - psi1) * x1 + (1.0 - psi2) * x2 + lp_norm(psi1 * x1, psi2 * x2, r)
    return float(out) if scalar else out


def _check_logistic_params(r, psi1, psi2):
    r = float(r)
    if not (r >= 1.0 and math.isfinite(r)):
        raise ValueError(f"dependence parameter must satisfy 1 <= r < inf, got {r!r}")
    psi1 = float(psi1)
    psi2 = float(psi2)
    if not (0.0 <= psi1 <= 1.0 and 0.0 <= psi2 <= 1.0):
        raise ValueError("asymmetry weights must lie in [0, 1]")
    return r, psi1, psi2


def asym_logistic_spectral_density(theta, r: float, psi1: float, psi2: float, p: float):
    """Interior spectral density of the asymmetric logistic model.

    Requires r > 1; identically zero when psi1 psi2 = 0, otherwise on
    the open interval (0, pi/2):

        (r - 1) (psi1 psi2)**r ||(sin, cos)||_p
        (sin cos)**(r-2) ((psi1 cos)**r + (psi2 sin)**r)**(1/r - 2)

    This is the second derivative of the Pickands function carried to
    the angular scale; it integrates against 1, sin/||.||_1 and
    cos/||.||_1 to 2 - atoms, psi1 and psi2 respectively.  For
    1 < r < 2 the factor (sin cos)**(r-2) is an integrable singularity
    at both endpoints.
    """
    r, psi1, psi2 = _check_logistic_params(r, psi1, psi2)
    if r == 1.0:
        raise ValueError("interior density requires r > 1")
    p = check_norm_order(p)
    scalar = np.ndim(theta) == 0
    theta = np.asarray(theta, dtype=float)
    if psi1 * psi2 == 0.0:
        # leading factor (psi1 psi2)^r kills the whole display
        out = np.zeros_like(theta)
        return float(out) if scalar else out
    s = np.sin(theta)
    c = np.cos(theta)
    out = (
        (r - 1.0)
        * (psi1 * psi2) ** r
        * lp_norm(s, c, p)
        * (s * c) ** (r - 2.0)
        * lp_norm(psi1 * c, psi2 * s, r) ** (1.0 - 2.0 * r)
    )
    return float(out) if scalar else out


def sample_logistic(n: int, r: float, rng: np.random.Generator) -> BivariateSample:
    """Sample the symmetric logistic max-stable law with unit Frechet margins.

    Uses the positive stable mixing construction: with S positive
    alpha-stable (alpha = 1/r, Laplace transform exp(-t**alpha)) drawn
    by the Kanter / Chambers-Mallows-Stuck formula and E1, E2 unit
    exponentials,

        V_j = (S / E_j)**(1/r)

    has joint law exp(-(v1**-r + v2**-r)**(1/r)).  r = 1 reduces to
    independent unit Frechet coordinates.
    """
    r = float(r)
    if not (r >= 1.0 and math.isfinite(r)):
        raise ValueError(f"dependence parameter must satisfy 1 <= r < inf, got {r!r}")
    if n < 1:
        raise ValueError("sample size must be at least 1")
    if r == 1.0:
        e = np.clip(rng.exponential(size=(n, 2)), 1e-300, None)
        return BivariateSample(1.0 / e)
    alpha = 1.0 / r
    theta = math.pi * np.clip(rng.random(n), 1e-16, 1.0 - 1e-16)
    w = np.clip(rng.exponential(size=n), 1e-300, None)
    # log S keeps the heavy-tailed stable factor out of overflow range
    log_s = (
        np.log(np.sin(alpha * theta))
        - r * np.log(np.sin(theta))
        + ((1.0 - alpha) / alpha) * (np.log(np.sin((1.0 - alpha) * theta)) - np.log(w))
    )
    e = np.clip(rng.exponential(size=(n, 2)), 1e-300, None)
    v = np.exp(alpha * (log_s[:, None] - np.log(e)))
    return BivariateSample(v)


def asym_logistic_model(
    r: float, psi1: float = 1.0, psi2: float = 1.0, p: float = 1.0
) -> SpectralModel:
    """Spectral measure of the (asymmetric) logistic model.

    Endpoint atoms 1 - psi2 at angle 0 and 1 - psi1 at pi/2 when
    r > 1 and psi1 psi2 > 0; tail independence (r = 1 or a vanishing
    weight) concentrates mass 1 on each endpoint with empty interior.
    A sampler is available only in the symmetric case
    psi1 = psi2 = 1.
    """
    r, psi1, psi2 = _check_logistic_params(r, psi1, psi2)
    p = check_norm_order(p)
    symmetric = psi1 == 1.0 and psi2 == 1.0
    name = "logistic" if symmetric else "asymmetric-logistic"
    params = {"r": r} if symmetric else {"r": r, "psi1": psi1, "psi2": psi2}
    sampler = None
    if symmetric:

        def sampler(n, rng, _r=r):
            return sample_logistic(n, _r, rng)

    if r == 1.0 or psi1 * psi2 == 0.0:
        return SpectralModel(
            name=name,
            params=params,
            p=p,
            atom_zero=1.0,
            atom_half_pi=1.0,
            interior_density=None,
            sampler=sampler,
        )

    def density(theta, _r=r, _p1=psi1, _p2=psi2, _p=p):
        return asym_logistic_spectral_density(theta, _r, _p1, _p2, _p)

    if r == 2.0 and symmetric:
        interior = _arc_norm_cdf(p)
    else:
        interior = None
    power = r - 1.0 if r < 2.0 else None
    if interior is None:
        interior = _quad_interior_cdf(density, power)
    return SpectralModel(
        name=name,
        params=params,
        p=p,
        atom_zero=1.0 - psi2,
        atom_half_pi=1.0 - psi1,
        interior_density=density,
        sampler=sampler,
        endpoint_power=power,
        _interior_cdf=interior,
    )


# ---------------------------------------------------------------------------
# Cauchy models


def _sample_cauchy_quadrant(n: int, rng: np.random.Generator) -> BivariateSample:
    z = rng.standard_normal((n, 3))
    denom = np.clip(np.abs(z[:, 0]), 1e-300, None)
    return BivariateSample(np.abs(z[:, 1:]) / denom[:, None])


def _sample_cauchy_fullplane(n: int, rng: np.random.Generator) -> BivariateSample:
    z = rng.standard_normal((n, 3))
    denom = np.clip(np.abs(z[:, 0]), 1e-300, None)
    return BivariateSample(z[:, 1:] / denom[:, None])


def cauchy_quadrant_model(p: float = 1.0) -> SpectralModel:
    """Spectral measure of the positive-quadrant bivariate Cauchy law.

    Atomless with interior density exactly ||(sin, cos)||_p, so the
    angular cdf for p = 2 is the identity.  The sampler folds a
    symmetric Cauchy pair into the quadrant:
    (|Z1|, |Z2|) / |Z0| for iid standard normals.
    """
    p = check_norm_order(p)

    def density(theta, _p=p):
        theta = np.asarray(theta, dtype=float)
        return lp_norm(np.sin(theta), np.cos(theta), _p)

    interior = _arc_norm_cdf(p) or _quad_interior_cdf(density, None)
    return SpectralModel(
        name="cauchy-quadrant",
        params={},
        p=p,
        atom_zero=0.0,
        atom_half_pi=0.0,
        interior_density=density,
        sampler=_sample_cauchy_quadrant,
        _interior_cdf=interior,
    )


def cauchy_fullplane_model(p: float = 1.0) -> SpectralModel:
    """Spectral measure of the unfolded (full-plane) bivariate Cauchy law.

    Sign mixing moves half of the quadrant measure onto the endpoint
    atoms: masses 1/2 at 0 and pi/2, interior density
    ||(sin, cos)||_p / 2.
    """
    p = check_norm_order(p)

    def density(theta, _p=p):
        theta = np.asarray(theta, dtype=float)
        return 0.5 * lp_norm(np.sin(theta), np.cos(theta), _p)

    closed = _arc_norm_cdf(p)
    if closed is not None:

        def interior(t, _closed=closed):
            return 0.5 * np.asarray(_closed(t), dtype=float)

    else:
        interior = _quad_interior_cdf(density, None)
    return SpectralModel(
        name="cauchy-fullplane",
        params={},
        p=p,
        atom_zero=0.5,
        atom_half_pi=0.5,
        interior_density=density,
        sampler=_sample_cauchy_fullplane,
        _interior_cdf=interior,
    )


# ---------------------------------------------------------------------------
# Pareto-margin mixture family


def _mixture_conditional_cdf(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    s = x + y
    return (1.0 - 1.0 / y) * (1.0 + 1.0 / s - x * (x - 1.0) / (s * s))


def _invert_mixture_conditional(x: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Solve the dependent-component conditional cdf for y by bisection."""
    lo = np.ones_like(x)
    hi = np.full_like(x, 2.0)
    for _ in range(200):
        low = _mixture_conditional_cdf(x, hi) < q
        if not low.any():
            break
        hi = np.where(low, 2.0 * hi, hi)
    for _ in range(160):
        mid = 0.5 * (lo + hi)
        below = _mixture_conditional_cdf(x, mid) < q
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
        if np.all(hi - lo <= 1e-12 * (1.0 + hi)):
            break
    return 0.5 * (lo + hi)


def _sample_mixture(n: int, r: float, rng: np.random.Generator) -> BivariateSample:
    dependent = rng.random(n) < r
    g = 1.0 - rng.random((n, 2))
    x = 1.0 / g[:, 0]
    y = 1.0 / g[:, 1]
    if dependent.any():
        q = np.clip(g[dependent, 1], 1e-16, 1.0 - 1e-16)
        y[dependent] = _invert_mixture_conditional(x[dependent], q)
    return BivariateSample(np.column_stack([x, y]))


def mixture_model(r: float, p: float = 1.0) -> SpectralModel:
    """Two-component mixture with Pareto(1) margins and tunable dependence.

    With probability 1 - r the pair is independent; with probability r
    it follows the joint cdf (1 - 1/x)(1 - 1/y)(1 + 1/(x + y)).  The
    spectral measure has endpoint atoms of mass 1 - r each and interior
    density 2 r ||(sin, cos)||_p / (sin + cos)**3.  The sampler inverts
    the dependent-component conditional cdf by bisection.
    """
    r = float(r)
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"mixture weight must lie in [0, 1], got {r!r}")
    p = check_norm_order(p)

    def sampler(n, rng, _r=r):
        return _sample_mixture(n, _r, rng)

    if r == 0.0:
        return SpectralModel(
            name="mixture",
            params={"r": r},
            p=p,
            atom_zero=1.0,
            atom_half_pi=1.0,
            interior_density=None,
            sampler=sampler,
            default_ise_interval=(0.05 * HALF_PI, 0.95 * HALF_PI),
        )

    def density(theta, _r=r, _p=p):
        theta = np.asarray(theta, dtype=float)
        s = np.sin(theta)
        c = np.cos(theta)
        return 2.0 * _r * lp_norm(s, c, _p) / (s + c) ** 3

    if p == 1.0:

        def interior(t, _r=r):
            t = np.asarray(t, dtype=float)
            return _r * (1.0 + np.tan(t - QUARTER_PI))

    elif math.isinf(p):

        def interior(t, _r=r):
            t = np.asarray(t, dtype=float)
            with np.errstate(divide="ignore"):
                tan = np.tan(t)
                low = 1.0 - (1.0 + tan) ** -2.0
                high = 0.5 + (1.0 + 1.0 / tan) ** -2.0
            return _r * np.where(t <= QUARTER_PI, low, high)

    else:
        interior = _quad_interior_cdf(density, None)
    return SpectralModel(
        name="mixture",
        params={"r": r},
        p=p,
        atom_zero=1.0 - r,
        atom_half_pi=1.0 - r,
        interior_density=density,
        sampler=sampler,
        default_ise_interval=(0.05 * HALF_PI, 0.95 * HALF_PI),
        _interior_cdf=interior,
    )


# ---------------------------------------------------------------------------
# validation helpers


def moment_sums(model: SpectralModel, tol: float = 1e-9) -> tuple[float, float]:
    """Quadrature check of the two marginal moment integrals.

    Returns (sin integral, cos integral) of weight/||(sin, cos)||_p
    against the model's spectral measure.  Both equal 1 for every
    genuine spectral measure; endpoint atoms contribute exactly 0 or 1.
    """
    sin_sum = float(model.atom_half_pi)
    cos_sum = float(model.atom_zero)
    density = model.interior_density
    if density is None:
        return sin_sum, cos_sum
    p = model.p
    power = model.endpoint_power

    def sin_part(t):
        s, c = math.sin(t), math.cos(t)
        return float(density(t)) * s / lp_norm(s, c, p)

    def cos_part(t):
        s, c = math.sin(t), math.cos(t)
        return float(density(t)) * c / lp_norm(s, c, p)

    # the sin weight lifts the singular order at 0 by one, the cos
    # weight does the same at pi/2
    sin_sum += _interior_integral(sin_part, tol, power and power + 1.0, power)
    cos_sum += _interior_integral(cos_part, tol, power, power and power + 1.0)
    return sin_sum, cos_sum


def _interior_integral(f, tol, power_left, power_right) -> float:
    a = _EDGE_EPS if power_left is not None else 0.0
    b = HALF_PI - _EDGE_EPS if power_right is not None else HALF_PI
    total = adaptive_simpson(f, a, b, tol)
    if power_left is not None:
        total += f(_EDGE_EPS) * _EDGE_EPS / power_left
    if power_right is not None:
        total += f(HALF_PI - _EDGE_EPS) * _EDGE_EPS / power_right
    return total
