"""Empirical spectral measure of bivariate extremes.

Selection of the k-extreme observations in the L_p sense, their
pseudo-angles, and the raw (unconstrained) spectral estimates built
from them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .lp_geometry import check_norm_order, lp_norm, score_f
from .pseudo_obs import PseudoObservations

__all__ = [
    "AngularSample",
    "DiscreteSpectralMeasure",
    "select_extremes",
    "empirical_spectral_measure",
    "empirical_spectral_prob",
]


@dataclass(frozen=True)
class AngularSample:
    """Angles and scores of the observations selected as extreme.

    Attributes
    ----------
    indices : np.ndarray
        0-based row indices of the members, increasing.
    angles : np.ndarray
        Pseudo-angles arctan(u2 / u1), open interval (0, pi/2).
    scores : np.ndarray
        Moment scores f(angle) under the same norm order.
    k : int
        Tail sample fraction parameter, 1 <= k <= n.
    p : float
        Norm order used for selection and scores.
    n : int
        Size of the originating sample.
    """

    indices: np.ndarray
    angles: np.ndarray
    scores: np.ndarray
    k: int
    p: float
    n: int

    @property
    def n_members(self) -> int:
        return int(self.indices.size)


@dataclass(frozen=True)
class DiscreteSpectralMeasure:
    """Finite atomic measure on the angle interval [0, pi/2].

    Atoms are kept sorted with strictly positive weights; construction
    through :meth:`from_atoms` merges duplicate locations by summing
    their weights.  ``p`` records the norm order the measure refers to.
    """

    angles: np.ndarray
    weights: np.ndarray
    p: float
    _cumweights: np.ndarray = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        angles = np.asarray(self.angles, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if angles.shape != weights.shape or angles.ndim != 1:
            raise ValueError("angles and weights must be 1-d arrays of equal length")
        if angles.size:
            if np.any(np.diff(angles) <= 0.0):
                raise ValueError("atom angles must be strictly increasing; use from_atoms")
            if angles[0] < 0.0 or angles[-1] > math.pi / 2:
                raise ValueError("atom angles must lie in [0, pi/2]")
            if np.any(weights <= 0.0) or not np.all(np.isfinite(weights)):
                raise ValueError("atom weights must be finite and strictly positive")
        object.__setattr__(self, "angles", angles)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "p", check_norm_order(self.p))
        object.__setattr__(self, "_cumweights", np.concatenate(([0.0], np.cumsum(weights))))

    @classmethod
    def from_atoms(cls, angles, weights, p: float) -> "DiscreteSpectralMeasure":
        """Build a measure from possibly unsorted, possibly repeated atoms."""
        angles = np.asarray(angles, dtype=float)
        weights = np.asarray(weights, dtype=float)
        uniq, inverse = np.unique(angles, return_inverse=True)
        merged = np.zeros(uniq.size)
        np.add.at(merged, inverse, weights)
        return cls(angles=uniq, weights=merged, p=p)

    @property
    def n_atoms(self) -> int:
        return int(self.angles.size)

    @property
    def total_mass(self) -> float:
        return float(self._cumweights[-1])

    def cdf(self, theta):
        """Right-continuous cumulative mass on [0, theta]."""
        scalar = np.ndim(theta) == 0
        theta = np.asarray(theta, dtype=float)
        idx = np.searchsorted(self.angles, theta, side="right")
        out = self._cumweights[idx]
        return float(out) if scalar else out

    def moment_sums(self) -> tuple[float, float]:
        """Sums of sin/||.||_p and cos/||.||_p atom contributions."""
        s = np.sin(self.angles)
        c = np.cos(self.angles)
        norm = lp_norm(s, c, self.p)
        sin_sum = float(np.sum(self.weights * s / norm))
        cos_sum = float(np.sum(self.weights * c / norm))
        return sin_sum, cos_sum

    def scaled(self, factor: float) -> "DiscreteSpectralMeasure":
        return DiscreteSpectralMeasure(
            angles=self.angles, weights=self.weights * factor, p=self.p
        )


def _int_members(m1: np.ndarray, m2: np.ndarray, k: int, p_int: int, n: int) -> np.ndarray:
    """Exact membership for integer p: k^p (m1^p + m2^p) >= (m1 m2)^p.

    This is the rank form of the norm rule with denominators cleared, so
    rational boundary ties (for example 1/3 + 1/6 = 1/2) are classified
    without floating-point rounding.
    """
    if 2 * (n ** (2 * p_int)) < 2**62:
        m1 = m1.astype(np.int64)
        m2 = m2.astype(np.int64)
        kk = np.int64(k) ** p_int
        return kk * (m1**p_int + m2**p_int) >= (m1 * m2) ** p_int
    kk = int(k) ** p_int
    flags = [
        kk * (int(a) ** p_int + int(b) ** p_int) >= (int(a) * int(b)) ** p_int
        for a, b in zip(m1, m2)
    ]
    return np.asarray(flags, dtype=bool)


def select_extremes(pobs: PseudoObservations, k: int, p: float) -> AngularSample:
    """Indices, angles and scores of the L_p-extreme observations.

    An observation is a member when the inverted pseudo-observation pair
    satisfies ``||(1/u1, 1/u2)||_p >= n/k``.  For integer p (including
    the max norm) this reduces to an exact integer comparison on ranks;
    non-integer p falls back to the floating-point norm rule.

    At least one observation is always selected (the rank-n row in
    either column qualifies for every k >= 1).
    """
    p = check_norm_order(p)
    if not float(k).is_integer():
        raise ValueError(f"k must be an integer, got {k!r}")
    k = int(k)
    n = pobs.n
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= n = {n}, got {k}")
    u1 = pobs.u[:, 0]
    u2 = pobs.u[:, 1]
    # recover integer m = n + 1 - R from u = m / n; rounding is exact
    # because the float error of (m / n) * n is far below 1/2
    m1 = np.rint(u1 * n).astype(np.int64)
    m2 = np.rint(u2 * n).astype(np.int64)
    if math.isinf(p):
        member = np.minimum(m1, m2) <= k
    elif p.is_integer():
        member = _int_members(m1, m2, k, int(p), n)
    else:
        member = lp_norm(1.0 / u1, 1.0 / u2, p) >= n / k
    indices = np.flatnonzero(member)
    angles = np.arctan(u2[indices] / u1[indices])
    scores = score_f(angles, p)
    return AngularSample(
        indices=indices,
        angles=angles,
        scores=np.asarray(scores, dtype=float),
        k=k,
        p=p,
        n=n,
    )


def empirical_spectral_measure(ang: AngularSample) -> DiscreteSpectralMeasure:
    """Raw spectral estimate: mass 1/k at every member angle.

    Total mass N/k is free and generally differs from the mass of a
    genuine spectral measure; the moment constraints are not enforced.
    """
    w = np.full(ang.n_members, 1.0 / ang.k)
    return DiscreteSpectralMeasure.from_atoms(ang.angles, w, ang.p)


def empirical_spectral_prob(ang: AngularSample) -> DiscreteSpectralMeasure:
    """Empirical angular probability measure: mass 1/N at every member angle."""
    if ang.n_members == 0:
        raise ValueError("angular sample has no members")
    w = np.full(ang.n_members, 1.0 / ang.n_members)
    return DiscreteSpectralMeasure.from_atoms(ang.angles, w, ang.p)
