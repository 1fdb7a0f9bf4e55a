"""Pickands dependence functions of discrete spectral measures.

A spectral measure in the sum norm (p = 1) transports to a measure H on
[0, 1] through w = sin(theta) / (sin(theta) + cos(theta)); integrating
its cdf yields the piecewise-affine Pickands dependence function

    A(v) = 1 - v + sum_j weight_j * max(v - w_j, 0).

When the source measure satisfies the moment constraints, A is a
genuine dependence function: convex, A(0) = A(1) = 1, and
max(v, 1 - v) <= A(v) <= 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .empirical import DiscreteSpectralMeasure

__all__ = ["DiscreteMeasure", "PickandsFunction", "spectral_to_H", "pickands_function"]


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finite atomic measure on the unit interval."""

    points: np.ndarray
    weights: np.ndarray
    _cumweights: np.ndarray = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        points = np.asarray(self.points, dtype=float)
        weights = np.asarray(self.weights, dtype=float)
        if points.shape != weights.shape or points.ndim != 1:
            raise ValueError("points and weights must be 1-d arrays of equal length")
        if points.size:
            if np.any(np.diff(points) <= 0.0):
                raise ValueError("points must be strictly increasing; use from_atoms")
            if points[0] < 0.0 or points[-1] > 1.0:
                raise ValueError("points must lie in [0, 1]")
            if np.any(weights <= 0.0) or not np.all(np.isfinite(weights)):
                raise ValueError("weights must be finite and strictly positive")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_cumweights", np.concatenate(([0.0], np.cumsum(weights))))

    @classmethod
    def from_atoms(cls, points, weights, tol: float = 1e-9) -> "DiscreteMeasure":
        """Merge atoms closer than ``tol`` into their centre of mass.

        Angles distinct as floats can transport to points only an ulp
        apart; without coalescing, the affine slopes between such knots
        are pure rounding noise.
        """
        points = np.asarray(points, dtype=float)
        weights = np.asarray(weights, dtype=float)
        uniq, inverse = np.unique(points, return_inverse=True)
        merged = np.zeros(uniq.size)
        np.add.at(merged, inverse, weights)
        if uniq.size > 1:
            starts = np.concatenate(([True], np.diff(uniq) > tol))
            cluster = np.cumsum(starts) - 1
            mass = np.zeros(cluster[-1] + 1)
            centre = np.zeros_like(mass)
            np.add.at(mass, cluster, merged)
            np.add.at(centre, cluster, merged * uniq)
            uniq, merged = centre / mass, mass
        return cls(points=uniq, weights=merged)

    @property
    def total_mass(self) -> float:
        return float(self._cumweights[-1])

    def cdf(self, w):
        scalar = np.ndim(w) == 0
        w = np.asarray(w, dtype=float)
        idx = np.searchsorted(self.points, w, side="right")
        out = self._cumweights[idx]
        return float(out) if scalar else out


def spectral_to_H(phi: DiscreteSpectralMeasure) -> DiscreteMeasure:
    """Transport a p = 1 spectral measure to the unit interval.

    Atom angles map through w = sin / (sin + cos) with weights kept;
    the endpoints 0 and pi/2 land on 0 and 1.

    Raises
    ------
    ValueError
        If the measure was built with a norm order other than 1.
    """
    if phi.p != 1.0:
        raise ValueError(
            f"the angular transport requires the sum norm (p = 1), got p = {phi.p!r}"
        )
    s = np.sin(phi.angles)
    c = np.cos(phi.angles)
    return DiscreteMeasure.from_atoms(s / (s + c), phi.weights)


@dataclass(frozen=True)
class PickandsFunction:
    """Piecewise-affine Pickands dependence function.

    ``knots`` always include 0 and 1; ``values`` are the function values
    there.  Between knots the function is affine, so ``np.interp``
    evaluation is exact.
    """

    knots: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        knots = np.asarray(self.knots, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if knots.shape != values.shape or knots.ndim != 1 or knots.size < 2:
            raise ValueError("knots and values must be matching 1-d arrays, length >= 2")
        if knots[0] != 0.0 or knots[-1] != 1.0 or np.any(np.diff(knots) <= 0.0):
            raise ValueError("knots must increase strictly from 0 to 1")
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "values", values)

    def __call__(self, v):
        scalar = np.ndim(v) == 0
        v = np.asarray(v, dtype=float)
        if v.size and (v.min() < 0.0 or v.max() > 1.0):
            raise ValueError("the dependence function is defined on [0, 1]")
        out = np.interp(v, self.knots, self.values)
        return float(out) if scalar else out

    @property
    def slopes(self) -> np.ndarray:
        """Affine slopes between consecutive knots (nondecreasing iff convex)."""
        return np.diff(self.values) / np.diff(self.knots)


def pickands_function(H: DiscreteMeasure) -> PickandsFunction:
    """Integrate the cdf of H into a Pickands dependence function.

    The slope on the segment right of v equals H([0, v]) - 1, so the
    knot set is the atom locations of H extended by the endpoints.
    """
    knots = np.unique(np.concatenate(([0.0, 1.0], H.points)))
    cum_w = np.concatenate(([0.0], np.cumsum(H.weights)))
    cum_xw = np.concatenate(([0.0], np.cumsum(H.weights * H.points)))
    idx = np.searchsorted(H.points, knots, side="right")
    values = 1.0 - knots + knots * cum_w[idx] - cum_xw[idx]
    return PickandsFunction(knots=knots, values=values)
