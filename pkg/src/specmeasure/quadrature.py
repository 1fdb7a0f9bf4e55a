"""Adaptive Simpson quadrature.

Small, dependency-free integrator used for spectral cumulative
distribution functions and moment checks.  Density integrands here are
smooth in the open interval; integrable algebraic endpoint behaviour is
handled by the callers (see :mod:`specmeasure.models`).
"""

from __future__ import annotations

from typing import Callable

__all__ = ["adaptive_simpson", "cumulative_integral"]


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h / 6.0 * (fa + 4.0 * fm + fb)


def adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    tol: float = 1e-9,
    max_depth: int = 48,
) -> float:
    """Integrate ``f`` over ``[a, b]`` to absolute tolerance ``tol``.

    Classic recursive Simpson scheme with Richardson error control:
    a panel is accepted when the two-half refinement differs from the
    single-panel estimate by at most ``15 * tol_panel``.
    """
    if not b > a:
        if b == a:
            return 0.0
        raise ValueError(f"invalid integration interval [{a}, {b}]")
    m = 0.5 * (a + b)
    fa, fm, fb = f(a), f(m), f(b)
    whole = _simpson(fa, fm, fb, b - a)
    return _adapt(f, a, b, fa, fm, fb, whole, tol, max_depth)


def _adapt(f, a, b, fa, fm, fb, whole, tol, depth) -> float:
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    # 1/15 Richardson factor; also stop when the panel cannot be split further
    if depth <= 0 or abs(delta) <= 15.0 * tol or lm <= a or rm >= b:
        return left + right + delta / 15.0
    half = 0.5 * tol
    return _adapt(f, a, m, fa, flm, fm, left, half, depth - 1) + _adapt(
        f, m, b, fm, frm, fb, right, half, depth - 1
    )


def cumulative_integral(
    f: Callable[[float], float],
    start: float,
    points,
    tol: float = 1e-9,
) -> list[float]:
    """Integrals of ``f`` from ``start`` to each of the sorted ``points``.

    ``points`` must be nondecreasing and bounded below by ``start``.
    The total absolute error over the full range is at most roughly
    ``tol`` (per-segment budgets are floored at 1e-13).
    """
    pts = list(points)
    if any(q < start for q in pts):
        raise ValueError("cumulative points must not precede the start")
    nseg = max(len(pts), 1)
    seg_tol = max(tol / nseg, 1e-13)
    out: list[float] = []
    total = 0.0
    prev = start
    for q in pts:
        if q > prev:
            total += adaptive_simpson(f, prev, q, seg_tol)
            prev = q
        out.append(total)
    return out
