"""Closed-form order-4 B-splines on simple nonuniform knots.

Independent of the linear-system pipeline: for sections spanned by
{1, t, u(t), v(t)} in the per-interval normalized coordinate t, with a shared
shape parameter, N_{i,4} has an explicit five-branch expression built from a
case kernel F, an affine correction G and a per-knot normalizer H:

    [t_i,     t_{i+1}):  h_i^2 F(tau_i) / (H_i (h_i + h_{i+1}))
    [t_{i+1}, t_{i+2}):  -(1/H_i + 1/H_{i+1}) h_{i+1}^2 F(tau_{i+1}) / (h_{i+1}+h_{i+2})
                         - (G_{i+1}(tau_{i+1}) - h_{i+1}^2 F(1-tau_{i+1})/(h_i+h_{i+1})) / H_i
    [t_{i+2}, t_{i+3}):  1 - (1/H_i + 1/H_{i+1}) h_{i+2}^2 F(1-tau_{i+2}) / (h_{i+1}+h_{i+2})
                         + (G_{i+2}(tau_{i+2}) + h_{i+2}^2 F(tau_{i+2})/(h_{i+2}+h_{i+3})) / H_{i+1}
    [t_{i+3}, t_{i+4}):  h_{i+3}^2 F(1-tau_{i+3}) / (H_{i+1} (h_{i+2}+h_{i+3}))

with h_i = t_{i+1} - t_i and tau_i(x) = (x - t_i)/h_i.  Cases:

  A  u = cos(theta t), v = sin(theta t), 0 < theta < pi:
       F(t)   = theta t - sin(theta t)
       G_i(t) = (theta - sin theta)(h_i - h_{i-1}) - theta(1 - cos theta) h_i t
       H_i    = (theta - sin theta)(h_i + h_{i+1} + h_{i+2})
                + (3 sin theta - theta(2 + cos theta)) h_{i+1}
  B  u = cosh(phi t), v = sinh(phi t), phi > 0: as A with sinh/cosh.
  C  u = (1-t)^3/d, v = t^3/d, d = 1 + (nu-3)(1-t)t, nu >= 3:
       F(t)   = t^3 / d(t)
       G_i(t) = (h_i - h_{i-1}) - nu h_i t
       H_i    = (h_i + h_{i+1} + h_{i+2}) + (nu - 3) h_{i+1}

In case C the shape parameter occupies every slot where a source transcript
shows a stray knot spacing; the constants above were re-derived symbolically
from the defining Hermite systems and match the pipeline to rounding error
(nu = 3 reduces to the classical cubic B-spline, whose G-slope 3 is also the
theta -> 0 limit of case A's theta(1-cos theta)/(theta-sin theta)).
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InvalidSectionError, PartitionError

__all__ = ["eval_closed_n4", "closed_form_space"]


def _case_kernels(case: str, p: float):
    if case == "A":
        if not 0.0 < p < math.pi:
            raise InvalidSectionError("case A needs 0 < theta < pi")
        s, c = math.sin(p), math.cos(p)
        F = lambda t: p * t - np.sin(p * t)
        g1, g2 = p - s, p * (1.0 - c)
        hcoef = 3.0 * s - p * (2.0 + c)
    elif case == "B":
        if p <= 0.0:
            raise InvalidSectionError("case B needs phi > 0")
        s, c = math.sinh(p), math.cosh(p)
        F = lambda t: p * t - np.sinh(p * t)
        g1, g2 = p - s, p * (1.0 - c)
        hcoef = 3.0 * s - p * (2.0 + c)
    elif case == "C":
        if p < 3.0:
            raise InvalidSectionError("case C needs nu >= 3")
        F = lambda t: t ** 3 / (1.0 + (p - 3.0) * (1.0 - t) * t)
        g1, g2 = 1.0, p
        hcoef = p - 3.0
    else:
        raise InvalidSectionError(f"unknown closed-form case {case!r}")
    return F, g1, g2, hcoef


def eval_closed_n4(case: str, knots, param: float, i: int, x) -> np.ndarray | float:
    """N_{i,4}(x) for case "A" | "B" | "C" with one shared shape parameter.

    knots must be strictly increasing (simple multiplicities; coincident
    knots are only reachable as limits, which the pipeline covers).  The
    1-based index i addresses the B-spline supported on [t_i, t_{i+4}];
    x may be a scalar or an array.
    """
    t = np.asarray(knots, dtype=float)
    if t.ndim != 1 or len(t) < 5:
        raise PartitionError("need at least five knots")
    if np.any(np.diff(t) <= 0):
        raise PartitionError(
            "closed-form evaluation requires strictly increasing knots")
    if not 1 <= i <= len(t) - 4:
        raise IndexError(f"basis index {i} out of range 1..{len(t) - 4}")
    F, g1, g2, hcoef = _case_kernels(case, float(param))

    k = i - 1
    tt = t[k:k + 5]
    h = np.diff(tt)                       # h_i .. h_{i+3}
    H_i = g1 * (h[0] + h[1] + h[2]) + hcoef * h[1]
    H_ip = g1 * (h[1] + h[2] + h[3]) + hcoef * h[2]

    def G(hj, hjm1, tau):
        return g1 * (hj - hjm1) - g2 * hj * tau

    x_arr = np.asarray(x, dtype=float)
    out = np.zeros_like(x_arr, dtype=float)

    m1 = (x_arr >= tt[0]) & (x_arr < tt[1])
    if np.any(m1):
        tau = (x_arr[m1] - tt[0]) / h[0]
        out[m1] = h[0] ** 2 * F(tau) / (H_i * (h[0] + h[1]))
    m2 = (x_arr >= tt[1]) & (x_arr < tt[2])
    if np.any(m2):
        tau = (x_arr[m2] - tt[1]) / h[1]
        out[m2] = (-(1.0 / H_i + 1.0 / H_ip) * h[1] ** 2 * F(tau) / (h[1] + h[2])
                   - (G(h[1], h[0], tau)
                      - h[1] ** 2 * F(1.0 - tau) / (h[0] + h[1])) / H_i)
    m3 = (x_arr >= tt[2]) & (x_arr < tt[3])
    if np.any(m3):
        tau = (x_arr[m3] - tt[2]) / h[2]
        out[m3] = (1.0
                   - (1.0 / H_i + 1.0 / H_ip) * h[2] ** 2 * F(1.0 - tau) / (h[1] + h[2])
                   + (G(h[2], h[1], tau)
                      + h[2] ** 2 * F(tau) / (h[2] + h[3])) / H_ip)
    m4 = (x_arr >= tt[3]) & (x_arr < tt[4])
    if np.any(m4):
        tau = (x_arr[m4] - tt[3]) / h[3]
        out[m4] = h[3] ** 2 * F(1.0 - tau) / (H_ip * (h[2] + h[3]))
    if x_arr.ndim == 0:
        return float(out)
    return out


def closed_form_space(case: str, knots, param: float):
    """The matching pipeline space: normalized sections on the same knots.

    Both constructions index B-spline i by its leftmost knot over the
    unclamped simple-knot vector, so N_i of the returned space corresponds
    to eval_closed_n4(..., i, .); the pipeline basis is meaningful on
    [t_4, t_{len-3}] only.
    """
    from .basis import make_spline_space
    from .partition import partition_from_knots

    t = np.asarray(knots, dtype=float)
    part = partition_from_knots(4, t)
    if case == "A":
        fam, params = "trigonometric", {"theta": float(param)}
    elif case == "B":
        fam, params = "hyperbolic", {"phi": float(param)}
    elif case == "C":
        fam, params = "rational-tension", {"nu": float(param)}
    else:
        raise InvalidSectionError(f"unknown closed-form case {case!r}")
    from .sections import make_section
    secs = [make_section(fam, params, (part.grid[j], part.grid[j + 1]), 4,
                         "normalized")
            for j in range(part.num_sections)]
    return make_spline_space(part, secs)
