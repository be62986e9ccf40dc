"""Section spaces: the per-interval function systems splines are glued from.

Each section carries an interval [x0, x1], an order m and a list of m
generators u_1..u_m expressed in a local coordinate t = (x - anchor) * scale.
Every generator knows its exact derivatives of all orders and a closed-form
antiderivative, so downstream collocation and integration never fall back on
numerical differentiation or quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import InvalidSectionError

_HALF_PI = 0.5 * math.pi


# ---------------------------------------------------------------------------
# generators (local coordinate t)
# ---------------------------------------------------------------------------

class Monomial:
    """u(t) = t**k for integer k >= 0."""

    def __init__(self, k: int):
        self.k = k

    def deriv(self, r: int, t):
        k = self.k
        if r > k:
            return np.zeros_like(np.asarray(t, dtype=float))
        c = math.perm(k, r)
        return c * np.asarray(t, dtype=float) ** (k - r)

    def antideriv(self, t):
        t = np.asarray(t, dtype=float)
        return t ** (self.k + 1) / (self.k + 1)


class Trig:
    """u(t) = cos(theta*t + phase); phase -pi/2 gives sin(theta*t)."""

    def __init__(self, theta: float, phase: float):
        self.theta = theta
        self.phase = phase

    def deriv(self, r: int, t):
        t = np.asarray(t, dtype=float)
        return self.theta ** r * np.cos(self.theta * t + self.phase + r * _HALF_PI)

    def antideriv(self, t):
        t = np.asarray(t, dtype=float)
        return np.cos(self.theta * t + self.phase - _HALF_PI) / self.theta


class TTrig:
    """u(t) = t * cos(theta*t + phase)."""

    def __init__(self, theta: float, phase: float):
        self.theta = theta
        self.phase = phase

    def deriv(self, r: int, t):
        t = np.asarray(t, dtype=float)
        th, p = self.theta, self.phase
        out = t * th ** r * np.cos(th * t + p + r * _HALF_PI)
        if r >= 1:
            out = out + r * th ** (r - 1) * np.cos(th * t + p + (r - 1) * _HALF_PI)
        return out

    def antideriv(self, t):
        t = np.asarray(t, dtype=float)
        th, p = self.theta, self.phase
        return t * np.sin(th * t + p) / th + np.cos(th * t + p) / th ** 2


class Hyp:
    """u(t) = cosh(phi*t) or sinh(phi*t)."""

    def __init__(self, phi: float, kind: str):
        self.phi = phi
        self.kind = kind  # "cosh" | "sinh"

    def deriv(self, r: int, t):
        t = np.asarray(t, dtype=float)
        even = (r % 2 == 0)
        use_cosh = even if self.kind == "cosh" else not even
        fn = np.cosh if use_cosh else np.sinh
        return self.phi ** r * fn(self.phi * t)

    def antideriv(self, t):
        t = np.asarray(t, dtype=float)
        if self.kind == "cosh":
            return np.sinh(self.phi * t) / self.phi
        return np.cosh(self.phi * t) / self.phi


class Power:
    """u(t) = t**n or (1-t)**n for a real exponent n >= 1.

    mirror=True selects (1-t)**n.  For fractional n the derivative of order
    r > n is unbounded at the base point; callers probing high orders must
    stop at max_finite_order.
    """

    def __init__(self, n: float, mirror: bool):
        self.n = float(n)
        self.mirror = mirror
        self.integer = float(n).is_integer()

    def deriv(self, r: int, t):
        t = np.asarray(t, dtype=float)
        n = self.n
        if self.integer and r > int(n):
            return np.zeros_like(t)
        c = 1.0
        for j in range(r):
            c *= n - j
        base = (1.0 - t) if self.mirror else t
        sign = (-1.0) ** r if self.mirror else 1.0
        with np.errstate(divide="ignore"):
            val = sign * c * base ** (n - r)
        return val

    def antideriv(self, t):
        t = np.asarray(t, dtype=float)
        if self.mirror:
            return -((1.0 - t) ** (self.n + 1)) / (self.n + 1)
        return t ** (self.n + 1) / (self.n + 1)


class RationalCubic:
    """u(t) = (1-t)**3 / q(t) or t**3 / q(t) with q(t) = 1 + (nu-3)(1-t)t.

    nu >= 3; nu == 3 degenerates to the plain cubic.  Derivatives follow the
    quotient recurrence D^r(p) = sum C(r,s) D^s(f) D^(r-s)(q) solved for
    D^r(f); the antiderivative comes from polynomial division plus residues
    of the remainder over the real roots of q (which lie outside [0,1]).
    """

    def __init__(self, nu: float, mirror: bool):
        self.nu = float(nu)
        self.k = self.nu - 3.0
        self.mirror = mirror  # True -> (1-t)^3 numerator
        # numerator coefficients, ascending powers
        if mirror:
            self._p = np.array([1.0, -3.0, 3.0, -1.0])
        else:
            self._p = np.array([0.0, 0.0, 0.0, 1.0])
        k = self.k
        self._q = np.array([1.0, k, -k])  # 1 + k t - k t^2
        if k != 0.0:
            quot, rem = npoly.polydiv(self._p, self._q)
            self._quot_int = npoly.polyint(quot)
            disc = math.sqrt(k * k + 4.0 * k)
            r1 = (k + disc) / (2.0 * k)
            r2 = (k - disc) / (2.0 * k)
            self._roots = (r1, r2)
            dq = npoly.polyder(self._q)
            self._residues = tuple(
                npoly.polyval(r, rem) / npoly.polyval(r, dq) for r in (r1, r2)
            )
        else:
            self._quot_int = npoly.polyint(self._p)
            self._roots = ()
            self._residues = ()

    def _qder(self, s: int, t):
        if s == 0:
            return npoly.polyval(t, self._q)
        if s == 1:
            return self.k - 2.0 * self.k * t
        if s == 2:
            return np.full_like(t, -2.0 * self.k)
        return np.zeros_like(t)

    def _pder(self, s: int, t):
        if s > 3:
            return np.zeros_like(t)
        return npoly.polyval(t, npoly.polyder(self._p, s) if s else self._p)

    def deriv(self, r: int, t):
        t = np.asarray(t, dtype=float)
        q0 = self._qder(0, t)
        fs = []
        for rr in range(r + 1):
            acc = self._pder(rr, t).astype(float)
            for s in range(rr):
                acc -= math.comb(rr, s) * fs[s] * self._qder(rr - s, t)
            fs.append(acc / q0)
        return fs[r]

    def antideriv(self, t):
        t = np.asarray(t, dtype=float)
        out = npoly.polyval(t, self._quot_int)
        for root, res in zip(self._roots, self._residues):
            out = out + res * np.log(np.abs(t - root))
        return out


# ---------------------------------------------------------------------------
# family catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Family:
    name: str
    default_map: str                      # "shift" | "normalized"
    forced_map: str | None = None         # map convention that must be used
    affine_invariant: bool = True         # span closed under affine t-substitution
    frequency_params: tuple[str, ...] = ()
    qec: bool = False                     # may need probed vanishing orders


def _poly_block(order: int, count: int) -> list:
    return [Monomial(k) for k in range(count)]


def _build_polynomial(params, order):
    return _poly_block(order, order)


def _check(cond: bool, msg: str):
    if not cond:
        raise InvalidSectionError(msg)


def _get(params, name):
    _check(name in params, f"missing parameter {name!r}")
    v = float(params[name])
    return v


def _validate_polynomial(params, order, local_len):
    _check(order >= 1, "polynomial sections need order >= 1")
    _check(not params, "polynomial sections take no parameters")


def _validate_trig(params, order, local_len):
    _check(order >= 3, "trigonometric sections need order >= 3")
    theta = _get(params, "theta")
    _check(theta > 0, "theta must be positive")
    _check(theta * local_len < math.pi,
           f"theta*length = {theta * local_len:.6g} must stay below pi")


def _build_trig(params, order):
    theta = params["theta"]
    return _poly_block(order, order - 2) + [Trig(theta, 0.0), Trig(theta, -_HALF_PI)]


def _validate_hyp(params, order, local_len):
    _check(order >= 3, "hyperbolic sections need order >= 3")
    _check(_get(params, "phi") > 0, "phi must be positive")


def _build_hyp(params, order):
    phi = params["phi"]
    return _poly_block(order, order - 2) + [Hyp(phi, "cosh"), Hyp(phi, "sinh")]


def _validate_mixed(params, order, local_len):
    _check(order >= 5, "mixed trig/hyperbolic sections need order >= 5")
    theta = _get(params, "theta")
    _check(theta > 0, "theta must be positive")
    _check(theta * local_len < math.pi,
           f"theta*length = {theta * local_len:.6g} must stay below pi")
    _check(_get(params, "phi") > 0, "phi must be positive")


def _build_mixed(params, order):
    theta, phi = params["theta"], params["phi"]
    return (_poly_block(order, order - 4)
            + [Trig(theta, 0.0), Trig(theta, -_HALF_PI),
               Hyp(phi, "cosh"), Hyp(phi, "sinh")])


def _validate_envelope(params, order, local_len):
    _check(order >= 5, "trig-envelope sections need order >= 5")
    theta = _get(params, "theta")
    _check(theta > 0, "theta must be positive")
    _check(theta * local_len <= 2.0 * math.pi * (1.0 + 1e-12),
           f"theta*length = {theta * local_len:.6g} must not exceed 2*pi")


def _build_envelope(params, order):
    theta = params["theta"]
    return (_poly_block(order, order - 4)
            + [Trig(theta, 0.0), Trig(theta, -_HALF_PI),
               TTrig(theta, 0.0), TTrig(theta, -_HALF_PI)])


def _validate_rational(params, order, local_len):
    _check(order == 4, "rational-tension sections have order 4")
    _check(_get(params, "nu") >= 3, "nu must be >= 3")


def _build_rational(params, order):
    nu = params["nu"]
    return [Monomial(0), Monomial(1), RationalCubic(nu, True), RationalCubic(nu, False)]


def _validate_multifreq(params, order, local_len):
    _check(order == 5, "multi-frequency trigonometric sections have order 5")
    theta = _get(params, "theta")
    _check(theta > 0, "theta must be positive")
    # the doubled frequency must stay below a full period of the base one
    _check(theta * local_len < math.pi,
           f"theta*length = {theta * local_len:.6g} must stay below pi")


def _build_multifreq(params, order):
    theta = params["theta"]
    return [Monomial(0),
            Trig(theta, 0.0), Trig(theta, -_HALF_PI),
            Trig(2.0 * theta, 0.0), Trig(2.0 * theta, -_HALF_PI)]


def _validate_vardeg(params, order, local_len):
    _check(order >= 3, "variable-degree sections need order >= 3")
    n1 = _get(params, "n1")
    n2 = _get(params, "n2")
    _check(n1 >= order - 2 and n2 >= order - 2,
           f"exponents must be >= order-2 = {order - 2}")


def _build_vardeg(params, order):
    n1, n2 = params["n1"], params["n2"]
    return _poly_block(order, order - 2) + [Power(n1, True), Power(n2, False)]


FAMILIES: dict[str, Family] = {
    "polynomial": Family("polynomial", "shift"),
    "trigonometric": Family("trigonometric", "shift", frequency_params=("theta",)),
    "hyperbolic": Family("hyperbolic", "shift", frequency_params=("phi",)),
    "mixed": Family("mixed", "shift", frequency_params=("theta", "phi")),
    "trig-envelope": Family("trig-envelope", "shift", frequency_params=("theta",)),
    "rational-tension": Family("rational-tension", "normalized",
                               forced_map="normalized", affine_invariant=False),
    "multi-frequency-trig": Family("multi-frequency-trig", "shift",
                                   frequency_params=("theta",)),
    "variable-degree": Family("variable-degree", "normalized",
                              forced_map="normalized", affine_invariant=False,
                              qec=True),
}

_VALIDATORS = {
    "polynomial": _validate_polynomial,
    "trigonometric": _validate_trig,
    "hyperbolic": _validate_hyp,
    "mixed": _validate_mixed,
    "trig-envelope": _validate_envelope,
    "rational-tension": _validate_rational,
    "multi-frequency-trig": _validate_multifreq,
    "variable-degree": _validate_vardeg,
}

_BUILDERS = {
    "polynomial": _build_polynomial,
    "trigonometric": _build_trig,
    "hyperbolic": _build_hyp,
    "mixed": _build_mixed,
    "trig-envelope": _build_envelope,
    "rational-tension": _build_rational,
    "multi-frequency-trig": _build_multifreq,
    "variable-degree": _build_vardeg,
}


# ---------------------------------------------------------------------------
# sections
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ECSection:
    """One section: m generators over [x0, x1] in local coordinate (x-anchor)*scale."""

    family: str
    params: dict
    interval: tuple[float, float]
    order: int
    local_map: str
    anchor: float
    scale: float
    _gens: list = field(repr=False, compare=False, default=None)

    def __post_init__(self):
        gens = _BUILDERS[self.family](self.params, self.order)
        object.__setattr__(self, "_gens", gens)

    # -- local coordinate -------------------------------------------------
    def to_local(self, x):
        return (np.asarray(x, dtype=float) - self.anchor) * self.scale

    @property
    def local_length(self) -> float:
        return (self.interval[1] - self.interval[0]) * self.scale

    # -- evaluation --------------------------------------------------------
    def eval(self, h: int, r: int, x):
        """Derivative of order r of generator h (1-based) at x, in x-units."""
        if not 1 <= h <= self.order:
            raise InvalidSectionError(f"generator index {h} out of range 1..{self.order}")
        t = self.to_local(x)
        return self.scale ** r * self._gens[h - 1].deriv(r, t)

    def eval_all(self, r: int, x) -> np.ndarray:
        """Row vector (D^r u_1(x), ..., D^r u_m(x))."""
        t = self.to_local(x)
        s = self.scale ** r
        return np.array([s * g.deriv(r, t) for g in self._gens], dtype=float)

    def integral(self, h: int, x) -> float:
        """Integral of generator h from the section's left endpoint to x."""
        if not 1 <= h <= self.order:
            raise InvalidSectionError(f"generator index {h} out of range 1..{self.order}")
        g = self._gens[h - 1]
        t0 = self.to_local(self.interval[0])
        return float((g.antideriv(self.to_local(x)) - g.antideriv(t0)) / self.scale)

    def integral_all(self, x) -> np.ndarray:
        t0 = self.to_local(self.interval[0])
        t = self.to_local(x)
        return np.array([(g.antideriv(t) - g.antideriv(t0)) / self.scale
                         for g in self._gens], dtype=float)

    # -- geometry ----------------------------------------------------------
    def translated(self, dx: float) -> "ECSection":
        """The same section space shifted by dx along the axis."""
        x0, x1 = self.interval
        return ECSection(self.family, dict(self.params), (x0 + dx, x1 + dx),
                         self.order, self.local_map, self.anchor + dx, self.scale)

    def with_interval(self, x0: float, x1: float) -> "ECSection":
        """Restriction to a subinterval, keeping the parent local map."""
        if x0 < self.interval[0] - 1e-12 or x1 > self.interval[1] + 1e-12:
            raise InvalidSectionError("restriction interval exceeds the parent section")
        return ECSection(self.family, dict(self.params), (float(x0), float(x1)),
                         self.order, self.local_map, self.anchor, self.scale)


def _map_for(local_map: str, interval) -> tuple[float, float]:
    x0, x1 = interval
    if local_map == "shift":
        return x0, 1.0
    if local_map == "normalized":
        return x0, 1.0 / (x1 - x0)
    raise InvalidSectionError(f"unknown local map {local_map!r}")


def make_section(family: str, params: dict | None, interval: Sequence[float],
                 order: int, local_map: str | None = None, *,
                 anchor: float | None = None, scale: float | None = None) -> ECSection:
    """Validate parameters and construct a section.

    anchor/scale override the map convention; refinement uses this to keep a
    child section on its parent's local coordinate.
    """
    if family not in FAMILIES:
        raise InvalidSectionError(f"unknown section family {family!r}")
    fam = FAMILIES[family]
    params = dict(params or {})
    x0, x1 = float(interval[0]), float(interval[1])
    if not (math.isfinite(x0) and math.isfinite(x1) and x0 < x1):
        raise InvalidSectionError(f"invalid interval [{x0}, {x1}]")
    if not (isinstance(order, (int, np.integer)) and order >= 1):
        raise InvalidSectionError(f"order must be a positive integer, got {order!r}")
    order = int(order)
    if local_map is None:
        local_map = fam.default_map
    if fam.forced_map is not None and local_map != fam.forced_map:
        raise InvalidSectionError(
            f"{family} sections require the {fam.forced_map!r} local map")
    if anchor is None and scale is None:
        anchor, scale = _map_for(local_map, (x0, x1))
    elif anchor is None or scale is None:
        raise InvalidSectionError("anchor and scale must be given together")
    _VALIDATORS[family](params, order, (x1 - x0) * scale)
    return ECSection(family, params, (x0, x1), order, local_map,
                     float(anchor), float(scale))


def split_section(section: ECSection, xhat: float,
                  strategy: str = "restrict") -> tuple[ECSection, ECSection]:
    """Split a section at an interior point into two sections spanning it.

    "restrict" keeps the parent generators and local map on both halves and
    works for every family.  "reparametrize" re-anchors each half on its own
    interval with frequency parameters rescaled so the spanned space is
    unchanged; it is unavailable for families whose span is not closed under
    affine substitutions (rational-tension, variable-degree).
    """
    x0, x1 = section.interval
    if not (x0 < xhat < x1):
        raise InvalidSectionError(f"split point {xhat} not inside ({x0}, {x1})")
    if strategy == "restrict":
        return section.with_interval(x0, xhat), section.with_interval(xhat, x1)
    if strategy != "reparametrize":
        raise InvalidSectionError(f"unknown split strategy {strategy!r}")
    fam = FAMILIES[section.family]
    if not fam.affine_invariant:
        raise InvalidSectionError(
            f"{section.family} sections only support the 'restrict' strategy")
    halves = []
    for lo, hi in ((x0, xhat), (xhat, x1)):
        new_anchor, new_scale = _map_for(section.local_map, (lo, hi))
        factor = section.scale / new_scale
        params = dict(section.params)
        for name in fam.frequency_params:
            params[name] = params[name] * factor
        halves.append(make_section(section.family, params, (lo, hi),
                                   section.order, section.local_map))
    return halves[0], halves[1]


def merge_sections(left: ECSection, right: ECSection) -> ECSection | None:
    """Join two adjacent sections into one when they describe the same space.

    That holds when both carry the same family, parameters and local map
    (restrict-split siblings), so removal of a break point can undo a split.
    Returns None when the sections genuinely differ.
    """
    if left.family != right.family or left.order != right.order:
        return None
    if left.params != right.params:
        return None
    if left.interval[1] != right.interval[0]:
        return None
    if left.anchor != right.anchor or left.scale != right.scale:
        return None
    return ECSection(left.family, dict(left.params),
                     (left.interval[0], right.interval[1]), left.order,
                     left.local_map, left.anchor, left.scale)


# public helpers matching the functional API ------------------------------

def eval_generator(section: ECSection, h: int, r: int, x):
    """D^r u_h at x (x-units); x must lie in the section interval."""
    x_arr = np.asarray(x, dtype=float)
    lo, hi = section.interval
    tol = 1e-9 * max(1.0, abs(lo), abs(hi))
    if np.any(x_arr < lo - tol) or np.any(x_arr > hi + tol):
        raise InvalidSectionError(
            f"evaluation point outside section interval [{lo}, {hi}]")
    return section.eval(h, r, x)


def antiderivative_generator(section: ECSection, h: int, x):
    """Integral of u_h from the section's left endpoint to x."""
    x_arr = np.asarray(x, dtype=float)
    lo, hi = section.interval
    tol = 1e-9 * max(1.0, abs(lo), abs(hi))
    if np.any(x_arr < lo - tol) or np.any(x_arr > hi + tol):
        raise InvalidSectionError(
            f"evaluation point outside section interval [{lo}, {hi}]")
    return section.integral(h, x)
