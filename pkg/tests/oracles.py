"""Independent reference implementations used to cross-check the kernel.

Everything here is classical polynomial spline machinery (Cox-de Boor
recurrence, Boehm insertion weights, Bernstein/Bezier formulas) written
directly from the textbook definitions, without touching the package's
transition-function pipeline.
"""
import numpy as np


def find_span(knots, order, x):
    """0-based ell with t[ell] <= x < t[ell+1], right-closed at the domain end."""
    t = np.asarray(knots, dtype=float)
    dim = len(t) - order
    if x >= t[dim]:
        ell = dim - 1
        while t[ell] == t[ell + 1]:
            ell -= 1
        return ell
    lo, hi = order - 1, dim
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if x < t[mid]:
            hi = mid
        else:
            lo = mid
    return lo


def nonzero_row(knots, order, x):
    """(first 1-based index, m values) of the nonzero N_{i,m}(x), triangular scheme."""
    t = np.asarray(knots, dtype=float)
    m = order
    ell = find_span(t, m, x)
    vals = np.zeros(m)
    vals[m - 1] = 1.0
    for k in range(1, m):
        # raise order from k to k+1 on the window ell-k..ell
        nxt = np.zeros(m)
        for j in range(k + 1):
            i = ell - k + j          # 0-based basis index at order k+1
            left = t[i + k] - t[i]
            right = t[i + k + 1] - t[i + 1]
            acc = 0.0
            if left > 0.0:
                acc += (x - t[i]) / left * vals[m - 1 - k + j]
            if right > 0.0 and j < k:
                acc += (t[i + k + 1] - x) / right * vals[m - k + j]
            nxt[m - 1 - k + j] = acc
        vals = nxt
    return ell - m + 2, vals


def basis_row(knots, order, x):
    """All dim values N_{1..dim,order}(x) for polynomial sections."""
    t = np.asarray(knots, dtype=float)
    dim = len(t) - order
    first, vals = nonzero_row(t, order, x)
    out = np.zeros(dim)
    for j, v in enumerate(vals):
        i = first + j
        if 1 <= i <= dim:
            out[i - 1] = v
    return out


def bspline(knots, order, i, x):
    """Single N_{i,order}(x), 1-based i."""
    return basis_row(knots, order, x)[i - 1]


def boehm_alphas(knots, order, that):
    """Insertion weights alpha_1..alpha_{dim+1} for polynomial splines."""
    t = np.asarray(knots, dtype=float)
    m = order
    dim = len(t) - m
    ell = find_span(t, m, that) + 1              # 1-based
    mult = int(np.count_nonzero(np.isclose(t, that, rtol=0.0, atol=1e-12))) + 1
    alphas = np.zeros(dim + 1)
    for i in range(1, dim + 2):
        if i <= ell - m + 1:
            alphas[i - 1] = 1.0
        elif i <= ell - mult + 1:
            alphas[i - 1] = (that - t[i - 1]) / (t[i + m - 2] - t[i - 1])
    return alphas


def bernstein(n, i, x):
    """Classical Bernstein polynomial B_{i,n} on [0, 1]."""
    from math import comb
    return comb(n, i) * x ** i * (1.0 - x) ** (n - i)


def bezier_elevated(controls):
    """Degree elevation of a Bezier control polygon by one."""
    c = np.asarray(controls, dtype=float)
    n = c.shape[0] - 1
    out = np.zeros((n + 2,) + c.shape[1:])
    out[0] = c[0]
    out[n + 1] = c[n]
    for i in range(1, n + 1):
        w = i / (n + 1)
        out[i] = w * c[i - 1] + (1.0 - w) * c[i]
    return out


def random_clamped_knots(rng, order, n_break, max_mult=None):
    """Clamped knot vector on [0, 1] with random interior multiplicities."""
    m = order
    if max_mult is None:
        max_mult = m - 1
    bps = np.sort(rng.uniform(0.1, 0.9, n_break))
    while np.any(np.diff(bps) < 0.02):
        bps = np.sort(rng.uniform(0.1, 0.9, n_break))
    mults = rng.integers(1, max_mult + 1, n_break)
    knots = [0.0] * m
    for b, mu in zip(bps, mults):
        knots.extend([float(b)] * int(mu))
    knots.extend([1.0] * m)
    return np.array(knots), bps, mults
