"""Extended knot partitions.

A spline space on [a, b] with order m, interior break points x_1 < .. < x_q
and multiplicities 0 <= mu_i <= m carries the extended knot vector

    t_1 <= ... <= t_{2m+K},   K = sum(mu_i),

with t_1 = .. = t_m = a and t_{m+K+1} = .. = t_{2m+K} = b in the clamped
case.  Knot indices are 1-based throughout the public API.  The partition
also keeps the full grid of section boundaries, which is a superset of the
knot values: break points of multiplicity zero appear in the grid but not in
the knot vector, and auxiliary grids (periodic designs) extend beyond [a, b].
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PartitionError


@dataclass(frozen=True)
class ExtendedPartition:
    order: int
    knots: np.ndarray        # full extended vector, ascending, length 2m+K
    grid: np.ndarray         # section boundaries covering [knots[0], knots[-1]]
    a: float
    b: float
    p_index: np.ndarray      # knot -> grid index (0-based into grid)

    @property
    def K(self) -> int:
        return len(self.knots) - 2 * self.order

    @property
    def dim(self) -> int:
        """Number of B-splines: m + K."""
        return len(self.knots) - self.order

    @property
    def num_sections(self) -> int:
        return len(self.grid) - 1

    # -- 1-based knot access ------------------------------------------------
    def knot(self, i: int) -> float:
        if not 1 <= i <= len(self.knots):
            raise PartitionError(f"knot index {i} out of range 1..{len(self.knots)}")
        return float(self.knots[i - 1])

    def piece_of_knot(self, i: int) -> int:
        """Grid index of knot t_i (0-based into grid)."""
        return int(self.p_index[i - 1])

    def end_multiplicities(self, i: int) -> tuple[int, int]:
        """(mu_left, mu_right): run lengths of knots equal to t_i ending/starting at i."""
        t = self.knots
        v = t[i - 1]
        right = 1
        while i - 1 + right < len(t) and t[i - 1 + right] == v:
            right += 1
        left = 1
        while i - 1 - left >= 0 and t[i - 1 - left] == v:
            left += 1
        return left, right

    def multiplicity_of(self, x: float) -> int:
        return int(np.sum(self.knots == x))

    # -- location -------------------------------------------------------------
    def locate(self, x: float, side: str = "right") -> int:
        """1-based index l with t_l <= x < t_{l+1}; x == b returns the last
        index with t_l < b, so [t_l, t_{l+1}) is the final nontrivial span.
        side="left" locates the interval just left of x instead (one-sided
        evaluation at a knot), falling back to the first span at x = a."""
        if not (self.a <= x <= self.b):
            raise PartitionError(f"{x} outside the domain [{self.a}, {self.b}]")
        m = self.order
        if x == self.b or side == "left":
            ell = int(np.searchsorted(self.knots, x, side="left"))
            return max(ell, m)
        return int(np.searchsorted(self.knots, x, side="right"))

    def grid_interval(self, x: float, side: str = "right") -> int:
        """0-based grid interval index containing x.

        side="right" treats intervals as [x_j, x_{j+1}) except at the grid's
        far end; side="left" uses (x_j, x_{j+1}].
        """
        g = self.grid
        if x < g[0] or x > g[-1]:
            raise PartitionError(f"{x} outside the grid [{g[0]}, {g[-1]}]")
        if side == "left":
            j = int(np.searchsorted(g, x, side="left")) - 1
        else:
            j = int(np.searchsorted(g, x, side="right")) - 1
        return min(max(j, 0), len(g) - 2)

    # -- derived views ----------------------------------------------------------
    def interior_multiplicities(self) -> list[int]:
        """Multiplicities of the interior grid points within (a, b)."""
        out = []
        for x in self.grid[1:-1]:
            if self.a < x < self.b:
                out.append(self.multiplicity_of(float(x)))
        return out

    def breakpoints(self) -> np.ndarray:
        return self.grid.copy()


def build_extended_partition(breakpoints, multiplicities, order: int) -> ExtendedPartition:
    """Clamped extended partition from interior break points and multiplicities.

    breakpoints = [x_0, x_1, .., x_q, x_{q+1}] with x_0 = a, x_{q+1} = b;
    multiplicities has one entry 0..m per interior break point.
    """
    bp = np.asarray(breakpoints, dtype=float)
    mult = [int(m) for m in multiplicities]
    m = int(order)
    if m < 1:
        raise PartitionError("order must be >= 1")
    if len(bp) < 2 or np.any(np.diff(bp) <= 0):
        raise PartitionError("break points must be strictly increasing with at least two entries")
    if len(mult) != len(bp) - 2:
        raise PartitionError(
            f"expected {len(bp) - 2} interior multiplicities, got {len(mult)}")
    if any(not 0 <= mu <= m for mu in mult):
        raise PartitionError(f"multiplicities must lie in 0..{m}")
    a, b = float(bp[0]), float(bp[-1])
    knots = [a] * m
    p_index = [0] * m
    for j, mu in enumerate(mult, start=1):
        knots.extend([float(bp[j])] * mu)
        p_index.extend([j] * mu)
    knots.extend([b] * m)
    p_index.extend([len(bp) - 1] * m)
    return ExtendedPartition(m, np.asarray(knots), bp.copy(), a, b,
                             np.asarray(p_index, dtype=int))


def partition_from_knots(order: int, knots, grid=None,
                         domain: tuple[float, float] | None = None) -> ExtendedPartition:
    """Partition from an explicit (possibly unclamped) extended knot vector.

    grid, when given, must contain every distinct knot value plus any extra
    section boundaries (zero-multiplicity break points).  domain defaults to
    [t_m, t_{m+K+1}] which must be consistent with the vector.
    """
    m = int(order)
    t = np.asarray(knots, dtype=float)
    if len(t) < 2 * m:
        raise PartitionError(f"need at least {2 * m} knots for order {m}")
    if np.any(np.diff(t) < 0):
        raise PartitionError("knots must be non-decreasing")
    K = len(t) - 2 * m
    a, b = float(t[m - 1]), float(t[m + K])
    if domain is not None:
        if abs(domain[0] - a) > 0 or abs(domain[1] - b) > 0:
            raise PartitionError(
                f"domain {domain} inconsistent with knots: t_m={a}, t_(m+K+1)={b}")
    if a >= b:
        raise PartitionError("empty domain: t_m must be below t_{m+K+1}")
    distinct = np.unique(t)
    if grid is None:
        g = distinct
    else:
        g = np.unique(np.asarray(grid, dtype=float))
        missing = np.setdiff1d(distinct, g)
        if len(missing):
            raise PartitionError(f"grid is missing knot values {missing.tolist()}")
        if g[0] != t[0] or g[-1] != t[-1]:
            raise PartitionError("grid must span exactly the knot range")
    p_index = np.searchsorted(g, t)
    return ExtendedPartition(m, t.copy(), g, a, b, p_index.astype(int))
