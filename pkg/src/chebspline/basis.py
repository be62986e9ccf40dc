"""B-spline and Bernstein bases, spline curves and tensor-product surfaces.

The basis is never stored explicitly: every evaluation is a difference of two
transition functions, N_i = f_i - f_{i+1}, so values, derivatives and
integrals all come from one representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import PartitionError
from .partition import ExtendedPartition, build_extended_partition
from .sections import ECSection
from .transition import TransitionTable, build_transition_table


@dataclass
class SplineSpace:
    """A piecewise Chebyshevian spline space on [a, b].

    sections holds one ECSection per grid interval; connections maps interior
    grid indices to connection matrices (identity when absent).
    """

    partition: ExtendedPartition
    sections: list[ECSection]
    connections: dict[int, np.ndarray] = field(default_factory=dict)
    residual_tol: float = 1e-8
    _table: TransitionTable | None = field(default=None, repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.partition.order

    @property
    def dim(self) -> int:
        return self.partition.dim

    @property
    def a(self) -> float:
        return self.partition.a

    @property
    def b(self) -> float:
        return self.partition.b

    @property
    def table(self) -> TransitionTable:
        if self._table is None:
            self._table = build_transition_table(self, residual_tol=self.residual_tol)
        return self._table

    def support(self, i: int) -> tuple[float, float]:
        """Support [t_i, t_{i+m}] of basis function N_i."""
        return self.partition.knot(i), self.partition.knot(i + self.order)


def make_spline_space(partition: ExtendedPartition, sections: list[ECSection],
                      connections=None, residual_tol: float = 1e-8) -> SplineSpace:
    """Assemble and validate a spline space.

    connections may be a dict {grid index: matrix} or a sequence of
    (location, matrix) pairs; locations must be interior grid points.
    """
    if len(sections) != partition.num_sections:
        raise PartitionError(
            f"need {partition.num_sections} sections, got {len(sections)}")
    grid = partition.grid
    for j, sec in enumerate(sections):
        lo, hi = sec.interval
        tol = 1e-9 * max(1.0, abs(grid[j]), abs(grid[j + 1]))
        if abs(lo - grid[j]) > tol or abs(hi - grid[j + 1]) > tol:
            raise PartitionError(
                f"section {j} spans [{lo}, {hi}] but the grid interval is "
                f"[{grid[j]}, {grid[j + 1]}]")
        if sec.order != partition.order:
            raise PartitionError(
                f"section {j} has order {sec.order}, expected {partition.order}")
    conn: dict[int, np.ndarray] = {}
    if connections:
        items = connections.items() if isinstance(connections, dict) else connections
        for key, M in items:
            if isinstance(key, (int, np.integer)) and not isinstance(key, bool) \
                    and 0 < key < len(grid) - 1 and float(key) not in grid:
                g = int(key)
            else:
                hits = np.nonzero(np.isclose(grid, float(key), rtol=0, atol=1e-12))[0]
                if len(hits) != 1:
                    raise PartitionError(f"connection location {key} is not a grid point")
                g = int(hits[0])
            if not 0 < g < len(grid) - 1:
                raise PartitionError("connection matrices attach to interior break points")
            conn[g] = np.asarray(M, dtype=float)
    return SplineSpace(partition, sections, conn, residual_tol)


def one_section_space(section: ECSection) -> SplineSpace:
    """The Bernstein configuration: a single section, no interior knots."""
    part = build_extended_partition(list(section.interval), [], section.order)
    return SplineSpace(part, [section])


@dataclass
class Spline:
    """Coefficients c_1..c_{dim} in R^d against the B-spline basis of a space."""

    space: SplineSpace
    coefficients: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=float)
        if c.ndim == 1:
            c = c[:, None]
        if c.shape[0] != self.space.dim:
            raise PartitionError(
                f"expected {self.space.dim} coefficients, got {c.shape[0]}")
        self.coefficients = c

    @property
    def dim_target(self) -> int:
        return self.coefficients.shape[1]


@dataclass
class TensorSurface:
    u_space: SplineSpace
    v_space: SplineSpace
    net: np.ndarray  # (dim_u, dim_v, d)

    def __post_init__(self):
        net = np.asarray(self.net, dtype=float)
        if net.ndim == 2:
            net = net[:, :, None]
        if net.shape[0] != self.u_space.dim or net.shape[1] != self.v_space.dim:
            raise PartitionError(
                f"control net {net.shape[:2]} does not match space dimensions "
                f"({self.u_space.dim}, {self.v_space.dim})")
        self.net = net


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def eval_bspline(space: SplineSpace, i: int, x: float, r: int = 0,
                 side: str = "right") -> float:
    """D^r N_i(x) = D^r f_i(x) - D^r f_{i+1}(x)."""
    if not 1 <= i <= space.dim:
        raise PartitionError(f"basis index {i} out of range 1..{space.dim}")
    table = space.table
    return table.eval(i, x, r, side) - table.eval(i + 1, x, r, side)


def eval_nonzero_basis(space: SplineSpace, x: float, r: int = 0,
                       side: str = "right") -> tuple[int, np.ndarray]:
    """All m possibly nonzero D^r N_i at x; returns (first index l-m+1, values)."""
    part = space.partition
    m = part.order
    ell = part.locate(x, side)
    table = space.table
    f = [table.eval(i, x, r, side) for i in range(ell - m + 1, ell + 2)]
    vals = np.array([f[k] - f[k + 1] for k in range(m)])
    return ell - m + 1, vals


def eval_spline(spline: Spline, x: float, side: str = "right") -> np.ndarray:
    lo, vals = eval_nonzero_basis(spline.space, x, 0, side)
    return vals @ spline.coefficients[lo - 1:lo - 1 + len(vals)]


def eval_spline_derivative(spline: Spline, r: int, x: float,
                           side: str = "right") -> np.ndarray:
    lo, vals = eval_nonzero_basis(spline.space, x, r, side)
    return vals @ spline.coefficients[lo - 1:lo - 1 + len(vals)]


def integrate_spline(spline: Spline, x0: float, x1: float) -> np.ndarray:
    """Exact integral of the spline over [x0, x1] via antiderivatives."""
    if x0 > x1:
        raise ValueError("integration bounds must satisfy x0 <= x1")
    space = spline.space
    table = space.table
    out = np.zeros(spline.dim_target)
    for i in range(1, space.dim + 1):
        w = table.integral(i, x0, x1) - table.integral(i + 1, x0, x1)
        if w != 0.0:
            out += w * spline.coefficients[i - 1]
    return out


def bernstein_basis(space: SplineSpace, i: int, x: float, r: int = 0,
                    side: str = "right") -> float:
    """Bernstein basis B_{i,n}, i = 0..n, of a one-section space."""
    if space.partition.K != 0:
        raise PartitionError("Bernstein basis requires an empty interior partition")
    n = space.order - 1
    if not 0 <= i <= n:
        raise PartitionError(f"Bernstein index {i} out of range 0..{n}")
    return eval_bspline(space, i + 1, x, r, side)


def eval_surface(surface: TensorSurface, u: float, v: float) -> np.ndarray:
    lu, nu = eval_nonzero_basis(surface.u_space, u)
    lv, nv = eval_nonzero_basis(surface.v_space, v)
    block = surface.net[lu - 1:lu - 1 + len(nu), lv - 1:lv - 1 + len(nv)]
    return np.einsum("i,j,ijd->d", nu, nv, block)


def sample_basis(space: SplineSpace, xs) -> np.ndarray:
    """Matrix of all basis values at the sample points (len(xs) x dim)."""
    xs = np.asarray(xs, dtype=float)
    out = np.zeros((len(xs), space.dim))
    for k, x in enumerate(xs):
        lo, vals = eval_nonzero_basis(space, float(x))
        out[k, lo - 1:lo - 1 + len(vals)] = vals
    return out


def sample_transitions(space: SplineSpace, xs) -> np.ndarray:
    """Matrix of inner transition values f_2..f_dim at the sample points."""
    xs = np.asarray(xs, dtype=float)
    table = space.table
    out = np.zeros((len(xs), space.dim - 1))
    for k, x in enumerate(xs):
        for i in range(2, space.dim + 1):
            out[k, i - 2] = table.eval(i, float(x))
    return out


def sample_spline(spline: Spline, xs) -> np.ndarray:
    xs = np.asarray(xs, dtype=float)
    return np.array([eval_spline(spline, float(x)) for x in xs])
