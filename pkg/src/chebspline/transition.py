"""Transition functions: the monotone ramps that encode a B-spline basis.

For a space of order m and dimension m+K the transition functions f_1..f_{m+K+1}
satisfy f_1 = 1, f_{m+K+1} = 0, and each inner f_i rises from 0 to 1 across
[t_i, t_{i+m-1}], staying as smooth across break points as the space demands.
The basis is recovered as N_i = f_i - f_{i+1}.  Each inner f_i solves a small
Hermite interpolation problem: a block system whose unknowns are the
coefficients of f_i on every section it crosses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConnectionMatrixError, SingularSystemError
from .sections import ECSection


# ---------------------------------------------------------------------------
# connection matrices (geometric continuity)
# ---------------------------------------------------------------------------

def validate_connection_matrix(M: np.ndarray, order: int) -> np.ndarray:
    """Check a connection matrix: lower triangular, positive diagonal,
    first row and first column equal to (1, 0, .., 0)."""
    M = np.asarray(M, dtype=float)
    if M.shape != (order, order):
        raise ConnectionMatrixError(
            f"connection matrix must be {order}x{order}, got {M.shape}")
    if order >= 1 and abs(M[0, 0] - 1.0) > 1e-12:
        raise ConnectionMatrixError("connection matrix must have M[0,0] = 1")
    if np.any(np.abs(np.triu(M, 1)) > 1e-12):
        raise ConnectionMatrixError("connection matrix must be lower triangular")
    if np.any(np.abs(M[0, 1:]) > 1e-12) or np.any(np.abs(M[1:, 0]) > 1e-12):
        raise ConnectionMatrixError(
            "first row and column of a connection matrix must be (1, 0, .., 0)")
    if np.any(np.diag(M) <= 0):
        raise ConnectionMatrixError("connection matrix diagonal must be positive")
    return M


# ---------------------------------------------------------------------------
# generic ramp solver
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RowReport:
    index: int
    size: int
    condition: float
    residual: float


def solve_ramp(sections: list[ECSection], points: list[float],
               left_count: int, interior_counts: list[int], right_count: int,
               connections: list[np.ndarray | None] | None = None, *,
               index: int = 0, residual_tol: float = 1e-8,
               equilibrate: bool = True) -> tuple[list[np.ndarray], RowReport]:
    """Solve for a piecewise ramp: 0 at the left end, 1 at the right end.

    sections: the P pieces the ramp crosses; points: their P+1 boundaries.
    left_count rows force D^r = 0 (r < left_count) at points[0];
    interior_counts[j] rows tie pieces j and j+1 at points[j+1] (optionally
    through a connection matrix acting on the left derivative vector);
    right_count rows force D^r = delta_{r,0} at points[-1].

    Returns per-piece coefficient vectors plus a conditioning report.
    """
    P = len(sections)
    orders = [s.order for s in sections]
    n = sum(orders)
    rows = left_count + sum(interior_counts) + right_count
    if rows != n:
        raise SingularSystemError(
            f"transition system for f_{index} is not square: "
            f"{rows} conditions for {n} unknowns", index=index)
    offs = np.concatenate([[0], np.cumsum(orders)]).astype(int)
    A = np.zeros((n, n))
    c = np.zeros(n)
    r0 = 0
    for r in range(left_count):
        A[r0, offs[0]:offs[1]] = sections[0].eval_all(r, points[0])
        r0 += 1
    for j in range(P - 1):
        cnt = interior_counts[j]
        x = points[j + 1]
        M = None if connections is None else connections[j]
        left_block = np.array([sections[j].eval_all(r, x)
                               for r in range(cnt)])
        if M is not None:
            M = np.asarray(M, dtype=float)
            if M.shape[0] < cnt:
                raise ConnectionMatrixError(
                    f"connection matrix at x={x} has order {M.shape[0]}, "
                    f"need at least {cnt}")
            left_block = M[:cnt, :cnt] @ left_block
        for r in range(cnt):
            A[r0, offs[j]:offs[j + 1]] = left_block[r]
            A[r0, offs[j + 1]:offs[j + 2]] = -sections[j + 1].eval_all(r, x)
            r0 += 1
    for r in range(right_count):
        A[r0, offs[P - 1]:offs[P]] = sections[P - 1].eval_all(r, points[P])
        c[r0] = 1.0 if r == 0 else 0.0
        r0 += 1

    if equilibrate:
        row_s = np.abs(A).max(axis=1)
        row_s[row_s == 0] = 1.0
        A_eq = A / row_s[:, None]
        col_s = np.abs(A_eq).max(axis=0)
        col_s[col_s == 0] = 1.0
        A_eq = A_eq / col_s[None, :]
        c_eq = c / row_s
    else:
        A_eq, c_eq, col_s = A, c, np.ones(n)

    cond = float(np.linalg.cond(A_eq, 1))
    try:
        y = np.linalg.solve(A_eq, c_eq)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(
            f"transition system for f_{index} is singular "
            f"(condition estimate {cond:.3e}); the space does not admit a "
            f"numerically usable B-spline basis", index=index,
            condition=cond) from exc
    b = y / col_s
    res = A @ b - c
    denom = np.linalg.norm(A, np.inf) * np.linalg.norm(b, np.inf) + 1.0
    rel = float(np.linalg.norm(res, np.inf) / denom)
    if rel > residual_tol:
        raise SingularSystemError(
            f"transition system for f_{index} solved with relative residual "
            f"{rel:.3e} > {residual_tol:.1e} (condition {cond:.3e}); the "
            f"space is too ill conditioned for a usable B-spline basis",
            index=index, condition=cond, residual=rel)
    coeffs = [b[offs[j]:offs[j + 1]].copy() for j in range(P)]
    return coeffs, RowReport(index, n, cond, rel)


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TransitionRow:
    index: int
    kind: str                      # "ramp" | "step"
    start: float
    stop: float
    first_piece: int               # grid interval index of the first piece
    pieces: tuple[np.ndarray, ...]


@dataclass
class TransitionTable:
    order: int
    dim: int
    partition: object              # ExtendedPartition
    sections: list[ECSection]
    rows: dict[int, TransitionRow]
    reports: dict[int, RowReport] = field(default_factory=dict)

    @property
    def max_condition(self) -> float:
        return max((r.condition for r in self.reports.values()), default=1.0)

    @property
    def max_residual(self) -> float:
        return max((r.residual for r in self.reports.values()), default=0.0)

    def support(self, i: int) -> tuple[float, float]:
        """Support [t_i, t_{i+m-1}] of transition function i."""
        row = self.rows[i]
        return row.start, row.stop

    def eval(self, i: int, x: float, r: int = 0, side: str = "right") -> float:
        """D^r f_i(x).  side picks the piece when x sits on a break point."""
        if i == 1:
            return 1.0 if r == 0 else 0.0
        if i == self.dim + 1:
            return 0.0
        row = self.rows[i]
        if row.kind == "step":
            if x < row.start or (x == row.start and side == "left"):
                return 0.0
            return 1.0 if r == 0 else 0.0
        j = self.partition.grid_interval(x, side)
        k = j - row.first_piece
        if k < 0:
            return 0.0
        if k >= len(row.pieces):
            return 1.0 if r == 0 else 0.0
        vals = self.sections[j].eval_all(r, x)
        return float(row.pieces[k] @ vals)

    def integral(self, i: int, u: float, v: float) -> float:
        """Integral of f_i over [u, v] (u <= v within the grid)."""
        if u > v:
            raise ValueError("integration bounds must satisfy u <= v")
        if i == 1:
            return v - u
        if i == self.dim + 1:
            return 0.0
        row = self.rows[i]
        if row.kind == "step":
            return max(0.0, v - max(u, row.start))
        total = max(0.0, v - max(u, row.stop))
        lo, hi = max(u, row.start), min(v, row.stop)
        if lo >= hi:
            return total
        grid = self.partition.grid
        for k, coeff in enumerate(row.pieces):
            j = row.first_piece + k
            seg_lo, seg_hi = max(lo, grid[j]), min(hi, grid[j + 1])
            if seg_lo < seg_hi:
                sec = self.sections[j]
                vals = sec.integral_all(seg_hi) - sec.integral_all(seg_lo)
                total += float(coeff @ vals)
        return total

    def dump_csv(self, stream) -> None:
        """One line per transition function: index, kind, support, first
        piece, then the per-piece coefficients flattened in piece order."""
        close = False
        if isinstance(stream, (str, bytes)):
            stream = open(stream, "w")
            close = True
        try:
            stream.write("i,kind,start,stop,first_piece,coefficients...\n")
            for i in sorted(self.rows):
                row = self.rows[i]
                flat = np.concatenate(row.pieces) if row.pieces else np.array([])
                nums = ",".join(f"{v:.17g}" for v in flat)
                line = f"{i},{row.kind},{row.start:.17g},{row.stop:.17g},{row.first_piece}"
                stream.write(line + ("," + nums if nums else "") + "\n")
        finally:
            if close:
                stream.close()


def solve_space_row(partition, sections, connections, i: int, *,
                    residual_tol: float = 1e-8,
                    equilibrate: bool = True) -> tuple[TransitionRow, RowReport | None]:
    """Assemble and solve the Hermite system for transition function f_i.

    When the row's two support knots coincide, f_i degenerates to a step
    function and no system is solved.
    """
    part = partition
    m = part.order
    grid = part.grid
    t_lo = part.knot(i)
    t_hi = part.knot(i + m - 1)
    g_lo = part.piece_of_knot(i)
    g_hi = part.piece_of_knot(i + m - 1)
    if t_lo == t_hi:
        return TransitionRow(i, "step", t_lo, t_hi, g_lo, ()), None
    mu_right = part.end_multiplicities(i)[1]
    mu_left = part.end_multiplicities(i + m - 1)[0]
    pieces = [sections[j] for j in range(g_lo, g_hi)]
    points = [float(grid[j]) for j in range(g_lo, g_hi + 1)]
    interior = []
    conn = []
    for j in range(g_lo + 1, g_hi):
        mu = part.multiplicity_of(float(grid[j]))
        interior.append(m - mu)
        conn.append(connections.get(j))
    coeffs, rep = solve_ramp(pieces, points, m - mu_right, interior,
                             m - mu_left, conn, index=i,
                             residual_tol=residual_tol,
                             equilibrate=equilibrate)
    return TransitionRow(i, "ramp", t_lo, t_hi, g_lo, tuple(coeffs)), rep


def build_transition_table(space, *, residual_tol: float = 1e-8,
                           equilibrate: bool = True) -> TransitionTable:
    """Solve for all inner transition functions of a spline space.

    space provides .partition, .sections (one per grid interval) and
    .connections (grid index -> connection matrix; identity when absent).
    """
    part = space.partition
    sections = space.sections
    connections = getattr(space, "connections", {}) or {}
    dim = part.dim
    rows: dict[int, TransitionRow] = {}
    reports: dict[int, RowReport] = {}
    for key, M in connections.items():
        mu = part.multiplicity_of(float(part.grid[key]))
        validate_connection_matrix(M, part.order - mu)
    for i in range(2, dim + 1):
        row, rep = solve_space_row(part, sections, connections, i,
                                   residual_tol=residual_tol,
                                   equilibrate=equilibrate)
        rows[i] = row
        if rep is not None:
            reports[i] = rep
    return TransitionTable(part.order, dim, part, sections, rows, reports)


def detect_vanishing_order(table: TransitionTable, i: int, side: str = "left",
                           threshold: float = 1e-7, cap: int = 128) -> int:
    """Number of derivatives of f_i that vanish at a support endpoint.

    side="left": largest k with D_+^r f_i(t_i) = 0 for r = 0..k;
    side="right": largest k with D_-^r f_i(t_{i+m-1}) = 0 for r = 1..k.
    For EC sections this equals the multiplicity-determined order; quasi-EC
    sections (variable-degree) can vanish to higher order, which knot
    insertion must use.  Vanishing is judged against the scale
    max|coeff| * max|D^r u_h| so cancellation does not masquerade as a zero.
    """
    row = table.rows[i]
    if row.kind == "step":
        raise SingularSystemError(
            f"f_{i} is a step function; endpoint orders are undefined", index=i)
    if side == "left":
        x = row.start
        sec = table.sections[row.first_piece]
        coeff = row.pieces[0]
        r0 = 1
    else:
        x = row.stop
        sec = table.sections[row.first_piece + len(row.pieces) - 1]
        coeff = row.pieces[-1]
        r0 = 1
    cscale = np.abs(coeff).max()
    for r in range(r0, cap + 1):
        vals = sec.eval_all(r, x)
        if not np.all(np.isfinite(vals)):
            break
        scale = cscale * np.abs(vals).max()
        if scale == 0.0:
            continue
        if abs(float(coeff @ vals)) > threshold * max(1.0, scale):
            return r - 1
    raise SingularSystemError(
        f"no nonvanishing endpoint derivative of f_{i} found up to order {cap}",
        index=i)
