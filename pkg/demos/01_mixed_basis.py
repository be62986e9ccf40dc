"""Build a three-piece space (polynomial, trig, hyperbolic) and plot it.

The B-spline-like basis comes out of a table of transition functions, each
one ramping from 0 to 1 across a window of the domain.  Differencing
consecutive ramps gives the normalized basis.
"""
import pathlib

import numpy as np

from chebspline import (build_extended_partition, make_section,
                        make_spline_space, sample_basis, sample_transitions,
                        svg_function_plot, write_svg)

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

theta, phi = 2.0, 4.0
part = build_extended_partition([0.0, 0.25, 0.5, 1.0], [1, 1], 3)
secs = [
    make_section("polynomial", None, (0.0, 0.25), 3),
    make_section("trigonometric", {"theta": theta}, (0.25, 0.5), 3, "shift"),
    make_section("hyperbolic", {"phi": phi}, (0.5, 1.0), 3, "shift"),
]
space = make_spline_space(part, secs)

print(f"order {space.order}, dimension {space.dim}")
print(f"knots: {np.asarray(space.partition.knots)}")
for i in (3, 4):
    row = np.concatenate(space.table.rows[i].pieces)
    print(f"transition {i} coefficients: {np.round(row, 10)}")

xs = np.linspace(0.0, 1.0, 600)
basis = sample_basis(space, xs)
ramps = sample_transitions(space, xs)
print(f"partition of unity defect: {np.max(np.abs(basis.sum(axis=1) - 1)):.2e}")

write_svg(OUT / "mixed_basis.svg", svg_function_plot(xs, list(basis.T)))
write_svg(OUT / "mixed_transitions.svg", svg_function_plot(xs, list(ramps.T)))
print(f"wrote {OUT / 'mixed_basis.svg'} and {OUT / 'mixed_transitions.svg'}")
