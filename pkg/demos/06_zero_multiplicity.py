"""A break point can carry no knot at all.

The tension curve switches its section parameter at x = 2 without spending
a knot there, so the basis is C3 across that break point while the simple
knots at x = 1 and x = 3 give the usual C2 joins.
"""
import pathlib

import numpy as np

from chebspline import (eval_bspline, load_object, sample_basis,
                        sample_spline, svg_curve_plot, svg_function_plot,
                        write_svg)

HERE = pathlib.Path(__file__).parent
OUT = HERE / "out"
OUT.mkdir(exist_ok=True)

curve = load_object(HERE / "descriptors" / "tension_zero_mult_curve.json")
space = curve.space
part = space.partition
print(f"dim {space.dim}, knots {np.asarray(part.knots)}")
print(f"grid {np.asarray(part.grid)} "
      f"(x = 2 is a break point with multiplicity {part.multiplicity_of(2.0)})")

for x in (1.0, 2.0, 3.0):
    worst = {r: 0.0 for r in range(4)}
    for i in range(1, space.dim + 1):
        for r in worst:
            worst[r] = max(worst[r],
                           abs(eval_bspline(space, i, x, r, "right")
                               - eval_bspline(space, i, x, r, "left")))
    line = ", ".join(f"D{r} {v:.1e}" for r, v in worst.items())
    print(f"basis jumps at {x}: {line}")

xs = np.linspace(space.a, space.b, 700)
write_svg(OUT / "zero_mult_basis.svg",
          svg_function_plot(xs, list(sample_basis(space, xs).T)))
write_svg(OUT / "zero_mult_curve.svg",
          svg_curve_plot([sample_spline(curve, xs), curve.coefficients]))
print(f"wrote {OUT / 'zero_mult_basis.svg'} and {OUT / 'zero_mult_curve.svg'}")
