"""Variable-degree sections act as a tension dial.

The three committed spaces differ only in the exponent n of the
variable-degree generators.  As n grows the basis functions sharpen toward
the break points, and a curve built on the same control points hugs its
polygon more tightly.  The detected endpoint vanishing orders jump from
the multiplicity rule to n - 1 wherever a variable-degree piece absorbs a
full set of boundary conditions.
"""
import pathlib

import numpy as np

from chebspline import (Spline, load_object, qec_profile, sample_basis,
                        sample_spline, svg_curve_plot, svg_function_plot,
                        write_svg)

HERE = pathlib.Path(__file__).parent
OUT = HERE / "out"
OUT.mkdir(exist_ok=True)

spaces = {n: load_object(HERE / "descriptors" /
                         f"qec_envelope_vardeg_n{n}.json")
          for n in (5, 10, 50)}

for n, space in spaces.items():
    prof = qec_profile(space.table)
    raised = {i: k for i, k in prof.kbar_right.items()
              if k > space.order - 2}
    print(f"n = {n}: dim {space.dim}, "
          f"raised right-end vanishing orders {raised}")

xs = np.linspace(spaces[5].a, spaces[5].b, 900)
for n in (5, 50):
    write_svg(OUT / f"vardeg_basis_n{n}.svg",
              svg_function_plot(xs, list(sample_basis(spaces[n], xs).T)))

rng = np.random.default_rng(7)
controls = np.column_stack([np.linspace(0.0, 6.0, spaces[5].dim),
                            rng.uniform(-1.0, 1.0, spaces[5].dim)])
curves = [sample_spline(Spline(spaces[n], controls), xs) for n in (5, 50)]
write_svg(OUT / "vardeg_tension.svg", svg_curve_plot([*curves, controls]))
print(f"wrote {OUT / 'vardeg_basis_n5.svg'}, {OUT / 'vardeg_basis_n50.svg'} "
      f"and {OUT / 'vardeg_tension.svg'}")
