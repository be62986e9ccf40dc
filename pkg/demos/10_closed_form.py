"""Order-4 bases with explicit formulas, checked against the solver.

For three one-parameter section families the order-4 basis on a simple
knot vector has a closed form.  Evaluating it directly and through the
transition-table pipeline gives the same numbers.
"""
import pathlib

import numpy as np

from chebspline import (closed_form_space, eval_closed_n4, sample_basis,
                        svg_function_plot, write_svg)

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

t = np.arange(11.0)
params = {"A": 1.2, "B": 2.0, "C": 5.0}
labels = {"A": "trigonometric", "B": "hyperbolic", "C": "variable power"}

for case, p in params.items():
    space = closed_form_space(case, t, p)
    xs = np.linspace(t[3], t[-4], 500, endpoint=False)
    pipe = sample_basis(space, xs)
    closed = np.column_stack([eval_closed_n4(case, t, p, i, xs)
                              for i in range(1, space.dim + 1)])
    print(f"case {case} ({labels[case]}, parameter {p}): "
          f"max |pipeline - closed form| = {np.max(np.abs(pipe - closed)):.2e}")
    write_svg(OUT / f"closed_form_{case}.svg",
              svg_function_plot(xs, list(closed.T)))

print(f"wrote {OUT / 'closed_form_A.svg'}, {OUT / 'closed_form_B.svg'}, "
      f"{OUT / 'closed_form_C.svg'}")
