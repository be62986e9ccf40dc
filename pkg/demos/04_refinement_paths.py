"""Knot insertion and order elevation do not commute.

Starting from one trigonometric element, inserting a mid knot first and
elevating afterwards leaves a genuine second-derivative kink at the new
break point.  Elevating first and inserting afterwards produces a space
that is one function smaller and fully C2 there.
"""
import pathlib

import numpy as np

from chebspline import (Spline, elevate_order, eval_bspline, insert_knot,
                        make_section, one_section_space, sample_basis,
                        svg_function_plot, write_svg)

OUT = pathlib.Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

base_space = one_section_space(
    make_section("trigonometric", {"theta": 2.0}, (0.0, 1.0), 3, "shift"))
base = Spline(base_space, np.array([[0.0], [1.0], [0.0]]))


def jump(space, i, r):
    return abs(eval_bspline(space, i, 0.5, r, "right")
               - eval_bspline(space, i, 0.5, r, "left"))


step, hp = insert_knot(base_space, base, 0.5)
_, hp = elevate_order(step.space, hp, 1)
print(f"insert then elevate: {hp.space.dim} basis functions")
for r in (1, 2):
    worst = max(jump(hp.space, i, r) for i in range(1, hp.space.dim + 1))
    print(f"  max |D{r} jump| at 0.5: {worst:.2e}")

_, k = elevate_order(base_space, base, 1)
step, k = insert_knot(k.space, k, 0.5)
print(f"elevate then insert: {k.space.dim} basis functions")
for r in (1, 2):
    worst = max(jump(k.space, i, r) for i in range(1, k.space.dim + 1))
    print(f"  max |D{r} jump| at 0.5: {worst:.2e}")

xs = np.linspace(0.0, 1.0, 600)
write_svg(OUT / "path_insert_elevate.svg",
          svg_function_plot(xs, list(sample_basis(hp.space, xs).T)))
write_svg(OUT / "path_elevate_insert.svg",
          svg_function_plot(xs, list(sample_basis(k.space, xs).T)))
print(f"wrote {OUT / 'path_insert_elevate.svg'} "
      f"and {OUT / 'path_elevate_insert.svg'}")
