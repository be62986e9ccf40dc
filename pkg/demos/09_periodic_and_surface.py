"""Closed curves and tensor-product surfaces.

The committed closed curve lives on a periodically extended knot vector; a
few control points repeat so the seam is as smooth as the interior.
Clamping rewrites it on a plain clamped space without moving a point.  The
surface pairs two univariate spaces, one per parameter direction.
"""
import pathlib

import numpy as np

from chebspline import (curvature_comb, eval_spline_derivative, eval_surface,
                        load_object, periodic_to_clamped, sample_spline,
                        svg_curve_plot, write_svg)

HERE = pathlib.Path(__file__).parent
OUT = HERE / "out"
OUT.mkdir(exist_ok=True)

closed = load_object(HERE / "descriptors" / "tension_closed_curve.json")
space = closed.space
print(f"closed curve: domain [{space.a}, {space.b}], dim {space.dim}")
for r in (0, 1, 2):
    lo = eval_spline_derivative(closed, r, space.a, "right")
    hi = eval_spline_derivative(closed, r, space.b, "left")
    print(f"  seam D{r} gap: {np.max(np.abs(hi - lo)):.2e}")

cl_space, clamped = periodic_to_clamped(space, closed)
xs = np.linspace(space.a, space.b, 600)
gap = np.max(np.abs(sample_spline(closed, xs) - sample_spline(clamped, xs)))
print(f"clamped end multiplicity {cl_space.partition.multiplicity_of(space.a)}, "
      f"reparation gap {gap:.2e}")

pts = sample_spline(closed, xs)
d1 = np.array([eval_spline_derivative(closed, 1, float(x)) for x in xs])
d2 = np.array([eval_spline_derivative(closed, 2, float(x)) for x in xs])
base, tips = curvature_comb(pts, d1, d2)
write_svg(OUT / "closed_curve_comb.svg",
          svg_curve_plot([pts], combs=[(base, tips)]))

surface = load_object(HERE / "descriptors" / "rounded_square_surface.json")
us = np.linspace(surface.u_space.a, surface.u_space.b, 9)
vs = np.linspace(surface.v_space.a, surface.v_space.b, 120)
isolines = [np.array([eval_surface(surface, u, v)[:2] for v in vs])
            for u in us]
write_svg(OUT / "surface_isolines.svg", svg_curve_plot(isolines))
p = eval_surface(surface, 0.5 * (surface.u_space.a + surface.u_space.b),
                 0.5 * (surface.v_space.a + surface.v_space.b))
print(f"surface value at the patch center: {np.round(p, 6)}")
print(f"wrote {OUT / 'closed_curve_comb.svg'} "
      f"and {OUT / 'surface_isolines.svg'}")
