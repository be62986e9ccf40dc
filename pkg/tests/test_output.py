import numpy as np
from numpy.testing import assert_allclose

from chebspline.output import (csv_text, curvature_comb, svg_curve_plot,
                               svg_function_plot)


def test_csv_layout():
    text = csv_text(["x", "y"], [np.array([0.0, 0.5]), np.array([1.0, 2.0])])
    lines = text.splitlines()
    assert lines[0] == "x,y"
    assert lines[1].startswith("0,")
    assert text.endswith("\n")


def test_csv_full_precision():
    v = 1.0 / 3.0
    text = csv_text(["v"], [np.array([v])])
    assert float(text.splitlines()[1]) == v


def test_function_plot_is_svg():
    xs = np.linspace(0.0, 1.0, 50)
    doc = svg_function_plot(xs, [np.sin(xs), np.cos(xs)])
    assert doc.startswith("<svg")
    assert doc.count("<polyline") >= 2
    assert doc.rstrip().endswith("</svg>")


def test_curve_plot_equal_scale():
    t = np.linspace(0.0, 2 * np.pi, 100)
    pts = np.column_stack([np.cos(t), np.sin(t)])
    doc = svg_curve_plot([pts])
    assert "<polyline" in doc


def test_comb_constant_curvature_on_circle():
    t = np.linspace(0.0, 2 * np.pi, 200)
    pts = np.column_stack([np.cos(t), np.sin(t)])
    d1 = np.column_stack([-np.sin(t), np.cos(t)])
    d2 = np.column_stack([-np.cos(t), -np.sin(t)])
    base, tips = curvature_comb(pts, d1, d2)
    lengths = np.linalg.norm(tips - base, axis=1)
    assert_allclose(lengths, lengths[0], rtol=1e-9)
    # unit circle, kappa = 1: whiskers point away from the center
    outward = np.einsum("ij,ij->i", tips - base, pts)
    assert np.all(outward > 0)


def test_comb_orientation_independent():
    # reversing the parameter flips both the normal and the curvature sign,
    # so the whisker geometry stays put
    t = np.linspace(0.0, 2 * np.pi, 50)
    pts = np.column_stack([np.cos(t), np.sin(t)])
    d1 = np.column_stack([-np.sin(t), np.cos(t)])
    d2 = np.column_stack([-np.cos(t), -np.sin(t)])
    fwd_base, fwd_tips = curvature_comb(pts, d1, d2)
    rev_base, rev_tips = curvature_comb(pts[::-1], -d1[::-1], d2[::-1])
    assert_allclose(rev_tips[::-1], fwd_tips, atol=1e-12)
