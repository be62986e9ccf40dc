import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from chebspline import InvalidSectionError, make_section, split_section
from chebspline.sections import antiderivative_generator, eval_generator


def test_make_trig_section_shift_map():
    sec = make_section("trigonometric", {"theta": 2.0}, (0.0, 0.25), 3, "shift")
    assert sec.order == 3
    # generators are {1, cos 2t, sin 2t} with t = x - 0
    x = 0.2
    assert_allclose(eval_generator(sec, 1, 0, x), 1.0)
    assert_allclose(eval_generator(sec, 2, 0, x), math.cos(2 * x))
    assert_allclose(eval_generator(sec, 3, 0, x), math.sin(2 * x))


def test_make_constant_section():
    sec = make_section("polynomial", None, (0.0, 1.0), 1)
    assert_allclose(eval_generator(sec, 1, 0, 0.7), 1.0)


def test_trig_frequency_bound_rejected():
    with pytest.raises(InvalidSectionError):
        make_section("trigonometric", {"theta": 4.0}, (0.0, 1.0), 3)


def test_eval_generator_polynomial_derivative():
    sec = make_section("polynomial", None, (0.0, 1.0), 3)
    # D t^2 = 2t at t = 1/2
    assert_allclose(eval_generator(sec, 3, 1, 0.5), 1.0)


def test_eval_generator_trig_at_zero():
    sec = make_section("trigonometric", {"theta": 2.0}, (0.0, 0.25), 3, "shift")
    assert_allclose(eval_generator(sec, 2, 0, 0.0), 1.0)


def test_eval_generator_rational_tension_at_one():
    sec = make_section("rational-tension", {"nu": 4.0}, (0.0, 1.0), 4)
    # t^3 / (1 + (nu-3)(1-t)t) equals 1 at t = 1
    assert_allclose(eval_generator(sec, 4, 0, 1.0), 1.0)


def test_eval_generator_out_of_interval():
    sec = make_section("polynomial", None, (0.0, 1.0), 3)
    with pytest.raises(InvalidSectionError):
        eval_generator(sec, 2, 0, 1.5)


def test_eval_generator_index_out_of_range():
    sec = make_section("polynomial", None, (0.0, 1.0), 3)
    with pytest.raises(InvalidSectionError):
        eval_generator(sec, 4, 0, 0.5)


def test_antiderivative_constant():
    sec = make_section("polynomial", None, (0.0, 1.0), 3)
    assert_allclose(antiderivative_generator(sec, 1, 1.0), 1.0)


def test_antiderivative_trig_closed_form():
    sec = make_section("trigonometric", {"theta": 2.0}, (0.0, 1.0), 3, "shift")
    x = math.pi / 8
    assert_allclose(antiderivative_generator(sec, 2, x), math.sin(2 * x) / 2.0,
                    rtol=1e-12)


def test_antiderivative_vanishes_at_left_end():
    for fam, params in [("polynomial", None),
                        ("trigonometric", {"theta": 1.0}),
                        ("hyperbolic", {"phi": 2.0})]:
        sec = make_section(fam, params, (0.25, 0.75), 3)
        for h in range(1, 4):
            assert antiderivative_generator(sec, h, 0.25) == 0.0


def test_antiderivative_matches_quadrature():
    from scipy.integrate import quad
    sec = make_section("hyperbolic", {"phi": 3.0}, (0.0, 0.5), 4, "normalized")
    for h in range(1, 5):
        ref, _ = quad(lambda x: eval_generator(sec, h, 0, x), 0.0, 0.4)
        assert_allclose(antiderivative_generator(sec, h, 0.4), ref, atol=1e-10)


def test_split_trig_reparametrize_halves_theta():
    sec = make_section("trigonometric", {"theta": 2.0}, (0.0, 1.0), 3,
                       "normalized")
    left, right = split_section(sec, 0.5, "reparametrize")
    assert_allclose(left.params["theta"], 1.0)
    assert_allclose(right.params["theta"], 1.0)
    assert left.interval == (0.0, 0.5) and right.interval == (0.5, 1.0)


def test_split_rational_tension_restrict_keeps_generators():
    sec = make_section("rational-tension", {"nu": 4.0}, (0.0, 1.0), 4)
    left, right = split_section(sec, 0.5, "restrict")
    x = 0.3
    for h in range(1, 5):
        assert_allclose(eval_generator(left, h, 0, x),
                        eval_generator(sec, h, 0, x), rtol=1e-14)
    x = 0.8
    for h in range(1, 5):
        assert_allclose(eval_generator(right, h, 0, x),
                        eval_generator(sec, h, 0, x), rtol=1e-14)


def test_split_rational_tension_rejects_reparametrize():
    sec = make_section("rational-tension", {"nu": 4.0}, (0.0, 1.0), 4)
    with pytest.raises(InvalidSectionError):
        split_section(sec, 0.5, "reparametrize")


def test_split_polynomial_same_order_both_strategies():
    sec = make_section("polynomial", None, (0.0, 1.0), 3)
    for strategy in ("restrict", "reparametrize"):
        left, right = split_section(sec, 0.3, strategy)
        assert left.order == right.order == 3
        assert left.family == right.family == "polynomial"


def test_split_requires_strict_interior_point():
    sec = make_section("polynomial", None, (0.0, 1.0), 3)
    for bad in (0.0, 1.0, 1.4):
        with pytest.raises(InvalidSectionError):
            split_section(sec, bad)


def test_restricted_pieces_stay_in_parent_space():
    # every parent generator restricted to a child interval must be exactly
    # representable in the child's span; check by collocation least squares
    parent = make_section("trigonometric", {"theta": 2.5}, (0.0, 1.0), 5,
                          "normalized")
    for strategy in ("restrict", "reparametrize"):
        left, right = split_section(parent, 0.4, strategy)
        for child in (left, right):
            xs = np.linspace(child.interval[0], child.interval[1], 40)
            A = np.array([[eval_generator(child, h, 0, x)
                           for h in range(1, 6)] for x in xs])
            for h in range(1, 6):
                y = np.array([eval_generator(parent, h, 0, x) for x in xs])
                _, res, _, _ = np.linalg.lstsq(A, y, rcond=None)
                resid = np.linalg.norm(A @ np.linalg.lstsq(A, y, rcond=None)[0] - y)
                assert resid < 1e-9
