from fractions import Fraction

import pytest

from dahaskein.coeff import ONE, rf_param
from dahaskein.daha import OpSum, oracle_equal
from dahaskein.daha.elements import q_sandwich
from dahaskein.ehall import (
    EhaElement,
    Vec2,
    alpha,
    epsilon,
    hall_bracket,
    phi_n,
    theta_series,
    theta_series_recursive,
    theta_symbolic,
    triangle_check,
    triangle_interior_points,
)

u = EhaElement.gen
sg, sb = rf_param("sigma"), rf_param("sigma_bar")
q = rf_param("q")


def test_vec2():
    assert Vec2(4, -6).d() == 2
    assert Vec2(4, -6).primitive() == Vec2(2, -3)
    assert Vec2(0, 1).is_primitive()
    assert str(Vec2(-1, 2)) == "(-1,2)"


def test_alpha_examples():
    assert alpha(1) == (ONE - sg) * (ONE - sb) * (ONE - (sg * sb).inv())
    a2 = alpha(2)
    assert a2 * 2 == (ONE - sg ** 2) * (ONE - sb ** 2) * (ONE - (sg * sb) ** -2)
    # sigma -> 1 kills the first factor: alpha_i vanishes at c = 1
    for i in (1, 2, 3):
        assert all(alpha(i).eval_mod(s0, 1, 1000003) == 0 for s0 in (2, 5, 17))
    with pytest.raises(ValueError):
        alpha(0)


def test_theta_examples():
    x0 = (1, 0)
    th = theta_series(x0, 2)
    assert th[0] == EhaElement.scalar(1)
    assert th[1] == u((1, 0), alpha(1))
    assert th[2] == u((2, 0), alpha(2)) + EhaElement({((1, 0), (1, 0)): alpha(1) ** 2 * Fraction(1, 2)})
    with pytest.raises(ValueError):
        theta_series((2, 0), 2)


@pytest.mark.parametrize("x0", [(1, 0), (0, -1), (2, 3)])
def test_theta_routes_agree(x0):
    assert theta_series(x0, 5) == theta_series_recursive(x0, 5)


def test_theta_symbolic():
    assert theta_symbolic((1, 0), 2) == "alpha_2 * u(2,0) + 1/2*alpha_1^2 * u(1,0) u(1,0)"
    assert theta_symbolic((0, 1), 0) == "1"
    # the symbolic form has one term per partition of the order
    assert theta_symbolic((1, 1), 4).count(" + ") == 4
    assert len(theta_series((1, 1), 4)[4].terms) == 5


def test_triangle_examples():
    assert triangle_check((0, 1), (1, 0))
    assert triangle_check((1, 1), (1, -1))
    assert not triangle_check((0, 1), (3, 1))
    assert triangle_interior_points((0, 1), (3, 1)) == 1
    assert not triangle_check((2, 0), (0, 1))  # x not primitive
    with pytest.raises(ValueError):
        triangle_check((1, 0), (2, 0))


def test_pick_matches_enumeration():
    from math import gcd

    rng = range(-4, 5)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    det = a * d - b * c
                    if det == 0 or abs(det) > 20:
                        continue
                    enum = triangle_interior_points((a, b), (c, d)) == 0 and gcd(a, b) == 1
                    assert triangle_check((a, b), (c, d)) == enum


def test_bracket_examples():
    assert hall_bracket((2, 0), (1, 0)).is_zero()
    for m in (1, 2, 3):
        assert hall_bracket((m, 0), (0, 1)) == -u((m, 1))
    # d(x + y) = 1: eps * u_(x+y) exactly
    assert hall_bracket((1, 0), (0, 1)) == -u((1, 1))
    assert hall_bracket((0, 1), (1, 0)) == u((1, 1))
    assert epsilon((1, 0), (0, 1)) == 1


def test_bracket_antisymmetry():
    vs = [(a, b) for a in range(-2, 3) for b in range(-2, 3) if (a, b) != (0, 0)]
    for x in vs:
        for y in vs:
            try:
                one, two = hall_bracket(y, x), hall_bracket(x, y)
            except ValueError:
                continue
            assert one == -two


def test_bracket_refuses_unsupported():
    with pytest.raises(ValueError):
        hall_bracket((3, 1), (0, 1))


def test_render():
    e = u((1, 0)) * u((0, 1)) - u((0, 1)) * u((1, 0))
    assert str(e) == "-u(0,1) u(1,0) + u(1,0) u(0,1)"
    assert str(hall_bracket((2, 0), (0, 1))) == "-u(2,1)"


def test_phi_generator():
    n = 2
    img = phi_n(u((0, 1)), n)
    assert oracle_equal(img, q_sandwich((0, 1), n).scale((q - ONE).inv()), n=n)
    with pytest.raises(ValueError):
        phi_n(u((0, 1)), 1)


def test_phi_relations_rank_two():
    n = 2
    rel = u((1, 0)).commutator(u((2, 0)))
    assert oracle_equal(phi_n(rel, n), 0, n=n)
    y, x = (0, 1), (1, 0)
    rel = u(y).commutator(u(x)) - hall_bracket(y, x)
    assert oracle_equal(phi_n(rel, n), 0, n=n)
    # the opposite sign is caught
    bad = u(y).commutator(u(x)) + hall_bracket(y, x)
    assert not oracle_equal(phi_n(bad, n), 0, n=n)


def test_phi_is_multiplicative():
    n = 2
    a, b = u((1, 0)), u((0, -1))
    assert oracle_equal(phi_n(a * b, n), OpSum.of(phi_n(a, n)) @ phi_n(b, n), n=n)
