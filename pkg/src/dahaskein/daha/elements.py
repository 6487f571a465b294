"""Power sums, the symmetrizer as a skein element, and the elements Q~, Q, W."""

from __future__ import annotations

from functools import lru_cache
from typing import Tuple

from ..coeff import ONE, S, RatFunc, rf_param
from ..hecke import hecke_to_element, symmetrizer
from ..words import Element, gen_xy
from .operators import OpSum
from .sl2 import apply_path, primitive_part, sl2_path

__all__ = [
    "power_sum",
    "en_element",
    "qtilde",
    "q_elements",
    "q_sandwich",
    "w_element",
    "bracket_s",
]

C2 = rf_param("sigma")  # c^2


def bracket_s(m: int) -> RatFunc:
    """{m} = s^m - s^-m."""
    return S ** m - S ** (-m)


def power_sum(which: str, m: int, n: int) -> Element:
    """sum_i x_i^m or sum_i y_i^m as skein words."""
    if which not in ("x", "y"):
        raise ValueError("which must be 'x' or 'y'")
    out = Element.zero(n)
    for i in range(1, n + 1):
        out = out + Element.from_word(gen_xy(i, which, n) ** m)
    return out


@lru_cache(maxsize=None)
def en_element(n: int) -> Element:
    """e_n written on positive permutation braids."""
    return hecke_to_element(symmetrizer(n)[2])


def _check(x: Tuple[int, int], n: int) -> Tuple[int, Tuple[int, int]]:
    if n < 1:
        raise ValueError("rank must be positive")
    x = (int(x[0]), int(x[1]))
    if x == (0, 0):
        raise ValueError("x must be nonzero")
    return primitive_part(x)


def qtilde(x: Tuple[int, int], n: int, path=None) -> Element:
    """sum_i y_i^d transported along an SL2 path to x (d = d(x))."""
    return _qtilde((int(x[0]), int(x[1])), n, None if path is None else tuple(path))


@lru_cache(maxsize=256)
def _qtilde(x: Tuple[int, int], n: int, path) -> Element:
    d, _ = _check(x, n)
    p = sl2_path(x) if path is None else list(path)
    return apply_path(p, power_sum("y", d, n))


def q_sandwich(x: Tuple[int, int], n: int, path=None) -> OpSum:
    """Q_x = e_n Q~_x e_n kept as a factored product for the oracle."""
    e = en_element(n)
    return OpSum.of(e, qtilde(x, n, path), e)


def q_elements(x: Tuple[int, int], n: int) -> Tuple[Element, Element]:
    """(Q~_x, Q_x) with Q_x expanded into words."""
    qt = qtilde(x, n)
    e = en_element(n)
    return qt, e * qt * e


def w_element(x: Tuple[int, int], n: int, mode: str = "general") -> Element:
    """W_x from the braid formulas on the axes, or from Q~_x in general.

    axis:    (1 - c^2m) W_(m,0)  = {m} sum x_i^m     (c^-2m - 1) W_(-m,0) = {m} sum x_i^-m
             (c^-2m - 1) W_(0,m) = {m} sum y_i^m     (1 - c^2m) W_(0,-m)  = {m} sum y_i^-m
    general: (q^m - 1) W_x = {m} Q~_x
    """
    d, _ = _check(x, n)
    a, b = x
    if mode == "axis":
        if a != 0 and b != 0:
            raise ValueError(f"{x} is not on a coordinate axis")
        up = ONE - C2 ** d  # 1 - c^2m
        down = C2 ** (-d) - ONE  # c^-2m - 1
        if b == 0:
            scale, body = (up, power_sum("x", d, n)) if a > 0 else (down, power_sum("x", -d, n))
        else:
            scale, body = (down, power_sum("y", d, n)) if b > 0 else (up, power_sum("y", -d, n))
        return body.scale(bracket_s(d) / scale)
    if mode == "general":
        q = rf_param("q")
        return qtilde(x, n).scale(bracket_s(d) / (q ** d - ONE))
    raise ValueError("mode must be 'axis' or 'general'")
