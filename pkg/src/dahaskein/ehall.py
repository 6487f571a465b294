"""Elliptic Hall algebra: structure constants, theta series, the bracket
relations and their images in the spherical DAHA at fixed rank.

Words in the generators u_x are tuples of ``Vec2``.  No normal form is
attempted; identities are checked after transport to the DAHA oracle, or by
series algebra for collinear families (which commute).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Dict, Iterable, List, Mapping, NamedTuple, Tuple

from .coeff import ONE, RatFunc, _coerce, rf_param

__all__ = [
    "Vec2",
    "EhaElement",
    "alpha",
    "theta_series",
    "theta_series_recursive",
    "theta_symbolic",
    "triangle_check",
    "triangle_interior_points",
    "epsilon",
    "hall_bracket",
    "phi_n",
]


class Vec2(NamedTuple):
    a: int
    b: int

    def d(self) -> int:
        return gcd(self.a, self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_primitive(self) -> bool:
        return self.d() == 1

    def primitive(self) -> "Vec2":
        k = self.d()
        if k == 0:
            raise ValueError("zero vector")
        return Vec2(self.a // k, self.b // k)

    def __add__(self, other) -> "Vec2":
        return Vec2(self.a + other[0], self.b + other[1])

    def __neg__(self) -> "Vec2":
        return Vec2(-self.a, -self.b)

    def scaled(self, k: int) -> "Vec2":
        return Vec2(k * self.a, k * self.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def det(x: Vec2, y: Vec2) -> int:
    """det of the matrix with columns x, y."""
    return x[0] * y[1] - y[0] * x[1]


Word = Tuple[Vec2, ...]


class EhaElement:
    """Finite linear combination of ordered words in the u_x."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Word, RatFunc] = {}
        for w, c in items:
            w = tuple(Vec2(*v) for v in w)
            if any(v.is_zero() for v in w):
                raise ValueError("u_(0,0) is not a generator")
            c = _coerce(c)
            acc[w] = acc[w] + c if w in acc else c
        self.terms = {w: c for w, c in acc.items() if not c.is_zero()}

    @classmethod
    def gen(cls, x, coeff=1) -> "EhaElement":
        return cls({(Vec2(*x),): coeff})

    @classmethod
    def scalar(cls, c) -> "EhaElement":
        return cls({(): c})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, EhaElement):
            return self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "EhaElement") -> "EhaElement":
        return EhaElement(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self) -> "EhaElement":
        return EhaElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "EhaElement") -> "EhaElement":
        return self + (-other)

    def scale(self, k) -> "EhaElement":
        k = _coerce(k)
        return EhaElement({w: c * k for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, EhaElement):
            return EhaElement(
                [(w1 + w2, c1 * c2) for w1, c1 in self.terms.items() for w2, c2 in other.terms.items()]
            )
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def commutator(self, other: "EhaElement") -> "EhaElement":
        return self * other - other * self

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            word = " ".join(f"u({v.a},{v.b})" for v in w) or "1"
            if c.is_one():
                parts.append(word)
            elif not w:
                parts.append(f"({c})" if not c.is_single_term() and c.den.is_one() else str(c))
            elif c == -ONE:
                parts.append(f"-{word}")
            elif c.is_single_term() or not c.den.is_one():
                parts.append(f"{c} * {word}")
            else:
                parts.append(f"({c}) * {word}")
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    __repr__ = __str__


@lru_cache(maxsize=None)
def alpha(i: int) -> RatFunc:
    """(1 - sigma^i)(1 - sigmabar^i)(1 - (sigma sigmabar)^-i) / i."""
    if i < 1:
        raise ValueError("alpha_i needs i >= 1")
    sg, sb = rf_param("sigma"), rf_param("sigma_bar")
    return (ONE - sg ** i) * (ONE - sb ** i) * (ONE - (sg * sb) ** (-i)) * Fraction(1, i)


# -- theta series -------------------------------------------------------------
# Polynomials in the commuting u_(j x0) are dicts: sorted tuple of j's -> coeff.

Poly = Dict[Tuple[int, ...], RatFunc]


def _pmul(p: Poly, r: Poly, order: int) -> Poly:
    out: Poly = {}
    for a, x in p.items():
        for b, y in r.items():
            if sum(a) + sum(b) > order:
                continue
            k = tuple(sorted(a + b))
            out[k] = out[k] + x * y if k in out else x * y
    return {k: v for k, v in out.items() if not v.is_zero()}


def _padd(p: Poly, r: Poly) -> Poly:
    out = dict(p)
    for k, v in r.items():
        out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if not v.is_zero()}


def _graded(p: Poly, order: int) -> List[Poly]:
    out: List[Poly] = [{} for _ in range(order + 1)]
    for k, v in p.items():
        out[sum(k)][k] = v
    return out


def _to_eha(p: Poly, x0: Vec2) -> EhaElement:
    return EhaElement({tuple(x0.scaled(j) for j in k): v for k, v in p.items()})


def _check_x0(x0) -> Vec2:
    x0 = Vec2(*x0)
    if x0.is_zero() or not x0.is_primitive():
        raise ValueError(f"{x0} is not primitive")
    return x0


def theta_series(x0, order: int) -> List[EhaElement]:
    """theta_(i x0), i = 0..order, by expanding exp(sum alpha_i u_(i x0) z^i)."""
    x0 = _check_x0(x0)
    if order < 0:
        raise ValueError("order must be non-negative")
    arg: Poly = {(i,): alpha(i) for i in range(1, order + 1)}
    total: Poly = {(): ONE}
    power: Poly = {(): ONE}
    for k in range(1, order + 1):
        power = _pmul(power, arg, order)
        total = _padd(total, {w: v * Fraction(1, factorial(k)) for w, v in power.items()})
    return [_to_eha(g, x0) for g in _graded(total, order)]


def theta_series_recursive(x0, order: int) -> List[EhaElement]:
    """Same coefficients from k theta_k = sum_i i alpha_i u_i theta_(k-i)."""
    x0 = _check_x0(x0)
    if order < 0:
        raise ValueError("order must be non-negative")
    thetas: List[Poly] = [{(): ONE}]
    for k in range(1, order + 1):
        acc: Poly = {}
        for i in range(1, k + 1):
            term = _pmul({(i,): alpha(i) * i}, thetas[k - i], order)
            acc = _padd(acc, term)
        thetas.append({w: v * Fraction(1, k) for w, v in acc.items()})
    return [_to_eha(t, x0) for t in thetas]


def _partitions(k: int, largest: int | None = None):
    largest = k if largest is None else largest
    if k == 0:
        yield ()
        return
    for j in range(min(k, largest), 0, -1):
        for rest in _partitions(k - j, j):
            yield (j,) + rest


def theta_symbolic(x0, order: int) -> str:
    """theta_(order x0) with the alpha_i left unexpanded, e.g.
    "alpha_2 * u(2,0) + 1/2*alpha_1^2 * u(1,0) u(1,0)"."""
    x0 = _check_x0(x0)
    if order < 0:
        raise ValueError("order must be non-negative")
    if order == 0:
        return "1"
    parts = []
    for lam in _partitions(order):
        mult = {j: lam.count(j) for j in sorted(set(lam), reverse=True)}
        denom = 1
        for m in mult.values():
            denom *= factorial(m)
        alphas = "*".join(f"alpha_{j}" + (f"^{m}" if m > 1 else "") for j, m in mult.items())
        coeff = alphas if denom == 1 else f"1/{denom}*{alphas}"
        word = " ".join(str(x0.scaled(j)).replace("(", "u(", 1) for j in lam)
        parts.append(f"{coeff} * {word}")
    return " + ".join(parts)


# -- the bracket relations ----------------------------------------------------


def triangle_interior_points(x, y) -> int:
    """Interior lattice points of the triangle (0, x, x+y) by enumeration."""
    x, y = Vec2(*x), Vec2(*y)
    pts = [(0, 0), (x.a, x.b), (x.a + y.a, x.b + y.b)]
    area2 = abs(det(x, y))
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    count = 0
    for px in range(min(xs), max(xs) + 1):
        for py in range(min(ys), max(ys) + 1):
            sub = 0
            inside = True
            for k in range(3):
                ax, ay = pts[k]
                bx, by = pts[(k + 1) % 3]
                cr = (bx - ax) * (py - ay) - (by - ay) * (px - ax)
                if cr == 0:
                    inside = False
                sub += abs(cr)
            if inside and sub == area2:
                count += 1
    return count


def _collinear(x: Vec2, y: Vec2) -> bool:
    return det(x, y) == 0


def triangle_check(x, y) -> bool:
    """x primitive and no interior lattice points in (0, x, x+y), via Pick."""
    x, y = Vec2(*x), Vec2(*y)
    if x.is_zero() or y.is_zero():
        raise ValueError("vectors must be nonzero")
    if _collinear(x, y):
        raise ValueError("collinear vectors span no triangle")
    if not x.is_primitive():
        return False
    area2 = abs(det(x, y))
    boundary = x.d() + y.d() + (x + y).d()
    # Pick: A = I + B/2 - 1, doubled to stay in integers
    interior2 = area2 - boundary + 2
    return interior2 == 0


def epsilon(x, y) -> int:
    d = det(Vec2(*x), Vec2(*y))
    return (d > 0) - (d < 0)


def hall_bracket(y, x) -> EhaElement:
    """The value of [u_y, u_x] asserted by the defining relations."""
    x, y = Vec2(*x), Vec2(*y)
    if x.is_zero() or y.is_zero():
        raise ValueError("vectors must be nonzero")
    if _collinear(x, y):
        return EhaElement()
    if not triangle_check(x, y):
        raise ValueError(f"no bracket relation for y={y}, x={x}: hypotheses fail")
    z = x + y
    k = z.d()
    theta = theta_series(z.primitive(), k)[k]
    return theta.scale(alpha(1).inv() * epsilon(x, y))


def phi_n(e: EhaElement, n: int):
    """u_x -> Q_x / (q^d(x) - 1), as a factored operator expression."""
    from .daha.elements import q_sandwich
    from .daha.operators import OpSum

    if n < 2:
        raise ValueError("phi_n needs rank at least 2")
    q = rf_param("q")
    out = OpSum([], n)
    for w, c in e.terms.items():
        term = OpSum.scalar(c, n)
        for v in w:
            term = term @ q_sandwich(v, n).scale((q ** v.d() - ONE).inv())
        out = out + term
    return out

