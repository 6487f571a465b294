"""Operator expressions over the polynomial representation and the equality oracle.

An ``OpSum`` is a finite sum ``sum_k r_k * F_k1 F_k2 ... F_km`` where each
``r_k`` is a scalar in Q(s, c) and each ``F`` is a ``Factor``: a linear
combination of token words with its denominators pulled out.  Keeping products
factored means ``e_n * Q * e_n`` never has to be expanded into words.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..coeff import ONE, BiPoly, RatFunc, _coerce, bipoly_gcd
from ..words import Element, Gen, Word
from .engine import SELECTED, Convention, Engine, Evaluator, ExactRing, ModRing, Mono, Token

__all__ = [
    "Factor",
    "OpSum",
    "LaurentPoly",
    "RepOperator",
    "Verdict",
    "skein_to_rep",
    "as_opsum",
    "oracle_equal",
    "get_engine",
    "DEFAULT_PRIME",
]

# 2^31 - 1
DEFAULT_PRIME = 2147483647


def _lcm_poly(a: BiPoly, b: BiPoly) -> BiPoly:
    if a.is_one():
        return b
    if b.is_one():
        return a
    g = bipoly_gcd(a, b)
    return (a * b).divexact(g).monic()


def gen_token(g: Gen) -> Token:
    """Skein letter to DAHA token: sigma_i -> T_i^-1, x1 -> X_1, y1 -> Y_1."""
    if g.kind == "s":
        return ("T", g.index, -g.power)
    if g.kind == "x":
        return ("X", 1, g.power)
    if g.kind == "y":
        return ("Y", 1, g.power)
    raise ValueError(f"unknown letter {g!r}")


def word_tokens(w: Word) -> Tuple[Token, ...]:
    return tuple(gen_token(g) for g in w.letters)


class Factor:
    """``scale * sum_w P_w * w`` with integer Laurent polynomials P_w."""

    __slots__ = ("scale", "block", "n")

    def __init__(self, scale: RatFunc, block: tuple, n: int):
        self.scale = scale
        self.block = block
        self.n = n

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[RatFunc, Tuple[Token, ...]]], n: int) -> "Factor":
        terms = [(_coerce(c), tuple(t)) for c, t in terms]
        terms = [(c, t) for c, t in terms if not c.is_zero()]
        den = BiPoly.const(1)
        for c, _ in terms:
            den = _lcm_poly(den, c.den)
        polys = [(c.num * den.divexact(c.den), t) for c, t in terms]
        m = reduce(lcm, (v.denominator for p, _ in polys for _, v in p.items()), 1)
        block = []
        for p, t in sorted(polys, key=lambda pt: pt[1]):
            items = tuple(sorted((k, int(v * m)) for k, v in p.items()))
            block.append((items, t))
        scale = RatFunc(BiPoly.const(1), den) * Fraction(1, m)
        return cls(scale, tuple(block), n)

    @classmethod
    def from_element(cls, e: Element) -> "Factor":
        return cls.from_terms(((c, word_tokens(w)) for w, c in e.terms.items()), e.n)


class OpSum:
    """Sum of scalar multiples of factor chains (leftmost factor acts last)."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Sequence[Tuple[RatFunc, Tuple[Factor, ...]]], n: int):
        self.terms = tuple((_coerce(r), tuple(ch)) for r, ch in terms if not _coerce(r).is_zero())
        self.n = n

    @classmethod
    def scalar(cls, r, n: int) -> "OpSum":
        return cls([(_coerce(r), ())], n)

    @classmethod
    def of(cls, *factors, n: Optional[int] = None) -> "OpSum":
        """Composition of Elements / Factors / OpSums."""
        parts = [as_opsum(f, n) for f in factors]
        if not parts:
            if n is None:
                raise ValueError("rank needed for the empty product")
            return cls.scalar(1, n)
        return reduce(lambda a, b: a @ b, parts)

    def _check(self, other: "OpSum") -> None:
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other) -> "OpSum":
        other = as_opsum(other, self.n)
        self._check(other)
        return OpSum(self.terms + other.terms, self.n)

    __radd__ = __add__

    def __neg__(self) -> "OpSum":
        return OpSum([(-r, ch) for r, ch in self.terms], self.n)

    def __sub__(self, other) -> "OpSum":
        return self + (-as_opsum(other, self.n))

    def __rsub__(self, other) -> "OpSum":
        return as_opsum(other, self.n) - self

    def scale(self, k) -> "OpSum":
        k = _coerce(k)
        return OpSum([(r * k, ch) for r, ch in self.terms], self.n)

    def __matmul__(self, other) -> "OpSum":
        other = as_opsum(other, self.n)
        self._check(other)
        return OpSum([(r1 * r2, c1 + c2) for r1, c1 in self.terms for r2, c2 in other.terms], self.n)

    def __mul__(self, other) -> "OpSum":
        if isinstance(other, (OpSum, Element, Factor)):
            return self @ other
        return self.scale(other)

    def __rmul__(self, other) -> "OpSum":
        if isinstance(other, (Element, Factor)):
            return as_opsum(other, self.n) @ self
        return self.scale(other)

    def commutator(self, other) -> "OpSum":
        other = as_opsum(other, self.n)
        return self @ other - other @ self

    def integral(self) -> Tuple[RatFunc, List[Tuple[tuple, tuple]]]:
        """Clear every denominator at once.

        Returns ``(delta, [(coefficient items, chain of blocks), ...])`` such
        that the operator equals ``delta * sum coefficient * chain``.
        """
        rhos = []
        for r, ch in self.terms:
            rho = r
            for f in ch:
                rho = rho * f.scale
            rhos.append((rho, tuple(f.block for f in ch)))
        den = BiPoly.const(1)
        for rho, _ in rhos:
            den = _lcm_poly(den, rho.den)
        polys = [(rho.num * den.divexact(rho.den), ch) for rho, ch in rhos]
        m = reduce(lcm, (v.denominator for p, _ in polys for _, v in p.items()), 1)
        out = []
        for p, ch in polys:
            items = tuple(sorted((k, int(v * m)) for k, v in p.items()))
            if items:
                out.append((items, ch))
        delta = RatFunc(BiPoly.const(1), den) * Fraction(1, m)
        return delta, out


def as_opsum(x, n: Optional[int] = None) -> OpSum:
    if isinstance(x, OpSum):
        return x
    if isinstance(x, Element):
        return OpSum([(ONE, (Factor.from_element(x),))], x.n)
    if isinstance(x, Factor):
        return OpSum([(ONE, (x,))], x.n)
    if isinstance(x, Word):
        return as_opsum(Element.from_word(x), n)
    if isinstance(x, (list, tuple)):
        return OpSum.of(*x, n=n)
    if n is None:
        raise TypeError(f"cannot turn {type(x).__name__} into an operator without a rank")
    return OpSum.scalar(x, n)


# -- engines and evaluators are shared per (rank, convention) ---------------

_ENGINES: Dict[Tuple[int, Convention], Engine] = {}
_EVALUATORS: Dict[Tuple[int, Convention, object], Evaluator] = {}


def get_engine(n: int, conv: Convention = SELECTED) -> Engine:
    key = (n, conv)
    eng = _ENGINES.get(key)
    if eng is None:
        eng = _ENGINES[key] = Engine(n, conv)
    return eng


def _evaluator(n: int, conv: Convention, ring_key) -> Evaluator:
    key = (n, conv, ring_key)
    ev = _EVALUATORS.get(key)
    if ev is None:
        if ring_key == "exact":
            ring = ExactRing()
        else:
            ring = ModRing(*ring_key)
        ev = _EVALUATORS[key] = Evaluator(get_engine(n, conv), ring)
    return ev


def clear_caches() -> None:
    _EVALUATORS.clear()
    _ENGINES.clear()


def _apply_integral(ev: Evaluator, terms, a: Mono) -> dict:
    ring = ev.ring
    out: dict = {}
    for items, chain in terms:
        k = ev.coeff(items)
        for b, x in ev.apply_chain(chain, a).items():
            ring.add_into(out, b, ring.mul(x, k))
    return {b: v for b, v in out.items() if not ring.is_zero(v)}


# -- Laurent polynomials with field coefficients -----------------------------


def _render_mono(a: Mono) -> str:
    parts = []
    for j, e in enumerate(a, 1):
        if e == 1:
            parts.append(f"X{j}")
        elif e:
            parts.append(f"X{j}^{e}")
    return "*".join(parts) if parts else "1"


class LaurentPoly:
    """Finite sum of X^a with coefficients in Q(s, c)."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Dict[Mono, object], n: int):
        acc: Dict[Mono, RatFunc] = {}
        for a, c in terms.items():
            a = tuple(a)
            if len(a) != n:
                raise ValueError("exponent vector has the wrong length")
            c = _coerce(c)
            if not c.is_zero():
                acc[a] = acc[a] + c if a in acc else c
        self.terms = {a: c for a, c in acc.items() if not c.is_zero()}
        self.n = n

    @classmethod
    def monomial(cls, a: Mono, coeff=1) -> "LaurentPoly":
        return cls({tuple(a): coeff}, len(a))

    @classmethod
    def parse(cls, text: str, n: int) -> "LaurentPoly":
        from .._parse import parse
        from ..coeff import rf_param

        one = cls.monomial((0,) * n)

        def lookup(name: str):
            if name in ("s", "c", "t", "q", "sigma", "sigma_bar", "t_half"):
                return one * rf_param(name)
            if name[0] in "Xx" and name[1:].isdigit():
                j = int(name[1:])
                if not 1 <= j <= n:
                    raise KeyError(name)
                a = [0] * n
                a[j - 1] = 1
                return cls.monomial(tuple(a))
            raise KeyError(name)

        return parse(text, lookup, one)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out[a] + c if a in out else c
        return LaurentPoly(out, self.n)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({a: -c for a, c in self.terms.items()}, self.n)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            out: Dict[Mono, RatFunc] = {}
            for a, c in self.terms.items():
                for b, d in other.terms.items():
                    k = tuple(x + y for x, y in zip(a, b))
                    out[k] = out[k] + c * d if k in out else c * d
            return LaurentPoly(out, self.n)
        k = _coerce(other)
        return LaurentPoly({a: c * k for a, c in self.terms.items()}, self.n)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if len(other.terms) != 1:
                raise ZeroDivisionError("can only divide by a single term")
            (b, d), = other.terms.items()
            inv = LaurentPoly({tuple(-x for x in b): d.inv()}, self.n)
            return self * inv
        return self * _coerce(other).inv()

    def __pow__(self, e: int) -> "LaurentPoly":
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial")
            (a, c), = self.terms.items()
            return LaurentPoly({tuple(-x * -e for x in a): c.inv() ** -e}, self.n)
        out = LaurentPoly.monomial((0,) * self.n)
        for _ in range(e):
            out = out * self
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for a in sorted(self.terms, key=lambda a: (-sum(a), tuple(-x for x in a))):
            c = self.terms[a]
            mono = _render_mono(a)
            if mono == "1":
                parts.append(f"({c})" if not c.is_single_term() and c.den.is_one() else str(c))
            elif c.is_one():
                parts.append(mono)
            elif c == -ONE:
                parts.append(f"-{mono}")
            elif c.is_single_term() or not c.den.is_one():
                parts.append(f"{c} * {mono}")
            else:
                parts.append(f"({c}) * {mono}")
        text = parts[0]
        for p in parts[1:]:
            text += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return text

    __repr__ = __str__


class RepOperator:
    """An OpSum realized on Laurent polynomials; linear over Q(s, c)."""

    def __init__(self, expr: OpSum, conv: Convention = SELECTED):
        self.expr = expr
        self.n = expr.n
        self.conv = conv
        self._delta, self._terms = expr.integral()

    def on_monomial(self, a: Mono) -> LaurentPoly:
        ev = _evaluator(self.n, self.conv, "exact")
        raw = _apply_integral(ev, self._terms, tuple(a))
        return LaurentPoly({b: self._delta * RatFunc.from_laurent(p) for b, p in raw.items()}, self.n)

    def __call__(self, f: LaurentPoly) -> LaurentPoly:
        if f.n != self.n:
            raise ValueError("rank mismatch")
        out = LaurentPoly({}, self.n)
        for a, c in f.terms.items():
            out = out + self.on_monomial(a) * c
        return out


def skein_to_rep(e, conv: Convention = SELECTED) -> RepOperator:
    """sigma_i -> T_i^-1, x1 -> X_1, y1 -> Y_1, extended multiplicatively."""
    return RepOperator(as_opsum(e), conv)


# -- the oracle --------------------------------------------------------------


@dataclass
class Verdict:
    equal: bool
    stage: str
    monomials: int
    witness: Optional[Mono] = None
    image: Optional[str] = None
    trials: List[Tuple[int, int]] = field(default_factory=list)

    @property
    def label(self) -> str:
        return "equal_on_box" if self.equal else "distinct"

    def __bool__(self) -> bool:
        return self.equal


def box(n: int, radius: int) -> List[Mono]:
    return [tuple(a) for a in product(range(-radius, radius + 1), repeat=n)]


def sample_points(trials: int, prime: int, seed: int) -> List[Tuple[int, int]]:
    rng = random.Random(seed)
    pts = []
    while len(pts) < trials:
        s, c = rng.randrange(2, prime - 1), rng.randrange(2, prime - 1)
        pts.append((s, c))
    return pts


def oracle_equal(
    a,
    b,
    box_radius: int = 2,
    modular_trials: int = 3,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
    conv: Convention = SELECTED,
    n: Optional[int] = None,
) -> Verdict:
    """Compare two operators on every monomial X^e with e in [-R, R]^n.

    Modular images at random points refute fast; the exact integer check on
    the cleared difference is the verdict.
    """
    if box_radius < 0:
        raise ValueError("box radius must be non-negative")
    if n is None:
        for x in (a, b):
            if isinstance(x, (OpSum, Element, Factor)):
                n = x.n
                break
    if n is None:
        raise ValueError("cannot infer the rank")
    diff = as_opsum(a, n) - as_opsum(b, n)
    delta, terms = diff.integral()
    monos = box(n, box_radius)
    points = sample_points(modular_trials, prime, seed)
    for pt in points:
        ev = _evaluator(n, conv, (prime, pt[0], pt[1]))
        for m in monos:
            if _apply_integral(ev, terms, m):
                img = RepOperator(diff, conv).on_monomial(m)
                return Verdict(False, "modular", len(monos), m, str(img), points)
    ev = _evaluator(n, conv, "exact")
    for m in monos:
        raw = _apply_integral(ev, terms, m)
        if raw:
            img = LaurentPoly({x: delta * RatFunc.from_laurent(p) for x, p in raw.items()}, n)
            return Verdict(False, "exact", len(monos), m, str(img), points)
    return Verdict(True, "exact", len(monos), None, None, points)
