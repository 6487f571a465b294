"""Exact arithmetic in the coefficient field Q(s, c).

Every scalar in the package lives here.  A :class:`BiPoly` is a polynomial in
``s`` and ``c`` with rational coefficients and non-negative exponents; a
:class:`RatFunc` is a reduced fraction of two of them.  Negative powers of
``s`` and ``c`` are fractions with monomial denominators.

The DAHA / elliptic Hall parameters are all expressed in ``s`` and ``c``::

    t = s^2,  t^(1/2) = s,  q = c^-2,  sigma = c^2,  sigma_bar = s^-2

Equality is decided on canonical forms.  :func:`rf_eval_mod` gives the cheap
refuter used before exact comparisons.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, Mapping, Tuple, Union

__all__ = [
    "BiPoly",
    "RatFunc",
    "DenominatorVanishes",
    "rf_normalize",
    "rf_arith",
    "rf_param",
    "rf_eval_mod",
    "rf_parse",
    "bipoly_gcd",
    "S",
    "C",
    "ONE",
    "ZERO",
]

Exp = Tuple[int, int]
Scalar = Union[int, Fraction]


class DenominatorVanishes(ZeroDivisionError):
    """A modular evaluation hit a zero denominator; pick another point."""


def _as_fraction(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# BiPoly
# ---------------------------------------------------------------------------


class BiPoly:
    """Polynomial in s, c over Q.  Immutable; zero coefficients never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, Scalar] | Iterable[Tuple[Exp, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Exp, Fraction] = {}
        for (i, j), v in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in BiPoly: {(i, j)}")
            acc[(i, j)] = acc.get((i, j), 0) + _as_fraction(v)
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Exp, Fraction]) -> "BiPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, v: Scalar) -> "BiPoly":
        return cls._raw({(0, 0): _as_fraction(v)} if v else {})

    @classmethod
    def monomial(cls, i: int, j: int, v: Scalar = 1) -> "BiPoly":
        return cls._raw({(i, j): _as_fraction(v)} if v else {})

    @property
    def terms(self) -> Dict[Exp, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {(0, 0): 1}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ordering: total degree first, then s-degree ("s before c")
    @staticmethod
    def _grlex(e: Exp) -> Tuple[int, int]:
        return (e[0] + e[1], e[0])

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda kv: self._grlex(kv[0]), reverse=True)

    def leading(self) -> Tuple[Exp, Fraction]:
        return max(self._terms.items(), key=lambda kv: self._grlex(kv[0]))

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({k: -v for k, v in self._terms.items()})

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            other = BiPoly.const(other)
        out = dict(self._terms)
        for k, v in other._terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return BiPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            other = BiPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return BiPoly.const(other) - self

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            f = _as_fraction(other)
            return BiPoly._raw({k: v * f for k, v in self._terms.items()} if f else {})
        out: Dict[Exp, Fraction] = {}
        for (i, j), x in self._terms.items():
            for (k, l), y in other._terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + x * y
        return BiPoly._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        if e < 0:
            raise ValueError("negative power of a BiPoly")
        out = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, i: int, j: int) -> "BiPoly":
        """Multiply by the monomial s^i c^j (i, j >= 0)."""
        return BiPoly._raw({(a + i, b + j): v for (a, b), v in self._terms.items()})

    def min_exponents(self) -> Exp:
        return (min(a for a, _ in self._terms), min(b for _, b in self._terms))

    def divexact(self, other: "BiPoly") -> "BiPoly":
        """Exact quotient; raises ArithmeticError when ``other`` does not divide."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if other.is_monomial():
            ((i, j), v), = other._terms.items()
            out = {}
            for (a, b), w in self._terms.items():
                if a < i or b < j:
                    raise ArithmeticError("inexact division by monomial")
                out[(a - i, b - j)] = w / v
            return BiPoly._raw(out)
        # lex division with s > c
        lead_b = max(other._terms)
        lv = other._terms[lead_b]
        rem = dict(self._terms)
        quo: Dict[Exp, Fraction] = {}
        while rem:
            lead_r = max(rem)
            if lead_r[0] < lead_b[0] or lead_r[1] < lead_b[1]:
                raise ArithmeticError("inexact polynomial division")
            m = (lead_r[0] - lead_b[0], lead_r[1] - lead_b[1])
            f = rem[lead_r] / lv
            quo[m] = quo.get(m, 0) + f
            for (a, b), w in other._terms.items():
                key = (a + m[0], b + m[1])
                nv = rem.get(key, 0) - f * w
                if nv:
                    rem[key] = nv
                else:
                    rem.pop(key, None)
        return BiPoly._raw({k: v for k, v in quo.items() if v})

    def eval_mod(self, s: int, c: int, p: int) -> int:
        acc = 0
        for (i, j), v in self._terms.items():
            den = v.denominator % p
            if den == 0:
                raise DenominatorVanishes("rational coefficient denominator divisible by the prime")
            acc += v.numerator * pow(den, -1, p) * pow(s, i, p) * pow(c, j, p)
        return acc % p

    def monic(self) -> "BiPoly":
        if not self._terms:
            return self
        _, lv = self.leading()
        return self * (1 / lv)

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        return _render_poly(self.sorted_terms())


def _render_mono(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("s" if i == 1 else f"s^{i}")
    if j:
        parts.append("c" if j == 1 else f"c^{j}")
    return "*".join(parts)


def _render_poly(items) -> str:
    if not items:
        return "0"
    out = []
    for k, ((i, j), v) in enumerate(items):
        mono = _render_mono(i, j)
        neg = v < 0
        a = -v if neg else v
        if mono:
            body = mono if a == 1 else f"{a}*{mono}"
        else:
            body = str(a)
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# ---------------------------------------------------------------------------
# gcd in Z[c][s]: primitive PRS with integer coefficients throughout
# ---------------------------------------------------------------------------

ZUni = Dict[int, int]


def _z_content(a: ZUni) -> int:
    g = 0
    for v in a.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def _z_scale_down(a: ZUni, k: int) -> ZUni:
    return {i: v // k for i, v in a.items()}


def _z_mul(a: ZUni, b: ZUni) -> ZUni:
    out: ZUni = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _z_prim(a: ZUni) -> ZUni:
    g = _z_content(a)
    if a[max(a)] < 0:
        g = -g
    return _z_scale_down(a, g) if g != 1 else a


def _z_prem(a: ZUni, b: ZUni) -> ZUni:
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        nr = {i: lb * v for i, v in r.items()}
        for i, v in b.items():
            k = i + dr - db
            nr[k] = nr.get(k, 0) - lr * v
        r = {i: v for i, v in nr.items() if v}
        g = _z_content(r) if r else 1
        if g > 1:
            r = _z_scale_down(r, g)
    return r


_P = (1 << 61) - 1  # Mersenne prime for the coprimality shortcut


def _p_gcd_degree(a: Dict[int, int], b: Dict[int, int]) -> int:
    """Degree of gcd(a, b) mod _P, or -1 when a leading coefficient dies mod _P.

    With both leading coefficients alive, the true gcd has degree at most this.
    """
    a = {i: v % _P for i, v in a.items() if v % _P}
    b = {i: v % _P for i, v in b.items() if v % _P}
    if not a or not b:
        return -1
    while b:
        db = max(b)
        inv = pow(b[db], -1, _P)
        while a and max(a) >= db:
            da = max(a)
            f = a[da] * inv % _P
            for i, v in b.items():
                k = i + da - db
                nv = (a.get(k, 0) - f * v) % _P
                if nv:
                    a[k] = nv
                else:
                    a.pop(k, None)
        a, b = b, a
    return max(a)


def _has_lead_mod_p(*polys: Dict[int, int]) -> bool:
    return all(p[max(p)] % _P for p in polys)


def _z_gcd(a: ZUni, b: ZUni) -> ZUni:
    """Primitive gcd in Z[c] times the gcd of the contents."""
    if not a:
        return _z_prim(b) if b else {}
    if not b:
        return _z_prim(a)
    k = gcd(_z_content(a), _z_content(b))
    if _has_lead_mod_p(a, b) and _p_gcd_degree(a, b) == 0:
        return {0: k}
    a, b = _z_prim(a), _z_prim(b)
    if max(a) < max(b):
        a, b = b, a
    while b and max(b) > 0:
        r = _z_prem(a, b)
        a, b = b, (_z_prim(r) if r else {})
    g = {0: 1} if b else _z_prim(a)
    return {i: k * v for i, v in g.items()}


def _z_divexact(a: ZUni, b: ZUni) -> ZUni:
    db = max(b)
    lb = b[db]
    r = dict(a)
    q: ZUni = {}
    while r:
        dr = max(r)
        f, m = divmod(r[dr], lb)
        if m or dr < db:
            raise ArithmeticError("inexact division in Z[c]")
        q[dr - db] = f
        for i, v in b.items():
            k = i + dr - db
            nv = r.get(k, 0) - f * v
            if nv:
                r[k] = nv
            else:
                r.pop(k, None)
    return q


Nest = Dict[int, ZUni]


def _nest_int(p: "BiPoly") -> Nest:
    """Integer multiple of p viewed in Z[c][s]."""
    m = 1
    for v in p._terms.values():
        m = m * v.denominator // gcd(m, v.denominator)
    out: Nest = {}
    for (i, j), v in p._terms.items():
        out.setdefault(i, {})[j] = int(v * m)
    return out


def _n_content(a: Nest) -> ZUni:
    g: ZUni = {}
    for u in a.values():
        g = _z_gcd(g, u)
        if len(g) == 1 and 0 in g and abs(g[0]) == 1:
            break
    return g


def _n_prim(a: Nest) -> Nest:
    cont = _n_content(a)
    if len(cont) == 1 and 0 in cont:
        k = cont[0]
        lead = a[max(a)]
        if lead[max(lead)] < 0:
            k = -k
        return a if k == 1 else {i: _z_scale_down(u, k) for i, u in a.items()}
    out = {i: _z_divexact(u, cont) for i, u in a.items()}
    lead = out[max(out)]
    if lead[max(lead)] < 0:
        out = {i: {j: -v for j, v in u.items()} for i, u in out.items()}
    return out


def _n_prem(a: Nest, b: Nest) -> Nest:
    db = max(b)
    lb = b[db]
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        nr: Nest = {i: _z_mul(lb, u) for i, u in r.items()}
        for i, u in b.items():
            k = i + dr - db
            acc = dict(nr.get(k, {}))
            for j, v in _z_mul(lr, u).items():
                acc[j] = acc.get(j, 0) - v
            nr[k] = {j: v for j, v in acc.items() if v}
        r = {i: u for i, u in nr.items() if u}
    return r


def _coprime_in_s(a: Nest, b: Nest) -> bool:
    """Certify that gcd(a, b) has s-degree 0 by specializing c mod _P."""
    for c0 in (982451653, 1000000007):
        sa = {i: sum(v * pow(c0, j, _P) for j, v in u.items()) % _P for i, u in a.items()}
        sb = {i: sum(v * pow(c0, j, _P) for j, v in u.items()) % _P for i, u in b.items()}
        if sa[max(a)] and sb[max(b)]:
            return _p_gcd_degree(sa, sb) == 0
    return False


@lru_cache(maxsize=8192)
def _gcd_cached(a: BiPoly, b: BiPoly) -> BiPoly:
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    # monomial factors are cheap to pull out first
    ma, mb = a.min_exponents(), b.min_exponents()
    mono = (min(ma[0], mb[0]), min(ma[1], mb[1]))
    if a.is_monomial() or b.is_monomial():
        return BiPoly.monomial(*mono)
    na, nb = _nest_int(a), _nest_int(b)
    g_c = _z_gcd(_n_content(na), _n_content(nb))
    pa, pb = _n_prim(na), _n_prim(nb)
    if _coprime_in_s(pa, pb):
        pa, pb = {0: {0: 1}}, {}
    elif max(pa) < max(pb):
        pa, pb = pb, pa
    while pb and max(pb) > 0:
        r = _n_prem(pa, pb)
        pa, pb = pb, (_n_prim(r) if r else {})
    prim = {0: {0: 1}} if pb else pa
    g = BiPoly({(i, j): v for i, u in prim.items() for j, v in u.items()}) * BiPoly({(0, k): w for k, w in g_c.items()})
    return g.monic()


def bipoly_gcd(a: BiPoly, b: BiPoly) -> BiPoly:
    """Monic gcd (leading coefficient 1 in graded-lex order)."""
    return _gcd_cached(a, b)


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------


class RatFunc:
    """Reduced fraction num/den in Q(s, c); den is monic in graded-lex order."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: BiPoly | Scalar = 0, den: BiPoly | Scalar = 1):
        n = num if isinstance(num, BiPoly) else BiPoly.const(num)
        d = den if isinstance(den, BiPoly) else BiPoly.const(den)
        n, d = _normalize_pair(n, d)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num: BiPoly, den: BiPoly) -> "RatFunc":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, i: int, j: int, v: Scalar = 1) -> "RatFunc":
        """v * s^i * c^j for any integers i, j."""
        if not v:
            return ZERO
        num = BiPoly.monomial(max(i, 0), max(j, 0), v)
        den = BiPoly.monomial(max(-i, 0), max(-j, 0))
        return cls._raw(num, den)

    @classmethod
    def from_laurent(cls, terms: Mapping[Exp, Scalar]) -> "RatFunc":
        """Build from a map (i, j) -> coefficient with arbitrary integer exponents."""
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return ZERO
        mi = min(i for i, _ in terms)
        mj = min(j for _, j in terms)
        si, sj = max(-mi, 0), max(-mj, 0)
        num = BiPoly({(i + si, j + sj): v for (i, j), v in terms.items()})
        return cls(num, BiPoly.monomial(si, sj))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RatFunc(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            n, d = _normalize_pair(self.num + other.num, self.den)
            return RatFunc._raw(n, d)
        g = bipoly_gcd(self.den, other.den)
        da = self.den.divexact(g)
        db = other.den.divexact(g)
        n, d = _normalize_pair(self.num * db + other.num * da, da * other.den)
        return RatFunc._raw(n, d)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return _coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        # cross-cancel keeps the gcd inputs small
        g1 = bipoly_gcd(self.num, other.den)
        g2 = bipoly_gcd(other.num, self.den)
        num = self.num.divexact(g1) * other.num.divexact(g2)
        den = self.den.divexact(g2) * other.den.divexact(g1)
        _, lv = den.leading()
        return RatFunc._raw(num * (1 / lv), den * (1 / lv))

    __rmul__ = __mul__

    def inv(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(s,c)")
        _, lv = self.num.leading()
        return RatFunc._raw(self.den * (1 / lv), self.num * (1 / lv))

    def __truediv__(self, other) -> "RatFunc":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> "RatFunc":
        return _coerce(other) * self.inv()

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            return self.inv() ** (-e)
        return RatFunc._raw(self.num ** e, self.den ** e)

    def eval_mod(self, s: int, c: int, p: int) -> int:
        return rf_eval_mod(self, (s, c), p)

    def is_single_term(self) -> bool:
        return self.num.is_monomial() and self.den.is_monomial()

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def _coerce(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc._raw(BiPoly.const(x), BiPoly.const(1))
    if isinstance(x, BiPoly):
        return RatFunc._raw(x, BiPoly.const(1))
    return NotImplemented


def _normalize_pair(num: BiPoly, den: BiPoly) -> Tuple[BiPoly, BiPoly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator in RatFunc")
    if num.is_zero():
        return num, BiPoly.const(1)
    if not den.is_one():
        g = bipoly_gcd(num, den)
        if not g.is_one():
            num = num.divexact(g)
            den = den.divexact(g)
    _, lv = den.leading()
    if lv != 1:
        num = num * (1 / lv)
        den = den * (1 / lv)
    return num, den


def rf_normalize(num: BiPoly, den: BiPoly) -> RatFunc:
    """Canonical reduced fraction for num/den."""
    return RatFunc(num, den)


def rf_arith(a: RatFunc, op: str, b: RatFunc | None = None) -> RatFunc:
    """Field operation by name: add, sub, mul, div, inv, neg."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "inv":
        return a.inv()
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


ZERO = RatFunc._raw(BiPoly(), BiPoly.const(1))
ONE = RatFunc._raw(BiPoly.const(1), BiPoly.const(1))
S = RatFunc.monomial(1, 0)
C = RatFunc.monomial(0, 1)

_PARAMS = {
    "s": (1, 0),
    "c": (0, 1),
    "t": (2, 0),
    "t_half": (1, 0),
    "q": (0, -2),
    "sigma": (0, 2),
    "sigma_bar": (-2, 0),
}


def rf_param(sym: str) -> RatFunc:
    """The DAHA / EHA parameter ``sym`` written in s and c."""
    try:
        i, j = _PARAMS[sym]
    except KeyError:
        raise ValueError(f"unknown parameter {sym!r}") from None
    return RatFunc.monomial(i, j)


def rf_eval_mod(a: RatFunc, point: Tuple[int, int], prime: int) -> int:
    """Value of ``a`` at (s, c) = point in GF(prime).

    Raises :class:`DenominatorVanishes` when the denominator is zero there.
    """
    s, c = point
    den = a.den.eval_mod(s, c, prime)
    if den == 0:
        raise DenominatorVanishes(f"denominator of {a} vanishes at {point} mod {prime}")
    return a.num.eval_mod(s, c, prime) * pow(den, -1, prime) % prime


def rf_parse(text: str) -> RatFunc:
    """Parse the text rendering (also accepts t, q, sigma, sigma_bar)."""
    from ._parse import parse

    return parse(text, rf_param, ONE)
