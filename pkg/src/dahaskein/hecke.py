"""The finite Hecke algebra H_n on the positive permutation braid basis.

Generators are the sigma_i of the skein side, with quadratic relation
``sigma^2 = (s - s^-1) sigma + 1``.  The basis element ``w[pi]`` is the
positive permutation braid of ``pi``; permutations compose as functions,
``(pi * rho)(j) = pi(rho(j))``, and the word ``s_i1 ... s_ik`` has permutation
``s_i1 * ... * s_ik``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Dict, Iterable, List, Mapping, Tuple

from .coeff import ONE, RatFunc, S, _coerce
from .words import Element, Word, sigma

__all__ = [
    "Perm",
    "HeckeElement",
    "perm_braid",
    "hecke_mul",
    "symmetrizer",
    "full_twist",
    "hecke_to_element",
]

_Z = S - S.inv()  # s - s^-1


class Perm(tuple):
    """Permutation in one-line notation (images of 1..n)."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, i: int, n: int) -> "Perm":
        im = list(range(1, n + 1))
        im[i - 1], im[i] = im[i], im[i - 1]
        return cls(im)

    @property
    def n(self) -> int:
        return len(self)

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(self[other[j] - 1] for j in range(len(other)))

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for j, v in enumerate(self):
            inv[v - 1] = j + 1
        return Perm(inv)

    def length(self) -> int:
        n = len(self)
        return sum(1 for a in range(n) for b in range(a + 1, n) if self[a] > self[b])

    def left_mul_s(self, i: int) -> "Perm":
        """s_i * self: swap the values i and i+1."""
        return Perm(i + 1 if v == i else i if v == i + 1 else v for v in self)

    def right_mul_s(self, i: int) -> "Perm":
        """self * s_i: swap positions i and i+1."""
        im = list(self)
        im[i - 1], im[i] = im[i], im[i - 1]
        return Perm(im)

    def is_left_descent(self, i: int) -> bool:
        inv = self.inverse()
        return inv[i - 1] > inv[i]

    def reduced_word(self) -> Tuple[int, ...]:
        """Lexicographically least reduced word (indices of the s_i)."""
        out: List[int] = []
        p = self
        while True:
            for i in range(1, p.n):
                if p.is_left_descent(i):
                    out.append(i)
                    p = p.left_mul_s(i)
                    break
            else:
                return tuple(out)

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(str(v) for v in self)
        return ",".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"Perm({tuple(self)})"


def perm_of_word(indices: Iterable[int], n: int) -> Perm:
    p = Perm.identity(n)
    for i in indices:
        p = p.right_mul_s(i)
    return p


def perm_braid(p: Perm) -> Word:
    """Positive permutation braid of ``p`` as a word in the sigma_i."""
    return Word(tuple(sigma(i) for i in p.reduced_word()), p.n)


class HeckeElement:
    """Linear combination of positive permutation braids."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Mapping[Perm, object], n: int):
        acc: Dict[Perm, RatFunc] = {}
        for p, c in terms.items():
            if len(p) != n:
                raise ValueError("permutation rank mismatch")
            c = _coerce(c)
            if not c.is_zero():
                acc[Perm(p)] = c
        self.terms = acc
        self.n = n

    @classmethod
    def basis(cls, p: Perm, coeff=1) -> "HeckeElement":
        return cls({p: coeff}, p.n)

    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls({Perm.identity(n): ONE}, n)

    @classmethod
    def generator(cls, i: int, n: int) -> "HeckeElement":
        return cls({Perm.transposition(i, n): ONE}, n)

    def __eq__(self, other) -> bool:
        if isinstance(other, HeckeElement):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        _check_rank(self, other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            out[p] = out[p] + c if p in out else c
        return HeckeElement(out, self.n)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement({p: -c for p, c in self.terms.items()}, self.n)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, k) -> "HeckeElement":
        k = _coerce(k)
        return HeckeElement({p: c * k for p, c in self.terms.items()}, self.n)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def coefficient(self, p: Perm) -> RatFunc:
        return self.terms.get(Perm(p), _coerce(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (kv[0].length(), tuple(kv[0])))
        parts = []
        for p, c in items:
            if c.is_one():
                parts.append(f"w[{p}]")
            elif c.is_single_term() or not c.den.is_one():
                parts.append(f"{c} * w[{p}]")
            else:
                parts.append(f"({c}) * w[{p}]")
        return " + ".join(parts)

    __repr__ = __str__


def _check_rank(a: HeckeElement, b: HeckeElement) -> None:
    if a.n != b.n:
        raise ValueError(f"Hecke rank mismatch: {a.n} vs {b.n}")


def _left_sigma(i: int, h: Dict[Perm, RatFunc]) -> Dict[Perm, RatFunc]:
    out: Dict[Perm, RatFunc] = {}

    def add(p, c):
        v = out[p] + c if p in out else c
        if v.is_zero():
            out.pop(p, None)
        else:
            out[p] = v

    for p, c in h.items():
        sp = p.left_mul_s(i)
        add(sp, c)
        if p.is_left_descent(i):
            add(p, c * _Z)
    return out


def _right_sigma(i: int, h: Dict[Perm, RatFunc]) -> Dict[Perm, RatFunc]:
    out: Dict[Perm, RatFunc] = {}

    def add(p, c):
        v = out[p] + c if p in out else c
        if v.is_zero():
            out.pop(p, None)
        else:
            out[p] = v

    for p, c in h.items():
        ps = p.right_mul_s(i)
        add(ps, c)
        if ps.length() < p.length():
            add(p, c * _Z)
    return out


def hecke_mul(a: HeckeElement, b: HeckeElement, side: str = "left") -> HeckeElement:
    """Product in H_n.

    ``side='left'`` peels the reduced word of each basis element of ``a`` onto
    ``b`` from the left; ``side='right'`` pushes the words of ``b`` onto ``a``
    from the right.  Both give the same answer.
    """
    _check_rank(a, b)
    total: Dict[Perm, RatFunc] = {}
    if side == "left":
        for p, c in a.terms.items():
            cur = dict(b.terms)
            for i in reversed(p.reduced_word()):
                cur = _left_sigma(i, cur)
            for q, v in cur.items():
                w = v * c
                total[q] = total[q] + w if q in total else w
    elif side == "right":
        for p, c in b.terms.items():
            cur = dict(a.terms)
            for i in p.reduced_word():
                cur = _right_sigma(i, cur)
            for q, v in cur.items():
                w = v * c
                total[q] = total[q] + w if q in total else w
    else:
        raise ValueError("side must be 'left' or 'right'")
    return HeckeElement(total, a.n)


@lru_cache(maxsize=None)
def symmetrizer(n: int) -> Tuple[HeckeElement, RatFunc, HeckeElement]:
    """(a_n, alpha_n, e_n) with a_n = sum s^l(pi) w[pi] and a_n^2 = alpha_n a_n."""
    if n < 1:
        raise ValueError("n must be positive")
    a = HeckeElement({Perm(p): S ** Perm(p).length() for p in permutations(range(1, n + 1))}, n)
    sq = hecke_mul(a, a)
    alpha = sq.coefficient(Perm.identity(n))
    assert not alpha.is_zero(), "alpha_n vanished"
    assert sq == a.scale(alpha), "a_n^2 is not proportional to a_n"
    return a, alpha, a.scale(alpha.inv())


def full_twist(n: int) -> Word:
    """Delta^2 = w * beta_n with w the full twist on strands 2..n."""
    if n < 1:
        raise ValueError("n must be positive")
    letters: List = []
    for start in range(n - 1, 0, -1):
        # beta on strands start..n, built innermost first
        letters.extend(sigma(k) for k in range(start, n))
        letters.extend(sigma(k) for k in range(n - 1, start - 1, -1))
    return Word(tuple(letters), n)


def hecke_to_element(h: HeckeElement) -> Element:
    """Embed via positive permutation braid words."""
    return Element({perm_braid(p): c for p, c in h.terms.items()}, h.n)
