"""Words in the punctured-torus braid generators and their linear combinations.

The alphabet for ``n`` strands is ``s1 .. s(n-1)`` (the sigma_i), ``x1`` and
``y1``, each with power +1 or -1.  Only free cancellation happens at this
level; braid and skein relations are checked through the DAHA oracle.

Products follow the stacking convention: ``A * B`` puts ``A`` below ``B``,
which is plain concatenation of words.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Tuple, Union

from .coeff import ONE, RatFunc, _coerce

__all__ = [
    "Gen",
    "Word",
    "Element",
    "free_reduce",
    "gen_xy",
    "named_word",
    "substitute",
    "elem_mul",
    "parse_element",
    "identity_images",
    "sigma",
    "X1",
    "Y1",
]


class Gen(NamedTuple):
    """One letter: kind is 's' (sigma_index), 'x' or 'y' (index 1)."""

    kind: str
    index: int
    power: int

    def inverse(self) -> "Gen":
        return Gen(self.kind, self.index, -self.power)

    def positive(self) -> "Gen":
        return Gen(self.kind, self.index, 1)

    def __str__(self) -> str:
        base = f"{self.kind}{self.index}"
        return base if self.power == 1 else f"{base}^-1"


def sigma(i: int, power: int = 1) -> Gen:
    return Gen("s", i, power)


X1 = Gen("x", 1, 1)
Y1 = Gen("y", 1, 1)


def free_reduce(letters: Iterable[Gen]) -> Tuple[Gen, ...]:
    """Cancel adjacent inverse pairs until none remain."""
    stack: List[Gen] = []
    for g in letters:
        if stack and stack[-1].kind == g.kind and stack[-1].index == g.index and stack[-1].power == -g.power:
            stack.pop()
        else:
            stack.append(g)
    return tuple(stack)


def _check_letter(g: Gen, n: int) -> None:
    if g.power not in (1, -1):
        raise ValueError(f"letter power must be +-1, got {g.power}")
    if g.kind == "s":
        if not 1 <= g.index <= n - 1:
            raise ValueError(f"sigma_{g.index} out of range for n={n}")
    elif g.kind in ("x", "y"):
        if g.index != 1:
            raise ValueError("only x1 and y1 are generators")
    else:
        raise ValueError(f"unknown letter kind {g.kind!r}")


@dataclass(frozen=True)
class Word:
    """A freely reduced word on ``n`` strands."""

    letters: Tuple[Gen, ...]
    n: int

    def __post_init__(self):
        for g in self.letters:
            _check_letter(g, self.n)
        reduced = free_reduce(self.letters)
        if reduced != self.letters:
            object.__setattr__(self, "letters", reduced)

    @classmethod
    def one(cls, n: int) -> "Word":
        return cls((), n)

    @classmethod
    def of(cls, n: int, *letters: Gen) -> "Word":
        return cls(tuple(letters), n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Gen]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        _same_n(self.n, other.n)
        return Word(free_reduce(self.letters + other.letters), self.n)

    def inverse(self) -> "Word":
        return Word(tuple(g.inverse() for g in reversed(self.letters)), self.n)

    def __pow__(self, e: int) -> "Word":
        base = self if e >= 0 else self.inverse()
        out = Word.one(self.n)
        for _ in range(abs(e)):
            out = out * base
        return out

    def sort_key(self):
        return (len(self.letters), [(g.kind, g.index, -g.power) for g in self.letters])

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.letters) if self.letters else "1"


def _same_n(a: int, b: int) -> None:
    if a != b:
        raise ValueError(f"strand count mismatch: {a} vs {b}")


def gen_xy(i: int, which: str, n: int) -> Word:
    """x_i or y_i expanded down to x1 / y1.

    x_{i+1} = s_i^-1 x_i s_i^-1 and y_{i+1} = s_i y_i s_i.
    """
    if not 1 <= i <= n:
        raise ValueError(f"strand index {i} out of range for n={n}")
    if which == "x":
        w = Word.of(n, X1)
        for k in range(1, i):
            w = Word.of(n, sigma(k, -1)) * w * Word.of(n, sigma(k, -1))
    elif which == "y":
        w = Word.of(n, Y1)
        for k in range(1, i):
            w = Word.of(n, sigma(k)) * w * Word.of(n, sigma(k))
    else:
        raise ValueError(f"which must be 'x' or 'y', got {which!r}")
    return w


def named_word(which: str, n: int, i: int | None = None) -> Word:
    """The braid words P, beta_n, delta_i and the commutator x1 y1 x1^-1 y1^-1."""
    if n < 1:
        raise ValueError("n must be positive")
    if which == "P":
        down = [sigma(k, -1) for k in range(n - 1, 0, -1)]
        up = [sigma(k, -1) for k in range(1, n)]
        core = [X1, Y1, X1.inverse(), Y1.inverse()]
        return Word(tuple(down + core + up), n)
    if which == "beta_n":
        return Word(tuple([sigma(k) for k in range(1, n)] + [sigma(k) for k in range(n - 1, 0, -1)]), n)
    if which == "delta_i":
        if i is None or not 1 <= i <= n:
            raise ValueError(f"delta_i needs 1 <= i <= n, got {i}")
        return Word(tuple([sigma(k) for k in range(i - 1, 0, -1)] + [sigma(k) for k in range(1, i)]), n)
    if which == "commutator_x1y1":
        return Word((X1, Y1, X1.inverse(), Y1.inverse()), n)
    raise ValueError(f"unknown named word {which!r}")


Coeff = Union[RatFunc, int, Fraction]


class Element:
    """Finite linear combination of words over Q(s, c)."""

    __slots__ = ("terms", "n")

    def __init__(self, terms: Mapping[Word, Coeff] | Iterable[Tuple[Word, Coeff]], n: int):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Word, RatFunc] = {}
        for w, c in items:
            _same_n(w.n, n)
            c = _coerce(c)
            acc[w] = acc[w] + c if w in acc else c
        self.terms: Dict[Word, RatFunc] = {w: c for w, c in acc.items() if not c.is_zero()}
        self.n = n

    @classmethod
    def _raw(cls, terms: Dict[Word, RatFunc], n: int) -> "Element":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.n = n
        return obj

    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls._raw({}, n)

    @classmethod
    def one(cls, n: int) -> "Element":
        return cls._raw({Word.one(n): ONE}, n)

    @classmethod
    def from_word(cls, w: Word, coeff: Coeff = 1) -> "Element":
        return cls({w: coeff}, w.n)

    @classmethod
    def scalar(cls, coeff: Coeff, n: int) -> "Element":
        return cls({Word.one(n): coeff}, n)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Element):
            return self.n == other.n and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            _same_n(self.n, other.n)
            return other
        if isinstance(other, Word):
            return Element.from_word(other)
        return Element.scalar(other, self.n)

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out[w] + c if w in out else c
            if v.is_zero():
                out.pop(w, None)
            else:
                out[w] = v
        return Element._raw(out, self.n)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element._raw({w: -c for w, c in self.terms.items()}, self.n)

    def __sub__(self, other) -> "Element":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Element":
        return self._coerce(other) - self

    def scale(self, k: Coeff) -> "Element":
        k = _coerce(k)
        if k.is_zero():
            return Element.zero(self.n)
        return Element._raw({w: c * k for w, c in self.terms.items()}, self.n)

    def __mul__(self, other) -> "Element":
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        return elem_mul(self, self._coerce(other))

    def __rmul__(self, other) -> "Element":
        if isinstance(other, (RatFunc, int, Fraction)):
            return self.scale(other)
        return elem_mul(self._coerce(other), self)

    def as_scalar(self) -> RatFunc | None:
        """The coefficient if this is a multiple of the empty word, else None."""
        if not self.terms:
            return _coerce(0)
        if len(self.terms) == 1:
            (w, c), = self.terms.items()
            if not w.letters:
                return c
        return None

    def __truediv__(self, other) -> "Element":
        if isinstance(other, Element):
            k = other.as_scalar()
            if k is None:
                raise ValueError("can only divide by a scalar element")
            other = k
        return self.scale(_coerce(other).inv())

    def __pow__(self, e: int) -> "Element":
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("only single-term elements can be inverted")
            (w, c), = self.terms.items()
            return Element._raw({w.inverse(): c.inv()}, self.n) ** (-e)
        out = Element.one(self.n)
        for _ in range(e):
            out = out * self
        return out

    def commutator(self, other: "Element") -> "Element":
        return self * other - other * self

    def sorted_terms(self) -> List[Tuple[Word, RatFunc]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (w, c) in enumerate(self.sorted_terms()):
            neg = c.num.leading()[1] < 0 and c.is_single_term()
            body = _render_term(-c if neg else c, w)
            if k == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Element(n={self.n}: {self})"

    @classmethod
    def parse(cls, text: str, n: int) -> "Element":
        return parse_element(text, n)


def _render_term(c: RatFunc, w: Word) -> str:
    if c.is_one():
        return str(w)
    cs = str(c)
    if not c.is_single_term() and c.den.is_one():
        cs = f"({cs})"
    if not w.letters:
        return cs
    return f"{cs} * {w}"


def elem_mul(a: Element, b: Element) -> Element:
    """Bilinear concatenate-then-reduce product."""
    _same_n(a.n, b.n)
    out: Dict[Word, RatFunc] = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            w = Word(free_reduce(wa.letters + wb.letters), a.n)
            c = ca * cb
            out[w] = out[w] + c if w in out else c
    return Element._raw({w: c for w, c in out.items() if not c.is_zero()}, a.n)


Image = Union[Word, Element]


def _single(img: Image, n: int) -> Tuple[Word, RatFunc]:
    if isinstance(img, Word):
        return img, ONE
    if len(img.terms) != 1:
        raise ValueError("generator images must be single terms so that inverses exist")
    (w, c), = img.terms.items()
    return w, c


def substitute(e: Element, images: Mapping[Gen, Image]) -> Element:
    """Apply the algebra endomorphism given on positive generators.

    Generators missing from ``images`` raise KeyError unless they do not occur.
    Inverse letters map to the inverse of the image.
    """
    table: Dict[Gen, Tuple[Tuple[Gen, ...], RatFunc]] = {}
    for g, img in images.items():
        if g.power != 1:
            raise ValueError("supply images of positive generators only")
        w, c = _single(img, e.n)
        _same_n(w.n, e.n)
        table[g] = (w.letters, c)
        table[g.inverse()] = (w.inverse().letters, c.inv())
    out: Dict[Word, RatFunc] = {}
    for word, coeff in e.terms.items():
        letters: List[Gen] = []
        k = coeff
        for g in word.letters:
            try:
                img, c = table[g]
            except KeyError:
                raise KeyError(f"no image given for generator {g.positive()}") from None
            letters.extend(img)
            if not c.is_one():
                k = k * c
        w = Word(free_reduce(letters), e.n)
        out[w] = out[w] + k if w in out else k
    return Element._raw({w: c for w, c in out.items() if not c.is_zero()}, e.n)


def identity_images(n: int) -> Dict[Gen, Word]:
    imgs = {sigma(i): Word.of(n, sigma(i)) for i in range(1, n)}
    imgs[X1] = Word.of(n, X1)
    imgs[Y1] = Word.of(n, Y1)
    return imgs


def parse_element(text: str, n: int) -> Element:
    """Parse ``coeff * word + ...``; letters are s1.., x1, y1 (and x2.., y2..)."""
    from ._parse import parse
    from .coeff import rf_param

    one = Element.one(n)

    def lookup(name: str):
        if name in ("s", "c", "t", "q", "sigma", "sigma_bar", "t_half"):
            return one.scale(rf_param(name))
        kind, idx = name[0], name[1:]
        if kind in "sxy" and idx.isdigit():
            i = int(idx)
            if kind == "s":
                return Element.from_word(Word.of(n, sigma(i)))
            return Element.from_word(gen_xy(i, kind, n))
        raise KeyError(name)

    return parse(text, lookup, one)
