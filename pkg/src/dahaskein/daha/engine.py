"""Monomial-level actions of T_i, X_j, Y_j and the twisted shift on Laurent
polynomials in X_1..X_n, with two coefficient rings.

Everything in here works with integer Laurent polynomials in (s, c) stored as
dicts ``{(e_s, e_c): int}``, or with their images in a prime field.  Rational
coefficients are cleared by the caller (see ``operators``).

A token ``(kind, index, power)`` names one generator: kind ``T`` (T_index),
``X`` (X_index), ``Y`` (Y_index) or ``O`` (the shift, index 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

Mono = Tuple[int, ...]
Token = Tuple[str, int, int]
Laurent = Dict[Tuple[int, int], int]
Action = Tuple[Tuple[Mono, int, int, int], ...]  # (image monomial, ds, dc, integer)

__all__ = [
    "Convention",
    "CONVENTION_SPACE",
    "SELECTED",
    "Engine",
    "ExactRing",
    "ModRing",
    "Evaluator",
]


@dataclass(frozen=True)
class Convention:
    """One point of the sign/direction convention space.

    q_exp:   the shift multiplies one variable by q**q_exp
    shift:   -1 gives f(X) -> f(q X_n, X_1, .., X_(n-1)); +1 the opposite rotation
    y_power: Y_1 = T_1^y_power ... T_(n-1)^y_power composed with the shift
    t_flip:  swap s and s^-1 inside T_i
    """

    q_exp: int = 1
    shift: int = -1
    y_power: int = 1
    t_flip: bool = False

    def label(self) -> str:
        return (
            f"q_exp={self.q_exp:+d} shift={self.shift:+d} "
            f"y_power={self.y_power:+d} t_flip={'yes' if self.t_flip else 'no'}"
        )

    def as_dict(self) -> Dict[str, object]:
        return {
            "q_exp": self.q_exp,
            "shift": self.shift,
            "y_power": self.y_power,
            "t_flip": self.t_flip,
        }


CONVENTION_SPACE: Tuple[Convention, ...] = tuple(
    Convention(qe, sh, yp, tf)
    for qe in (1, -1)
    for sh in (-1, 1)
    for yp in (1, -1)
    for tf in (False, True)
)

# The variant singled out by the relation gate; build_rep re-derives it.
SELECTED = Convention(1, -1, 1, False)


def _geom(j: int) -> Iterable[Tuple[int, int]]:
    # (1 - z^j) / (1 - z) as (exponent, coefficient) pairs
    if j > 0:
        return [(e, 1) for e in range(j)]
    if j < 0:
        return [(e, -1) for e in range(j, 0)]
    return []


def _collect(items: Iterable[Tuple[Mono, int, int, int]]) -> Action:
    acc: Dict[Tuple[Mono, int, int], int] = {}
    for b, ds, dc, k in items:
        key = (b, ds, dc)
        acc[key] = acc.get(key, 0) + k
    return tuple((b, ds, dc, k) for (b, ds, dc), k in acc.items() if k)


class Engine:
    """Generator actions for a fixed rank and convention, cached per monomial."""

    def __init__(self, n: int, conv: Convention = SELECTED):
        if n < 1:
            raise ValueError("rank must be positive")
        self.n = n
        self.conv = conv
        self._cache: Dict[Tuple[Token, Mono], Action] = {}

    # -- basic generators -------------------------------------------------

    def _t(self, i: int, power: int, a: Mono) -> Action:
        sg = -1 if self.conv.t_flip else 1
        k = a[i - 1] - a[i]
        out: List[Tuple[Mono, int, int, int]] = []
        for e, cc in _geom(-k):
            b = list(a)
            b[i - 1] += e
            b[i] -= e
            out.append((tuple(b), -sg, 0, cc))
        for e, cc in _geom(1 - k):
            b = list(a)
            b[i - 1] += e
            b[i] -= e
            out.append((tuple(b), sg, 0, -cc))
        if power == -1:
            # T^-1 = T - (s^-1 - s) under the quadratic relation
            out.append((a, -sg, 0, -1))
            out.append((a, sg, 0, 1))
        return _collect(out)

    def _x(self, j: int, power: int, a: Mono) -> Action:
        b = list(a)
        b[j - 1] += power
        return ((tuple(b), 0, 0, 1),)

    def _omega(self, power: int, a: Mono) -> Action:
        qe = self.conv.q_exp
        backward = (self.conv.shift == -1) == (power == 1)
        if backward:
            b = a[1:] + a[:1]
            qpow = qe * a[0]
        else:
            b = a[-1:] + a[:-1]
            qpow = qe * a[-1]
        if power == -1:
            qpow = -qpow
        # q = c^-2
        return ((b, 0, -2 * qpow, 1),)

    def _y_program(self, j: int, power: int) -> List[Token]:
        """Y_j^power as a product of basic tokens, leftmost applied last."""
        yp = self.conv.y_power
        if power == 1:
            prog = [("T", i, yp) for i in range(1, self.n)] + [("O", 0, 1)]
        else:
            prog = [("O", 0, -1)] + [("T", i, -yp) for i in range(self.n - 1, 0, -1)]
        for i in range(1, j):
            # Y_(i+1) = T_i^-1 Y_i T_i^-1 ; inverse: T_i Y_i^-1 T_i
            t = ("T", i, -power)
            prog = [t] + prog + [t]
        return prog

    def action(self, tok: Token, a: Mono) -> Action:
        key = (tok, a)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        kind, idx, power = tok
        if kind == "T":
            if not 1 <= idx < self.n:
                raise ValueError(f"T_{idx} out of range for n={self.n}")
            res = self._t(idx, power, a)
        elif kind == "X":
            if not 1 <= idx <= self.n:
                raise ValueError(f"X_{idx} out of range for n={self.n}")
            res = self._x(idx, power, a)
        elif kind == "O":
            res = self._omega(power, a)
        elif kind == "Y":
            if not 1 <= idx <= self.n:
                raise ValueError(f"Y_{idx} out of range for n={self.n}")
            res = self._composite(self._y_program(idx, power), a)
        else:
            raise ValueError(f"unknown token {tok!r}")
        self._cache[key] = res
        return res

    def _composite(self, prog: List[Token], a: Mono) -> Action:
        cur: Dict[Mono, Laurent] = {a: {(0, 0): 1}}
        for tok in reversed(prog):
            nxt: Dict[Mono, Laurent] = {}
            for m, poly in cur.items():
                for b, ds, dc, k in self.action(tok, m):
                    tgt = nxt.setdefault(b, {})
                    for (es, ec), v in poly.items():
                        kk = (es + ds, ec + dc)
                        nv = tgt.get(kk, 0) + v * k
                        if nv:
                            tgt[kk] = nv
                        else:
                            tgt.pop(kk, None)
            cur = {m: p for m, p in nxt.items() if p}
        return tuple((b, es, ec, v) for b, poly in cur.items() for (es, ec), v in poly.items())


# -- coefficient rings ------------------------------------------------------


class ExactRing:
    """Integer Laurent polynomials in s, c as dicts."""

    name = "exact"

    @staticmethod
    def one():
        return {(0, 0): 1}

    @staticmethod
    def from_laurent(poly: Laurent):
        return {k: v for k, v in poly.items() if v}

    @staticmethod
    def term(x, ds: int, dc: int, k: int):
        if ds == 0 and dc == 0 and k == 1:
            return x
        return {(a + ds, b + dc): v * k for (a, b), v in x.items()}

    @staticmethod
    def mul(x, y):
        if len(x) < len(y):
            x, y = y, x
        if len(y) == 1:
            ((ds, dc), k), = y.items()
            return ExactRing.term(x, ds, dc, k)
        out: Laurent = {}
        for (a, b), v in x.items():
            for (c, d), w in y.items():
                kk = (a + c, b + d)
                out[kk] = out.get(kk, 0) + v * w
        return {k: v for k, v in out.items() if v}

    @staticmethod
    def add_into(acc: dict, key, x) -> None:
        cur = acc.get(key)
        if cur is None:
            acc[key] = dict(x)
            return
        for kk, v in x.items():
            nv = cur.get(kk, 0) + v
            if nv:
                cur[kk] = nv
            else:
                cur.pop(kk, None)

    @staticmethod
    def is_zero(x) -> bool:
        return not x


class ModRing:
    """Images in F_p at a fixed point (s, c), both nonzero."""

    name = "modular"

    def __init__(self, prime: int, s: int, c: int):
        if s % prime == 0 or c % prime == 0:
            raise ValueError("evaluation point must avoid s = 0 and c = 0")
        self.p = prime
        self.s = s % prime
        self.c = c % prime
        self._pw: Dict[Tuple[int, int], int] = {}

    def _power(self, ds: int, dc: int) -> int:
        key = (ds, dc)
        v = self._pw.get(key)
        if v is None:
            v = pow(self.s, ds, self.p) * pow(self.c, dc, self.p) % self.p
            self._pw[key] = v
        return v

    def one(self) -> int:
        return 1

    def from_laurent(self, poly: Laurent) -> int:
        return sum(v * self._power(a, b) for (a, b), v in poly.items()) % self.p

    def term(self, x: int, ds: int, dc: int, k: int) -> int:
        return x * k * self._power(ds, dc) % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def add_into(self, acc: dict, key, x: int) -> None:
        acc[key] = (acc.get(key, 0) + x) % self.p

    @staticmethod
    def is_zero(x) -> bool:
        return x == 0


class Evaluator:
    """Applies token words and integer-coefficient blocks to monomials.

    Word images are memoized by (suffix, monomial); block images by
    (block, monomial).  A block is a tuple of ``(Laurent coefficient items,
    token word)`` pairs and stands for their sum.
    """

    def __init__(self, engine: Engine, ring):
        self.engine = engine
        self.ring = ring
        self._words: Dict[Tuple[Tuple[Token, ...], Mono], dict] = {}
        self._blocks: Dict[Tuple[object, Mono], dict] = {}
        self._coeffs: Dict[object, object] = {}

    def _prune(self, d: dict) -> dict:
        z = self.ring.is_zero
        return {k: v for k, v in d.items() if not z(v)}

    def apply_token(self, tok: Token, f: dict) -> dict:
        ring = self.ring
        out: dict = {}
        act = self.engine.action
        for a, x in f.items():
            for b, ds, dc, k in act(tok, a):
                ring.add_into(out, b, ring.term(x, ds, dc, k))
        return self._prune(out)

    def word(self, tokens: Tuple[Token, ...], a: Mono) -> dict:
        cache = self._words
        hit = cache.get((tokens, a))
        if hit is not None:
            return hit
        # longest cached suffix, then extend leftwards
        j = 1
        cur = None
        while j < len(tokens):
            cur = cache.get((tokens[j:], a))
            if cur is not None:
                break
            j += 1
        if cur is None:
            j = len(tokens)
            cur = {a: self.ring.one()}
        for i in range(j - 1, -1, -1):
            cur = self.apply_token(tokens[i], cur)
            cache[(tokens[i:], a)] = cur
        if not tokens:
            cache[(tokens, a)] = cur
        return cur

    def coeff(self, items) -> object:
        v = self._coeffs.get(items)
        if v is None:
            v = self.ring.from_laurent(dict(items))
            self._coeffs[items] = v
        return v

    def block(self, blk, a: Mono) -> dict:
        key = (blk, a)
        hit = self._blocks.get(key)
        if hit is not None:
            return hit
        ring = self.ring
        out: dict = {}
        for items, tokens in blk:
            k = self.coeff(items)
            for b, x in self.word(tokens, a).items():
                ring.add_into(out, b, ring.mul(x, k))
        out = self._prune(out)
        self._blocks[key] = out
        return out

    def apply_block(self, blk, f: dict) -> dict:
        ring = self.ring
        out: dict = {}
        for a, x in f.items():
            for b, y in self.block(blk, a).items():
                ring.add_into(out, b, ring.mul(x, y))
        return self._prune(out)

    def apply_chain(self, chain, a: Mono) -> dict:
        """chain = (block_1, .., block_k); block_k acts first."""
        if not chain:
            return {a: self.ring.one()}
        f = self.block(chain[-1], a)
        for blk in reversed(chain[:-1]):
            if not f:
                break
            f = self.apply_block(blk, f)
        return f
