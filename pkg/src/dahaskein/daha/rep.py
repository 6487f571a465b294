"""The defining DAHA relations as operator identities, and the convention gate."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Tuple

from ..coeff import ONE, RatFunc, rf_param
from .engine import CONVENTION_SPACE, Convention, Engine, Token
from .operators import DEFAULT_PRIME, Factor, OpSum, get_engine, oracle_equal

__all__ = [
    "Relation",
    "daha_relations",
    "convention_gate",
    "build_rep",
    "Rep",
    "ConventionError",
]


class ConventionError(RuntimeError):
    """Raised when the gate does not single out exactly one convention."""


@dataclass(frozen=True)
class Relation:
    family: str
    name: str
    statement: str
    lhs: OpSum
    rhs: OpSum


def _w(n: int, *tokens: Token, coeff=ONE) -> OpSum:
    return OpSum([(ONE, (Factor.from_terms([(coeff, tuple(tokens))], n),))], n)


def _lin(n: int, *terms) -> OpSum:
    return OpSum([(ONE, (Factor.from_terms(terms, n),))], n)


def T(i, p=1):
    return ("T", i, p)


def X(j, p=1):
    return ("X", j, p)


def Y(j, p=1):
    return ("Y", j, p)


def daha_relations(n: int) -> List[Relation]:
    """All instances of the nine defining relation families at rank n."""
    if n < 1:
        raise ValueError("rank must be positive")
    th = rf_param("t_half")
    q = rf_param("q")
    rels: List[Relation] = []

    def add(family, name, statement, lhs, rhs):
        rels.append(Relation(family, name, statement, lhs, rhs))

    for i in range(1, n):
        # (T + t^1/2)(T - t^-1/2) = 0, i.e. T^2 = (t^-1/2 - t^1/2) T + 1
        add(
            "quadratic",
            f"quadratic[T{i}]",
            "(T_i + t^1/2)(T_i - t^-1/2) = 0",
            _w(n, T(i), T(i)),
            _lin(n, (th.inv() - th, (T(i),)), (ONE, ())),
        )
    for i in range(1, n - 1):
        add(
            "braid",
            f"braid[T{i},T{i + 1}]",
            "T_i T_(i+1) T_i = T_(i+1) T_i T_(i+1)",
            _w(n, T(i), T(i + 1), T(i)),
            _w(n, T(i + 1), T(i), T(i + 1)),
        )
    for i in range(1, n):
        for j in range(i + 2, n):
            add("far-commute", f"far[T{i},T{j}]", "T_i T_j = T_j T_i for |i-j| > 1",
                _w(n, T(i), T(j)), _w(n, T(j), T(i)))
    for i in range(1, n):
        for j in range(1, n + 1):
            if j in (i, i + 1):
                continue
            add("T-X-Y-commute", f"commute[T{i},X{j}]", "T_i X_j = X_j T_i for j != i, i+1",
                _w(n, T(i), X(j)), _w(n, X(j), T(i)))
            add("T-X-Y-commute", f"commute[T{i},Y{j}]", "T_i Y_j = Y_j T_i for j != i, i+1",
                _w(n, T(i), Y(j)), _w(n, Y(j), T(i)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            add("X-Y-abelian", f"commute[X{i},X{j}]", "X_i X_j = X_j X_i",
                _w(n, X(i), X(j)), _w(n, X(j), X(i)))
            add("X-Y-abelian", f"commute[Y{i},Y{j}]", "Y_i Y_j = Y_j Y_i",
                _w(n, Y(i), Y(j)), _w(n, Y(j), Y(i)))
    for i in range(1, n):
        add("X-step", f"X{i + 1}=T{i}X{i}T{i}", "X_(i+1) = T_i X_i T_i",
            _w(n, X(i + 1)), _w(n, T(i), X(i), T(i)))
        add("Y-step", f"Y{i + 1}=T{i}^-1Y{i}T{i}^-1", "Y_(i+1) = T_i^-1 Y_i T_i^-1",
            _w(n, Y(i + 1)), _w(n, T(i, -1), Y(i), T(i, -1)))
    if n >= 2:
        add("X1-Y2", "X1^-1Y2=Y2X1^-1T1^-2", "X_1^-1 Y_2 = Y_2 X_1^-1 T_1^-2",
            _w(n, X(1, -1), Y(2)), _w(n, Y(2), X(1, -1), T(1, -1), T(1, -1)))
    xs = tuple(X(j) for j in range(1, n + 1))
    add("Y1-twist", "Y1X1..Xn=qX1..XnY1", "Y_1 X_1...X_n = q X_1...X_n Y_1",
        _w(n, Y(1), *xs), _w(n, *xs, Y(1), coeff=q))
    return rels


RELATION_FAMILIES = (
    "quadratic",
    "braid",
    "far-commute",
    "T-X-Y-commute",
    "X-Y-abelian",
    "X-step",
    "Y-step",
    "X1-Y2",
    "Y1-twist",
)


def convention_gate(
    n: int = 2,
    box_radius: int = 2,
    modular_trials: int = 2,
    prime: int = DEFAULT_PRIME,
    seed: int = 0,
) -> Dict[Convention, List[str]]:
    """Failed relation families per convention variant (empty list = passes)."""
    rels = daha_relations(n)
    out: Dict[Convention, List[str]] = {}
    for conv in CONVENTION_SPACE:
        failed: List[str] = []
        for r in rels:
            if r.family in failed:
                continue
            v = oracle_equal(r.lhs, r.rhs, box_radius, modular_trials, prime, seed, conv=conv)
            if not v.equal:
                failed.append(r.family)
        out[conv] = failed
    return out


@dataclass
class Rep:
    """The selected representation at rank n."""

    n: int
    convention: Convention
    gate: Dict[Convention, List[str]] = field(repr=False)

    @property
    def engine(self) -> Engine:
        return get_engine(self.n, self.convention)

    def gate_report(self) -> List[Dict[str, object]]:
        return [
            {"convention": c.as_dict(), "failed": list(f)}
            for c, f in self.gate.items()
        ]


@lru_cache(maxsize=None)
def _gate_winner(gate_rank: int, box_radius: int) -> Tuple[Convention, Tuple[Tuple[Convention, Tuple[str, ...]], ...]]:
    gate = convention_gate(gate_rank, box_radius)
    passing = [c for c, f in gate.items() if not f]
    if len(passing) != 1:
        detail = "; ".join(f"{c.label()}: {','.join(f) or 'ok'}" for c, f in gate.items())
        raise ConventionError(f"{len(passing)} conventions pass the relation gate ({detail})")
    return passing[0], tuple((c, tuple(f)) for c, f in gate.items())


def build_rep(n: int, gate_rank: int = 2, box_radius: int = 2) -> Rep:
    """Select the convention on the rank-``gate_rank`` box and return the rank-n rep."""
    if n < 1:
        raise ValueError("rank must be positive")
    conv, gate = _gate_winner(gate_rank, box_radius)
    return Rep(n, conv, {c: list(f) for c, f in gate})


def t_eigenvalue_on_symmetric(n: int = 2) -> RatFunc:
    """Scalar by which T_1 acts on X_1 + X_2 (an (1,2)-symmetric polynomial)."""
    from .operators import LaurentPoly, RepOperator

    op = RepOperator(_w(n, T(1)))
    a = [0] * n
    b = [0] * n
    a[0] = 1
    b[1] = 1
    f = LaurentPoly({tuple(a): 1, tuple(b): 1}, n)
    img = op(f)
    ratio = img.terms[tuple(a)]
    if img != f * ratio:
        raise AssertionError("symmetric polynomial is not an eigenvector")
    return ratio

