"""The Dehn-twist automorphisms tau1, tau2 and SL2(Z) paths between lattice vectors.

Conventions: tau1 fixes x1 and every sigma_i and sends y1 to y1 x1; tau2 fixes
y1 and every sigma_i and sends x1 to x1 y1.  On homology they act by the
matrices ((1, 1), (0, 1)) and ((1, 0), (1, 1)).  A path ``[g1, .., gk]``
applies g1 first, so its matrix is ``M(gk) ... M(g1)``.
"""

from __future__ import annotations

from math import gcd
from typing import Dict, List, Sequence, Tuple

from ..words import X1, Y1, Element, Gen, Word, identity_images, substitute

__all__ = [
    "TAUS",
    "THETA",
    "tau_images",
    "tau_apply",
    "apply_path",
    "path_matrix",
    "sl2_path",
    "alternative_path",
    "primitive_part",
]

Matrix = Tuple[Tuple[int, int], Tuple[int, int]]

TAUS: Dict[str, Matrix] = {
    "tau1": ((1, 1), (0, 1)),
    "tau1_inv": ((1, -1), (0, 1)),
    "tau2": ((1, 0), (1, 1)),
    "tau2_inv": ((1, 0), (-1, 1)),
}

_INVERSE = {"tau1": "tau1_inv", "tau1_inv": "tau1", "tau2": "tau2_inv", "tau2_inv": "tau2"}

# theta = tau1 tau2^-1 tau1 as a path (the outer factors coincide, so order is moot)
THETA: Tuple[str, ...] = ("tau1", "tau2_inv", "tau1")


def tau_images(which: str, n: int) -> Dict[Gen, Word]:
    if which not in TAUS:
        raise ValueError(f"unknown automorphism {which!r}")
    imgs = identity_images(n)
    x, y = Word.of(n, X1), Word.of(n, Y1)
    if which == "tau1":
        imgs[Y1] = y * x
    elif which == "tau1_inv":
        imgs[Y1] = y * x.inverse()
    elif which == "tau2":
        imgs[X1] = x * y
    else:
        imgs[X1] = x * y.inverse()
    return imgs


def tau_apply(which: str, e: Element) -> Element:
    return substitute(e, tau_images(which, e.n))


def apply_path(path: Sequence[str], e: Element) -> Element:
    for g in path:
        e = tau_apply(g, e)
    return e


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def path_matrix(path: Sequence[str]) -> Matrix:
    m: Matrix = ((1, 0), (0, 1))
    for g in path:
        m = _mat_mul(TAUS[g], m)
    return m


def mat_vec(m: Matrix, v: Tuple[int, int]) -> Tuple[int, int]:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def primitive_part(x: Tuple[int, int]) -> Tuple[int, Tuple[int, int]]:
    a, b = x
    d = gcd(a, b)
    if d == 0:
        raise ValueError("the zero vector has no primitive part")
    return d, (a // d, b // d)


def _reduce_moves(z: Tuple[int, int]) -> List[str]:
    """Unit moves taking the primitive vector z to (0, 1)."""
    moves: List[str] = []

    def move(g: str, count: int = 1) -> None:
        nonlocal z
        for _ in range(count):
            moves.append(g)
            z = mat_vec(TAUS[g], z)

    while z != (0, 1):
        a, b = z
        if b == 0:
            # (+-1, 0) -> (+-1, 1)
            move("tau2" if a == 1 else "tau2_inv")
        elif a == 0:
            # (0, -1) -> (-1, -1) -> (-1, 0)
            move("tau1")
            move("tau2_inv")
        elif abs(a) >= abs(b):
            k = -(a // b)
            move("tau1" if k > 0 else "tau1_inv", abs(k))
        else:
            k = -(b // a)
            move("tau2" if k > 0 else "tau2_inv", abs(k))
    return moves


def sl2_path(x: Tuple[int, int]) -> List[str]:
    """Deterministic path whose matrix sends (0, d(x)) to x."""
    _, z = primitive_part(tuple(x))
    moves = _reduce_moves(z)
    return [_INVERSE[g] for g in reversed(moves)]


def alternative_path(x: Tuple[int, int]) -> List[str]:
    """A second path for x: theta^4 (matrix identity) followed by sl2_path(x)."""
    return list(THETA) * 4 + sl2_path(x)
