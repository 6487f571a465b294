import random
from math import gcd

import pytest

from dahaskein.coeff import ONE, S, rf_param
from dahaskein.daha import (
    SELECTED,
    ConventionError,
    Factor,
    LaurentPoly,
    OpSum,
    build_rep,
    convention_gate,
    oracle_equal,
    skein_to_rep,
)
from dahaskein.daha import rep as rep_mod
from dahaskein.daha.elements import (
    bracket_s,
    en_element,
    power_sum,
    q_elements,
    q_sandwich,
    qtilde,
    w_element,
)
from dahaskein.daha.operators import box
from dahaskein.daha.rep import t_eigenvalue_on_symmetric
from dahaskein.daha.sl2 import (
    THETA,
    alternative_path,
    apply_path,
    mat_vec,
    path_matrix,
    sl2_path,
    tau_apply,
)
from dahaskein.words import Element, named_word, parse_element

q = rf_param("q")
c2 = rf_param("sigma")


def E(text, n=2):
    return parse_element(text, n)


def tokens(n, *toks):
    """A bare product of DAHA generators, bypassing the skein translation."""
    return OpSum([(ONE, (Factor.from_terms([(ONE, tuple(toks))], n),))], n)


def daha_power_sum(kind, m, n):
    out = OpSum([], n)
    sign = 1 if m > 0 else -1
    for j in range(1, n + 1):
        out = out + tokens(n, *[(kind, j, sign)] * abs(m))
    return out


# -- representation -----------------------------------------------------------


def test_laurent_parse_render():
    f = LaurentPoly.parse("(s - s^-1)*X1^2*X2^-1 + q*X2 - 1", 2)
    assert LaurentPoly.parse(str(f), 2) == f
    assert str(LaurentPoly.parse("-X1", 2)) == "-X1"


def test_generator_images():
    op = skein_to_rep(E("x1"))
    assert op(LaurentPoly.parse("1", 2)) == LaurentPoly.parse("X1", 2)
    assert op(LaurentPoly.parse("X1^-2*X2", 2)) == LaurentPoly.parse("X1^-1*X2", 2)
    for j in (1, 2, 3):
        a = [0, 1, -1]
        b = list(a)
        b[j - 1] += 1
        img = skein_to_rep(tokens(3, ("X", j, 1)))(LaurentPoly.monomial(tuple(a)))
        assert img == LaurentPoly.monomial(tuple(b))


def test_P_acts_by_c2():
    P = Element.from_word(named_word("P", 2))
    assert skein_to_rep(P)(LaurentPoly.parse("1", 2)) == LaurentPoly.parse("c^2", 2)


def test_hecke_difference_on_box():
    op = skein_to_rep(E("s1 - s1^-1"))
    for m in box(2, 2):
        assert op(LaurentPoly.monomial(m)) == LaurentPoly.monomial(m, S - S.inv())


def test_symmetric_eigenvalue():
    assert t_eigenvalue_on_symmetric(2) == -S
    assert t_eigenvalue_on_symmetric(3) == -S


def test_linearity():
    rng = random.Random(3)
    op = skein_to_rep(E("x1 s1 y1^-1 + s*y1 s1^-1"))
    monos = box(2, 1)
    for _ in range(5):
        f = LaurentPoly({rng.choice(monos): rng.choice([ONE, S, c2 - ONE]) for _ in range(3)}, 2)
        g = LaurentPoly({rng.choice(monos): rng.choice([ONE, q, S + 2]) for _ in range(3)}, 2)
        a, b = S ** 2 - ONE, c2.inv()
        assert op(f * a + g * b) == op(f) * a + op(g) * b


# -- the oracle ---------------------------------------------------------------


def test_oracle_examples():
    t_half = rf_param("t_half")
    lhs = E("s1^-2")
    rhs = E("s1^-1").scale(t_half.inv() - t_half) + 1
    assert oracle_equal(lhs, rhs).equal
    v = oracle_equal(E("x1 y2"), E("y2 x1"))
    assert not v.equal and v.witness is not None and v.image
    zero = Element.zero(2)
    assert oracle_equal(zero, zero).label == "equal_on_box"


def test_oracle_negative_controls():
    P = Element.from_word(named_word("P", 2))
    assert not oracle_equal(P, c2 * c2)
    assert not oracle_equal(E("x1 y1 x1^-1 y1^-1"), Element.from_word(named_word("beta_n", 2)))
    # the W vs Q identity with the wrong sign must fail
    x = (0, 1)
    W = w_element(x, 2, "axis")
    assert not oracle_equal(W.scale(q - ONE), qtilde(x, 2).scale(-bracket_s(1)), n=2)


def test_oracle_is_deterministic():
    a, b = E("x1 y2"), E("y2 x1")
    v1, v2 = oracle_equal(a, b, seed=11), oracle_equal(a, b, seed=11)
    assert (v1.witness, v1.image, v1.trials) == (v2.witness, v2.image, v2.trials)


def test_exact_stage_runs_without_modular_trials():
    v = oracle_equal(E("x1 y2"), E("y2 x1"), modular_trials=0)
    assert not v.equal and v.stage == "exact"


# -- convention gate ----------------------------------------------------------


def test_gate_unique_at_rank_two():
    gate = convention_gate(2)
    assert len(gate) == 16
    assert [c for c, f in gate.items() if not f] == [SELECTED]
    assert build_rep(2).convention == SELECTED


def test_gate_failures_are_informative():
    gate = convention_gate(2)
    for conv, failed in gate.items():
        if conv.t_flip:
            assert "quadratic" in failed


def test_gate_refuses_ambiguity(monkeypatch):
    fake = {conv: [] for conv in list(convention_gate(2))[:2]}
    monkeypatch.setattr(rep_mod, "convention_gate", lambda *a, **k: fake)
    rep_mod._gate_winner.cache_clear()
    try:
        with pytest.raises(ConventionError):
            build_rep(2, box_radius=1)
    finally:
        rep_mod._gate_winner.cache_clear()


# -- SL2 ----------------------------------------------------------------------


def test_tau_examples():
    assert tau_apply("tau1", E("y1")) == E("y1 x1")
    assert tau_apply("tau1", E("x1")) == E("x1")
    assert apply_path(THETA, E("x1")) == E("y1^-1")


def test_sl2_path_examples():
    assert sl2_path((0, 3)) == []
    assert sl2_path((1, 1)) == ["tau1"]
    for m in (1, 2, 5):
        assert mat_vec(path_matrix(sl2_path((m, 0))), (0, m)) == (m, 0)


def test_sl2_paths_valid():
    for a in range(-7, 8):
        for b in range(-7, 8):
            if (a, b) == (0, 0):
                continue
            d = gcd(a, b)
            for p in (sl2_path((a, b)), alternative_path((a, b))):
                m = path_matrix(p)
                assert m[0][0] * m[1][1] - m[0][1] * m[1][0] == 1
                assert mat_vec(m, (0, d)) == (a, b)
            assert sl2_path((a, b)) != alternative_path((a, b))


# -- Q and W ------------------------------------------------------------------


def test_qtilde_axis():
    assert qtilde((0, 2), 2) == power_sum("y", 2, 2)
    assert str(qtilde((0, 2), 2)) == "y1 y1 + s1 y1 s1 s1 y1 s1"


@pytest.mark.parametrize("m", [1, 2])
def test_Q_against_daha_generators(m):
    n = 2
    e = en_element(n)
    assert oracle_equal(q_sandwich((m, 0), n), OpSum.of(e, daha_power_sum("X", m, n), e).scale(q ** m), n=n)
    assert oracle_equal(q_sandwich((0, -m), n), OpSum.of(e, daha_power_sum("Y", -m, n), e).scale(q ** m), n=n)
    assert oracle_equal(q_sandwich((0, m), n), OpSum.of(e, daha_power_sum("Y", m, n), e), n=n)


def test_q_elements_expanded_matches_factored():
    qt, Q = q_elements((1, 0), 2)
    assert oracle_equal(Q, q_sandwich((1, 0), 2), n=2)
    assert qt == qtilde((1, 0), 2)


def test_w_element_forms():
    n, m = 2, 2
    W = w_element((m, 0), n, "axis")
    assert W == power_sum("x", m, n).scale(bracket_s(m) / (ONE - c2 ** m))
    W = w_element((0, -m), n, "axis")
    assert W == power_sum("y", -m, n).scale(bracket_s(m) / (ONE - c2 ** m))
    assert oracle_equal(w_element((0, m), n, "axis"), w_element((0, m), n, "general"), n=n)
    with pytest.raises(ValueError):
        w_element((1, 1), n, "axis")
    with pytest.raises(ValueError):
        qtilde((0, 0), n)
