import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from markov_farey import closedform as cf
from markov_farey import farey as fy
from markov_farey import symbolic as sym
from markov_farey.errors import Inhomogeneous, NotDivisible
from markov_farey.farey import ParityClass
from markov_farey.symbolic import LaurentPoly, lp_exact_div, lp_monomial, variable

C0, Cm1, Cinf = ParityClass.C0, ParityClass.Cm1, ParityClass.Cinf
x1, x2, x3, x4, x5, x6 = (variable(i) for i in range(1, 7))
ONE = sym.lp_const(1)


def inv(i):
    e = [0] * 6
    e[i - 1] = -1
    return lp_monomial(e)


def test_ring_basics():
    assert (x1 + (-x1)).is_zero()
    assert inv(1) * x1 == ONE
    p = x2 ** 2 * x4 + x3 ** 2
    assert p * ONE == p
    assert len(p) == 2


def test_exact_div_by_monomial():
    p = x2 ** 2 * x4 + x3 ** 2
    assert lp_exact_div(p, x1) == inv(1) * x2 ** 2 * x4 + inv(1) * x3 ** 2
    assert lp_exact_div(p, p) == ONE


def test_exact_div_polynomial_divisor():
    q = x1 + x2 * x4
    p = (x1 ** 3 - inv(2) + x3) * q
    assert lp_exact_div(p, q) == x1 ** 3 - inv(2) + x3


def test_not_divisible():
    with pytest.raises(NotDivisible):
        lp_exact_div(x1 + x2, x1 + x3)
    with pytest.raises(NotDivisible):
        lp_exact_div(x1 + x2, sym.lp_const(2))
    with pytest.raises(ZeroDivisionError):
        lp_exact_div(x1, LaurentPoly())


_monomials = st.tuples(*[st.integers(-2, 2)] * 6)
_polys = st.dictionaries(_monomials, st.integers(-3, 3).filter(bool), max_size=4).map(LaurentPoly)


@settings(max_examples=150)
@given(_polys, _polys.filter(lambda q: not q.is_zero()))
def test_division_round_trip(p, q):
    assert lp_exact_div(p * q, q) == p


@given(_polys, _polys, _polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)


def test_render_is_stable():
    p = x3 ** 2 * inv(1) + x2 ** 2 * x4 * inv(1)
    assert sym.render(p) == "1 * x1^-1 x2^2 x4^1 + 1 * x1^-1 x3^2"
    assert sym.render(LaurentPoly()) == "0"
    assert sym.render(sym.lp_const(-5)) == "-5"


def test_initial_seed():
    S = sym.initial_seed()
    assert S.vars == (x1, x2, x3)
    assert S.matrix == sym.initial_matrix()
    assert [sym.grading_degree(v) for v in S.vars] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_mutate_seed_examples():
    S = sym.mutate_seed(sym.initial_seed(), C0)
    assert S[C0] == inv(1) * x2 ** 2 * x4 + inv(1) * x3 ** 2
    assert sym.mutate_seed(S, C0) == sym.initial_seed()
    S = sym.mutate_seed(sym.initial_seed(), Cm1)
    assert S[Cm1] == inv(2) * x3 ** 2 * x5 + inv(2) * x1 ** 2


def test_grading_degree_examples():
    assert sym.grading_degree(x1) == (1, 0, 0)
    assert sym.grading_degree(x4) == (0, -2, 2)
    assert sym.grading_degree(inv(1) * x2 ** 2 * x4 + inv(1) * x3 ** 2) == (-1, 0, 2)
    g = cf.g_matrix(fy.parse_triple("-2/1,-1/1,inf"))
    assert tuple(row[0] for row in g) == (-1, 0, 2)


def test_grading_inhomogeneous():
    with pytest.raises(Inhomogeneous, match=r"\(1, 0, 0, 0, 0, 0\)"):
        sym.grading_degree(x1 + x2)


def test_verify_word_examples():
    r = sym.verify_word(())
    assert r.ok and r.degrees == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    r = sym.verify_word((C0,))
    assert r.ok and r.degrees[0] == (-1, 0, 2)
    r = sym.verify_word((Cm1,))
    assert r.ok and r.degrees[1] == (2, -1, 0)
    with pytest.raises(ValueError):
        sym.verify_word((C0, Cm1) * 4)


def test_verify_word_reports_mismatch(monkeypatch):
    monkeypatch.setattr(sym, "g_matrix", lambda T: ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    r = sym.verify_word((C0,))
    assert not r.ok
    assert "slot 0" in r.summary()


def test_all_words_up_to_five():
    reports = list(sym.verify_all_words(5))
    assert len(reports) == fy.tree_size(5)
    assert all(r.ok for r in reports), [r.summary() for r in reports if not r.ok]


def test_seed_involution_and_observed_positivity():
    S = sym.initial_seed()
    for k in (C0, Cm1, Cinf, C0):
        S = sym.mutate_seed(S, k)
    for k in fy.SLOTS:
        assert sym.mutate_seed(sym.mutate_seed(S, k), k) == S
    for v in S.vars:
        assert all(c > 0 for _, c in v)
        # frozen variables never carry negative exponents
        assert all(min(e[3:]) >= 0 for e, _ in v)
