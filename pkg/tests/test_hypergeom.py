import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpv.errors import DivergenceError, PoleError
from qpv.hypergeom import (
    HypergeomSpec,
    binomial_identity_check,
    jtp_dissection,
    outlook_binomial_identity,
    phi,
    rphis,
    rphis_fraction,
    term,
)
from qpv.series import (
    LaurentSeries,
    exact_divide,
    infinite_product,
    inv_infinite_product,
    mono,
    mono_pochhammer,
    qbinomial,
    series_invert,
)

ONE = LaurentSeries.one()


def test_absent_argument_gives_one():
    spec = HypergeomSpec((mono(1),), (mono(2),), 1, None)
    assert spec.termination() == 0
    # a terminating sum is returned exactly whatever the requested order
    assert rphis(spec, 10) == ONE


def test_top_one_kills_higher_terms():
    spec = phi([-2, 0], [-2], 2, mono(1, -1))
    assert rphis(spec) == ONE


def test_q_chu_vandermonde():
    # 2phi1(q^-n, b; c; q, c q^n / b) = (c/b; q)_n / (c; q)_n
    for n in range(6):
        for b, c in ((1, 3), (2, 5)):
            spec = phi([-n, b], [c], 1, mono(c + n - b))
            num, den = rphis_fraction(spec)
            lhs = exact_divide(num * mono_pochhammer(mono(c), mono(1), n), den)
            assert lhs == mono_pochhammer(mono(c - b), mono(1), n), (n, b, c)


def test_q_gauss_nonterminating():
    # 2phi1(a, b; c; q, c/(ab)) = (c/a, c/b; q)_inf / (c, c/(ab); q)_inf with a=q, b=q^2, c=q^5
    D = 40
    lhs = rphis(phi([1, 2], [5], 1, mono(2)), D)
    num = infinite_product([(1, 4, 1), (1, 3, 1)], D)
    den = infinite_product([(1, 5, 1), (1, 2, 1)], D)
    assert lhs == (num * series_invert(den, D)).truncate(D)


def test_divergent_argument_rejected():
    with pytest.raises(DivergenceError):
        rphis(phi([1], [2], 1, mono(0)), 10)


def test_pole_in_bottom():
    with pytest.raises(PoleError):
        rphis(phi([-3], [-1], 1, mono(1)))


def test_term_zero_is_one():
    num, den = term(phi([1, 2], [3], 1, mono(1)), 0)
    assert num == den == ONE


def test_dissection_small_case():
    D = 40
    rhs = jtp_dissection("RHS", 1, 1, 4, D).specialize_x(1)
    want = infinite_product([(-1, 2, 4)], D) * inv_infinite_product([(1, 1, 4)], D)
    assert rhs == want.truncate(D)


def test_dissection_at_x_zero():
    for s, r, M in ((1, 1, 5), (2, 0, 3)):
        for side in ("LHS", "RHS"):
            assert jtp_dissection(side, s, r, M, 20).specialize_x(0) == LaurentSeries.one(20)


@pytest.mark.parametrize("s,r,M", [(1, 1, 5), (1, 3, 5)])
def test_dissection_named_cases(s, r, M):
    lhs = jtp_dissection("LHS", s, r, M, 50, x_marked=False)
    assert lhs == jtp_dissection("RHS", s, r, M, 50, x_marked=False)


def test_binomial_identity_small_cases():
    assert outlook_binomial_identity(0, 0) == (ONE, ONE)
    assert outlook_binomial_identity(1, 1) == (ONE, ONE)
    lhs, rhs = outlook_binomial_identity(3, 1)
    assert lhs.is_exact and lhs == rhs
    assert binomial_identity_check(5, 3).equal


def test_binomial_identity_printed_parameter_fails():
    # one term of the 4phi3 cannot tell the two readings apart; two can
    assert outlook_binomial_identity(3, 1, printed=True)[0] == outlook_binomial_identity(3, 1, printed=True)[1]
    lhs, rhs = outlook_binomial_identity(4, 2, printed=True)
    assert lhs != rhs


def test_binomial_identity_literal_form_hits_pole():
    with pytest.raises(PoleError):
        outlook_binomial_identity(2, 2, merged=False)
    lhs, rhs = outlook_binomial_identity(6, 2, merged=False)
    assert lhs == rhs


def test_binomial_lhs_is_q2_binomial_times_sum():
    # at n = 0 both sides are 1; at n = m the 2phi1 has a single term
    for m in range(5):
        assert outlook_binomial_identity(m, 0) == (ONE, ONE)
        assert outlook_binomial_identity(m, m)[0] == qbinomial(m, 0, 2)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(1, 6), st.data())
def test_dissection_random(s, M, data):
    r = data.draw(st.integers(0, M))
    assert jtp_dissection("LHS", s, r, M, 30) == jtp_dissection("RHS", s, r, M, 30)
