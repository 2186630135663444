import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpv import closed_forms as cf
from qpv.errors import DomainError
from qpv.partitions import GG, UG, FamilyConstraint, gf_of_family
from qpv.series import LaurentSeries, mono, parse_series

P = parse_series


def test_norm_forms():
    assert cf.norm_eval("G", 0, 0) == 0
    assert cf.norm_eval("G", 1, 2) == 10 == sum((1, 3, 6))
    assert cf.norm_eval("Q", 0, 2, k=2, l=1) == 4 == sum((1, 3))
    assert cf.norm_eval("L", 0, 1) == 2


@settings(max_examples=40)
@given(st.integers(0, 3), st.integers(1, 3), st.integers(0, 5), st.integers(0, 6))
def test_uniform_norm_is_base_partition_norm(k, l, m, n):
    from qpv.partitions import MinimalConfig

    assert cf.norm_Q(k, l, m, n) == MinimalConfig("UG", m, n, k, l).base_norm()


def test_ug_single_small():
    assert cf.ug_single(2, 1, 6).specialize_x(1) == P("1+q+q^2+q^3+2*q^4+2*q^5+3*q^6").truncate(6)
    assert cf.ug_single(1, 1, 50).specialize_x(1) == cf.euler_product(50)


def test_bounded_below_threshold_is_one():
    # N < l - k: no part fits, only the empty partition remains
    for N in range(2):
        assert cf.ug_single_bounded(1, 3, N) == LaurentSeries.one()
        assert cf.ug_double_bounded(1, 3, N) == LaurentSeries.one()


def test_bounded_tends_to_unbounded():
    D = 20
    for k, l in ((1, 1), (2, 1), (3, 2)):
        assert cf.ug_double_bounded(k, l, D + l).truncate(D) == cf.ug_double(k, l, D)


def test_floor_and_split_agree():
    for k in range(4):
        for l in range(1, 4):
            assert cf.ug_double(k, l, 30, "FLOOR") == cf.ug_double(k, l, 30, "SPLIT")


def test_alternating_sum_small_cases():
    assert cf.chu_vandermonde_lhs(0) == LaurentSeries.one()
    assert cf.chu_vandermonde_lhs(1) == P("q^-1")
    assert cf.chu_vandermonde_lhs(5) == P("q^-15")


def test_gg_variants_at_x_equal_one():
    D = 40
    e = gf_of_family(FamilyConstraint(GG(1), D)).specialize_x(1)
    for v in ("SLATER", "KAGAN", "ALI"):
        assert cf.gg_sums(1, v, D).specialize_x(1) == e
    assert cf.gg_sums(2, "SLATER", 2) == LaurentSeries.one(2)


def test_regrouped_double_sums_and_printed_exponents():
    D = 30
    for i in (1, 2):
        assert cf.gg_sums(i, "KAGAN_T35_LHS", D) == cf.gg_sums(i, "KAGAN_T35_RHS", D)
        assert cf.gg_sums(i, "KAGAN_T35_RHS", D, printed=True) != cf.gg_sums(i, "KAGAN_T35_LHS", D)


def test_finite_gg_initial_values():
    assert cf.gg_bounded(1, "FIN_LHS", 0) == P("1+q")
    assert cf.gg_bounded(2, "FIN_LHS", 0) == LaurentSeries.one()
    assert cf.gg_bounded(1, "FIN_LHS", 1) == P("1+q+q^2+q^3+q^4")
    assert cf.gg_bounded(2, "FIN_LHS", 1) == P("1+q^3")


def test_gg2_bounded_needs_empty_partition_at_zero():
    assert cf.gg_bounded(2, "ALI_BDD", 0) == LaurentSeries.one()
    assert cf.gg_bounded(2, "ALI_BDD", 0, corrections=False).is_zero()


def test_lg_transform_values():
    assert cf.lg_bounded(1, "T45_LHS1", 1) == P("1+q^2")
    assert cf.lg_bounded(2, "T45_LHS2", 1) == P("q")
    for N in range(3, 8):
        assert cf.lg_bounded(2, "T45_RHS2", N, printed=True) != cf.lg_bounded(2, "T45_LHS2", N)


def test_lg_small_values():
    assert cf.lg_sums(1, "ALI", 40).specialize_x(1) == cf.lg_product(1, 40)
    assert cf.lg_bounded(1, "ALI_BDD", 1) == P("1+x*q")
    slater = cf.lg_sums(1, "SLATER", 8)
    assert slater.lower == 0


def test_little_difference_lowest_terms():
    lhs, rhs = cf.little_difference("LHS", 10), cf.little_difference("RHS", 10)
    assert lhs.lower == rhs.lower == 1 and lhs.coeff(1) == rhs.coeff(1) == 1


def test_phi_small_cases():
    one = mono(1)
    assert cf.phi_n(0, one, one, one, one, 10) == LaurentSeries.one(10)
    # a single column of weight q each
    want = LaurentSeries.from_coeffs([1] * 11, trunc=10)
    assert cf.phi_n(1, one, one, one, one, 10) == want
    assert cf.phi_weight_oracle(1, one, one, one, one, 10) == want


@pytest.mark.parametrize("N,r,M", [(2, 1, 2), (3, 1, 3), (4, 2, 5), (5, 1, 4)])
def test_phi_against_weight_oracle(N, r, M):
    args = (mono(r), mono(r), mono(M - r), mono(M - r))
    assert cf.phi_n(N, *args, 30) == cf.phi_weight_oracle(N, *args, 30)


def test_product_family_small():
    prod = cf.product_family("PRODUCT", 1, 1, 2, 6).specialize_x(1)
    assert prod.coeff_list(0, 6) == [1, 1, 2, 3, 5, 7, 11]
    assert cf.product_family("DOUBLE_SUM", 1, 1, 2, 6).specialize_x(1) == prod
    # one-part partitions: parts = s or s + r mod M
    s, r, M, D = 2, 1, 5, 30
    one = cf.product_family("PRODUCT", s, r, M, D).x_slice(1)
    want = LaurentSeries.zero(D)
    for p in range(1, D + 1):
        want = want + LaurentSeries.monomial(p, (p % M == s % M) + (p % M == (s + r) % M))
    assert one == want.truncate(D)
    with pytest.raises(DomainError):
        cf.product_family("PRODUCT", 1, 4, 3, 10)


def test_jtp_corollary_small():
    assert cf.jtp_corollary("LHS", 1, 0, 20).coeff(0) == 1
    for s, r in ((1, 1), (2, 1)):
        assert cf.jtp_corollary("LHS", s, r, 60) == cf.jtp_corollary("RHS", s, r, 60)


def test_outlook_rr_low_terms():
    two = cf.outlook_rr(2, "LHS", 10)
    assert two.coeff(0) == 1 and two.coeff(1) == 0 and two.coeff(2) == 1
    assert cf.outlook_rr(1, "LHS", 5).coeff(0) == cf.outlook_rr(1, "RHS", 5).coeff(0) == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 9))
def test_bounded_sums_match_bounded_enumeration(k, l, N):
    e = gf_of_family(FamilyConstraint(UG(k, l), N * (N + 1) // 2, N)).as_exact()
    assert cf.ug_double_bounded(k, l, N) == e
    assert cf.ug_single_bounded(k, l, N) == e
