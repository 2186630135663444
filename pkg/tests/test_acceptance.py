"""Thirteen acceptance criteria, each compared by exact equality.

Run directly (``python3 tests/test_acceptance.py``) for a bare pass/fail listing;
under pytest the same lines appear in the terminal summary.
"""

import subprocess
import sys
import time
from collections import Counter


from qpv import closed_forms as cf
from qpv.hypergeom import jtp_dissection, outlook_binomial_identity
from qpv.partitions import (
    GG,
    LG,
    RESIDUE,
    UG,
    FamilyConstraint,
    all_compositions,
    compose,
    decompose,
    enumerate_family,
    gf_of_family,
)
from qpv.recurrence import initial_value_checks, recurrence_checks, summand_checks
from qpv.series import LaurentSeries, parse_series


def parts_in(residues, M, D):
    """Partition counts with parts in the given residue classes, by coin-change DP."""
    c = [1] + [0] * D
    for p in range(1, D + 1):
        if p % M in residues:
            for n in range(p, D + 1):
                c[n] += c[n - p]
    return LaurentSeries.from_coeffs(c, trunc=D)


def enum(fam, D, x=True):
    s = gf_of_family(FamilyConstraint(fam, D))
    return s if x else s.specialize_x(1)


def enum_bounded(fam, N, x=True):
    s = gf_of_family(FamilyConstraint(fam, N * (N + 1) // 2, N)).as_exact()
    return s if x else s.specialize_x(1)


def test_criterion_1_finite_gg_polynomials():
    for i in (1, 2):
        for N in range(13):
            assert cf.gg_bounded(i, "FIN_LHS", N) == cf.gg_bounded(i, "FIN_RHS", N), (i, N)
    table = {(1, 0): "1 + q", (1, 1): "1 + q + q^2 + q^3 + q^4", (2, 0): "1", (2, 1): "1 + q^3"}
    for (i, N), text in table.items():
        for side in ("FIN_LHS", "FIN_RHS"):
            assert cf.gg_bounded(i, side, N) == parse_series(text)


def test_criterion_2_little_difference():
    assert cf.little_difference("LHS", 60) == cf.little_difference("RHS", 60)


def test_criterion_3_euler_and_rogers_ramanujan():
    assert cf.ug_single(1, 1, 100).specialize_x(1) == cf.euler_product(100)
    assert cf.euler_product(100) == parts_in({1}, 2, 100)
    for i in (1, 2):
        s = cf.ug_single(2, i, 100).specialize_x(1)
        assert s == cf.rr_product(i, 100)
        assert s == parts_in({i, 5 - i}, 5, 100)
        assert s.truncate(60) == enum(UG(2, i), 60, x=False)


def test_criterion_4_uniform_gap_double_sums():
    D = 40
    for k in range(4):
        for l in range(1, 4):
            e = enum(UG(k, l), D)
            assert cf.ug_single(k, l, D) == e, (k, l)
            assert cf.ug_double(k, l, D, "FLOOR") == e, (k, l)
            assert cf.ug_double(k, l, D, "SPLIT") == e, (k, l)


def test_criterion_5_alternating_sum_collapses():
    for M in range(41):
        assert cf.chu_vandermonde_lhs(M) == LaurentSeries.monomial(-M * (M + 1) // 2), M


def test_criterion_6_bounded_uniform_gaps():
    exercised_chi = False
    for k in range(1, 4):
        for l in range(1, 4):
            for N in range(13):
                e = enum_bounded(UG(k, l), N)
                assert cf.ug_double_bounded(k, l, N) == e, (k, l, N)
                assert cf.ug_single_bounded(k, l, N) == e, (k, l, N)
                if N < l - k:
                    exercised_chi = True
                    assert cf.ug_double_bounded(k, l, N, chi=False) != e
    assert exercised_chi


def test_criterion_7_gollnitz_gordon():
    D = 40
    for i in (1, 2):
        res = {1: {1, 4, 7}, 2: {3, 4, 5}}[i]
        prod = cf.gg_product(i, D)
        assert prod == parts_in(res, 8, D)
        e = enum(GG(i), D)
        assert e.specialize_x(1) == prod
        assert cf.gg_sums(i, "SLATER", D) == prod
        assert cf.gg_sums(i, "KAGAN", D) == e
        assert cf.gg_sums(i, "ALI", D) == e
        assert cf.gg_sums(i, "KAGAN_T35_LHS", D) == cf.gg_sums(i, "KAGAN_T35_RHS", D)
        assert cf.gg_sums(i, "COR", D) == prod
        assert cf.gg_sums(i, "ALI", D).specialize_x(1) == cf.gg_sums(i, "COR", D)
        for N in range(15):
            b = enum_bounded(GG(i), N)
            assert cf.gg_bounded(i, "ALI_BDD", N) == b, (i, N)
            assert cf.gg_bounded(i, "KAGAN_BDD", N) == b, (i, N)
            assert cf.gg_bounded(i, "BMO", N) == enum_bounded(GG(i), 2 * N + 1, x=False), (i, N)


def test_criterion_8_little_gollnitz():
    for i in (1, 2):
        res = {1: {1, 5, 6}, 2: {2, 3, 7}}[i]
        assert cf.lg_product(i, 50) == parts_in(res, 8, 50)
        assert cf.lg_sums(i, "SLATER", 50) == cf.lg_product(i, 50)
        assert cf.lg_sums(i, "ALI", 40) == enum(LG(i), 40)
        assert cf.lg_sums(i, "AB", 40) == cf.lg_product(i, 40)
        for N in range(15):
            assert cf.lg_bounded(i, "ALI_BDD", N) == enum_bounded(LG(i), N), (i, N)
            assert cf.lg_bounded(i, "NOT_AB", N) == enum_bounded(LG(i), 2 * N, x=False), (i, N)
            assert cf.lg_bounded(i, f"T45_LHS{i}", N) == cf.lg_bounded(i, f"T45_RHS{i}", N), (i, N)
    # the x q correction term at N = 1
    assert cf.lg_bounded(1, "ALI_BDD", 1) == parse_series("1 + x*q")
    assert cf.lg_sums(1, "SIMPLIFY_LHS", 40) == cf.lg_sums(1, "SIMPLIFY_RHS", 40)


def test_criterion_9_two_progression_products():
    D = 40
    grid = [(s, r, M) for s in (1, 2) for M in range(2, 7) for r in range(M + 1)]
    for s, r, M in list(cf.PRODUCT_TRIPLETS) + grid:
        prod = cf.product_family("PRODUCT", s, r, M, D)
        assert cf.product_family("DOUBLE_SUM", s, r, M, D) == prod, (s, r, M)
        assert enum(RESIDUE(s, r, M), D) == prod, (s, r, M)
    # the four named triplets at x = 1, read with modulus 5 in the last two
    named = [parts_in({0, 1}, 2, D), parts_in({1, 3}, 4, D), parts_in({1, 4}, 5, D), parts_in({2, 3}, 5, D)]
    for (s, r, M), want in zip(cf.PRODUCT_TRIPLETS, named):
        assert cf.product_family("DOUBLE_SUM", s, r, M, D).specialize_x(1) == want
    for s in (1, 2, 3):
        for M in range(1, 7):
            for r in range(M + 1):
                assert jtp_dissection("LHS", s, r, M, D) == jtp_dissection("RHS", s, r, M, D), (s, r, M)
    for s in (1, 2, 3):
        for r in range(4):
            assert cf.jtp_corollary("LHS", s, r, 60) == cf.jtp_corollary("RHS", s, r, 60), (s, r)


def test_criterion_10_outlook_identities():
    for i in (1, 2):
        lhs = cf.outlook_rr(i, "LHS", 40)
        assert lhs == cf.outlook_rr(i, "RHS", 40)
        assert lhs == cf.rr_product(i, 40)
    for m in range(9):
        for n in range(m + 1):
            lhs, rhs = outlook_binomial_identity(m, n)
            assert lhs.is_exact and lhs == rhs, (m, n)


FAMILIES = [UG(k, l) for k in range(4) for l in range(1, 4)] + [GG(1), GG(2), LG(1), LG(2)]


def test_criterion_11_bijections():
    D = 30
    for fam in FAMILIES:
        members = enumerate_family(FamilyConstraint(fam, D))
        for p in members:
            cfg, mv = decompose(p, fam)
            assert compose(cfg, mv) == p, (fam, p)
        image = Counter(p for _, _, p in all_compositions(fam, D))
        assert set(image) == set(members), fam
        assert max(image.values()) == 1, fam


def test_criterion_12_recurrences():
    for chk in recurrence_checks():
        rep = chk.run()
        assert rep.passed, (chk.name, [r.index for r in rep.failures])
    for chk in summand_checks():
        rep = chk.run()
        assert rep.passed, (chk.name, [r.index for r in rep.failures][:5])
    for rep in initial_value_checks():
        assert rep.passed, rep.title


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "qpv.cli", *args], capture_output=True, text=True)


def test_criterion_13_verify_all_cli():
    start = time.monotonic()
    one = _cli("verify-all", "--workers", "1")
    elapsed = time.monotonic() - start
    assert one.returncode == 0, one.stdout + one.stderr
    assert elapsed < 300
    four = _cli("verify-all", "--workers", "4")
    assert four.returncode == 0
    assert four.stdout == one.stdout
    j1 = _cli("verify-all", "--workers", "1", "--format", "json")
    j8 = _cli("verify-all", "--workers", "8", "--format", "json")
    assert j1.returncode == j8.returncode == 0
    assert j1.stdout == j8.stdout


if __name__ == "__main__":
    crits = sorted(
        (int(n.split("_")[2]), n, f) for n, f in dict(globals()).items() if n.startswith("test_criterion_")
    )
    failed = 0
    for num, name, fn in crits:
        try:
            fn()
            verdict = "PASS"
        except Exception as exc:  # report and keep going
            verdict = f"FAIL ({type(exc).__name__}: {exc})"
            failed += 1
        print(f"criterion {num:>2}  {verdict}  {' '.join(name.split('_')[3:])}")
    sys.exit(1 if failed else 0)
