from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpv.errors import DomainError, MembershipError, ParseError
from qpv.partitions import (
    GG,
    LG,
    MOD,
    RESIDUE,
    UG,
    FamilyConstraint,
    MinimalConfig,
    MoveData,
    Partition,
    compose,
    configs_for_family,
    decompose,
    enumerate_family,
    gf_by_listing,
    gf_of_family,
    parse_family,
    parse_partition,
)
from qpv.series import parse_series


def brute(pred, D, max_part=None):
    """Sets of distinct parts filtered by a predicate; only valid for gap >= 1 families."""
    top = D if max_part is None else min(D, max_part)
    out = []
    for r in range(0, D + 1):
        found = False
        for c in combinations(range(1, top + 1), r):
            if sum(c) <= D:
                found = True
                if pred(c):
                    out.append(c)
        if not found and r:
            break
    return sorted(out)


def gg_ok(i):
    def ok(c):
        if c and c[0] < 2 * i - 1:
            return False
        for a, b in zip(c, c[1:]):
            if b - a < 2 or (b - a == 2 and a % 2 == 0):
                return False
        return True

    return ok


def lg_ok(i):
    def ok(c):
        if c and c[0] < i:
            return False
        for a, b in zip(c, c[1:]):
            if b - a < 2 or (b - a == 2 and a % 2 == 1):
                return False
        return True

    return ok


def ug_ok(k, l):
    return lambda c: (not c or c[0] >= l) and all(b - a >= k for a, b in zip(c, c[1:]))


def members(fam, D, max_part=None):
    return sorted(p.parts for p in enumerate_family(FamilyConstraint(fam, D, max_part)))


def test_ug01_counts_are_partition_numbers():
    norms = [p.norm for p in enumerate_family(FamilyConstraint(UG(0, 1), 4))]
    assert [norms.count(n) for n in range(5)] == [1, 1, 2, 3, 5]


def test_small_hand_lists():
    assert [p.parts for p in enumerate_family(FamilyConstraint(UG(2, 1), 4)) if p.norm == 4] == [(1, 3), (4,)]
    assert sorted(p.parts for p in enumerate_family(FamilyConstraint(GG(1), 7)) if p.norm == 7) == [(1, 6), (2, 5), (7,)]
    for fam in (UG(1, 1), GG(2), LG(1), MOD([1, 4], 5), RESIDUE(1, 2, 5)):
        assert [p.parts for p in enumerate_family(FamilyConstraint(fam, 0))] == [()]


@pytest.mark.parametrize("fam,pred", [(UG(k, l), ug_ok(k, l)) for k in (1, 2, 3) for l in (1, 2, 3)]
                         + [(GG(i), gg_ok(i)) for i in (1, 2)] + [(LG(i), lg_ok(i)) for i in (1, 2)])
def test_enumeration_matches_brute_force(fam, pred):
    assert members(fam, 24) == brute(pred, 24)
    assert members(fam, 24, 9) == brute(pred, 24, 9)


def test_gf_examples():
    s = gf_of_family(FamilyConstraint(UG(2, 1), 6)).specialize_x(1)
    assert s == parse_series("1+q+q^2+q^3+2*q^4+2*q^5+3*q^6").truncate(6)
    assert gf_of_family(FamilyConstraint(GG(2), 2)) == parse_series("1").truncate(2)
    assert gf_of_family(FamilyConstraint(LG(1), 0)) == parse_series("1").truncate(0)


@pytest.mark.parametrize("fam", [UG(0, 2), UG(2, 1), GG(1), LG(2), MOD([1, 4], 5), RESIDUE(1, 0, 3), RESIDUE(2, 1, 5)])
def test_gf_agrees_with_listing(fam):
    for bound in (None, 7):
        c = FamilyConstraint(fam, 25, bound)
        assert gf_of_family(c) == gf_by_listing(c)


def test_residue_family_colours_coinciding_classes():
    # r = 0 puts two colours on every part = s mod M
    s = gf_of_family(FamilyConstraint(RESIDUE(1, 0, 2), 3)).specialize_x(1)
    assert s.coeff_list(0, 3) == [1, 2, 3, 6]


def test_parse_partition_and_family():
    assert parse_partition("(1, 3,6)") == Partition((1, 3, 6))
    assert parse_partition("()").norm == 0
    with pytest.raises(ParseError):
        parse_partition("1,2")
    assert str(parse_family("ug(2, 1)")) == "UG(2,1)"
    assert str(parse_family("mod(1,4;5)")) == "MOD(1,4;5)"
    with pytest.raises(ParseError):
        parse_family("XX")


def test_family_membership():
    assert GG(1).contains(Partition((2, 5, 7)))
    assert not GG(1).contains(Partition((2, 4)))
    assert LG(1).contains(Partition((2, 4)))
    assert not LG(1).contains(Partition((1, 3)))


def test_compose_examples():
    p = compose(MinimalConfig("UG", 0, 2, 2, 1), MoveData(Partition(), Partition((1,))))
    assert p == Partition((2, 4)) and p.norm == 6
    cfg = MinimalConfig("GG1", 1, 2)
    assert cfg.base_partition() == Partition((1, 3, 6)) and cfg.base_norm() == 10
    q = compose(cfg, MoveData(Partition(), Partition((1,))))
    assert q == Partition((2, 5, 7)) and q.norm == 14


def test_decompose_examples():
    cfg, mv = decompose(Partition((2, 5, 7)), GG(1))
    assert (cfg.kind, cfg.m, cfg.n, mv.mu, mv.nu) == ("GG1", 1, 2, Partition(), Partition((1,)))
    cfg, mv = decompose(Partition((2, 4)), UG(2, 1))
    assert (cfg.m, cfg.n, mv.mu, mv.nu) == (0, 2, Partition(), Partition((1,)))


@pytest.mark.parametrize("kind,fam", [("UG", UG(2, 2)), ("GG1", GG(1)), ("GG2", GG(2)), ("LG1", LG(1)), ("LG2", LG(1))])
def test_base_partitions_have_empty_moves(kind, fam):
    for m in range(4):
        for n in range(5):
            cfg = MinimalConfig(kind, m, n, fam.k, fam.l)
            base = cfg.base_partition()
            assert compose(cfg, MoveData()) == base
            c2, mv = decompose(base, fam)
            assert (c2.kind, c2.m, c2.n) == (kind, m, n)
            assert mv == MoveData()


def test_bijection_needs_gap_family():
    with pytest.raises(DomainError):
        configs_for_family(MOD([1], 2))
    with pytest.raises(MembershipError):
        decompose(Partition((1, 2)), GG(1))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([UG(1, 1), UG(2, 1), UG(3, 2), GG(1), GG(2), LG(1), LG(2)]), st.data())
def test_round_trip_random_members(fam, data):
    pool = enumerate_family(FamilyConstraint(fam, 40))
    p = data.draw(st.sampled_from(pool))
    cfg, mv = decompose(p, fam)
    assert compose(cfg, mv) == p
    # an LG2 configuration inside LG1 carries the extra leading part 1
    assert p.count == cfg.m + cfg.n + (cfg.kind == "LG2")
