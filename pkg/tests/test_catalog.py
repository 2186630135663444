import json
import re

import pytest

from qpv import catalog
from qpv.errors import UsageError
from qpv.series import LaurentSeries, parse_series

# every identity family the package claims, by topic; each topic must name live entries
COVERAGE = {
    "finite Gollnitz-Gordon": ["fin-gg-1", "fin-gg-2"],
    "little Gollnitz difference": ["little-diff"],
    "Euler": ["euler-analytic", "euler-partitions"],
    "Rogers-Ramanujan": ["rr-analytic", "rr-partitions"],
    "uniform-gap single sum": ["ug-single-sum"],
    "uniform-gap double sums": ["ug-double-floor", "ug-double-split", "ug-single-double"],
    "uniform-gap simplified double sums": ["ug-corollary"],
    "uniform-gap bounded": ["ug-bounded", "ug-polynomial"],
    "alternating sum with negative powers": ["chu-vandermonde"],
    "Gollnitz-Gordon partitions": ["gg-partitions"],
    "Gollnitz-Gordon single sums": ["gg-slater"],
    "Gollnitz-Gordon double sums": ["gg-kagan", "gg-ali", "gg-ali-kagan"],
    "Gollnitz-Gordon bounded": ["gg-ali-bdd", "gg-kagan-bdd", "gg-bmo"],
    "Gollnitz-Gordon limit": ["gg-ali-berkovich"],
    "little Gollnitz partitions": ["lg-partitions", "lg-slater"],
    "little Gollnitz double sums": ["lg-ali", "lg-alladi-berkovich", "lg-simplify"],
    "little Gollnitz bounded": ["lg-ali-bdd", "lg-even-bound"],
    "little Gollnitz transformations": ["lg-transform-1", "lg-transform-2"],
    "weighted partitions": ["phi-n"],
    "two-progression products": ["product-double-sum", "product-partitions"],
    "named two-progression products": ["product-corollary"],
    "two-term dissection": ["jtp-dissection"],
    "triple product dissection": ["jtp-cor"],
    "Rogers-Ramanujan double sum pairs": ["outlook-rr-1", "outlook-rr-2"],
    "q^2-binomial transformation": ["outlook-binomial"],
    "recurrences": ["recurrences", "summand-recurrences", "initial-values"],
}


def test_catalog_coverage():
    ids = [e.id for e in catalog.list_identities()]
    assert len(ids) == len(set(ids)) >= 25
    for topic, wanted in COVERAGE.items():
        for i in wanted:
            assert i in ids, f"{topic}: missing {i}"
    covered = {i for v in COVERAGE.values() for i in v}
    assert set(ids) <= covered, sorted(set(ids) - covered)


def test_ids_are_kebab_case_and_stable():
    ids = [e.id for e in catalog.list_identities()]
    assert all(re.fullmatch(r"[a-z0-9]+(-[a-z0-9]+)*", i) for i in ids)
    assert ids[:3] == ["fin-gg-1", "fin-gg-2", "little-diff"]
    assert ids == [e.id for e in catalog.list_identities()]


def test_defaults_lie_in_ranges():
    for e in catalog.list_identities():
        e.resolve({})


def test_verify_examples():
    assert catalog.verify("rr-analytic", {"i": 1}, 100).status == "verified"
    rep = catalog.verify("fin-gg-1", {"N": 8})
    assert rep.status == "verified" and rep.truncation is None


def test_perturbed_rhs_is_caught():
    bump = LaurentSeries.monomial(7, 3)
    rep = catalog.verify("fin-gg-1", {"N": 8}, perturb=lambda s: s + bump)
    assert rep.status == "mismatch"
    assert rep.mismatch["exponent"] == 7
    assert rep.mismatch["rhs"] - rep.mismatch["lhs"] == 3
    series = catalog.verify("rr-analytic", {"i": 2}, 30, perturb=lambda s: s + LaurentSeries.monomial(30))
    assert series.status == "mismatch" and series.mismatch["exponent"] == 30
    # beyond the truncation order nothing is claimed
    past = catalog.verify("rr-analytic", {"i": 2}, 30, perturb=lambda s: s + LaurentSeries.monomial(31))
    assert past.status == "verified"


def test_evaluator_failure_is_error_status():
    def boom(s):
        raise ZeroDivisionError("forced")

    rep = catalog.verify("little-diff", None, 10, perturb=boom)
    assert rep.status == "error" and "forced" in rep.error


def test_usage_errors():
    with pytest.raises(UsageError):
        catalog.verify("no-such-id")
    with pytest.raises(UsageError):
        catalog.verify("fin-gg-1", {"N": 41})
    with pytest.raises(UsageError):
        catalog.verify("fin-gg-1", {"M": 1})
    with pytest.raises(UsageError):
        catalog.verify("jtp-dissection", {"r": 5, "M": 3})
    with pytest.raises(UsageError):
        catalog.expand("no-such-expr")


def test_json_schema():
    d = json.loads(catalog.verify("euler-analytic", None, 20, timing=True).to_json())
    assert list(d) == ["identity", "params", "truncation", "status", "mismatch", "elapsed_ms"]
    assert d["mismatch"] is None and d["truncation"] == 20 and d["elapsed_ms"] >= 0
    bad = catalog.verify("fin-gg-2", {"N": 3}, perturb=lambda s: s + LaurentSeries.monomial(2))
    assert list(json.loads(bad.to_json())["mismatch"]) == ["exponent", "lhs", "rhs"]


def test_verify_all_is_deterministic():
    ids = ["fin-gg-1", "euler-analytic", "little-diff", "jtp-cor", "outlook-binomial"]
    one = catalog.verify_all(20, workers=1, ids=ids)
    many = catalog.verify_all(20, workers=4, ids=ids)
    assert [r.to_json() for r in one] == [r.to_json() for r in many]
    assert [r.identity for r in one] == ids
    assert catalog.verify_all(workers=3, ids=[]) == []


def test_expand_examples():
    text = catalog.expand("euler-product", None, 10)
    assert text.startswith("1 + q + q^2 + 2*q^3 + 2*q^4 + 3*q^5")
    odd_part_counts = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]
    assert parse_series(text).coeff_list(0, 10) == odd_part_counts
    for expr in catalog.EXPRESSIONS:
        s = parse_series(catalog.expand(expr, None, 0))
        if s.coeff(0) == 1:
            assert s == LaurentSeries.one(0), expr
    lg = parse_series(catalog.expand("lg-slater-1", None, 8))
    assert lg.lower >= 0


def test_expand_json():
    d = json.loads(catalog.expand("rr-product-2", None, 6, "json"))
    assert d["truncation"] == 6 and d["series"].startswith("1 + q^2")
