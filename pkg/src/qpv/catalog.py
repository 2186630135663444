"""Registry of identities, each with two independently evaluated sides."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import closed_forms as cf
from .errors import UsageError
from .hypergeom import jtp_dissection, outlook_binomial_identity
from .partitions import GG, LG, MOD, RESIDUE, UG, Family, FamilyConstraint, gf_of_family
from .recurrence import initial_value_checks, recurrence_checks, summand_checks
from .series import LaurentSeries, XPoly, first_mismatch, mono, render_series

DEFAULT_TRUNC = 60
DEFAULT_N = 10


@dataclass(frozen=True)
class Param:
    name: str
    default: int
    lo: int
    hi: int

    def check(self, v: int) -> int:
        if not self.lo <= v <= self.hi:
            raise UsageError(f"--{self.name} must lie in [{self.lo}, {self.hi}], got {v}")
        return v


Evaluator = Callable[[dict, int], LaurentSeries]


@dataclass(frozen=True)
class IdentityEntry:
    """``exact`` entries are finite identities compared as whole polynomials,
    so the truncation order plays no part in them."""

    id: str
    description: str
    anchor: str
    params: tuple[Param, ...]
    lhs: Evaluator | None = None
    rhs: Evaluator | None = None
    exact: bool = False
    trunc: int = DEFAULT_TRUNC
    checker: Callable[[dict], "tuple[bool, dict | None]"] | None = None
    # cross-parameter condition, as (predicate, message)
    requires: tuple[Callable[[dict], bool], str] | None = None

    def resolve(self, given: dict | None = None) -> dict:
        given = dict(given or {})
        known = {p.name for p in self.params}
        extra = set(given) - known
        if extra:
            raise UsageError(f"{self.id} has no parameter(s) {', '.join(sorted(extra))}")
        out = {p.name: p.check(int(given.get(p.name, p.default))) for p in self.params}
        if self.requires is not None and not self.requires[0](out):
            raise UsageError(f"{self.id} needs {self.requires[1]}")
        return out


@dataclass
class VerificationReport:
    identity: str
    params: dict
    truncation: int | None
    status: str
    mismatch: dict | None = None
    elapsed_ms: float | None = None
    error: str | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "truncation": self.truncation,
            "status": self.status,
            "mismatch": self.mismatch,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        t = "exact" if self.truncation is None else f"D={self.truncation}"
        line = f"{self.identity:<24} {self.status:<9} {t:<6} {ps}".rstrip()
        if self.mismatch:
            m = self.mismatch
            line += f"  first difference at q^{m['exponent']}: lhs {m['lhs']}, rhs {m['rhs']}"
        if self.error:
            line += f"  ({self.error})"
        if self.elapsed_ms is not None:
            line += f"  [{self.elapsed_ms:.0f} ms]"
        return line


# ---------------------------------------------------------------------------
# small evaluator builders
# ---------------------------------------------------------------------------


def _x1(s: LaurentSeries) -> LaurentSeries:
    return s.specialize_x(1)


def _enum(make: Callable[[dict], Family], x: bool = True, bound: Callable[[dict], int] | None = None) -> Evaluator:
    def ev(p, D):
        c = FamilyConstraint(make(p), D, None if bound is None else bound(p))
        s = gf_of_family(c)
        return s if x else _x1(s)

    return ev


def _enum_exact(make: Callable[[dict], Family], bound: Callable[[dict], int], x: bool = True) -> Evaluator:
    # with positive gaps and parts <= N there are at most N distinct parts,
    # so nothing lives above N(N+1)/2
    def ev(p, D):
        N = max(bound(p), 0)
        s = gf_of_family(FamilyConstraint(make(p), N * (N + 1) // 2, N)).as_exact()
        return s if x else _x1(s)

    return ev


K = Param("k", 2, 1, 3)
K0 = Param("k", 2, 0, 3)
L = Param("l", 1, 1, 3)
N = Param("N", DEFAULT_N, 0, 40)
I = Param("i", 1, 1, 2)

_R_LE_M = (lambda p: p["r"] <= p["M"], "r <= M")

UG_FORMS = ((0, 1), (1, 1), (2, 1), (2, 2))


def _rec_checker(kind: str):
    def run(p):
        if kind == "sequence":
            reps = [c.run() for c in recurrence_checks()]
        elif kind == "summand":
            reps = [c.run() for c in summand_checks()]
        else:
            reps = initial_value_checks()
        for rep in reps:
            for row in rep.failures:
                e = row.residual.lower
                c = row.residual.coeff(e)
                return False, {"exponent": e, "lhs": _jsonable(c), "rhs": 0, "where": f"{rep.title} at {row.index}"}
        return True, None

    return run


def _binomial_checker(p):
    lhs, rhs = outlook_binomial_identity(p["m"], p["n"])
    if lhs == rhs:
        return True, None
    e, a, b = first_mismatch(lhs, rhs)
    return False, {"exponent": e, "lhs": _jsonable(a), "rhs": _jsonable(b)}


def _jsonable(c):
    if isinstance(c, XPoly):
        return str(c)
    return c


ENTRIES: tuple[IdentityEntry, ...] = (
    # finite Gollnitz-Gordon identities and the little Gollnitz difference
    IdentityEntry("fin-gg-1", "finite GG identity, q-binomial base q and q^4 vs base q^2 (i=1)", "finite GG",
                  (N,), lambda p, D: cf.gg_bounded(1, "FIN_LHS", p["N"]), lambda p, D: cf.gg_bounded(1, "FIN_RHS", p["N"]), exact=True),
    IdentityEntry("fin-gg-2", "finite GG identity (i=2)", "finite GG",
                  (N,), lambda p, D: cf.gg_bounded(2, "FIN_LHS", p["N"]), lambda p, D: cf.gg_bounded(2, "FIN_RHS", p["N"]), exact=True),
    IdentityEntry("little-diff", "double sum equals the difference of the two little Gollnitz products", "little Gollnitz difference",
                  (), lambda p, D: cf.little_difference("LHS", D), lambda p, D: cf.little_difference("RHS", D)),
    # uniform gaps
    IdentityEntry("euler-analytic", "sum q^{j(j+1)/2}/(q;q)_j = 1/(q;q^2)_inf", "Euler",
                  (), lambda p, D: _x1(cf.ug_single(1, 1, D)), lambda p, D: cf.euler_product(D), trunc=100),
    IdentityEntry("euler-partitions", "distinct parts vs odd parts, by enumeration", "Euler",
                  (), _enum(lambda p: UG(1, 1), x=False), _enum(lambda p: MOD([1], 2), x=False)),
    IdentityEntry("rr-analytic", "Rogers-Ramanujan sum side vs product side", "Rogers-Ramanujan",
                  (I,), lambda p, D: _x1(cf.ug_single(2, p["i"], D)), lambda p, D: cf.rr_product(p["i"], D), trunc=100),
    IdentityEntry("rr-partitions", "gap-2 partitions vs parts +-i mod 5, by enumeration", "Rogers-Ramanujan",
                  (I,), _enum(lambda p: UG(2, p["i"]), x=False), _enum(lambda p: MOD([p["i"], 5 - p["i"]], 5), x=False)),
    IdentityEntry("ug-single-sum", "x-marked uniform-gap generating function vs its single sum", "uniform gaps",
                  (K0, L), _enum(lambda p: UG(p["k"], p["l"])), lambda p, D: cf.ug_single(p["k"], p["l"], D), trunc=40),
    IdentityEntry("ug-double-floor", "uniform-gap generating function vs the floor double sum", "uniform gaps",
                  (K0, L), _enum(lambda p: UG(p["k"], p["l"])), lambda p, D: cf.ug_double(p["k"], p["l"], D, "FLOOR"), trunc=40),
    IdentityEntry("ug-double-split", "uniform-gap generating function vs the parity-split double sum", "uniform gaps",
                  (K0, L), _enum(lambda p: UG(p["k"], p["l"])), lambda p, D: cf.ug_double(p["k"], p["l"], D, "SPLIT"), trunc=40),
    IdentityEntry("ug-corollary", "the four simplified double sums (form 0..3 is (k,l) = (0,1),(1,1),(2,1),(2,2))", "uniform gaps",
                  (Param("form", 2, 0, 3),), lambda p, D: cf.ug_corollary(*UG_FORMS[p["form"]], D),
                  lambda p, D: cf.ug_single(*UG_FORMS[p["form"]], D), trunc=40),
    IdentityEntry("ug-single-double", "single sum equals floor double sum as Z[x] series", "uniform gaps",
                  (K0, L), lambda p, D: cf.ug_single(p["k"], p["l"], D), lambda p, D: cf.ug_double(p["k"], p["l"], D, "FLOOR"), trunc=40),
    IdentityEntry("ug-bounded", "bounded enumeration vs bounded double sum with the empty-partition correction", "uniform gaps, bounded",
                  (K, L, N), _enum_exact(lambda p: UG(p["k"], p["l"]), lambda p: p["N"]),
                  lambda p, D: cf.ug_double_bounded(p["k"], p["l"], p["N"]), exact=True),
    IdentityEntry("ug-polynomial", "bounded single sum equals bounded double sum", "uniform gaps, bounded",
                  (K, L, N), lambda p, D: cf.ug_single_bounded(p["k"], p["l"], p["N"], chi=False),
                  lambda p, D: cf.ug_double_bounded(p["k"], p["l"], p["N"], chi=False), exact=True),
    IdentityEntry("chu-vandermonde", "alternating sum over (q^-M;q)_n collapses to q^{-M(M+1)/2}", "uniform gaps, k = 0",
                  (Param("M", 12, 0, 60),), lambda p, D: cf.chu_vandermonde_lhs(p["M"]),
                  lambda p, D: LaurentSeries.monomial(-p["M"] * (p["M"] + 1) // 2), exact=True),
    # Gollnitz-Gordon
    IdentityEntry("gg-partitions", "GG partitions vs parts 2+-1... mod 8, by enumeration", "Gollnitz-Gordon",
                  (I,), _enum(lambda p: GG(p["i"]), x=False), _enum(lambda p: MOD([2 + (-1) ** p["i"], 4, 6 - (-1) ** p["i"]], 8), x=False)),
    IdentityEntry("gg-slater", "Slater-type single sums vs GG products", "Gollnitz-Gordon",
                  (I,), lambda p, D: cf.gg_sums(p["i"], "SLATER", D), lambda p, D: cf.gg_product(p["i"], D)),
    IdentityEntry("gg-kagan", "Kursungoz double sum vs x-marked GG enumeration", "Gollnitz-Gordon",
                  (I,), lambda p, D: cf.gg_sums(p["i"], "KAGAN", D), _enum(lambda p: GG(p["i"])), trunc=40),
    IdentityEntry("gg-ali", "floor double sum vs x-marked GG enumeration", "Gollnitz-Gordon",
                  (I,), lambda p, D: cf.gg_sums(p["i"], "ALI", D), _enum(lambda p: GG(p["i"])), trunc=40),
    IdentityEntry("gg-ali-kagan", "the two double sums regrouped over common denominators", "Gollnitz-Gordon",
                  (I,), lambda p, D: cf.gg_sums(p["i"], "KAGAN_T35_LHS", D), lambda p, D: cf.gg_sums(p["i"], "KAGAN_T35_RHS", D), trunc=40),
    IdentityEntry("gg-ali-bdd", "bounded floor double sum vs bounded GG enumeration", "Gollnitz-Gordon, bounded",
                  (I, Param("N", DEFAULT_N, 0, 20)), lambda p, D: cf.gg_bounded(p["i"], "ALI_BDD", p["N"]),
                  _enum_exact(lambda p: GG(p["i"]), lambda p: p["N"]), exact=True),
    IdentityEntry("gg-kagan-bdd", "bounded Kursungoz double sum vs bounded GG enumeration", "Gollnitz-Gordon, bounded",
                  (I, Param("N", DEFAULT_N, 0, 20)), lambda p, D: cf.gg_bounded(p["i"], "KAGAN_BDD", p["N"]),
                  _enum_exact(lambda p: GG(p["i"]), lambda p: p["N"]), exact=True),
    IdentityEntry("gg-bmo", "Berkovich-McCoy-Orrick polynomials vs GG enumeration with parts <= 2N+1", "Gollnitz-Gordon, bounded",
                  (I, Param("N", 6, 0, 10)), lambda p, D: cf.gg_bounded(p["i"], "BMO", p["N"]),
                  _enum_exact(lambda p: GG(p["i"]), lambda p: 2 * p["N"] + 1, x=False), exact=True),
    IdentityEntry("gg-ali-berkovich", "the N -> infinity limit of the finite GG identity", "Gollnitz-Gordon",
                  (I,), lambda p, D: _x1(cf.gg_sums(p["i"], "ALI", D)), lambda p, D: cf.gg_sums(p["i"], "COR", D), trunc=40),
    # little Gollnitz
    IdentityEntry("lg-partitions", "little Gollnitz partitions vs parts i, 4-(-1)^i, 5+i mod 8", "little Gollnitz",
                  (I,), _enum(lambda p: LG(p["i"]), x=False), _enum(lambda p: MOD([p["i"], 4 - (-1) ** p["i"], 5 + p["i"]], 8), x=False)),
    IdentityEntry("lg-slater", "Slater-type single sums with Laurent factors vs the products", "little Gollnitz",
                  (I,), lambda p, D: cf.lg_sums(p["i"], "SLATER", D), lambda p, D: cf.lg_product(p["i"], D), trunc=50),
    IdentityEntry("lg-ali", "floor double sum vs x-marked little Gollnitz enumeration", "little Gollnitz",
                  (I,), lambda p, D: cf.lg_sums(p["i"], "ALI", D), _enum(lambda p: LG(p["i"])), trunc=40),
    IdentityEntry("lg-ali-bdd", "bounded double sum (with the x q correction at N=1) vs bounded enumeration", "little Gollnitz, bounded",
                  (I, Param("N", DEFAULT_N, 0, 20)), lambda p, D: cf.lg_bounded(p["i"], "ALI_BDD", p["N"]),
                  _enum_exact(lambda p: LG(p["i"]), lambda p: p["N"]), exact=True),
    IdentityEntry("lg-alladi-berkovich", "Alladi-Berkovich double sums vs the products", "little Gollnitz",
                  (I,), lambda p, D: cf.lg_sums(p["i"], "AB", D), lambda p, D: cf.lg_product(p["i"], D), trunc=40),
    IdentityEntry("lg-transform-1", "first finite little Gollnitz transformation", "little Gollnitz, bounded",
                  (N,), lambda p, D: cf.lg_bounded(1, "T45_LHS1", p["N"]), lambda p, D: cf.lg_bounded(1, "T45_RHS1", p["N"]), exact=True),
    IdentityEntry("lg-transform-2", "second finite little Gollnitz transformation", "little Gollnitz, bounded",
                  (N,), lambda p, D: cf.lg_bounded(2, "T45_LHS2", p["N"]), lambda p, D: cf.lg_bounded(2, "T45_RHS2", p["N"]), exact=True),
    IdentityEntry("lg-even-bound", "base-q^2 polynomials vs little Gollnitz enumeration with parts <= 2N", "little Gollnitz, bounded",
                  (I, Param("N", 6, 0, 10)), lambda p, D: cf.lg_bounded(p["i"], "NOT_AB", p["N"]),
                  _enum_exact(lambda p: LG(p["i"]), lambda p: 2 * p["N"], x=False), exact=True),
    IdentityEntry("lg-simplify", "two base-q^2 double sums related by series manipulation", "little Gollnitz",
                  (), lambda p, D: cf.lg_sums(1, "SIMPLIFY_LHS", D), lambda p, D: cf.lg_sums(1, "SIMPLIFY_RHS", D), trunc=40),
    # products of two progressions
    IdentityEntry("phi-n", "finite sum for Stanley-Boulet weights vs cell-weight enumeration, a=b=q^r, c=d=q^(M-r)", "weighted partitions",
                  (Param("N", 6, 0, 12), Param("r", 1, 1, 5), Param("M", 3, 2, 6)),
                  lambda p, D: cf.phi_n(p["N"], mono(p["r"]), mono(p["r"]), mono(p["M"] - p["r"]), mono(p["M"] - p["r"]), D),
                  lambda p, D: cf.phi_weight_oracle(p["N"], mono(p["r"]), mono(p["r"]), mono(p["M"] - p["r"]), mono(p["M"] - p["r"]), D), trunc=40,
                  requires=(lambda p: p["r"] < p["M"], "r < M")),
    IdentityEntry("product-double-sum", "1/(xq^s, xq^(s+r); q^M)_inf vs its weighted double sum", "products of two progressions",
                  (Param("s", 1, 1, 3), Param("r", 1, 0, 6), Param("M", 2, 1, 6)),
                  lambda p, D: cf.product_family("PRODUCT", p["s"], p["r"], p["M"], D),
                  lambda p, D: cf.product_family("DOUBLE_SUM", p["s"], p["r"], p["M"], D), trunc=40, requires=_R_LE_M),
    IdentityEntry("product-partitions", "1/(xq^s, xq^(s+r); q^M)_inf vs enumeration of the two-progression family", "products of two progressions",
                  (Param("s", 1, 1, 3), Param("r", 1, 0, 6), Param("M", 2, 1, 6)),
                  lambda p, D: cf.product_family("PRODUCT", p["s"], p["r"], p["M"], D),
                  _enum(lambda p: RESIDUE(p["s"], p["r"], p["M"])), trunc=40, requires=_R_LE_M),
    IdentityEntry("product-corollary", "the four named triplets (t = 0..3) at x = 1", "products of two progressions",
                  (Param("t", 0, 0, 3),),
                  lambda p, D: _x1(cf.product_family("PRODUCT", *cf.PRODUCT_TRIPLETS[p["t"]], D)),
                  lambda p, D: _x1(cf.product_family("DOUBLE_SUM", *cf.PRODUCT_TRIPLETS[p["t"]], D)), trunc=40),
    IdentityEntry("jtp-dissection", "two-term 2phi1 dissection of (-xq^(s+r); q^M)_inf / (xq^s; q^M)_inf", "triple product",
                  (Param("s", 1, 1, 3), Param("r", 1, 0, 6), Param("M", 4, 1, 6)),
                  lambda p, D: jtp_dissection("LHS", p["s"], p["r"], p["M"], D),
                  lambda p, D: jtp_dissection("RHS", p["s"], p["r"], p["M"], D), trunc=40, requires=_R_LE_M),
    IdentityEntry("jtp-cor", "even/odd dissection of a triple product", "triple product",
                  (Param("s", 1, 1, 3), Param("r", 1, 0, 3)),
                  lambda p, D: cf.jtp_corollary("LHS", p["s"], p["r"], D), lambda p, D: cf.jtp_corollary("RHS", p["s"], p["r"], D)),
    # outlook
    IdentityEntry("outlook-rr-1", "first Rogers-Ramanujan double sum pair", "outlook",
                  (), lambda p, D: cf.outlook_rr(1, "LHS", D), lambda p, D: cf.outlook_rr(1, "RHS", D), trunc=40),
    IdentityEntry("outlook-rr-2", "second Rogers-Ramanujan double sum pair", "outlook",
                  (), lambda p, D: cf.outlook_rr(2, "LHS", D), lambda p, D: cf.outlook_rr(2, "RHS", D), trunc=40),
    IdentityEntry("outlook-binomial", "q^2-binomial times 2phi1 vs q-binomial times 4phi3", "outlook",
                  (Param("m", 4, 0, 8), Param("n", 2, 0, 8)), exact=True, checker=_binomial_checker,
                  requires=(lambda p: p["n"] <= p["m"], "n <= m")),
    # recurrences
    IdentityEntry("recurrences", "every sequence recurrence on its declared range", "recurrences",
                  (), exact=True, checker=_rec_checker("sequence")),
    IdentityEntry("summand-recurrences", "every summand recurrence on its grid", "recurrences",
                  (), exact=True, checker=_rec_checker("summand")),
    IdentityEntry("initial-values", "initial-value tables of the finite identities", "recurrences",
                  (), exact=True, checker=_rec_checker("initial")),
)

_BY_ID = {e.id: e for e in ENTRIES}
assert len(_BY_ID) == len(ENTRIES), "duplicate catalog ids"


def list_identities() -> list[IdentityEntry]:
    return list(ENTRIES)


def get(identity: str) -> IdentityEntry:
    try:
        return _BY_ID[identity]
    except KeyError:
        raise UsageError(f"unknown identity {identity!r}") from None


def verify(identity: str, params: dict | None = None, D: int | None = None, timing: bool = False,
           perturb: Callable[[LaurentSeries], LaurentSeries] | None = None) -> VerificationReport:
    """Evaluate both sides of one identity and compare them.

    ``perturb`` is applied to the right side before comparing; it exists so
    the harness can be tested against a deliberately wrong identity.
    """
    entry = get(identity)
    p = entry.resolve(params)
    trunc = None if entry.exact else (entry.trunc if D is None else D)
    start = time.perf_counter()
    rep = VerificationReport(identity, p, trunc, "verified")
    try:
        if entry.checker is not None:
            ok, mm = entry.checker(p)
        else:
            lhs = entry.lhs(p, trunc)
            rhs = entry.rhs(p, trunc)
            if perturb is not None:
                rhs = perturb(rhs)
            if trunc is None:
                hit = None if lhs == rhs else (first_mismatch(lhs, rhs) or (None, None, None))
            else:
                short = [x.trunc for x in (lhs, rhs) if x.trunc is not None and x.trunc < trunc]
                if short:
                    raise ArithmeticError(f"a side is only known through q^{min(short)}")
                hit = first_mismatch(lhs, rhs, trunc)
            ok = hit is None
            mm = None if ok else {"exponent": hit[0], "lhs": _jsonable(hit[1]), "rhs": _jsonable(hit[2])}
        if not ok:
            rep.status = "mismatch"
            rep.mismatch = {k: mm[k] for k in ("exponent", "lhs", "rhs")}
            rep.error = mm.get("where")
    except Exception as exc:  # evaluator failures are report content
        rep.status = "error"
        rep.error = f"{type(exc).__name__}: {exc}"
    if timing:
        rep.elapsed_ms = round((time.perf_counter() - start) * 1000, 1)
    return rep


def _verify_job(args) -> VerificationReport:
    identity, D, timing = args
    return verify(identity, None, D, timing)


def verify_all(D: int | None = None, workers: int = 1, ids: list[str] | None = None,
               timing: bool = False) -> list[VerificationReport]:
    """Verify every entry (or ``ids``) at its defaults; output order follows the catalog."""
    chosen = [e.id for e in ENTRIES] if ids is None else [get(i).id for i in ids]
    jobs = [(i, D, timing) for i in chosen]
    if workers <= 1 or len(jobs) <= 1:
        return [_verify_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_verify_job, jobs))


# ---------------------------------------------------------------------------
# single expressions for `expand`
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Expression:
    id: str
    params: tuple[Param, ...]
    fn: Evaluator

    def resolve(self, given: dict | None = None) -> dict:
        return IdentityEntry(self.id, "", "", self.params).resolve(given)


def _expressions() -> dict[str, Expression]:
    ex: dict[str, Expression] = {}

    def add(i, params, fn):
        ex[i] = Expression(i, params, fn)

    add("euler-product", (), lambda p, D: cf.euler_product(D))
    for i in (1, 2):
        add(f"rr-product-{i}", (), lambda p, D, i=i: cf.rr_product(i, D))
        add(f"gg-product-{i}", (), lambda p, D, i=i: cf.gg_product(i, D))
        add(f"lg-product-{i}", (), lambda p, D, i=i: cf.lg_product(i, D))
        for v in ("SLATER", "KAGAN", "ALI"):
            add(f"gg-{v.lower()}-{i}", (), lambda p, D, i=i, v=v: cf.gg_sums(i, v, D))
        for v in ("SLATER", "ALI", "AB"):
            add(f"lg-{v.lower()}-{i}", (), lambda p, D, i=i, v=v: cf.lg_sums(i, v, D))
        add(f"fin-gg-{i}", (N,), lambda p, D, i=i: cf.gg_bounded(i, "FIN_RHS", p["N"]))
        add(f"outlook-rr-{i}", (), lambda p, D, i=i: cf.outlook_rr(i, "LHS", D))
    add("ug-single", (K0, L), lambda p, D: cf.ug_single(p["k"], p["l"], D))
    add("ug-double", (K0, L), lambda p, D: cf.ug_double(p["k"], p["l"], D))
    add("ug-bounded", (K, L, N), lambda p, D: cf.ug_double_bounded(p["k"], p["l"], p["N"]))
    add("chu-vandermonde", (Param("M", 5, 0, 60),), lambda p, D: cf.chu_vandermonde_lhs(p["M"]))
    add("little-diff", (), lambda p, D: cf.little_difference("RHS", D))
    add("phi-n", _BY_ID["phi-n"].params, _BY_ID["phi-n"].lhs)
    add("product-double-sum", _BY_ID["product-double-sum"].params, _BY_ID["product-double-sum"].rhs)
    add("jtp-dissection", _BY_ID["jtp-dissection"].params, _BY_ID["jtp-dissection"].rhs)
    add("jtp-cor", _BY_ID["jtp-cor"].params, _BY_ID["jtp-cor"].lhs)
    return ex


EXPRESSIONS = _expressions()


def expand(expr_id: str, params: dict | None = None, D: int = DEFAULT_TRUNC, fmt: str = "text") -> str:
    try:
        ex = EXPRESSIONS[expr_id]
    except KeyError:
        raise UsageError(f"unknown expression {expr_id!r}") from None
    p = ex.resolve(params)
    s = ex.fn(p, D).truncate(D)
    if fmt == "json":
        return json.dumps({"expression": expr_id, "params": p, "truncation": s.trunc, "series": render_series(s)})
    return render_series(s)
