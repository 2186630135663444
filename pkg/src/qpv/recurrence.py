"""Checking stated recurrences on sequences of exact polynomials.

A recurrence is written the way it is usually displayed,

    p(N + lead) = sum_o  c_o(N) * p(N + o)  +  corrections(N),

with each coefficient materialized per N as an exact polynomial.  Failures
are report rows, never exceptions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .closed_forms import fin_gg_summand, gg_bounded, lg_bounded, lg_transform_summand, ug_double_bounded, ug_single_bounded, ug_summand
from .series import LaurentSeries, render_series

Coeff = Callable[[int], LaurentSeries]


def qx(e: int, xpow: int = 0, c: int = 1) -> LaurentSeries:
    return LaurentSeries.monomial(e, c, xpow)


ONE = LaurentSeries.one()
ZERO = LaurentSeries.zero()


@dataclass(frozen=True)
class RecurrenceSpec:
    """``terms`` holds (offset, coefficient) pairs; ``corrections`` holds
    (N0, value) pairs that fire only when N equals N0."""

    name: str
    lead: int
    terms: tuple[tuple[int, Coeff], ...]
    corrections: tuple[tuple[int, Coeff], ...] = ()

    @property
    def order(self) -> int:
        return self.lead - min(o for o, _ in self.terms)

    def rhs(self, p: Callable[[int], LaurentSeries], N: int) -> LaurentSeries:
        out = LaurentSeries.zero()
        for o, c in self.terms:
            v = p(N + o)
            if not v.is_zero():
                out = out + c(N) * v
        for n0, c in self.corrections:
            if N == n0:
                out = out + c(N)
        return out


@dataclass(frozen=True)
class SequenceProvider:
    """A deterministic sequence that vanishes below ``support``."""

    name: str
    fn: Callable[[int], LaurentSeries]
    support: int | None = None

    def __call__(self, N: int) -> LaurentSeries:
        if self.support is not None and N < self.support:
            return LaurentSeries.zero()
        return self.fn(N)


@dataclass
class ReportRow:
    index: tuple[int, ...]
    ok: bool
    residual: LaurentSeries | None = None


@dataclass
class Report:
    title: str
    rows: list[ReportRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> list[ReportRow]:
        return [r for r in self.rows if not r.ok]

    def to_text(self) -> str:
        lines = [self.title]
        for r in sorted(self.rows, key=lambda r: r.index):
            idx = ",".join(map(str, r.index))
            tail = "" if r.ok else f"  residual {render_series(r.residual)}"
            lines.append(f"  {idx:>12}  {'pass' if r.ok else 'FAIL'}{tail}")
        lines.append(f"  {len(self.rows) - len(self.failures)}/{len(self.rows)} pass")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "rows": [
                {
                    "index": list(r.index),
                    "status": "pass" if r.ok else "fail",
                    "residual": None if r.ok else render_series(r.residual),
                }
                for r in sorted(self.rows, key=lambda r: r.index)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def check_recurrence(p: SequenceProvider, r: RecurrenceSpec, Nlo: int, Nhi: int) -> Report:
    if Nhi < Nlo:
        raise ValueError("empty range")
    cache: dict[int, LaurentSeries] = {}

    def val(N):
        if N not in cache:
            cache[N] = p(N)
        return cache[N]

    rep = Report(f"{p.name} vs {r.name}")
    for N in range(Nlo, Nhi + 1):
        res = val(N + r.lead) - r.rhs(val, N)
        rep.rows.append(ReportRow((N,), res.is_zero(), None if res.is_zero() else res))
    return rep


def check_initial_values(p: SequenceProvider, table: Sequence[tuple[int, LaurentSeries]]) -> Report:
    rep = Report(f"{p.name} initial values")
    for N, want in table:
        res = p(N) - want
        rep.rows.append(ReportRow((N,), res.is_zero(), None if res.is_zero() else res))
    return rep


# ---------------------------------------------------------------------------
# summand-level recurrences
# ---------------------------------------------------------------------------

Summand = Callable[[int, int, int], LaurentSeries]


@dataclass(frozen=True)
class SummandRecurrence:
    """``F(m, n, N + lead) = sum c(N) F(m - dm, n - dn, N + o) + corrections``.

    ``corrections`` is a function of (m, n, N) returning a polynomial (often 0).
    """

    name: str
    lead: int
    terms: tuple[tuple[tuple[int, int, int], Coeff], ...]
    corrections: Callable[[int, int, int], LaurentSeries] | None = None


def check_summand_recurrence(
    family: Summand,
    r: SummandRecurrence,
    m_range: range,
    n_range: range,
    N_range: range,
    title: str | None = None,
) -> Report:
    def F(m, n, N):
        if m < 0 or n < 0:
            return LaurentSeries.zero()
        return family(m, n, N)

    rep = Report(title or r.name)
    for m in m_range:
        for n in n_range:
            for N in N_range:
                acc = LaurentSeries.zero()
                for (dm, dn, o), c in r.terms:
                    v = F(m - dm, n - dn, N + o)
                    if not v.is_zero():
                        acc = acc + c(N) * v
                if r.corrections is not None:
                    acc = acc + r.corrections(m, n, N)
                res = F(m, n, N + r.lead) - acc
                rep.rows.append(ReportRow((m, n, N), res.is_zero(), None if res.is_zero() else res))
    return rep


# ---------------------------------------------------------------------------
# the recurrences used in the finite identities
# ---------------------------------------------------------------------------


def ug_recurrence(k: int, l: int) -> RecurrenceSpec:
    return RecurrenceSpec(
        f"ug-first-order(k={k},l={l})",
        0,
        ((-1, lambda N: ONE), (-k, lambda N: qx(N, 1))),
        ((l - k, lambda N: ONE),),
    )


def ug_iterated(k: int, l: int) -> RecurrenceSpec:
    return RecurrenceSpec(
        f"ug-iterated(k={k},l={l})",
        0,
        ((-1, lambda N: ONE), (-k - 1, lambda N: qx(N, 1)), (-2 * k, lambda N: qx(2 * N - k, 2))),
        ((l - k, lambda N: ONE), (l, lambda N: qx(N, 1))),
    )


def bm_recurrence() -> RecurrenceSpec:
    return RecurrenceSpec("bm-order-2", 2, ((1, lambda N: ONE + qx(2 * N + 5)), (0, lambda N: qx(2 * N + 4))))


def bm_iterated() -> RecurrenceSpec:
    return RecurrenceSpec(
        "bm-order-3",
        3,
        (
            (2, lambda N: ONE),
            (1, lambda N: qx(2 * N + 6) * (ONE + qx(1) + qx(2 * N + 6))),
            (0, lambda N: qx(4 * N + 11)),
        ),
    )


def lg_left_recurrence(i: int = 1) -> RecurrenceSpec:
    # for i = 2 both sums vanish at N = -1, so the first step needs q^5
    extra = ((-1, lambda N: qx(5)),) if i == 2 else ()
    return RecurrenceSpec(
        f"lg-order-3(i={i})",
        3,
        (
            (2, lambda N: ONE),
            (1, lambda N: qx(2 * N + 5) * (ONE + qx(1) + qx(2 * N + 5))),
            (0, lambda N: qx(4 * N + 9)),
        ),
        extra,
    )


def lg_right_recurrence(i: int = 1, printed: bool = False) -> RecurrenceSpec:
    """Order-2 recurrence for the right sides of the little Gollnitz transformations.

    The default exponents are 2N+4 and 2N+3, the ones the summand recurrence
    produces; ``printed=True`` gives 2N+5 and 2N+4 instead.
    """
    a, b = (5, 4) if printed else (4, 3)
    extra = ((-1, lambda N: qx(1)),) if i == 2 else ()
    return RecurrenceSpec(
        f"lg-order-2(i={i}{',printed' if printed else ''})",
        2,
        ((1, lambda N: ONE + qx(2 * N + a)), (0, lambda N: qx(2 * N + b))),
        extra,
    )


def _ug_pair_summand(k: int, l: int) -> Summand:
    # the floor-indexed summands 2n and 2n+1 share one pair count n
    def F(m, n, N):
        return ug_summand(k, l, m, 2 * n, N) + ug_summand(k, l, m, 2 * n + 1, N)

    return F


def ug_summand_recurrence(k: int, l: int) -> SummandRecurrence:
    def corr(m, n, N):
        out = LaurentSeries.zero()
        if m == 0 and n == 0:
            if N == l - k:
                out = out + ONE
            if N == l:
                out = out + qx(l, 1)
        return out

    return SummandRecurrence(
        f"ug-summand(k={k},l={l})",
        0,
        (
            ((0, 0, -1), lambda N: ONE),
            ((1, 0, -k - 1), lambda N: qx(N, 1)),
            ((0, 1, -2 * k), lambda N: qx(2 * N - k, 2)),
        ),
        corr,
    )


def bm_summand_recurrence(lg: bool = False) -> SummandRecurrence:
    a, b = (4, 3) if lg else (5, 4)
    return SummandRecurrence(
        "lg-right-summand" if lg else "bm-summand",
        2,
        (
            ((0, 0, 1), lambda N: ONE),
            ((0, 1, 1), lambda N: qx(2 * N + a)),
            ((1, 1, 0), lambda N: qx(2 * N + b)),
        ),
    )


def left_summand_recurrence(lg: bool = False, printed: bool = False) -> SummandRecurrence:
    """Order-3 recurrence for the left summands, indexed by the raw n = 2n' + nu.

    Stepping n' down by one is a step of 2 in the raw index, so the parity
    classes never mix.  ``printed=True`` flips the sign of the (1+q) term.
    """
    e = 5 if lg else 6
    sg = -1 if printed else 1
    return SummandRecurrence(
        f"{'lg' if lg else 'gg'}-left-summand{'-printed' if printed else ''}",
        3,
        (
            ((0, 0, 2), lambda N: ONE),
            ((1, 0, 1), lambda N: qx(2 * N + e, 0, sg) * (ONE + qx(1))),
            ((0, 2, 1), lambda N: qx(4 * N + 2 * e)),
            ((2, 0, 0), lambda N: qx(4 * N + 2 * e - 1)),
        ),
    )


# ---------------------------------------------------------------------------
# providers and the registry of checks
# ---------------------------------------------------------------------------


def fin_gg_provider(i: int, side: str) -> SequenceProvider:
    return SequenceProvider(f"fin-gg-{i}-{side.lower()}", lambda N: gg_bounded(i, f"FIN_{side}", N), support=-1)


def lg_transform_provider(i: int, side: str) -> SequenceProvider:
    return SequenceProvider(f"lg-transform-{i}-{side.lower()}", lambda N: lg_bounded(i, f"T45_{side}{i}", N), support=-1)


def ug_provider(k: int, l: int, form: str) -> SequenceProvider:
    if form == "single":
        fn = lambda N: ug_single_bounded(k, l, N, chi=False)  # noqa: E731
    else:
        fn = lambda N: ug_double_bounded(k, l, N, chi=False)  # noqa: E731
    return SequenceProvider(f"ug-{form}(k={k},l={l})", fn, support=l - k)


GG_INITIAL = {
    1: ((-1, ONE), (0, ONE + qx(1)), (1, ONE + qx(1) + qx(2) + qx(3) + qx(4))),
    2: ((-1, ZERO), (0, ONE), (1, ONE + qx(3))),
}
LG_INITIAL = {
    1: ((-1, ZERO), (0, ONE), (1, ONE + qx(2))),
    2: ((-1, ZERO), (0, ZERO), (1, qx(1))),
}


@dataclass(frozen=True)
class RecurrenceCheck:
    name: str
    provider: SequenceProvider
    spec: RecurrenceSpec
    lo: int
    hi: int

    def run(self) -> Report:
        return check_recurrence(self.provider, self.spec, self.lo, self.hi)


def recurrence_checks() -> list[RecurrenceCheck]:
    """Every sequence-level recurrence with its declared range."""
    out = []
    for k in (1, 2, 3):
        for l in (1, 2, 3):
            lo = l - k - 3
            for form in ("single", "double"):
                p = ug_provider(k, l, form)
                if form == "single":
                    out.append(RecurrenceCheck(f"{p.name}/first-order", p, ug_recurrence(k, l), lo, 20))
                out.append(RecurrenceCheck(f"{p.name}/iterated", p, ug_iterated(k, l), lo, 20))
    for i in (1, 2):
        for side in ("LHS", "RHS"):
            p = fin_gg_provider(i, side)
            out.append(RecurrenceCheck(f"{p.name}/order-2", p, bm_recurrence(), -1, 15))
            out.append(RecurrenceCheck(f"{p.name}/order-3", p, bm_iterated(), -1, 15))
    for i in (1, 2):
        for side in ("LHS", "RHS"):
            p = lg_transform_provider(i, side)
            out.append(RecurrenceCheck(f"{p.name}/order-2", p, lg_right_recurrence(i), -1, 15))
            out.append(RecurrenceCheck(f"{p.name}/order-3", p, lg_left_recurrence(i), -1, 15))
    return out


@dataclass(frozen=True)
class SummandCheck:
    name: str
    family: Summand
    spec: SummandRecurrence
    m_range: range
    n_range: range
    N_range: range

    def run(self) -> Report:
        return check_summand_recurrence(self.family, self.spec, self.m_range, self.n_range, self.N_range, self.name)


def summand_checks() -> list[SummandCheck]:
    out = []
    for k, l in ((1, 1), (2, 1), (1, 2), (3, 2)):
        out.append(SummandCheck(f"ug-summand(k={k},l={l})", _ug_pair_summand(k, l), ug_summand_recurrence(k, l), range(6), range(5), range(0, 13)))
    grid = (range(7), range(7), range(0, 11))
    for i in (1, 2):
        out.append(SummandCheck(f"bm-summand-{i}", _bind(fin_gg_summand, i, "RHS"), bm_summand_recurrence(), *grid))
        out.append(SummandCheck(f"lg-right-summand-{i}", _bind(lg_transform_summand, i, "RHS"), bm_summand_recurrence(lg=True), *grid))
        for nu in (0, 1):
            raw = range(nu, 13, 2)
            out.append(SummandCheck(f"gg-left-summand-{i}-nu{nu}", _bind(fin_gg_summand, i, "LHS"), left_summand_recurrence(), grid[0], raw, grid[2]))
            out.append(SummandCheck(f"lg-left-summand-{i}-nu{nu}", _bind(lg_transform_summand, i, "LHS"), left_summand_recurrence(lg=True), grid[0], raw, grid[2]))
    return out


def _bind(fn, i: int, side: str) -> Summand:
    return lambda m, n, N: fn(i, side, m, n, N)


def initial_value_checks() -> list[Report]:
    reps = []
    for i in (1, 2):
        for side in ("LHS", "RHS"):
            reps.append(check_initial_values(fin_gg_provider(i, side), GG_INITIAL[i]))
            reps.append(check_initial_values(lg_transform_provider(i, side), LG_INITIAL[i]))
    return reps
