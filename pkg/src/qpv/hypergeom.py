"""Basic hypergeometric series with signed-monomial parameters.

Terminating series are summed exactly over a common denominator and then
divided out, so the result is an exact Laurent polynomial.  Non-terminating
series are summed term by term, each term carried as a signed monomial times
a unit-led power series, until the term valuation passes the truncation order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DivergenceError, DomainError, InexactDivisionError, PoleError
from .series import (
    LaurentSeries,
    MonomialParam,
    _geom_divide,
    exact_divide,
    infinite_product,
    inv_infinite_product,
    mono,
    mono_pochhammer,
    mul_binomial,
    qbinomial,
    series_invert,
)


@dataclass(frozen=True)
class HypergeomSpec:
    """Parameters of ``r phi s (tops; bottoms; q^base_exp, argument)``.

    ``argument=None`` means the argument is absent, so only the k=0 term
    survives.  ``arg_xpow`` attaches a power of the marker x to the argument.
    """

    tops: tuple[MonomialParam, ...]
    bottoms: tuple[MonomialParam, ...]
    base_exp: int
    argument: MonomialParam | None
    arg_xpow: int = 0

    def __post_init__(self):
        object.__setattr__(self, "tops", tuple(self.tops))
        object.__setattr__(self, "bottoms", tuple(self.bottoms))
        if self.base_exp <= 0:
            raise DomainError("the base must be a positive power of q")
        if self.arg_xpow < 0:
            raise DomainError("negative x-power in the argument")

    @property
    def base(self) -> MonomialParam:
        return mono(self.base_exp)

    def termination(self) -> int | None:
        """Largest k with a possibly nonzero term, or None if the series does not stop."""
        if self.argument is None:
            return 0
        stops = [
            -t.exponent // self.base_exp
            for t in self.tops
            if t.sign == 1 and t.exponent <= 0 and t.exponent % self.base_exp == 0
        ]
        return min(stops) if stops else None


def phi(tops, bottoms, base_exp: int, argument, arg_xpow: int = 0) -> HypergeomSpec:
    """Convenience constructor taking exponents or :class:`MonomialParam` values."""

    def conv(p):
        return p if isinstance(p, MonomialParam) else mono(p)

    arg = None if argument is None else conv(argument)
    return HypergeomSpec(tuple(map(conv, tops)), tuple(map(conv, bottoms)), base_exp, arg, arg_xpow)


def _check_poles(spec: HypergeomSpec, K: int):
    for b in spec.bottoms:
        for j in range(K):
            f = b * spec.base**j
            if f.sign == 1 and f.exponent == 0:
                raise PoleError(f"bottom parameter {b} vanishes at index {j} before termination")


def _argument_power(spec: HypergeomSpec, k: int) -> LaurentSeries:
    a = spec.argument**k
    return LaurentSeries.monomial(a.exponent, a.sign, spec.arg_xpow * k)


def term(spec: HypergeomSpec, k: int) -> tuple[LaurentSeries, LaurentSeries]:
    """The k-th term as an exact (numerator, denominator) pair."""
    P = spec.base
    num = LaurentSeries.one() if k == 0 else _argument_power(spec, k)
    for t in spec.tops:
        num = num * mono_pochhammer(t, P, k)
    den = mono_pochhammer(P, P, k)
    for b in spec.bottoms:
        den = den * mono_pochhammer(b, P, k)
    return num, den


def rphis_fraction(spec: HypergeomSpec) -> tuple[LaurentSeries, LaurentSeries]:
    """A terminating series as an exact (numerator, common denominator) pair."""
    K = spec.termination()
    if K is None:
        raise DomainError("the series does not terminate")
    _check_poles(spec, K)
    P = spec.base
    common = mono_pochhammer(P, P, K)
    for b in spec.bottoms:
        common = common * mono_pochhammer(b, P, K)
    total = LaurentSeries.zero()
    for k in range(K + 1):
        num, _ = term(spec, k)
        if num.is_zero():
            continue
        fill = mono_pochhammer(P ** (k + 1), P, K - k)
        for b in spec.bottoms:
            fill = fill * mono_pochhammer(b * P**k, P, K - k)
        total = total + num * fill
    return total, common


def _divide_slices(num: LaurentSeries, den: LaurentSeries) -> LaurentSeries:
    out = LaurentSeries.zero()
    for xp in sorted(num.slices()):
        out = out + exact_divide(num.x_slice(xp), den).shift(0, xp)
    return out


def _terminating(spec: HypergeomSpec, D: int | None) -> LaurentSeries:
    num, den = rphis_fraction(spec)
    try:
        return _divide_slices(num, den)
    except InexactDivisionError:
        if D is None:
            raise
    if num.is_zero():
        return LaurentSeries.zero(D)
    # a genuine rational function; the inverse starts at q^{-den.lower}
    inv = series_invert(den, D - num.lower)
    return (num * inv).truncate(D)


class _Walker:
    """Running term ``sign * q^val * U`` with U a unit-led power series."""

    def __init__(self, D: int, slack: int):
        self.sign = 1
        self.val = 0
        self.D = D
        self.U = LaurentSeries.one(D + slack)

    def times(self, c: MonomialParam):
        # multiply by (1 - c)
        if c.exponent > 0:
            self.U = mul_binomial(self.U, c.sign, c.exponent)
        elif c.exponent < 0:
            self.sign *= -c.sign
            self.val += c.exponent
            self.U = mul_binomial(self.U, c.sign, -c.exponent)
        elif c.sign == -1:
            self.U = self.U.shift(0, 0, 2)
        else:
            self.U = LaurentSeries.zero(self.U.trunc)

    def divide(self, c: MonomialParam):
        # divide by (1 - c)
        if c.exponent > 0:
            self.U = _geom_divide(self.U, c.sign, c.exponent, 0, self.U.trunc)
        elif c.exponent < 0:
            self.sign *= -c.sign
            self.val -= c.exponent
            self.U = _geom_divide(self.U, c.sign, -c.exponent, 0, self.U.trunc)
        elif c.sign == -1:
            raise DomainError("a bottom factor equal to 2 leaves the integers")
        else:
            raise PoleError("a bottom factor vanishes")

    def value(self, xpow: int) -> LaurentSeries:
        return self.U.shift(self.val, xpow, self.sign).truncate(self.D)


def _valuation_bound(spec: HypergeomSpec, k: int) -> int:
    P = spec.base_exp
    v = k * spec.argument.exponent
    for j in range(k):
        for t in spec.tops:
            v += min(0, t.exponent + j * P)
        for b in spec.bottoms:
            v += max(0, -(b.exponent + j * P))
    return v


def _nonterminating(spec: HypergeomSpec, D: int) -> LaurentSeries:
    if spec.argument.exponent <= 0:
        raise DivergenceError("the argument must carry a positive power of q")
    # past `settle` every step raises the valuation by the argument exponent
    widest = max([abs(p.exponent) for p in spec.tops + spec.bottoms] + [0])
    settle = widest // spec.base_exp + 1
    bounds = [_valuation_bound(spec, 0)]
    while len(bounds) <= settle or bounds[-1] <= D:
        bounds.append(_valuation_bound(spec, len(bounds)))
    walker = _Walker(D, max(0, -min(bounds)))
    P = spec.base
    total = LaurentSeries.zero(D)
    for k, v in enumerate(bounds[:-1]):
        if v <= D:
            total = total + walker.value(spec.arg_xpow * k)
        step = P**k
        for t in spec.tops:
            walker.times(t * step)
        for b in spec.bottoms:
            walker.divide(b * step)
        walker.divide(P ** (k + 1))
        walker.sign *= spec.argument.sign
        walker.val += spec.argument.exponent
    return total


def rphis(spec: HypergeomSpec, D: int | None = None) -> LaurentSeries:
    """Sum the series, truncated at D.

    A terminating series whose sum is a Laurent polynomial comes back exact
    whatever D is; a terminating rational sum needs D like any other series.
    """
    K = spec.termination()
    if K is not None:
        return _terminating(spec, D)
    if D is None:
        raise DomainError("a non-terminating series needs a truncation order")
    return _nonterminating(spec, D)


def jtp_dissection(side: str, s: int, r: int, M: int, D: int, x_marked: bool = True) -> LaurentSeries:
    """Two-term dissection of ``(-x q^{s+r}; q^M)_inf / (x q^s; q^M)_inf``."""
    if M < 1 or s < 1 or not 0 <= r <= M:
        raise DomainError("need M >= 1, s >= 1 and 0 <= r <= M")
    if side == "LHS":
        out = infinite_product([(-1, s + r, M)], D, 1) * inv_infinite_product([(1, s, M)], D, 1)
    elif side == "RHS":
        arg = mono(2 * s)
        first = rphis(phi([mono(r, -1), mono(r + M, -1)], [mono(M)], 2 * M, arg, 2), D)
        second = rphis(phi([mono(r + 2 * M, -1), mono(r + M, -1)], [mono(3 * M)], 2 * M, arg, 2), D)
        lead = (LaurentSeries.one() + LaurentSeries.monomial(r)).shift(s, 1)
        lead = _geom_divide(lead.truncate(D), 1, M, 0, D)
        out = (first + lead * second).truncate(D)
    else:
        raise DomainError(f"unknown side {side!r}")
    return out if x_marked else out.specialize_x(1)


def _binomial_rhs_merged(m: int, n: int, lone: MonomialParam) -> LaurentSeries:
    # The prefactor [2m-2n+1 brack n]_q equals (q^{2m-3n+2}; q)_n / (q; q)_n and
    # (q^{2m-3n+2}; q^2)_k (q^{2m-3n+3}; q^2)_k = (q^{2m-3n+2}; q)_{2k}, so the
    # two cancel termwise and leave no pole inside the summation range.
    P = mono(2)
    K = n // 2
    c = 2 * m - 3 * n + 2
    tops = [mono(-n), mono(1 - n), mono(2 * m - 2 * n + 2), mono(2 * m - 2 * n + 2, -1)]
    common = mono_pochhammer(P, P, K) * mono_pochhammer(lone, P, K) * mono_pochhammer(mono(1), mono(1), n)
    total = LaurentSeries.zero()
    for k in range(K + 1):
        t = LaurentSeries.monomial(2 * k)
        for a in tops:
            t = t * mono_pochhammer(a, P, k)
        t = t * mono_pochhammer(mono(c + 2 * k), mono(1), n - 2 * k)
        t = t * mono_pochhammer(P ** (k + 1), P, K - k) * mono_pochhammer(lone * P**k, P, K - k)
        total = total + t
    return exact_divide(total, common).shift(n * (n - 1) // 2)


@dataclass
class BinomialIdentityResult:
    m: int
    n: int
    lhs: LaurentSeries
    rhs: LaurentSeries
    asserted: bool = field(default=False)
    merged: bool = field(default=False)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def outlook_binomial_identity(
    m: int, n: int, merged: bool = True, printed: bool = False
) -> tuple[LaurentSeries, LaurentSeries]:
    """Both sides of the q^2-binomial 2phi1 / 4phi3 identity as exact polynomials.

    The lone sign-carrying bottom parameter of the 4phi3 is ``-q^2``;
    ``printed=True`` swaps in ``-q^-2``, with which the identity fails as
    soon as the 4phi3 has more than one term.

    With ``merged=False`` the right side is the literal 4phi3 and raises
    :class:`PoleError` whenever a bottom parameter vanishes before the series
    stops; the default folds the binomial prefactor into those factors first.
    For n > m the left side is reported as 0 (its q^2-binomial vanishes).
    """
    if m < 0 or n < 0:
        raise DomainError("m and n must be non-negative")
    lone = mono(-2, -1) if printed else mono(2, -1)
    if n > m:
        # the q^2-binomial prefactor is zero while the 2phi1 meets a pole
        lhs = LaurentSeries.zero()
    else:
        num, den = rphis_fraction(phi([-2 * n, -2 * m + 2 * n], [-2 * m], 2, mono(1, -1)))
        lhs = exact_divide(qbinomial(n, m - n, 2) * num, den)
    if merged:
        rhs = _binomial_rhs_merged(m, n, lone)
    else:
        spec = phi(
            [mono(-n), mono(1 - n), mono(2 * m - 2 * n + 2), mono(2 * m - 2 * n + 2, -1)],
            [lone, mono(2 * m - 3 * n + 2), mono(2 * m - 3 * n + 3)],
            2,
            mono(2),
        )
        num, den = rphis_fraction(spec)
        rhs = exact_divide(qbinomial(n, 2 * m - 3 * n + 1) * num, den).shift(n * (n - 1) // 2)
    return lhs, rhs


def binomial_identity_check(m: int, n: int) -> BinomialIdentityResult:
    """Evaluate both sides; equality is asserted only inside ``0 <= n <= m``."""
    lhs, rhs = outlook_binomial_identity(m, n)
    res = BinomialIdentityResult(m, n, lhs, rhs, asserted=0 <= n <= m, merged=True)
    if res.asserted and not res.equal:
        raise AssertionError(f"binomial identity fails at m={m}, n={n}")
    return res
