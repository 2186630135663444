"""Exact Laurent polynomials and truncated Laurent series in q.

Coefficients live in Z or in Z[x], where x marks the number of parts.
A series is stored as a set of *x-slices*: for every power of x that occurs
there is a dense window of integer coefficients ``(lo, [c_lo, c_lo+1, ...])``.
Unmarked series have a single slice at x^0, so all heavy arithmetic is done
on plain Python ints regardless of the coefficient ring.

A truncated series carries ``trunc = D``: coefficients of q^e are known for
e <= D and nothing beyond D is ever stored.  ``trunc is None`` (``EXACT``)
means the object is a Laurent polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import repeat
from operator import add, mul
from typing import Iterable, Mapping, Union

from .errors import (
    DivergentProductError,
    DomainError,
    InexactDivisionError,
    InversionError,
    ParseError,
    TruncationError,
)

EXACT = None
INFINITE = math.inf


# ---------------------------------------------------------------------------
# Z[x] coefficients
# ---------------------------------------------------------------------------


class XPoly:
    """Immutable sparse polynomial in x with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, int], Iterable[tuple[int, int]], int] = ()):
        if isinstance(terms, int):
            terms = {0: terms}
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if e < 0:
                raise DomainError("x exponents must be non-negative")
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c))

    @classmethod
    def coerce(cls, value) -> "XPoly":
        return value if isinstance(value, XPoly) else cls(int(value))

    def items(self):
        return self._terms

    def as_dict(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def degree(self) -> int:
        return self._terms[-1][0] if self._terms else -1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and self._terms[0][0] == 0)

    def constant(self) -> int:
        return self._terms[0][1] if self._terms and self._terms[0][0] == 0 else 0

    def __call__(self, v: int) -> int:
        return sum(c * v**e for e, c in self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.constant() == other
        if isinstance(other, XPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash(self._terms)

    def __add__(self, other):
        if isinstance(other, int):
            other = XPoly(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return XPoly(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self):
        return XPoly((e, -c) for e, c in self._terms)

    def __sub__(self, other):
        if isinstance(other, int):
            other = XPoly(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = XPoly(other)
        if not isinstance(other, XPoly):
            return NotImplemented
        return XPoly((e1 + e2, c1 * c2) for e1, c1 in self._terms for e2, c2 in other._terms)

    __rmul__ = __mul__

    def __str__(self):
        return _render_coeff(self)

    def __repr__(self):
        return f"XPoly({dict(self._terms)!r})"


Coefficient = Union[int, XPoly]


def _simplify_coeff(c: XPoly) -> Coefficient:
    return c.constant() if c.is_constant() else c


# ---------------------------------------------------------------------------
# dense window helpers (exponent window [lo, lo+len-1])
# ---------------------------------------------------------------------------


def _strip(lo: int, cs: list[int], cap) -> tuple[int, tuple[int, ...]] | None:
    if cap is not None and lo + len(cs) - 1 > cap:
        cs = cs[: max(0, cap - lo + 1)]
    start = 0
    n = len(cs)
    while start < n and cs[start] == 0:
        start += 1
    if start == n:
        return None
    end = n
    while cs[end - 1] == 0:
        end -= 1
    return lo + start, tuple(cs[start:end])


def _dense_add_into(acc: dict[int, list], xp: int, lo: int, cs, sign: int = 1):
    """Accumulate ``sign * cs`` (window starting at ``lo``) into ``acc[xp]``."""
    cur = acc.get(xp)
    if cur is None:
        acc[xp] = [lo, list(cs) if sign == 1 else [-c for c in cs]]
        return
    clo, ccs = cur
    if lo < clo:
        ccs[:0] = [0] * (clo - lo)
        clo = lo
        cur[0] = lo
    off = lo - clo
    need = off + len(cs) - len(ccs)
    if need > 0:
        ccs.extend([0] * need)
    n = len(cs)
    if sign == 1:
        ccs[off : off + n] = map(add, ccs[off : off + n], cs)
    else:
        ccs[off : off + n] = map(add, ccs[off : off + n], map(mul, repeat(sign, n), cs))


def _dense_mul(alo: int, a, blo: int, b, cap) -> tuple[int, list[int]]:
    lo = alo + blo
    n = len(a) + len(b) - 1
    if cap is not None:
        n = min(n, cap - lo + 1)
    if n <= 0:
        return lo, []
    if len(a) > len(b):
        a, b = b, a
    out = [0] * n
    lb = len(b)
    for i, ai in enumerate(a):
        if i >= n:
            break
        if ai:
            lim = min(lb, n - i)
            seg = out[i : i + lim]
            if ai == 1:
                out[i : i + lim] = map(add, seg, b[:lim])
            elif ai == -1:
                out[i : i + lim] = map(add, seg, map(mul, repeat(-1, lim), b))
            else:
                out[i : i + lim] = map(add, seg, map(mul, repeat(ai, lim), b))
    return lo, out


# ---------------------------------------------------------------------------
# LaurentSeries
# ---------------------------------------------------------------------------


class LaurentSeries:
    """Immutable exact Laurent polynomial or truncated Laurent series in q."""

    __slots__ = ("_sl", "trunc")

    def __init__(self, terms: Mapping[int, Coefficient] | None = None, trunc: int | None = EXACT):
        acc: dict[int, dict[int, int]] = {}
        for e, c in (terms or {}).items():
            for xp, v in XPoly.coerce(c).items():
                acc.setdefault(xp, {})
                acc[xp][e] = acc[xp].get(e, 0) + v
        slices = {}
        for xp, d in acc.items():
            lo, hi = min(d), max(d)
            slices[xp] = (lo, [d.get(e, 0) for e in range(lo, hi + 1)])
        self._sl = _normalize(slices, trunc)
        self.trunc = trunc

    @classmethod
    def _raw(cls, slices: dict, trunc) -> "LaurentSeries":
        obj = object.__new__(cls)
        obj._sl = _normalize(slices, trunc)
        obj.trunc = trunc
        return obj

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], lo: int = 0, trunc: int | None = EXACT, xpow: int = 0):
        return cls._raw({xpow: (lo, list(coeffs))}, trunc)

    @classmethod
    def monomial(cls, e: int, c: Coefficient = 1, xpow: int = 0, trunc: int | None = EXACT):
        if isinstance(c, XPoly):
            return cls({e: c * XPoly({xpow: 1})}, trunc)
        return cls._raw({xpow: (e, [c])}, trunc)

    @classmethod
    def zero(cls, trunc: int | None = EXACT):
        return cls._raw({}, trunc)

    @classmethod
    def one(cls, trunc: int | None = EXACT):
        return cls._raw({0: (0, [1])}, trunc)

    # -- inspection ---------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    @property
    def has_x(self) -> bool:
        return any(xp != 0 for xp in self._sl)

    def is_zero(self) -> bool:
        return not self._sl

    @property
    def lower(self) -> int | None:
        """Smallest exponent that may carry a nonzero coefficient."""
        if self._sl:
            return min(lo for lo, _ in self._sl.values())
        return None if self.trunc is None else self.trunc + 1

    @property
    def degree(self) -> int | None:
        """Largest stored exponent (None for the zero series)."""
        if not self._sl:
            return None
        return max(lo + len(cs) - 1 for lo, cs in self._sl.values())

    @property
    def x_degree(self) -> int:
        return max(self._sl) if self._sl else -1

    def x_slice(self, xpow: int) -> "LaurentSeries":
        """The Z-series multiplying x^xpow."""
        if xpow in self._sl:
            lo, cs = self._sl[xpow]
            return LaurentSeries._raw({0: (lo, list(cs))}, self.trunc)
        return LaurentSeries.zero(self.trunc)

    def coeff(self, e: int) -> Coefficient:
        if self.trunc is not None and e > self.trunc:
            raise TruncationError(f"coefficient of q^{e} is beyond truncation order {self.trunc}")
        terms = {}
        for xp, (lo, cs) in self._sl.items():
            if lo <= e < lo + len(cs) and cs[e - lo]:
                terms[xp] = cs[e - lo]
        if not terms:
            return 0
        if list(terms) == [0]:
            return terms[0]
        return XPoly(terms)

    __getitem__ = coeff

    def items(self) -> list[tuple[int, Coefficient]]:
        """Nonzero (exponent, coefficient) pairs in ascending exponent order."""
        exps = set()
        for lo, cs in self._sl.values():
            exps.update(lo + i for i, c in enumerate(cs) if c)
        return [(e, self.coeff(e)) for e in sorted(exps)]

    def coeff_list(self, lo: int, hi: int) -> list[Coefficient]:
        return [self.coeff(e) for e in range(lo, hi + 1)]

    def slices(self) -> dict[int, tuple[int, tuple[int, ...]]]:
        return dict(self._sl)

    # -- transforms ---------------------------------------------------------

    def truncate(self, D: int | None) -> "LaurentSeries":
        if D is None:
            return self
        t = D if self.trunc is None else min(self.trunc, D)
        return LaurentSeries._raw(dict(self._sl), t)

    def as_exact(self) -> "LaurentSeries":
        """Drop the truncation order; only sound when the caller knows no
        terms exist beyond it (a finite generating function, say)."""
        return LaurentSeries._raw(dict(self._sl), None)

    def shift(self, e: int, xpow: int = 0, scale: int = 1) -> "LaurentSeries":
        """Multiply by ``scale * x^xpow * q^e`` (exact monomial)."""
        if scale == 0:
            return LaurentSeries.zero(None if self.trunc is None else self.trunc + e)
        sl = {
            xp + xpow: (lo + e, cs if scale == 1 else [scale * c for c in cs])
            for xp, (lo, cs) in self._sl.items()
        }
        return LaurentSeries._raw(sl, None if self.trunc is None else self.trunc + e)

    def specialize_x(self, v: int) -> "LaurentSeries":
        if not self.has_x:
            return self
        acc: dict[int, list] = {}
        for xp, (lo, cs) in self._sl.items():
            w = v**xp
            if w:
                _dense_add_into(acc, 0, lo, cs, w)
        return LaurentSeries._raw({k: tuple(v_) for k, v_ in acc.items()}, self.trunc)

    def substitute_q_power(self, b: int) -> "LaurentSeries":
        if b <= 0:
            raise DomainError(f"q -> q^b needs b >= 1, got {b}")
        if b == 1:
            return self
        sl = {}
        for xp, (lo, cs) in self._sl.items():
            out = [0] * ((len(cs) - 1) * b + 1)
            out[::b] = cs
            sl[xp] = (lo * b, out)
        return LaurentSeries._raw(sl, None if self.trunc is None else self.trunc * b)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, XPoly)):
            return LaurentSeries({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _combine(self, other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _combine(self, other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self.shift(0, 0, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.shift(0, 0, other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return _multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise DomainError("negative powers need series_invert")
        out = LaurentSeries.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, XPoly)):
            other = LaurentSeries({0: other})
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.trunc == other.trunc and self._sl == other._sl

    def __hash__(self):
        return hash((self.trunc, tuple(sorted(self._sl.items()))))

    def __str__(self):
        return render_series(self)

    def __repr__(self):
        return f"LaurentSeries({render_series(self)!r})"


def _normalize(slices: dict, trunc) -> dict:
    out = {}
    for xp, (lo, cs) in slices.items():
        s = _strip(lo, list(cs), trunc)
        if s is not None:
            out[xp] = s
    return out


def _combine(a: LaurentSeries, b: LaurentSeries, sign: int) -> LaurentSeries:
    if a.trunc is None:
        t = b.trunc
    elif b.trunc is None:
        t = a.trunc
    else:
        t = min(a.trunc, b.trunc)
    acc: dict[int, list] = {}
    for xp, (lo, cs) in a._sl.items():
        acc[xp] = [lo, list(cs)]
    for xp, (lo, cs) in b._sl.items():
        _dense_add_into(acc, xp, lo, cs, sign)
    return LaurentSeries._raw({k: tuple(v) for k, v in acc.items()}, t)


def _valuation(s: LaurentSeries) -> int | None:
    return s.lower


def product_trunc(a: LaurentSeries, b: LaurentSeries) -> int | None:
    """Truncation order of ``a*b``: the largest D for which the product is determined."""
    cands = []
    if a.trunc is not None:
        cands.append(a.trunc + b.lower)
    if b.trunc is not None:
        cands.append(b.trunc + a.lower)
    return min(cands) if cands else None


def _multiply(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    if (a.is_zero() and a.trunc is None) or (b.is_zero() and b.trunc is None):
        return LaurentSeries.zero()
    t = product_trunc(a, b)
    acc: dict[int, list] = {}
    for xa, (la, ca) in a._sl.items():
        for xb, (lb, cb) in b._sl.items():
            lo, out = _dense_mul(la, ca, lb, cb, t)
            if out:
                _dense_add_into(acc, xa + xb, lo, out)
    return LaurentSeries._raw({k: tuple(v) for k, v in acc.items()}, t)


def series_arith(op: str, s1: LaurentSeries, s2: LaurentSeries | None = None) -> LaurentSeries:
    if op == "add":
        return s1 + s2
    if op == "sub":
        return s1 - s2
    if op == "mul":
        return s1 * s2
    if op == "negate":
        return -s1
    raise DomainError(f"unknown series operation {op!r}")


def q(e: int = 1) -> LaurentSeries:
    return LaurentSeries.monomial(e)


def first_mismatch(a: LaurentSeries, b: LaurentSeries, D: int | None = None):
    """First exponent where ``a`` and ``b`` differ, compared through ``D``.

    Returns ``(exponent, coeff_a, coeff_b)`` or None.  With ``D=None`` both
    operands are compared up to the smaller truncation order (exactly, when
    both are exact).
    """
    limits = [t for t in (a.trunc, b.trunc, D) if t is not None]
    hi = min(limits) if limits else None
    exps = set()
    for s in (a, b):
        for lo, cs in s._sl.values():
            exps.update(lo + i for i, c in enumerate(cs) if c)
    for e in sorted(exps):
        if hi is not None and e > hi:
            break
        ca, cb = a.coeff(e), b.coeff(e)
        if ca != cb:
            return e, ca, cb
    return None


# ---------------------------------------------------------------------------
# inversion and division
# ---------------------------------------------------------------------------


def series_invert(s: LaurentSeries, D: int) -> LaurentSeries:
    """Multiplicative inverse of ``s`` truncated at ``D``.

    The lowest-order coefficient must be the constant +1 or -1.
    """
    if s.is_zero():
        raise InversionError("cannot invert the zero series")
    L = s.lower
    lead = s.coeff(L)
    if isinstance(lead, XPoly) or lead not in (1, -1):
        raise InversionError(f"lowest coefficient {lead} is not a unit")
    hi = D if s.trunc is None else min(D, s.trunc - 2 * L)
    K = hi + L  # number of steps beyond the leading term
    if K < 0:
        return LaurentSeries.zero(hi)
    u = lead
    if not s.has_x:
        lo, cs = s._sl[0]
        tail = [(j, c) for j, c in enumerate(cs[1 : K + 1], start=1) if c]
        t = [0] * (K + 1)
        t[0] = u
        for k in range(1, K + 1):
            acc = 0
            for j, c in tail:
                if j > k:
                    break
                acc += c * t[k - j]
            t[k] = -u * acc
        return LaurentSeries._raw({0: (-L, t)}, hi)
    # Z[x]: same recurrence with x-polynomial coefficients (dicts)
    sc: list[dict[int, int]] = [dict() for _ in range(K + 1)]
    for xp, (lo, cs) in s._sl.items():
        for i, c in enumerate(cs):
            j = lo + i - L
            if c and 0 < j <= K:
                sc[j][xp] = c
    tail = [(j, d) for j, d in enumerate(sc) if j and d]
    t: list[dict[int, int]] = [dict() for _ in range(K + 1)]
    t[0] = {0: u}
    for k in range(1, K + 1):
        acc: dict[int, int] = {}
        for j, d in tail:
            if j > k:
                break
            for xa, ca in d.items():
                for xb, cb in t[k - j].items():
                    acc[xa + xb] = acc.get(xa + xb, 0) - u * ca * cb
        t[k] = acc
    sl: dict[int, list] = {}
    for k, d in enumerate(t):
        for xp, c in d.items():
            if c:
                sl.setdefault(xp, {})[k - L] = c
    return LaurentSeries._raw(
        {xp: (min(d), [d.get(e, 0) for e in range(min(d), max(d) + 1)]) for xp, d in sl.items()}, hi
    )


def exact_divide(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Quotient of two exact Z-Laurent polynomials; the remainder must vanish."""
    if a.trunc is not None or b.trunc is not None:
        raise DomainError("exact_divide needs exact operands")
    if a.has_x or b.has_x:
        raise DomainError("exact_divide works over Z only")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentSeries.zero()
    alo, ac = a._sl[0]
    blo, bc = b._sl[0]
    nq = len(ac) - len(bc) + 1
    if nq <= 0:
        raise InexactDivisionError("divisor degree exceeds dividend degree")
    rem = list(ac)
    b0 = bc[0]
    quo = [0] * nq
    for k in range(nq):
        c = rem[k]
        if c:
            qk, r = divmod(c, b0)
            if r:
                raise InexactDivisionError("quotient has non-integer coefficients")
            quo[k] = qk
            for j, bj in enumerate(bc):
                rem[k + j] -= qk * bj
    if any(rem):
        raise InexactDivisionError("nonzero remainder")
    return LaurentSeries._raw({0: (alo - blo, quo)}, None)


# ---------------------------------------------------------------------------
# q-Pochhammer symbols
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PochhammerSpec:
    """Product of factors ``1 - sign * x^xpow * q^(shift + step*j)`` for j < length."""

    sign: int = 1
    shift: int = 1
    step: int = 1
    length: int | float = INFINITE
    xpow: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")
        if self.step < 1:
            raise DomainError("step must be positive")
        if self.length != INFINITE and self.length < 0:
            raise DomainError("length must be non-negative")

    def exponents(self, D: int | None = None) -> list[int]:
        if self.length == INFINITE:
            if D is None:
                raise DomainError("infinite product needs a truncation order")
            n = max(0, (D - self.shift) // self.step + 1)
        else:
            n = int(self.length)
        return [self.shift + self.step * j for j in range(n)]


def mul_binomial(s: LaurentSeries, sign: int, e: int, xpow: int = 0) -> LaurentSeries:
    """``s * (1 - sign * x^xpow * q^e)``."""
    return s - s.shift(e, xpow, sign)


def pochhammer(spec: PochhammerSpec, D: int | None = None) -> LaurentSeries:
    if spec.length == 0:
        return LaurentSeries.one()
    if spec.length == INFINITE:
        if spec.shift <= 0:
            raise DivergentProductError(
                f"infinite product with first exponent {spec.shift} <= 0 is not a power series"
            )
        if D is None:
            raise DomainError("infinite product needs a truncation order")
        out = LaurentSeries.one(D)
    else:
        out = LaurentSeries.one()
    for e in spec.exponents(D):
        out = mul_binomial(out, spec.sign, e, spec.xpow)
    return out


def _geom_divide(s: LaurentSeries, sign: int, e: int, xpow: int, D: int) -> LaurentSeries:
    """``s / (1 - sign * x^xpow * q^e)`` for e >= 1, truncated at D."""
    t = D if s.trunc is None else min(D, s.trunc)
    acc: dict[int, list[int]] = {}
    base = None
    for xp, (lo, cs) in s._sl.items():
        base = lo if base is None else min(base, lo)
    if base is None:
        return LaurentSeries.zero(t)
    n = t - base + 1
    if n <= 0:
        return LaurentSeries.zero(t)
    for xp, (lo, cs) in s._sl.items():
        row = [0] * n
        k = min(len(cs), n - (lo - base))
        if k > 0:
            row[lo - base : lo - base + k] = cs[:k]
        acc[xp] = row
    if xpow == 0:
        for row in acc.values():
            if sign == 1:
                for i in range(e, n):
                    row[i] += row[i - e]
            else:
                for i in range(e, n):
                    row[i] -= row[i - e]
    else:
        top = max(acc) + (n // e + 1) * xpow
        for xp in range(0, top + 1):
            src = acc.get(xp - xpow)
            if src is None:
                continue
            row = acc.setdefault(xp, [0] * n)
            for i in range(e, n):
                v = src[i - e]
                if v:
                    row[i] += sign * v
    return LaurentSeries._raw({xp: (base, row) for xp, row in acc.items()}, t)


def inv_pochhammer(spec: PochhammerSpec, D: int) -> LaurentSeries:
    """``1 / pochhammer(spec)`` truncated at D, expanded factor by factor."""
    exps = spec.exponents(D) if spec.length == INFINITE else spec.exponents()
    if spec.length == INFINITE and spec.shift <= 0:
        raise DivergentProductError("infinite product with non-positive first exponent")
    if any(e <= 0 for e in exps):
        return series_invert(pochhammer(spec, D), D)
    out = LaurentSeries.one(D)
    for e in exps:
        if e > D:
            continue
        out = _geom_divide(out, spec.sign, e, spec.xpow, D)
    return out


@lru_cache(maxsize=4096)
def inv_qpoch(shift: int, step: int, length, D: int, sign: int = 1) -> LaurentSeries:
    """Cached ``1/(sign*q^shift; q^step)_length`` truncated at D."""
    return inv_pochhammer(PochhammerSpec(sign, shift, step, length), D)


@lru_cache(maxsize=4096)
def qpoch(shift: int, step: int, length: int, sign: int = 1) -> LaurentSeries:
    """Cached exact finite ``(sign*q^shift; q^step)_length``."""
    return pochhammer(PochhammerSpec(sign, shift, step, length))


# ---------------------------------------------------------------------------
# Gaussian polynomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _gauss_base1(m: int, n: int) -> tuple[int, ...]:
    if m > n:
        m, n = n, m
    num = [1]
    for i in range(n + 1, n + m + 1):
        nxt = num + [0] * i
        for j, c in enumerate(num):
            nxt[j + i] -= c
        num = nxt
    for i in range(1, m + 1):
        c = list(num)
        for e in range(i, len(c)):
            c[e] += c[e - i]
        if any(c[len(c) - i :]):
            raise InexactDivisionError(f"(q)_{m + n}/((q)_{m}(q)_{n}) left a remainder")
        num = c[: len(c) - i]
    return tuple(num)


@lru_cache(maxsize=None)
def qbinomial(m: int, n: int, base: int = 1) -> LaurentSeries:
    """Gaussian polynomial ``[m+n, m]`` in q^base; zero when m < 0 or n < 0."""
    if base <= 0:
        raise DomainError("base must be positive")
    if m < 0 or n < 0:
        return LaurentSeries.zero()
    return LaurentSeries.from_coeffs(_gauss_base1(m, n)).substitute_q_power(base)


def gauss(top: int, bottom: int, base: int = 1) -> LaurentSeries:
    """``[top, bottom]`` in bracket notation, i.e. ``qbinomial(bottom, top - bottom)``."""
    return qbinomial(bottom, top - bottom, base)


def substitute_q_power(s: LaurentSeries, b: int) -> LaurentSeries:
    return s.substitute_q_power(b)


def specialize_x(s: LaurentSeries, v: int) -> LaurentSeries:
    return s.specialize_x(v)


# ---------------------------------------------------------------------------
# accumulation of many shifted terms
# ---------------------------------------------------------------------------


class SeriesBuilder:
    """Accumulates ``scale * x^xpow * q^shift * s`` terms into a series truncated at D.

    Every added term must be known through ``D``; this is checked, so a
    truncation mistake in a closed form surfaces as an error instead of a
    silently wrong coefficient.
    """

    def __init__(self, D: int | None, lo: int = 0):
        self.D = D
        self.lo = lo
        self._acc: dict[int, list] = {}

    def add(self, s: LaurentSeries, shift: int = 0, xpow: int = 0, scale: int = 1):
        if scale == 0 or s.is_zero():
            if s.trunc is not None and self.D is not None and s.trunc + shift < self.D:
                raise TruncationError("term is not known through the target order")
            return
        if self.D is not None:
            if s.trunc is not None and s.trunc + shift < self.D:
                raise TruncationError(
                    f"term known through q^{s.trunc + shift}, builder needs q^{self.D}"
                )
        elif s.trunc is not None:
            raise TruncationError("exact builder received a truncated term")
        for xp, (lo, cs) in s._sl.items():
            lo2 = lo + shift
            if self.D is not None:
                k = self.D - lo2 + 1
                if k <= 0:
                    continue
                if k < len(cs):
                    cs = cs[:k]
            _dense_add_into(self._acc, xp + xpow, lo2, cs, scale)

    def add_monomial(self, e: int, xpow: int = 0, scale: int = 1):
        if self.D is not None and e > self.D:
            return
        _dense_add_into(self._acc, xpow, e, (scale,))

    def build(self) -> LaurentSeries:
        return LaurentSeries._raw({k: tuple(v) for k, v in self._acc.items()}, self.D)


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------


def _xmono(a: int, k: int) -> str:
    xs = "x" if k == 1 else f"x^{k}"
    if k == 0:
        return str(a)
    if a == 1:
        return xs
    if a == -1:
        return "-" + xs
    return f"{a}*{xs}"


def _render_coeff(c: Coefficient) -> str:
    if isinstance(c, int):
        return str(c)
    terms = list(reversed(c.items()))
    if not terms:
        return "0"
    if len(terms) == 1:
        return _xmono(terms[0][1], terms[0][0])
    out = _xmono(terms[0][1], terms[0][0])
    for k, a in terms[1:]:
        t = _xmono(a, k)
        out += t if t.startswith("-") else "+" + t
    return "(" + out + ")"


def _qpart(e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return "q"
    return f"q^{e}"


def render_series(s: LaurentSeries) -> str:
    """Canonical ascending text form, e.g. ``1 + 2*q + (x+1)*q^2 + O(q^4)``."""
    parts = []
    for e, c in s.items():
        qp = _qpart(e)
        ct = _render_coeff(c)
        if not qp:
            parts.append(ct)
        elif ct == "1":
            parts.append(qp)
        elif ct == "-1":
            parts.append("-" + qp)
        else:
            parts.append(f"{ct}*{qp}")
    if s.trunc is not None:
        parts.append(f"O(q^{s.trunc + 1})")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class _Parser:
    def __init__(self, text: str):
        self.s = "".join(text.split())
        self.i = 0

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch: str):
        if not self.s.startswith(ch, self.i):
            raise ParseError(f"expected {ch!r} at position {self.i} in {self.s!r}")
        self.i += len(ch)

    def integer(self, signed: bool = False) -> int:
        j = self.i
        if signed and self.peek() in "+-":
            self.i += 1
        while self.peek().isdigit():
            self.i += 1
        tok = self.s[j : self.i]
        if not tok or tok in "+-":
            raise ParseError(f"expected integer at position {j} in {self.s!r}")
        return int(tok)

    def exponent(self) -> int:
        if self.peek() != "^":
            return 1
        self.i += 1
        if self.peek() == "{":
            self.i += 1
            v = self.integer(signed=True)
            self.expect("}")
            return v
        return self.integer(signed=True)

    def sum(self, allow_q: bool):
        terms = []
        trunc = None
        sign = 1
        if self.peek() in "+-":
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
        while True:
            if allow_q and self.s.startswith("O(", self.i):
                self.i += 2
                self.expect("q")
                trunc = self.exponent() - 1
                self.expect(")")
            else:
                c, e = self.product(allow_q)
                terms.append((c * sign, e))
            ch = self.peek()
            if ch in "+-" and ch:
                sign = -1 if ch == "-" else 1
                self.i += 1
                continue
            break
        return terms, trunc

    def product(self, allow_q: bool):
        coeff = XPoly(1)
        qexp = 0
        seen = False
        while True:
            ch = self.peek()
            if ch.isdigit():
                coeff = coeff * self.integer()
            elif ch == "x":
                self.i += 1
                coeff = coeff * XPoly({self.exponent(): 1})
            elif ch == "q" and allow_q:
                self.i += 1
                qexp += self.exponent()
            elif ch == "(":
                self.i += 1
                inner, _ = self.sum(allow_q=False)
                self.expect(")")
                acc = XPoly()
                for c, _e in inner:
                    acc = acc + c
                coeff = coeff * acc
            else:
                raise ParseError(f"unexpected {ch!r} at position {self.i} in {self.s!r}")
            seen = True
            if self.peek() == "*":
                self.i += 1
                continue
            if not seen:
                raise ParseError("empty term")
            return coeff, qexp


def parse_series(text: str) -> LaurentSeries:
    """Inverse of :func:`render_series`."""
    p = _Parser(text)
    if p.s == "0":
        return LaurentSeries.zero()
    terms, trunc = p.sum(allow_q=True)
    if p.i != len(p.s):
        raise ParseError(f"trailing input at position {p.i} in {p.s!r}")
    acc: dict[int, XPoly] = {}
    for c, e in terms:
        acc[e] = acc.get(e, XPoly()) + c
    return LaurentSeries(acc, trunc)


# ---------------------------------------------------------------------------
# signed monomials and products of Pochhammer symbols
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialParam:
    """The exact monomial ``sign * q^exponent``."""

    sign: int = 1
    exponent: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DomainError("sign must be +1 or -1")

    def __mul__(self, other: "MonomialParam") -> "MonomialParam":
        return MonomialParam(self.sign * other.sign, self.exponent + other.exponent)

    def __pow__(self, k: int) -> "MonomialParam":
        return MonomialParam(self.sign**k, self.exponent * k)

    def __neg__(self) -> "MonomialParam":
        return MonomialParam(-self.sign, self.exponent)

    def series(self) -> LaurentSeries:
        return LaurentSeries.monomial(self.exponent, self.sign)

    def __str__(self):
        body = "1" if self.exponent == 0 else _qpart(self.exponent)
        return ("-" if self.sign < 0 else "") + body


def mono(exponent: int, sign: int = 1) -> MonomialParam:
    return MonomialParam(sign, exponent)


def mono_pochhammer(c: MonomialParam, base: MonomialParam, n: int, D: int | None = None) -> LaurentSeries:
    """``(c; base)_n`` for signed monomials, exact or truncated at D."""
    if n < 0:
        raise DomainError("negative Pochhammer length")
    out = LaurentSeries.one(D)
    for j in range(n):
        t = c * base**j
        out = mul_binomial(out, t.sign, t.exponent)
    return out


def infinite_product(factors: Iterable[tuple[int, int, int]], D: int, xpow: int = 0) -> LaurentSeries:
    """``prod (sign * x^xpow * q^shift; q^step)_inf`` over ``factors``, truncated at D.

    Each factor is a ``(sign, shift, step)`` triple in the convention of
    :class:`PochhammerSpec`, so ``(-1, 2, 4)`` stands for ``(-q^2; q^4)_inf``.
    """
    out = LaurentSeries.one(D)
    for sign, shift, step in factors:
        out = out * pochhammer(PochhammerSpec(sign, shift, step, INFINITE, xpow), D)
    return out


def inv_infinite_product(factors: Iterable[tuple[int, int, int]], D: int, xpow: int = 0) -> LaurentSeries:
    """Reciprocal of :func:`infinite_product`, expanded factor by factor."""
    out = LaurentSeries.one(D)
    for sign, shift, step in factors:
        if shift <= 0:
            raise DivergentProductError("infinite product with non-positive first exponent")
        for e in range(shift, D + 1, step):
            out = _geom_divide(out, sign, e, xpow, D)
    return out


def ratio(num: LaurentSeries, den: LaurentSeries, D: int) -> LaurentSeries:
    """``num / den`` truncated at D for an exact numerator and a unit-led denominator."""
    if num.is_zero():
        return LaurentSeries.zero(D)
    need = D - num.lower
    return (num * series_invert(den, need)).truncate(D)
