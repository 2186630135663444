"""Closed-form evaluators: single and double sums, their bounded polynomial
versions, and infinite products.

Conventions
-----------
* Series evaluators take a truncation order ``D`` and return a series
  truncated at ``D``.  Bounded (finite) evaluators take ``N`` and return an
  exact polynomial unless a ``D`` is supplied.
* The part-count marker ``x`` is carried wherever the sum tracks the number
  of parts; callers use ``specialize_x(1)`` to compare with unmarked sides.
* ``[A, B]`` in comments is the Gaussian polynomial with top ``A`` and
  bottom ``B`` (see :func:`qpv.series.gauss`).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from .errors import DomainError
from .series import (
    LaurentSeries,
    MonomialParam,
    SeriesBuilder,
    exact_divide,
    gauss,
    inv_infinite_product,
    inv_qpoch,
    infinite_product,
    mono,
    mono_pochhammer,
    qbinomial,
    qpoch,
    ratio,
    series_invert,
)

# ---------------------------------------------------------------------------
# norm quadratics
# ---------------------------------------------------------------------------


def norm_Q(k: int, l: int, m: int, n: int) -> int:
    return (m + n) * l + k * n * (n - 1) // 2 + (n - 1) * m * k + (k + 1) * m * (m + 1) // 2


def norm_G(m: int, n: int) -> int:
    return (3 * m * m + m) // 2 + 2 * m * n + n * n


def norm_K(m: int, n: int) -> int:
    return (3 * m * m - m) // 2 + 4 * m * n + 4 * n * n


def norm_L(m: int, n: int) -> int:
    return 3 * (m * m + m) // 2 + 2 * n * m + n * n + n


def norm_eval(form: str, m: int, n: int, k: int = 0, l: int = 1) -> int:
    if m < 0 or n < 0:
        raise DomainError("m and n must be non-negative")
    form = form.upper()
    if form == "Q":
        return norm_Q(k, l, m, n)
    if form == "G":
        return norm_G(m, n)
    if form == "K":
        return norm_K(m, n)
    if form == "L":
        return norm_L(m, n)
    raise DomainError(f"unknown norm form {form!r}")


# ---------------------------------------------------------------------------
# small helpers
# ---------------------------------------------------------------------------


def _inv(base: int, length: int, D: int) -> LaurentSeries:
    """``1/(q^base; q^base)_length`` truncated at D."""
    return inv_qpoch(base, base, length, D)


def _lattice(expo: Callable[[int, int], int], D: int) -> Iterator[tuple[int, int, int]]:
    """All (m, n, e) with e = expo(m, n) <= D.

    Valid for the quadratic forms used here: in each variable the exponent
    is convex and the cross term is non-negative, so once it exceeds D while
    increasing it stays above D.
    """
    m = 0
    while True:
        hit = False
        n = 0
        while True:
            e = expo(m, n)
            if e <= D:
                hit = True
                yield m, n, e
            elif expo(m, n + 1) >= e:
                break
            n += 1
        if not hit and expo(m + 1, 0) >= expo(m, 0):
            return
        m += 1


def _box(limit: int) -> Iterator[tuple[int, int]]:
    for m in range(limit + 1):
        for n in range(limit + 1):
            yield m, n


# ---------------------------------------------------------------------------
# uniform gap families
# ---------------------------------------------------------------------------


def ug_single(k: int, l: int, D: int) -> LaurentSeries:
    """``sum_j x^j q^(lj + k j(j-1)/2) / (q;q)_j``."""
    b = SeriesBuilder(D)
    j = 0
    while True:
        e = l * j + k * j * (j - 1) // 2
        if e > D:
            break
        b.add(_inv(1, j, D), e, j)
        j += 1
    return b.build()


def ug_single_bounded(k: int, l: int, N: int, D: int | None = None, chi: bool = True) -> LaurentSeries:
    """Largest part at most N; ``chi`` adds the empty partition when no summand does."""
    if k == 0 and D is None:
        raise DomainError("k = 0 allows unboundedly many parts; pass a truncation order")
    b = SeriesBuilder(D)
    j = 0
    while True:
        e = l * j + k * j * (j - 1) // 2
        width = N - l - (j - 1) * k
        if D is not None and e > D:
            break
        if k > 0 and width < 0 and j > 0:
            break
        b.add(qbinomial(j, width), e, j)
        j += 1
        if k == 0 and width < 0:
            break
    if chi and 0 <= N < l - k:
        b.add_monomial(0)
    return b.build()


def ug_double(k: int, l: int, D: int, form: str = "FLOOR") -> LaurentSeries:
    b = SeriesBuilder(D)
    if form == "FLOOR":
        for m, n, e in _lattice(lambda m, n: norm_Q(k, l, m, n), D):
            b.add(_inv(1, m, D) * _inv(2, n // 2, D), e, m + n)
    elif form == "SPLIT":
        for m, n, e in _lattice(lambda m, n: norm_Q(k, l, m, 2 * n), D):
            den = _inv(1, m, D) * _inv(2, n, D)
            b.add(den, e, m + 2 * n)
            b.add(den, e + l + (m + 2 * n) * k, m + 2 * n + 1)
    else:
        raise DomainError(f"unknown form {form!r}")
    return b.build()


def ug_double_bounded(k: int, l: int, N: int, D: int | None = None, chi: bool = True) -> LaurentSeries:
    if k == 0 and D is None:
        raise DomainError("k = 0 allows unboundedly many parts; pass a truncation order")
    b = SeriesBuilder(D)
    limit = N + 2 if k > 0 else (D or 0) + 2
    for m in range(limit + 1):
        for n in range(limit + 1):
            e = norm_Q(k, l, m, n)
            if D is not None and e > D:
                continue
            w = N - l - (n - 1) * k - k * m
            t1 = qbinomial(m, w - m)
            if t1.is_zero():
                continue
            t2 = qbinomial(n // 2, w, 2)
            if t2.is_zero():
                continue
            b.add(t1 * t2, e, m + n)
    if chi and 0 <= N < l - k:
        b.add_monomial(0)
    return b.build()


def ug_corollary(k: int, l: int, D: int) -> LaurentSeries:
    """The split form written out with its quadratic simplified, for (k,l) in
    {(0,1), (1,1), (2,1), (2,2)}."""
    forms = {
        (0, 1): (lambda m, n: m * (m + 3) // 2 + 2 * n, lambda m, n: 1),
        (1, 1): (lambda m, n: m * m + m + 2 * m * n + 2 * n * n + n, lambda m, n: m + 2 * n + 1),
        (2, 1): (lambda m, n: m * (3 * m + 1) // 2 + 4 * m * n + 4 * n * n, lambda m, n: 2 * m + 4 * n + 1),
        (2, 2): (
            lambda m, n: m * (3 * m + 1) // 2 + 4 * m * n + 4 * n * n + m + 2 * n,
            lambda m, n: 2 * m + 4 * n + 2,
        ),
    }
    if (k, l) not in forms:
        raise DomainError(f"no simplified form for (k,l)=({k},{l})")
    ex, tail = forms[(k, l)]
    b = SeriesBuilder(D)
    for m, n, e in _lattice(ex, D):
        den = _inv(1, m, D) * _inv(2, n, D)
        b.add(den, e, m + 2 * n)
        b.add(den, e + tail(m, n), m + 2 * n + 1)
    return b.build()


def chu_vandermonde_lhs(M: int) -> LaurentSeries:
    """``sum_{n<=M} (-1)^n (q^-M;q)_n / (q^2;q^2)_{n//2}`` as an exact Laurent polynomial.

    Terms are brought over the common denominator ``(q^2;q^2)_{M//2}`` and
    the sum is divided exactly at the end.
    """
    if M < 0:
        raise DomainError("M must be non-negative")
    top = M // 2
    acc = LaurentSeries.zero()
    for n in range(M + 1):
        num = mono_pochhammer(mono(-M), mono(1), n)
        # (q^2;q^2)_top / (q^2;q^2)_{n//2} = (q^{2(n//2)+2}; q^2)_{top - n//2}
        fill = qpoch(2 * (n // 2) + 2, 2, top - n // 2)
        term = num * fill
        acc = acc - term if n % 2 else acc + term
    return exact_divide(acc, qpoch(2, 2, top))


# ---------------------------------------------------------------------------
# products used on the product side of several identities
# ---------------------------------------------------------------------------


def inv_residue_product(residues, modulus: int, D: int) -> LaurentSeries:
    """``1 / prod_{a in residues} (q^a; q^modulus)_inf``."""
    return inv_infinite_product([(1, a, modulus) for a in residues], D)


def euler_product(D: int) -> LaurentSeries:
    return inv_residue_product([1], 2, D)


def rr_product(i: int, D: int) -> LaurentSeries:
    return inv_residue_product([i, 5 - i], 5, D)


def gg_product(i: int, D: int) -> LaurentSeries:
    return inv_residue_product([2 + (-1) ** i, 4, 6 - (-1) ** i], 8, D)


def lg_product(i: int, D: int) -> LaurentSeries:
    return inv_residue_product([i, 4 - (-1) ** i, 5 + i], 8, D)


# ---------------------------------------------------------------------------
# Gollnitz-Gordon sums
# ---------------------------------------------------------------------------

GG_VARIANTS = ("SLATER", "KAGAN", "ALI", "KAGAN_T35_LHS", "KAGAN_T35_RHS", "PRODUCT", "COR")


def gg_sums(i: int, variant: str, D: int, printed: bool = False) -> LaurentSeries:
    """Unbounded Gollnitz-Gordon generating functions.

    ``KAGAN_T35_RHS`` is the even/odd split of ``ALI`` regrouped over the
    Kagan denominators.  With ``printed=True`` it uses the alternative
    exponents ``m+4n+1`` / ``2m+8n+3`` in the linear factor instead of the
    ones produced by the split (kept for the discrepancy script).
    """
    if i not in (1, 2):
        raise DomainError("i must be 1 or 2")
    b = SeriesBuilder(D)
    if variant == "SLATER":
        c = 0 if i == 1 else 2
        n = 0
        while n * n + c * n <= D:
            num = mono_pochhammer(mono(1, -1), mono(2), n)
            b.add(num * _inv(2, n, D), n * n + c * n)
            n += 1
    elif variant in ("KAGAN", "KAGAN_T35_LHS"):
        ex = norm_K if i == 1 else (lambda m, n: norm_K(m, n) + 2 * m + 4 * n)
        for m, n, e in _lattice(ex, D):
            b.add(_inv(1, m, D) * _inv(4, n, D), e, m + 2 * n)
    elif variant == "ALI":
        ex = norm_G if i == 1 else (lambda m, n: norm_G(m, n) + 2 * m + 2 * n)
        for m, n, e in _lattice(ex, D):
            b.add(_inv(1, m, D) * _inv(4, n // 2, D), e, m + n)
    elif variant == "KAGAN_T35_RHS":
        if i == 1:
            ex = lambda m, n: norm_K(m, n) + m
            tail = (lambda m, n: m + 4 * n + 1) if printed else (lambda m, n: 2 * m + 4 * n + 1)
        else:
            ex = lambda m, n: norm_K(m, n) + 3 * m + 4 * n
            tail = (lambda m, n: 2 * m + 8 * n + 3) if printed else (lambda m, n: 2 * m + 4 * n + 3)
        for m, n, e in _lattice(ex, D):
            den = _inv(1, m, D) * _inv(4, n, D)
            b.add(den, e, m + 2 * n)
            b.add(den, e + tail(m, n), m + 2 * n + 1)
    elif variant == "PRODUCT":
        return gg_product(i, D)
    elif variant == "COR":
        extra = 0 if i == 1 else 1
        ex = lambda m, n: 2 * m * m + 2 * m * n + n * n + extra * (2 * m + 2 * n)
        for m, n, e in _lattice(ex, D):
            b.add(_inv(2, m, D) * _inv(2, n, D), e)
    else:
        raise DomainError(f"unknown GG variant {variant!r}")
    return b.build()


def fin_gg_summand(i: int, side: str, m: int, n: int, N: int) -> LaurentSeries:
    """One summand of the finite Gollnitz-Gordon identity (largest part 2N+1)."""
    if side == "LHS":
        h = n // 2
        if i == 1:
            return (gauss(2 * N - 2 * m - 2 * n + 2, m) * gauss(N - m - n + 1 + h, h, 4)).shift(norm_G(m, n))
        t = gauss(2 * N - 2 * m - 2 * n, m) * gauss(N - m - n + h, h, 4)
        return t.shift(norm_G(m, n) + 2 * m + 2 * n)
    if i == 1:
        return (gauss(N - m + 1, n, 2) * gauss(n, m, 2)).shift(m * m + n * n)
    return (gauss(N - m, n, 2) * gauss(n, m, 2)).shift(m * m + n * n + 2 * n)


def lg_transform_summand(i: int, side: str, m: int, n: int, N: int, printed: bool = False) -> LaurentSeries:
    """One summand of the two finite little Gollnitz transformations."""
    if side == "LHS":
        h = n // 2
        if i == 1:
            return (gauss(2 * N - 2 * m - 2 * n, m) * gauss(N - m - n + h, h, 4)).shift(norm_L(m, n))
        t = gauss(2 * N - 2 * m - 2 * n - 2, m) * gauss(N - m - n - 1 + h, h, 4)
        return t.shift(norm_L(m, n) + 2 * m + 2 * n + 1)
    if i == 1:
        return (gauss(N - m, n, 2) * gauss(n, m, 2)).shift(m * m + n * n + n)
    if printed:
        return (gauss(N - m + 1, n, 2) * gauss(n, m, 2)).shift(m * m + n * n + 3 * n + 3)
    return (gauss(N - m - 1, n, 2) * gauss(n, m, 2)).shift(m * m + n * n + 3 * n + 1)


def ug_summand(k: int, l: int, m: int, n: int, N: int) -> LaurentSeries:
    """x-marked summand of the bounded uniform-gap double sum."""
    w = N - l - (n - 1) * k - k * m
    t = qbinomial(m, w - m) * qbinomial(n // 2, w, 2)
    return t.shift(norm_Q(k, l, m, n), m + n)


def ug_single_summand(k: int, l: int, j: int, N: int) -> LaurentSeries:
    return qbinomial(j, N - l - (j - 1) * k).shift(l * j + k * j * (j - 1) // 2, j)


GG_BOUNDED_VARIANTS = ("ALI_BDD", "KAGAN_BDD", "BMO", "FIN_LHS", "FIN_RHS")


def gg_bounded(i: int, variant: str, N: int, corrections: bool = True) -> LaurentSeries:
    """Exact bounded Gollnitz-Gordon polynomials.

    ``ALI_BDD`` and ``KAGAN_BDD`` bound the largest part by N and carry x.
    ``BMO`` / ``FIN_RHS`` and ``FIN_LHS`` are the two sides of the finite
    identity where the largest part is at most 2N+1 (x = 1).

    For i = 2 and N = 0 no summand of ``ALI_BDD``/``KAGAN_BDD`` survives,
    yet the empty partition is still counted; ``corrections`` adds that 1,
    mirroring the chi term of the uniform-gap finitization.
    """
    if i not in (1, 2):
        raise DomainError("i must be 1 or 2")
    b = SeriesBuilder(None)
    lim = max(N, 0) + 3
    if variant == "ALI_BDD":
        for m, n in _box(lim):
            if i == 1:
                e = norm_G(m, n)
                t = qbinomial(m, N - 3 * m - 2 * n + 1) * qbinomial(n // 2, (N + 1) // 2 - m - n, 4)
            else:
                e = norm_G(m, n) + 2 * m + 2 * n
                t = qbinomial(m, N - 3 * m - 2 * n - 1) * qbinomial(n // 2, (N - 1) // 2 - m - n, 4)
            b.add(t, e, m + n)
        if corrections and i == 2 and N == 0:
            b.add_monomial(0)
    elif variant == "KAGAN_BDD":
        for m, n in _box(lim):
            if i == 1:
                e = norm_K(m, n)
                t = qbinomial(m, N - 3 * m - 4 * n + 2) * qbinomial(n, (N + 1) // 2 - m - 2 * n, 4)
            else:
                e = norm_K(m, n) + 2 * m + 4 * n
                t = qbinomial(m, N - 3 * m - 4 * n) * qbinomial(n, (N - 1) // 2 - m - 2 * n, 4)
            b.add(t, e, m + 2 * n)
        if corrections and i == 2 and N == 0:
            b.add_monomial(0)
    elif variant in ("BMO", "FIN_RHS"):
        for m, n in _box(lim):
            b.add(fin_gg_summand(i, "RHS", m, n, N))
    elif variant == "FIN_LHS":
        for m, n in _box(2 * lim):
            b.add(fin_gg_summand(i, "LHS", m, n, N))
    else:
        raise DomainError(f"unknown bounded GG variant {variant!r}")
    return b.build()


# ---------------------------------------------------------------------------
# little Gollnitz sums
# ---------------------------------------------------------------------------

LG_VARIANTS = ("SLATER", "ALI", "AB", "PRODUCT", "SIMPLIFY_LHS", "SIMPLIFY_RHS")
LG_BOUNDED_VARIANTS = ("ALI_BDD", "T45_LHS1", "T45_RHS1", "T45_LHS2", "T45_RHS2", "NOT_AB")


def lg_sums(i: int, variant: str, D: int) -> LaurentSeries:
    """Unbounded little Gollnitz generating functions (i selects the family)."""
    if i not in (1, 2):
        raise DomainError("i must be 1 or 2")
    b = SeriesBuilder(D)
    if variant == "SLATER":
        shift = -1 if i == 1 else 1
        n = 0
        while n * n + n + (shift * n if shift < 0 else 0) <= D:
            num = mono_pochhammer(mono(shift, -1), mono(2), n).shift(n * n + n)
            b.add(ratio(num, qpoch(2, 2, n), D))
            n += 1
    elif variant == "ALI":
        for m, n, e in _lattice(norm_L, D):
            den = _inv(1, m, D) * _inv(4, n // 2, D)
            b.add(den, e, m + n)
            if i == 1 and e + 2 * m + 2 * n + 1 <= D:
                b.add(den, e + 2 * m + 2 * n + 1, m + n + 1)
    elif variant == "AB":
        sg = -1 if i == 1 else 1
        for m, n, e in _lattice(lambda m, n: m * m + 2 * m * n + 2 * n * n + m + sg * n, D):
            b.add(_inv(2, m, D) * _inv(2, n, D), e)
    elif variant == "PRODUCT":
        return lg_product(i, D)
    elif variant == "SIMPLIFY_LHS":
        for m, n, e in _lattice(lambda m, n: 2 * m * m + 2 * m * n + n * n - m - n, D):
            den = _inv(2, m, D) * _inv(2, n, D)
            b.add(den, e)
            b.add(den, e + 2 * m + 2 * n, 0, -1)
    elif variant == "SIMPLIFY_RHS":
        for m, n, e in _lattice(lambda m, n: 2 * m * m + 2 * m * n + n * n - m + n, D):
            b.add(_inv(2, m, D) * _inv(2, n, D), e)
    else:
        raise DomainError(f"unknown LG variant {variant!r}")
    return b.build()


def lg_bounded(i: int, variant: str, N: int, printed: bool = False) -> LaurentSeries:
    """Exact bounded little Gollnitz polynomials.

    ``ALI_BDD`` bounds the largest part by N and carries x.  The ``T45_*``
    pieces are the two finite transformation identities in N, and ``NOT_AB``
    is the generating function with largest part at most 2N (x = 1).

    ``T45_RHS2`` is ``q^(m^2+n^2+3n+1) [N-m-1, n]_{q^2} [n, m]_{q^2}``; with
    ``printed=True`` the alternative ``q^(m^2+n^2+3n+3) [N-m+1, n]`` form is
    returned instead.
    """
    if i not in (1, 2):
        raise DomainError("i must be 1 or 2")
    b = SeriesBuilder(None)
    lim = max(N, 0) + 3
    if variant == "ALI_BDD":
        for m, n in _box(lim):
            e = norm_L(m, n)
            t = qbinomial(m, N - 3 * m - 2 * n) * qbinomial(n // 2, N // 2 - m - n, 4)
            b.add(t, e, m + n)
            if i == 1:
                t2 = qbinomial(m, N - 3 * m - 2 * n - 2) * qbinomial(n // 2, N // 2 - m - n - 1, 4)
                b.add(t2, e + 2 * m + 2 * n + 1, m + n + 1)
        if i == 1 and N == 1:
            b.add_monomial(1, 1)
    elif variant in ("T45_LHS1", "T45_LHS2"):
        for m, n in _box(2 * lim):
            b.add(lg_transform_summand(int(variant[-1]), "LHS", m, n, N))
    elif variant in ("T45_RHS1", "T45_RHS2"):
        for m, n in _box(lim):
            b.add(lg_transform_summand(int(variant[-1]), "RHS", m, n, N, printed))
    elif variant == "NOT_AB":
        for m, n in _box(lim):
            top = n + 1 if i == 1 else n
            b.add(gauss(N - m, n, 2) * gauss(top, m, 2), m * m + n * n + n)
    else:
        raise DomainError(f"unknown bounded LG variant {variant!r}")
    return b.build()


def little_difference(side: str, D: int) -> LaurentSeries:
    if side == "LHS":
        b = SeriesBuilder(D)
        ex = lambda m, n: 3 * (m * m + m) // 2 + 2 * n * m + n * n + 3 * n + 2 * m + 1
        for m, n, e in _lattice(ex, D):
            b.add(_inv(1, m, D) * _inv(4, n // 2, D), e)
        return b.build()
    if side == "RHS":
        return lg_product(1, D) - lg_product(2, D)
    raise DomainError(f"side must be LHS or RHS, got {side!r}")


# ---------------------------------------------------------------------------
# Stanley-Boulet weighted sums and products of two progressions
# ---------------------------------------------------------------------------


def phi_n(N: int, a: MonomialParam, b: MonomialParam, c: MonomialParam, d: MonomialParam, D: int) -> LaurentSeries:
    """Weighted generating function of partitions into parts <= N.

    Cells of odd-indexed rows (counted from the largest part) alternate the
    weights a, b and cells of even-indexed rows alternate c, d.  Evaluated
    from the finite sum in base ``abcd``, whose exponent must be positive.
    """
    if N < 0:
        raise DomainError("N must be non-negative")
    P = a * b * c * d
    if P.exponent <= 0:
        raise DomainError(f"abcd = {P} must have a positive exponent")
    if P.sign != 1:
        raise DomainError("abcd must have sign +1")
    F = N // 2
    eps = (N + 1) // 2 - F
    ac = a * c
    ab = a * b
    abc = a * b * c
    # with no negative exponents around, every factor may be cut at D early
    T = D if min(a.exponent, ac.exponent, abc.exponent, ab.exponent) >= 0 else None
    # bring every summand over (ac; P)_{F+eps}
    total = LaurentSeries.zero(T)
    for i in range(F + 1):
        t = qbinomial(i, F - i, P.exponent).truncate(T)
        t = t * mono_pochhammer(-a, P, i + eps, T) * mono_pochhammer(-abc, P, i, T)
        t = t * mono_pochhammer(ac * P ** (i + eps), P, F - i, T)
        power = ab ** (F - i)
        total = total + t.shift(power.exponent, 0, power.sign)
    den = mono_pochhammer(P, P, F, T) * mono_pochhammer(ac, P, F + eps, T)
    if T is not None:
        return (total * series_invert(den, D)).truncate(D)
    return ratio(total, den, D)


def phi_weight_oracle(N: int, a: MonomialParam, b: MonomialParam, c: MonomialParam, d: MonomialParam, D: int) -> LaurentSeries:
    """Direct cell-weight enumeration for :func:`phi_n` (small cases only)."""
    weights = {}

    def cell(row: int, col: int) -> MonomialParam:
        if row % 2 == 1:
            return a if col % 2 == 1 else b
        return c if col % 2 == 1 else d

    acc: dict[int, int] = {}
    # rows from the largest part; each row weight depends on its length and parity
    for row_parity in (1, 0):
        for length in range(1, N + 1):
            w = MonomialParam()
            for col in range(1, length + 1):
                w = w * cell(2 - row_parity, col)
            weights[(row_parity, length)] = w
    if any(w.exponent <= 0 for w in weights.values()):
        raise DomainError("oracle needs positive row weights")

    def rec(row: int, cap: int, sign: int, e: int):
        acc[e] = acc.get(e, 0) + sign
        for length in range(1, cap + 1):
            w = weights[(row % 2, length)]
            if e + w.exponent <= D:
                rec(row + 1, length, sign * w.sign, e + w.exponent)

    rec(1, N, 1, 0)
    return LaurentSeries(acc, D)


def _phi_residue(j: int, r: int, M: int, D: int) -> LaurentSeries:
    return _phi_residue_cached(j, r, M, D)


@lru_cache(maxsize=None)
def _phi_residue_cached(j: int, r: int, M: int, D: int) -> LaurentSeries:
    return phi_n(j, mono(r), mono(r), mono(M - r), mono(M - r), D)


def product_family(side: str, s: int, r: int, M: int, D: int) -> LaurentSeries:
    """``1/(x q^s, x q^(s+r); q^M)_inf`` and its weighted-sum expansion (x marked)."""
    if s < 1 or M < 1 or not 0 <= r <= M:
        raise DomainError("need s >= 1, M >= 1 and 0 <= r <= M")
    if side == "PRODUCT":
        return inv_infinite_product([(1, s, M), (1, s + r, M)], D, xpow=1)
    if side == "DOUBLE_SUM":
        b = SeriesBuilder(D)
        j = 0
        while s * j <= D:
            b.add(_phi_residue(j, r, M, D - s * j), s * j, j)
            j += 1
        return b.build()
    raise DomainError(f"side must be PRODUCT or DOUBLE_SUM, got {side!r}")


PRODUCT_TRIPLETS = ((1, 1, 2), (1, 2, 4), (1, 3, 5), (2, 1, 5))


def jtp_corollary(side: str, s: int, r: int, D: int) -> LaurentSeries:
    if s < 1 or r < 0:
        raise DomainError("need s >= 1 and r >= 0")
    P = 2 * s + r
    if side == "LHS":
        return infinite_product([(-1, s, P), (-1, s + r, P), (1, P, P)], D)
    if side == "RHS":
        first = infinite_product([(-1, 2 * P + r, 4 * P), (-1, 2 * P - r, 4 * P), (1, 4 * P, 4 * P)], D)
        tail = [(-1, 4 * P - r, 4 * P), (1, 4 * P, 4 * P)]
        if r == 0:
            # (-1; q^4P)_inf starts with the constant factor 2
            second = infinite_product([(-1, 4 * P, 4 * P)] + tail, D) * 2
        else:
            second = infinite_product([(-1, r, 4 * P)] + tail, D)
        return first + second.shift(s).truncate(D)
    raise DomainError(f"side must be LHS or RHS, got {side!r}")


def outlook_rr(i: int, side: str, D: int) -> LaurentSeries:
    """Rogers-Ramanujan double sums: gap-split form versus weighted-sum form."""
    if i not in (1, 2):
        raise DomainError("i must be 1 or 2")
    if side == "LHS":
        return ug_corollary(2, i, D).specialize_x(1)
    if side == "RHS":
        s, r, M = (1, 3, 5) if i == 1 else (2, 1, 5)
        return product_family("DOUBLE_SUM", s, r, M, D).specialize_x(1)
    raise DomainError(f"side must be LHS or RHS, got {side!r}")
