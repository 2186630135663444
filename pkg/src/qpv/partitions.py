"""Partition families with gap conditions, brute-force enumeration, and the
minimal-configuration bijections.

A partition is stored in weakly increasing order.  Families are small frozen
dataclasses that know their membership rule and the smallest part allowed to
follow a given part.

Bijections
----------
Every member of a gap family can be written as a *minimal configuration*
(an initial chain of ``n`` tightly packed parts followed by ``m`` singletons)
together with two move partitions: ``mu`` (at most ``m`` parts, advancing
the singletons) and ``nu`` (at most ``n // 2`` parts, advancing pairs split
off the top of the chain).  :func:`compose` runs the moves part by part, with
pairs jumping over singletons when they catch up with them.  :func:`decompose`
inverts it through the offset normal form: subtracting the part-wise offsets
of the tightest packing turns a member into a weakly increasing sequence
whose multiplicities read off the chain, the singletons and the pairs.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Iterator

from .errors import DomainError, MembershipError, MoveError, ParseError
from .series import LaurentSeries

UNBOUNDED = None


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p < 1 for p in parts):
            raise DomainError(f"parts must be positive: {parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"parts must be weakly increasing: {parts}")

    @classmethod
    def of(cls, parts) -> "Partition":
        return cls(tuple(sorted(parts)))

    @property
    def norm(self) -> int:
        return sum(self.parts)

    @property
    def count(self) -> int:
        return len(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def parse_partition(text: str) -> Partition:
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise ParseError(f"partition must be parenthesised: {text!r}")
    body = t[1:-1].strip()
    if not body:
        return Partition()
    try:
        return Partition(tuple(int(p) for p in body.split(",")))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Family:
    """A set of partitions described by a local rule.

    tags: ``UG`` (smallest part >= l, gaps >= k); ``GG1``/``GG2`` (parts
    >= 1/3, gaps >= 2, no two consecutive even parts); ``LG1``/``LG2``
    (parts >= 1/2, gaps >= 2, no two consecutive odd parts); ``RESIDUE``
    (parts from the sequences s + jM and s + r + jM, a value occurring in
    both sequences comes in two colours); ``MOD`` (parts whose residue mod M
    lies in ``residues``, repetition allowed).
    """

    tag: str
    k: int = 0
    l: int = 1
    s: int = 0
    r: int = 0
    M: int = 1
    residues: tuple[int, ...] = ()

    def __post_init__(self):
        if self.tag not in ("UG", "GG1", "GG2", "LG1", "LG2", "RESIDUE", "MOD"):
            raise DomainError(f"unknown family tag {self.tag!r}")
        if self.tag == "UG" and (self.k < 0 or self.l < 1):
            raise DomainError("UG needs k >= 0 and l >= 1")
        if self.tag == "RESIDUE" and (self.s < 1 or self.M < 1 or not 0 <= self.r <= self.M):
            raise DomainError("RESIDUE needs s >= 1, M >= 1 and 0 <= r <= M")
        if self.tag == "MOD" and (self.M < 1 or not self.residues):
            raise DomainError("MOD needs M >= 1 and a residue set")

    # -- local rule ---------------------------------------------------------

    @property
    def min_part(self) -> int:
        return {"UG": self.l, "GG1": 1, "GG2": 3, "LG1": 1, "LG2": 2}.get(self.tag, 1)

    def colours(self, v: int) -> int:
        """Number of distinguishable copies of part size ``v``."""
        if self.tag == "RESIDUE":
            return int(v >= self.s and (v - self.s) % self.M == 0) + int(
                v >= self.s + self.r and (v - self.s - self.r) % self.M == 0
            )
        if self.tag == "MOD":
            return int(v % self.M in {r % self.M for r in self.residues})
        return int(v >= self.min_part)

    def next_min(self, p: int) -> int:
        """Smallest part allowed right after part ``p``."""
        if self.tag == "UG":
            return p + self.k
        if self.tag in ("GG1", "GG2"):
            return p + (3 if p % 2 == 0 else 2)
        if self.tag in ("LG1", "LG2"):
            return p + (3 if p % 2 == 1 else 2)
        return p

    def contains(self, parts) -> bool:
        parts = tuple(parts)
        if any(a > b for a, b in zip(parts, parts[1:])):
            return False
        if any(self.colours(p) == 0 for p in parts):
            return False
        if parts and parts[0] < self.min_part:
            return False
        return all(b >= self.next_min(a) for a, b in zip(parts, parts[1:]))

    def weight(self, parts) -> int:
        """Number of colourings of ``parts`` (1 for uncoloured families)."""
        if self.tag != "RESIDUE":
            return 1
        w = 1
        for v, c in Counter(parts).items():
            col = self.colours(v)
            if col == 2:
                w *= c + 1
        return w

    def __str__(self):
        if self.tag == "UG":
            return f"UG({self.k},{self.l})"
        if self.tag == "RESIDUE":
            return f"RESIDUE({self.s},{self.r},{self.M})"
        if self.tag == "MOD":
            return f"MOD({','.join(map(str, self.residues))};{self.M})"
        return self.tag


def UG(k: int, l: int) -> Family:
    return Family("UG", k=k, l=l)


def GG(i: int) -> Family:
    return Family(f"GG{i}")


def LG(i: int) -> Family:
    return Family(f"LG{i}")


def RESIDUE(s: int, r: int, M: int) -> Family:
    return Family("RESIDUE", s=s, r=r, M=M)


def MOD(residues, M: int) -> Family:
    return Family("MOD", residues=tuple(sorted(residues)), M=M)


_FAMILY_RE = re.compile(r"^(UG|RESIDUE|MOD)\((.*)\)$")


def parse_family(text: str) -> Family:
    t = text.replace(" ", "").upper()
    if t in ("GG1", "GG2", "LG1", "LG2"):
        return Family(t)
    m = _FAMILY_RE.match(t)
    if not m:
        raise ParseError(f"unknown family {text!r}")
    tag, body = m.groups()
    try:
        if tag == "MOD":
            res, mod = body.split(";")
            return MOD([int(v) for v in res.split(",")], int(mod))
        args = [int(v) for v in body.split(",")]
    except ValueError:
        raise ParseError(f"bad family arguments in {text!r}") from None
    if tag == "UG" and len(args) == 2:
        return UG(*args)
    if tag == "RESIDUE" and len(args) == 3:
        return RESIDUE(*args)
    raise ParseError(f"wrong number of arguments in {text!r}")


@dataclass(frozen=True)
class FamilyConstraint:
    family: Family
    max_norm: int
    max_part: int | None = UNBOUNDED

    def __post_init__(self):
        if self.max_norm is None or self.max_norm < 0:
            raise DomainError("max_norm must be a finite non-negative integer")

    def part_ceiling(self) -> int:
        if self.max_part is None:
            return self.max_norm
        return min(self.max_part, self.max_norm)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def iter_partitions(c: FamilyConstraint) -> Iterator[Partition]:
    """Members of the family with norm <= max_norm, lexicographically."""
    fam = c.family
    top = c.part_ceiling()
    D = c.max_norm
    prefix: list[int] = []

    def rec(lo: int, budget: int):
        yield Partition(tuple(prefix))
        for p in range(lo, min(top, budget) + 1):
            if fam.colours(p) == 0:
                continue
            prefix.append(p)
            yield from rec(fam.next_min(p), budget - p)
            prefix.pop()

    yield from rec(fam.min_part, D)


def enumerate_family(c: FamilyConstraint) -> list[Partition]:
    return list(iter_partitions(c))


def gf_of_family(c: FamilyConstraint) -> LaurentSeries:
    """Sum of x^count q^norm over the family, truncated at max_norm.

    Counts are accumulated by recursion over the smallest part, memoised on
    (smallest allowed part, remaining budget); no partition objects are built.
    """
    fam = c.family
    top = c.part_ceiling()
    D = c.max_norm
    kinds: list[int] = []  # part sizes, one entry per colour
    for v in range(fam.min_part, top + 1):
        kinds.extend([v] * fam.colours(v))
    # smallest kind index allowed after kind j
    first_at: dict[int, int] = {}
    for j in range(len(kinds) - 1, -1, -1):
        first_at[kinds[j]] = j
    colored = fam.tag in ("RESIDUE", "MOD")

    def after(j: int) -> int:
        if colored:
            return j
        v = fam.next_min(kinds[j])
        while v <= top and v not in first_at:
            v += 1
        return first_at.get(v, len(kinds))

    @lru_cache(maxsize=None)
    def table(j: int, budget: int) -> tuple:
        # rows[count][norm] for partitions using kinds[j:], norm <= budget
        rows = [[1] + [0] * budget]
        for i in range(j, len(kinds)):
            v = kinds[i]
            if v > budget:
                break
            sub = table(after(i), budget - v)
            for cnt, row in enumerate(sub):
                while len(rows) <= cnt + 1:
                    rows.append([0] * (budget + 1))
                tgt = rows[cnt + 1]
                for e, val in enumerate(row):
                    if val:
                        tgt[e + v] += val
        return tuple(tuple(r) for r in rows)

    rows = table(0, D)
    table.cache_clear()
    sl = {cnt: (0, list(row)) for cnt, row in enumerate(rows)}
    return LaurentSeries._raw(sl, D)


def gf_by_listing(c: FamilyConstraint) -> LaurentSeries:
    """Same as :func:`gf_of_family`, by walking the explicit list (slower oracle)."""
    from .series import SeriesBuilder

    b = SeriesBuilder(c.max_norm)
    for p in iter_partitions(c):
        b.add_monomial(p.norm, p.count, c.family.weight(p.parts))
    return b.build()


# ---------------------------------------------------------------------------
# minimal configurations and motions
# ---------------------------------------------------------------------------

CONFIG_KINDS = ("UG", "GG1", "GG2", "LG1", "LG2")


@dataclass(frozen=True)
class MinimalConfig:
    """Base partition with an initial chain of ``n`` parts and ``m`` singletons.

    ``LG1`` is the little-Gollnitz configuration without the part 1 and
    ``LG2`` the one that carries an immobile leading 1.
    """

    kind: str
    m: int
    n: int
    k: int = 0
    l: int = 1

    def __post_init__(self):
        if self.kind not in CONFIG_KINDS:
            raise DomainError(f"unknown configuration kind {self.kind!r}")
        if self.m < 0 or self.n < 0:
            raise DomainError("m and n must be non-negative")

    @property
    def gap(self) -> int:
        """Offset increment between consecutive parts of the tightest packing."""
        return self.k if self.kind == "UG" else 2

    @property
    def pair_step(self) -> int:
        """How far each part of a pair advances in one free move."""
        return 1 if self.kind == "UG" else 2

    @property
    def norm_step(self) -> int:
        return 2 * self.pair_step

    def offset(self, i: int) -> int:
        """Offset of the i-th part (1-based) of the movable block."""
        if self.kind == "UG":
            return self.l + (i - 1) * self.k
        return {"GG1": 2 * i - 1, "GG2": 2 * i + 1, "LG1": 2 * i, "LG2": 2 * i}[self.kind]

    def base_partition(self) -> Partition:
        t = self.m + self.n
        parts = [self.offset(i) for i in range(1, self.n + 1)]
        parts += [self.offset(self.n + j) + j for j in range(1, self.m + 1)]
        if self.kind == "LG2":
            return Partition((1,) + tuple(p + 2 for p in parts))
        assert len(parts) == t
        return Partition(tuple(parts))

    def base_norm(self) -> int:
        return self.base_partition().norm

    def family(self) -> Family:
        if self.kind == "UG":
            return UG(self.k, self.l)
        if self.kind in ("LG1", "LG2"):
            return LG(1) if self.kind == "LG2" else LG(2)
        return Family(self.kind)

    def __str__(self):
        head = f"UG({self.k},{self.l})" if self.kind == "UG" else self.kind
        return f"{head}[m={self.m},n={self.n}]"


@dataclass(frozen=True)
class MoveData:
    mu: Partition = field(default_factory=Partition)
    nu: Partition = field(default_factory=Partition)

    def __str__(self):
        return f"mu={self.mu} nu={self.nu}"


def compose(config: MinimalConfig, moves: MoveData) -> Partition:
    """Apply singleton moves, then pair moves, to the base partition."""
    m, n = config.m, config.n
    mu = list(moves.mu.parts)
    nu = list(moves.nu.parts)
    if len(mu) > m:
        raise MoveError(f"mu has {len(mu)} parts but only {m} singletons exist")
    if len(nu) > n // 2:
        raise MoveError(f"nu has {len(nu)} parts but the chain yields only {n // 2} pairs")
    if config.kind == "LG2":
        inner = compose(replace(config, kind="LG1"), moves)
        return Partition((1,) + tuple(p + 2 for p in inner.parts))

    vals = list(config.base_partition().parts)
    labels = ["c"] * n + ["s"] * m
    # singletons: the largest is advanced by the largest part of mu
    padded = [0] * (m - len(mu)) + mu
    for j in range(m):
        vals[n + j] += padded[j]

    d, step = config.gap, config.pair_step
    chain_top = n
    for v in sorted(nu, reverse=True):
        i = chain_top - 2
        chain_top -= 2
        labels[i] = labels[i + 1] = "p"
        for _ in range(v):
            # jump over every singleton the pair has caught up with
            while i + 2 < len(vals) and labels[i + 2] == "s" and vals[i + 2] - vals[i + 1] < d + step:
                single = vals[i + 2] - 2 * d
                lo, hi = vals[i + 1], vals[i + 1] + d
                vals[i], vals[i + 1], vals[i + 2] = single, lo, hi
                labels[i], labels[i + 2] = "s", "p"
                i += 1
            vals[i] += step
            vals[i + 1] += step
    return Partition(tuple(vals))


def _config_for(parts: tuple[int, ...], family: Family) -> tuple[str, tuple[int, ...]]:
    if family.tag == "UG":
        return "UG", parts
    if family.tag in ("GG1", "GG2"):
        return family.tag, parts
    if family.tag == "LG1" and parts and parts[0] == 1:
        return "LG2", tuple(p - 2 for p in parts[1:])
    if family.tag in ("LG1", "LG2"):
        return "LG1", parts
    raise DomainError(f"family {family} has no minimal-configuration bijection")


def decompose(p: Partition, family: Family) -> tuple[MinimalConfig, MoveData]:
    """Unique (configuration, moves) with ``compose(...) == p``."""
    parts = tuple(p.parts)
    if not family.contains(parts):
        raise MembershipError(f"{p} is not a member of {family}")
    kind, block = _config_for(parts, family)
    probe = MinimalConfig(kind, 0, 0, family.k, family.l)
    shifted = [v - probe.offset(i) for i, v in enumerate(block, start=1)]
    counts = Counter(shifted)
    chain = counts.pop(0, 0)
    singles, pairs = [], []
    for v in sorted(counts):
        c = counts[v]
        if c % 2:
            singles.append(v)
        pairs.extend([v // probe.pair_step] * (c // 2))
    mu = [s - j for j, s in enumerate(singles, start=1)]
    config = MinimalConfig(kind, len(singles), chain + 2 * len(pairs), family.k, family.l)
    moves = MoveData(Partition(tuple(x for x in mu if x)), Partition(tuple(pairs)))
    return config, moves


def configs_for_family(family: Family) -> list[str]:
    if family.tag == "LG1":
        return ["LG1", "LG2"]
    if family.tag == "LG2":
        return ["LG1"]
    if family.tag in ("UG", "GG1", "GG2"):
        return [family.tag]
    raise DomainError(f"family {family} has no minimal-configuration bijection")


def _bounded_partitions(max_parts: int, max_norm: int, weight: int = 1) -> Iterator[tuple[int, ...]]:
    """Weakly increasing tuples with <= max_parts parts and weight*sum <= max_norm."""

    def rec(prefix: list[int], lo: int, left: int):
        yield tuple(prefix)
        if len(prefix) == max_parts:
            return
        v = lo
        while v * weight <= left:
            prefix.append(v)
            yield from rec(prefix, v, left - v * weight)
            prefix.pop()
            v += 1

    yield from rec([], 1, max_norm)


def all_compositions(family: Family, D: int) -> Iterator[tuple[MinimalConfig, MoveData, Partition]]:
    """Every (config, moves) whose image has norm <= D, by direct search."""
    for kind in configs_for_family(family):
        for t in range(0, D + 1):
            any_config = False
            for m in range(t + 1):
                cfg = MinimalConfig(kind, m, t - m, family.k, family.l)
                base = cfg.base_norm()
                if base > D:
                    continue
                any_config = True
                left = D - base
                for mu in _bounded_partitions(m, left):
                    rest = left - sum(mu)
                    for nu in _bounded_partitions(cfg.n // 2, rest, cfg.norm_step):
                        mv = MoveData(Partition(mu), Partition(nu))
                        yield cfg, mv, compose(cfg, mv)
            if not any_config and t > 0:
                break
