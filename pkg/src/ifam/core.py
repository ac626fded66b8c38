"""Exact binomials, cascade forms, lex order and the bitset family container.

Sets are stored as Python ints used as bitsets: element e lives at bit e - 1.
The encoding is absolute, so families over [n] and over [2, n] can be mixed
freely. All public functions take and return 1-indexed element labels.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); zero when k < 0 or k > n. Negative n is rejected."""
    if n < 0:
        raise ValueError(f"binomial with negative top argument n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def real_binomial(x, k: int):
    """C(x, k) for real x via the falling-factorial product x(x-1)...(x-k+1)/k!.

    Exact (Fraction) when x is an int or Fraction, float otherwise.
    """
    if k < 0:
        return 0
    if isinstance(x, int) and x >= 0:
        return Fraction(binomial(x, k))
    if isinstance(x, (int, Fraction)):
        acc = Fraction(1)
        for i in range(k):
            acc *= Fraction(x) - i
        return acc / math.factorial(k)
    acc = 1.0
    for i in range(k):
        acc *= float(x) - i
    return acc / math.factorial(k)


# -- cascades ---------------------------------------------------------------

@dataclass(frozen=True)
class CascadeForm:
    """m = sum of C(a_j, j) over terms, j running down from r without gaps."""

    r: int
    terms: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return sum(binomial(a, j) for a, j in self.terms)

    def as_list(self) -> list[tuple[int, int]]:
        return list(self.terms)


def _largest_top(m: int, j: int) -> int:
    """Largest a with C(a, j) <= m (m >= 1, j >= 1)."""
    lo, hi = j, j
    while binomial(hi, j) <= m:
        lo, hi = hi, 2 * hi
    # C(lo, j) <= m < C(hi, j)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if binomial(mid, j) <= m:
            lo = mid
        else:
            hi = mid
    return lo


def cascade(m: int, r: int) -> CascadeForm:
    """Greedy r-cascade decomposition of m."""
    if m < 0:
        raise ValueError("cascade of a negative integer")
    if r < 1:
        raise ValueError("cascade index r must be >= 1")
    terms = []
    rest, j = m, r
    while rest > 0:
        if j < 1:  # cannot happen for a valid greedy run
            raise AssertionError("cascade ran out of indices")
        a = _largest_top(rest, j)
        terms.append((a, j))
        rest -= binomial(a, j)
        j -= 1
    return CascadeForm(r, tuple(terms))


# -- bitset helpers ---------------------------------------------------------

def to_mask(elems: Iterable[int]) -> int:
    m = 0
    for e in elems:
        if e < 1:
            raise ValueError(f"element {e} is not a positive integer")
        m |= 1 << (e - 1)
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def interval_mask(lo: int, hi: int) -> int:
    """Bitset of [lo, hi]; empty when hi < lo."""
    if hi < lo:
        return 0
    return ((1 << (hi - lo + 1)) - 1) << (lo - 1)


# -- lex order ---------------------------------------------------------------

def lex_compare(A: Iterable[int], B: Iterable[int]) -> int:
    """-1 if A precedes B, 0 if equal, 1 otherwise.

    Uses the containment-extended order: a proper superset comes first;
    otherwise the set owning the smallest element of the symmetric
    difference comes first. On equal-size sets this is the plain lex order.
    """
    a, b = set(A), set(B)
    if a == b:
        return 0
    if a > b:
        return -1
    if b > a:
        return 1
    return -1 if min(a ^ b) in a else 1


@dataclass(frozen=True)
class GroundSet:
    """The integer interval [lo, hi]."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 1 or self.hi < self.lo:
            raise ValueError(f"bad ground set [{self.lo}, {self.hi}]")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    @property
    def mask(self) -> int:
        return interval_mask(self.lo, self.hi)

    def __contains__(self, e: int) -> bool:
        return self.lo <= e <= self.hi

    def elements(self) -> range:
        return range(self.lo, self.hi + 1)

    def subsets(self, k: int) -> Iterator[tuple[int, ...]]:
        """All k-subsets in lex order."""
        return itertools.combinations(self.elements(), k)


def lex_rank(ground: GroundSet, subset: Sequence[int]) -> int:
    """Position of a k-subset in the lex order of C(ground, k)."""
    s = sorted(subset)
    k = len(s)
    N = ground.size
    rank = 0
    prev = ground.lo - 1
    for pos, x in enumerate(s):
        if x not in ground or x <= prev:
            raise ValueError(f"{subset} is not a subset of {ground}")
        left = k - pos - 1
        # sets agreeing so far but using a smaller element at this position
        for y in range(prev + 1, x):
            rank += binomial(ground.hi - y, left)
        prev = x
    assert rank < binomial(N, k)
    return rank


def lex_unrank(ground: GroundSet, k: int, index: int) -> tuple[int, ...]:
    """The k-subset at the given lex position."""
    total = binomial(ground.size, k)
    if not 0 <= index < total:
        raise ValueError(f"index {index} out of range for C({ground.size},{k})")
    out = []
    y = ground.lo
    rest = index
    for pos in range(k):
        left = k - pos - 1
        while True:
            block = binomial(ground.hi - y, left)
            if rest < block:
                break
            rest -= block
            y += 1
        out.append(y)
        y += 1
    return tuple(out)


# -- families ----------------------------------------------------------------

def _lex_key(mask: int) -> tuple[int, ...]:
    return from_mask(mask)


class SetFamily:
    """Immutable k-uniform family over a GroundSet, members kept in lex order."""

    __slots__ = ("ground", "k", "masks", "_maskset")

    def __init__(self, ground: GroundSet, k: int, sets: Iterable = ()):
        masks = set()
        gmask = ground.mask
        for s in sets:
            m = s if isinstance(s, int) else to_mask(s)
            if popcount(m) != k:
                raise ValueError(f"member {from_mask(m)} is not a {k}-set")
            if m & ~gmask:
                raise ValueError(f"member {from_mask(m)} leaves the ground set {ground}")
            masks.add(m)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "masks", tuple(sorted(masks, key=_lex_key)))
        object.__setattr__(self, "_maskset", frozenset(masks))

    def __setattr__(self, name, value):
        raise AttributeError("SetFamily is immutable")

    @classmethod
    def from_sorted_masks(cls, ground: GroundSet, k: int, masks: Sequence[int]) -> "SetFamily":
        """Trusted constructor for masks already valid and in lex order."""
        fam = cls.__new__(cls)
        object.__setattr__(fam, "ground", ground)
        object.__setattr__(fam, "k", k)
        object.__setattr__(fam, "masks", tuple(masks))
        object.__setattr__(fam, "_maskset", frozenset(masks))
        return fam

    def __len__(self) -> int:
        return len(self.masks)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return (from_mask(m) for m in self.masks)

    def __contains__(self, s) -> bool:
        m = s if isinstance(s, int) else to_mask(s)
        return m in self._maskset

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return (self.ground, self.k, self._maskset) == (other.ground, other.k, other._maskset)

    def __hash__(self) -> int:
        return hash((self.ground, self.k, self._maskset))

    def __repr__(self) -> str:
        return f"SetFamily([{self.ground.lo},{self.ground.hi}], k={self.k}, size={len(self)})"

    def sets(self) -> list[tuple[int, ...]]:
        return list(self)

    @property
    def maskset(self) -> frozenset:
        return self._maskset

    def union_mask(self) -> int:
        u = 0
        for m in self.masks:
            u |= m
        return u

    def active_elements(self) -> tuple[int, ...]:
        return from_mask(self.union_mask())

    def degree(self, e: int) -> int:
        bit = 1 << (e - 1)
        return sum(1 for m in self.masks if m & bit)

    def degrees(self) -> dict[int, int]:
        return {e: self.degree(e) for e in self.ground.elements()}

    def is_intersecting(self) -> bool:
        ms = self.masks
        for i, a in enumerate(ms):
            for b in ms[i + 1:]:
                if not a & b:
                    return False
        # a single empty set does not intersect itself
        return not (self.k == 0 and len(ms) > 0)

    def with_ground(self, ground: GroundSet) -> "SetFamily":
        return SetFamily(ground, self.k, self.masks)


def cross_intersecting(A: Iterable[int], B: Iterable[int]) -> bool:
    """Every mask of A meets every mask of B."""
    B = list(B)
    return all(a & b for a in A for b in B)


def lex_initial(ground: GroundSet, m: int, k: int) -> SetFamily:
    """L(X, m, k): the first m k-subsets of the ground set in lex order, by unranking."""
    total = binomial(ground.size, k)
    if not 0 <= m <= total:
        raise ValueError(f"m={m} outside [0, {total}]")
    masks = [to_mask(lex_unrank(ground, k, i)) for i in range(m)]
    return SetFamily.from_sorted_masks(ground, k, masks)


def colex_initial(ground: GroundSet, m: int, k: int) -> SetFamily:
    """First m k-subsets in colex order (compare largest elements first)."""
    total = binomial(ground.size, k)
    if not 0 <= m <= total:
        raise ValueError(f"m={m} outside [0, {total}]")
    subs = sorted(ground.subsets(k), key=lambda s: s[::-1])[:m]
    return SetFamily(ground, k, subs)
