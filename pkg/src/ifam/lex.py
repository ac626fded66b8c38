"""Characteristic sets: lex families, their sizes, strong intersection, compression, shadows."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .core import (
    GroundSet,
    SetFamily,
    binomial,
    cascade,
    lex_initial,
    real_binomial,
)

CharSet = tuple  # sorted tuple of element labels


def charset(elems: Iterable[int]) -> CharSet:
    return tuple(sorted(set(elems)))


def lex_count(ground: GroundSet, T: Iterable[int], u: int) -> int:
    """Number of u-subsets of the ground set that precede-or-equal T (extended lex).

    T must lie inside the ground set and have at most u elements. Each element
    c of the ground below max(T) that is missing from T is a stopping point:
    the sets whose first deviation from T is to take c. The last term counts
    the supersets of T that agree with T up to max(T).
    """
    T = sorted(set(T))
    if any(t not in ground for t in T):
        raise ValueError(f"characteristic set {T} leaves the ground set {ground}")
    if len(T) > u:
        raise ValueError(f"characteristic set {T} is larger than the uniformity {u}")
    if not T:
        return binomial(ground.size, u)
    top = T[-1]
    tset = set(T)
    total = 0
    before = 0  # |T ∩ [lo, c)|
    for c in range(ground.lo, top):
        if c in tset:
            before += 1
        else:
            total += binomial(ground.hi - c, u - before - 1)
    total += binomial(ground.hi - top, u - len(T))
    return total


def _is_sentinel(ground: GroundSet, T, u: int) -> bool:
    return len(T) > u and set(T) == set(ground.elements())


def lex_size(n: int, T: Iterable[int], u: int) -> int:
    """|L([2,n], T, u)| in closed form. T = [2, n] is the empty-family sentinel."""
    ground = GroundSet(2, n)
    T = charset(T)
    if _is_sentinel(ground, T, u):
        return 0
    if any(t < 2 or t > n for t in T):
        raise ValueError(f"characteristic set {T} is not inside [2,{n}]")
    return lex_count(ground, T, u)


def lex_family(ground: GroundSet, S: Iterable[int], a: int) -> SetFamily:
    """L(X, S, a): all a-subsets of X preceding-or-equal S ∩ X."""
    T = tuple(e for e in charset(S) if e in ground)
    if _is_sentinel(ground, T, a):
        return SetFamily(ground, a)
    if len(T) > a:
        raise ValueError(f"|S ∩ X| = {len(T)} exceeds a = {a}")
    return lex_initial(ground, lex_count(ground, T, a), a)


def strong_intersect(S: Iterable[int], T: Iterable[int], lo: int = 2) -> tuple[bool, int | None]:
    """Is there j with S ∩ T ∩ [lo, j] = {j} and [lo, j] ⊆ S ∪ T? Returns (verdict, j)."""
    s, t = set(S), set(T)
    common = sorted(e for e in s & t if e >= lo)
    if not common:
        return False, None
    j = common[0]  # the only candidate: the least common element at or above lo
    if all(x in s or x in t for x in range(lo, j + 1)):
        return True, j
    return False, None


def strongly_intersect_at_top(S: Iterable[int], T: Iterable[int], lo: int = 2) -> bool:
    """S ∩ T = {j} and S ∪ T = [lo, j] with j = max T (restricted to elements >= lo)."""
    s = {e for e in S if e >= lo}
    t = {e for e in T if e >= lo}
    if not t:
        return False
    j = max(t)
    return s & t == {j} and s | t == set(range(lo, j + 1))


@dataclass(frozen=True)
class CharPair:
    """Characteristic sets of a lex cross-intersecting pair.

    S describes the a-uniform side and T the b-uniform side. In the diversity
    setting S carries the reserved element 1, T lives in [2, n], and the
    families are built over the ground [2, n].
    """

    S: tuple
    T: tuple
    a: int
    b: int

    def sizes(self, n: int, lo: int = 2) -> tuple[int, int]:
        g = GroundSet(lo, n)
        s = tuple(e for e in self.S if e >= lo)
        return lex_count(g, s, self.a), lex_count(g, self.T, self.b)

    def families(self, n: int, lo: int = 2) -> tuple[SetFamily, SetFamily]:
        g = GroundSet(lo, n)
        return lex_family(g, self.S, self.a), lex_family(g, self.T, self.b)

    @property
    def j(self) -> int:
        return max(self.T)


def max_cross_pair(S, T, a: int, b: int, n: int, lo: int = 2) -> bool:
    """Do L(S, a) and L(T, b) over [lo, n] form a maximal cross-intersecting pair?

    Decided by the characteristic-set criterion: S and T meet exactly in their
    common largest element j and together cover [lo, j].
    """
    width = n - lo + 1
    if a + b > width:
        raise ValueError(f"a + b = {a + b} exceeds the ground size {width}")
    s = [e for e in S if e >= lo]
    if len(s) > a or len(set(T)) > b:
        raise ValueError("characteristic set larger than its uniformity")
    if not s:
        return False
    return max(s) == max(T) and strongly_intersect_at_top(s, T, lo)


def _trigger(S: set, i: int) -> bool:
    inside = sum(1 for x in range(1, i + 1) if x in S)
    return inside >= i - inside


def compress_step(pair: CharPair, i: int) -> CharPair:
    """One bipartite compression at index i (diversity setting, 1 ∈ S).

    Requires 5 <= i <= j and |[i] ∩ S| >= |[i] \\ S|. Returns the pair with
    T' = [i] \\ S and S' = {1} ∪ ([2, j'] \\ T') ∪ {j'} where j' = max T'.
    """
    S = set(pair.S)
    j = pair.j
    if not 5 <= i <= j:
        raise ValueError(f"index {i} outside [5, {j}]")
    if not _trigger(S, i):
        raise ValueError(f"no compression is triggered at index {i}")
    t_new = [x for x in range(2, i + 1) if x not in S]
    if not t_new:
        raise ValueError(f"[{i}] \\ S is empty, no characteristic set to move to")
    jn = t_new[-1]
    s_new = {1, jn} | {x for x in range(2, jn) if x not in t_new}
    return CharPair(tuple(sorted(s_new)), tuple(t_new), pair.a, pair.b)


def first_trigger(pair: CharPair) -> int | None:
    S = set(pair.S)
    for i in range(5, pair.j + 1):
        if _trigger(S, i):
            return i
    return None


def compress_fully(pair: CharPair, max_steps: int = 10_000) -> list[CharPair]:
    """Apply compress_step with the smallest triggering index until none fires."""
    chain = [pair]
    for _ in range(max_steps):
        i = first_trigger(chain[-1])
        if i is None:
            return chain
        chain.append(compress_step(chain[-1], i))
    raise RuntimeError("compression did not terminate")


# -- shadows -----------------------------------------------------------------

def shadow(F: SetFamily) -> SetFamily:
    """All (k-1)-subsets of members."""
    if F.k < 1:
        raise ValueError("shadow needs k >= 1")
    out = set()
    for m in F.masks:
        rest = m
        while rest:
            low = rest & -rest
            out.add(m ^ low)
            rest ^= low
    return SetFamily(F.ground, F.k - 1, out)


def _lovasz_root(size: int, k: int) -> Fraction:
    """Largest rational lo (after 200 bisection steps) with C(lo, k) <= size, lo >= k."""
    lo = Fraction(k)
    hi = Fraction(k + size)
    for _ in range(200):
        mid = (lo + hi) / 2
        if real_binomial(mid, k) <= size:
            lo = mid
        else:
            hi = mid
    return lo


def shadow_lower_bound(size: int, k: int, form: str = "cascade"):
    """Lower bound on the shadow of any family of `size` k-sets.

    cascade: sum of C(a_j, j-1) over the k-cascade of size (exact integer).
    lovasz: C(x, k-1) where C(x, k) = size, x >= k real; returned as a Fraction
    that never exceeds the true real value.
    """
    if size < 0:
        raise ValueError("negative size")
    if form == "cascade":
        if size == 0:
            return 0
        return sum(binomial(a, j - 1) for a, j in cascade(size, k).terms)
    if form == "lovasz":
        if k < 1:
            raise ValueError("lovasz form needs k >= 1")
        if size == 0:
            return Fraction(0)
        # exact integer root first
        x = k
        while binomial(x, k) < size:
            x += 1
        if binomial(x, k) == size:
            return Fraction(binomial(x, k - 1))
        return real_binomial(_lovasz_root(size, k), k - 1)
    raise ValueError(f"unknown form {form!r}")


def true_shadow_minimum_colex(size: int, k: int, n: int) -> int:
    """Shadow size of the colex-initial segment of the given size (the exact minimum)."""
    from .core import colex_initial

    return len(shadow(colex_initial(GroundSet(1, n), size, k)))
