"""Resistant numbers and pairs, neutral chains and closed-form bound evaluators.

Diversity setting: an intersecting family F of k-subsets of [n] with maximum
degree at element 1 splits into A = F(1) (sets of size k-1 over [2, n]) and
B = F(1̄) (k-sets over [2, n]), a cross-intersecting pair with |B| = γ(F).
Extremal pairs are lex families. The B-side is described by a characteristic
set called `b_side`, the A-side by `a_side` (its part inside [2, n]; the full
characteristic set also carries element 1).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .core import GroundSet, binomial, cascade, real_binomial
from .lex import CharPair, lex_count, lex_size, strongly_intersect_at_top


@dataclass(frozen=True)
class BoundReport:
    theorem: str
    inputs: dict
    bound: Any  # int or Fraction (float for real arguments given as floats)
    sharp_witness: Any = None
    strict: bool = False
    note: str = ""

    def to_dict(self) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return str(v) if v.denominator != 1 else v.numerator
            if isinstance(v, CharPair):
                return {"S": list(v.S), "T": list(v.T), "a": v.a, "b": v.b}
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            if isinstance(v, dict):
                return {k: enc(x) for k, x in v.items()}
            return v

        return {
            "theorem": self.theorem,
            "inputs": enc(self.inputs),
            "bound": enc(self.bound),
            "sharp_witness": enc(self.sharp_witness),
            "strict": self.strict,
            "note": self.note,
        }


def _check_nk(n: int, k: int):
    if not (n > 2 * k and k >= 3):
        raise ValueError(f"need n > 2k >= 6, got n={n}, k={k}")


# -- resistant numbers ------------------------------------------------------

@dataclass(frozen=True)
class ResistantDescriptor:
    """Cascade data of a diversity value gamma.

    a_side: the stopping elements b_1 < ... < b_s read off the (n-k-1)-cascade
        gamma = sum C(n - b_i, n - k - i). Together with 1 it is the
        characteristic set of the A-side family.
    b_side: a_side XOR [2, b_s - 1], the characteristic set of the B-side
        family, so that |L(b_side, k)| = gamma.
    """

    n: int
    k: int
    gamma: int
    a_side: tuple
    b_side: tuple
    resistant: bool


def resistant_descriptor(n: int, k: int, gamma: int) -> ResistantDescriptor:
    _check_nk(n, k)
    if not 0 <= gamma < binomial(n - 1, k - 1):
        raise ValueError(f"gamma={gamma} outside [0, C({n - 1},{k - 1}))")
    if gamma == 0:
        # gamma_0: the star, B empty; sentinel b_side = [2, n]
        return ResistantDescriptor(n, k, 0, (), tuple(range(2, n + 1)), True)
    r = n - k - 1
    terms = cascade(gamma, r).terms
    stops = tuple(n - a for a, _ in terms)
    # the cascade indices run r, r-1, ..., so term i has index n - k - i
    assert all(j == n - k - i for i, (_, j) in enumerate(terms, start=1))
    if stops[0] <= 1:
        raise ValueError("gamma too large: first stopping element is 1")
    top = stops[-1]
    b_side = tuple(sorted(set(range(2, top)) ^ set(stops)))
    resistant = gamma == binomial(n - 4, k - 3) or (
        len(b_side) <= k
        and len(stops) <= k - 1
        and all(b > 2 * i + 2 for i, b in enumerate(stops, start=1))
    )
    return ResistantDescriptor(n, k, gamma, stops, b_side, resistant)


@lru_cache(maxsize=None)
def _resistant_tuple(n: int, k: int) -> tuple:
    top = binomial(n - 4, k - 3)
    return tuple(g for g in range(1, top + 1) if resistant_descriptor(n, k, g).resistant)


def enumerate_resistant(n: int, k: int) -> list[int]:
    """All positive resistant numbers in increasing order; the last is C(n-4, k-3)."""
    _check_nk(n, k)
    return list(_resistant_tuple(n, k))


def is_resistant_pair(S, T, k: int) -> bool:
    """Resistant pair test in the diversity setting (1 ∈ S, T ⊂ [2, n]).

    Condition (2) is checked for every i >= 4; indices beyond max(j, 4) cannot
    fail, so the loop stops there.
    """
    s, t = set(S), set(T)
    if t == {2, 3, 4} and s == {1, 4}:
        return True
    if 1 not in s or 1 in t or not t:
        return False
    if not strongly_intersect_at_top(s, t, lo=1) or max(s) != max(t):
        return False
    if len(s) > k or len(t) > k:
        return False
    j = max(t)
    for i in range(4, max(j, 4) + 1):
        inside = sum(1 for x in range(1, i + 1) if x in s)
        if not inside < i - inside:
            return False
    return True


def resistant_pairs(n: int, k: int) -> list[tuple[int, CharPair]]:
    """All resistant pairs with their B-side sizes, sorted by that size.

    Independent of the cascade route: enumerates T ⊂ [2, j] with max T = j
    and derives S = {1} ∪ ([2, j] \\ T) ∪ {j}.
    """
    _check_nk(n, k)
    out = []
    for j in range(2, min(n, 2 * k - 1) + 1):
        below = list(range(2, j))
        for r in range(len(below) + 1):
            for part in itertools.combinations(below, r):
                T = tuple(part) + (j,)
                S = tuple(sorted({1, j} | (set(below) - set(part))))
                if is_resistant_pair(S, T, k):
                    out.append((lex_size(n, T, k), CharPair(S, T, k - 1, k)))
    out.sort(key=lambda p: p[0])
    return out


def resistant_chain(n: int, k: int) -> list[ResistantDescriptor]:
    """Descriptors of gamma_0 = 0, gamma_1, ..., gamma_m."""
    return [resistant_descriptor(n, k, 0)] + [
        resistant_descriptor(n, k, g) for g in enumerate_resistant(n, k)
    ]


def a_side_size(n: int, k: int, desc: ResistantDescriptor) -> int:
    """|L(S, k-1)| via the displayed sum over the B-side characteristic set."""
    if desc.gamma == 0:
        return binomial(n - 1, k - 1)
    return sum(
        binomial(n - a, n - k - i + 1) for i, a in enumerate(desc.b_side, start=1)
    )


def _locate(n: int, k: int, gamma: int) -> tuple[int, ResistantDescriptor]:
    chain = _resistant_tuple(n, k)
    for l, g in enumerate(chain, start=1):
        if gamma <= g:
            return l, resistant_descriptor(n, k, g)
    raise ValueError("gamma above the last resistant number")


def _pair_of(desc: ResistantDescriptor, k: int) -> CharPair:
    return CharPair((1,) + desc.a_side, desc.b_side, k - 1, k)


# -- diversity bounds ---------------------------------------------------------

def bound_full1(n: int, k: int, gamma: int) -> BoundReport:
    """Maximum |F| over intersecting k-families with diversity at least gamma.

    Sharp step function, constant on (gamma_{l-1}, gamma_l]. For gamma above
    C(n-4, k-3) the report is delegated to bound_corhm (u = 3 windows) or to
    bound_thm1 at u = 3.
    """
    _check_nk(n, k)
    if not 0 <= gamma < binomial(n - 1, k - 1):
        raise ValueError(f"gamma={gamma} outside [0, C({n - 1},{k - 1}))")
    top = binomial(n - 4, k - 3)
    if gamma == 0:
        star = binomial(n - 1, k - 1)
        return BoundReport("full1", {"n": n, "k": k, "gamma": 0, "l": 0}, star,
                           sharp_witness=CharPair((1, n), tuple(range(2, n + 1)), k - 1, k),
                           note="star family")
    if gamma > top:
        try:
            rep = bound_corhm(n, k, 3, gamma)
        except ValueError:
            rep = bound_thm1(n, k, 3)
        return BoundReport("full1", {"n": n, "k": k, "gamma": gamma}, rep.bound,
                           strict=rep.strict,
                           note=f"gamma above C(n-4,k-3); delegated to {rep.theorem} ({rep.note})")
    l, desc = _locate(n, k, gamma)
    value = a_side_size(n, k, desc) + desc.gamma
    return BoundReport("full1", {"n": n, "k": k, "gamma": gamma, "l": l, "gamma_l": desc.gamma},
                       value, sharp_witness=_pair_of(desc, k))


def bound_thm1(n: int, k: int, u) -> BoundReport:
    """C(n-1,k-1) + C(n-u-1, n-k-1) - C(n-u-1, k-1), valid when gamma >= C(n-u-1, n-k-1)."""
    _check_nk(n, k)
    if not 3 <= u <= k:
        raise ValueError(f"u={u} outside [3, {k}]")
    x = n - u - 1
    value = binomial(n - 1, k - 1) + real_binomial(x, n - k - 1) - real_binomial(x, k - 1)
    if isinstance(value, Fraction) and value.denominator == 1:
        value = value.numerator
    return BoundReport("thm1", {"n": n, "k": k, "u": u}, value,
                       note="applies when gamma >= C(n-u-1, n-k-1)")


def gamma_threshold(n: int, k: int, u):
    """C(n-u-1, n-k-1): the diversity threshold attached to u."""
    return real_binomial(n - u - 1, n - k - 1)


def u_for_gamma(n: int, k: int, gamma) -> float:
    """Smallest real u in [3, k] with C(n-u-1, n-k-1) <= gamma (float bisection)."""
    lo, hi = 3.0, float(k)
    if float(gamma_threshold(n, k, 3)) <= gamma:
        return 3.0
    for _ in range(200):
        mid = (lo + hi) / 2
        if float(gamma_threshold(n, k, mid)) <= gamma:
            hi = mid
        else:
            lo = mid
    return hi


def bound_hk(n: int, k: int) -> BoundReport:
    """Largest intersecting family with diversity at least 2 (k >= 4)."""
    _check_nk(n, k)
    value = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) - binomial(n - k - 2, k - 2) + 2
    return BoundReport("hk", {"n": n, "k": k}, value, note="stated for k >= 4")


def corhm_windows(n: int, k: int) -> list[tuple[int, int]]:
    """The two gamma windows (inclusive bounds) where the u = 3 case applies."""
    c = binomial(n - k - 2, k - 2)
    lo1 = binomial(n - 4, k - 3) + 1
    hi1 = binomial(n - 3, k - 2) - c + 1
    lo2 = binomial(n - 3, k - 2) + 1
    hi2 = binomial(n - 3, k - 2) + binomial(n - 4, k - 2) - c + 1
    return [(lo1, hi1), (lo2, hi2)]


def bound_corhm(n: int, k: int, u: int, gamma: int) -> BoundReport:
    """Theorem-1.3 value lowered by C(n-k-2, k-2) - 1 inside its validity windows."""
    _check_nk(n, k)
    if u != int(u):
        raise ValueError("u must be an integer here")
    u = int(u)
    if 4 <= u <= k:
        if k < 4:
            raise ValueError("u >= 4 needs k >= 4")
        if not gamma > binomial(n - u - 1, n - k - 1):
            raise ValueError(f"gamma={gamma} not above C(n-u-1, n-k-1)")
        window = "u>=4"
    elif u == 3:
        w = corhm_windows(n, k)
        if w[0][0] <= gamma <= w[0][1]:
            window = "u=3 lower window"
        elif w[1][0] <= gamma <= w[1][1]:
            window = "u=3 upper window"
        else:
            raise ValueError(f"gamma={gamma} outside both u=3 windows {w}")
    else:
        raise ValueError(f"u={u} outside [3, {k}]")
    base = bound_thm1(n, k, u).bound
    value = base - binomial(n - k - 2, k - 2) + 1
    return BoundReport("corhm", {"n": n, "k": k, "u": u, "gamma": gamma}, value, note=window)


def weight_constant(n: int, k: int) -> Fraction:
    return Fraction(n - k - 2, k - 2)


def bound_weighted(n: int, k: int, gamma: int) -> BoundReport:
    """Bound on |A| + C|B| with C = (n-k-2)/(k-2) for |B| in the resistant window
    (gamma_{l-1}, gamma_l] containing gamma. The value is not monotone in l, so it
    is a per-window bound, not a bound for all |B| >= gamma.

    Also returns the two corollary values in `inputs`: the trivial bound
    C(n-1,k-1) and the non-trivial bound C(n-1,k-1) - C(n-k-1,k-1) + C.
    """
    _check_nk(n, k)
    top = binomial(n - 4, k - 3)
    if not 0 <= gamma <= top:
        raise ValueError(f"gamma={gamma} outside [0, {top}]")
    C = weight_constant(n, k)
    extras = {
        "weight": C,
        "trivial": binomial(n - 1, k - 1),
        "nontrivial": binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + C,
    }
    if gamma == 0:
        return BoundReport("weighted", {"n": n, "k": k, "gamma": 0, **extras},
                           Fraction(binomial(n - 1, k - 1)), note="star family")
    l, desc = _locate(n, k, gamma)
    value = a_side_size(n, k, desc) + C * desc.gamma
    # inclusive integer range of |B| covered by this value
    window = ((enumerate_resistant(n, k)[l - 2] if l > 1 else 0) + 1, desc.gamma)
    return BoundReport("weighted", {"n": n, "k": k, "gamma": gamma, "l": l,
                                    "window": window, **extras},
                       value, sharp_witness=_pair_of(desc, k))


def weighted_step_ratio_ok(n: int, k: int, i: int, z_a: int, z_b: int) -> bool:
    """C(n-i, z_a) / C(n-i, z_b) >= (n-k-2)/(k-2) (compression step, weighted form)."""
    return Fraction(binomial(n - i, z_a), binomial(n - i, z_b)) >= weight_constant(n, k)


# -- general (a, b) version ----------------------------------------------------

def is_ab_resistant_pair(S, T, a: int, b: int) -> bool:
    """(a,b)-resistant pair over [n]: S ∪ T = [j], S ∩ T = {j}, size caps, and
    |[i] ∩ S| - a < |[i] \\ S| - b for every i >= b - a + 2."""
    t0 = b - a + 2
    s, t = set(S), set(T)
    if s == {t0} and t == set(range(1, t0 + 1)):
        return True
    if not t or not s:
        return False
    j = max(t)
    if max(s) != j or s & t != {j} or s | t != set(range(1, j + 1)):
        return False
    if len(s) > a or len(t) > b:
        return False
    for i in range(max(t0, 1), max(j, t0) + 1):
        inside = sum(1 for x in range(1, i + 1) if x in s)
        if not inside - a < (i - inside) - b:
            return False
    return True


def ab_resistant_pairs(n: int, a: int, b: int) -> list[tuple[int, CharPair]]:
    """(a,b)-resistant pairs over [n] with their B-side sizes |L(T, b)|, sorted."""
    _check_ab(n, a, b)
    ground = GroundSet(1, n)
    out = []
    for j in range(1, min(n, a + b - 1) + 1):
        below = list(range(1, j))
        for r in range(len(below) + 1):
            for part in itertools.combinations(below, r):
                T = tuple(part) + (j,)
                S = tuple(sorted({j} | (set(below) - set(part))))
                if len(S) <= a and len(T) <= b and is_ab_resistant_pair(S, T, a, b):
                    out.append((lex_count(ground, T, b), CharPair(S, T, a, b)))
    out.sort(key=lambda p: p[0])
    return out


def _check_ab(n: int, a: int, b: int):
    if a < 1 or b < 1 or n <= a + b:
        raise ValueError(f"need a, b >= 1 and n > a + b, got n={n}, a={a}, b={b}")
    if b + 1 - a < 0:
        raise ValueError("need a <= b + 1")


def ab_top(n: int, a: int, b: int) -> int:
    """|L([t+1], b)| over [n], the largest (a,b)-resistant B-size (t = b + 1 - a)."""
    t = b + 1 - a
    return binomial(n - t - 1, b - t - 1)


def bound_ab(n: int, a: int, b: int, size_b: int, weight=1) -> BoundReport:
    """Bound on |A| + weight*|B| for cross-intersecting A ⊂ C([n],a), B ⊂ C([n],b), |B| = size_b.

    Every applicable branch is evaluated and the smallest value is reported:
    the step bound from (a,b)-resistant pairs (0 < size_b <= top, constant on
    each resistant window, so it also holds for all |B| in that window), the
    refined branches i in [t+1, b] for |B| above the chain, and, for weight 1,
    the two corollary bounds valid when |B| <= C(n-t, a-1). The i = t+1
    branch claims nothing on its excluded interval.
    """
    _check_ab(n, a, b)
    t = b + 1 - a
    weight = Fraction(weight)
    if weight != 1:
        if a < 2 or not weight < Fraction(n - b - 1, a - 1):
            raise ValueError(f"weight {weight} not below (n-b-1)/(a-1)")
    if not 0 <= size_b <= binomial(n, b):
        raise ValueError(f"size_b={size_b} outside [0, C(n,b)]")
    top = ab_top(n, a, b)
    inputs = {"n": n, "a": a, "b": b, "size_b": size_b, "weight": weight, "t": t}
    cands = []  # (value, branch tag, extra inputs, witness)
    if size_b == 0:
        cands.append((Fraction(binomial(n, a)), "empty B", {}, None))
    elif size_b <= top:
        ground = GroundSet(1, n)
        for gl, pair in ab_resistant_pairs(n, a, b):
            if size_b <= gl:
                value = lex_count(ground, pair.S, a) + weight * gl
                part = "part 1" if weight == 1 else "part 2"
                cands.append((value, part, {"gamma_l": gl}, pair))
                break
    if weight == 1 and size_b > 0:
        corr = binomial(n - b - 1, a - 1)
        upper = binomial(n - t, a - 1) + binomial(n - t - 1, a - 1)
        for i in range(t + 2, b + 1):
            if binomial(n - i, b - i) < size_b <= upper:
                v = binomial(n, a) - binomial(n - i, a) + binomial(n - i, b - i) - corr + 1
                cands.append((v, f"part 3 i={i}", {"i": i}, None))
        lo_ex, hi_ex = binomial(n - t, a - 1) - corr + 2, binomial(n - t, a - 1)
        if (binomial(n - t - 1, b - t - 1) < size_b <= upper - corr + 1
                and not lo_ex <= size_b <= hi_ex):
            v = binomial(n, a) - binomial(n - t, a) + binomial(n - t, b - t) - corr + 1
            cands.append((v, f"part 3 i={t + 1}", {"i": t + 1}, None))
        if size_b <= binomial(n - t, a - 1):
            cands.append((binomial(n, a), "corollary small B", {}, None))
            for j in range(max(t, 0), b + 1):
                if binomial(n - j, b - j) <= size_b:
                    v = binomial(n, a) - binomial(n - j, a) + binomial(n - j, b - j)
                    cands.append((v, f"corollary j={j}", {"j": j}, None))
    if not cands:
        raise ValueError(f"no bound claimed for size_b={size_b}")
    # ties go to the earliest branch listed, so the step bound wins when it is sharp
    value, tag, extra, wit = min(cands, key=lambda c: c[0])
    return BoundReport("ab", {**inputs, **extra, "branch": tag}, _norm(value),
                       sharp_witness=wit, note=tag)


def _norm(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def bound_corkz(n: int, a: int, b: int, size_b: int, j: int | None = None) -> BoundReport:
    """Corollary bounds for |B| <= C(n-t, a-1): C(n,a), or the sharper j-branch."""
    _check_ab(n, a, b)
    t = b + 1 - a
    cap = binomial(n - t, a - 1)
    if not 0 <= size_b <= cap:
        raise ValueError(f"size_b={size_b} outside [0, C(n-t, a-1)] = [0, {cap}]")
    if j is None:
        return BoundReport("corkz", {"n": n, "a": a, "b": b, "size_b": size_b, "t": t},
                           binomial(n, a), strict=size_b > 0,
                           note="strict unless B is empty")
    if not t <= j <= b:
        raise ValueError(f"j={j} outside [{t}, {b}]")
    if not binomial(n - j, b - j) <= size_b:
        raise ValueError(f"size_b={size_b} below C(n-j, b-j)")
    value = binomial(n, a) - binomial(n - j, a) + binomial(n - j, b - j)
    return BoundReport("corkz", {"n": n, "a": a, "b": b, "size_b": size_b, "t": t, "j": j}, value)


def bound_ft(n: int, a: int, b: int, alpha) -> BoundReport:
    """C(n,b) + C(n-alpha, n-a) - C(n-alpha, b) for C(n-alpha,n-a) <= |F| <= C(n-1,n-a).

    F is the a-uniform family, G the b-uniform one, a <= b.
    """
    if not (n > a + b and 1 <= a <= b and alpha >= 1):
        raise ValueError(f"domain violation n={n}, a={a}, b={b}, alpha={alpha}")
    x = n - alpha
    value = binomial(n, b) + real_binomial(x, n - a) - real_binomial(x, b)
    lower = real_binomial(x, n - a)
    return BoundReport("ft", {"n": n, "a": a, "b": b, "alpha": alpha,
                              "size_f_min": _norm(lower), "size_f_max": binomial(n - 1, n - a)},
                       _norm(value))


# -- neutral chains -------------------------------------------------------------

def neutral_sets(n: int, k: int, l: int) -> list[tuple]:
    """B-side characteristic sets of the neutral chain that starts at T_l."""
    chain = enumerate_resistant(n, k)
    if not 1 <= l <= len(chain):
        raise ValueError(f"resistant index l={l} outside [1, {len(chain)}]")
    T = list(resistant_descriptor(n, k, chain[l - 1]).b_side)
    out = [tuple(T)]
    while len(T) < k:
        x = 2 * len(T)
        if x > n or x in T:
            break
        T = sorted(T + [x])
        out.append(tuple(T))
    return out


def neutral_partner(T) -> tuple:
    """The A-side characteristic set (with 1) strongly intersecting T at its top."""
    j = max(T)
    return tuple(sorted({1, j} | (set(range(2, j)) - set(T))))


# -- Lemma on minimal tau = 2 families --------------------------------------------

def _check_lemmin(m: int, s: int, k: int):
    if k < 2 or s < 1 or m < k + s:
        raise ValueError(f"need m >= k + s, got m={m}, s={s}, k={k}")


def lemmin_f(m: int, s: int, k: int, z: int) -> int:
    """f(z): |F| for the maximal (k-1)-family cross-intersecting the z-member extremal H."""
    _check_lemmin(m, s, k)
    if not 2 <= z <= s + 1:
        raise ValueError(f"z={z} outside [2, {s + 1}]")
    total = 0
    for l in range(1, z):
        total += binomial(m - l, k - 2) - binomial(m - s - 1, k - 2)
    for l in range(z, s + 1):
        total += binomial(m - l, k - 2) - binomial(m - s - 2 - (l - z), k - 2)
    return total


def lemmin_fprime3(m: int, s: int, k: int) -> int:
    """The modified three-member count f'(3); needs s >= 4."""
    _check_lemmin(m, s, k)
    if s < 4:
        raise ValueError("f'(3) needs s >= 4")
    total = 0
    for l in range(1, s + 1):
        if l <= 2:
            sub = m - s - 1
        elif l <= 4:
            sub = m - s - 2
        else:
            sub = m - s - l + 1
        total += binomial(m - l, k - 2) - binomial(sub, k - 2)
    return total


def lemmin_fs(m: int, s: int, k: int) -> int:
    """|F'_2(s)|: sum over l in [s] of C(m-l, k-2) - C(m-s-l, k-2)."""
    _check_lemmin(m, s, k)
    return sum(binomial(m - l, k - 2) - binomial(m - s - l, k - 2) for l in range(1, s + 1))


def size_C3(n: int, k: int) -> int:
    """Size of the maximal intersecting family whose part avoiding 1 is a copy of T_2(k)."""
    if k < 3 or n < 2 * k + 1:
        raise ValueError(f"need n >= 2k+1 and k >= 3, got n={n}, k={k}")
    total = 3
    total += binomial(n - 2, k - 2) - binomial(n - k - 2, k - 2)
    total += binomial(n - 3, k - 2) - binomial(n - k - 2, k - 2)
    for l in range(3, k + 1):
        total += binomial(n - l - 1, k - 2) - binomial(n - k - l, k - 2)
    return total
