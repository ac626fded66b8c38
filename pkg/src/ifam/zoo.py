"""Named intersecting families and the metrics used to compare them."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import networkx as nx

from .bounds import BoundReport
from .core import (
    GroundSet,
    SetFamily,
    from_mask,
    interval_mask,
    popcount,
    to_mask,
)

FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))

TAU_STAR_CAP = 12


# -- constructors --------------------------------------------------------------

def maximal_extension(M: SetFamily, n: int, k: int) -> SetFamily:
    """M together with every k-set through 1 that meets all members of M.

    M must be an intersecting k-uniform family over [2, n]. The result is the
    largest intersecting family over [n] whose part avoiding 1 is exactly M.
    """
    if M.k != k:
        raise ValueError("uniformity mismatch")
    if M.union_mask() & 1:
        raise ValueError("M must avoid element 1")
    if not M.is_intersecting():
        raise ValueError("M is not intersecting")
    ground = GroundSet(1, n)
    out = list(M.masks)
    members = M.masks
    for rest in itertools.combinations(range(2, n + 1), k - 1):
        m = to_mask(rest)
        if all(m & x for x in members):
            out.append(m | 1)
    return SetFamily(ground, k, out)


def build_Hu(n: int, k: int, u: int) -> SetFamily:
    """{A ⊇ [2, u+1]} ∪ {A ∋ 1 : A ∩ [2, u+1] ≠ ∅}."""
    if not 2 <= u <= k or n < 2 * k:
        raise ValueError(f"need 2 <= u <= k and n >= 2k, got n={n}, k={k}, u={u}")
    block = interval_mask(2, u + 1)
    out = []
    for s in itertools.combinations(range(1, n + 1), k):
        m = to_mask(s)
        if m & block == block or (m & 1 and m & block):
            out.append(m)
    return SetFamily(GroundSet(1, n), k, out)


def interval_set(i: int, k: int) -> tuple:
    """I_i = [i+1, k+i]."""
    return tuple(range(i + 1, k + i + 1))


def build_Ji(n: int, k: int, i: int) -> SetFamily:
    """{I_1, I_i} plus every set through 1 meeting both; J_1 is the Hilton-Milner family."""
    if not 1 <= i <= k or n < 2 * k or n < k + i:
        raise ValueError(f"need 1 <= i <= k and n >= max(2k, k+i), got n={n}, k={k}, i={i}")
    M = SetFamily(GroundSet(2, n), k, [interval_set(1, k), interval_set(i, k)])
    return maximal_extension(M, n, k)


def build_El(n: int, k: int, l: int) -> SetFamily:
    """Maximal extension of the l sets [2, k] ∪ {x}, x in [k+1, k+l]."""
    if not 1 <= l <= n - k:
        raise ValueError(f"l={l} outside [1, {n - k}]")
    core = tuple(range(2, k + 1))
    M = SetFamily(GroundSet(2, n), k, [core + (x,) for x in range(k + 1, k + l + 1)])
    return maximal_extension(M, n, k)


def build_T2(k: int, n: int | None = None) -> SetFamily:
    """{[k], {1} ∪ [k+1, 2k-1], {2} ∪ [k+1, 2k-1]}."""
    if k < 2:
        raise ValueError("k >= 2 required")
    n = 2 * k - 1 if n is None else n
    tail = tuple(range(k + 1, 2 * k))
    return SetFamily(GroundSet(1, n), k,
                     [tuple(range(1, k + 1)), (1,) + tail, (2,) + tail])


def build_T2prime(s: int, n: int | None = None) -> SetFamily:
    """{[s], [s+1, 2s]}."""
    if s < 1:
        raise ValueError("s >= 1 required")
    n = 2 * s if n is None else n
    return SetFamily(GroundSet(1, n), s, [tuple(range(1, s + 1)), tuple(range(s + 1, 2 * s + 1))])


def max_cross_partner(H: SetFamily, m: int, u: int) -> SetFamily:
    """All u-subsets of [m] meeting every member of H."""
    out = [s for s in itertools.combinations(range(1, m + 1), u)
           if all(to_mask(s) & h for h in H.masks)]
    return SetFamily(GroundSet(1, m), u, out)


def build_F2(m: int, s: int, k: int) -> SetFamily:
    """Maximal (k-1)-uniform family over [m] cross-intersecting with T_2(s)."""
    if m < 2 * s - 1:
        raise ValueError("m too small for T_2(s)")
    return max_cross_partner(build_T2(s, m), m, k - 1)


def build_F2prime(m: int, s: int, k: int) -> SetFamily:
    """Maximal (k-1)-uniform family over [m] cross-intersecting with T_2'(s)."""
    if m < 2 * s:
        raise ValueError("m too small for T_2'(s)")
    return max_cross_partner(build_T2prime(s, m), m, k - 1)


def relabel(F: SetFamily, mapping: dict, ground: GroundSet) -> SetFamily:
    return SetFamily(ground, F.k, [tuple(mapping.get(x, x) for x in s) for s in F])


def build_C3(n: int, k: int) -> SetFamily:
    """Maximal intersecting family whose part avoiding 1 is T_2(k) moved onto [2, n]."""
    if k < 3 or n < 2 * k:
        raise ValueError(f"need k >= 3 and n >= 2k, got n={n}, k={k}")
    t2 = build_T2(k)
    moved = relabel(t2, {x: x + 1 for x in range(1, 2 * k)}, GroundSet(2, n))
    return maximal_extension(moved, n, k)


def build_fano() -> SetFamily:
    return SetFamily(GroundSet(1, 7), 3, FANO_LINES)


def build_D37(n: int, k: int) -> SetFamily:
    """All k-subsets of [n] containing a line of the Fano plane."""
    if k < 3 or n < 7 or n < k:
        raise ValueError(f"need k >= 3 and n >= max(7, k), got n={n}, k={k}")
    out = set()
    for line in FANO_LINES:
        rest = [x for x in range(1, n + 1) if x not in line]
        lm = to_mask(line)
        for extra in itertools.combinations(rest, k - 3):
            out.add(lm | to_mask(extra))
    return SetFamily(GroundSet(1, n), k, out)


# -- restriction, shifting -----------------------------------------------------

def restrict(F: SetFamily, i: int, mode: str = "contains") -> SetFamily:
    """F(i) = {A - i : i ∈ A ∈ F} or F(ī) = {A ∈ F : i ∉ A}.

    The ground shrinks only when i is an endpoint of the interval.
    """
    if i not in F.ground:
        raise ValueError(f"{i} not in the ground set")
    g = F.ground
    if i == g.lo and g.lo < g.hi:
        ground = GroundSet(g.lo + 1, g.hi)
    elif i == g.hi and g.lo < g.hi:
        ground = GroundSet(g.lo, g.hi - 1)
    else:
        ground = g
    bit = 1 << (i - 1)
    if mode == "contains":
        return SetFamily(ground, F.k - 1, [m ^ bit for m in F.masks if m & bit])
    if mode == "avoids":
        return SetFamily(ground, F.k, [m for m in F.masks if not m & bit])
    raise ValueError(f"unknown mode {mode!r}")


def shift(F: SetFamily, i: int, j: int) -> SetFamily:
    """S_ij: replace j by i in each member unless the image is already present."""
    if not i < j:
        raise ValueError("shift needs i < j")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    present = F.maskset
    out = []
    for m in F.masks:
        if m & bj and not m & bi:
            img = (m ^ bj) | bi
            out.append(m if img in present else img)
        else:
            out.append(m)
    return SetFamily(F.ground, F.k, out)


# -- metrics -------------------------------------------------------------------

def max_degree(F: SetFamily) -> tuple[int, int]:
    """(Δ, smallest element attaining it); (0, ground.lo) for the empty family."""
    best, arg = 0, F.ground.lo
    for e in F.ground.elements():
        d = F.degree(e)
        if d > best:
            best, arg = d, e
    return best, arg


def diversity(F: SetFamily) -> int:
    return len(F) - max_degree(F)[0]


def _hitting(masks: Sequence[int], chosen: int, budget: int) -> bool:
    for m in masks:
        if not m & chosen:
            break
    else:
        return True
    if budget == 0:
        return False
    rest = m
    while rest:
        low = rest & -rest
        if _hitting(masks, chosen | low, budget - 1):
            return True
        rest ^= low
    return False


def covering_number(F: SetFamily) -> int:
    """τ(F): smallest set meeting every member (0 for the empty family)."""
    if not F.masks:
        return 0
    if F.k == 0:
        raise ValueError("the empty set cannot be hit")
    masks = sorted(F.masks, key=popcount)
    for t in range(1, F.k + 1):
        if _hitting(masks, 0, t):
            return t
    raise AssertionError("unreachable: any member is a hitting set")


def has_cover_of_size(F: SetFamily, t: int) -> bool:
    return _hitting(list(F.masks), 0, t)


def _simplex_packing(rows: list[list[int]], ncols: int):
    """Exact max 1·y s.t. A y <= 1, y >= 0 (A is 0/1, rows = elements).

    Bland's rule on a Fraction tableau; slack basis is feasible from the start.
    Returns (value, y, w) where w is the optimal dual (fractional cover).
    """
    d = len(rows)
    width = ncols + d
    tab = [[Fraction(v) for v in row] + [Fraction(int(r == i)) for r in range(d)] + [Fraction(1)]
           for i, row in enumerate(rows)]
    cost = [Fraction(1)] * ncols + [Fraction(0)] * d
    basis = [ncols + i for i in range(d)]
    while True:
        # reduced costs c_j - c_B B^-1 a_j, read from the current tableau
        cb = [cost[b] for b in basis]
        enter = None
        for col in range(width):
            rc = cost[col] - sum(cb[r] * tab[r][col] for r in range(d))
            if rc > 0:
                enter = col
                break
        if enter is None:
            break
        best = None
        for r in range(d):
            a = tab[r][enter]
            if a > 0:
                ratio = tab[r][width] / a
                key = (ratio, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            raise AssertionError("packing LP cannot be unbounded")
        r = best[1]
        piv = tab[r][enter]
        tab[r] = [v / piv for v in tab[r]]
        for rr in range(d):
            if rr != r and tab[rr][enter] != 0:
                f = tab[rr][enter]
                tab[rr] = [x - f * y for x, y in zip(tab[rr], tab[r])]
        basis[r] = enter
    y = [Fraction(0)] * width
    for r, b in enumerate(basis):
        y[b] = tab[r][width]
    cb = [cost[b] for b in basis]
    w = [sum(cb[r] * tab[r][ncols + i] for r in range(d)) for i in range(d)]
    value = sum(y[:ncols], Fraction(0))
    return value, y[:ncols], w


def fractional_covering(F: SetFamily, with_weights: bool = False):
    """τ*(F) as an exact Fraction, solved through the dual packing LP.

    Raises ValueError when more than TAU_STAR_CAP elements are active.
    The primal weights are recovered from the final tableau and checked.
    """
    if not F.masks:
        return (Fraction(0), {}) if with_weights else Fraction(0)
    active = F.active_elements()
    if len(active) > TAU_STAR_CAP:
        raise ValueError(f"{len(active)} active elements exceed the cap of {TAU_STAR_CAP}")
    rows = [[1 if m >> (e - 1) & 1 else 0 for m in F.masks] for e in active]
    value, y, w = _simplex_packing(rows, len(F.masks))
    weights = dict(zip(active, w))
    # certificate: w is a feasible cover with the same value
    assert all(x >= 0 for x in w)
    for m in F.masks:
        assert sum(weights[e] for e in from_mask(m)) >= 1
    assert sum(w) == value
    return (value, weights) if with_weights else value


@dataclass(frozen=True)
class FamilyStats:
    size: int
    max_degree: int
    max_degree_element: int
    diversity: int
    covering_number: int
    fractional_covering: Fraction | None
    is_intersecting: bool
    is_trivial: bool

    def to_dict(self) -> dict:
        fc = self.fractional_covering
        return {
            "size": self.size,
            "max_degree": self.max_degree,
            "max_degree_element": self.max_degree_element,
            "diversity": self.diversity,
            "covering_number": self.covering_number,
            "fractional_covering": None if fc is None else str(fc),
            "is_intersecting": self.is_intersecting,
            "is_trivial": self.is_trivial,
        }


def family_stats(F: SetFamily) -> FamilyStats:
    delta, elem = max_degree(F)
    try:
        tau_star = fractional_covering(F)
    except ValueError:
        tau_star = None
    inter = F.union_mask()
    common = -1
    for m in F.masks:
        common &= m
    return FamilyStats(
        size=len(F),
        max_degree=delta,
        max_degree_element=elem,
        diversity=len(F) - delta,
        covering_number=covering_number(F),
        fractional_covering=tau_star,
        is_intersecting=F.is_intersecting(),
        is_trivial=bool(F.masks) and bool(common & inter),
    )


# -- minimality ------------------------------------------------------------------

@dataclass(frozen=True)
class CommonIntersectionVerdict:
    minimal: bool
    t: int
    witnesses: tuple | None  # one element i_l per member when minimal


def _common(masks: Iterable[int], default: int) -> int:
    acc = default
    for m in masks:
        acc &= m
    return acc


def minimal_common_intersection(M: SetFamily) -> CommonIntersectionVerdict:
    """Does dropping any member strictly enlarge the common intersection?

    The intersection over no members is the whole ground set.
    """
    if not M.masks:
        raise ValueError("need at least one member")
    full = M.ground.mask
    all_common = _common(M.masks, full)
    wit = []
    for idx in range(len(M.masks)):
        others = _common(M.masks[:idx] + M.masks[idx + 1:], full)
        extra = others & ~all_common
        if not extra:
            return CommonIntersectionVerdict(False, popcount(all_common), None)
        wit.append(from_mask(extra & -extra)[0])
    return CommonIntersectionVerdict(True, popcount(all_common), tuple(wit))


def reduce_to_minimal(M: SetFamily) -> SetFamily:
    """Drop members greedily (in lex order) while the common intersection is unchanged."""
    full = M.ground.mask
    target = _common(M.masks, full)
    keep = list(M.masks)
    changed = True
    while changed:
        changed = False
        for idx in range(len(keep)):
            rest = keep[:idx] + keep[idx + 1:]
            if rest and _common(rest, full) == target:
                keep = rest
                changed = True
                break
    return SetFamily(M.ground, M.k, keep)


def is_minimal_tau(M: SetFamily, t: int) -> bool:
    """τ(M) = t and every proper subfamily has smaller covering number."""
    if covering_number(M) != t:
        return False
    for idx in range(len(M.masks)):
        sub = SetFamily.from_sorted_masks(M.ground, M.k, M.masks[:idx] + M.masks[idx + 1:])
        if covering_number(sub) >= t:
            return False
    return True


def bound_class2(n: int, k: int, M: SetFamily, t: int) -> tuple[BoundReport, BoundReport]:
    """Size bounds for intersecting F with Δ at 1 and M ⊂ F(1̄) minimal, |∩M| = t >= 3.

    Returns (|F'|, |J_{k-t+1}|) reports, F' the maximal extension of M.
    """
    if not (n > 2 * k and k >= 4):
        raise ValueError(f"need n > 2k >= 8, got n={n}, k={k}")
    if t < 3:
        raise ValueError("t >= 3 required; for t = 2 the family H_2 is far larger than J_{k-1}")
    verdict = minimal_common_intersection(M)
    if not verdict.minimal or verdict.t != t:
        raise ValueError(f"M is not minimal with common intersection of size {t}")
    Fp = maximal_extension(M, n, k)
    J = build_Ji(n, k, k - t + 1)
    inputs = {"n": n, "k": k, "t": t}
    return (
        BoundReport("class2-extension", inputs, len(Fp), sharp_witness=Fp),
        BoundReport("class2-J", inputs, len(J), sharp_witness=J),
    )


# -- isomorphism ---------------------------------------------------------------

def _incidence_graph(F: SetFamily) -> nx.Graph:
    G = nx.Graph()
    for e in F.active_elements():
        G.add_node(("e", e), side=0)
    for idx, s in enumerate(F):
        G.add_node(("s", idx), side=1)
        for e in s:
            G.add_edge(("s", idx), ("e", e))
    return G


def iso_invariant(F: SetFamily) -> tuple:
    """Cheap isomorphism invariant: size, uniformity, sorted degree sequence."""
    degs = sorted((F.degree(e) for e in F.active_elements()), reverse=True)
    pair_sizes = sorted(popcount(a & b) for a, b in itertools.combinations(F.masks, 2))
    return len(F), F.k, tuple(degs), tuple(pair_sizes)


def is_isomorphic(F: SetFamily, G: SetFamily) -> bool:
    """Equal up to a permutation of the ground elements (VF2 on incidence graphs)."""
    if iso_invariant(F) != iso_invariant(G):
        return False
    match = nx.algorithms.isomorphism.categorical_node_match("side", None)
    return nx.is_isomorphic(_incidence_graph(F), _incidence_graph(G), node_match=match)


def dedupe_isomorphic(families: Sequence[SetFamily], cap: int = TAU_STAR_CAP):
    """Keep the first family of each isomorphism class.

    Returns (kept, deduplicated_flag). Families with more than `cap` active
    elements are kept as they are and the flag is False.
    """
    kept: list[SetFamily] = []
    flag = True
    for F in families:
        if len(F.active_elements()) > cap:
            kept.append(F)
            flag = False
            continue
        if not any(len(G.active_elements()) <= cap and is_isomorphic(F, G) for G in kept):
            kept.append(F)
    return kept, flag


# -- JSON ------------------------------------------------------------------------

def family_to_dict(F: SetFamily) -> dict:
    return {"ground": [F.ground.lo, F.ground.hi], "k": F.k, "sets": [list(s) for s in F]}


def family_to_json(F: SetFamily) -> str:
    """Canonical serialization: no whitespace, sets and elements ascending in lex order."""
    return json.dumps(family_to_dict(F), separators=(",", ":"), sort_keys=True)


def family_from_dict(d: dict) -> SetFamily:
    lo, hi = d["ground"]
    return SetFamily(GroundSet(lo, hi), d["k"], [tuple(s) for s in d["sets"]])


def family_from_json(text: str) -> SetFamily:
    return family_from_dict(json.loads(text))
