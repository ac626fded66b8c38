"""Brute-force search engines used to check the closed-form bounds.

Nothing here calls the characteristic-set or resistant-number machinery:
the lex-pair oracle checks cross-intersection of prefixes pair by pair, the
clique oracle enumerates maximal intersecting families directly, and the
minimal-cover oracle walks all minimal τ = 2 families.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from .core import GroundSet, SetFamily, binomial, from_mask, popcount, to_mask
from .zoo import dedupe_isomorphic, family_to_dict, has_cover_of_size

MAX_GROUND = 128


@dataclass
class OracleResult:
    objective: Any  # int or Fraction
    witnesses: list
    search_space_size: int
    elapsed: float = 0.0
    meta: dict = field(default_factory=dict)

    def to_dict(self, with_timing: bool = False) -> dict:
        def enc(v):
            if isinstance(v, Fraction):
                return str(v) if v.denominator != 1 else v.numerator
            if isinstance(v, SetFamily):
                return family_to_dict(v)
            if isinstance(v, dict):
                return {k: enc(x) for k, x in v.items()}
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            return v

        d = {
            "objective": enc(self.objective),
            "witnesses": enc(self.witnesses),
            "search_space_size": self.search_space_size,
            "meta": enc(self.meta),
        }
        if with_timing:
            d["elapsed"] = self.elapsed
        return d

    def to_json(self, with_timing: bool = False) -> str:
        """Canonical JSON; timing is left out unless asked for so runs diff cleanly."""
        return json.dumps(self.to_dict(with_timing), separators=(",", ":"), sort_keys=True)


# -- lex prefix pairs ----------------------------------------------------------

def _lex_masks(ground: GroundSet, k: int) -> np.ndarray:
    masks = [to_mask(s) for s in ground.subsets(k)]
    return np.array(masks, dtype=np.uint64)


def _first_disjoint(A: np.ndarray, B: np.ndarray, chunk: int = 256) -> np.ndarray:
    """For each a-set, index of the first b-set (lex order) disjoint from it, or len(B)."""
    out = np.empty(len(A), dtype=np.int64)
    for start in range(0, len(A), chunk):
        block = A[start:start + chunk]
        disjoint = (block[:, None] & B[None, :]) == 0
        has = disjoint.any(axis=1)
        first = disjoint.argmax(axis=1)
        out[start:start + chunk] = np.where(has, first, len(B))
    return out


def lexpair_profile(ground: GroundSet, a: int, b: int) -> list[int]:
    """best[m_b] = largest m_a with L(m_a, a), L(m_b, b) cross-intersecting, m_b = 0..C(N,b).

    L(m_a, a) and L(m_b, b) cross-intersect iff every one of the first m_a
    a-sets misses none of the first m_b b-sets, i.e. each has its first
    disjoint b-set at position >= m_b.
    """
    if ground.hi > 64:
        raise ValueError("lex-pair oracle packs sets into 64-bit words")
    A = _lex_masks(ground, a)
    B = _lex_masks(ground, b)
    fd = _first_disjoint(A, B)
    prefix_min = np.minimum.accumulate(fd) if len(fd) else fd
    # number of leading a-sets whose prefix minimum is >= m_b
    neg = -prefix_min  # nondecreasing
    mbs = np.arange(len(B) + 1)
    counts = np.searchsorted(neg, -mbs, side="right")
    return [int(c) for c in counts]


def _cache_path(tag: str, params: dict) -> Path | None:
    root = os.environ.get("IFAM_CACHE_DIR")
    if not root:
        return None
    key = hashlib.sha256(json.dumps(params, sort_keys=True).encode()).hexdigest()[:16]
    return Path(root) / f"{tag}-{key}.json"


def _cached_profile(ground: GroundSet, a: int, b: int) -> list[int]:
    params = {"ground": [ground.lo, ground.hi], "a": a, "b": b}
    path = _cache_path("lexpair", params)
    if path is not None and path.exists():
        data = json.loads(path.read_text())
        if data.get("params") == params:
            return data["profile"]
    prof = lexpair_profile(ground, a, b)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"params": params, "profile": prof}))
    return prof


def oracle_lexpair(n: int, a: int, b: int, min_b: int = 0, weight=1, *,
                   max_b: int | None = None, ground: GroundSet | None = None) -> OracleResult:
    """max |A| + weight*|B| over cross-intersecting lex prefixes with min_b <= |B| <= max_b.

    Ground defaults to [n]. Without max_b the B-side may take every b-set (and
    A is then empty), so bound comparisons need the cap.
    """
    t0 = time.perf_counter()
    ground = GroundSet(1, n) if ground is None else ground
    if ground.size > 16 or a > 6 or b > 6:
        raise ValueError("lex-pair oracle caps: ground size <= 16, a, b <= 6")
    weight = Fraction(weight)
    prof = _cached_profile(ground, a, b)
    hi = len(prof) - 1 if max_b is None else min(max_b, len(prof) - 1)
    if min_b > hi:
        raise ValueError(f"empty window [{min_b}, {hi}]")
    best, wit = None, []
    for mb in range(max(min_b, 0), hi + 1):
        v = prof[mb] + weight * mb
        if best is None or v > best:
            best, wit = v, [(prof[mb], mb)]
        elif v == best:
            wit.append((prof[mb], mb))
    if best.denominator == 1:
        best = best.numerator
    return OracleResult(best, [{"size_a": x, "size_b": y} for x, y in wit],
                        binomial(ground.size, a) * binomial(ground.size, b),
                        time.perf_counter() - t0,
                        {"ground": [ground.lo, ground.hi], "a": a, "b": b,
                         "min_b": min_b, "max_b": hi, "weight": weight})


def oracle_diversity_table(n: int, k: int, weight=1) -> list[tuple[int, Any]]:
    """Rows (gamma, max |A| + weight*|B|) for gamma = 0..C(n-4, k-3), ground [2, n], |B| in [gamma, C(n-4,k-3)]."""
    if n > 14 or k > 6:
        raise ValueError("table caps: n <= 14, k <= 6")
    top = binomial(n - 4, k - 3)
    prof = _cached_profile(GroundSet(2, n), k - 1, k)
    weight = Fraction(weight)
    vals = [prof[mb] + weight * mb for mb in range(top + 1)]
    rows = []
    run = None
    for g in range(top, -1, -1):
        run = vals[g] if run is None else max(run, vals[g])
        rows.append((g, run.numerator if run.denominator == 1 else run))
    rows.reverse()
    return rows


def table_jumps(rows: list[tuple[int, Any]]) -> list[int]:
    """Right ends of the constant runs over gamma >= 1 (the last gamma always counts)."""
    vals = dict(rows)
    gs = [g for g, _ in rows if g >= 1]
    return [g for g in gs if g == gs[-1] or vals[g] > vals[g + 1]]


def equality_sizes(n: int, k: int, bound_fn) -> list[int]:
    """All m_b in [1, C(n-4,k-3)] where the best lex pair with |B| = m_b meets bound_fn(m_b)."""
    top = binomial(n - 4, k - 3)
    prof = _cached_profile(GroundSet(2, n), k - 1, k)
    return [mb for mb in range(1, top + 1) if prof[mb] + mb == bound_fn(mb)]


# -- maximal intersecting families -----------------------------------------------

@dataclass(frozen=True)
class Constraint:
    kind: str  # none | diversity | tau | degree_ratio
    value: Any = None

    @classmethod
    def parse(cls, text: str) -> "Constraint":
        text = text.replace(" ", "")
        if text in ("", "none"):
            return cls("none")
        for key, kind in (("diversity>=", "diversity"), ("tau>=", "tau"),
                          ("degree<=", "degree_ratio")):
            if text.startswith(key):
                raw = text[len(key):]
                return cls(kind, Fraction(raw) if kind == "degree_ratio" else int(raw))
        raise ValueError(f"cannot parse constraint {text!r}")

    def __str__(self):
        if self.kind == "none":
            return "none"
        sym = {"diversity": "diversity>=", "tau": "tau>=", "degree_ratio": "degree<="}[self.kind]
        return f"{sym}{self.value}"

    def holds(self, masks: list[int], n: int, k: int) -> bool:
        if self.kind == "none":
            return True
        size = len(masks)
        delta = max(sum(1 for m in masks if m >> e & 1) for e in range(n))
        if self.kind == "diversity":
            return size - delta >= self.value
        if self.kind == "degree_ratio":
            return delta <= self.value * size
        if self.kind == "tau":
            fam = SetFamily.from_sorted_masks(GroundSet(1, n), k, masks)
            return not has_cover_of_size(fam, self.value - 1)
        raise ValueError(self.kind)


def _bk_pivot(R, P, X, adj, on_clique, bound):
    """Bron-Kerbosch with Tomita pivoting over int bitsets.

    `bound()` gives the current best size; branches that cannot reach it are cut.
    """
    if not P and not X:
        on_clique(R)
        return
    if len(R) + popcount(P) < bound():
        return
    # pivot: vertex of P | X with the most neighbours in P
    best_u, best_c = -1, -1
    rest = P | X
    while rest:
        low = rest & -rest
        u = low.bit_length() - 1
        c = popcount(P & adj[u])
        if c > best_c:
            best_u, best_c = u, c
        rest ^= low
    cand = P & ~adj[best_u]
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        _bk_pivot(R + [v], P & adj[v], X & adj[v], adj, on_clique, bound)
        P &= ~low
        X |= low
        cand ^= low
        if len(R) + popcount(P) < bound():
            return


def oracle_maximal_intersecting(n: int, k: int, constraint="none", *,
                                symmetric_root: bool = True, prune: bool = True,
                                lower_bound: int = 0) -> OracleResult:
    """Largest maximal intersecting k-family over [n] satisfying the constraint.

    Maximal cliques of the "intersects" graph on C([n], k) are enumerated with
    pivoting. With symmetric_root only cliques through [k] are visited, which
    loses nothing up to isomorphism. With prune, branches that cannot reach
    the best feasible size (or lower_bound) are cut. Diversity and τ only grow
    when sets are added, so maximal families suffice for those constraints;
    the degree-ratio constraint is evaluated on maximal families only.
    """
    t0 = time.perf_counter()
    if binomial(n, k) > 200 or n > MAX_GROUND:
        raise ValueError("clique oracle cap: C(n,k) <= 200")
    cons = constraint if isinstance(constraint, Constraint) else Constraint.parse(constraint)
    verts = [to_mask(s) for s in itertools.combinations(range(1, n + 1), k)]
    N = len(verts)
    adj = []
    for i, a in enumerate(verts):
        row = 0
        for j, b in enumerate(verts):
            if i != j and a & b:
                row |= 1 << j
        adj.append(row)

    state = {"best": 0, "wit": [], "count": 0}

    def bound():
        return max(state["best"], lower_bound) if prune else 0

    def on_clique(R):
        state["count"] += 1
        size = len(R)
        if size < state["best"]:
            return
        masks = sorted(verts[v] for v in R)
        if not cons.holds(masks, n, k):
            return
        if size > state["best"]:
            state["best"], state["wit"] = size, []
        state["wit"].append(tuple(sorted(R)))

    if symmetric_root:
        _bk_pivot([0], adj[0], 0, adj, on_clique, bound)
    else:
        _bk_pivot([], (1 << N) - 1, 0, adj, on_clique, bound)

    ground = GroundSet(1, n)
    fams = [SetFamily(ground, k, [verts[v] for v in w]) for w in sorted(state["wit"])]
    fams.sort(key=lambda F: [from_mask(m) for m in F.masks])
    kept, deduped = dedupe_isomorphic(fams)
    return OracleResult(state["best"], kept, state["count"], time.perf_counter() - t0,
                        {"n": n, "k": k, "constraint": str(cons), "deduplicated": deduped,
                         "symmetric_root": symmetric_root, "pruned": prune})


# -- minimal tau = 2 families -------------------------------------------------------

def minimal_tau2_families(m: int, s: int, min_members: int = 2):
    """All minimal τ = 2 families of s-subsets of [m], one per relabelling class of witnesses.

    Minimality gives distinct elements i_l lying in every member but H_l;
    relabel them as 1..z. Then H_l = ([z] - {l}) ∪ R_l with R_l ⊂ [z+1, m],
    |R_l| = s - z + 1, and τ = 2 forces the R_l to have empty common part.
    Permuting the indices only permutes [z], so the R_l can be taken sorted.
    """
    for z in range(max(2, min_members), s + 2):
        pool = list(range(z + 1, m + 1))
        r = s - z + 1
        choices = [to_mask(c) for c in itertools.combinations(pool, r)]
        head = [to_mask(x for x in range(1, z + 1) if x != l) for l in range(1, z + 1)]
        for combo in itertools.combinations_with_replacement(choices, z):
            common = -1
            for c in combo:
                common &= c
            if common:
                continue
            yield [h | c for h, c in zip(head, combo)]


def _is_minimal_tau2(masks: list[int]) -> bool:
    common = -1
    for x in masks:
        common &= x
    if common:
        return False
    union = 0
    for x in masks:
        union |= x
    elems = [1 << e for e in range(union.bit_length()) if union >> e & 1]
    if not any(all(x & (p | q) for x in masks) for p, q in itertools.combinations(elems, 2)):
        return False
    for idx in range(len(masks)):
        rest = -1
        for j, x in enumerate(masks):
            if j != idx:
                rest &= x
        if not rest:
            return False
    return True


def oracle_lemmin(m: int, s: int, k: int, require_intersecting: bool = False) -> OracleResult:
    """max |F| + |H| with H ⊂ C([m], s) minimal for τ = 2 and F ⊂ C([m], k-1) the
    largest family cross-intersecting H."""
    t0 = time.perf_counter()
    if not (m <= 12 and s <= 5 and 4 <= k <= 6 and m >= k + s):
        raise ValueError("lemmin oracle caps: m <= 12, s <= 5, 4 <= k <= 6, m >= k+s")
    small = [to_mask(c) for c in itertools.combinations(range(1, m + 1), k - 1)]
    small_arr = np.array(small, dtype=np.uint64)
    best, wit, count = -1, [], 0
    for H in minimal_tau2_families(m, s):
        if require_intersecting and not all(x & y for x, y in itertools.combinations(H, 2)):
            continue
        assert _is_minimal_tau2(H)
        count += 1
        ok = np.ones(len(small), dtype=bool)
        for h in H:
            ok &= (small_arr & np.uint64(h)) != 0
        v = int(ok.sum()) + len(H)
        if v > best:
            best, wit = v, [H]
        elif v == best:
            wit.append(H)
    ground = GroundSet(1, m)
    fams = sorted((SetFamily(ground, s, H) for H in wit),
                  key=lambda F: [from_mask(x) for x in F.masks])
    kept, deduped = dedupe_isomorphic(fams)
    return OracleResult(best, kept, count, time.perf_counter() - t0,
                        {"m": m, "s": s, "k": k, "require_intersecting": require_intersecting,
                         "unique": len(kept) == 1 and deduped, "deduplicated": deduped})
