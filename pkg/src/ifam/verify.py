"""Bound-versus-oracle verification suites used by `ifam verify`.

Every suite splits into independent tasks; each task returns ReportRows.
Rows are merged in task order, so the output does not depend on --jobs.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .bounds import (
    ab_resistant_pairs,
    ab_top,
    bound_ab,
    bound_ft,
    bound_full1,
    bound_hk,
    bound_thm1,
    bound_weighted,
    enumerate_resistant,
    lemmin_f,
    neutral_sets,
    size_C3,
    u_for_gamma,
    weight_constant,
)
from .core import GroundSet, binomial
from .lex import lex_size
from .oracles import (
    _cached_profile,
    equality_sizes,
    oracle_diversity_table,
    oracle_lemmin,
    oracle_lexpair,
    oracle_maximal_intersecting,
    table_jumps,
)
from .zoo import build_C3, build_D37, build_Hu, build_Ji, covering_number, max_degree

MATCH, LOOSE, VIOLATION = "match", "theorem-loose", "VIOLATION"
FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class ReportRow:
    theorem: str
    params: dict
    bound: Any
    oracle: Any
    verdict: str
    witness: str | None = None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": {k: _enc(v) for k, v in self.params.items()},
            "bound": _enc(self.bound),
            "oracle": _enc(self.oracle),
            "verdict": self.verdict,
            "witness": self.witness,
        }


def _enc(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else str(v)
    if isinstance(v, (list, tuple)):
        return [_enc(x) for x in v]
    return v


def upper_verdict(bound, value) -> str:
    """A proven upper bound: exceeding it is a bug, meeting it is a match."""
    if isinstance(bound, float) or isinstance(value, float):
        if value > bound + FLOAT_TOL:
            return VIOLATION
        return MATCH if abs(value - bound) <= FLOAT_TOL else LOOSE
    if value > bound:
        return VIOLATION
    return MATCH if value == bound else LOOSE


def sharp_verdict(bound, value) -> str:
    """A bound claimed to be attained: any difference is a bug."""
    return MATCH if bound == value else VIOLATION


def _nk_grid(n_max: int, k_max: int, k_min: int = 3, n_cap: int = 14) -> list[tuple[int, int]]:
    return [(n, k) for k in range(k_min, k_max + 1)
            for n in range(2 * k + 1, min(n_max, n_cap) + 1)]


# -- suites ----------------------------------------------------------------------

def _diversity_task(n: int, k: int) -> list[ReportRow]:
    rows = []
    top = binomial(n - 4, k - 3)
    table = oracle_diversity_table(n, k)
    for g, oracle in table[1:]:
        rows.append(ReportRow("full1", {"n": n, "k": k, "gamma": g},
                              bound_full1(n, k, g).bound, oracle,
                              sharp_verdict(bound_full1(n, k, g).bound, oracle)))
    jumps, chain = table_jumps(table), enumerate_resistant(n, k)
    rows.append(ReportRow("resistant-breakpoints", {"n": n, "k": k}, chain, jumps,
                          sharp_verdict(chain, jumps)))
    values = [bound_full1(n, k, g).bound for g in [0] + chain]
    for l in range(1, len(values)):
        ok = values[l] < values[l - 1]
        rows.append(ReportRow("strict-decrease", {"n": n, "k": k, "l": l},
                              values[l - 1], values[l], MATCH if ok else VIOLATION))
    for g in range(1, top + 1):
        thm = bound_thm1(n, k, u_for_gamma(n, k, g)).bound
        rows.append(ReportRow("full1<=thm1", {"n": n, "k": k, "gamma": g},
                              float(thm), bound_full1(n, k, g).bound,
                              upper_verdict(float(thm), bound_full1(n, k, g).bound)))
    return rows


def _equality_task(n: int, k: int) -> list[ReportRow]:
    chain = enumerate_resistant(n, k)
    neutral = sorted({lex_size(n, T, k) for l in range(1, len(chain) + 1)
                      for T in neutral_sets(n, k, l)})
    found = equality_sizes(n, k, lambda g: bound_full1(n, k, g).bound)
    return [ReportRow("neutral-equality", {"n": n, "k": k}, neutral, found,
                      sharp_verdict(neutral, found))]


def _weighted_task(n: int, k: int) -> list[ReportRow]:
    rows = []
    C = weight_constant(n, k)
    prev = 0
    for gl in enumerate_resistant(n, k):
        rep = bound_weighted(n, k, gl)
        res = oracle_lexpair(n, k - 1, k, min_b=prev + 1, max_b=gl, weight=C,
                             ground=GroundSet(2, n))
        rows.append(ReportRow("weighted", {"n": n, "k": k, "window": (prev + 1, gl)},
                              rep.bound, res.objective, sharp_verdict(rep.bound, res.objective)))
        prev = gl
    return rows


def _ab_task(n: int, a: int, b: int) -> list[ReportRow]:
    rows = []
    prof = _cached_profile(GroundSet(1, n), a, b)
    top = ab_top(n, a, b)
    # step bound: the window maximum equals the bound
    prev = 0
    for gl, _pair in ab_resistant_pairs(n, a, b):
        rep = bound_ab(n, a, b, gl)
        if rep.inputs["branch"] == "part 1":
            best = max(prof[x] + x for x in range(prev + 1, gl + 1))
            rows.append(ReportRow("ab-step", {"n": n, "a": a, "b": b, "window": (prev + 1, gl)},
                                  rep.bound, best, sharp_verdict(rep.bound, best)))
        prev = gl
    # every other size: an upper bound at the exact size of B
    for x in range(top + 1, len(prof)):
        try:
            rep = bound_ab(n, a, b, x)
        except ValueError:
            continue
        rows.append(ReportRow("ab", {"n": n, "a": a, "b": b, "size_b": x, "branch": rep.note},
                              rep.bound, prof[x] + x, upper_verdict(rep.bound, prof[x] + x)))
    return rows


def _ft_task(n: int, af: int, bf: int) -> list[ReportRow]:
    """Frankl-Tokushige against the oracle and against the (a,b) bound.

    F is af-uniform (the side with the size window), G is bf-uniform.
    """
    rows = []
    prof = _cached_profile(GroundSet(1, n), bf, af)
    for alpha in range(1, af + 1):
        ft = bound_ft(n, af, bf, alpha).bound
        lo, hi = binomial(n - alpha, af - alpha), binomial(n - 1, af - 1)
        best = max(prof[x] + x for x in range(lo, hi + 1))
        rows.append(ReportRow("ft", {"n": n, "a": af, "b": bf, "alpha": alpha},
                              ft, best, upper_verdict(ft, best)))
        if bf - af > 1:
            continue
        worst = None
        for x in range(lo, hi + 1):
            try:
                v = bound_ab(n, bf, af, x).bound
            except ValueError:
                continue
            worst = v if worst is None else max(worst, v)
        if worst is not None:
            rows.append(ReportRow("ab<=ft", {"n": n, "a": af, "b": bf, "alpha": alpha},
                                  ft, worst, upper_verdict(ft, worst)))
    return rows


def _clique_task(n: int, k: int) -> list[ReportRow]:
    rows = []
    p = {"n": n, "k": k}
    ekr = binomial(n - 1, k - 1)
    r = oracle_maximal_intersecting(n, k, "none")
    rows.append(ReportRow("ekr", p, ekr, r.objective, sharp_verdict(ekr, r.objective)))
    hm = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1
    r = oracle_maximal_intersecting(n, k, "diversity>=1")
    rows.append(ReportRow("hilton-milner", p, hm, r.objective, sharp_verdict(hm, r.objective)))
    if k >= 4:
        hk = bound_hk(n, k).bound
        r = oracle_maximal_intersecting(n, k, "diversity>=2")
        rows.append(ReportRow("hk", p, hk, r.objective, upper_verdict(hk, r.objective)))
    return rows


def _zoo_task(n: int, k: int) -> list[ReportRow]:
    rows = []
    p = {"n": n, "k": k}
    C3 = build_C3(n, k)
    rows.append(ReportRow("size-C3", p, size_C3(n, k), len(C3),
                          sharp_verdict(size_C3(n, k), len(C3))))
    hk = binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1
    rows.append(ReportRow("size-Hk", p, hk, len(build_Hu(n, k, k)),
                          sharp_verdict(hk, len(build_Hu(n, k, k)))))
    sizes = [len(build_Ji(n, k, i)) for i in range(1, k + 1)]
    for i in range(1, k):
        want = (binomial(n - k - 2, k - 2) - 1 if i == 1
                else binomial(n - k - i - 1, k - 2))
        got = sizes[i - 1] - sizes[i]
        rows.append(ReportRow("J-difference", {**p, "i": i}, want, got, sharp_verdict(want, got)))
    if binomial(n, k) <= 3000:
        tau = covering_number(C3)
        rows.append(ReportRow("tau-C3", p, 3, tau, sharp_verdict(3, tau)))
    return rows


def _d37_task(k: int) -> list[ReportRow]:
    n = 8 * k
    D = build_D37(n, k)
    delta, _ = max_degree(D)
    ratio = Fraction(delta, len(D))
    return [ReportRow("D37-degree-ratio", {"n": n, "k": k}, Fraction(1, 2), ratio,
                      MATCH if ratio < Fraction(1, 2) else VIOLATION)]


def _lemmin_task(m: int, s: int, k: int) -> list[ReportRow]:
    p = {"m": m, "s": s, "k": k}
    r = oracle_lemmin(m, s, k)
    f2 = lemmin_f(m, s, k, 2) + 2
    rows = [ReportRow("lemmin", p, f2, r.objective, sharp_verdict(f2, r.objective))]
    r = oracle_lemmin(m, s, k, require_intersecting=True)
    f3 = lemmin_f(m, s, k, 3) + 3
    rows.append(ReportRow("lemmin-intersecting", p, f3, r.objective, sharp_verdict(f3, r.objective)))
    return rows


def _tasks(suite: str, n_max: int, k_max: int) -> list[tuple[Callable, tuple]]:
    grid = _nk_grid(n_max, k_max)
    ab_grid = [(n, a, b) for b in range(1, k_max + 1) for a in range(1, b + 2)
               for n in range(a + b + 1, min(n_max, 14) + 1)]
    ft_grid = [(n, af, bf) for af in range(1, k_max + 1) for bf in range(af, k_max + 1)
               for n in range(af + bf + 1, min(n_max, 14) + 1)]
    clique_grid = [(n, 3) for n in range(7, min(n_max, 10) + 1)]
    lemmin_grid = [(m, 4, 4) for m in (9, 10) if m <= n_max and k_max >= 4]
    table = {
        "diversity": [(_diversity_task, nk) for nk in grid],
        "equality": [(_equality_task, nk) for nk in grid],
        "weighted": [(_weighted_task, nk) for nk in grid],
        "ab": [(_ab_task, t) for t in ab_grid],
        "ft": [(_ft_task, t) for t in ft_grid],
        "clique": [(_clique_task, t) for t in clique_grid],
        "zoo": [(_zoo_task, nk) for nk in grid] + [(_d37_task, (k,)) for k in range(3, k_max + 1)],
        "lemmin": [(_lemmin_task, t) for t in lemmin_grid],
    }
    if suite == "all":
        return [t for name in SUITES for t in table[name]]
    if suite not in table:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return table[suite]


SUITES = ("diversity", "equality", "weighted", "ab", "ft", "clique", "zoo", "lemmin")


def _run(task):
    fn, args = task
    return fn(*args)


def run_suite(suite: str, n_max: int = 12, k_max: int = 5, jobs: int = 1) -> list[ReportRow]:
    tasks = _tasks(suite, n_max, k_max)
    if jobs <= 1:
        chunks = [_run(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run, tasks))
    return [row for chunk in chunks for row in chunk]
