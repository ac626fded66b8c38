import itertools
from fractions import Fraction

import pytest

from ifam.bounds import (
    a_side_size,
    ab_resistant_pairs,
    ab_top,
    bound_ab,
    bound_corhm,
    bound_corkz,
    bound_ft,
    bound_full1,
    bound_hk,
    bound_thm1,
    bound_weighted,
    corhm_windows,
    enumerate_resistant,
    is_ab_resistant_pair,
    is_resistant_pair,
    lemmin_f,
    lemmin_fprime3,
    lemmin_fs,
    neutral_partner,
    neutral_sets,
    resistant_chain,
    resistant_descriptor,
    resistant_pairs,
    size_C3,
    weight_constant,
    weighted_step_ratio_ok,
)
from ifam.core import GroundSet, binomial, cascade
from ifam.lex import lex_count, lex_size
from ifam.oracles import lexpair_profile, oracle_lexpair
from ifam.zoo import build_C3, build_F2, build_T2

NK = [(n, k) for k in (3, 4, 5, 6) for n in range(2 * k + 1, 15)]


def hm(n, k):
    return binomial(n - 1, k - 1) - binomial(n - k - 1, k - 1) + 1


# -- resistant numbers --------------------------------------------------------------

def test_descriptor_boundary_examples():
    for n, k in NK:
        top = binomial(n - 4, k - 3)
        assert resistant_descriptor(n, k, top).resistant
        assert resistant_descriptor(n, k, top).b_side == (2, 3, 4)
        if top + 1 < binomial(n - 1, k - 1):
            assert not resistant_descriptor(n, k, top + 1).resistant
        for i in range(1, k - 2):
            assert resistant_descriptor(n, k, i).resistant


def test_descriptor_errors():
    with pytest.raises(ValueError):
        resistant_descriptor(12, 4, binomial(11, 3))
    with pytest.raises(ValueError):
        resistant_descriptor(8, 4, 1)
    with pytest.raises(ValueError):
        resistant_descriptor(12, 4, -1)


def test_descriptor_invariants():
    for n, k in [(12, 4), (12, 5), (13, 6), (14, 5)]:
        for g in range(1, binomial(n - 4, k - 3) + 40):
            d = resistant_descriptor(n, k, g)
            stops = d.a_side
            assert sum(binomial(n - b, n - k - i) for i, b in enumerate(stops, 1)) == g
            assert stops[0] > 1 and all(x < y for x, y in zip(stops, stops[1:]))
            top = stops[-1]
            assert set(d.a_side) | set(d.b_side) == set(range(2, top + 1))
            assert set(d.a_side) & set(d.b_side) == {top}
            if len(d.b_side) <= k:
                assert lex_size(n, d.b_side, k) == g
            if len(d.a_side) <= k - 1:
                assert a_side_size(n, k, d) == lex_count(GroundSet(2, n), d.a_side, k - 1)


def test_resistant_lists():
    assert enumerate_resistant(12, 4) == [1, 8]
    assert enumerate_resistant(12, 5) == [1, 2, 7, 8, 28]
    assert enumerate_resistant(11, 5) == [1, 2, 6, 7, 21]
    assert enumerate_resistant(9, 4) == [1, 5]
    assert enumerate_resistant(14, 6) == [1, 2, 3, 8, 9, 10, 15, 16, 36, 37, 38, 43, 44, 120]


def test_resistant_list_shape():
    for n, k in NK:
        chain = enumerate_resistant(n, k)
        assert chain[: k - 3] == list(range(1, k - 2))
        if k > 3:
            assert chain[k - 3] == n - k
        assert chain[-1] == binomial(n - 4, k - 3)
        assert chain == sorted(set(chain))


def test_resistant_duality_two_routes():
    for n, k in NK:
        via_pairs = [size for size, _ in resistant_pairs(n, k)]
        assert via_pairs == enumerate_resistant(n, k), (n, k)


def test_resistant_pair_base_and_descriptor_pairs():
    assert is_resistant_pair((1, 4), (2, 3, 4), 4)
    assert not is_resistant_pair((1, 5, 7, 8), (2, 3, 4, 6, 8), 5)
    for n, k in [(12, 5), (14, 6)]:
        for d in resistant_chain(n, k)[1:]:
            assert is_resistant_pair((1,) + d.a_side, d.b_side, k)


# -- diversity bounds -----------------------------------------------------------------

def test_full1_known_values():
    assert bound_full1(12, 4, 2).bound == 117
    assert bound_full1(12, 4, 0).bound == binomial(11, 3)
    rep = bound_full1(12, 4, 2)
    assert rep.inputs["l"] == 2 and rep.inputs["gamma_l"] == 8


def test_full1_matches_lexpair_oracle_12_4():
    for g in range(1, 9):
        res = oracle_lexpair(12, 3, 4, min_b=g, max_b=8, ground=GroundSet(2, 12))
        assert bound_full1(12, 4, g).bound == res.objective


def test_full1_step_semantics_and_strict_decrease():
    for n, k in NK:
        chain = [0] + enumerate_resistant(n, k)
        for lo, hi in zip(chain, chain[1:]):
            vals = {bound_full1(n, k, g).bound for g in range(lo + 1, hi + 1)}
            assert len(vals) == 1
        steps = [bound_full1(n, k, g).bound for g in chain]
        assert all(x > y for x, y in zip(steps, steps[1:]))


def test_full1_sharp_witness_attains_bound():
    for n, k in [(12, 4), (11, 5), (10, 4)]:
        for g in enumerate_resistant(n, k):
            rep = bound_full1(n, k, g)
            A, B = rep.sharp_witness.families(n)
            assert len(A) + len(B) == rep.bound
            assert len(B) == g
            assert all(x & y for x in A.masks for y in B.masks)


def test_full1_equals_thm1_at_integer_u():
    for n, k in NK:
        for u in range(3, k + 1):
            g = binomial(n - u - 1, n - k - 1)
            if g > binomial(n - 4, k - 3):
                continue
            assert bound_full1(n, k, g).bound == bound_thm1(n, k, u).bound, (n, k, u)


def test_full1_above_range_delegates():
    n, k = 12, 4
    top = binomial(n - 4, k - 3)
    rep = bound_full1(n, k, top + 1)
    assert "delegated" in rep.note
    with pytest.raises(ValueError):
        bound_full1(n, k, binomial(n - 1, k - 1))


def test_thm1_values():
    for n, k in NK:
        assert bound_thm1(n, k, k).bound == hm(n, k)
    assert bound_thm1(12, 4, 3).bound == 117
    assert bound_thm1(12, 4, 4).bound == 131
    half = bound_thm1(12, 4, Fraction(7, 2)).bound
    assert isinstance(half, Fraction)
    assert abs(float(half) - bound_thm1(12, 4, 3.5).bound) < 1e-9
    assert 117 < half < 131
    with pytest.raises(ValueError):
        bound_thm1(12, 4, 2)
    with pytest.raises(ValueError):
        bound_thm1(12, 4, 4.5)


def test_corhm_values():
    rep = bound_corhm(12, 4, 4, 2)
    assert rep.bound == 117
    res = oracle_lexpair(12, 3, 4, min_b=2, max_b=8, ground=GroundSet(2, 12))
    assert rep.bound == res.objective
    for n, k in [(12, 4), (13, 5), (14, 6)]:
        assert bound_corhm(n, k, k, 2).bound == bound_hk(n, k).bound
    with pytest.raises(ValueError):
        bound_corhm(12, 4, 4, 1)
    lo, hi = corhm_windows(12, 4)[0]
    assert bound_corhm(12, 4, 3, lo).note == "u=3 lower window"
    with pytest.raises(ValueError):
        bound_corhm(12, 4, 3, 3)


def test_weighted_values():
    for n, k in NK:
        assert bound_weighted(n, k, 0).bound == binomial(n - 1, k - 1)
    rep = bound_weighted(12, 4, 2)
    C = weight_constant(12, 4)
    assert C == 3
    assert rep.inputs["nontrivial"] == binomial(11, 3) - binomial(7, 3) + C
    res = oracle_lexpair(12, 3, 4, min_b=2, max_b=8, weight=C, ground=GroundSet(2, 12))
    assert rep.bound == res.objective
    assert rep.inputs["window"] == (2, 8)
    with pytest.raises(ValueError):
        bound_weighted(12, 4, 9)


def test_weighted_not_monotone_across_windows():
    # per-window values rise from l = 4 to l = 5 at (11, 5)
    chain = enumerate_resistant(11, 5)
    v4, v5 = bound_weighted(11, 5, chain[3]).bound, bound_weighted(11, 5, chain[4]).bound
    assert (v4, v5) == (Fraction(601, 3), 203)


def test_weighted_step_ratio_grid():
    checked = 0
    for n in range(7, 31):
        for k in range(3, (n - 1) // 2 + 1):
            for i in range(5, 2 * k + 1):
                for z_b in range(0, k - 2):
                    z_a = 2 * k - i - z_b
                    if z_a <= z_b or z_a > k - 1:
                        continue
                    assert weighted_step_ratio_ok(n, k, i, z_a, z_b), (n, k, i, z_a, z_b)
                    checked += 1
    assert checked > 1000


# -- (a, b) version ---------------------------------------------------------------------

def test_ab_resistant_base_pair():
    for a, b in [(3, 4), (4, 4), (2, 4), (5, 5)]:
        t = b + 1 - a
        assert is_ab_resistant_pair((t + 1,), tuple(range(1, t + 2)), a, b)


def test_ab_chain_reproduces_diversity_chain():
    for n, k in NK:
        shifted = [size for size, _ in ab_resistant_pairs(n - 1, k - 1, k)]
        assert shifted == enumerate_resistant(n, k)
        assert ab_top(n - 1, k - 1, k) == binomial(n - 4, k - 3)


def test_ab_step_matches_full1():
    for n, k in [(12, 4), (12, 5), (11, 5), (10, 4)]:
        for g in range(1, binomial(n - 4, k - 3) + 1):
            assert bound_ab(n - 1, k - 1, k, g).bound == bound_full1(n, k, g).bound


def test_ab_against_oracle_small():
    for n in range(5, 11):
        for b in range(1, 5):
            for a in range(1, b + 2):
                if n <= a + b:
                    continue
                prof = lexpair_profile(GroundSet(1, n), a, b)
                for x in range(len(prof)):
                    try:
                        rep = bound_ab(n, a, b, x)
                    except ValueError:
                        continue
                    assert prof[x] + x <= rep.bound, (n, a, b, x)


def test_ab_weighted_variant():
    n, a, b = 12, 3, 4
    w = Fraction(n - b - 2, a - 1)
    prof = lexpair_profile(GroundSet(1, n), a, b)
    prev = 0
    for gl, _ in ab_resistant_pairs(n, a, b):
        rep = bound_ab(n, a, b, gl, weight=w)
        best = max(prof[x] + w * x for x in range(prev + 1, gl + 1))
        assert best == rep.bound
        prev = gl
    with pytest.raises(ValueError):
        bound_ab(n, a, b, 1, weight=Fraction(n - b - 1, a - 1))


def test_ab_excluded_interval_falls_back():
    # (9, 4, 4): |B| = C(8, 3) sits in the excluded interval of the i = t+1 branch
    rep = bound_ab(9, 4, 4, 56)
    assert rep.bound == 112
    assert rep.inputs["branch"] == "corollary j=1"


def test_corkz_examples():
    n, a, b = 10, 3, 4
    t = b + 1 - a
    rep = bound_corkz(n, a, b, 5)
    assert rep.bound == binomial(n, a) and rep.strict
    for j in range(t, b + 1):
        x = binomial(n - j, b - j)
        if x <= binomial(n - t, a - 1):
            v = bound_corkz(n, a, b, x, j).bound
            assert v == binomial(n, a) - binomial(n - j, a) + binomial(n - j, b - j)
    with pytest.raises(ValueError):
        bound_corkz(n, a, b, binomial(n - t, a - 1) + 1)


def test_ft_values():
    n, a, b = 12, 3, 4
    assert bound_ft(n, a, b, 1).bound == binomial(n, b) + binomial(n - 1, n - a) - binomial(n - 1, b)
    v2, v3 = bound_ft(n, a, b, 2).bound, bound_ft(n, a, b, 3).bound
    mid = bound_ft(n, a, b, Fraction(5, 2)).bound
    assert (v2, v3) == (295, 370)
    assert mid == Fraction(21921825, 65536)
    assert v2 < mid < v3
    assert abs(bound_ft(n, a, b, 2.5).bound - float(mid)) < 1e-9
    with pytest.raises(ValueError):
        bound_ft(7, 3, 4, 2)
    with pytest.raises(ValueError):
        bound_ft(12, 4, 3, 2)


def test_ft_never_beaten_by_oracle():
    for n in range(6, 12):
        for af in range(1, 4):
            for bf in range(af, 5):
                if n <= af + bf:
                    continue
                prof = lexpair_profile(GroundSet(1, n), bf, af)
                for alpha in range(1, af + 1):
                    lo, hi = binomial(n - alpha, af - alpha), binomial(n - 1, af - 1)
                    best = max(prof[x] + x for x in range(lo, hi + 1))
                    assert best <= bound_ft(n, af, bf, alpha).bound


# -- neutral chains ---------------------------------------------------------------------

def test_neutral_sets_example():
    n, k = 12, 5
    m = len(enumerate_resistant(n, k))
    assert neutral_sets(n, k, m) == [(2, 3, 4), (2, 3, 4, 6), (2, 3, 4, 6, 8)]
    with pytest.raises(ValueError):
        neutral_sets(n, k, m + 1)


def test_neutral_chain_length_and_order():
    for n, k in NK:
        chain = enumerate_resistant(n, k)
        for l in range(1, len(chain) + 1):
            sets = neutral_sets(n, k, l)
            assert len(sets) <= k - len(sets[0]) + 1
            lo = chain[l - 2] if l > 1 else 0
            for T in sets:
                assert lo < lex_size(n, T, k) <= chain[l - 1]


def test_neutral_pairs_attain_bound_12_4():
    n, k = 12, 4
    for l, g in enumerate(enumerate_resistant(n, k), start=1):
        bound = bound_full1(n, k, g).bound
        for T in neutral_sets(n, k, l):
            S = neutral_partner(T)
            from ifam.lex import CharPair

            A, B = CharPair(S, T, k - 1, k).families(n)
            assert len(A) + len(B) == bound
            assert all(x & y for x in A.masks for y in B.masks)


# -- minimal tau = 2 formulas ---------------------------------------------------------------

def test_lemmin_formulas():
    for m in range(8, 16):
        for k in range(4, 7):
            for s in range(2, k + 1):
                if m < k + s:
                    continue
                f = [None, None] + [lemmin_f(m, s, k, z) for z in range(2, s + 2)]
                assert f[2] == lemmin_fs(m, s, k)
                for z in range(3, s + 2):
                    gap = binomial(m - s - 2, k - 3)
                    assert f[z - 1] - f[z] >= gap > 1, (m, s, k, z)
                if s >= 4:
                    assert f[3] - lemmin_fprime3(m, s, k) == binomial(m - s - 3, k - 3)


def test_lemmin_f3_counts_F2_plus_T2():
    for m, s, k in [(10, 4, 4), (9, 4, 4), (11, 5, 5), (12, 4, 5)]:
        assert lemmin_f(m, s, k, 3) + 3 == len(build_F2(m, s, k)) + len(build_T2(s, m))


def test_size_C3():
    for n, k in [(11, 5), (9, 4), (12, 4)]:
        assert size_C3(n, k) == len(build_C3(n, k))
        assert size_C3(n, k) == lemmin_f(n - 1, k, k, 3) + 3
    assert (size_C3(9, 4), size_C3(11, 5), size_C3(12, 4)) == (48, 199, 87)
    with pytest.raises(ValueError):
        size_C3(8, 4)


def test_cascade_of_resistant_numbers_uses_stops():
    n, k = 14, 6
    for g in enumerate_resistant(n, k):
        d = resistant_descriptor(n, k, g)
        assert [n - a for a, _ in cascade(g, n - k - 1).terms] == list(d.a_side)
