import pytest

from conftest import hf
from hilbstrata.diagrams import enumerate_diagrams
from hilbstrata.incidence import cover_moves
from hilbstrata.laurent import IntLaurentPoly
from hilbstrata.resolution import ambient_hilbert, generic_betti, series_numerator
from oracles import binomial, numerator_by_truncation


def test_ambient_hilbert_values():
    assert ambient_hilbert(0) == 1
    assert ambient_hilbert(2) == 6
    assert ambient_hilbert(-1) == 0
    for m in range(0, 20):
        assert ambient_hilbert(m) == binomial(m + 2, 2)


class TestNumerator:
    def test_three_collinear(self):
        assert series_numerator(hf("1,1,1")) == IntLaurentPoly({1: 1, 3: 1, 4: -1})

    def test_one_point(self):
        assert series_numerator(hf("1")) == IntLaurentPoly({1: 2, 2: -1})

    def test_three_generic(self):
        assert series_numerator(hf("1,2")) == IntLaurentPoly({2: 3, 3: -2})

    def test_value_at_one_is_always_one(self):
        for n in range(1, 21):
            for d in enumerate_diagrams(n):
                q = series_numerator(d.hilbert_function())
                assert sum(q.coeffs.values()) == 1

    def test_matches_truncated_series_oracle(self):
        for n in range(1, 21):
            for d in enumerate_diagrams(n):
                h = d.hilbert_function()
                assert series_numerator(h).coeffs == numerator_by_truncation(h)


class TestGenericBetti:
    def test_one_point(self):
        t = generic_betti(hf("1"))
        assert t.a == {1: 2} and t.b == {2: 1}

    def test_three_collinear(self):
        t = generic_betti(hf("1,1,1"))
        assert t.a == {1: 1, 3: 1} and t.b == {4: 1}

    def test_three_generic(self):
        t = generic_betti(hf("1,2"))
        assert t.a == {2: 3} and t.b == {3: 2}

    def test_render(self):
        assert generic_betti(hf("1")).render() == "a: {1: 2}, b: {2: 1}"

    def test_no_degree_carries_both(self):
        for n in range(1, 21):
            for d in enumerate_diagrams(n):
                t = generic_betti(d.hilbert_function())
                assert not set(t.a) & set(t.b)
                assert all(c > 0 for c in t.a.values())
                assert all(c > 0 for c in t.b.values())

    def test_rank_one_total(self):
        for n in range(1, 21):
            for d in enumerate_diagrams(n):
                t = generic_betti(d.hilbert_function())
                assert sum(t.a.values()) - sum(t.b.values()) == 1


def test_cumulative_and_pointwise_height_identities():
    # Partial sums of a_i - b_i equal 1 + s_{l-1} - s_l, and each
    # individual difference is the second difference of the heights.
    for n in range(1, 26):
        for d in enumerate_diagrams(n):
            t = generic_betti(d.hilbert_function())
            top = len(d.s) + 4
            acc = 0
            for l in range(0, top):
                acc += t.delta(l)
                assert acc == 1 + d.height(l - 1) - d.height(l)
                if l > 0:
                    assert t.delta(l) == -d.height(l) + 2 * d.height(l - 1) - d.height(l - 2)


def test_numerator_shift_between_cover_tables():
    # Across a cover the two numerators differ by (t^u - t^{v+1})(1-t)^2.
    move_factor = IntLaurentPoly({0: 1, 1: -2, 2: 1})
    for n in range(1, 26):
        for d in enumerate_diagrams(n):
            phi = d.hilbert_function()
            q_phi = series_numerator(phi)
            for pair in cover_moves(phi):
                q_psi = series_numerator(pair.psi)
                jump = IntLaurentPoly({pair.u: 1, pair.v + 1: -1})
                assert q_psi == q_phi - jump * move_factor


def test_zero_pattern_for_wide_covers():
    # Wide moves force vanishing generator/relation counts on the plateau
    # and the three boundary inequalities.
    seen_wide = 0
    for n in range(1, 26):
        for d in enumerate_diagrams(n):
            phi = d.hilbert_function()
            t = generic_betti(phi)
            for pair in cover_moves(phi):
                u, v = pair.u, pair.v
                if v < u + 1:
                    continue
                seen_wide += 1
                assert all(t.a_at(i) == 0 for i in range(u + 1, v + 2))
                assert all(t.b_at(i) == 0 for i in range(u + 2, v + 3))
                assert t.a_at(u) <= t.b_at(u + 1) + 1
                assert t.a_at(v + 2) > 0
                assert t.b_at(v + 3) <= t.a_at(v + 2)
    assert seen_wide > 100
