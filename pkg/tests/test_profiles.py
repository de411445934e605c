import pytest

from tournkit.core import TournamentError, chain, cycle3, lex_sum, make_tournament, relabel
from tournkit.families import family
from tournkit.profiles import (
    ProfileSeries,
    SumSpec,
    UNBOUNDED,
    age_leq,
    growth_of_sum,
    profile_count,
    profile_sequence,
    series_fit,
    stabilized_profile,
    sum_profile,
    sum_profile_sequence,
)

from conftest import random_tournament
from test_core import diamond


class TestProfileCount:
    def test_chain_always_one(self):
        c = chain(9)
        for n in range(10):
            assert profile_count(c, n) == 1

    def test_diamond_triples(self):
        assert profile_count(diamond(), 3) == 2

    def test_k_family_quadruples(self):
        assert profile_count(family("k", 8), 4) == 4

    def test_budget(self):
        with pytest.raises(TournamentError) as e:
            profile_count(chain(30), 15, budget=1000)
        assert e.value.code == "BUDGET_EXCEEDED"


class TestProfileSequence:
    def test_c3_family_chain4(self):
        s = profile_sequence(family("c3", 4), 8)
        assert list(s.values) == [1, 1, 1, 2, 3, 4, 6, 9, 13]

    def test_v_family_chain7(self):
        s = profile_sequence(family("v", 7), 7)
        assert list(s.values) == [1, 1, 1, 2, 4, 9, 21, 48]

    def test_cycle_alone(self):
        s = profile_sequence(cycle3(), 3)
        assert list(s.values) == [1, 1, 1, 1]

    def test_relabel_invariant(self, rng):
        for _ in range(20):
            t = random_tournament(rng, 7)
            perm = list(range(7))
            rng.shuffle(perm)
            assert profile_sequence(t, 5).values == profile_sequence(relabel(t, perm), 5).values


class TestSumSpec:
    def test_arity(self):
        with pytest.raises(TournamentError) as e:
            SumSpec(cycle3(), (1, 2))
        assert e.value.code == "ARITY_MISMATCH"

    def test_negative_cap(self):
        with pytest.raises(TournamentError) as e:
            SumSpec(cycle3(), (1, -1, 2))
        assert e.value.code == "OUT_OF_RANGE"

    def test_index_too_large(self):
        spec = SumSpec(chain(9), (1,) * 9)
        with pytest.raises(TournamentError) as e:
            sum_profile(spec, 3)
        assert e.value.code == "INDEX_TOO_LARGE"


class TestSumProfile:
    def test_single_unbounded_vertex(self):
        spec = SumSpec(chain(1), (UNBOUNDED,))
        for n in (0, 1, 5, 12):
            assert sum_profile(spec, n) == 1

    def test_cycle_all_unbounded_spots(self):
        spec = SumSpec(cycle3(), (UNBOUNDED,) * 3)
        assert sum_profile(spec, 3) == 2
        assert sum_profile(spec, 5) == 3

    def test_cycle_all_unbounded_sequence(self):
        spec = SumSpec(cycle3(), (UNBOUNDED,) * 3)
        s = sum_profile_sequence(spec, 14)
        assert list(s.values) == [1, 1, 1, 2, 2, 3, 5, 6, 8, 11, 13, 16, 20, 23, 27]

    def test_finite_caps_match_materialized(self):
        caps_list = [(2, 2, 2), (3, 1, 2), (1, 1, 1), (0, 2, 3)]
        for caps in caps_list:
            spec = SumSpec(cycle3(), caps)
            support = [i for i, c in enumerate(caps) if c]
            blocks = [chain(caps[i]) for i in support]
            mat = lex_sum(
                make_tournament(
                    len(support),
                    [
                        (a, b) if cycle3().edge(support[a], support[b]) else (b, a)
                        for a in range(len(support))
                        for b in range(a + 1, len(support))
                    ],
                ),
                blocks,
            )
            for n in range(mat.n + 1):
                assert sum_profile(spec, n) == profile_count(mat, n)
            assert sum_profile(spec, mat.n + 1) == 0

    def test_chain_index_collapses(self):
        spec = SumSpec(chain(4), (UNBOUNDED, 2, UNBOUNDED, 1))
        for n in (0, 3, 9):
            assert sum_profile(spec, n) == 1


class TestSeriesFit:
    def test_constant_profile(self):
        s = ProfileSeries((1,) * 10)
        assert series_fit(s, 1) == [1]

    def test_cycle_sum_numerator(self):
        spec = SumSpec(cycle3(), (UNBOUNDED,) * 3)
        s = sum_profile_sequence(spec, 14)
        assert series_fit(s, 3) == [1, 0, -1, 0, 0, 1, 1]

    def test_finite_profile_is_polynomial_at_k0(self):
        s = profile_sequence(cycle3(), 3)
        padded = ProfileSeries(tuple(s.values) + (0,) * 5)
        assert series_fit(padded, 0) == [1, 1, 1, 1]

    def test_a000930_never_fits(self):
        from tournkit.formulas import C3_RECURRENCE, formula_value

        s = ProfileSeries(tuple(formula_value(C3_RECURRENCE, n) for n in range(15)))
        for k in range(4):
            assert series_fit(s, k) is None

    def test_too_few_terms(self):
        s = ProfileSeries((1, 1, 1))
        with pytest.raises(TournamentError) as e:
            series_fit(s, 2)
        assert e.value.code == "TOO_FEW_TERMS"


class TestAgeComparison:
    def test_restriction_age(self, rng):
        from tournkit.core import restrict

        t = random_tournament(rng, 8)
        sub = restrict(t, [0, 2, 4, 6])
        assert age_leq(sub, t, 4)

    def test_tau1_separates_c3_from_k(self):
        assert not age_leq(family("c3", 4), family("k", 8), 6)

    def test_chain_needs_long_enough_host(self):
        # longest transitive subtournament of this family at length n is n+1
        assert age_leq(chain(6), family("t", 5), 6)
        assert not age_leq(chain(6), family("t", 4), 6)


class TestGrowth:
    def test_single_vertex(self):
        assert growth_of_sum(SumSpec(chain(1), (UNBOUNDED,))) == {"p": 1, "k": 1, "degree": 0}

    def test_cycle_all_unbounded(self):
        assert growth_of_sum(SumSpec(cycle3(), (UNBOUNDED,) * 3)) == {"p": 3, "k": 3, "degree": 2}

    def test_two_chain_merges(self):
        assert growth_of_sum(SumSpec(chain(2), (UNBOUNDED, UNBOUNDED))) == {"p": 1, "k": 1, "degree": 0}

    def test_zero_caps_dropped(self):
        assert growth_of_sum(SumSpec(cycle3(), (0, UNBOUNDED, UNBOUNDED))) == {"p": 1, "k": 1, "degree": 0}

    def test_mixed(self):
        assert growth_of_sum(SumSpec(cycle3(), (1, 2, UNBOUNDED))) == {"p": 3, "k": 1, "degree": 0}

    def test_partition_lower_bound(self):
        from tournkit.formulas import partition_count

        specs = [
            SumSpec(cycle3(), (UNBOUNDED,) * 3),
            SumSpec(cycle3(), (1, 2, UNBOUNDED)),
            SumSpec(diamond(), (UNBOUNDED,) * 4),
        ]
        for spec in specs:
            g = growth_of_sum(spec)
            for n in range(g["p"], 15):
                assert sum_profile(spec, n) >= partition_count(g["k"], n - g["p"])

    def test_degree_law_normalized_ratio(self):
        # phi(n)/n^(k-1) should flatten out; consecutive ratios near the top
        # of the window stay within 10% once the polynomial term dominates
        for spec, n_max in [
            (SumSpec(cycle3(), (UNBOUNDED,) * 3), 18),
            (SumSpec(chain(4), (UNBOUNDED, 2, UNBOUNDED, 1)), 12),
        ]:
            k = growth_of_sum(spec)["k"]
            series = sum_profile_sequence(spec, n_max)
            norm = [v / n ** (k - 1) for n, v in enumerate(series.values) if n >= n_max - 2]
            for a, b in zip(norm, norm[1:]):
                assert abs(b / a - 1) <= 0.1


class TestStabilized:
    def test_c3_family(self):
        vals, sizes = stabilized_profile(lambda size: family("c3", size), 9)
        assert list(vals) == [1, 1, 1, 2, 3, 4, 6, 9, 13, 19]
        assert sizes == (5, 6)

    def test_monotone_in_chain_length(self):
        for kind in ("t", "k"):
            prev = None
            for length in range(2, 6):
                vals = profile_sequence(family(kind, length), 5).values
                if prev is not None:
                    assert all(a >= b for a, b in zip(vals, prev))
                prev = vals
