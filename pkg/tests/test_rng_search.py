"""Deterministic RNG stream and the randomized search harness."""

import pytest

from golodkit import (
    RingContext,
    SearchConfig,
    SplitMix64,
    in_m_squared,
    minimalize,
    nth_output,
    random_ideal,
    random_monomial,
    report_to_dict,
    run_search,
    run_trial,
)
from golodkit.searches import KNOWN_NOT_GOLOD_PAIR

XYZ = RingContext(("x", "y", "z"))
XYZW = RingContext(("x", "y", "z", "w"))


class TestSplitMix64:
    def test_reference_stream_seed_zero(self):
        r = SplitMix64(0)
        assert [r.next() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_same_seed_same_stream(self):
        a = SplitMix64(987654321)
        b = SplitMix64(987654321)
        assert [a.next() for _ in range(50)] == [b.next() for _ in range(50)]

    def test_nth_output_matches_sequential(self):
        for seed in (0, 1, 2**63 + 17, 0xDEADBEEF):
            r = SplitMix64(seed)
            stream = [r.next() for _ in range(20)]
            assert [nth_output(seed, t) for t in range(20)] == stream

    def test_nth_output_rejects_negative(self):
        with pytest.raises(ValueError):
            nth_output(5, -1)

    def test_next_below_range(self):
        r = SplitMix64(31337)
        draws = [r.next_below(7) for _ in range(200)]
        assert all(0 <= d < 7 for d in draws)
        assert len(set(draws)) == 7

    def test_next_below_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            SplitMix64(1).next_below(0)


class TestRandomIdeals:
    def test_monomial_respects_bounds(self):
        rng = SplitMix64(7)
        for _ in range(300):
            m = random_monomial(rng, XYZ, 3, min_total=2)
            assert all(0 <= e <= 3 for e in m.exponents)
            assert sum(m.exponents) >= 2

    def test_monomial_validation(self):
        rng = SplitMix64(1)
        with pytest.raises(ValueError):
            random_monomial(rng, XYZ, 0)
        with pytest.raises(ValueError):
            random_monomial(rng, XYZ, 2, min_total=7)

    def test_ideal_is_proper_and_minimal(self):
        rng = SplitMix64(99)
        for _ in range(200):
            ideal = random_ideal(rng, XYZW, 2, 5, 4)
            assert not ideal.is_zero() and not ideal.is_unit()
            assert len(ideal.gens) <= 5
            assert minimalize(ideal.gens, XYZW).gens == ideal.gens

    def test_force_m2(self):
        rng = SplitMix64(2024)
        for _ in range(100):
            assert in_m_squared(random_ideal(rng, XYZ, 2, 4, 3, force_m2=True))

    def test_ideal_deterministic(self):
        a = random_ideal(SplitMix64(5150), XYZ, 2, 5, 4)
        b = random_ideal(SplitMix64(5150), XYZ, 2, 5, 4)
        assert a.gens == b.gens

    def test_ideal_validation(self):
        with pytest.raises(ValueError):
            random_ideal(SplitMix64(1), XYZ, 0, 3, 4)
        with pytest.raises(ValueError):
            random_ideal(SplitMix64(1), XYZ, 4, 3, 4)


class TestSearchConfig:
    def test_rejects_unknown_mode(self):
        with pytest.raises(ValueError, match="unknown mode"):
            SearchConfig("massey", 1, 0)

    def test_rejects_bad_ranges(self):
        with pytest.raises(ValueError):
            SearchConfig("product3", -1, 0)
        with pytest.raises(ValueError):
            SearchConfig("product3", 1, -1)
        with pytest.raises(ValueError):
            SearchConfig("product3", 1, 0, gens_lo=3, gens_hi=2)
        with pytest.raises(ValueError):
            SearchConfig("product3", 1, 0, max_exp=0)
        with pytest.raises(ValueError):
            SearchConfig("product3", 1, 0, depth=0)
        with pytest.raises(ValueError):
            SearchConfig("product3", 1, 0, field="gf7.5")

    def test_inject_requires_product4(self):
        with pytest.raises(ValueError, match="inject"):
            SearchConfig("product3", 1, 0, inject=True)
        SearchConfig("product4", 1, 0, inject=True)


class TestSearchRuns:
    def test_trial_is_pure(self):
        config = SearchConfig("product3", 10, seed=424242)
        assert run_trial(config, 7) == run_trial(config, 7)

    def test_product3_all_golod(self):
        report = run_search(SearchConfig("product3", 30, seed=11))
        assert dict(report.counts) == {"golod": 30}
        assert report.archived == ()

    def test_closure3_all_pass(self):
        report = run_search(SearchConfig("closure3", 20, seed=12))
        assert dict(report.counts) == {"pass": 20}

    def test_raw_mode_counts_sum(self):
        report = run_search(SearchConfig("raw", 15, seed=13, depth=3))
        counts = dict(report.counts)
        assert sum(counts.values()) == 15
        assert set(counts) <= {"golod", "not_golod", "inconclusive"}

    def test_search_reproducible(self):
        config = SearchConfig("product3", 12, seed=314159)
        assert report_to_dict(run_search(config)) == report_to_dict(run_search(config))

    def test_zero_trials(self):
        report = run_search(SearchConfig("product3", 0, seed=0))
        assert report.counts == ()
        assert report.archived == ()

    def test_known_pair_shape(self):
        j = minimalize(KNOWN_NOT_GOLOD_PAIR[0], XYZW)
        k = minimalize(KNOWN_NOT_GOLOD_PAIR[1], XYZW)
        assert len(j.gens) == 6 and len(k.gens) == 6

    def test_report_dict_shape(self):
        report = run_search(SearchConfig("product3", 3, seed=77))
        payload = report_to_dict(report)
        assert payload["mode"] == "product3"
        assert payload["trials"] == 3
        assert payload["counts"] == {"golod": 3}
        assert payload["archived"] == []


class TestInjectedPair:
    def test_product4_inject_archives_not_golod(self):
        report = run_search(SearchConfig("product4", 1, seed=0, inject=True))
        assert dict(report.counts) == {"not_golod": 1}
        assert len(report.archived) == 1
        hit = report.archived[0]
        assert hit.index == 0
        assert hit.status == "not_golod"
        assert hit.certificates
