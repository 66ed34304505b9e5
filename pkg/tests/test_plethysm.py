import json
from concurrent.futures import ProcessPoolExecutor
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import char_sum, mixed_char, ssyt_contents, sym_power_char
from glsmtilt import plethysm
from glsmtilt.partitions import MixedWeight, Partition, SchurExpansion, hook_content_dim, partitions_of
from glsmtilt.plethysm import (
    BundleSpec,
    plethysm_sym,
    sym_power_by_monomials,
    sym_power_dimension,
    sym_power_of_bundle,
)


def expansion(k, *terms):
    return SchurExpansion(k, {MixedWeight.from_partition(Partition(lam), k): c for lam, c in terms})


@pytest.fixture(autouse=True)
def no_persistent_cache():
    plethysm.set_cache(None)
    plethysm._plethysm_memo.cache_clear()
    yield
    plethysm.set_cache(None)
    plethysm._plethysm_memo.cache_clear()


class TestPlethysmSym:
    def test_examples(self):
        assert plethysm_sym(2, (2,), 2) == expansion(2, ((4,), 1), ((2, 2), 1))
        s2_wedge2 = plethysm_sym(2, (1, 1), 4)
        assert s2_wedge2 == expansion(4, ((1, 1, 1, 1), 1), ((2, 2), 1))
        assert s2_wedge2.gl_dimension(4) == 21 == 1 + 20
        assert plethysm_sym(0, (3, 1), 3) == SchurExpansion.trivial(3)
        assert plethysm_sym(1, (3, 1), 3) == expansion(3, ((3, 1), 1))

    def test_rejects_too_many_rows(self):
        with pytest.raises(ValueError):
            plethysm_sym(2, (1, 1, 1), 2)

    def test_keys_are_partitions(self):
        for w in plethysm_sym(3, (2, 1), 3):
            assert w.is_polynomial()

    def test_not_multiplicity_free(self):
        e = plethysm_sym(6, (3,), 2)
        assert e[MixedWeight.of(12, 6)] == 2
        assert e.gl_dimension(2) == comb(4 + 6 - 1, 6)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 4), st.sampled_from([(1,), (2,), (1, 1), (3,), (2, 1)]), st.integers(1, 3))
    def test_matches_character_oracle(self, m, lam, k):
        if len(lam) > k:
            return
        e = plethysm_sym(m, lam, k)
        lhs = char_sum([(c, mixed_char(w.parts)) for w, c in e.items()])
        assert lhs == sym_power_char(ssyt_contents(lam, k), m)

    def test_dimension_conservation(self):
        for k in range(1, 4):
            for size in range(1, 5):
                for lam in partitions_of(size, max_rows=k):
                    d = hook_content_dim(lam, k)
                    for m in range(6):
                        if comb(d + m - 1, m) > 4000:
                            continue
                        assert plethysm_sym(m, lam, k).gl_dimension(k) == comb(d + m - 1, m)

    def test_stability_in_k(self):
        for m in range(1, 4):
            for lam in [(2,), (1, 1), (2, 1)]:
                for k in range(2, 4):
                    small = plethysm_sym(m, lam, k)
                    big = plethysm_sym(m, lam, k + 1)
                    for w, c in big.items():
                        p = w.to_partition()
                        if len(p) <= k:
                            assert small[MixedWeight.from_partition(p, k)] == c
                    assert len(small) == sum(1 for w in big if len(w.to_partition()) <= k)


def even_partitions(n, k, columns=False):
    out = {}
    for mu in partitions_of(n, max_rows=k):
        parts = mu.conjugate().parts if columns else mu.parts
        if all(p % 2 == 0 for p in parts):
            out[mu.parts] = 1
    return out


class TestLittlewood:
    @pytest.mark.parametrize("m", range(5))
    @pytest.mark.parametrize("k", range(1, 5))
    def test_even_rows(self, m, k):
        assert plethysm_sym(m, (2,), k) == expansion(k, *even_partitions(2 * m, k).items())

    @pytest.mark.parametrize("m", range(5))
    @pytest.mark.parametrize("k", range(2, 5))
    def test_even_columns(self, m, k):
        assert plethysm_sym(m, (1, 1), k) == expansion(k, *even_partitions(2 * m, k, columns=True).items())


class TestBundleSpec:
    def test_validation(self):
        with pytest.raises(ValueError):
            BundleSpec.of(2, (1, (1, 1, 1)))
        with pytest.raises(ValueError):
            BundleSpec.of(2, (0, (1,)))
        assert BundleSpec.of(3, (2, (1,)), (1, (1, 1))).fiber_rank() == 9


class TestSymPowerOfBundle:
    def test_examples(self):
        assert sym_power_of_bundle(2, BundleSpec.of(2, (1, (2,)))) == expansion(2, ((4,), 1), ((2, 2), 1))
        assert sym_power_of_bundle(1, BundleSpec.of(1, (2, (1,)))) == expansion(1, ((1,), 2))
        mixed = BundleSpec.of(2, (1, (1,)), (1, (2,)))
        e = sym_power_of_bundle(2, mixed)
        assert e.gl_dimension(2) == 15 == sym_power_dimension(2, mixed)
        expected = (
            plethysm_sym(2, (1,), 2)
            + plethysm_sym(1, (1,), 2).tensor(plethysm_sym(1, (2,), 2))
            + plethysm_sym(2, (2,), 2)
        )
        assert e == expected

    def test_multiplicity_space(self):
        # S^m(C^r (x) W) for W = C^1: dimension binom(r+m-1, m), single constituent
        e = sym_power_of_bundle(3, BundleSpec.of(1, (4, (2,))))
        assert e == expansion(1, ((6,), comb(6, 3)))

    @settings(max_examples=25, deadline=None)
    @given(
        st.integers(0, 3),
        st.lists(st.tuples(st.integers(1, 2), st.sampled_from([(1,), (2,), (1, 1), (2, 1)])), min_size=1, max_size=2),
    )
    def test_two_routes_agree(self, m, summands):
        spec = BundleSpec.of(2, *summands)
        a = sym_power_of_bundle(m, spec)
        assert a == sym_power_by_monomials(m, spec)
        assert a.gl_dimension(2) == sym_power_dimension(m, spec)


def _compute_in_worker(args):
    path, m = args
    plethysm.set_cache(path)
    return [(w.parts, c) for w, c in plethysm_sym(m, (3,), 2).items()]


class TestCache:
    def test_roundtrip_and_format(self, tmp_path):
        path = tmp_path / "c.json"
        plethysm.set_cache(path)
        first = plethysm_sym(3, (2,), 2)
        doc = json.loads(path.read_text())
        assert doc["format"] == plethysm.CACHE_FORMAT and doc["version"] == plethysm.CACHE_VERSION
        assert "3|2|2" in doc["entries"]
        plethysm._plethysm_memo.cache_clear()
        assert plethysm_sym(3, (2,), 2) == first

    @pytest.mark.parametrize("content", ["not json", '{"format": "other", "version": 1, "entries": {}}', "[]"])
    def test_corrupt_or_foreign_file_is_recomputed(self, tmp_path, content):
        path = tmp_path / "c.json"
        path.write_text(content)
        plethysm.set_cache(path)
        assert plethysm_sym(2, (2,), 2) == expansion(2, ((4,), 1), ((2, 2), 1))
        assert json.loads(path.read_text())["format"] == plethysm.CACHE_FORMAT

    def test_corrupt_entry_is_recomputed(self, tmp_path):
        path = tmp_path / "c.json"
        doc = {"format": plethysm.CACHE_FORMAT, "version": plethysm.CACHE_VERSION, "entries": {"2|2|2": "garbage"}}
        path.write_text(json.dumps(doc))
        plethysm.set_cache(path)
        assert plethysm_sym(2, (2,), 2) == expansion(2, ((4,), 1), ((2, 2), 1))

    def test_deterministic_serialization(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        for path, order in ((a, (2, 3, 4)), (b, (4, 2, 3))):
            plethysm._plethysm_memo.cache_clear()
            plethysm.set_cache(path)
            for m in order:
                plethysm_sym(m, (2,), 2)
        assert a.read_bytes() == b.read_bytes()

    def test_concurrent_writers(self, tmp_path):
        path = str(tmp_path / "c.json")
        jobs = [(path, m) for m in (2, 3, 4, 5)] * 3
        with ProcessPoolExecutor(4) as pool:
            results = list(pool.map(_compute_in_worker, jobs))
        entries = json.loads(open(path).read())["entries"]
        assert sorted(entries) == ["2|3|2", "3|3|2", "4|3|2", "5|3|2"]
        for (_, m), res in zip(jobs, results):
            assert res == [(w.parts, c) for w, c in plethysm._plethysm_compute(m, Partition.of(3), 2).items()]

    def test_env_var(self, tmp_path, monkeypatch):
        path = tmp_path / "env.json"
        monkeypatch.setattr(plethysm, "_cache_configured", False)
        monkeypatch.setenv(plethysm.CACHE_ENV_VAR, str(path))
        assert plethysm.get_cache() is not None and plethysm.get_cache().path == path
