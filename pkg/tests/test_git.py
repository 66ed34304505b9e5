import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import minor_rank
from glsmtilt.git import (
    OneParamSubgroup,
    StabilityVerdict,
    Status,
    classify,
    condition3_check,
    fiber_weight_check,
    gorenstein_check,
    limit_exists,
    mu_pairing,
    rank,
    unstable_codim,
    weights_on_schur_dual,
)
from glsmtilt.glsm import GLSMPresentation
from glsmtilt.partitions import Partition, partitions_of


def random_matrix(rng, k, N, deficient=False):
    """Random rational k x N matrix; ``deficient`` forces rank < k via a dependent row."""
    u = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(N)] for _ in range(k)]
    if deficient:
        i = rng.randrange(k)
        coeffs = [Fraction(rng.randint(-2, 2)) for _ in range(k)]
        u[i] = [sum(coeffs[j] * u[j][c] for j in range(k) if j != i) for c in range(N)]
    return u


class TestClassify:
    def test_examples(self):
        assert classify([[1, 0, 0], [0, 1, 0]], 1).status is Status.STABLE
        v = classify([[1, 0, 0], [2, 0, 0]], 1)
        assert v.status is Status.UNSTABLE
        assert v.destabilizer.weights_on_Z == (0, -1) and v.pairing == -1
        v = classify([[1, 0, 0], [0, 1, 0]], -1)
        assert v.destabilizer.weights_on_Z == (1, 1) and v.pairing == -2

    def test_zero_matrix(self):
        v = classify([[0, 0, 0], [0, 0, 0]], 2)
        assert v.destabilizer.weights_on_Z == (-1, -1) and v.pairing == -4

    @pytest.mark.parametrize("u,t", [([[1, 0], [0, 1]], 1), ([[1, 0, 0]], 0)])
    def test_errors(self, u, t):
        with pytest.raises(ValueError):
            classify(u, t)

    def test_verdict_invariants(self):
        with pytest.raises(ValueError):
            StabilityVerdict(Status.STABLE, OneParamSubgroup((1,)), -1)
        with pytest.raises(ValueError):
            StabilityVerdict(Status.UNSTABLE, OneParamSubgroup((1,)), 1)

    def test_rank_criterion_random(self):
        rng = random.Random(11)
        for _ in range(200):
            N = rng.randint(2, 6)
            k = rng.randint(1, min(3, N - 1))
            u = random_matrix(rng, k, N, deficient=rng.random() < 0.5)
            r = minor_rank(u)
            assert rank(u) == r
            for t in (1, -1):
                v = classify(u, t)
                assert (v.status is Status.UNSTABLE) == (t < 0 or r < k)
                if v.status is Status.UNSTABLE:
                    assert mu_pairing(v.destabilizer, t) < 0
                    # Hilbert-Mumford: the limit under the destabilizer exists
                    assert limit_exists(u, v.destabilizer)

    def test_invariant_under_row_and_column_operations(self):
        rng = random.Random(3)
        for _ in range(50):
            N = rng.randint(3, 6)
            k = rng.randint(1, min(3, N - 1))
            u = random_matrix(rng, k, N, deficient=rng.random() < 0.5)
            g = random_matrix(rng, k, k)
            h = random_matrix(rng, N, N)
            if rank(g) < k or rank(h) < N:
                continue
            gu = [[sum(g[i][j] * u[j][c] for j in range(k)) for c in range(N)] for i in range(k)]
            uh = [[sum(u[i][j] * h[j][c] for j in range(N)) for c in range(N)] for i in range(k)]
            base = classify(u, 1)
            for w in (gu, uh):
                other = classify(w, 1)
                assert other.status is base.status
                if base.destabilizer is not None:
                    assert sorted(other.destabilizer.weights_on_Z) == sorted(base.destabilizer.weights_on_Z)


class TestPairingAndWeights:
    def test_mu_pairing(self):
        assert mu_pairing(OneParamSubgroup((0, -1)), 1) == -1
        assert mu_pairing(OneParamSubgroup((1, 1)), -1) == -2
        assert mu_pairing(OneParamSubgroup((0, 0)), 7) == 0
        assert OneParamSubgroup((0, 0)).is_trivial

    def test_weights_examples(self):
        assert weights_on_schur_dual((0, -1), Partition.of(1, 1)) == [1]
        assert weights_on_schur_dual(OneParamSubgroup((0, -1)), Partition.of(3)) == [0, 1, 2, 3]
        assert weights_on_schur_dual((0, 0, 0), Partition.of(2, 1)) == [0] * 8

    @settings(max_examples=50, deadline=None)
    @given(
        st.lists(st.integers(-3, 3), min_size=1, max_size=3),
        st.sampled_from([(1,), (2,), (1, 1), (2, 1), (3,)]),
    )
    def test_weights_symmetric_in_xi_order(self, xi, lam):
        if len(lam) > len(xi):
            return
        # the multiset only depends on xi up to permutation (Weyl symmetry)
        assert weights_on_schur_dual(xi, Partition(lam)) == weights_on_schur_dual(sorted(xi), Partition(lam))


class TestCondition3:
    def test_presets_pass(self):
        assert condition3_check(GLSMPresentation.of(6, 2, (1, (3,)))).passed
        assert condition3_check(GLSMPresentation.of(6, 2, (1, (1, 1)))).passed

    def test_failure_path(self):
        res = fiber_weight_check(2, [(Partition.of(1), False)])
        assert not res.passed
        r, lam, w = res.witness
        assert r == 0 and lam == Partition.of(1) and w == -1

    def test_all_dual_polynomial_bundles_pass(self):
        for k in range(1, 5):
            for size in range(1, 6):
                for lam in partitions_of(size, max_rows=k):
                    assert fiber_weight_check(k, [(lam, True)]).passed


class TestGorenstein:
    def test_examples(self):
        quintic = gorenstein_check(GLSMPresentation.of(5, 1, (1, (5,))))
        assert quintic.det_trivial
        assert gorenstein_check(GLSMPresentation.of(4, 1, (2, (2,)))).det_trivial
        assert gorenstein_check(GLSMPresentation.of(6, 2, (1, (3,)))).det_trivial
        assert not gorenstein_check(GLSMPresentation.of(4, 1, (1, (3,)))).det_trivial

    def test_codimension_for_projective_family(self):
        assert gorenstein_check(GLSMPresentation.of(4, 1, (2, (2,)))).codim_nonstable == 2
        assert gorenstein_check(GLSMPresentation.of(5, 1, (1, (5,)))).codim_ok is False
        assert gorenstein_check(GLSMPresentation.of(6, 2, (1, (3,)))).codim_ok is None


class TestUnstableCodim:
    def test_examples(self):
        assert unstable_codim(6, 2) == 5
        assert unstable_codim(2, 1) == 2
        for k in range(1, 6):
            assert unstable_codim(k + 1, k) == 2

    def test_error(self):
        with pytest.raises(ValueError):
            unstable_codim(3, 3)
