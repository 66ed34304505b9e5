from math import comb

import pytest

from glsmtilt.glsm import (
    GLSMPresentation,
    catalecticant_invariants,
    cone_invariants,
    crepancy_degree,
    isotropic_dims,
    validate,
)
from glsmtilt.presets import preset, standard_presets


class TestPresentation:
    @pytest.mark.parametrize("N,k,t", [(3, 3, 1), (3, 0, 1), (4, 2, 0)])
    def test_rejects(self, N, k, t):
        with pytest.raises(ValueError):
            GLSMPresentation.of(N, k, (1, (1,)), t=t)

    def test_derived_quantities(self):
        bd = GLSMPresentation.of(6, 2, (1, (3,)))
        assert (bd.dim_B, bd.rank_E, bd.dim_H) == (8, 4, 56)
        assert GLSMPresentation.of(5, 1, (2, (2,)), (1, (3,))).degrees() == [2, 2, 3]


class TestValidate:
    @pytest.mark.parametrize("name", standard_presets())
    def test_presets_pass(self, name):
        rep = validate(preset(name).presentation())
        assert rep.passed and len(rep.conditions) == 4

    def test_higher_character(self):
        assert validate(GLSMPresentation.of(5, 2, (1, (2, 1)), t=3)).passed


class TestCatalecticant:
    def test_beauville_donagi_numbers(self):
        inv = catalecticant_invariants(6, 2, 3)
        assert inv.dim_C_E == inv.dim_E == 12
        assert inv.exc_codims == (4, 2) and inv.min_preimage_codim == 2
        assert inv.birational

    def test_quadrics_always_one(self):
        for k in range(1, 7):
            inv = catalecticant_invariants(k + 3, k, 2)
            assert inv.min_preimage_codim == 1
            assert inv.exc_codims[-1] == 1
            assert all(c > 0 for c in inv.exc_codims)

    def test_small_case(self):
        inv = catalecticant_invariants(3, 1, 2)
        assert inv.dim_C_E == 3 == inv.dim_E
        assert inv.exc_codims == (1,)

    def test_birational_everywhere(self):
        for N in range(2, 9):
            for k in range(1, N):
                for d in range(2, 5):
                    inv = catalecticant_invariants(N, k, d)
                    assert inv.dim_E == inv.dim_C_E
                    assert inv.exc_codims == tuple(
                        comb(k + d - 1, d) - comb(r + d - 1, d) - r * (k - r) for r in range(k)
                    )

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            catalecticant_invariants(4, 2, 1)

    def test_cone_invariants_dispatch(self):
        assert cone_invariants(GLSMPresentation.of(6, 2, (1, (3,)))).dim_C_E == 12
        general = cone_invariants(GLSMPresentation.of(6, 2, (1, (1, 1))))
        assert general.dim_C_E is None and general.birational is None
        assert general.flags["rational_sing"].value is None


class TestCrepancy:
    def test_examples(self):
        assert crepancy_degree(GLSMPresentation.of(6, 2, (1, (3,)))) == (6, 6)
        assert crepancy_degree(GLSMPresentation.of(6, 2, (1, (1, 1)))) == (1, 6)
        assert crepancy_degree(GLSMPresentation.of(7, 1, (1, (3,)), (2, (2,)))) == (7, 7)

    def test_flags_record_hypotheses(self):
        inv = cone_invariants(preset("beauville-donagi").presentation())
        assert inv.flags["crepant_hypothesis"].value is True
        assert inv.flags["gorenstein"].value is None
        assert any("codim" in h for h in inv.flags["gorenstein"].hypotheses)


class TestIsotropic:
    def test_examples(self):
        assert isotropic_dims(6, 2, "symplectic") == (7, 7)
        assert isotropic_dims(6, 2, "orthogonal") == (5, 5)

    @pytest.mark.parametrize("N,k,kind", [(6, 0, "orthogonal"), (5, 2, "symplectic"), (8, 3, "symplectic"), (6, 4, "orthogonal")])
    def test_rejects(self, N, k, kind):
        with pytest.raises(ValueError):
            isotropic_dims(N, k, kind)

    def test_all_valid_up_to_twelve(self):
        count = 0
        for N in range(2, 13):
            for k in range(1, N // 2 + 1):
                dim_Z, expected = isotropic_dims(N, k, "orthogonal")
                assert dim_Z == k * (N - k) - comb(k + 1, 2) == expected
                count += 1
                if N % 2 == 0 and k % 2 == 0:
                    dim_Z, expected = isotropic_dims(N, k, "symplectic")
                    assert dim_Z == k * (N - k) - comb(k, 2) == expected
                    count += 1
        assert count > 30
