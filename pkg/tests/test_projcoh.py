from math import comb

import pytest

from infdef.exceptions import ParameterError, TruncationOverflowError
from infdef.projcoh import (
    CECH_MAX_TWIST,
    CohomologyQuery,
    GradedMultiplicationMap,
    chi_normal_p3,
    cokernel_delta_dim,
    coh_dim,
    curve_moduli_dim,
    delta_surjective,
    euler_characteristic,
    hypersurface_report,
)

GRID = [(n, d) for n in (1, 2, 3) for d in range(-8, 9)]


def euler_oracle(n, d):
    """Piecewise count: sections for d >= 0, nothing in the gap, top cohomology below it."""
    if d >= 0:
        return comb(n + d, n)
    if d >= -n:
        return 0
    return (-1) ** n * comb(-d - 1, n)


@pytest.mark.parametrize(
    "n, d, q, expected",
    [(2, 3, 0, 10), (2, -3, 2, 1), (2, 1, 1, 0), (3, -5, 3, 4), (1, -2, 1, 1), (3, 0, 0, 1), (2, -1, 0, 0)],
)
def test_cohomology_examples(n, d, q, expected):
    assert coh_dim(n, d, q) == expected
    assert coh_dim(n, d, q, method="cech") == expected
    assert coh_dim(CohomologyQuery(n, d, q)) == expected


@pytest.mark.parametrize("n, d", GRID)
def test_formula_matches_cech(n, d):
    for q in range(n + 1):
        assert coh_dim(n, d, q) == coh_dim(n, d, q, method="cech")


@pytest.mark.parametrize("n, d", GRID)
def test_serre_duality_and_euler_characteristic(n, d):
    for q in range(n + 1):
        assert coh_dim(n, d, q, "cech") == coh_dim(n, -d - n - 1, n - q, "cech")
    chi = sum((-1) ** q * coh_dim(n, d, q, "cech") for q in range(n + 1))
    assert chi == euler_characteristic(n, d) == euler_oracle(n, d)


def test_parameter_validation():
    with pytest.raises(ParameterError):
        coh_dim(0, 1, 0)
    with pytest.raises(ParameterError):
        coh_dim(2, 1, 3)
    with pytest.raises(ParameterError):
        coh_dim(2, 1, -1)
    with pytest.raises(ParameterError):
        coh_dim(2, 1, 0, method="spectral")
    with pytest.raises(TruncationOverflowError):
        coh_dim(1, CECH_MAX_TWIST + 1, 0, method="cech")
    with pytest.raises(ParameterError):
        delta_surjective(1, 3)
    with pytest.raises(ParameterError):
        delta_surjective(2, 0)
    with pytest.raises(ParameterError):
        delta_surjective(2, 3, method="guess")


def test_multiplication_map_shapes():
    m = GradedMultiplicationMap.build(2, 1)
    assert (len(m.target), len(m.source)) == (6, 9)
    assert m.rank() == 6 and m.kernel_dim() == 3 and m.cokernel_dim() == 0
    empty = GradedMultiplicationMap.build(3, -1)
    assert empty.rank() == 0 and empty.cokernel_dim() == 1


def _plane_curve_coker(d):
    # h^1(T_C) = 3g - 3 for g >= 2, and PGL_3 (dimension 8) acts with finite stabilizers
    g = (d - 1) * (d - 2) // 2
    return (3 * g - 3) - (comb(d + 2, 2) - 1 - 8)


@pytest.mark.parametrize("d", range(4, 9))
def test_plane_curve_cokernel_matches_moduli_count(d):
    assert cokernel_delta_dim(2, d) == _plane_curve_coker(d)


def test_quartic_surface_cokernel():
    # h^1(T) = 20 for a quartic surface; H^0(N) = 34 minus the 15 projective motions
    assert cokernel_delta_dim(3, 4) == 20 - (34 - 15)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("d", range(1, 9))
def test_delta_closed_form_matches_linear_algebra(n, d):
    expected = (n == 2 and d <= 4) or (n == 3 and d != 4) or n >= 4
    assert delta_surjective(n, d) == delta_surjective(n, d, "linear_algebra") == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5])
@pytest.mark.parametrize("d", range(1, 9))
def test_hypersurface_report(n, d):
    r = hypersurface_report(n, d)
    assert r.hilb_obstruction_dim == 0
    assert r.hilb_tangent_dim == comb(n + d, n) - 1
    assert r.all_deformations_embedded == (not ((n == 2 and d >= 5) or (n == 3 and d == 4)))
    data = r.to_dict()
    assert data["citations"] and data["delta_surjective"] == r.delta_surjective


@pytest.mark.parametrize("g, expected", [(0, 0), (1, 1), (2, 3), (5, 12), (10, 27)])
def test_curve_moduli(g, expected):
    assert curve_moduli_dim(g) == expected


def test_curve_moduli_rejects_negative_genus():
    with pytest.raises(ParameterError):
        curve_moduli_dim(-1)


def test_chi_normal_is_four_times_degree():
    for d in range(1, 11):
        for g in range(0, 11):
            chi = chi_normal_p3(d, g)
            assert chi == 4 * d
            assert chi.four_chi_o1 - chi.chi_o - chi.chi_t == chi.total
    assert chi_normal_p3(3, 0).to_dict() == {
        "chi_normal": 12, "four_chi_O_Z_1": 16, "chi_O_Z": 1, "chi_T_Z": 3
    }
