"""Closed-form projection tables, forcing projection, and synthesis."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import frozen_reference as ref
from sixbeam import coefficients as cf
from sixbeam.eigenbasis import Parity, build_basis

EV, OD = Parity.EVEN, Parity.ODD


# ---------------------------------------------------------------------------
# Scalar entries against the frozen 40-digit quadrature values
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("nm,value", sorted(ref.BETA_EVEN.items()))
def test_beta_even_matches_frozen(basis60, nm, value):
    n, m = nm
    assert cf.beta(basis60, EV, n, m) == pytest.approx(value, rel=5e-14, abs=0.0)


@pytest.mark.parametrize("nm,value", sorted(ref.BETA_ODD.items()))
def test_beta_odd_matches_frozen(basis60, nm, value):
    n, m = nm
    assert cf.beta(basis60, OD, n, m) == pytest.approx(value, rel=5e-14, abs=0.0)


@pytest.mark.parametrize("nm,value", sorted(ref.GAMMA_EVEN.items()))
def test_gamma_even_matches_frozen(basis60, nm, value):
    n, m = nm
    assert cf.gamma(basis60, EV, n, m) == pytest.approx(value, rel=5e-14, abs=0.0)


@pytest.mark.parametrize("nm,value", sorted(ref.GAMMA_ODD.items()))
def test_gamma_odd_matches_frozen(basis60, nm, value):
    n, m = nm
    assert cf.gamma(basis60, OD, n, m) == pytest.approx(value, rel=5e-14, abs=0.0)


@pytest.mark.parametrize("pm,value", sorted(ref.CHI.items()))
def test_chi_matches_frozen(basis60, pm, value):
    p, m = pm
    # The closed form cancels catastrophically only for large p at the
    # smallest eigenvalue; even there it keeps ~12 digits.
    tol = 5e-12 if (p >= 10 and m == 1) else 5e-14
    assert cf.chi(basis60, p, m) == pytest.approx(value, rel=tol, abs=0.0)


# ---------------------------------------------------------------------------
# Structural invariants
# ---------------------------------------------------------------------------

def test_beta_table_is_symmetric(basis60):
    for parity in (EV, OD):
        B = cf.operator_matrix(basis60, parity, "second_derivative").entries
        scale = np.maximum(np.abs(B), np.abs(B.T))
        assert np.max(np.abs(B - B.T) / np.maximum(scale, 1e-30)) < 1e-12


def test_gamma_table_is_not_symmetric(basis60):
    # The fourth-derivative projection is *not* symmetric entrywise; only the
    # assembled operator combination is.
    G = cf.operator_matrix(basis60, EV, "fourth_derivative").entries
    assert abs(G[0, 1] - G[1, 0]) > 1.0


def test_matrices_match_scalar_entries(basis60):
    for parity in (EV, OD):
        B = cf.operator_matrix(basis60, parity, "second_derivative").entries
        G = cf.operator_matrix(basis60, parity, "fourth_derivative").entries
        for n in (1, 2, 7, 41, 60):
            for m in (1, 3, 19, 60):
                assert B[n - 1, m - 1] == pytest.approx(
                    cf.beta(basis60, parity, n, m), rel=1e-12, abs=1e-15)
                assert G[n - 1, m - 1] == pytest.approx(
                    cf.gamma(basis60, parity, n, m), rel=1e-12, abs=1e-15)


def test_even_gamma_mean_row(basis60):
    G = cf.operator_matrix(basis60, EV, "fourth_derivative")
    assert G.mean_row is not None
    for n in (1, 2, 5, 8):
        assert G.mean_row[n - 1] == pytest.approx(
            ref.GAMMA_EVEN[(n, 0)], rel=5e-14, abs=0.0)
    lam, c = basis60.lam_even[1:], basis60.c_even[1:]
    np.testing.assert_allclose(G.mean_row, 6.0 * c * lam ** 3 * np.sin(lam),
                               rtol=1e-13)


def test_odd_matrices_have_no_mean_row(basis60):
    assert cf.operator_matrix(basis60, OD, "fourth_derivative").mean_row is None
    assert cf.operator_matrix(basis60, EV, "second_derivative").mean_row is None


def test_sixth_derivative_matrix_is_diagonal(basis60):
    for parity in (EV, OD):
        S = cf.operator_matrix(basis60, parity, "sixth_derivative").entries
        lam = basis60.lam(parity)[1:]
        np.testing.assert_array_equal(S, np.diag(-lam ** 6))


def test_chi_vector_matches_scalar(basis60):
    for p in cf.CHI_POWERS:
        v = cf.chi_vector(basis60, p)
        assert v.shape == (60,)
        for m in (1, 2, 5, 20, 60):
            assert v[m - 1] == pytest.approx(cf.chi(basis60, p, m), rel=1e-12)


def test_tables_do_not_depend_on_basis_size(basis30, basis60):
    for parity in (EV, OD):
        B30 = cf.operator_matrix(basis30, parity, "second_derivative").entries
        B60 = cf.operator_matrix(basis60, parity, "second_derivative").entries
        np.testing.assert_array_equal(B30, B60[:30, :30])
    np.testing.assert_array_equal(cf.chi_vector(basis30, 8),
                                  cf.chi_vector(basis60, 8)[:30])


# ---------------------------------------------------------------------------
# Index conventions and validation
# ---------------------------------------------------------------------------

def test_constant_mode_rows_vanish(basis30):
    assert cf.beta(basis30, EV, 0, 3) == 0.0
    assert cf.beta(basis30, EV, 3, 0) == 0.0
    assert cf.gamma(basis30, EV, 0, 3) == 0.0
    assert cf.gamma(basis30, EV, 3, 0) != 0.0  # mean-row column is nontrivial


def test_invalid_indices_raise(basis30):
    with pytest.raises(ValueError):
        cf.gamma(basis30, OD, 3, 0)
    with pytest.raises(ValueError):
        cf.beta(basis30, EV, 31, 1)
    with pytest.raises(ValueError):
        cf.chi(basis30, 3, 1)
    with pytest.raises(ValueError):
        cf.chi(basis30, 2, 0)
    with pytest.raises(ValueError):
        cf.operator_matrix(basis30, EV, "third_derivative")


# ---------------------------------------------------------------------------
# Superseded printed variants
# ---------------------------------------------------------------------------

def test_superseded_variants_reproduce_printed_values(basis30):
    assert cf._superseded_beta_even_diag(basis30, 1) == pytest.approx(
        ref.SUPERSEDED_BETA_EVEN_DIAG_1, rel=1e-11)
    assert cf._superseded_beta_odd_offdiag(basis30, 1, 2) == pytest.approx(
        ref.SUPERSEDED_BETA_ODD_OFFDIAG_12, rel=1e-11)
    assert cf._superseded_beta_odd_diag(basis30, 1) == pytest.approx(
        ref.SUPERSEDED_BETA_ODD_DIAG_1, rel=1e-11)
    assert cf._superseded_chi12(basis30, 1) == pytest.approx(
        ref.SUPERSEDED_CHI12_1, rel=1e-11)


def test_superseded_even_diag_is_quarter_of_truth(basis30):
    for n in (1, 2, 5):
        assert cf._superseded_beta_even_diag(basis30, n) == pytest.approx(
            0.25 * cf.beta(basis30, EV, n, n), rel=1e-10)


def test_superseded_chi12_carries_extra_lambda_squared(basis30):
    for m in (1, 2, 5):
        lam = basis30.lam_even[m]
        assert cf._superseded_chi12(basis30, m) == pytest.approx(
            lam * lam * cf.chi(basis30, 12, m), rel=1e-10)


def test_superseded_variants_guard_against_overflow():
    big = build_basis(200)
    with pytest.raises(ValueError):
        cf._superseded_beta_even_diag(big, 200)


def test_superseded_variant_notes_structure(basis30):
    notes = cf.superseded_variant_notes(basis30)
    assert len(notes) == 4
    for note in notes:
        for key in ("formula", "issue", "example_indices",
                    "superseded_value", "corrected_value"):
            assert key in note
        assert note["superseded_value"] != pytest.approx(
            note["corrected_value"], rel=1e-3)


# ---------------------------------------------------------------------------
# Projection and synthesis
# ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def projected(basis60):
    return cf.project(lambda x: (x * x - 1.0) ** 6, basis60)


def test_projection_of_model_solution(projected):
    assert projected.u0c == pytest.approx(ref.U0C_EXACT, rel=1e-14)
    for m, v in ref.UN_EXACT.items():
        if m == 50:
            # at the absolute quadrature noise floor; gate absolutely
            assert abs(projected.uc[m] - v) < 1e-14
        else:
            assert projected.uc[m] == pytest.approx(v, rel=5e-13)
    assert np.max(np.abs(projected.us)) < 1e-14  # even function: no odd part


def test_synthesize_round_trip(projected):
    xs = np.linspace(-1.0, 1.0, 41)
    err = np.max(np.abs(cf.synthesize(projected, xs) - (xs * xs - 1.0) ** 6))
    assert err < 1e-9


def test_synthesize_scalar_and_validation(projected, basis60):
    v = cf.synthesize(projected, 0.0)
    assert isinstance(v, float)
    assert v == pytest.approx(1.0, rel=1e-9)
    with pytest.raises(ValueError):
        cf.synthesize(projected, 1.2)
    with pytest.raises(ValueError):
        cf.synthesize(projected, 0.5, k=7)
    z = cf.CoefficientSet.zeros(basis60)
    assert cf.synthesize(z, 0.25) == 0.0
    with pytest.raises(ValueError):
        cf.CoefficientSet(basis=basis60, u0c=0.0,
                          uc=np.zeros(3), us=np.zeros(61))


def test_coefficient_set_rejects_nonzero_slot_zero(basis60):
    bad = np.zeros(61)
    bad[0] = 1.0
    with pytest.raises(ValueError):
        cf.CoefficientSet(basis=basis60, u0c=0.0, uc=bad, us=np.zeros(61))


def test_constant_only_series(basis60):
    only_mean = cf.CoefficientSet(basis=basis60, u0c=3.0,
                                  uc=np.zeros(61), us=np.zeros(61))
    xs = np.linspace(-1, 1, 5)
    np.testing.assert_allclose(cf.synthesize(only_mean, xs), 1.5)
    assert cf.synthesize(only_mean, 0.3, k=2) == 0.0


# ---------------------------------------------------------------------------
# Property-based invariants
# ---------------------------------------------------------------------------

_B40 = build_basis(40)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(1, 40), m=st.integers(1, 40),
       parity=st.sampled_from([EV, OD]))
def test_beta_symmetry_property(n, m, parity):
    a = cf.beta(_B40, parity, n, m)
    b = cf.beta(_B40, parity, m, n)
    assert abs(a - b) <= 1e-12 * max(1.0, abs(a), abs(b))


@settings(max_examples=25, deadline=None)
@given(n=st.integers(1, 40), parity=st.sampled_from([EV, OD]))
def test_beta_diagonal_negative_property(n, parity):
    # <psi_n'', psi_n> = -<psi_n', psi_n'> < 0 by integration by parts.
    assert cf.beta(_B40, parity, n, n) < 0.0


@settings(max_examples=25, deadline=None)
@given(n=st.integers(1, 40), parity=st.sampled_from([EV, OD]))
def test_gamma_diagonal_positive_property(n, parity):
    # <psi_n'''', psi_n> = <psi_n'', psi_n''> > 0 by double integration by parts.
    assert cf.gamma(_B40, parity, n, n) > 0.0


@settings(max_examples=30, deadline=None)
@given(m=st.integers(1, 40), p=st.sampled_from(list(cf.CHI_POWERS)))
def test_chi_sign_alternates_property(m, p):
    # <x^p, psi_m> inherits the sign of the boundary value psi_m(1) ~ (-1)^m.
    value = cf.chi(_B40, p, m)
    assert value != 0.0
    assert (value > 0) == (m % 2 == 1)
