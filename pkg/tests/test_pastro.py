"""The polynomial family, partners, recurrence data, weights."""

from fractions import Fraction

import pytest

from pastroq.pastro import (
    PastroFamily,
    alpha_coefficient,
    baxter_coefficients,
    baxter_system,
    beta_coefficient,
    biorthogonal_partner,
    grid_weights,
    mu1,
    mu2,
    mu_coefficients,
    norm_constant,
    pastro_coefficient_ratio,
    pastro_coefficients,
    pastro_eigenvalue,
    pastro_monic_prefactor,
    pastro_poly,
    pastro_poly_series,
    verify_baxter_consistency,
)
from pastroq.qcore import LaurentPoly, QParams, ResonantParameterError, x

REFERENCE = QParams(Fraction(1, 2), Fraction(3), Fraction(1, 5))
SECOND = QParams(Fraction(-4, 5), Fraction(6), Fraction(-2))
TRUNCATED = QParams(Fraction(1, 2), Fraction(2), Fraction(1, 5))  # a = q^-1, N = 2


def test_degree_zero_is_one():
    assert pastro_poly(0, REFERENCE) == 1


def test_degree_one_frozen_value():
    assert pastro_poly(1, REFERENCE) == LaurentPoly({1: 1, 0: Fraction(-7, 12)})


@pytest.mark.parametrize("params", [REFERENCE, SECOND])
def test_family_is_monic_polynomial(params):
    for n in range(11):
        p = pastro_poly(n, params)
        assert p.is_polynomial
        assert p.degree == n
        assert p.leading_coefficient == 1


def test_coefficients_match_closed_form_ratio():
    for params in (REFERENCE, SECOND):
        for n in range(9):
            coeffs = pastro_coefficients(n, params)
            lead = pastro_monic_prefactor(n, params)
            assert coeffs[0] == lead
            for k in range(n + 1):
                assert coeffs[k] == pastro_coefficient_ratio(n, k, params) * lead


def test_recurrence_route_matches_series_route():
    for params in (REFERENCE, SECOND):
        for n in range(9):
            assert pastro_poly(n, params) == pastro_poly_series(n, params)


def test_resonant_family_raises():
    # b/a = q makes the degree-2 shift factor vanish
    params = QParams(Fraction(1, 2), Fraction(2, 5), Fraction(1, 5))
    with pytest.raises(ResonantParameterError):
        pastro_poly(2, params)


def test_eigenvalues():
    assert pastro_eigenvalue(0, REFERENCE) == -5
    assert pastro_eigenvalue(1, REFERENCE) == Fraction(-5, 2)
    assert pastro_eigenvalue(2, REFERENCE) == Fraction(-5, 4)


def test_mu_frozen_values():
    assert mu1(0, REFERENCE) == Fraction(7, 12)
    assert mu_coefficients(1, REFERENCE) == (Fraction(13, 54), Fraction(5, 108))
    assert mu2(0, REFERENCE) == 0


def test_mu_resonance():
    params = QParams(Fraction(1, 2), Fraction(3), Fraction(2))  # b q = 1
    with pytest.raises(ResonantParameterError):
        mu1(1, params)
    with pytest.raises(ResonantParameterError):
        mu2(1, params)


def test_baxter_coefficient_frozen_values():
    data = baxter_coefficients(1, REFERENCE)
    assert data.alpha[0] == Fraction(7, 12)
    assert data.beta[0] == Fraction(18, 13)
    assert data.h[0] == 1
    assert data.h[1] == Fraction(5, 26)
    assert baxter_coefficients(1, TRUNCATED).h[1] == Fraction(5, 32)


def test_norm_constant_product_form():
    data = baxter_coefficients(8, REFERENCE)
    product = Fraction(1)
    for n in range(9):
        assert data.h[n] == product
        product *= 1 - data.alpha[n] * data.beta[n]


def test_norm_vanishes_at_truncation():
    # a = q^(1-N) forces h_N = 0
    for N in range(1, 7):
        params = QParams(Fraction(1, 2), Fraction(1, 2) ** (1 - N), Fraction(1, 5))
        assert norm_constant(N, params) == 0
        for n in range(N):
            assert norm_constant(n, params) != 0


def test_baxter_system_first_steps():
    data = baxter_system(2, REFERENCE)
    assert data.p_polys[0] == 1
    assert data.q_polys[0] == 1
    assert data.p_polys[1] == x() - data.alpha[0]
    assert data.q_polys[1] == x() - data.beta[0]
    # mixed-route restatement of the P recurrence at n = 1
    p1, p2 = pastro_poly(1, REFERENCE), pastro_poly(2, REFERENCE)
    assert x() * p1 - p2 == data.alpha[1] * (data.q_polys[1].invert_variable() * x(1))


def test_baxter_consistency_suite_passes():
    for params in (REFERENCE, SECOND):
        for check in verify_baxter_consistency(8, params):
            assert check.status == "PASS", (check.name, check.witness)


def test_partner_degree_zero_and_support():
    assert biorthogonal_partner(0, REFERENCE) == 1
    for n in range(9):
        partner = biorthogonal_partner(n, REFERENCE)
        assert partner.valuation == -n
        assert partner.degree == 0
        assert partner.coefficient(-n) == 1  # monic through x -> 1/x


def test_partner_frozen_value():
    assert biorthogonal_partner(1, REFERENCE) == LaurentPoly(
        {-1: 1, 0: Fraction(-18, 13)}
    )
    assert biorthogonal_partner(1, TRUNCATED) == LaurentPoly(
        {-1: 1, 0: Fraction(-3, 2)}
    )


def test_partner_equals_reversed_baxter_polynomial():
    data = baxter_system(8, SECOND)
    for n in range(9):
        assert data.q_polys[n].invert_variable() == biorthogonal_partner(n, SECOND)


def test_alpha_beta_resonance():
    with pytest.raises(ResonantParameterError):
        alpha_coefficient(1, QParams(Fraction(1, 2), Fraction(3), Fraction(2)))
    with pytest.raises(ResonantParameterError):
        beta_coefficient(0, QParams(Fraction(1, 2), Fraction(2, 5), Fraction(1, 5)))


def test_grid_weights_trivial_grid():
    gw = grid_weights(1, Fraction(1, 5), Fraction(1, 2))
    assert gw.w == [1]
    assert gw.grid == [Fraction(1, 2)]


def test_grid_weights_frozen_values():
    gw = grid_weights(2, Fraction(1, 5), Fraction(1, 2))
    assert gw.w == [Fraction(5, 4), Fraction(-1, 4)]
    assert gw.grid == [Fraction(1, 2), Fraction(1, 4)]
    gw3 = grid_weights(3, Fraction(1, 5), Fraction(1, 2))
    assert gw3.w == [Fraction(25, 18), Fraction(-5, 12), Fraction(1, 36)]


@pytest.mark.parametrize("b", [Fraction(1, 5), Fraction(3), Fraction(-2, 7)])
@pytest.mark.parametrize("N", [1, 2, 5, 8])
def test_grid_weights_sum_to_one(N, b):
    assert sum(grid_weights(N, b, Fraction(1, 2)).w) == 1


def test_grid_weights_flip_invariance():
    # b -> q^(2-N)/b with s -> N-1-s leaves the weights unchanged
    q = Fraction(1, 2)
    for N in (2, 3, 5):
        for b in (Fraction(1, 5), Fraction(-3, 4)):
            w = grid_weights(N, b, q).w
            flipped = grid_weights(N, q ** (2 - N) / b, q).w
            assert w == flipped[::-1]


def test_grid_weights_errors():
    with pytest.raises(ResonantParameterError):
        grid_weights(3, Fraction(1), Fraction(1, 2))  # (b;q)_2 = 0
    with pytest.raises(ResonantParameterError):
        grid_weights(2, Fraction(1, 5), Fraction(1))
    with pytest.raises(ValueError):
        grid_weights(0, Fraction(1, 5), Fraction(1, 2))


def test_truncation_polynomial_splits_over_grid():
    q = Fraction(1, 2)
    for N in range(1, 7):
        params = QParams(q, q ** (1 - N), Fraction(1, 5))
        expected = LaurentPoly.one()
        for s in range(N):
            expected = expected * LaurentPoly({1: 1, 0: -(q ** (s + 1))})
        assert pastro_poly(N, params) == expected


def test_family_builder_validates_eagerly():
    family = PastroFamily.build(REFERENCE, 6)
    assert len(family.polys) == 7
    assert family.polys[3] == pastro_poly(3, REFERENCE)
    with pytest.raises(ResonantParameterError):
        PastroFamily.build(QParams(Fraction(1, 2), Fraction(3), Fraction(4)), 6)
