"""Operator calculus and the verification of the operator identities."""

import random
from fractions import Fraction

import pytest

from pastroq.pastro import pastro_poly
from pastroq.qcore import LaurentPoly, QParams, ResonantParameterError, x
from pastroq.qdiff import (
    QDiffOperator,
    make_operators,
    operator_mismatch_witness,
    verify_contiguity,
    verify_gevp,
    verify_qdiff_equation,
    verify_recurrence,
)
from pastroq.report import poly_mismatch_witness

REFERENCE = QParams(Fraction(1, 2), Fraction(3), Fraction(1, 5))
SECOND = QParams(Fraction(-4, 5), Fraction(6), Fraction(-2))
Q = Fraction(1, 2)


def test_shift_operator_dilates():
    T = QDiffOperator.shift(Q, 1)
    p = LaurentPoly({2: 1, 0: 3})
    assert T.apply(p) == LaurentPoly({2: Fraction(1, 4), 0: 3})
    T_inv = QDiffOperator.shift(Q, -1)
    assert T_inv.apply(x()) == 2 * x()


def test_shift_operators_compose_to_identity():
    T_plus = QDiffOperator.shift(Q, 1)
    T_minus = QDiffOperator.shift(Q, -1)
    assert T_plus @ T_minus == QDiffOperator.identity(Q)
    assert T_minus @ T_plus == QDiffOperator.identity(Q)


def test_composition_twist():
    # moving T^+ past multiplication by x picks up one factor of q
    T_plus = QDiffOperator.shift(Q, 1)
    mul_x = QDiffOperator.multiplication(Q, x())
    assert mul_x @ T_plus == QDiffOperator(Q, {1: x()})
    assert T_plus @ mul_x == QDiffOperator(Q, {1: Q * x()})


def test_composition_is_associative():
    X, Y, Z = make_operators(REFERENCE)
    assert (X @ Y) @ Z == X @ (Y @ Z)


def test_composition_matches_sequential_application():
    rng = random.Random(5)
    for _ in range(25):
        w1 = _random_operator(rng)
        w2 = _random_operator(rng)
        f = _random_poly(rng)
        assert (w1 @ w2).apply(f) == w1.apply(w2.apply(f))


def _random_poly(rng: random.Random) -> LaurentPoly:
    return LaurentPoly(
        {
            e: Fraction(rng.randint(-3, 3), rng.randint(1, 3))
            for e in rng.sample(range(-4, 5), k=3)
        }
    )


def _random_operator(rng: random.Random) -> QDiffOperator:
    return QDiffOperator(
        Q, {k: _random_poly(rng) for k in rng.sample(range(-2, 3), k=2)}
    )


def test_distinct_normal_forms_act_differently():
    # two operators with different normal forms differ on some x^k, |k| <= 6
    rng = random.Random(11)
    for _ in range(25):
        w = _random_operator(rng)
        perturbed = w + QDiffOperator(Q, {rng.randint(-2, 2): _random_poly(rng)})
        if w == perturbed:
            continue
        assert any(
            w.apply(x(k)) != perturbed.apply(x(k)) for k in range(-6, 7)
        )


def test_ambient_mismatch_rejected():
    with pytest.raises(ValueError):
        QDiffOperator.identity(Fraction(1, 2)) @ QDiffOperator.identity(Fraction(1, 3))


def test_normal_form_drops_zero_coefficients():
    w = QDiffOperator(Q, {1: x() - x(), 0: LaurentPoly.one()})
    assert w.shifts == (0,)
    assert w == QDiffOperator.identity(Q)


def test_operator_scalar_arithmetic():
    X, _, _ = make_operators(REFERENCE)
    assert 0 * X == QDiffOperator.zero(Q)
    assert (2 * X) - X == X
    assert -(-X) == X


def test_triple_on_constants():
    X, Y, Z = make_operators(REFERENCE)
    one = LaurentPoly.one()
    b, a, q = REFERENCE.b, REFERENCE.a, REFERENCE.q
    assert X.apply(one) == (1 - b) * x()
    assert Y.apply(one) == (1 - 1 / b) * x()
    assert Z.apply(one) == LaurentPoly.constant(1 - b)


@pytest.mark.parametrize("params", [REFERENCE, SECOND])
@pytest.mark.parametrize("n", range(-3, 7))
def test_monomial_actions(params, n):
    X, Y, Z = make_operators(params)
    q, a, b = params.q, params.a, params.b
    monomial = x(n)
    assert X.apply(monomial) == LaurentPoly(
        {n + 1: q**-n - b, n: q * (1 - q**-n)}
    )
    assert Y.apply(monomial) == LaurentPoly(
        {n + 1: q**n - 1 / b, n: (q / a) * (1 - q**n)}
    )
    assert Z.apply(monomial) == LaurentPoly(
        {n: q**-n - b, n - 1: q * (1 - q**-n)}
    )


def test_z_is_x_divided_by_the_variable():
    for params in (REFERENCE, SECOND):
        X, _, Z = make_operators(params)
        assert QDiffOperator.multiplication(params.q, x(-1)) @ X == Z


def test_x_y_raise_degree_z_preserves():
    X, Y, Z = make_operators(REFERENCE)
    for n in range(7):
        p = pastro_poly(n, REFERENCE)
        assert X.apply(p).degree == n + 1
        assert Y.apply(p).degree == n + 1
        assert Z.apply(p).degree == n


@pytest.mark.parametrize("params", [REFERENCE, SECOND])
def test_gevp_passes(params):
    for n in range(11):
        check = verify_gevp(n, params)
        assert check.status == "PASS", check.witness


@pytest.mark.parametrize("params", [REFERENCE, SECOND])
def test_qdiff_equation_passes(params):
    for n in range(11):
        check = verify_qdiff_equation(n, params)
        assert check.status == "PASS", check.witness


@pytest.mark.parametrize("params", [REFERENCE, SECOND])
def test_recurrence_suite_passes(params):
    for n in range(11):
        for check in verify_recurrence(n, params):
            assert check.status == "PASS", (check.name, check.witness)


@pytest.mark.parametrize("params", [REFERENCE, SECOND])
def test_contiguity_suite_passes(params):
    for n in range(9):
        for check in verify_contiguity(n, params):
            assert check.status == "PASS", (check.name, check.witness)


def test_contiguity_z_follows_from_x():
    # dividing the X relation by x must reproduce the Z relation exactly
    q, b = REFERENCE.q, REFERENCE.b
    for n in range(7):
        shifted = pastro_poly(n, REFERENCE.with_b(b * q))
        x_rhs = q**-n * (1 - b * q**n) * x() * shifted
        z_rhs = q**-n * (1 - b * q**n) * shifted
        assert x_rhs * x(-1) == z_rhs


def test_verify_surfaces_resonance_from_construction():
    params = QParams(Fraction(1, 2), Fraction(2, 5), Fraction(1, 5))  # b/a = q
    with pytest.raises(ResonantParameterError):
        verify_gevp(2, params)


def test_witness_pinpoints_first_mismatch():
    witness = poly_mismatch_witness(
        LaurentPoly({2: 1, 0: 1}), LaurentPoly({2: 1, 0: 2})
    )
    assert witness is not None and "exponent 0" in witness
    op_witness = operator_mismatch_witness(
        QDiffOperator(Q, {1: x()}), QDiffOperator(Q, {1: 2 * x()})
    )
    assert op_witness is not None and "shift 1" in op_witness
    assert operator_mismatch_witness(
        QDiffOperator(Q, {1: x()}), QDiffOperator(Q, {1: x()})
    ) is None
