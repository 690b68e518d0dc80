"""The operator algebra: commutation relations, Casimir element, pencil.

The triple (X, Y, Z) closes under q-commutators with parameter-dependent
structure constants. An affine change of generators turns two of the three
relations into pure q-canonical pairs; the third keeps two constants
alpha1, alpha2. In the new generators a cubic Casimir element commutes
with everything, and the pencil L = X' + mu Y' generates a q-Hahn type
subalgebra whose relations close on L, Z' and their q-commutator M.
All relation checks are exact operator equalities in normal form, and the
operator arguments are injectable so corrupted inputs demonstrably FAIL.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .qcore import QParams, Scalar, format_rational
from .qdiff import QDiffOperator, make_operators, operator_mismatch_witness
from .report import Check, equality_check

__all__ = [
    "alpha1",
    "alpha2",
    "verify_raw_relations",
    "affine_generators",
    "verify_affine_relations",
    "casimir_element",
    "casimir_centrality",
    "AlgebraConstants",
    "qhahn_embedding",
]

OperatorTriple = tuple[QDiffOperator, QDiffOperator, QDiffOperator]


def alpha1(params: QParams) -> Fraction:
    """Structure constant alpha1 = b (q-1)^2 (q+1) / (a^2 q)."""
    q, a, b = params.q, params.a, params.b
    return b * (q - 1) ** 2 * (q + 1) / (a**2 * q)


def alpha2(params: QParams) -> Fraction:
    """Structure constant alpha2 = (q-1)(ab + aq + bq) / (a^2 q)."""
    q, a, b = params.q, params.a, params.b
    return (q - 1) * (a * b + a * q + b * q) / (a**2 * q)


def verify_raw_relations(
    params: QParams, operators: OperatorTriple | None = None
) -> list[Check]:
    """Check the three q-commutation relations of the raw triple (X, Y, Z).

      q XY - YX = q (q-1) ((1/a) X + Y),
      q YZ - ZY = (q-1) [ -(1+q)/(bq) X - b Y + (q/a) Z + (1-b)(a-bq)/(ab) ],
      q ZX - XZ = (q-1) (-b X + q Z).
    Operators are injectable so corrupted coefficients surface as FAIL.
    """
    X, Y, Z = operators if operators is not None else make_operators(params)
    q, a, b = params.q, params.a, params.b
    I = QDiffOperator.identity(q)
    context = params.describe()

    checks = [
        equality_check(
            "raw-relation-XY",
            "q XY - YX = q (q-1) ((1/a) X + Y)",
            context,
            operator_mismatch_witness(
                q * (X @ Y) - Y @ X, q * (q - 1) * ((1 / a) * X + Y)
            ),
        ),
        equality_check(
            "raw-relation-YZ",
            "q YZ - ZY = (q-1) (-(1+q)/(bq) X - b Y + (q/a) Z + (1-b)(a-bq)/(ab) I)",
            context,
            operator_mismatch_witness(
                q * (Y @ Z) - Z @ Y,
                (q - 1)
                * (
                    (-(1 + q) / (b * q)) * X
                    + (-b) * Y
                    + (q / a) * Z
                    + ((1 - b) * (a - b * q) / (a * b)) * I
                ),
            ),
        ),
        equality_check(
            "raw-relation-ZX",
            "q ZX - XZ = (q-1) (-b X + q Z)",
            context,
            operator_mismatch_witness(q * (Z @ X) - X @ Z, (q - 1) * ((-b) * X + q * Z)),
        ),
    ]
    return checks


def affine_generators(params: QParams) -> OperatorTriple:
    """The affine change of generators that normalizes two of the relations.

      X' = a/(bq(q-1)) X - a/(b(q-1)) I,
      Y' = (b/q) Y - (b/a) I,
      Z' = -(1/a) Z - (b/a) I.
    Requires q != 1, which QParams already guarantees.
    """
    X, Y, Z = make_operators(params)
    q, a, b = params.q, params.a, params.b
    I = QDiffOperator.identity(q)
    Xp = (a / (b * q * (q - 1))) * X - (a / (b * (q - 1))) * I
    Yp = (b / q) * Y - (b / a) * I
    Zp = (-1 / a) * Z - (b / a) * I
    return Xp, Yp, Zp


def verify_affine_relations(
    params: QParams, generators: OperatorTriple | None = None
) -> list[Check]:
    """Check the normalized relations of (X', Y', Z').

      q X'Y' - Y'X' = I,
      q Y'Z' - Z'Y' = alpha1 X' + alpha2 I,
      q Z'X' - X'Z' = I,
    and restate them as the cyclic presentation with structure constants
    (beta1, beta2) = (0, 1) and (delta1, delta2) = (0, 1) alongside
    (alpha1, alpha2).
    """
    Xp, Yp, Zp = generators if generators is not None else affine_generators(params)
    q = params.q
    a1, a2 = alpha1(params), alpha2(params)
    I = QDiffOperator.identity(q)
    context = params.describe()

    witness_xy = operator_mismatch_witness(q * (Xp @ Yp) - Yp @ Xp, I)
    witness_yz = operator_mismatch_witness(
        q * (Yp @ Zp) - Zp @ Yp, a1 * Xp + a2 * I
    )
    witness_zx = operator_mismatch_witness(q * (Zp @ Xp) - Xp @ Zp, I)
    checks = [
        equality_check(
            "affine-relation-XY", "q X'Y' - Y'X' = I", context, witness_xy
        ),
        equality_check(
            "affine-relation-YZ",
            "q Y'Z' - Z'Y' = alpha1 X' + alpha2 I",
            context,
            witness_yz,
        ),
        equality_check(
            "affine-relation-ZX", "q Z'X' - X'Z' = I", context, witness_zx
        ),
        equality_check(
            "askey-wilson-cyclic-presentation",
            "q X'Y' - Y'X' = beta1 Z' + beta2 I; "
            "q Y'Z' - Z'Y' = alpha1 X' + alpha2 I; "
            "q Z'X' - X'Z' = delta1 Y' + delta2 I",
            context
            | {
                "beta1": "0",
                "beta2": "1",
                "alpha1": format_rational(a1),
                "alpha2": format_rational(a2),
                "delta1": "0",
                "delta2": "1",
            },
            witness_xy or witness_yz or witness_zx,
        ),
    ]
    return checks


def casimir_element(
    params: QParams, generators: OperatorTriple | None = None
) -> QDiffOperator:
    """The cubic Casimir of the normalized generators.

    Q = (q^-2 - 1) X'Y'Z' + (alpha1/q) X'^2
        + (1/q)(1/q + 1)(alpha2 X' + (1/q) Y' + Z').
    """
    Xp, Yp, Zp = generators if generators is not None else affine_generators(params)
    q = params.q
    a1, a2 = alpha1(params), alpha2(params)
    return (
        (q**-2 - 1) * (Xp @ Yp @ Zp)
        + (a1 / q) * (Xp @ Xp)
        + (1 / q) * (1 / q + 1) * (a2 * Xp + (1 / q) * Yp + Zp)
    )


def casimir_centrality(
    params: QParams,
    casimir: QDiffOperator | None = None,
    generators: OperatorTriple | None = None,
) -> list[Check]:
    """Check that the Casimir commutes with each normalized generator.

    The Casimir (and the generators) are injectable, so a perturbed
    candidate demonstrably fails centrality.
    """
    triple = generators if generators is not None else affine_generators(params)
    element = casimir if casimir is not None else casimir_element(params, triple)
    context = params.describe()
    checks = []
    for name, generator in zip(("X'", "Y'", "Z'"), triple):
        checks.append(
            equality_check(
                f"casimir-central-{name.rstrip(chr(39))}",
                f"Q {name} - {name} Q = 0",
                context,
                operator_mismatch_witness(
                    element @ generator, generator @ element
                ),
            )
        )
    return checks


@dataclass
class AlgebraConstants:
    """Structure constants of the pencil subalgebra at a given mu."""

    mu: Fraction
    alpha1: Fraction
    alpha2: Fraction
    gamma1: Fraction
    gamma2: Fraction
    gamma3: Fraction
    gamma4: QDiffOperator
    degenerate: bool


def qhahn_embedding(
    params: QParams, mu: Scalar
) -> tuple[AlgebraConstants, list[Check]]:
    """Check the q-Hahn type relations of the pencil L = X' + mu Y'.

    With M defined through the first relation,
      q L Z' - Z' L = M + gamma1 I,             gamma1 = mu alpha2 + 1,
      q Z' M - M Z' = gamma2 I,                 gamma2 = mu alpha1,
      q M L - L M  = gamma3 Z' + gamma4,        gamma3 = mu (q+1)^2 (q-1) / q,
    where gamma4 = -mu q^2 (q-1) Q + mu^2 alpha1 I is central (Q is the
    Casimir). mu = 0 collapses the pencil to X' and is flagged degenerate.
    """
    mu = Fraction(mu)
    q = params.q
    Xp, Yp, Zp = affine_generators(params)
    a1, a2 = alpha1(params), alpha2(params)
    I = QDiffOperator.identity(q)

    L = Xp + mu * Yp
    gamma1 = mu * a2 + 1
    M = q * (L @ Zp) - Zp @ L - gamma1 * I
    gamma2 = mu * a1
    gamma3 = mu * (q + 1) ** 2 * (q - 1) / q
    gamma4 = (-mu * q**2 * (q - 1)) * casimir_element(params, (Xp, Yp, Zp)) + (
        mu**2 * a1
    ) * I

    context = params.describe() | {"mu": format_rational(mu)}
    if mu == 0:
        context["degenerate"] = "true"
    checks = [
        equality_check(
            "qhahn-LZ",
            "q L Z' - Z' L = M + (mu alpha2 + 1) I",
            context,
            operator_mismatch_witness(q * (L @ Zp) - Zp @ L, M + gamma1 * I),
        ),
        equality_check(
            "qhahn-ZM",
            "q Z' M - M Z' = mu alpha1 I",
            context,
            operator_mismatch_witness(q * (Zp @ M) - M @ Zp, gamma2 * I),
        ),
        equality_check(
            "qhahn-ML",
            "q M L - L M = mu ((q+1)^2 (q-1)/q) Z' - mu q^2 (q-1) Q + mu^2 alpha1 I",
            context,
            operator_mismatch_witness(q * (M @ L) - L @ M, gamma3 * Zp + gamma4),
        ),
    ]
    constants = AlgebraConstants(
        mu=mu,
        alpha1=a1,
        alpha2=a2,
        gamma1=gamma1,
        gamma2=gamma2,
        gamma3=gamma3,
        gamma4=gamma4,
        degenerate=(mu == 0),
    )
    return constants, checks
