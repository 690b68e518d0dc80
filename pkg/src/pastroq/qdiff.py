"""q-difference operators and the operator triple acting on the family.

An operator is a finite sum sum_k c_k(x) T^k where T^k dilates the
argument, (T^k f)(x) = f(q^k x), and each coefficient c_k is a Laurent
polynomial. Operators compose by the twisted product rule
(c1 T^j)(c2 T^k) = c1(x) c2(q^j x) T^(j+k) and are kept in normal form
(at most one term per shift, zero coefficients dropped), so operator
equality is literal equality of normal forms.

The triple (X, Y, Z) below satisfies the generalized eigenvalue problem
Y P_n = lambda_n X P_n on the monic family, with Z = (1/x) X acting
degree-preservingly. The verification functions check the eigenvalue
problem, the explicit q-difference equation, the parameter-shift
(contiguity) relations, and the recurrence structure, all exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .qcore import LaurentPoly, QParams, Scalar, format_rational, x
from .pastro import (
    mu1,
    mu2,
    pastro_eigenvalue,
    pastro_poly,
)
from .report import Check, equality_check, poly_mismatch_witness

__all__ = [
    "QDiffOperator",
    "operator_mismatch_witness",
    "make_operators",
    "verify_gevp",
    "verify_qdiff_equation",
    "verify_contiguity",
    "verify_recurrence",
]


class QDiffOperator:
    """A finite sum of shifted multiplication operators c_k(x) T^k."""

    __slots__ = ("q", "_terms")

    def __init__(
        self, q: Scalar, terms: Mapping[int, LaurentPoly | Scalar] | None = None
    ) -> None:
        self.q = Fraction(q)
        data: dict[int, LaurentPoly] = {}
        if terms is not None:
            for shift, coefficient in terms.items():
                if not isinstance(shift, int):
                    raise TypeError(f"shift must be int, got {shift!r}")
                if not isinstance(coefficient, LaurentPoly):
                    coefficient = LaurentPoly.constant(coefficient)
                if coefficient:
                    existing = data.get(shift)
                    merged = coefficient if existing is None else existing + coefficient
                    if merged:
                        data[shift] = merged
                    elif shift in data:
                        del data[shift]
        self._terms = data

    @classmethod
    def zero(cls, q: Scalar) -> "QDiffOperator":
        return cls(q)

    @classmethod
    def identity(cls, q: Scalar) -> "QDiffOperator":
        return cls(q, {0: LaurentPoly.one()})

    @classmethod
    def shift(cls, q: Scalar, k: int) -> "QDiffOperator":
        """The pure dilation T^k, (T^k f)(x) = f(q^k x)."""
        return cls(q, {k: LaurentPoly.one()})

    @classmethod
    def multiplication(cls, q: Scalar, poly: LaurentPoly | Scalar) -> "QDiffOperator":
        """Multiplication by a fixed Laurent polynomial."""
        return cls(q, {0: poly})

    @classmethod
    def scalar(cls, q: Scalar, value: Scalar) -> "QDiffOperator":
        return cls(q, {0: LaurentPoly.constant(value)})

    def items(self) -> Iterator[tuple[int, LaurentPoly]]:
        """Terms in ascending shift order."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, shift: int) -> LaurentPoly:
        return self._terms.get(shift, LaurentPoly.zero())

    @property
    def shifts(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QDiffOperator):
            return NotImplemented
        return self.q == other.q and self._terms == other._terms

    def __add__(self, other: "QDiffOperator") -> "QDiffOperator":
        if not isinstance(other, QDiffOperator):
            return NotImplemented
        self._require_same_ambient(other)
        merged = dict(self._terms)
        for shift, coefficient in other._terms.items():
            existing = merged.get(shift)
            total = coefficient if existing is None else existing + coefficient
            if total:
                merged[shift] = total
            elif shift in merged:
                del merged[shift]
        result = QDiffOperator.__new__(QDiffOperator)
        result.q = self.q
        result._terms = merged
        return result

    def __neg__(self) -> "QDiffOperator":
        result = QDiffOperator.__new__(QDiffOperator)
        result.q = self.q
        result._terms = {k: -c for k, c in self._terms.items()}
        return result

    def __sub__(self, other: "QDiffOperator") -> "QDiffOperator":
        if not isinstance(other, QDiffOperator):
            return NotImplemented
        return self + (-other)

    def __mul__(self, factor: Scalar) -> "QDiffOperator":
        if not isinstance(factor, (int, Fraction)):
            return NotImplemented
        factor = Fraction(factor)
        result = QDiffOperator.__new__(QDiffOperator)
        result.q = self.q
        result._terms = (
            {k: c * factor for k, c in self._terms.items()} if factor else {}
        )
        return result

    __rmul__ = __mul__

    def __matmul__(self, other: "QDiffOperator") -> "QDiffOperator":
        """Composition: (c1 T^j)(c2 T^k) = c1(x) c2(q^j x) T^(j+k)."""
        if not isinstance(other, QDiffOperator):
            return NotImplemented
        self._require_same_ambient(other)
        product: dict[int, LaurentPoly] = {}
        for j, c1 in self._terms.items():
            dilation = self.q**j
            for k, c2 in other._terms.items():
                term = c1 * c2.dilate(dilation)
                shift = j + k
                existing = product.get(shift)
                total = term if existing is None else existing + term
                if total:
                    product[shift] = total
                elif shift in product:
                    del product[shift]
        result = QDiffOperator.__new__(QDiffOperator)
        result.q = self.q
        result._terms = product
        return result

    def apply(self, f: LaurentPoly) -> LaurentPoly:
        """Apply to a Laurent polynomial: sum_k c_k(x) f(q^k x)."""
        if not isinstance(f, LaurentPoly):
            raise TypeError(f"operand must be a LaurentPoly, got {f!r}")
        total = LaurentPoly.zero()
        for k, coefficient in self._terms.items():
            total = total + coefficient * f.dilate(self.q**k)
        return total

    def _require_same_ambient(self, other: "QDiffOperator") -> None:
        if self.q != other.q:
            raise ValueError(
                f"ambient q mismatch: {format_rational(self.q)} vs "
                f"{format_rational(other.q)}"
            )

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*T^{k}" for k, c in sorted(self._terms.items()))

    def __repr__(self) -> str:
        return f"QDiffOperator(q={format_rational(self.q)}, {dict(sorted(self._terms.items()))!r})"


def operator_mismatch_witness(lhs: QDiffOperator, rhs: QDiffOperator) -> str | None:
    """First (shift, exponent) where two operators differ, or None."""
    for shift in sorted(set(lhs.shifts) | set(rhs.shifts)):
        mismatch = poly_mismatch_witness(lhs.coefficient(shift), rhs.coefficient(shift))
        if mismatch:
            return f"shift {shift}, {mismatch}"
    return None


def make_operators(params: QParams) -> tuple[QDiffOperator, QDiffOperator, QDiffOperator]:
    """The operator triple (X, Y, Z) for the parameter triple (q, a, b).

      X = (x - q) T^-1 + (q - b x) I        raises degree by one,
      Y = (x - q/a) T^+1 + (q/a - x/b) I    raises degree by one,
      Z = (1 - q/x) T^-1 + (q/x - b) I      preserves degree, Z = (1/x) X.
    """
    q, a, b = params.q, params.a, params.b
    X = QDiffOperator(q, {-1: x() - q, 0: q - b * x()})
    Y = QDiffOperator(q, {1: x() - q / a, 0: LaurentPoly.constant(q / a) - x() / b})
    Z = QDiffOperator(
        q,
        {
            -1: LaurentPoly({0: 1, -1: -q}),
            0: LaurentPoly({-1: q, 0: -b}),
        },
    )
    return X, Y, Z


def verify_gevp(n: int, params: QParams) -> Check:
    """Check the generalized eigenvalue identity Y P_n = lambda_n X P_n."""
    X, Y, _ = make_operators(params)
    p = pastro_poly(n, params)
    lam = pastro_eigenvalue(n, params)
    witness = poly_mismatch_witness(Y.apply(p), lam * X.apply(p))
    return equality_check(
        "gevp",
        "Y P_n = lambda_n X P_n, lambda_n = -q^n/b",
        params.describe() | {"n": str(n)},
        witness,
    )


def verify_qdiff_equation(n: int, params: QParams) -> Check:
    """Check the explicit q-difference equation, written out with dilations.

    (x - q/a) P_n(qx) + (q/a - x/b) P_n(x)
        = lambda_n [ (x - q) P_n(x/q) + (q - b x) P_n(x) ].
    This route never builds operator objects, so it is independent of the
    operator calculus exercised by :func:`verify_gevp`.
    """
    q, a, b = params.q, params.a, params.b
    p = pastro_poly(n, params)
    lam = pastro_eigenvalue(n, params)
    lhs = (x() - q / a) * p.dilate(q) + (LaurentPoly.constant(q / a) - x() / b) * p
    rhs = lam * ((x() - q) * p.dilate(1 / q) + (q - b * x()) * p)
    return equality_check(
        "q-difference-equation",
        "(x - q/a) P_n(qx) + (q/a - x/b) P_n(x) = "
        "lambda_n ((x - q) P_n(x/q) + (q - b x) P_n(x))",
        params.describe() | {"n": str(n)},
        poly_mismatch_witness(lhs, rhs),
    )


def verify_contiguity(n: int, params: QParams) -> list[Check]:
    """Check that X, Y, Z map the family at b to the family at bq.

      X P_n(.; b) = q^-n (1 - b q^n) x P_n(.; bq),
      Y P_n(.; b) = -(1/b) (1 - b q^n) x P_n(.; bq),
      Z P_n(.; b) = q^-n (1 - b q^n) P_n(.; bq).
    """
    q, b = params.q, params.b
    X, Y, Z = make_operators(params)
    p = pastro_poly(n, params)
    p_shifted = pastro_poly(n, params.with_b(b * q))
    context = params.describe() | {"n": str(n)}
    factor = q**-n * (1 - b * q**n)
    return [
        equality_check(
            "contiguity-X",
            "X P_n(.; b) = q^-n (1 - b q^n) x P_n(.; bq)",
            context,
            poly_mismatch_witness(X.apply(p), factor * x() * p_shifted),
        ),
        equality_check(
            "contiguity-Y",
            "Y P_n(.; b) = -(1/b) (1 - b q^n) x P_n(.; bq)",
            context,
            poly_mismatch_witness(
                Y.apply(p), (-1 / b) * (1 - b * q**n) * x() * p_shifted
            ),
        ),
        equality_check(
            "contiguity-Z",
            "Z P_n(.; b) = q^-n (1 - b q^n) P_n(.; bq)",
            context,
            poly_mismatch_witness(Z.apply(p), factor * p_shifted),
        ),
    ]


def verify_recurrence(n: int, params: QParams) -> list[Check]:
    """Check the degree-basis actions of X and Z and the three-term recurrence.

      X P_n = q^-n (1 - b q^n) P_(n+1) + q (1 - (b/a) q^-n) P_n,
      Z P_n = q^-n (1 - b q^n) P_n
              + [b q (1 - q^-n)(1 - a q^(n-1)) / (a (1 - b q^(n-1)))] P_(n-1),
      P_(n+1) + mu1_n P_n = x (P_n + mu2_n P_(n-1)),
      x (Z P_n) = X P_n.
    The P_(n-1) terms drop at n = 0 through their vanishing 1 - q^-n and
    1 - q^n factors.
    """
    q, a, b = params.q, params.a, params.b
    X, _, Z = make_operators(params)
    p_now = pastro_poly(n, params)
    p_next = pastro_poly(n + 1, params)
    p_prev = pastro_poly(n - 1, params) if n >= 1 else LaurentPoly.zero()
    context = params.describe() | {"n": str(n)}

    raise_factor = q**-n * (1 - b * q**n)
    x_rhs = raise_factor * p_next + q * (1 - (b / a) * q**-n) * p_now
    z_rhs = raise_factor * p_now
    if n >= 1:
        z_rhs = z_rhs + (
            b * q * (1 - q**-n) * (1 - a * q ** (n - 1)) / (a * (1 - b * q ** (n - 1)))
        ) * p_prev

    m1, m2 = mu1(n, params), mu2(n, params)
    three_lhs = p_next + m1 * p_now
    three_rhs = x() * (p_now + m2 * p_prev)

    applied_z = Z.apply(p_now)
    applied_x = X.apply(p_now)
    return [
        equality_check(
            "recurrence-X-action",
            "X P_n = q^-n (1 - b q^n) P_(n+1) + q (1 - (b/a) q^-n) P_n",
            context,
            poly_mismatch_witness(applied_x, x_rhs),
        ),
        equality_check(
            "recurrence-Z-action",
            "Z P_n = q^-n (1 - b q^n) P_n "
            "+ b q (1 - q^-n)(1 - a q^(n-1)) / (a (1 - b q^(n-1))) P_(n-1)",
            context,
            poly_mismatch_witness(applied_z, z_rhs),
        ),
        equality_check(
            "recurrence-three-term",
            "P_(n+1) + mu1_n P_n = x (P_n + mu2_n P_(n-1))",
            context,
            poly_mismatch_witness(three_lhs, three_rhs),
        ),
        equality_check(
            "recurrence-X-from-Z",
            "x (Z P_n) = X P_n",
            context,
            poly_mismatch_witness(x() * applied_z, applied_x),
        ),
    ]
