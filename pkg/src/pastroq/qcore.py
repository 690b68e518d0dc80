"""Exact rational scalars, Laurent polynomials, and terminating q-series.

This module is the arithmetic substrate for the whole package. Scalars are
arbitrary-precision rationals (``fractions.Fraction``), Laurent polynomials
are finite exponent-to-coefficient maps kept in canonical normal form (no
zero coefficients stored), and the q-Pochhammer symbol and terminating
basic hypergeometric series are evaluated exactly. Since the deformation
parameter q is a rational outside {0, 1, -1}, it is never a root of unity,
so denominators of the form 1 - q^m (m != 0) never vanish and every
identity downstream reduces to literal equality of normal forms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Scalar",
    "ParameterError",
    "ResonantParameterError",
    "parse_rational",
    "format_rational",
    "LaurentPoly",
    "x",
    "q_pochhammer",
    "phi21_terminating",
    "QParams",
]

#: Anything accepted where an exact scalar is expected.
Scalar = Union[Fraction, int]


class ParameterError(ValueError):
    """A parameter violates a structural requirement (q in {0,1,-1}, ...)."""


class ResonantParameterError(ParameterError):
    """A parameter choice makes a factor vanish that must be invertible."""


_RATIONAL_PATTERN = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal ``p`` or ``p/r`` into a reduced fraction.

    Only integer and slash-fraction literals are accepted. Decimal points,
    exponents and other float syntax are rejected so exactness cannot be
    lost at the input boundary.
    """
    literal = text.strip()
    if not _RATIONAL_PATTERN.match(literal):
        raise ParameterError(f"not a rational literal: {text!r}")
    if "/" in literal:
        num_text, den_text = literal.split("/")
        if int(den_text) == 0:
            raise ParameterError(f"zero denominator: {text!r}")
        return Fraction(int(num_text), int(den_text))
    return Fraction(int(literal))


def format_rational(value: Scalar) -> str:
    """Format a rational as ``p`` or ``p/r``; inverse of :func:`parse_rational`."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class LaurentPoly:
    """A Laurent polynomial in one variable with exact rational coefficients.

    Terms are stored as a finite map ``exponent -> coefficient`` with zero
    coefficients dropped, so structural equality coincides with semantic
    equality. Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Mapping[int, Scalar] | Iterable[tuple[int, Scalar]] | None = None,
    ) -> None:
        data: dict[int, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exponent, coefficient in items:
                if not isinstance(exponent, int):
                    raise TypeError(f"exponent must be int, got {exponent!r}")
                total = data.get(exponent, Fraction(0)) + Fraction(coefficient)
                if total:
                    data[exponent] = total
                elif exponent in data:
                    del data[exponent]
        self._terms = data

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def monomial(cls, coefficient: Scalar, exponent: int) -> "LaurentPoly":
        return cls({exponent: coefficient})

    def items(self) -> Iterator[tuple[int, Fraction]]:
        """Terms in ascending exponent order."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._terms))

    @property
    def degree(self) -> int | None:
        """Largest exponent, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    @property
    def valuation(self) -> int | None:
        """Smallest exponent, or None for the zero polynomial."""
        return min(self._terms) if self._terms else None

    @property
    def is_polynomial(self) -> bool:
        """True when no negative exponents occur (includes the zero poly)."""
        return not self._terms or min(self._terms) >= 0

    @property
    def leading_coefficient(self) -> Fraction:
        if not self._terms:
            return Fraction(0)
        return self._terms[max(self._terms)]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPoly.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._terms.items())))

    def __add__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        merged = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            total = merged.get(exponent, Fraction(0)) + coefficient
            if total:
                merged[exponent] = total
            elif exponent in merged:
                del merged[exponent]
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = merged
        return result

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            factor = Fraction(other)
            result = LaurentPoly.__new__(LaurentPoly)
            result._terms = (
                {e: c * factor for e, c in self._terms.items()} if factor else {}
            )
            return result
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        product: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponent = e1 + e2
                total = product.get(exponent, Fraction(0)) + c1 * c2
                if total:
                    product[exponent] = total
                elif exponent in product:
                    del product[exponent]
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = product
        return result

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "LaurentPoly":
        divisor = Fraction(other)
        if divisor == 0:
            raise ZeroDivisionError("division of a Laurent polynomial by zero")
        return self * (1 / divisor)

    def __pow__(self, power: int) -> "LaurentPoly":
        if not isinstance(power, int) or power < 0:
            raise ValueError(f"power must be a nonnegative integer, got {power!r}")
        result = LaurentPoly.one()
        base = self
        remaining = power
        while remaining:
            if remaining & 1:
                result = result * base
            base = base * base
            remaining >>= 1
        return result

    def eval_at(self, point: Scalar) -> Fraction:
        """Evaluate at a rational point (nonzero if negative exponents occur)."""
        point = Fraction(point)
        if point == 0 and self._terms and min(self._terms) < 0:
            raise ZeroDivisionError("negative exponents cannot be evaluated at 0")
        return sum((c * point**e for e, c in self._terms.items()), Fraction(0))

    def dilate(self, factor: Scalar) -> "LaurentPoly":
        """Substitute x -> factor*x, i.e. scale the exponent-k term by factor^k."""
        factor = Fraction(factor)
        if factor == 0:
            raise ValueError("dilation factor must be nonzero")
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = {e: c * factor**e for e, c in self._terms.items()}
        return result

    def derivative(self) -> "LaurentPoly":
        """Formal derivative, valid for all integer exponents."""
        return LaurentPoly({e - 1: c * e for e, c in self._terms.items() if e})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute x -> 1/x, negating every exponent."""
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = {-e: c for e, c in self._terms.items()}
        return result

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for exponent, coefficient in sorted(self._terms.items(), reverse=True):
            if exponent == 0:
                body = format_rational(abs(coefficient))
            else:
                var = "x" if exponent == 1 else f"x^{exponent}"
                magnitude = abs(coefficient)
                body = var if magnitude == 1 else f"{format_rational(magnitude)}*{var}"
            if not pieces:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(sorted(self._terms.items()))!r})"


def x(power: int = 1) -> LaurentPoly:
    """The monomial x^power (power may be negative)."""
    return LaurentPoly.monomial(1, power)


def q_pochhammer(z: Scalar, q: Scalar, n: int) -> Fraction:
    """The q-shifted factorial (z; q)_n = prod_{j=0}^{n-1} (1 - z*q^j)."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"length must be a nonnegative integer, got {n!r}")
    z = Fraction(z)
    q = Fraction(q)
    product = Fraction(1)
    power = Fraction(1)
    for _ in range(n):
        product *= 1 - z * power
        power *= q
    return product


def phi21_terminating(
    n: int,
    upper2: Scalar,
    lower: Scalar,
    q: Scalar,
    arg: LaurentPoly | Scalar,
) -> LaurentPoly:
    """Terminating series 2phi1(q^-n, upper2; lower; q, arg) of a Laurent argument.

    Evaluates sum_{k=0}^{n} [(q^-n;q)_k (upper2;q)_k / ((lower;q)_k (q;q)_k)]
    * arg^k exactly. The term ratio is accumulated incrementally so that a
    vanishing denominator factor is detected at the exact k where it occurs.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"series order must be a nonnegative integer, got {n!r}")
    upper2 = Fraction(upper2)
    lower = Fraction(lower)
    q = Fraction(q)
    if not isinstance(arg, LaurentPoly):
        arg = LaurentPoly.constant(arg)

    total = LaurentPoly.one()
    coefficient = Fraction(1)
    arg_power = LaurentPoly.one()
    for k in range(n):
        lower_factor = 1 - lower * q**k
        if lower_factor == 0:
            raise ResonantParameterError(
                f"series denominator factor (1 - lower*q^{k}) vanishes "
                f"(lower = {format_rational(lower)}, q = {format_rational(q)})"
            )
        base_factor = 1 - q ** (k + 1)
        if base_factor == 0:
            raise ResonantParameterError(
                f"series denominator factor (1 - q^{k + 1}) vanishes "
                f"(q = {format_rational(q)} is a root of unity)"
            )
        coefficient *= (1 - q ** (k - n)) * (1 - upper2 * q**k)
        coefficient /= lower_factor * base_factor
        arg_power = arg_power * arg
        total = total + coefficient * arg_power
    return total


@dataclass(frozen=True)
class QParams:
    """The parameter triple (q, a, b), all exact rationals.

    Structural requirements are enforced at construction: q outside
    {0, 1, -1} (hence never a root of unity, q being rational), a and b
    nonzero. Resonance checks against vanishing q-Pochhammer factors are
    separate, because the offending factors depend on the degree range.
    """

    q: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.q in (0, 1, -1):
            raise ParameterError(f"q must lie outside {{0, 1, -1}}, got {format_rational(self.q)}")
        if self.a == 0:
            raise ParameterError("a must be nonzero")
        if self.b == 0:
            raise ParameterError("b must be nonzero")

    def with_b(self, new_b: Scalar) -> "QParams":
        """The same (q, a) with b replaced (used by the b -> bq contiguity shift)."""
        return QParams(self.q, self.a, Fraction(new_b))

    def vanishing_factors(self, n_max: int) -> list[str]:
        """Names of the factors, needed up to degree n_max, that vanish.

        Covers every denominator used by the polynomial family, the
        recurrence data, the partner family and the norm constants up to
        degree n_max: b*q^j != 1 for -1 <= j <= n_max + 1 and
        (b/a)*q^j != 1 for -(n_max + 1) <= j <= 0. Empty means admissible.
        """
        offending: list[str] = []
        for j in range(-1, n_max + 2):
            if self.b * self.q**j == 1:
                offending.append(f"(1 - b*q^{j}) vanishes")
        for j in range(-(n_max + 1), 1):
            if self.b * self.q**j == self.a:
                offending.append(f"(1 - (b/a)*q^{j}) vanishes")
        return offending

    def require_valid(self, n_max: int) -> None:
        """Raise ResonantParameterError listing all vanishing factors, if any."""
        offending = self.vanishing_factors(n_max)
        if offending:
            raise ResonantParameterError(
                f"resonant parameters for degrees up to {n_max}: "
                + "; ".join(offending)
            )

    def describe(self) -> dict[str, str]:
        """Parameter map with formatted rational values (for reports)."""
        return {
            "q": format_rational(self.q),
            "a": format_rational(self.a),
            "b": format_rational(self.b),
        }
