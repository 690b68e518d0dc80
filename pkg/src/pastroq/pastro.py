"""The Pastro polynomial family, its partners, and its recurrence data.

Everything in this module is a function of the parameter triple
(q, a, b). The polynomials P_n are monic of degree n and are built by an
exact two-term coefficient recurrence; their biorthogonal partners R_n are
Laurent polynomials supported on exponents [-n, 0], built from the
terminating series. The Baxter-style coupled recurrence reconstructs both
families from scratch and is used as an independent derivation route.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .qcore import (
    LaurentPoly,
    QParams,
    ResonantParameterError,
    Scalar,
    format_rational,
    phi21_terminating,
    q_pochhammer,
    x,
)
from .report import Check, equality_check, poly_mismatch_witness

__all__ = [
    "pastro_coefficients",
    "pastro_poly",
    "pastro_poly_series",
    "pastro_monic_prefactor",
    "pastro_coefficient_ratio",
    "pastro_eigenvalue",
    "mu1",
    "mu2",
    "mu_coefficients",
    "alpha_coefficient",
    "beta_coefficient",
    "norm_constant",
    "BaxterData",
    "baxter_coefficients",
    "baxter_system",
    "verify_baxter_consistency",
    "biorthogonal_partner",
    "GridWeights",
    "grid_weights",
    "PastroFamily",
]


def _check_degree(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"degree must be a nonnegative integer, got {n!r}")


def pastro_coefficients(n: int, params: QParams) -> list[Fraction]:
    """Coefficients [C_0, ..., C_n] of the monic P_n, by descending recurrence.

    Seeded with C_n = 1 and stepped down through
      (1 - q^(k-n)) (1 - b q^k) C_k = (1 - (b/a) q^(k+1-n)) (1 - q^(k+1)) C_(k+1).
    The factor 1 - q^(k-n) never vanishes (q is not a root of unity); the
    other factors are checked and reported exactly when they vanish.
    """
    _check_degree(n)
    q, a, b = params.q, params.a, params.b
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    for k in range(n - 1, -1, -1):
        shift_factor = 1 - (b / a) * q ** (k + 1 - n)
        if shift_factor == 0:
            raise ResonantParameterError(
                f"factor (1 - (b/a)*q^{k + 1 - n}) vanishes: "
                f"monic family of degree {n} degenerates"
            )
        b_factor = 1 - b * q**k
        if b_factor == 0:
            raise ResonantParameterError(f"factor (1 - b*q^{k}) vanishes")
        coeffs[k] = (
            coeffs[k + 1]
            * shift_factor
            * (1 - q ** (k + 1))
            / ((1 - q ** (k - n)) * b_factor)
        )
    return coeffs


def pastro_poly(n: int, params: QParams) -> LaurentPoly:
    """The monic polynomial P_n(x; a, b) of degree n."""
    return LaurentPoly(enumerate(pastro_coefficients(n, params)))


def pastro_monic_prefactor(n: int, params: QParams) -> Fraction:
    """The constant C_0 = ((b/a)q^(1-n);q)_n (q;q)_n / ((q^-n;q)_n (b;q)_n)."""
    _check_degree(n)
    q, a, b = params.q, params.a, params.b
    denominator = q_pochhammer(q**-n, q, n) * q_pochhammer(b, q, n)
    if denominator == 0:
        raise ResonantParameterError(
            f"(b;q)_{n} vanishes (b = {format_rational(b)}, q = {format_rational(q)})"
        )
    return q_pochhammer((b / a) * q ** (1 - n), q, n) * q_pochhammer(q, q, n) / denominator


def pastro_poly_series(n: int, params: QParams) -> LaurentPoly:
    """P_n built from the terminating series (independent of the recurrence).

    P_n = C_0 * 2phi1(q^-n, b; (b/a) q^(1-n); q, x). Used as a cross-check
    against the recurrence route.
    """
    q, a, b = params.q, params.a, params.b
    prefactor = pastro_monic_prefactor(n, params)
    return prefactor * phi21_terminating(n, b, (b / a) * q ** (1 - n), q, x())


def pastro_coefficient_ratio(n: int, k: int, params: QParams) -> Fraction:
    """Closed-form ratio C_k / C_0 = (q^-n;q)_k (b;q)_k / (((b/a)q^(1-n);q)_k (q;q)_k)."""
    _check_degree(n)
    if not 0 <= k <= n:
        raise ValueError(f"coefficient index must lie in [0, {n}], got {k}")
    q, a, b = params.q, params.a, params.b
    denominator = q_pochhammer((b / a) * q ** (1 - n), q, k) * q_pochhammer(q, q, k)
    if denominator == 0:
        raise ResonantParameterError(
            f"((b/a)*q^{1 - n};q)_{k} vanishes: monic family of degree {n} degenerates"
        )
    return q_pochhammer(q**-n, q, k) * q_pochhammer(b, q, k) / denominator


def pastro_eigenvalue(n: int, params: QParams) -> Fraction:
    """The generalized eigenvalue lambda_n = -q^n / b."""
    _check_degree(n)
    return -params.q**n / params.b


def mu1(n: int, params: QParams) -> Fraction:
    """Recurrence coefficient mu1_n = -q (b - a q^n) / (a (1 - b q^n))."""
    _check_degree(n)
    q, a, b = params.q, params.a, params.b
    denominator = 1 - b * q**n
    if denominator == 0:
        raise ResonantParameterError(f"factor (1 - b*q^{n}) vanishes")
    return -q * (b - a * q**n) / (a * denominator)


def mu2(n: int, params: QParams) -> Fraction:
    """Recurrence coefficient mu2_n; exactly 0 at n = 0 (the 1 - q^n factor).

    For n >= 1, mu2_n = -b q (1 - q^n)(1 - a q^(n-1)) / (a (1 - b q^n)(1 - b q^(n-1))).
    """
    _check_degree(n)
    if n == 0:
        return Fraction(0)
    q, a, b = params.q, params.a, params.b
    for m in (n, n - 1):
        if 1 - b * q**m == 0:
            raise ResonantParameterError(f"factor (1 - b*q^{m}) vanishes")
    return (
        -b
        * q
        * (1 - q**n)
        * (1 - a * q ** (n - 1))
        / (a * (1 - b * q**n) * (1 - b * q ** (n - 1)))
    )


def mu_coefficients(n: int, params: QParams) -> tuple[Fraction, Fraction]:
    """The pair (mu1_n, mu2_n) of three-term recurrence coefficients."""
    return mu1(n, params), mu2(n, params)


def alpha_coefficient(n: int, params: QParams) -> Fraction:
    """Coupled-recurrence coefficient alpha_n = -((b/a)q)^(n+1) (a/b;q)_(n+1) / (b;q)_(n+1)."""
    _check_degree(n)
    q, a, b = params.q, params.a, params.b
    denominator = q_pochhammer(b, q, n + 1)
    if denominator == 0:
        raise ResonantParameterError(f"(b;q)_{n + 1} vanishes")
    return -(((b / a) * q) ** (n + 1)) * q_pochhammer(a / b, q, n + 1) / denominator


def beta_coefficient(n: int, params: QParams) -> Fraction:
    """Coupled-recurrence coefficient beta_n = -(a/b)^(n+1) (b/q;q)_(n+1) / ((a/b)q;q)_(n+1)."""
    _check_degree(n)
    q, a, b = params.q, params.a, params.b
    denominator = q_pochhammer((a / b) * q, q, n + 1)
    if denominator == 0:
        raise ResonantParameterError(f"((a/b)*q;q)_{n + 1} vanishes")
    return -((a / b) ** (n + 1)) * q_pochhammer(b / q, q, n + 1) / denominator


def norm_constant(n: int, params: QParams) -> Fraction:
    """Biorthogonality constant h_n = (a;q)_n (q;q)_n / (((a/b)q;q)_n (b;q)_n)."""
    _check_degree(n)
    q, a, b = params.q, params.a, params.b
    denominator = q_pochhammer((a / b) * q, q, n) * q_pochhammer(b, q, n)
    if denominator == 0:
        raise ResonantParameterError(
            f"((a/b)*q;q)_{n} * (b;q)_{n} vanishes"
        )
    return q_pochhammer(a, q, n) * q_pochhammer(q, q, n) / denominator


@dataclass
class BaxterData:
    """Closed-form recurrence data, optionally with the iterated families."""

    alpha: list[Fraction]
    beta: list[Fraction]
    h: list[Fraction]
    p_polys: list[LaurentPoly] = field(default_factory=list)
    q_polys: list[LaurentPoly] = field(default_factory=list)


def baxter_coefficients(n_max: int, params: QParams) -> BaxterData:
    """Closed-form alpha_n, beta_n for n <= n_max and h_n for n <= n_max."""
    _check_degree(n_max)
    return BaxterData(
        alpha=[alpha_coefficient(n, params) for n in range(n_max + 1)],
        beta=[beta_coefficient(n, params) for n in range(n_max + 1)],
        h=[norm_constant(n, params) for n in range(n_max + 1)],
    )


def baxter_system(n_max: int, params: QParams) -> BaxterData:
    """Build both families from the coupled two-term recurrences.

    Starting from P_0 = Q_0 = 1, iterates
      P_(n+1)(x) = x P_n(x) - alpha_n x^n Q_n(1/x),
      Q_(n+1)(x) = x Q_n(x) - beta_n x^n P_n(1/x),
    with the closed-form alpha_n, beta_n. This route never references the
    eigenvalue-problem construction, so agreement of its P_n with
    :func:`pastro_poly` (and of its Q_n(1/x) with the closed-form partner)
    is a genuine cross-method consistency statement.
    """
    data = baxter_coefficients(n_max, params)
    p_polys = [LaurentPoly.one()]
    q_polys = [LaurentPoly.one()]
    for n in range(n_max):
        p_prev, q_prev = p_polys[n], q_polys[n]
        reversed_q = q_prev.invert_variable() * x(n)
        reversed_p = p_prev.invert_variable() * x(n)
        p_polys.append(x() * p_prev - data.alpha[n] * reversed_q)
        q_polys.append(x() * q_prev - data.beta[n] * reversed_p)
    data.p_polys = p_polys
    data.q_polys = q_polys
    return data


def biorthogonal_partner(n: int, params: QParams) -> LaurentPoly:
    """The partner R_n, a Laurent polynomial supported on exponents [-n, 0].

    R_n = [(q^-n;q)_n (b/q;q)_n / (((b/a)q^-n;q)_n (q;q)_n)]
          * 2phi1(q^-n, (a/b)q; q^(2-n)/b; q, q^2/(a x)).
    """
    _check_degree(n)
    q, a, b = params.q, params.a, params.b
    denominator = q_pochhammer((b / a) * q**-n, q, n) * q_pochhammer(q, q, n)
    if denominator == 0:
        raise ResonantParameterError(
            f"((b/a)*q^{-n};q)_{n} vanishes: partner of degree {n} degenerates"
        )
    prefactor = q_pochhammer(q**-n, q, n) * q_pochhammer(b / q, q, n) / denominator
    series = phi21_terminating(
        n,
        (a / b) * q,
        q ** (2 - n) / b,
        q,
        LaurentPoly.monomial(q**2 / a, -1),
    )
    return prefactor * series


@dataclass
class GridWeights:
    """The geometric grid x_s = q^(s+1) and its weights, s = 0..N-1."""

    N: int
    q: Fraction
    b: Fraction
    grid: list[Fraction]
    w: list[Fraction]


def grid_weights(N: int, b: Scalar, q: Scalar) -> GridWeights:
    """Weights w_s = [(q^(1-N);q)_s / (q;q)_s] (b q^(N-1))^s / (b;q)_(N-1).

    The weights are built by exact ratio iteration; their sum is checked to
    be exactly 1 and every weight is checked nonzero, since a vanishing
    weight would degenerate the bilinear form.
    """
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"grid size must be a positive integer, got {N!r}")
    q, b = Fraction(q), Fraction(b)
    if q in (0, 1, -1):
        raise ResonantParameterError(
            f"q must lie outside {{0, 1, -1}}, got {format_rational(q)}"
        )
    if b == 0:
        raise ResonantParameterError("b must be nonzero")
    normalizer = q_pochhammer(b, q, N - 1)
    if normalizer == 0:
        raise ResonantParameterError(f"(b;q)_{N - 1} vanishes")

    weights = [Fraction(1) / normalizer]
    for s in range(N - 1):
        ratio = (1 - q ** (1 - N + s)) / (1 - q ** (s + 1)) * b * q ** (N - 1)
        weights.append(weights[-1] * ratio)
    for s, weight in enumerate(weights):
        if weight == 0:
            raise ResonantParameterError(f"weight w_{s} vanishes")
    total = sum(weights, Fraction(0))
    if total != 1:
        raise ArithmeticError(
            f"weight normalization failed: sum = {format_rational(total)}"
        )
    return GridWeights(
        N=N, q=q, b=b, grid=[q ** (s + 1) for s in range(N)], w=weights
    )


@dataclass
class PastroFamily:
    """The polynomials P_0..P_n_max at a fixed admissible parameter triple."""

    params: QParams
    n_max: int
    polys: list[LaurentPoly]

    @classmethod
    def build(cls, params: QParams, n_max: int) -> "PastroFamily":
        """Validate the parameters eagerly, then build every degree at once."""
        _check_degree(n_max)
        params.require_valid(n_max)
        return cls(
            params=params,
            n_max=n_max,
            polys=[pastro_poly(n, params) for n in range(n_max + 1)],
        )


def verify_baxter_consistency(n_max: int, params: QParams) -> list[Check]:
    """Cross-check the coupled-recurrence route against every closed form.

    Covers: the alpha/beta recurrences against the three-term recurrence
    coefficients, the product formula for h_n, agreement of the iterated
    P_n with the eigenvalue-route P_n, agreement of Q_n(1/x) with the
    closed-form partner R_n, and both coupled recurrences restated with the
    eigenvalue-route polynomials substituted in.
    """
    _check_degree(n_max)
    context = params.describe() | {"n_max": str(n_max)}
    data = baxter_system(n_max, params)
    checks: list[Check] = []

    witness = None
    for n in range(1, n_max + 1):
        expected = -data.alpha[n - 1] * mu1(n, params)
        if data.alpha[n] != expected:
            witness = (
                f"n={n}: alpha_n {format_rational(data.alpha[n])}, "
                f"-alpha_(n-1)*mu1_n {format_rational(expected)}"
            )
            break
    checks.append(
        equality_check("baxter-alpha-recurrence", "alpha_n = -alpha_(n-1) mu1_n", context, witness)
    )

    witness = None
    for n in range(n_max):
        alpha_next = alpha_coefficient(n + 1, params)
        if alpha_next == 0:
            witness = f"n={n}: alpha_(n+1) = 0, ratio undefined"
            break
        expected = (mu2(n + 1, params) - mu1(n + 1, params)) / alpha_next
        if data.beta[n] != expected:
            witness = (
                f"n={n}: beta_n {format_rational(data.beta[n])}, "
                f"(mu2_(n+1) - mu1_(n+1))/alpha_(n+1) {format_rational(expected)}"
            )
            break
    checks.append(
        equality_check(
            "baxter-beta-recurrence",
            "beta_n = (mu2_(n+1) - mu1_(n+1)) / alpha_(n+1)",
            context,
            witness,
        )
    )

    witness = None
    product = Fraction(1)
    for n in range(n_max + 1):
        if data.h[n] != product:
            witness = (
                f"n={n}: h_n {format_rational(data.h[n])}, "
                f"prod {format_rational(product)}"
            )
            break
        product *= 1 - data.alpha[n] * data.beta[n]
    checks.append(
        equality_check(
            "baxter-norm-product", "h_n = prod_(k<n) (1 - alpha_k beta_k)", context, witness
        )
    )

    eigen_polys = [pastro_poly(n, params) for n in range(n_max + 1)]

    witness = None
    for n in range(n_max + 1):
        mismatch = poly_mismatch_witness(data.p_polys[n], eigen_polys[n])
        if mismatch:
            witness = f"n={n}: {mismatch}"
            break
    checks.append(
        equality_check(
            "baxter-pastro-match",
            "P_n from the coupled recurrences = P_n from the eigenvalue route",
            context,
            witness,
        )
    )

    witness = None
    for n in range(n_max + 1):
        mismatch = poly_mismatch_witness(
            data.q_polys[n].invert_variable(), biorthogonal_partner(n, params)
        )
        if mismatch:
            witness = f"n={n}: {mismatch}"
            break
    checks.append(
        equality_check("baxter-partner-match", "Q_n(1/x) = R_n(x)", context, witness)
    )

    witness = None
    for n in range(n_max):
        residual = (
            eigen_polys[n + 1]
            - x() * eigen_polys[n]
            + data.alpha[n] * (data.q_polys[n].invert_variable() * x(n))
        )
        if residual:
            witness = f"n={n}: residual {residual}"
            break
    checks.append(
        equality_check(
            "baxter-recurrence-P",
            "P_(n+1) = x P_n - alpha_n x^n Q_n(1/x)",
            context,
            witness,
        )
    )

    witness = None
    for n in range(n_max):
        residual = (
            data.q_polys[n + 1]
            - x() * data.q_polys[n]
            + data.beta[n] * (eigen_polys[n].invert_variable() * x(n))
        )
        if residual:
            witness = f"n={n}: residual {residual}"
            break
    checks.append(
        equality_check(
            "baxter-recurrence-Q",
            "Q_(n+1) = x Q_n - beta_n x^n P_n(1/x)",
            context,
            witness,
        )
    )
    return checks
