"""Finite grid representation, adjoints, and discrete biorthogonality.

At the truncation a = q^(1-N) the family P_0..P_(N-1) lives on the
geometric grid x_s = q^(s+1), s = 0..N-1, with rational weights w_s that
sum to 1. Operators restrict to N x N matrices acting on grid value
vectors (boundary terms vanish automatically because the edge coefficients
are zero), adjoints are taken with respect to the bilinear form
<f, g> = sum_s w_s f_s g_s, and the index/parameter flip tau relates the
adjoints back to the original operators. Everything is an exact rational
matrix identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .qcore import LaurentPoly, QParams, ResonantParameterError, Scalar, format_rational
from .pastro import (
    GridWeights,
    baxter_system,
    biorthogonal_partner,
    grid_weights,
    norm_constant,
    pastro_eigenvalue,
    pastro_poly,
)
from .report import (
    Check,
    equality_check,
    matrix_mismatch_witness,
    vector_mismatch_witness,
)

__all__ = [
    "Matrix",
    "mat_vec",
    "diag_times",
    "scalar_product",
    "weight_adjoint",
    "tau_parameter",
    "tau_conjugate",
    "tau_transform",
    "shift_plus_matrix",
    "shift_minus_matrix",
    "restricted_x_matrix",
    "restricted_y_matrix",
    "GridRep",
    "make_grid_rep",
    "grid_samples",
    "proportionality_witness",
    "verify_adjoint_structure",
    "verify_adjoint_gevp",
    "verify_biorthogonality",
]

Matrix = list[list[Fraction]]
MatrixBuilder = Callable[[int, Fraction, Fraction], Matrix]


def _zero_matrix(N: int) -> Matrix:
    return [[Fraction(0)] * N for _ in range(N)]


def mat_vec(matrix: Matrix, vector: list[Fraction]) -> list[Fraction]:
    return [
        sum((entry * value for entry, value in zip(row, vector)), Fraction(0))
        for row in matrix
    ]


def diag_times(diagonal: list[Fraction], matrix: Matrix) -> Matrix:
    return [[d * entry for entry in row] for d, row in zip(diagonal, matrix)]


def scalar_product(
    weights: list[Fraction], f: list[Fraction], g: list[Fraction]
) -> Fraction:
    """The bilinear form <f, g> = sum_s w_s f_s g_s (no conjugation)."""
    return sum((w * fs * gs for w, fs, gs in zip(weights, f, g)), Fraction(0))


def weight_adjoint(matrix: Matrix, weights: list[Fraction]) -> Matrix:
    """The adjoint with respect to the weighted form: W*[t][s] = (w_s/w_t) W[s][t]."""
    N = len(matrix)
    return [[weights[s] * matrix[s][t] / weights[t] for s in range(N)] for t in range(N)]


def tau_parameter(b: Scalar, q: Scalar, N: int) -> Fraction:
    """The parameter flip b -> q^(1-N)/b (an exact involution)."""
    b, q = Fraction(b), Fraction(q)
    return q ** (1 - N) / b


def tau_conjugate(matrix: Matrix) -> Matrix:
    """Reverse both indices: entry (s, t) -> (N-1-s, N-1-t), swapping T^+ and T^-."""
    N = len(matrix)
    return [[matrix[N - 1 - s][N - 1 - t] for t in range(N)] for s in range(N)]


def tau_transform(build: MatrixBuilder, N: int, b: Scalar, q: Scalar) -> Matrix:
    """The flip tau applied to a b-dependent matrix family.

    Rebuilds the matrix at the flipped parameter q^(1-N)/b and reverses
    both grid indices. Applying it twice returns the original matrix.
    """
    b, q = Fraction(b), Fraction(q)
    return tau_conjugate(build(N, tau_parameter(b, q, N), q))


def shift_plus_matrix(N: int, b: Scalar = 0, q: Scalar = 0) -> Matrix:
    """T^+ on grid values: (T^+ f)_s = f_(s+1), with f_N = 0."""
    matrix = _zero_matrix(N)
    for s in range(N - 1):
        matrix[s][s + 1] = Fraction(1)
    return matrix


def shift_minus_matrix(N: int, b: Scalar = 0, q: Scalar = 0) -> Matrix:
    """T^- on grid values: (T^- f)_s = f_(s-1), with f_(-1) = 0."""
    matrix = _zero_matrix(N)
    for s in range(1, N):
        matrix[s][s - 1] = Fraction(1)
    return matrix


def restricted_x_matrix(N: int, b: Scalar, q: Scalar) -> Matrix:
    """X on the grid: q(q^s - 1) T^- + q(1 - b q^s) I.

    The s = 0 subdiagonal coefficient q(q^0 - 1) vanishes, so the lower
    boundary condition is automatic.
    """
    b, q = Fraction(b), Fraction(q)
    matrix = _zero_matrix(N)
    for s in range(N):
        matrix[s][s] = q * (1 - b * q**s)
        if s >= 1:
            matrix[s][s - 1] = q * (q**s - 1)
    return matrix


def restricted_y_matrix(N: int, b: Scalar, q: Scalar) -> Matrix:
    """Y on the grid: (q^(s+1) - q^N) T^+ + (q^N - q^(s+1)/b) I.

    The s = N-1 superdiagonal coefficient q^N - q^N vanishes, so the upper
    boundary condition is automatic.
    """
    b, q = Fraction(b), Fraction(q)
    matrix = _zero_matrix(N)
    for s in range(N):
        matrix[s][s] = q**N - q ** (s + 1) / b
        if s <= N - 2:
            matrix[s][s + 1] = q ** (s + 1) - q**N
    return matrix


def _adjoint_x_closed_form(N: int, b: Fraction, q: Fraction) -> Matrix:
    """X* = b (q^(s+1) - q^N) T^+ + q (1 - b q^s) I."""
    matrix = _zero_matrix(N)
    for s in range(N):
        matrix[s][s] = q * (1 - b * q**s)
        if s <= N - 2:
            matrix[s][s + 1] = b * (q ** (s + 1) - q**N)
    return matrix


def _adjoint_y_closed_form(N: int, b: Fraction, q: Fraction) -> Matrix:
    """Y* = (q/b)(q^s - 1) T^- + (q^N - q^(s+1)/b) I."""
    matrix = _zero_matrix(N)
    for s in range(N):
        matrix[s][s] = q**N - q ** (s + 1) / b
        if s >= 1:
            matrix[s][s - 1] = (q / b) * (q**s - 1)
    return matrix


@dataclass
class GridRep:
    """The truncated representation: weights plus the four grid matrices."""

    N: int
    params: QParams
    weights: GridWeights
    matrices: dict[str, Matrix]


def make_grid_rep(N: int, b: Scalar, q: Scalar) -> GridRep:
    """Build weights, X, Y and their weighted adjoints at a = q^(1-N)."""
    weights = grid_weights(N, b, q)
    params = QParams(weights.q, weights.q ** (1 - N), weights.b)
    X = restricted_x_matrix(N, weights.b, weights.q)
    Y = restricted_y_matrix(N, weights.b, weights.q)
    return GridRep(
        N=N,
        params=params,
        weights=weights,
        matrices={
            "X": X,
            "Y": Y,
            "X*": weight_adjoint(X, weights.w),
            "Y*": weight_adjoint(Y, weights.w),
        },
    )


def grid_samples(poly: LaurentPoly, grid: list[Fraction]) -> list[Fraction]:
    """Evaluate a Laurent polynomial at every grid point."""
    return [poly.eval_at(point) for point in grid]


def proportionality_witness(u: list[Fraction], v: list[Fraction]) -> str | None:
    """Witness that u and v are NOT proportional by a nonzero scalar.

    Uses the cross-product criterion u_i v_j = u_j v_i for all pairs, which
    needs no division. Zero vectors are degenerate rather than proportional
    and raise, since every comparison downstream expects genuine
    eigenvectors.
    """
    if all(value == 0 for value in u) or all(value == 0 for value in v):
        raise ResonantParameterError("zero grid vector encountered (degenerate parameters)")
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] != u[j] * v[i]:
                return (
                    f"cross product at ({i},{j}): u_{i} v_{j} = "
                    f"{format_rational(u[i] * v[j])}, u_{j} v_{i} = "
                    f"{format_rational(u[j] * v[i])}"
                )
    witness = vector_mismatch_witness(u, [Fraction(0)] * len(u))
    paired = vector_mismatch_witness(v, [Fraction(0)] * len(v))
    if witness is None or paired is None:  # unreachable: zero vectors raise above
        raise AssertionError("proportionality reached with a zero vector")
    return None


def verify_adjoint_structure(N: int, b: Scalar, q: Scalar) -> list[Check]:
    """Check every structural adjoint identity of the grid representation.

    Covers the closed forms of (T^+)*, (T^-)*, X*, Y*, the defining pairing
    property <W f, g> = <f, W* g> on all basis pairs, involutivity of the
    adjoint, the tau-flip expressions X* = -b q^s tau(X) and
    Y* = -(1/b) q^(s+1-N) tau(Y), and tau o tau = id.
    """
    rep = make_grid_rep(N, b, q)
    b, q = rep.weights.b, rep.weights.q
    w = rep.weights.w
    context = {"N": str(N), "b": format_rational(b), "q": format_rational(q)}
    checks: list[Check] = []

    adjoint_plus = weight_adjoint(shift_plus_matrix(N), w)
    closed_plus = _zero_matrix(N)
    for s in range(1, N):
        closed_plus[s][s - 1] = q * (1 - q**s) / (b * (q**N - q**s))
    checks.append(
        equality_check(
            "adjoint-shift-plus",
            "(T^+)* = [q (1 - q^s) / (b (q^N - q^s))] T^-",
            context,
            matrix_mismatch_witness(adjoint_plus, closed_plus),
        )
    )

    adjoint_minus = weight_adjoint(shift_minus_matrix(N), w)
    closed_minus = _zero_matrix(N)
    for s in range(N - 1):
        closed_minus[s][s + 1] = b * (q**N - q ** (s + 1)) / (q * (1 - q ** (s + 1)))
    checks.append(
        equality_check(
            "adjoint-shift-minus",
            "(T^-)* = [b (q^N - q^(s+1)) / (q (1 - q^(s+1)))] T^+",
            context,
            matrix_mismatch_witness(adjoint_minus, closed_minus),
        )
    )

    checks.append(
        equality_check(
            "adjoint-X-closed-form",
            "X* = b (q^(s+1) - q^N) T^+ + q (1 - b q^s) I",
            context,
            matrix_mismatch_witness(rep.matrices["X*"], _adjoint_x_closed_form(N, b, q)),
        )
    )
    checks.append(
        equality_check(
            "adjoint-Y-closed-form",
            "Y* = (q/b)(q^s - 1) T^- + (q^N - q^(s+1)/b) I",
            context,
            matrix_mismatch_witness(rep.matrices["Y*"], _adjoint_y_closed_form(N, b, q)),
        )
    )

    for name in ("X", "Y"):
        matrix, adjoint = rep.matrices[name], rep.matrices[f"{name}*"]
        witness = None
        for i in range(N):
            basis_i = [Fraction(int(t == i)) for t in range(N)]
            left_image = mat_vec(matrix, basis_i)
            right_image = mat_vec(adjoint, basis_i)
            for j in range(N):
                basis_j = [Fraction(int(t == j)) for t in range(N)]
                left = scalar_product(w, left_image, basis_j)
                right = scalar_product(w, basis_i, mat_vec(adjoint, basis_j))
                if left != right:
                    witness = (
                        f"basis pair ({i},{j}): <W e_{i}, e_{j}> = "
                        f"{format_rational(left)}, <e_{i}, W* e_{j}> = "
                        f"{format_rational(right)}"
                    )
                    break
            if witness:
                break
        checks.append(
            equality_check(
                f"adjoint-pairing-{name}",
                f"<{name} f, g> = <f, {name}* g> for all basis pairs",
                context,
                witness,
            )
        )
        checks.append(
            equality_check(
                f"adjoint-involution-{name}",
                f"({name}*)* = {name}",
                context,
                matrix_mismatch_witness(weight_adjoint(adjoint, w), matrix),
            )
        )

    tau_x = tau_transform(restricted_x_matrix, N, b, q)
    checks.append(
        equality_check(
            "adjoint-X-tau",
            "X* = diag(-b q^s) tau(X)",
            context,
            matrix_mismatch_witness(
                rep.matrices["X*"], diag_times([-b * q**s for s in range(N)], tau_x)
            ),
        )
    )
    tau_y = tau_transform(restricted_y_matrix, N, b, q)
    checks.append(
        equality_check(
            "adjoint-Y-tau",
            "Y* = diag(-(1/b) q^(s+1-N)) tau(Y)",
            context,
            matrix_mismatch_witness(
                rep.matrices["Y*"],
                diag_times([-(1 / b) * q ** (s + 1 - N) for s in range(N)], tau_y),
            ),
        )
    )

    for name, build in (("X", restricted_x_matrix), ("Y", restricted_y_matrix)):
        def double_flip(size: int, inner_b: Fraction, inner_q: Fraction, _build=build) -> Matrix:
            return tau_transform(_build, size, inner_b, inner_q)

        checks.append(
            equality_check(
                f"tau-involution-{name}",
                f"tau(tau({name})) = {name}",
                context,
                matrix_mismatch_witness(
                    tau_transform(double_flip, N, b, q), build(N, b, q)
                ),
            )
        )
    return checks


def verify_adjoint_gevp(n: int, N: int, b: Scalar, q: Scalar) -> list[Check]:
    """Check the adjoint eigenvalue problem and the partner cross-derivations.

    The flipped eigenvector P*_n has grid values P_n(q^(N-s); a, q^(1-N)/b).
    Checks, with lambda_n = -q^n/b taken at the original b:
      Y* P*_n = lambda_n X* P*_n,
      X* P*_n  prop  R_n(x_s)                      (closed-form partner),
      X* P*_n  prop  P_n(q^(N-s); q^(1-N), q^(2-N)/b)  (parameter flip),
      X* P*_n  prop  Q_n(1/x_s)                    (coupled-recurrence route),
    where 'prop' means proportional by a single nonzero scalar.
    """
    rep = make_grid_rep(N, b, q)
    b, q = rep.weights.b, rep.weights.q
    if not 0 <= n < N:
        raise ValueError(f"degree must lie in [0, {N - 1}], got {n}")
    context = {"N": str(N), "n": str(n), "b": format_rational(b), "q": format_rational(q)}

    flipped = QParams(q, rep.params.a, tau_parameter(b, q, N))
    p_star_poly = pastro_poly(n, flipped)
    p_star = [p_star_poly.eval_at(q ** (N - s)) for s in range(N)]

    lam = pastro_eigenvalue(n, rep.params)
    lhs = mat_vec(rep.matrices["Y*"], p_star)
    rhs = [lam * value for value in mat_vec(rep.matrices["X*"], p_star)]
    checks = [
        equality_check(
            "adjoint-gevp",
            "Y* P*_n = lambda_n X* P*_n with P*_n(s) = P_n(q^(N-s); a, q^(1-N)/b)",
            context,
            vector_mismatch_witness(lhs, rhs),
        )
    ]

    image = mat_vec(rep.matrices["X*"], p_star)
    partner_samples = grid_samples(
        biorthogonal_partner(n, rep.params), rep.weights.grid
    )
    checks.append(
        equality_check(
            "adjoint-partner-closed-form",
            "X* P*_n prop R_n(x_s)",
            context,
            proportionality_witness(image, partner_samples),
        )
    )

    reflected = QParams(q, rep.params.a, q ** (2 - N) / b)
    flip_samples = [pastro_poly(n, reflected).eval_at(q ** (N - s)) for s in range(N)]
    checks.append(
        equality_check(
            "adjoint-partner-parameter-flip",
            "X* P*_n prop P_n(q^(N-s); q^(1-N), q^(2-N)/b)",
            context,
            proportionality_witness(image, flip_samples),
        )
    )

    baxter = baxter_system(n, rep.params)
    baxter_samples = grid_samples(
        baxter.q_polys[n].invert_variable(), rep.weights.grid
    )
    checks.append(
        equality_check(
            "adjoint-partner-baxter",
            "X* P*_n prop Q_n(1/x_s)",
            context,
            proportionality_witness(image, baxter_samples),
        )
    )
    return checks


def verify_biorthogonality(
    N: int, b: Scalar, q: Scalar
) -> tuple[Matrix, list[Check]]:
    """Check discrete biorthogonality on the grid and its degeneration at N.

    Builds the Gram matrix G[n][m] = sum_s w_s P_n(x_s) R_m(x_s) for
    n, m < N and checks: G = diag(h_n) with every h_n nonzero, the weights
    sum to 1, h_N = 0, P_N = prod_s (x - q^(s+1)) with simple roots (formal
    derivative nonzero at every grid point), and the weight-origin formula
    w_s = h_(N-1) / (P'_N(x_s) R_(N-1)(x_s)).
    """
    rep = make_grid_rep(N, b, q)
    b, q = rep.weights.b, rep.weights.q
    w, grid = rep.weights.w, rep.weights.grid
    params = rep.params
    context = {"N": str(N), "b": format_rational(b), "q": format_rational(q)}

    polys = [pastro_poly(n, params) for n in range(N)]
    partners = [biorthogonal_partner(m, params) for m in range(N)]
    poly_values = [grid_samples(p, grid) for p in polys]
    partner_values = [grid_samples(r, grid) for r in partners]
    h = [norm_constant(n, params) for n in range(N)]

    gram = [
        [scalar_product(w, poly_values[n], partner_values[m]) for m in range(N)]
        for n in range(N)
    ]
    expected = [
        [h[n] if n == m else Fraction(0) for m in range(N)] for n in range(N)
    ]
    checks = [
        equality_check(
            "gram-diagonal",
            "sum_s w_s P_n(x_s) R_m(x_s) = h_n delta_nm",
            context,
            matrix_mismatch_witness(gram, expected),
        )
    ]

    witness = None
    for n in range(N):
        if h[n] == 0:
            witness = f"h_{n} = 0"
            break
    checks.append(
        equality_check("norm-nonzero", "h_n != 0 for n < N", context, witness)
    )

    total = sum(w, Fraction(0))
    checks.append(
        equality_check(
            "weights-normalized",
            "sum_s w_s = 1",
            context,
            None if total == 1 else f"sum = {format_rational(total)}",
        )
    )

    h_top = norm_constant(N, params)
    checks.append(
        equality_check(
            "norm-truncation",
            "h_N = 0 at a = q^(1-N)",
            context,
            None if h_top == 0 else f"h_N = {format_rational(h_top)}",
        )
    )

    p_top = pastro_poly(N, params)
    target = LaurentPoly.one()
    for point in grid:
        target = target * LaurentPoly({1: 1, 0: -point})
    checks.append(
        equality_check(
            "truncation-polynomial",
            "P_N = prod_s (x - q^(s+1))",
            context,
            vector_mismatch_witness(
                [p_top.coefficient(k) for k in range(N + 1)],
                [target.coefficient(k) for k in range(N + 1)],
            ),
        )
    )

    derivative = p_top.derivative()
    witness = None
    for s, point in enumerate(grid):
        if p_top.eval_at(point) != 0:
            witness = f"P_N(x_{s}) = {format_rational(p_top.eval_at(point))}"
            break
        if derivative.eval_at(point) == 0:
            witness = f"P'_N(x_{s}) = 0 (multiple root)"
            break
    checks.append(
        equality_check(
            "truncation-simple-roots",
            "P_N(x_s) = 0 and P'_N(x_s) != 0 for every grid point",
            context,
            witness,
        )
    )

    witness = None
    for s, point in enumerate(grid):
        denominator = derivative.eval_at(point) * partner_values[N - 1][s]
        if denominator == 0:
            witness = f"s={s}: P'_N(x_s) R_(N-1)(x_s) = 0"
            break
        if w[s] != h[N - 1] / denominator:
            witness = (
                f"s={s}: w_s = {format_rational(w[s])}, "
                f"h_(N-1)/(P'_N(x_s) R_(N-1)(x_s)) = "
                f"{format_rational(h[N - 1] / denominator)}"
            )
            break
    checks.append(
        equality_check(
            "weight-origin",
            "w_s = h_(N-1) / (P'_N(x_s) R_(N-1)(x_s))",
            context,
            witness,
        )
    )
    return gram, checks
