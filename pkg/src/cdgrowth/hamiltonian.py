"""Conserved quantities of the exponential growth system and the derived
production-function parameters.

The growth model dx_i/dt = b_i x_i on (x_1, x_2, x_3) = (labor, capital,
output) is Hamiltonian with respect to the quadratic degenerate Poisson
bivector with components pi^{12} = -x_1 x_2, pi^{13} = -x_1 x_3,
pi^{23} = -x_2 x_3 (antisymmetric), with Hamiltonian H = sum_k c_k ln x_k:
contracting the bivector with dH gives the vector field

    X_H = ( -x_1 (c_2 + c_3),  x_2 (c_1 - c_3),  x_3 (c_1 + c_2) ),

which equals (b_1 x_1, b_2 x_2, b_3 x_3) exactly when A c = b for the fixed
skew matrix A below.  A has rank 2 and the system is solvable only under the
condition b_1 + b_3 = b_2, which measured growth rates generally violate.

The two-Hamiltonian route drops that condition: with

    H_1 = b ln x_1 + ln x_2 + a ln x_3,
    H_2 = ln x_1 + a ln x_2 + b ln x_3,

both are conserved along the flow whenever

    b b_1 + b_2 + a b_3 = 0   and   b_1 + a b_2 + b b_3 = 0,

a 2x2 linear system in (a, b) with determinant b_3^2 - b_1 b_2.  Their
difference

    H_3 = H_1 - H_2 = (b-1) ln x_1 + (1-a) ln x_2 + (a-b) ln x_3

is a first integral; solving H_3 = const for x_3 yields a Cobb-Douglas
production function with elasticities alpha = (a-1)/(a-b),
beta = (1-b)/(a-b) (equivalently (b_3-b_1)/(b_2-b_1) and
(b_3-b_2)/(b_1-b_2)) and total factor productivity A = exp(H_3 / (a-b)).
On data, H_3 is evaluated per year and summarized by its mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import SeriesTable
from .errors import DegeneracyError, InconsistentSystemError

# Skew-symmetric coefficient matrix of the rank-2 system A c = b linking the
# single-Hamiltonian coefficients c to the growth rates.
SKEW_MATRIX = np.array(
    [
        [0.0, -1.0, -1.0],
        [1.0, 0.0, -1.0],
        [1.0, 1.0, 0.0],
    ]
)

_RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class BiHamiltonianSolution:
    """Solved pair (a, b) of the two-Hamiltonian conditions.

    ``det`` is the system determinant b_3^2 - b_1 b_2 kept as a degeneracy
    guard; ``a_minus_b`` is cached because every downstream formula divides
    by it.  Instances produced by :func:`solve_ab` satisfy both conservation
    conditions to within 1e-10.
    """

    a: float
    b: float
    det: float
    a_minus_b: float


@dataclass(frozen=True)
class Elasticities:
    """Output elasticities of the derived production function; alpha + beta = 1."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        tol = 1e-12 * max(1.0, abs(self.alpha), abs(self.beta))
        if not abs(self.alpha + self.beta - 1.0) <= tol:
            raise ValueError(
                f"elasticities must sum to 1, got {self.alpha + self.beta!r}"
            )


@dataclass(frozen=True)
class H3Stats:
    """The first integral H_3 evaluated over a data table.

    ``coefficients`` are the weights (b-1, 1-a, a-b) applied to
    (ln labor, ln capital, ln output); they sum to zero, so any year with
    equal logs gives H_3 = 0.  ``variance`` uses the sample convention
    (divisor n-1); the population value (divisor n) is reported alongside.
    """

    coefficients: tuple[float, float, float]
    years: np.ndarray
    values: np.ndarray
    mean: float
    variance: float
    variance_population: float

    @property
    def per_year(self) -> list[tuple[int, float]]:
        return [(int(y), float(v)) for y, v in zip(self.years, self.values)]


@dataclass(frozen=True)
class HamiltonianCVector:
    """Coefficients of the single Hamiltonian H = sum c_k ln x_k.

    The solution of A c = b is a line; ``free_parameter_note`` records which
    normalization pinned it down.  ``rates`` keeps the (b_1, b_2, b_3) the
    vector was solved against so the field identity can be re-checked.
    """

    c1: float
    c2: float
    c3: float
    rates: tuple[float, float, float]
    free_parameter_note: str


def solve_ab(b1: float, b2: float, b3: float, tol: float = 1e-12) -> BiHamiltonianSolution:
    """Solve the two conservation conditions for (a, b).

    The unique solution is a = (b_1^2 - b_2 b_3) / (b_3^2 - b_1 b_2) and
    b = (b_2^2 - b_1 b_3) / (b_3^2 - b_1 b_2), defined whenever the
    determinant b_3^2 - b_1 b_2 is nonzero.

    Raises
    ------
    DegeneracyError
        |b_3^2 - b_1 b_2| <= tol relative to max(|b_1 b_2|, b_3^2), e.g. for
        equal growth rates; the two-Hamiltonian construction does not apply.
    """
    det = b3 * b3 - b1 * b2
    scale = max(abs(b1 * b2), b3 * b3)
    if abs(det) <= tol * scale or scale == 0.0:
        raise DegeneracyError(
            f"degenerate system: b_output^2 - b_labor*b_capital = {det:.6g} "
            f"vanishes (relative tolerance {tol:g})"
        )
    a = (b1 * b1 - b2 * b3) / det
    b = (b2 * b2 - b1 * b3) / det
    r1 = b * b1 + b2 + a * b3
    r2 = b1 + a * b2 + b * b3
    if max(abs(r1), abs(r2)) > _RESIDUAL_TOL * max(1.0, abs(a), abs(b)):
        raise DegeneracyError(
            f"conservation residuals too large ({r1:.3g}, {r2:.3g}); "
            "system is numerically degenerate"
        )
    return BiHamiltonianSolution(a=a, b=b, det=det, a_minus_b=a - b)


def elasticities_from_rates(b1: float, b2: float, b3: float) -> Elasticities:
    """Elasticities straight from the growth rates.

    alpha = (b_3 - b_1)/(b_2 - b_1), beta = (b_3 - b_2)/(b_1 - b_2); the two
    sum to one identically.  Both are positive exactly when b_2 > b_3 > b_1
    or b_2 < b_3 < b_1.
    """
    if b1 == b2:
        raise DegeneracyError(
            "labor and capital growth rates coincide; elasticities are undefined"
        )
    alpha = (b3 - b1) / (b2 - b1)
    beta = (b3 - b2) / (b1 - b2)
    return Elasticities(alpha=alpha, beta=beta)


def elasticities_from_ab(solution: BiHamiltonianSolution) -> Elasticities:
    """Elasticities from the solved pair: alpha = (a-1)/(a-b), beta = (1-b)/(a-b).

    Agrees with :func:`elasticities_from_rates` on the rates the solution was
    built from, to within 1e-10.
    """
    if solution.a_minus_b == 0.0:
        raise DegeneracyError("a = b: elasticities are undefined")
    alpha = (solution.a - 1.0) / solution.a_minus_b
    beta = (1.0 - solution.b) / solution.a_minus_b
    return Elasticities(alpha=alpha, beta=beta)


def h3_series(table: SeriesTable, solution: BiHamiltonianSolution) -> H3Stats:
    """Evaluate H_3 = (b-1) ln L + (1-a) ln K + (a-b) ln Y over the table."""
    w_labor = solution.b - 1.0
    w_capital = 1.0 - solution.a
    w_output = solution.a_minus_b
    values = w_labor * table.ln_labor + w_capital * table.ln_capital + w_output * table.ln_output
    n = len(table)
    mean = float(values.mean())
    centered = values - mean
    ss = float(centered @ centered)
    return H3Stats(
        coefficients=(w_labor, w_capital, w_output),
        years=table.years,
        values=values,
        mean=mean,
        variance=ss / (n - 1),
        variance_population=ss / n,
    )


def tfp(h3_mean: float, solution: BiHamiltonianSolution) -> float:
    """Total factor productivity A = exp(H_3 / (a - b)) at the given H_3 level."""
    if solution.a_minus_b == 0.0:
        raise DegeneracyError("a = b: total factor productivity is undefined")
    return math.exp(h3_mean / solution.a_minus_b)


def single_hamiltonian_c(
    b1: float,
    b2: float,
    b3: float,
    c3: float = 0.0,
    tol: float = 1e-9,
) -> HamiltonianCVector:
    """Solve the rank-2 system A c = b for the single-Hamiltonian coefficients.

    The rows read -c_2 - c_3 = b_1, c_1 - c_3 = b_2, c_1 + c_2 = b_3; they
    are simultaneously solvable only when b_1 + b_3 = b_2.  With ``c3`` fixed
    as the free parameter, c_1 = b_2 + c_3 and c_2 = b_3 - c_1.

    Raises
    ------
    InconsistentSystemError
        |b_1 + b_3 - b_2| > tol.  The message reports the defect
        b_2 - b_1 - b_3; measured data generally has a nonzero defect, which
        is exactly why the two-Hamiltonian construction exists.
    """
    defect = b2 - b1 - b3
    if abs(defect) > tol:
        raise InconsistentSystemError(
            "single-Hamiltonian system is inconsistent: solvability requires "
            f"b_labor + b_output = b_capital, but the defect "
            f"b_capital - b_labor - b_output = {defect:.8g} exceeds {tol:g}"
        )
    c1 = b2 + c3
    c2 = b3 - c1
    vec = HamiltonianCVector(
        c1=c1,
        c2=c2,
        c3=c3,
        rates=(b1, b2, b3),
        free_parameter_note=f"c3 fixed to {c3!r}; solutions move along the kernel direction (1, -1, 1)",
    )
    residual = SKEW_MATRIX @ np.array([c1, c2, c3]) - np.array([b1, b2, b3])
    if np.max(np.abs(residual)) > max(tol, _RESIDUAL_TOL):
        raise InconsistentSystemError(
            f"A c = b residual {residual} exceeds tolerance after solving"
        )
    return vec


def hamiltonian_vector_field(c: HamiltonianCVector, x) -> np.ndarray:
    """Contract the quadratic Poisson bivector with dH at the point x.

    Builds the antisymmetric component matrix pi^{ij} = -x_i x_j (i < j) and
    applies it to grad H = (c_1/x_1, c_2/x_2, c_3/x_3).
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (3,):
        raise ValueError(f"x must be a point in R^3, got shape {x.shape}")
    if np.any(x <= 0):
        raise ValueError("all coordinates must be strictly positive")
    bivector = np.array(
        [
            [0.0, -x[0] * x[1], -x[0] * x[2]],
            [x[0] * x[1], 0.0, -x[1] * x[2]],
            [x[0] * x[2], x[1] * x[2], 0.0],
        ]
    )
    grad_h = np.array([c.c1, c.c2, c.c3]) / x
    return bivector @ grad_h


def hamiltonian_field_check(c: HamiltonianCVector, x) -> np.ndarray:
    """Componentwise difference between the Hamiltonian field and the growth field.

    For a consistent coefficient vector the contraction pi dH reproduces
    (b_1 x_1, b_2 x_2, b_3 x_3), so the returned triple is zero up to
    rounding (within 1e-9 relative).
    """
    field = hamiltonian_vector_field(c, x)
    x = np.asarray(x, dtype=float)
    return field - np.array(c.rates) * x


def conservation_check(
    solution: BiHamiltonianSolution, b1: float, b2: float, b3: float
) -> tuple[float, float, float]:
    """Time derivatives of (H_1, H_2, H_3) along the exact growth flow.

    Along ln x_i(t) = C_i + b_i t these are dH_1/dt = b b_1 + b_2 + a b_3,
    dH_2/dt = b_1 + a b_2 + b b_3, and their difference; all vanish (within
    1e-10) when (a, b) solves the conservation conditions for these rates.
    """
    dh1 = solution.b * b1 + b2 + solution.a * b3
    dh2 = b1 + solution.a * b2 + solution.b * b3
    return (dh1, dh2, dh1 - dh2)
