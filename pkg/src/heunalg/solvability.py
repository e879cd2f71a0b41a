"""Indicial analysis, solvability gates, series and polynomial solutions.

The seed exponent lambda of a formal solution x^lambda * (1 + ...) satisfies
F_val(lambda) = a1 lambda(lambda-1) + a5 lambda + a8 = 0.  Solutions are then
grown by the inverse-diagonal fixed-point iteration

    psi_{k+1} = x^lambda - Finv (P+ + P-) psi_k,

where Finv divides the coefficient of x^sigma by F_val(sigma).  P+ pushes
exponents up, P- pushes them down, so on the branch with P- = 0 the series
ascends and on the branch with P+ = 0 it descends; whenever a generated
exponent hits another root of F_val the iteration is resonant and aborts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import OdeSpec, build_generators, full_operator
from .errors import (
    DegenerateDiagonalError,
    NoIndicialRootError,
    ResonantExponentError,
)
from .operators import GeneralizedSeries, RationalLike, as_fraction
from .polynomials import (
    is_rational_square,
    poly_interpolate,
    quadratic_rational_roots,
    rational_roots,
)

DEFAULT_HORIZON = 32


@dataclass(frozen=True)
class IndicialRoots:
    """Roots of a1 L^2 + (a5-a1) L + a8 = 0.

    Rational roots are carried directly; irrational ones are reported through
    (discriminant, rational_part) with the irrational flag set.  When a1 = 0
    the single root sits in lambda_plus and lambda_minus is absent.
    """

    lambda_plus: Fraction | None
    lambda_minus: Fraction | None
    discriminant: Fraction
    rational_part: Fraction | None
    irrational: bool
    degenerate: bool


@dataclass(frozen=True)
class SolvabilityVerdict:
    exactly_solvable: bool
    quasi_exactly_solvable: bool
    trivial_diagonal: bool
    reduced_form: dict[str, Fraction | None]
    note: str | None


@dataclass(frozen=True)
class TerminationResult:
    """Positive n with P+ x^(n-1) = 0; all_n marks an identically-zero P+."""

    values: tuple[Fraction, ...]
    all_n: bool


@dataclass(frozen=True)
class PolynomialSolutionResult:
    """Null space of the operator on {x^0..x^degree}, plus the spectral report.

    basis holds coefficient tuples (c_0..c_degree).  When the basis is empty,
    spectral_a8 lists the rational values of a8 at which the square subsystem
    determinant vanishes (the quasi-exact eigenvalue condition).
    """

    degree: int
    basis: tuple[tuple[Fraction, ...], ...]
    spectral_a8: tuple[Fraction, ...]
    verified: bool


def indicial_roots(spec: OdeSpec) -> IndicialRoots:
    a1, a5, a8 = spec.a1, spec.a5, spec.a8
    disc = (a5 - a1) ** 2 - 4 * a1 * a8
    if a1 == 0:
        if a5 == 0:
            if a8 == 0:
                raise DegenerateDiagonalError("F is identically zero: every exponent is a root")
            raise NoIndicialRootError("F is the nonzero constant a8; no exponent annihilates it")
        return IndicialRoots(
            lambda_plus=-a8 / a5,
            lambda_minus=None,
            discriminant=disc,
            rational_part=None,
            irrational=False,
            degenerate=False,
        )
    rational_part = -(a5 - a1) / (2 * a1)
    square, root = is_rational_square(disc)
    if not square:
        return IndicialRoots(
            lambda_plus=None,
            lambda_minus=None,
            discriminant=disc,
            rational_part=rational_part,
            irrational=True,
            degenerate=False,
        )
    return IndicialRoots(
        lambda_plus=rational_part + root / (2 * a1),
        lambda_minus=rational_part - root / (2 * a1),
        discriminant=disc,
        rational_part=rational_part,
        irrational=False,
        degenerate=(disc == 0),
    )


def check_solvability(spec: OdeSpec) -> SolvabilityVerdict:
    """Exactly solvable iff a0 = a4 = a7 = 0 (no raising part); quasi-exactly
    solvable iff a2 = a6 = 0 (no lowering part).

    The all-diagonal case sets both flags degenerately.  Systems outside both
    gates that still admit a termination level are noted: polynomial solutions
    can exist beyond these conditions.
    """
    exact = spec.a0 == 0 and spec.a4 == 0 and spec.a7 == 0
    qes_gate = spec.a2 == 0 and spec.a6 == 0
    trivial = exact and qes_gate
    quasi = qes_gate and (not exact or trivial)

    reduced: dict[str, Fraction | None] = {}
    if exact:
        reduced = {
            "a2/a1": spec.a2 / spec.a1 if spec.a1 != 0 else None,
            "a5/a1": spec.a5 / spec.a1 if spec.a1 != 0 else None,
            "a6/a5": spec.a6 / spec.a5 if spec.a5 != 0 else None,
            "a8/a1": spec.a8 / spec.a1 if spec.a1 != 0 else None,
        }
    elif quasi:
        reduced = {
            "a1/a0": spec.a1 / spec.a0 if spec.a0 != 0 else None,
            "a4/a0": spec.a4 / spec.a0 if spec.a0 != 0 else None,
            "a5/a4": spec.a5 / spec.a4 if spec.a4 != 0 else None,
            "a7/a0": spec.a7 / spec.a0 if spec.a0 != 0 else None,
            "a8/a7": spec.a8 / spec.a7 if spec.a7 != 0 else None,
        }

    note = None
    if trivial:
        note = "trivial diagonal case: no raising or lowering part at all"
    elif not exact and not quasi:
        term = termination_condition(spec)
        if term.all_n or term.values:
            note = "QES outside sl(2) conditions: termination levels exist despite a2/a6 != 0"
    return SolvabilityVerdict(
        exactly_solvable=exact,
        quasi_exactly_solvable=quasi,
        trivial_diagonal=trivial,
        reduced_form=reduced,
        note=note,
    )


def series_solution(
    spec: OdeSpec,
    lam: RationalLike,
    iterations: int,
    horizon: int | None = None,
) -> GeneralizedSeries:
    series, _ = series_solution_with_report(spec, lam, iterations, horizon)
    return series


def series_solution_with_report(
    spec: OdeSpec,
    lam: RationalLike,
    iterations: int,
    horizon: int | None = None,
) -> tuple[GeneralizedSeries, "SeriesReport"]:
    """Fixed-point iteration from the seed x^lam; see the module docstring.

    Requires F_val(lam) = 0.  Raises ResonantExponentError when a generated
    exponent with a nonzero coefficient has F_val = 0.  Shifts outside
    |m| <= horizon are dropped and counted.
    """
    lam = as_fraction(lam)
    if spec.f_value(lam) != 0:
        raise ValueError(f"lambda = {lam} is not an indicial root: F({lam}) = {spec.f_value(lam)}")
    window = DEFAULT_HORIZON if horizon is None else horizon
    gens = build_generators(spec)
    ladder = gens.p_plus + gens.p_minus
    seed = GeneralizedSeries.monomial(lam)
    psi = seed
    dropped = 0
    stationary_at: int | None = None
    for k in range(iterations):
        pushed = ladder.apply(psi)
        inverted: dict[int, Fraction] = {}
        for m, c in pushed.items():
            f_val = spec.f_value(lam + m)
            if f_val == 0:
                raise ResonantExponentError(
                    f"F vanishes at generated exponent {lam + m} (shift {m})"
                )
            inverted[m] = c / f_val
        nxt = seed - GeneralizedSeries(lam, inverted)
        nxt, d = nxt.truncate_window(-window, window)
        dropped += d
        if nxt == psi:
            stationary_at = k
            break
        psi = nxt
    return psi, SeriesReport(dropped=dropped, stationary_at=stationary_at)


@dataclass(frozen=True)
class SeriesReport:
    dropped: int
    stationary_at: int | None


def termination_condition(spec: OdeSpec) -> TerminationResult:
    """Rational n > 0 with a0(n-1)(n-2) + a4(n-1) + a7 = 0, i.e. P+ x^(n-1) = 0."""
    a0, a4, a7 = spec.a0, spec.a4, spec.a7
    if a0 == 0 and a4 == 0:
        if a7 == 0:
            return TerminationResult(values=(), all_n=True)
        return TerminationResult(values=(), all_n=False)
    # quadratic in t = n - 1: a0 t^2 + (a4 - a0) t + a7
    roots = quadratic_rational_roots(a0, a4 - a0, a7)
    values = tuple(sorted(t + 1 for t in roots if t + 1 > 0))
    return TerminationResult(values=values, all_n=False)


def _operator_matrix(spec: OdeSpec, degree: int) -> list[list[Fraction]]:
    """Exact matrix of f1 D^2 + f2 D + f3 on {x^0..x^degree}; rows x^0..x^(degree+1).

    Column c collects the image of x^c: F_val(c) on row c, the raising factor
    on row c+1, the lowering factor on row c-1 (the lowering factor at 0
    vanishes, so polynomials map to polynomials).
    """
    rows, cols = degree + 2, degree + 1
    mat = [[Fraction(0)] * cols for _ in range(rows)]
    for c in range(cols):
        mc = Fraction(c)
        mat[c][c] = spec.f_value(mc)
        mat[c + 1][c] = spec.raise_factor(mc)
        if c > 0:
            mat[c - 1][c] += spec.lower_factor(mc)
    return mat


def _gauss_nullspace(mat: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Null-space basis by Gauss-Jordan elimination with exact division."""
    rows = [list(r) for r in mat]
    n_rows, n_cols = len(rows), len(rows[0]) if rows else 0
    pivot_cols: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [vi - factor * vr for vi, vr in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == n_rows:
            break
    free_cols = [c for c in range(n_cols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * n_cols
        vec[fc] = Fraction(1)
        for pr, pc in enumerate(pivot_cols):
            vec[pc] = -rows[pr][fc]
        basis.append(vec)
    return basis


def polynomial_solution(spec: OdeSpec, degree: int) -> PolynomialSolutionResult:
    """Exact null space of the operator on the monomial basis {x^0..x^degree}.

    When no polynomial solution exists, the rational a8 values that make the
    (degree+1)-square subsystem singular are reported; a8 enters that block
    only on the diagonal, so its determinant is a monic-in-a8 characteristic
    polynomial recovered by exact interpolation.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    mat = _operator_matrix(spec, degree)
    basis = _gauss_nullspace(mat)
    verified = True
    op = full_operator(spec)
    for vec in basis:
        series = GeneralizedSeries(0, {m: c for m, c in enumerate(vec)})
        if not op.apply(series).is_zero():
            verified = False
    spectral: tuple[Fraction, ...] = ()
    if not basis:
        square = [row[:] for row in mat[: degree + 1]]
        det_points = []
        for t in range(degree + 3):
            shifted = [
                [
                    square[i][k] + (Fraction(t) if i == k else Fraction(0))
                    for k in range(degree + 1)
                ]
                for i in range(degree + 1)
            ]
            det_points.append((Fraction(t), _determinant(shifted)))
        char = poly_interpolate(det_points)
        # det vanishes at a8 = spec.a8 + t, so report the shifted roots
        spectral = tuple(spec.a8 + t for t in rational_roots(char))
    return PolynomialSolutionResult(
        degree=degree,
        basis=tuple(tuple(v) for v in basis),
        spectral_a8=spectral,
        verified=verified,
    )


def _determinant(mat: list[list[Fraction]]) -> Fraction:
    """Exact determinant by Bareiss elimination."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    m = [row[:] for row in mat]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for jcol in range(k + 1, n):
                m[i][jcol] = (m[k][k] * m[i][jcol] - m[i][k] * m[k][jcol]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
