"""Residual evaluator and the two independent exact oracles."""

import random
from fractions import Fraction as F

import numpy as np
import pytest

from heunalg import (
    OdeSpec,
    ResonantExponentError,
    hypergeometric_oracle,
    kink_sigma_ode,
    kink_spec,
    kink_zero_mode,
    nullspace_oracle,
    polynomial_solution,
    residual_sigma,
    series_solution,
)

GRID = np.linspace(-10.0, 10.0, 401).tolist()


def exact_branch_spec(lam1, lam2, a1=F(1), a2=F(1), a6=F(3)):
    return OdeSpec(
        a1=a1, a2=a2,
        a5=a1 * (1 - lam1 - lam2),
        a6=a6,
        a8=a1 * lam1 * lam2,
    )


class TestResidualSigma:
    def test_zero_function(self):
        ode = kink_sigma_ode(F(1), F(0))
        r = residual_sigma(ode, lambda s: 0.0, GRID)
        assert r.max_abs_residual == 0.0 and r.max_rel_residual == 0.0

    def test_zero_mode_residual_small(self):
        ode = kink_sigma_ode(F(1), F(0))
        r = residual_sigma(ode, kink_zero_mode(1.0), GRID)
        assert r.max_rel_residual < 1e-8

    def test_sensitivity_to_wrong_nu(self):
        # shifting nu^2 by 1 turns an exact solution into a loud failure
        ode = kink_sigma_ode(F(1), F(1, 8))  # nu^2 = 1 instead of 0
        r = residual_sigma(ode, kink_zero_mode(1.0), GRID)
        assert r.max_rel_residual > 1e-2

    def test_grid_guard_excludes_edge_points(self):
        ode = kink_sigma_ode(F(1), F(0))
        r = residual_sigma(ode, kink_zero_mode(1.0), [-12.0, -10.0, 0.0, 10.0, 12.0])
        assert r.excluded_points >= 2
        assert all(abs(s) < 1.0 - 1e-3 for s in r.grid)

    def test_fd_convergence_until_floor(self):
        # halving h from a coarse start reduces the residual on a true
        # solution until the roundoff floor near 1e-10
        ode = kink_sigma_ode(F(1), F(0))
        zm = kink_zero_mode(1.0)
        levels = [
            residual_sigma(ode, zm, GRID, h=h).max_rel_residual
            for h in (0.16, 0.08, 0.04, 0.02)
        ]
        assert all(b < a for a, b in zip(levels, levels[1:]))
        floor = residual_sigma(ode, zm, GRID, h=0.01).max_rel_residual
        assert floor < 1e-10


class TestHypergeometricOracle:
    def test_requires_exact_branch(self):
        with pytest.raises(ValueError):
            hypergeometric_oracle(kink_spec(F(1), F(1, 2)), 1, 5)

    def test_non_indicial_seed_rejected(self):
        spec = exact_branch_spec(F(1, 2), F(-1, 3))
        with pytest.raises(ValueError):
            hypergeometric_oracle(spec, F(1, 5), 5)

    def test_truncation_when_numerator_vanishes(self):
        # lowering bracket roots at 0 and 1 - a6/a2; descent from lam stops
        spec = OdeSpec(a1=1, a2=2, a5=3, a6=1, a8=-3)  # diagonal roots 1, -3
        series = hypergeometric_oracle(spec, 1, 30)
        assert series.shifts() == (-1, 0)  # stops at exponent 0

    def test_resonance_mirrors_series_solution(self):
        spec = OdeSpec(a1=1, a2=1, a5=-1, a6=3)  # roots 2 and 0
        with pytest.raises(ResonantExponentError):
            hypergeometric_oracle(spec, 2, 10)
        with pytest.raises(ResonantExponentError):
            series_solution(spec, 2, 10)

    def test_matches_series_solution(self):
        rng = random.Random(31)
        done = 0
        while done < 6:
            lam1 = F(rng.randint(-4, 4), rng.randint(1, 3))
            lam2 = lam1 + F(2 * rng.randint(1, 7), 2 * rng.randint(1, 3) + 1)
            if (lam1 - lam2).denominator == 1:
                continue
            spec = exact_branch_spec(lam1, lam2, a2=F(rng.randint(1, 5)),
                                     a6=F(rng.randint(-4, 4)))
            assert series_solution(spec, lam1, 30, horizon=30) == \
                hypergeometric_oracle(spec, lam1, 31)
            done += 1


class TestNullspaceOracle:
    def test_kink_special_matches_polynomial_solution(self):
        spec = kink_spec(F(1, 2), F(1, 2))
        oracle = nullspace_oracle(spec, 1)
        direct = polynomial_solution(spec, 1).basis
        assert len(oracle) == len(direct) == 1
        a, b = oracle[0], direct[0]
        assert a[0] * b[1] == a[1] * b[0]  # same ray

    def test_generic_empty(self):
        spec = kink_spec(F(1), F(1, 2))
        assert nullspace_oracle(spec, 1) == ()

    def test_diagonal_constants(self):
        basis = nullspace_oracle(OdeSpec(a1=1, a5=1), 2)
        assert any(v[0] != 0 and v[1] == v[2] == 0 for v in basis)

    def test_span_agreement_randomized(self):
        rng = random.Random(32)
        for _ in range(20):
            spec = OdeSpec(
                a0=F(rng.randint(-3, 3)), a1=F(rng.randint(-3, 3)),
                a2=F(rng.randint(-3, 3)), a4=F(rng.randint(-3, 3)),
                a5=F(rng.randint(-3, 3)), a6=F(rng.randint(-3, 3)),
                a7=F(rng.randint(-3, 3)), a8=F(rng.randint(-3, 3)),
            )
            degree = rng.randint(0, 4)
            assert _span_key(nullspace_oracle(spec, degree), degree) == _span_key(
                polynomial_solution(spec, degree).basis, degree
            )


def _span_key(basis, degree):
    """Canonical row-reduced form of a rational basis, for span comparison."""
    rows = [list(v) for v in basis]
    cols = degree + 1
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [vi - f * vr for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in rows[:r])
