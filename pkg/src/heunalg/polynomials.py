"""Small exact univariate polynomial toolbox over Fraction.

Polynomials are tuples of Fractions in ascending degree order with no trailing
zeros; () is the zero polynomial.  Just enough machinery for interpolation,
root hunting and discrete antidifferences; nothing here rounds.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Poly = tuple[Fraction, ...]


def poly(coeffs: Iterable[Fraction | int]) -> Poly:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_add(p: Sequence[Fraction], q: Sequence[Fraction]) -> Poly:
    n = max(len(p), len(q))
    return poly(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def poly_scale(p: Sequence[Fraction], factor: Fraction) -> Poly:
    return poly(factor * c for c in p)


def poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def poly_interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Lagrange interpolation through distinct abscissae, exact."""
    result: Poly = ()
    for i, (xi, yi) in enumerate(points):
        basis: Poly = (Fraction(1),)
        denom = Fraction(1)
        for k, (xk, _) in enumerate(points):
            if k == i:
                continue
            basis = poly_mul(basis, (-xk, Fraction(1)))
            denom *= xi - xk
        result = poly_add(result, poly_scale(basis, yi / denom))
    return result


def is_rational_square(value: Fraction) -> tuple[bool, Fraction]:
    """Whether value is the square of a rational; returns (flag, nonnegative root)."""
    if value < 0:
        return False, Fraction(0)
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return True, Fraction(rn, rd)
    return False, Fraction(0)


def quadratic_rational_roots(a: Fraction, b: Fraction, c: Fraction) -> list[Fraction]:
    """Rational roots of a x^2 + b x + c; irrational roots are not returned."""
    if a == 0:
        if b == 0:
            raise ZeroDivisionError("degenerate quadratic: a = b = 0")
        return [-c / b]
    disc = b * b - 4 * a * c
    square, root = is_rational_square(disc)
    if not square:
        return []
    if root == 0:
        return [-b / (2 * a)]
    return [(-b + root) / (2 * a), (-b - root) / (2 * a)]


def rational_roots(p: Sequence[Fraction]) -> list[Fraction]:
    """All rational roots of p, found by the rational-root theorem and verified."""
    q = poly(p)
    if not q:
        raise ZeroDivisionError("the zero polynomial vanishes everywhere")
    if len(q) == 1:
        return []
    # clear denominators to integer coefficients
    denom_lcm = 1
    for c in q:
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in q]
    # strip factors of x
    roots: set[Fraction] = set()
    low = 0
    while ints[low] == 0:
        low += 1
    if low > 0:
        roots.add(Fraction(0))
        ints = ints[low:]
    if len(ints) == 1:
        return sorted(roots)
    lead, const = abs(ints[-1]), abs(ints[0])
    for p_div in _divisors(const):
        for q_div in _divisors(lead):
            for cand in (Fraction(p_div, q_div), Fraction(-p_div, q_div)):
                if poly_eval(q, cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def discrete_antidifference(f: Sequence[Fraction]) -> Poly:
    """A polynomial g with g(n) - g(n-1) = f(n), normalized so g(0) = f(0).

    deg g = deg f + 1; the additive constant is arbitrary and can be shifted
    by the caller.  Built by interpolating the cumulative sums of f at
    n = 0..deg(f)+1 and verified at two extra points.
    """
    d = len(poly(f))  # deg f + 1, or 0 for the zero polynomial
    points = []
    running = Fraction(0)
    for n in range(d + 2):
        running += poly_eval(f, Fraction(n)) if n > 0 else Fraction(0)
        points.append((Fraction(n), running + poly_eval(f, Fraction(0))))
    g = poly_interpolate(points)
    for n in (d + 2, d + 3):  # overdetermined check, free in exact arithmetic
        expected = poly_eval(g, Fraction(n - 1)) + poly_eval(f, Fraction(n))
        if poly_eval(g, Fraction(n)) != expected:
            raise AssertionError("antidifference interpolation failed verification")
    return g
