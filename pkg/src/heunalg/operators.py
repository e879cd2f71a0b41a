"""Exact linear differential operators and generalized power series.

Operators are finite sums of terms ``coeff * x^p * D^k`` (``D = d/dx``) with
rational coefficients, kept in a unique normal-ordered canonical form: every
x-power stands to the left of every derivative, terms are sorted by
``(dorder, xpow)``, and zero coefficients are dropped.  Composition uses the
Leibniz rule

    D^k x^q = sum_{i=0}^{min(k,q)} C(k,i) * q!/(q-i)! * x^{q-i} D^{k-i},

so products, commutators and polynomial expressions in operators stay exact.

Series are finite collections of terms ``c_m * x^(rho+m)`` with a rational
base exponent ``rho`` and integer shifts ``m`` (possibly negative).  The
action of an operator term on ``x^sigma`` is the falling factorial rule
``x^p D^k x^sigma = sigma(sigma-1)...(sigma-k+1) x^(sigma-k+p)``, which is
total for any rational ``sigma``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import IncompatibleBranchError

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def as_fraction(value: RationalLike) -> Fraction:
    """Coerce an exact input to Fraction; floats are rejected to keep arithmetic exact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational (int, str or Fraction), got {type(value).__name__}")


def falling_factorial(sigma: Fraction, k: int) -> Fraction:
    """sigma(sigma-1)...(sigma-k+1); the empty product (k=0) is 1."""
    out = Fraction(1)
    for i in range(k):
        out *= sigma - i
    return out


@dataclass(frozen=True)
class OpTerm:
    """One normal-ordered term coeff * x^xpow * D^dorder."""

    coeff: Fraction
    xpow: int
    dorder: int

    def __post_init__(self) -> None:
        if self.xpow < 0 or self.dorder < 0:
            raise ValueError("x-power and derivative order must be nonnegative")


class DiffOp:
    """A linear differential operator in canonical normal-ordered form.

    Instances are immutable; two operators are equal iff their canonical term
    lists are identical.  The empty operator is the zero operator.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[tuple[RationalLike, int, int]] = ()):
        acc: dict[tuple[int, int], Fraction] = {}
        for coeff, xpow, dorder in terms:
            c = as_fraction(coeff)
            if c == 0:
                continue
            key = (dorder, xpow)
            c += acc.get(key, Fraction(0))
            if c == 0:
                acc.pop(key, None)
            else:
                acc[key] = c
        object.__setattr__(
            self,
            "_terms",
            tuple(OpTerm(acc[key], key[1], key[0]) for key in sorted(acc)),
        )

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "DiffOp":
        return DiffOp()

    @staticmethod
    def identity() -> "DiffOp":
        return DiffOp([(1, 0, 0)])

    @staticmethod
    def term(coeff: RationalLike, xpow: int, dorder: int) -> "DiffOp":
        return DiffOp([(coeff, xpow, dorder)])

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> tuple[OpTerm, ...]:
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def max_dorder(self) -> int:
        return max((t.dorder for t in self._terms), default=0)

    def max_xpow(self) -> int:
        return max((t.xpow for t in self._terms), default=0)

    def __iter__(self) -> Iterator[OpTerm]:
        return iter(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("DiffOp is immutable")

    # -- linear structure --------------------------------------------------

    def __add__(self, other: "DiffOp") -> "DiffOp":
        if not isinstance(other, DiffOp):
            return NotImplemented
        return DiffOp(
            [(t.coeff, t.xpow, t.dorder) for t in self._terms]
            + [(t.coeff, t.xpow, t.dorder) for t in other._terms]
        )

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "DiffOp":
        return DiffOp([(-t.coeff, t.xpow, t.dorder) for t in self._terms])

    def scale(self, factor: RationalLike) -> "DiffOp":
        f = as_fraction(factor)
        return DiffOp([(f * t.coeff, t.xpow, t.dorder) for t in self._terms])

    def __mul__(self, other) -> "DiffOp":
        """Operator composition for DiffOp operands, scaling for rationals."""
        if isinstance(other, DiffOp):
            return self.compose(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> "DiffOp":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    # -- composition and action --------------------------------------------

    def compose(self, other: "DiffOp") -> "DiffOp":
        """Normal-ordered composition self o other (apply other first)."""
        out: list[tuple[Fraction, int, int]] = []
        for a in self._terms:
            for b in other._terms:
                # x^p1 D^k1 x^p2 D^k2 -> Leibniz expansion of D^k1 x^p2
                for i in range(min(a.dorder, b.xpow) + 1):
                    c = (
                        a.coeff
                        * b.coeff
                        * math.comb(a.dorder, i)
                        * falling_factorial(Fraction(b.xpow), i)
                    )
                    out.append((c, a.xpow + b.xpow - i, a.dorder + b.dorder - i))
        return DiffOp(out)

    def apply(self, series: "GeneralizedSeries") -> "GeneralizedSeries":
        """Exact action on a generalized series, term by term."""
        acc: dict[int, Fraction] = {}
        for t in self._terms:
            shift = t.xpow - t.dorder
            for m, c in series.items():
                sigma = series.base + m
                value = t.coeff * c * falling_factorial(sigma, t.dorder)
                if value == 0:
                    continue
                key = m + shift
                value += acc.get(key, Fraction(0))
                if value == 0:
                    acc.pop(key, None)
                else:
                    acc[key] = value
        return GeneralizedSeries(series.base, acc)

    def apply_to_monomial(self, exponent: RationalLike) -> "GeneralizedSeries":
        return self.apply(GeneralizedSeries.monomial(exponent))

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for t in self._terms:
            body = []
            if t.xpow == 1:
                body.append("x")
            elif t.xpow > 1:
                body.append(f"x^{t.xpow}")
            if t.dorder == 1:
                body.append("D")
            elif t.dorder > 1:
                body.append(f"D^{t.dorder}")
            coeff = t.coeff
            sign = "-" if coeff < 0 else "+"
            mag = -coeff if coeff < 0 else coeff
            if body and mag == 1:
                text = "*".join(body)
            else:
                text = "*".join([str(mag)] + body)
            parts.append((sign, text))
        first_sign, first = parts[0]
        rendered = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            rendered += f" {sign} {text}"
        return rendered

    def __repr__(self) -> str:
        return f"DiffOp({str(self)})"


def commutator(a: DiffOp, b: DiffOp) -> DiffOp:
    """[a, b] = a o b - b o a in canonical form."""
    return a.compose(b) - b.compose(a)


class GeneralizedSeries:
    """A finite sum  sum_m c_m x^(base+m)  with rational base and integer shifts.

    An ordinary polynomial is the special case base = 0 with shifts >= 0.
    Stored coefficients are nonzero; the zero series stores nothing.
    """

    __slots__ = ("_base", "_coeffs")

    def __init__(self, base: RationalLike, coeffs: Mapping[int, RationalLike] | None = None):
        clean: dict[int, Fraction] = {}
        for m, c in (coeffs or {}).items():
            frac = as_fraction(c)
            if frac != 0:
                clean[int(m)] = frac
        object.__setattr__(self, "_base", as_fraction(base))
        object.__setattr__(self, "_coeffs", dict(sorted(clean.items())))

    @staticmethod
    def monomial(exponent: RationalLike, coeff: RationalLike = 1) -> "GeneralizedSeries":
        return GeneralizedSeries(exponent, {0: coeff})

    @staticmethod
    def zero() -> "GeneralizedSeries":
        return GeneralizedSeries(0, {})

    @property
    def base(self) -> Fraction:
        return self._base

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self._coeffs.items())

    def shifts(self) -> tuple[int, ...]:
        return tuple(self._coeffs)

    def coefficient(self, shift: int) -> Fraction:
        return self._coeffs.get(shift, Fraction(0))

    def coefficient_at(self, exponent: RationalLike) -> Fraction:
        """Coefficient of x^exponent; zero when the exponent is off-branch."""
        delta = as_fraction(exponent) - self._base
        if delta.denominator != 1:
            return Fraction(0)
        return self.coefficient(int(delta))

    def is_zero(self) -> bool:
        return not self._coeffs

    def support(self) -> dict[Fraction, Fraction]:
        """Exponent -> coefficient map; the branch-independent content."""
        return {self._base + m: c for m, c in self._coeffs.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GeneralizedSeries):
            return NotImplemented
        return self.support() == other.support()

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("GeneralizedSeries is immutable")

    def __add__(self, other: "GeneralizedSeries") -> "GeneralizedSeries":
        if not isinstance(other, GeneralizedSeries):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        offset = other._base - self._base
        if offset.denominator != 1:
            raise IncompatibleBranchError(
                f"base exponents {self._base} and {other._base} differ by a non-integer"
            )
        shift = int(offset)
        merged = dict(self._coeffs)
        for m, c in other._coeffs.items():
            key = m + shift
            merged[key] = merged.get(key, Fraction(0)) + c
        return GeneralizedSeries(self._base, merged)

    def __sub__(self, other: "GeneralizedSeries") -> "GeneralizedSeries":
        return self + other.scale(-1)

    def scale(self, factor: RationalLike) -> "GeneralizedSeries":
        f = as_fraction(factor)
        return GeneralizedSeries(self._base, {m: f * c for m, c in self._coeffs.items()})

    def truncate_window(self, m_min: int, m_max: int) -> tuple["GeneralizedSeries", int]:
        """Drop shifts outside [m_min, m_max]; returns (series, dropped count)."""
        kept = {m: c for m, c in self._coeffs.items() if m_min <= m <= m_max}
        return GeneralizedSeries(self._base, kept), len(self._coeffs) - len(kept)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for m, c in self._coeffs.items():
            exp = self._base + m
            if exp == 0:
                parts.append(f"{c}")
            elif exp == 1:
                parts.append(f"{c}*x")
            else:
                parts.append(f"{c}*x^({exp})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"GeneralizedSeries({str(self)})"
