"""Rational elements with denominators confined to a declared multiplicative set.

General multivariate gcd is avoided by design: a ``FactorSet`` declares the
only irreducible denominators a computation is allowed to produce (single
variables, invertible monomials, and linear forms such as mass-shifted
weight pairings).  A ``FactoredFraction`` stores a Laurent-polynomial
numerator over a multiset of declared factors, kept fully reduced by
iterated exact division.  Monomial units in invertible variables always live
in the numerator, so an element is a ring element exactly when its
denominator is empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import ReductionError, TableMismatchError
from .poly import ExactPolynomial, Monomial, VariableTable, exact_divide


def _is_linear_in_plain_vars(p: ExactPolynomial) -> bool:
    for mono in p.terms:
        deg = 0
        for pos, exp in enumerate(mono):
            if exp < 0:
                return False
            if exp and p.table.laurent[pos]:
                return False
            deg += exp
        if deg > 1:
            return False
    return True


def _is_single_variable(p: ExactPolynomial) -> bool:
    if len(p.terms) != 1:
        return False
    (mono, coeff), = p.terms.items()
    return coeff == 1 and sum(abs(e) for e in mono) == 1 and all(e >= 0 for e in mono)


def _is_unit_monomial(p: ExactPolynomial) -> bool:
    if len(p.terms) != 1:
        return False
    mono = next(iter(p.terms))
    return all(e == 0 or p.table.laurent[i] for i, e in enumerate(mono))


@dataclass(frozen=True)
class FactorSet:
    """The declared irreducible denominators of a localized ring.

    Each factor is sign-normalized (positive leading coefficient under the
    table order) and must be a single variable, an invertible monomial, or a
    linear form in non-invertible variables.  Factors are pairwise
    non-proportional, so reduction by iterated exact division is canonical.
    """

    table: VariableTable
    factors: tuple[ExactPolynomial, ...]

    def __post_init__(self):
        seen: list[ExactPolynomial] = []
        for f in self.factors:
            if f.table != self.table:
                raise TableMismatchError("factor over a different variable table")
            if f.is_zero or f.is_constant:
                raise ValueError("factors must be nonconstant")
            _, lead = f.leading()
            if lead <= 0:
                raise ValueError(f"factor not sign-normalized: {f!r}")
            if not (_is_single_variable(f) or _is_unit_monomial(f) or _is_linear_in_plain_vars(f)):
                raise ValueError(f"factor shape not supported: {f!r}")
            for g in seen:
                if _proportional(f, g):
                    raise ValueError(f"proportional factors declared: {f!r}")
            seen.append(f)

    def __len__(self) -> int:
        return len(self.factors)

    def index_of(self, p: ExactPolynomial) -> Optional[int]:
        for i, f in enumerate(self.factors):
            if f == p:
                return i
        return None

    def zero(self) -> "FactoredFraction":
        return FactoredFraction(self, self.table.zero(), ())

    def one(self) -> "FactoredFraction":
        return FactoredFraction(self, self.table.one(), ())

    def constant(self, value) -> "FactoredFraction":
        return FactoredFraction(self, self.table.constant(value), ())

    def var(self, name: str) -> "FactoredFraction":
        return FactoredFraction(self, self.table.var(name), ())

    def from_polynomial(self, p: ExactPolynomial) -> "FactoredFraction":
        return FactoredFraction(self, p, ())


def _proportional(f: ExactPolynomial, g: ExactPolynomial) -> bool:
    if set(f.terms) != set(g.terms):
        return False
    ratio = None
    for mono, coeff in f.terms.items():
        r = coeff / g.terms[mono]
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    return True


class FactoredFraction:
    """numerator / product of declared factors, always fully reduced."""

    __slots__ = ("factors", "numerator", "denominator")

    def __init__(
        self,
        factors: FactorSet,
        numerator: ExactPolynomial,
        denominator: Iterable[tuple[int, int]] = (),
    ):
        if numerator.table != factors.table:
            raise TableMismatchError("numerator over a different table")
        powers: dict[int, int] = {}
        for idx, exp in denominator:
            if exp < 0:
                raise ValueError("denominator exponents must be positive")
            if exp:
                if not 0 <= idx < len(factors.factors):
                    raise ValueError(f"factor index {idx} out of range")
                powers[idx] = powers.get(idx, 0) + exp
        num, powers = _reduce(factors, numerator, powers)
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", tuple(sorted(powers.items())))

    def __setattr__(self, name, value):
        raise AttributeError("FactoredFraction is immutable")

    # Structure ------------------------------------------------------------------

    @property
    def table(self) -> VariableTable:
        return self.factors.table

    @property
    def is_polynomial(self) -> bool:
        return not self.denominator

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def denominator_polynomial(self) -> ExactPolynomial:
        p = self.table.one()
        for idx, exp in self.denominator:
            p = p * self.factors.factors[idx] ** exp
        return p

    def as_polynomial(self) -> ExactPolynomial:
        if not self.is_polynomial:
            raise ReductionError(f"element is not polynomial: denominator {self.denominator}")
        return self.numerator

    # Arithmetic -------------------------------------------------------------------

    def _coerce(self, other) -> "FactoredFraction":
        if isinstance(other, FactoredFraction):
            if other.factors != self.factors:
                raise TableMismatchError("operands over different factor sets")
            return other
        if isinstance(other, ExactPolynomial):
            return FactoredFraction(self.factors, other, ())
        return self.factors.constant(other)

    def __add__(self, other) -> "FactoredFraction":
        other = self._coerce(other)
        mine = dict(self.denominator)
        theirs = dict(other.denominator)
        lcm = {i: max(mine.get(i, 0), theirs.get(i, 0)) for i in set(mine) | set(theirs)}
        scale_self = self.table.one()
        scale_other = self.table.one()
        for i, e in lcm.items():
            f = self.factors.factors[i]
            scale_self = scale_self * f ** (e - mine.get(i, 0))
            scale_other = scale_other * f ** (e - theirs.get(i, 0))
        num = self.numerator * scale_self + other.numerator * scale_other
        return FactoredFraction(self.factors, num, lcm.items())

    __radd__ = __add__

    def __neg__(self) -> "FactoredFraction":
        return FactoredFraction(self.factors, -self.numerator, self.denominator)

    def __sub__(self, other) -> "FactoredFraction":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "FactoredFraction":
        return (-self) + other

    def __mul__(self, other) -> "FactoredFraction":
        other = self._coerce(other)
        powers: dict[int, int] = dict(self.denominator)
        for i, e in other.denominator:
            powers[i] = powers.get(i, 0) + e
        return FactoredFraction(self.factors, self.numerator * other.numerator, powers.items())

    __rmul__ = __mul__

    def __truediv__(self, other) -> "FactoredFraction":
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("division by zero element")
        try:
            return self * other.inverse()
        except ReductionError:
            pass
        # Not a unit: allowed only if the cleared divisor divides exactly.
        cleared = self * other.denominator_polynomial()
        q = exact_divide(cleared.numerator, other.numerator)
        if q is None:
            raise ReductionError(
                "denominator is outside the multiplicative set and does not divide exactly"
            )
        return FactoredFraction(self.factors, q, cleared.denominator)

    def __pow__(self, exponent: int) -> "FactoredFraction":
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an integer")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.factors.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def inverse(self) -> "FactoredFraction":
        """Invert a unit of the localization.

        The numerator must decompose as constant * invertible monomial *
        product of declared factors; otherwise the inverse would need a
        denominator outside the multiplicative set.
        """
        if self.is_zero:
            raise ZeroDivisionError("inverting the zero element")
        parts = unit_decompose(self.factors, self.numerator)
        if parts is None:
            raise ReductionError(
                "numerator is not a unit of the localization; cannot invert"
            )
        coeff, mono, factor_powers = parts
        num = self.denominator_polynomial()
        num = num.monomial_shifted(tuple(-e for e in mono)).scaled(Fraction(1) / coeff)
        return FactoredFraction(self.factors, num, factor_powers.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, ExactPolynomial)):
            other = self._coerce(other)
        if not isinstance(other, FactoredFraction):
            return NotImplemented
        return (
            self.factors == other.factors
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __repr__(self) -> str:
        from .printing import format_fraction

        return f"FactoredFraction({format_fraction(self)!r})"


def _reduce(
    factors: FactorSet, num: ExactPolynomial, powers: dict[int, int]
) -> tuple[ExactPolynomial, dict[int, int]]:
    """Cancel declared factors out of the numerator until fully reduced.

    Invertible-monomial factors never stay in the denominator: they are
    absorbed into the numerator as negative exponents, so each value has a
    single representation.
    """
    if num.is_zero:
        return num, {}
    out: dict[int, int] = {}
    for idx in sorted(powers):
        exp = powers[idx]
        f = factors.factors[idx]
        if _is_unit_monomial(f):
            mono, coeff = next(iter(f.terms.items()))
            shift = tuple(-e * exp for e in mono)
            num = num.monomial_shifted(shift).scaled(Fraction(1) / coeff ** exp)
            continue
        while exp > 0:
            q = exact_divide(num, f)
            if q is None:
                break
            num = q
            exp -= 1
        if exp:
            out[idx] = exp
    return num, out


def unit_decompose(
    factors: FactorSet, p: ExactPolynomial
) -> Optional[tuple[Fraction, Monomial, dict[int, int]]]:
    """Write p as coefficient * monomial * product of declared factor powers.

    Returns None when the residue after extracting all declared factors is
    not a single invertible term.
    """
    if p.is_zero:
        return None
    extracted: dict[int, int] = {}
    for idx, f in enumerate(factors.factors):
        if _is_unit_monomial(f):
            continue  # invertible-monomial content lands in the monomial part
        while True:
            q = exact_divide(p, f)
            if q is None:
                break
            p = q
            extracted[idx] = extracted.get(idx, 0) + 1
    if len(p.terms) != 1:
        return None
    (mono, coeff), = p.terms.items()
    if any(e != 0 and not p.table.laurent[i] for i, e in enumerate(mono)):
        return None
    return coeff, mono, extracted


def same_value(a: FactoredFraction, b: FactoredFraction) -> bool:
    """Cross-multiplied equality check, independent of the reduction code path."""
    return a.numerator * b.denominator_polynomial() == b.numerator * a.denominator_polynomial()
