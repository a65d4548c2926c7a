"""Exact sparse multivariate Laurent polynomials over the rationals.

A polynomial is a finite map from exponent tuples to nonzero ``Fraction``
coefficients.  Exponents may be negative only at positions the variable
table flags as Laurent (invertible) variables.  The variable table fixes
names, invertibility flags and the comparison order used for canonical
printing: the first listed variable is the most significant.

The zero polynomial is the empty term map; equality is term-map equality,
so every value has exactly one representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .errors import TableMismatchError

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class VariableTable:
    """Ordered list of variable names with Laurent (invertibility) flags.

    The listed order is the significance order: monomials compare
    lexicographically position by position, first position strongest.
    """

    names: tuple[str, ...]
    laurent: tuple[bool, ...]

    def __post_init__(self):
        if len(self.names) != len(self.laurent):
            raise ValueError("names and laurent flags must have equal length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @staticmethod
    def make(entries: Iterable[tuple[str, bool]]) -> "VariableTable":
        pairs = tuple(entries)
        return VariableTable(tuple(n for n, _ in pairs), tuple(f for _, f in pairs))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.names)

    def var_monomial(self, name: str) -> Monomial:
        exps = [0] * len(self.names)
        exps[self.index(name)] = 1
        return tuple(exps)

    # Convenience constructors ------------------------------------------------

    def zero(self) -> "ExactPolynomial":
        return ExactPolynomial(self, {})

    def constant(self, value) -> "ExactPolynomial":
        c = Fraction(value)
        if c == 0:
            return self.zero()
        return ExactPolynomial(self, {self.unit_monomial(): c})

    def one(self) -> "ExactPolynomial":
        return self.constant(1)

    def var(self, name: str) -> "ExactPolynomial":
        return ExactPolynomial(self, {self.var_monomial(name): Fraction(1)})

    def monomial(self, exponents: Iterable[int], coefficient=1) -> "ExactPolynomial":
        c = Fraction(coefficient)
        if c == 0:
            return self.zero()
        return ExactPolynomial(self, {tuple(exponents): c})

    def linear_form(self, coefficients: Mapping[str, int], constant=0) -> "ExactPolynomial":
        terms: dict[Monomial, Fraction] = {}
        for name, coeff in coefficients.items():
            if coeff:
                terms[self.var_monomial(name)] = Fraction(coeff)
        c = Fraction(constant)
        if c:
            terms[self.unit_monomial()] = c
        return ExactPolynomial(self, terms)


class ExactPolynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VariableTable, terms: Mapping[Monomial, Fraction]):
        clean: dict[Monomial, Fraction] = {}
        width = len(table)
        for mono, coeff in terms.items():
            if coeff == 0:
                continue
            if len(mono) != width:
                raise ValueError(f"monomial {mono} has wrong arity for table {table.names}")
            for pos, exp in enumerate(mono):
                if exp < 0 and not table.laurent[pos]:
                    raise ValueError(
                        f"negative exponent of non-invertible variable {table.names[pos]!r}"
                    )
            clean[mono] = Fraction(coeff)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ExactPolynomial is immutable")

    # Predicates ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(all(e == 0 for e in mono) for mono in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def is_term(self) -> bool:
        return len(self.terms) == 1

    def used_indices(self) -> set[int]:
        used: set[int] = set()
        for mono in self.terms:
            for pos, exp in enumerate(mono):
                if exp:
                    used.add(pos)
        return used

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending positional-lexicographic order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def leading(self) -> tuple[Monomial, Fraction]:
        """Leading term under the table's positional-lexicographic order."""
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms)
        return mono, self.terms[mono]

    def sort_key(self) -> tuple:
        """Canonical comparison key (used to order factor lists and term dumps)."""
        return tuple((m, c) for m, c in self.sorted_terms())

    # Arithmetic ----------------------------------------------------------------

    def _check(self, other: "ExactPolynomial"):
        if self.table is not other.table and self.table != other.table:
            raise TableMismatchError(
                f"operands over different tables {self.table.names} vs {other.table.names}"
            )

    def _coerce(self, other) -> "ExactPolynomial":
        if isinstance(other, ExactPolynomial):
            self._check(other)
            return other
        return self.table.constant(other)

    def __add__(self, other) -> "ExactPolynomial":
        other = self._coerce(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = terms.get(mono, Fraction(0)) + coeff
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        return ExactPolynomial(self.table, terms)

    __radd__ = __add__

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "ExactPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ExactPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "ExactPolynomial":
        other = self._coerce(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                s = terms.get(mono, Fraction(0)) + c1 * c2
                if s:
                    terms[mono] = s
                else:
                    terms.pop(mono, None)
        return ExactPolynomial(self.table, terms)

    __rmul__ = __mul__

    def scaled(self, scalar) -> "ExactPolynomial":
        c = Fraction(scalar)
        if c == 0:
            return self.table.zero()
        return ExactPolynomial(self.table, {m: k * c for m, k in self.terms.items()})

    def __pow__(self, exponent: int) -> "ExactPolynomial":
        if not isinstance(exponent, int):
            raise TypeError("polynomial exponent must be an integer")
        if exponent < 0:
            if self.is_term():
                mono, coeff = next(iter(self.terms.items()))
                inv = tuple(-e for e in mono)
                return ExactPolynomial(self.table, {inv: Fraction(1) / coeff}) ** (-exponent)
            raise ValueError("negative power of a non-monomial polynomial")
        result = self.table.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.table.constant(other)
        if not isinstance(other, ExactPolynomial):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        return hash((self.table, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        from .printing import format_polynomial

        return f"ExactPolynomial({format_polynomial(self)!r})"

    # Structure helpers ----------------------------------------------------------

    def monomial_shifted(self, shift: Monomial) -> "ExactPolynomial":
        return ExactPolynomial(
            self.table,
            {tuple(a + b for a, b in zip(m, shift)): c for m, c in self.terms.items()},
        )

    def min_exponents(self) -> Monomial:
        """Componentwise minimum exponent over the support (0 for the zero poly)."""
        if self.is_zero:
            return self.table.unit_monomial()
        mins = [min(m[i] for m in self.terms) for i in range(len(self.table))]
        return tuple(mins)

    def max_exponents(self) -> Monomial:
        if self.is_zero:
            return self.table.unit_monomial()
        return tuple(max(m[i] for m in self.terms) for i in range(len(self.table)))

    def sector_split(self, positions: Iterable[int]) -> dict[Monomial, "ExactPolynomial"]:
        """Group terms by their exponents at ``positions``.

        Returns a map from the restricted exponent tuple to the polynomial of
        matching terms with those positions zeroed out.
        """
        pos = tuple(positions)
        sectors: dict[Monomial, dict[Monomial, Fraction]] = {}
        for mono, coeff in self.terms.items():
            key = tuple(mono[i] for i in pos)
            rest = list(mono)
            for i in pos:
                rest[i] = 0
            sectors.setdefault(key, {})[tuple(rest)] = coeff
        return {k: ExactPolynomial(self.table, v) for k, v in sectors.items()}

    def assign_zero(self, position: int) -> "ExactPolynomial":
        """Substitute 0 for the variable at ``position``."""
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            exp = mono[position]
            if exp < 0:
                raise ZeroDivisionError(
                    f"substituting 0 for inverted variable {self.table.names[position]!r}"
                )
            if exp == 0:
                terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return ExactPolynomial(self.table, {m: c for m, c in terms.items() if c})

    def assign_polynomial(self, position: int, value: "ExactPolynomial") -> "ExactPolynomial":
        """Substitute a polynomial for the variable at ``position``.

        The variable must occur with nonnegative exponents unless the value is
        an invertible single term.
        """
        self._check(value)
        result = self.table.zero()
        cache: dict[int, ExactPolynomial] = {0: self.table.one()}

        def power(e: int) -> ExactPolynomial:
            if e not in cache:
                cache[e] = value ** e
            return cache[e]

        for mono, coeff in self.terms.items():
            rest = list(mono)
            exp = rest[position]
            rest[position] = 0
            term = ExactPolynomial(self.table, {tuple(rest): coeff})
            result = result + term * power(exp)
        return result

    def transfer(self, table: VariableTable) -> "ExactPolynomial":
        """Re-express over another table, matching variables by name.

        Every variable actually used must exist in the target table.
        """
        mapping: list[Optional[int]] = []
        for name in self.table.names:
            try:
                mapping.append(table.index(name))
            except KeyError:
                mapping.append(None)
        width = len(table)
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            exps = [0] * width
            for pos, exp in enumerate(mono):
                if not exp:
                    continue
                target = mapping[pos]
                if target is None:
                    raise KeyError(
                        f"variable {self.table.names[pos]!r} absent from target table"
                    )
                exps[target] = exp
            terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) + coeff
        return ExactPolynomial(table, {m: c for m, c in terms.items() if c})


def exact_divide(p: ExactPolynomial, d: ExactPolynomial) -> Optional[ExactPolynomial]:
    """Return q with q * d == p, or None if no such polynomial exists.

    Works in the Laurent sense: monomial units are always divisible, and the
    quotient may use negative exponents at Laurent positions.
    """
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero:
        return p.table.zero()
    p._check(d)
    # Normalise the invertible-variable content of both operands to honest
    # polynomials with minimum exponent 0; divisibility is unaffected and
    # the quotient shifts back.
    p_shift = tuple(
        e if p.table.laurent[i] else 0 for i, e in enumerate(p.min_exponents())
    )
    d_shift = tuple(
        e if d.table.laurent[i] else 0 for i, e in enumerate(d.min_exponents())
    )
    pn = p.monomial_shifted(tuple(-e for e in p_shift))
    dn = d.monomial_shifted(tuple(-e for e in d_shift))

    lead_d, coeff_d = dn.leading()
    remainder = dict(pn.terms)
    quotient: dict[Monomial, Fraction] = {}
    while remainder:
        mono = max(remainder)
        coeff = remainder[mono]
        q_mono = tuple(a - b for a, b in zip(mono, lead_d))
        if any(e < 0 for e in q_mono):
            return None
        q_coeff = coeff / coeff_d
        quotient[q_mono] = q_coeff
        for m2, c2 in dn.terms.items():
            target = tuple(a + b for a, b in zip(q_mono, m2))
            s = remainder.get(target, Fraction(0)) - q_coeff * c2
            if s:
                remainder[target] = s
            else:
                remainder.pop(target, None)
    shift_back = tuple(a - b for a, b in zip(p_shift, d_shift))
    return ExactPolynomial(p.table, quotient).monomial_shifted(shift_back)


def divides(d: ExactPolynomial, p: ExactPolynomial) -> bool:
    return exact_divide(p, d) is not None
