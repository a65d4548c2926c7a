"""Buchberger-based ideal computations over the rationals.

Everything here works with honest polynomials: invertible variables are
pre-encoded by partner variables with pairing relations ``z * z__inv - 1``,
and declared denominators are cleared with auxiliary inverses in the same
way.  The basis computation uses the normal selection strategy with the
product and chain criteria, deterministic tie-breaking by generator index,
and returns the unique reduced basis for the chosen order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .fracs import FactoredFraction, FactorSet
from .poly import ExactPolynomial, Monomial, VariableTable

# ---------------------------------------------------------------------------
# Monomial orders
# ---------------------------------------------------------------------------


def _grevlex_key(exps: Sequence[int]) -> tuple:
    return (sum(exps), tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on monomials, compatible with multiplication.

    kind "lex" compares exponents position by position; "grevlex" by total
    degree with graded reverse lexicographic tie-breaking; "block" eliminates
    the first ``block`` variables (grevlex inside each block).
    """

    kind: str
    block: int = 0

    def key(self, mono: Monomial) -> tuple:
        if self.kind == "lex":
            return tuple(mono)
        if self.kind == "grevlex":
            return _grevlex_key(mono)
        if self.kind == "block":
            return (_grevlex_key(mono[: self.block]), _grevlex_key(mono[self.block :]))
        raise ValueError(f"unknown order kind {self.kind!r}")


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elimination_order(first_block_size: int) -> MonomialOrder:
    return MonomialOrder("block", first_block_size)


def leading_monomial(p: ExactPolynomial, order: MonomialOrder) -> Monomial:
    if p.is_zero:
        raise ValueError("zero polynomial has no leading monomial")
    return max(p.terms, key=order.key)


def _monomial_divides(d: Monomial, m: Monomial) -> bool:
    return all(a <= b for a, b in zip(d, m))


def _monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _monomial_sub(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def _monomial_add(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def _require_plain(p: ExactPolynomial):
    for mono in p.terms:
        if any(e < 0 for e in mono):
            raise ValueError("Laurent exponents must be pre-encoded for ideal work")


# ---------------------------------------------------------------------------
# Reduction and the Buchberger loop
# ---------------------------------------------------------------------------


def normal_form(
    p: ExactPolynomial,
    basis: Sequence[ExactPolynomial],
    order: MonomialOrder,
    track: bool = False,
):
    """Fully reduce ``p`` by ``basis``; optionally track cofactors.

    With ``track`` the return value is ``(remainder, cofactors)`` satisfying
    ``p == sum(cofactors[i] * basis[i]) + remainder``.
    """
    _require_plain(p)
    table = p.table
    leads = [
        (i, leading_monomial(g, order), g) for i, g in enumerate(basis) if not g.is_zero
    ]
    work = dict(p.terms)
    remainder: dict[Monomial, Fraction] = {}
    cofactors = [table.zero() for _ in basis] if track else None
    while work:
        mono = max(work, key=order.key)
        coeff = work.pop(mono)
        for gi, lm, g in leads:
            if _monomial_divides(lm, mono):
                shift = _monomial_sub(mono, lm)
                scale = coeff / g.terms[lm]
                for m2, c2 in g.terms.items():
                    if m2 == lm:
                        continue
                    target = _monomial_add(shift, m2)
                    s = work.get(target, Fraction(0)) - scale * c2
                    if s:
                        work[target] = s
                    else:
                        work.pop(target, None)
                if track:
                    cofactors[gi] = cofactors[gi] + ExactPolynomial(table, {shift: scale})
                break
        else:
            remainder[mono] = coeff
    rem = ExactPolynomial(table, remainder)
    if track:
        return rem, cofactors
    return rem


def _s_polynomial(f: ExactPolynomial, g: ExactPolynomial, order: MonomialOrder) -> ExactPolynomial:
    lf = leading_monomial(f, order)
    lg = leading_monomial(g, order)
    lcm = _monomial_lcm(lf, lg)
    mf = ExactPolynomial(f.table, {_monomial_sub(lcm, lf): Fraction(1) / f.terms[lf]})
    mg = ExactPolynomial(g.table, {_monomial_sub(lcm, lg): Fraction(1) / g.terms[lg]})
    return mf * f - mg * g


@dataclass(frozen=True)
class Ideal:
    table: VariableTable
    generators: tuple[ExactPolynomial, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.is_zero:
                raise ValueError("ideal generators must be nonzero")
            _require_plain(g)


@dataclass(frozen=True)
class GroebnerBasis:
    table: VariableTable
    order: MonomialOrder
    basis: tuple[ExactPolynomial, ...]

    def reduce(self, p: ExactPolynomial) -> ExactPolynomial:
        return normal_form(p, self.basis, self.order)

    def contains(self, p: ExactPolynomial) -> bool:
        return self.reduce(p).is_zero


def buchberger(ideal: Ideal, order: MonomialOrder) -> GroebnerBasis:
    """Reduced deterministic basis of the ideal under the given order.

    Pair selection follows the normal strategy (smallest lcm of leading
    monomials, ties by generator index); the product and chain criteria
    prune useless pairs.
    """
    table = ideal.table
    basis: list[ExactPolynomial] = []
    leads: list[Monomial] = []
    for g in ideal.generators:
        lm = leading_monomial(g, order)
        basis.append(g.scaled(Fraction(1) / g.terms[lm]))
        leads.append(lm)
    pairs: set[tuple[int, int]] = {
        (i, j) for j in range(len(basis)) for i in range(j)
    }

    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: (order.key(_monomial_lcm(leads[ij[0]], leads[ij[1]])), ij),
        )
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        lcm = _monomial_lcm(li, lj)
        if lcm == _monomial_add(li, lj):
            continue  # disjoint leading monomials reduce to zero
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _monomial_divides(leads[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pairs and b not in pairs:
                skip = True
                break
        if skip:
            continue
        s = _s_polynomial(basis[i], basis[j], order)
        h = normal_form(s, basis, order)
        if h.is_zero:
            continue
        hl = leading_monomial(h, order)
        basis.append(h.scaled(Fraction(1) / h.terms[hl]))
        leads.append(hl)
        new = len(basis) - 1
        pairs.update((t, new) for t in range(new))

    return GroebnerBasis(table, order, tuple(_interreduce(basis, order)))


def _interreduce(basis: list[ExactPolynomial], order: MonomialOrder) -> list[ExactPolynomial]:
    # Minimalize: drop elements whose leading monomial another one divides.
    items = sorted(
        (g for g in basis if not g.is_zero),
        key=lambda g: order.key(leading_monomial(g, order)),
    )
    minimal: list[ExactPolynomial] = []
    for g in items:
        lg = leading_monomial(g, order)
        if any(_monomial_divides(leading_monomial(h, order), lg) for h in minimal):
            continue
        minimal.append(g)
    # Tail-reduce each element against the others.
    reduced: list[ExactPolynomial] = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        h = normal_form(g, others, order)
        h = h.scaled(Fraction(1) / h.terms[leading_monomial(h, order)])
        reduced.append(h)
    reduced.sort(key=lambda g: order.key(leading_monomial(g, order)), reverse=True)
    return reduced


# ---------------------------------------------------------------------------
# Laurent and localization encodings
# ---------------------------------------------------------------------------

INVERSE_SUFFIX = "__inv"
_CLEAR_PREFIX = "__clr"
_TAG_PREFIX = "__tag"


@dataclass(frozen=True)
class EncodedRing:
    """Polynomial model of a localized Laurent ring plus optional tags.

    Layout of the encoded table: original variables, partner inverses for
    invertible variables, auxiliary inverses for cleared denominator factors,
    then tag variables.  The first three groups form the elimination block.
    """

    source: VariableTable
    table: VariableTable
    partner: dict[int, int]
    clear_aux: dict[int, int]
    tags: tuple[str, ...]
    relations: tuple[ExactPolynomial, ...]

    @property
    def block_size(self) -> int:
        return len(self.table) - len(self.tags)

    def tag_position(self, i: int) -> int:
        return self.block_size + i

    def encode(self, f: FactoredFraction) -> ExactPolynomial:
        """Polynomial standing for ``f`` after clearing declared denominators."""
        width = len(self.table)
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in f.numerator.terms.items():
            exps = [0] * width
            for pos, exp in enumerate(mono):
                if exp >= 0:
                    exps[pos] = exp
                else:
                    exps[self.partner[pos]] = -exp
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        result = ExactPolynomial(self.table, terms)
        for idx, exp in f.denominator:
            aux = self.clear_aux[idx]
            shift = [0] * width
            shift[aux] = exp
            result = result.monomial_shifted(tuple(shift))
        return result

    def encode_polynomial(self, p: ExactPolynomial) -> ExactPolynomial:
        width = len(self.table)
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in p.terms.items():
            exps = [0] * width
            for pos, exp in enumerate(mono):
                if exp >= 0:
                    exps[pos] = exp
                else:
                    exps[self.partner[pos]] = -exp
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return ExactPolynomial(self.table, terms)

    def tag_poly(self, i: int) -> ExactPolynomial:
        return self.table.var(self.tags[i])


def encode_ring(
    factors: FactorSet,
    cleared_factor_indices: Iterable[int] = (),
    tags: Sequence[str] = (),
    extra_relations: Sequence[ExactPolynomial] = (),
) -> EncodedRing:
    """Build the polynomial presentation of a localized Laurent ring.

    ``cleared_factor_indices`` lists the declared factors that need an
    auxiliary inverse; ``extra_relations`` are ambient relations over the
    source table (Laurent exponents allowed, they are encoded here).
    """
    source = factors.table
    names: list[str] = list(source.names)
    partner: dict[int, int] = {}
    for pos, name in enumerate(source.names):
        if source.laurent[pos]:
            partner[pos] = len(names)
            names.append(name + INVERSE_SUFFIX)
    clear_aux: dict[int, int] = {}
    for idx in sorted(set(cleared_factor_indices)):
        clear_aux[idx] = len(names)
        names.append(f"{_CLEAR_PREFIX}{idx}")
    internal_tags = tuple(f"{_TAG_PREFIX}{i}" for i in range(len(tags)))
    names.extend(internal_tags)
    table = VariableTable(tuple(names), (False,) * len(names))

    enc = EncodedRing(source, table, partner, clear_aux, internal_tags, ())
    relations: list[ExactPolynomial] = []
    for pos, part in partner.items():
        z = [0] * len(names)
        z[pos] = 1
        z[part] = 1
        relations.append(table.monomial(z) - table.one())
    for idx, aux in clear_aux.items():
        f_enc = enc.encode_polynomial(factors.factors[idx])
        relations.append(f_enc * table.var(names[aux]) - table.one())
    for rel in extra_relations:
        relations.append(enc.encode_polynomial(rel))
    object.__setattr__(enc, "relations", tuple(relations))
    return enc


def _collect_cleared(images: Sequence[FactoredFraction]) -> set[int]:
    used: set[int] = set()
    for img in images:
        used.update(idx for idx, _ in img.denominator)
    return used


def ring_map_kernel(
    images: Sequence[tuple[str, FactoredFraction]],
    ambient_relations: Sequence[ExactPolynomial] = (),
) -> Ideal:
    """Ideal of all relations among named elements of a localized ring.

    The graph ideal of the assignment is formed over the encoded ring and
    the ambient variables are eliminated; what survives on the tags is the
    kernel of the induced map from the free polynomial ring on the names.
    """
    if not images:
        raise ValueError("no images supplied")
    names = [n for n, _ in images]
    if len(set(names)) != len(names):
        raise ValueError("generator names must be distinct")
    factors = images[0][1].factors
    enc = encode_ring(
        factors,
        _collect_cleared([img for _, img in images]),
        tags=names,
        extra_relations=ambient_relations,
    )
    relations = list(enc.relations)
    for i, (_, img) in enumerate(images):
        relations.append(enc.encode(img) - enc.tag_poly(i))
    gb = buchberger(Ideal(enc.table, tuple(relations)), elimination_order(enc.block_size))

    tag_table = VariableTable(tuple(names), (False,) * len(names))
    kept: list[ExactPolynomial] = []
    block = enc.block_size
    for g in gb.basis:
        if all(pos >= block for pos in g.used_indices()):
            kept.append(
                ExactPolynomial(
                    tag_table,
                    {mono[block:]: c for mono, c in g.terms.items()},
                )
            )
    return Ideal(tag_table, tuple(kept))


@dataclass(frozen=True)
class TagMembership:
    """Outcome of a subalgebra membership test by tag elimination."""

    expressible: bool
    witness: Optional[ExactPolynomial]  # over the tag table, when expressible
    tag_table: VariableTable

    def __bool__(self) -> bool:
        return self.expressible


def subalgebra_membership(
    f: FactoredFraction,
    generators: Sequence[tuple[str, FactoredFraction]],
    ambient_relations: Sequence[ExactPolynomial] = (),
) -> TagMembership:
    """Decide whether ``f`` lies in the subalgebra the named generators span.

    The normal form of ``f`` against the tagged elimination basis uses tag
    variables only exactly when ``f`` is expressible; the normal form is then
    a witness polynomial that re-evaluates to ``f``.
    """
    if not generators:
        raise ValueError("no generators supplied")
    names = [n for n, _ in generators]
    factors = f.factors
    cleared = _collect_cleared([img for _, img in generators] + [f])
    enc = encode_ring(factors, cleared, tags=names, extra_relations=ambient_relations)
    relations = list(enc.relations)
    for i, (_, img) in enumerate(generators):
        relations.append(enc.encode(img) - enc.tag_poly(i))
    gb = buchberger(Ideal(enc.table, tuple(relations)), elimination_order(enc.block_size))
    h = gb.reduce(enc.encode(f))
    block = enc.block_size
    tag_table = VariableTable(tuple(names), (False,) * len(names))
    if all(pos >= block for pos in h.used_indices()):
        witness = ExactPolynomial(tag_table, {m[block:]: c for m, c in h.terms.items()})
        return TagMembership(True, witness, tag_table)
    return TagMembership(False, None, tag_table)


def evaluate_tags(
    witness: ExactPolynomial, generators: Sequence[tuple[str, FactoredFraction]]
) -> FactoredFraction:
    """Evaluate a tag-variable polynomial at the generator elements."""
    factors = generators[0][1].factors
    by_name = dict(generators)
    total = factors.zero()
    for mono, coeff in sorted(witness.terms.items()):
        term = factors.constant(coeff)
        for pos, exp in enumerate(mono):
            if exp:
                term = term * by_name[witness.table.names[pos]] ** exp
        total = total + term
    return total
