"""Coulomb branch presentations, translations, and matter subrings.

The pure branch of a torus is the Laurent polynomial ring on the dual-torus
coordinates with the Cartan coordinates and the mass parameter adjoined.
Each SU(2) factor is handled on the affine blowup chart, which adjoins
u_k = (z_k - 1)/tau_k with the relation tau_k*u_k = z_k - 1 and carries the
Weyl involution z -> 1/z, tau -> -tau, u -> u/z.

A weight list induces the Euler section z_i -> prod_nu (mu + <nu,tau>)^{nu_i}
of the Toda projection.  Translating by it along the group-scheme action is
a rational automorphism of the localized pure branch; the matter branch is
the subring of elements whose translate stays regular.  Membership is
decided by a clearing/divisibility criterion in the abelian case and by
ideal membership on the blowup chart otherwise; presentations of the matter
subring are computed as kernels of the generator map.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import AlgebraError, MorphismError, ProblemError
from .fracs import FactoredFraction, FactorSet
from .groebner import (
    GREVLEX,
    Ideal,
    buchberger,
    encode_ring,
    ring_map_kernel,
)
from .morphisms import RingMorphism, identity_morphism
from .poly import ExactPolynomial, VariableTable, exact_divide
from .rootdata import (
    AmbientRing,
    CoulombProblem,
    Weight,
    ambient_table,
    coordinate_names,
    weyl_generator_morphisms,
)

Element = Union[ExactPolynomial, FactoredFraction]


@dataclass(frozen=True)
class RingPresentation:
    """A ring given by generators-as-variables and a relation ideal."""

    table: VariableTable
    relations: tuple[ExactPolynomial, ...]
    kind: str  # "pure-torus" | "blowup" | "matter-subring"
    ring: Optional[AmbientRing] = None
    weyl: tuple[RingMorphism, ...] = ()
    derived: tuple[tuple[str, FactoredFraction], ...] = ()
    generators: tuple[tuple[str, FactoredFraction], ...] = ()


def _as_fraction(ring: AmbientRing, f: Element) -> FactoredFraction:
    if isinstance(f, ExactPolynomial):
        return ring.fraction(f)
    return f


# ---------------------------------------------------------------------------
# Pure branches and the blowup chart
# ---------------------------------------------------------------------------


def blowup_relations(ring: AmbientRing) -> tuple[ExactPolynomial, ...]:
    """tau_k * u_k - z_k + 1 for each SU(2) block."""
    rels = []
    for k in range(ring.blocks):
        pos = ring.problem.datum.block_coordinate(k)
        rels.append(ring.tau(pos) * ring.u(k) - ring.z(pos) + ring.table.one())
    return tuple(rels)


def pure_branch(problem: CoulombProblem) -> RingPresentation:
    """The massive pure branch; SU(2) factors are presented on the blowup."""
    if problem.datum.su2_blocks:
        return blowup_presentation(problem)
    ring = ambient_table(problem)
    return RingPresentation(ring.table, (), "pure-torus", ring=ring)


def blowup_presentation(problem: CoulombProblem) -> RingPresentation:
    ring = ambient_table(problem)
    if not problem.datum.su2_blocks:
        return RingPresentation(ring.table, (), "pure-torus", ring=ring)
    derived = []
    for k in range(problem.datum.su2_blocks):
        pos = problem.datum.block_coordinate(k)
        v = ring.fraction(ring.u(k)) * ring.fraction(ring.z(pos)) ** -1
        name = "v" if problem.datum.su2_blocks == 1 else f"v{k + 1}"
        derived.append((name, v))
    return RingPresentation(
        ring.table,
        blowup_relations(ring),
        "blowup",
        ring=ring,
        weyl=tuple(weyl_generator_morphisms(ring)),
        derived=tuple(derived),
    )


@lru_cache(maxsize=None)
def expansion_morphism(ring: AmbientRing) -> RingMorphism:
    """Rewrite blowup generators through u_k = (z_k - 1)/tau_k."""
    images = {}
    for k in range(ring.blocks):
        pos = ring.problem.datum.block_coordinate(k)
        tau_idx = ring.tau_factor_index(pos)
        images[ring.u_names[k]] = FactoredFraction(
            ring.factors, ring.z(pos) - ring.table.one(), ((tau_idx, 1),)
        )
    return RingMorphism(ring.table, ring.factors, images, kind="blowup-expansion")


def expand(ring: AmbientRing, f: Element) -> FactoredFraction:
    """Canonical form of a blowup element inside the localized Laurent ring."""
    return expansion_morphism(ring)(f)


def blowup_equal(ring: AmbientRing, f: Element, g: Element) -> bool:
    """Equality modulo the blowup relations, via the injective expansion."""
    return expand(ring, f) == expand(ring, g)


def to_blowup_polynomial(ring: AmbientRing, f: Element) -> Optional[ExactPolynomial]:
    """Regular form of a localized element on the blowup chart, if any.

    A fraction with only block-tau denominators is regular exactly when,
    after substituting z_k = 1 + tau_k*u_k, the tau powers divide the
    numerator.  A fraction with any other declared denominator is never
    regular; the expansion of the result reproduces the input.
    """
    frac = _as_fraction(ring, f)
    block_tau = {
        ring.tau_factor_index(ring.problem.datum.block_coordinate(k)): k
        for k in range(ring.blocks)
    }
    tau_powers: dict[int, int] = {}
    for idx, exp in frac.denominator:
        if idx not in block_tau:
            return None
        tau_powers[idx] = exp
    num = frac.numerator
    # Strip negative block-z exponents: z_k is a unit of the chart.
    shifts = [0] * len(ring.table)
    for k in range(ring.blocks):
        pos = ring.problem.datum.block_coordinate(k)
        z_pos = ring.table.index(ring.z_names[pos])
        low = min((m[z_pos] for m in num.terms), default=0)
        if low < 0:
            shifts[z_pos] = low
    num = num.monomial_shifted(tuple(-s for s in shifts))
    for k in range(ring.blocks):
        pos = ring.problem.datum.block_coordinate(k)
        z_pos = ring.table.index(ring.z_names[pos])
        replacement = ring.table.one() + ring.tau(pos) * ring.u(k)
        num = num.assign_polynomial(z_pos, replacement)
    for idx, exp in sorted(tau_powers.items()):
        factor = ring.factors.factors[idx]
        for _ in range(exp):
            q = exact_divide(num, factor)
            if q is None:
                return None
            num = q
    return num.monomial_shifted(tuple(shifts))


# ---------------------------------------------------------------------------
# Sections of the Toda projection and translation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SectionSpec:
    """Per-z-coordinate entry of a rational section of the Toda projection.

    Entries are units of the target localization and depend only on the
    Cartan coordinates and the mass parameter.
    """

    problem: CoulombProblem
    side: str  # "tau" | "eta"
    target: FactorSet
    entries: tuple[tuple[str, FactoredFraction], ...]

    def __post_init__(self):
        from .fracs import unit_decompose

        for name, entry in self.entries:
            if entry.factors != self.target:
                raise AlgebraError(f"section entry {name} over a different ring")
            if unit_decompose(self.target, entry.numerator) is None:
                raise AlgebraError(f"section entry {name} is not a unit")

    def entry(self, z_name: str) -> FactoredFraction:
        return dict(self.entries)[z_name]

    def inverse(self) -> "SectionSpec":
        return SectionSpec(
            self.problem,
            self.side,
            self.target,
            tuple((n, e.inverse()) for n, e in self.entries),
        )

    def product(self, other: "SectionSpec") -> "SectionSpec":
        if other.target != self.target:
            raise AlgebraError("sections over different rings")
        mine = dict(self.entries)
        return SectionSpec(
            self.problem,
            self.side,
            self.target,
            tuple((n, mine[n] * e) for n, e in other.entries),
        )


def _section_exponents(problem: CoulombProblem) -> list[dict[Weight, int]]:
    """For each coordinate i, the exponent of each distinct weight form."""
    out: list[dict[Weight, int]] = []
    for i in range(problem.rank):
        exps: dict[Weight, int] = {}
        for w in problem.weights:
            if w[i]:
                exps[w] = exps.get(w, 0) + w[i]
        out.append({w: e for w, e in exps.items() if e})
    return out


def euler_section(problem: CoulombProblem, target) -> SectionSpec:
    """The section z_i -> prod_nu (mu + <nu, .>)^{nu_i} over a target ring.

    ``target`` is the ambient ring (Cartan side) or the equivariant ring of
    the ball model (eta side); both expose ``psi`` and ``factors``.
    """
    side = "tau" if isinstance(target, AmbientRing) else "eta"
    z_names = (
        target.z_names
        if isinstance(target, AmbientRing)
        else tuple(coordinate_names("z", problem.rank))
    )
    entries = []
    for i, exps in enumerate(_section_exponents(problem)):
        num = target.factors.one()
        den: dict[int, int] = {}
        for w, e in sorted(exps.items()):
            if e > 0:
                num = num * target.psi(w) ** e
            else:
                idx = target.psi_factor_index(w)
                den[idx] = den.get(idx, 0) - e
        entry = FactoredFraction(target.factors, num.as_polynomial(), den.items())
        entries.append((z_names[i], entry))
    return SectionSpec(problem, side, target.factors, tuple(entries))


def translate_by_section(ring: AmbientRing, section: SectionSpec) -> RingMorphism:
    """Translation automorphism of the localized branch along a section.

    z_i is scaled by the section entry; Cartan and mass variables are fixed;
    each blowup generator is carried to the regular form of (z_k*s_k - 1)/tau_k
    on the chart.  A section whose lift needs a denominator outside the
    declared set raises ``MorphismError``.
    """
    if section.side != "tau":
        raise MorphismError("translation needs a Cartan-side section")
    entries = dict(section.entries)
    images: dict[str, FactoredFraction] = {}
    for i, name in enumerate(ring.z_names):
        images[name] = ring.fraction(ring.z(i)) * entries[name]
    for k in range(ring.blocks):
        pos = ring.problem.datum.block_coordinate(k)
        s = entries[ring.z_names[pos]]
        numerator = ring.z(pos) * s.numerator - s.denominator_polynomial()
        z_pos = ring.table.index(ring.z_names[pos])
        numerator = numerator.assign_polynomial(
            z_pos, ring.table.one() + ring.tau(pos) * ring.u(k)
        )
        lifted = exact_divide(numerator, ring.tau(pos))
        if lifted is None:
            raise MorphismError(
                f"section entry for {ring.z_names[pos]} does not lift to the blowup chart"
            )
        images[ring.u_names[k]] = FactoredFraction(ring.factors, lifted, s.denominator)
    return RingMorphism(ring.table, ring.factors, images, kind="translation")


@lru_cache(maxsize=None)
def euler_translation(ring: AmbientRing) -> RingMorphism:
    return translate_by_section(ring, euler_section(ring.problem, ring))


# ---------------------------------------------------------------------------
# Weyl action and the Reynolds projector
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def weyl_group(ring: AmbientRing) -> tuple[RingMorphism, ...]:
    """All 2^b signed-permutation morphisms the block involutions generate."""
    generators = weyl_generator_morphisms(ring)
    elements = [identity_morphism(ring.factors, kind="weyl")]
    for gen in generators:
        elements += [w.then(gen) for w in elements]
    return tuple(elements)


def reynolds(ring: AmbientRing, f: Element) -> FactoredFraction:
    """Average over the Weyl group; a projector onto invariants."""
    value = expand(ring, _as_fraction(ring, f))
    group = weyl_group(ring)
    total = ring.factors.zero()
    for w in group:
        total = total + w(value)
    return total * Fraction(1, len(group))


def is_weyl_invariant(ring: AmbientRing, f: Element) -> bool:
    value = expand(ring, _as_fraction(ring, f))
    return reynolds(ring, value) == value


def toda_base_membership(ring: AmbientRing, f: Element) -> bool:
    """Whether f lies in the integrable-system base: Weyl-invariant in tau, mu."""
    frac = _as_fraction(ring, f)
    if not frac.is_polynomial:
        return False
    allowed = {ring.table.index("mu")}
    allowed.update(ring.table.index(n) for n in ring.tau_names)
    if not frac.numerator.used_indices() <= allowed:
        return False
    return is_weyl_invariant(ring, frac)


# ---------------------------------------------------------------------------
# Matter branch membership
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MembershipResult:
    member: bool
    translated: Optional[FactoredFraction] = None  # regular translate, when member
    offending: Optional[ExactPolynomial] = None  # first obstructing factor

    def __bool__(self) -> bool:
        return self.member


def _weight_pairing(weight: Weight, exponents: Sequence[int]) -> int:
    return sum(w * e for w, e in zip(weight, exponents))


def matter_membership(ring: AmbientRing, f: Element) -> MembershipResult:
    """Decide whether the translate of ``f`` stays regular.

    Abelian case: writing f as a sum of z-monomials times Cartan/mass
    coefficients, the translate of each sector is regular exactly when the
    negatively paired weight forms divide the coefficient; the first factor
    in declared order whose power fails is reported.  With SU(2) blocks the
    translate's cleared numerator is tested against the blowup relations
    plus the cleared denominator by a deterministic basis computation.
    """
    frac = _as_fraction(ring, f)
    if ring.blocks == 0:
        return _abelian_membership(ring, frac)
    return _blowup_membership(ring, frac)


def _abelian_membership(ring: AmbientRing, frac: FactoredFraction) -> MembershipResult:
    if not frac.is_polynomial:
        idx = frac.denominator[0][0]
        return MembershipResult(False, offending=ring.factors.factors[idx])
    z_positions = [ring.table.index(n) for n in ring.z_names]
    sectors = frac.numerator.sector_split(z_positions)
    distinct = ring.problem.distinct_weights()
    multiplicity = {w: ring.problem.weights.count(w) for w in distinct}
    translated = ring.table.zero()
    for m in sorted(sectors, reverse=True):
        coeff = sectors[m]
        required: dict[int, int] = {}
        positive = ring.table.one()
        for w in distinct:
            pairing = _weight_pairing(w, m)
            if pairing < 0:
                idx = ring.psi_factor_index(w)
                required[idx] = required.get(idx, 0) + (-pairing) * multiplicity[w]
            elif pairing > 0:
                positive = positive * ring.psi(w) ** (pairing * multiplicity[w])
        for idx in sorted(required):
            factor = ring.factors.factors[idx]
            for _ in range(required[idx]):
                q = exact_divide(coeff, factor)
                if q is None:
                    return MembershipResult(False, offending=factor)
                coeff = q
        shift = [0] * len(ring.table)
        for pos, e in zip(z_positions, m):
            shift[pos] = e
        translated = translated + (coeff * positive).monomial_shifted(tuple(shift))
    return MembershipResult(True, translated=ring.fraction(translated))


def _blowup_membership(ring: AmbientRing, frac: FactoredFraction) -> MembershipResult:
    translated = euler_translation(ring)(expand(ring, frac))
    numerator = translated.numerator
    denominator = translated.denominator_polynomial()
    enc = encode_ring(ring.factors, extra_relations=blowup_relations(ring))
    gens = list(enc.relations) + [enc.encode_polynomial(denominator)]
    basis = buchberger(Ideal(enc.table, tuple(gens)), GREVLEX)
    if basis.contains(enc.encode_polynomial(numerator)):
        regular = to_blowup_polynomial(ring, translated)
        if regular is None:
            raise AlgebraError("membership routes disagree; regular form not found")
        return MembershipResult(True, translated=ring.fraction(regular))
    block_tau = {
        ring.tau_factor_index(ring.problem.datum.block_coordinate(k))
        for k in range(ring.blocks)
    }
    for idx, _ in translated.denominator:
        if idx not in block_tau:
            return MembershipResult(False, offending=ring.factors.factors[idx])
    for idx, _ in translated.denominator:
        return MembershipResult(False, offending=ring.factors.factors[idx])
    raise AlgebraError("translate is polynomial yet not ideal-regular")


def translation_regular_by_division(ring: AmbientRing, f: Element) -> bool:
    """Independent regularity check: clear the translate and divide exactly.

    Used as a cross-check of the sector criterion and of the ideal route:
    the translate is regular exactly when its fully reduced form has no
    denominator (abelian) or only block-tau denominators that the chart
    absorbs (SU(2) blocks).
    """
    translated = euler_translation(ring)(expand(ring, _as_fraction(ring, f)))
    if ring.blocks == 0:
        return translated.is_polynomial
    return to_blowup_polynomial(ring, translated) is not None


# ---------------------------------------------------------------------------
# Matter generators and presentations
# ---------------------------------------------------------------------------


def _grid_name(rank: int, m: tuple[int, ...]) -> str:
    if rank == 1:
        (e,) = m
        if e > 0:
            return "x" if e == 1 else f"x{e}"
        return "y" if e == -1 else f"y{-e}"
    return "g_" + "_".join(str(c) if c >= 0 else f"m{-c}" for c in m)


def abelian_matter_generators(
    ring: AmbientRing, degree_window: int
) -> list[tuple[str, ExactPolynomial]]:
    """Minimal-clearing generators of the matter subring up to a z-degree bound.

    Returns mu, the Cartan variables, and for every nonzero exponent vector
    m with sup-norm at most the window the element z^m times the exactly
    required weight-form powers.  Every returned element passes membership;
    the list generates all members supported in the window together with
    the Cartan/mass polynomials.
    """
    if ring.blocks:
        raise ProblemError("minimal-clearing generators require an abelian group")
    if degree_window < 1:
        raise ProblemError("degree window must be at least 1")
    problem = ring.problem
    gens: list[tuple[str, ExactPolynomial]] = [("mu", ring.mu())]
    for j, name in enumerate(ring.tau_names):
        gens.append((name, ring.tau(j)))
    distinct = problem.distinct_weights()
    multiplicity = {w: problem.weights.count(w) for w in distinct}
    grid = sorted(
        itertools.product(range(-degree_window, degree_window + 1), repeat=problem.rank),
        reverse=True,
    )
    z_positions = [ring.table.index(n) for n in ring.z_names]
    for m in grid:
        if all(e == 0 for e in m):
            continue
        clearing = ring.table.one()
        for w in distinct:
            pairing = _weight_pairing(w, m)
            if pairing < 0:
                clearing = clearing * ring.psi(w) ** ((-pairing) * multiplicity[w])
        shift = [0] * len(ring.table)
        for pos, e in zip(z_positions, m):
            shift[pos] = e
        gens.append((_grid_name(problem.rank, m), clearing.monomial_shifted(tuple(shift))))
    return gens


def _scalar_normalized(frac: FactoredFraction) -> FactoredFraction:
    if frac.is_zero:
        return frac
    _, lead = frac.numerator.leading()
    return frac * (Fraction(1) / lead)


def weyl_symmetrized_generators(
    ring: AmbientRing, generators: Sequence[tuple[str, Element]]
) -> list[tuple[str, FactoredFraction]]:
    """Close a generator list under Reynolds averaging of degree-2 products.

    Invariant generators are kept as they are; non-invariant ones contribute
    their average and the averages of their pairwise products.  A product
    with an invariant factor averages to that factor times an existing
    average, so only pairs of non-invariant generators add anything to the
    generated subalgebra.  Results are deduplicated up to scalar.
    """
    expanded = [(n, expand(ring, _as_fraction(ring, g))) for n, g in generators]
    invariant = {n: reynolds(ring, g) == g for n, g in expanded}
    out: list[tuple[str, FactoredFraction]] = []
    seen: list[FactoredFraction] = []

    def push(name: str, value: FactoredFraction):
        if value.is_zero or value.numerator.is_constant and value.is_polynomial:
            return
        marker = _scalar_normalized(value)
        if any(marker == s for s in seen):
            return
        seen.append(marker)
        out.append((name, value))

    for name, g in expanded:
        push(name if invariant[name] else f"s_{name}", reynolds(ring, g))
    for i, (n1, g1) in enumerate(expanded):
        for n2, g2 in expanded[i:]:
            if invariant[n1] or invariant[n2]:
                continue
            push(f"s_{n1}_{n2}", reynolds(ring, g1 * g2))
    return out


def matter_presentation(
    ring: AmbientRing, generators: Sequence[tuple[str, Element]]
) -> RingPresentation:
    """Relations among matter generators, by elimination through the graph.

    Every supplied generator must pass membership; with SU(2) blocks the
    list is first closed under degree-2 Weyl symmetrization and rewritten
    in chart coordinates before the kernel is computed.
    """
    named = [(n, _as_fraction(ring, g)) for n, g in generators]
    for name, g in named:
        res = matter_membership(ring, g)
        if not res:
            from .printing import format_polynomial

            raise AlgebraError(
                f"generator {name} is not in the matter subring"
                + (f" (offending factor {format_polynomial(res.offending)})" if res.offending else "")
            )
    if ring.blocks:
        symmetrized = weyl_symmetrized_generators(ring, named)
        images = []
        for name, g in symmetrized:
            poly = to_blowup_polynomial(ring, g)
            if poly is None:
                raise AlgebraError(f"symmetrized generator {name} left the chart")
            images.append((name, ring.fraction(poly)))
        relations = ring_map_kernel(images, ambient_relations=blowup_relations(ring))
        kept = images
    else:
        images = [(n, g) for n, g in named]
        relations = ring_map_kernel(images)
        kept = images
    return RingPresentation(
        relations.table,
        relations.generators,
        "matter-subring",
        ring=ring,
        generators=tuple(kept),
    )


# ---------------------------------------------------------------------------
# The zero-mass fiber
# ---------------------------------------------------------------------------


def set_mu_zero(f: Element) -> ExactPolynomial:
    """Evaluate a polynomial element at mu = 0 (table unchanged)."""
    poly = f.as_polynomial() if isinstance(f, FactoredFraction) else f
    return poly.assign_zero(poly.table.index("mu"))


def mu_zero_fiber(presentation: RingPresentation) -> RingPresentation:
    """Specialize a presentation to the fiber over mu = 0 and drop mu."""
    table = presentation.table
    if "mu" not in table.names:
        raise AlgebraError("mu is not among the presentation variables")
    pos = table.index("mu")
    names = tuple(n for i, n in enumerate(table.names) if i != pos)
    flags = tuple(f for i, f in enumerate(table.laurent) if i != pos)
    new_table = VariableTable(names, flags)
    relations = []
    for rel in presentation.relations:
        specialized = rel.assign_zero(pos)
        if not specialized.is_zero:
            relations.append(specialized.transfer(new_table))
    return RingPresentation(
        new_table,
        tuple(relations),
        presentation.kind + " at mu=0",
    )
