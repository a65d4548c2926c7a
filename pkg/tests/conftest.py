"""Shared fixtures and seeded random element generators."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from coulombalg import (
    AmbientRing,
    CoulombProblem,
    ExactPolynomial,
    VariableTable,
    ambient_table,
)


@pytest.fixture
def u1_pm1() -> AmbientRing:
    """U(1) with a weight pair (+1, -1)."""
    return ambient_table(CoulombProblem.make(1, 0, [(1,), (-1,)]))


@pytest.fixture
def su2_standard() -> AmbientRing:
    """SU(2) with the standard two-dimensional representation."""
    return ambient_table(CoulombProblem.make(0, 1, [(1,), (-1,)]))


@pytest.fixture
def torus2() -> AmbientRing:
    return ambient_table(CoulombProblem.make(2, 0, []))


def rand_coeff(rng: random.Random, height: int = 10) -> Fraction:
    num = rng.randint(-height, height)
    den = rng.randint(1, height)
    return Fraction(num, den)


def rand_polynomial(
    rng: random.Random,
    table: VariableTable,
    max_terms: int = 4,
    max_degree: int = 3,
    height: int = 10,
) -> ExactPolynomial:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = []
        for flag in table.laurent:
            low = -max_degree if flag else 0
            mono.append(rng.randint(low, max_degree))
        coeff = rand_coeff(rng, height)
        if coeff:
            terms[tuple(mono)] = coeff
    return ExactPolynomial(table, terms)


def rand_pure_element(
    rng: random.Random,
    ring: AmbientRing,
    max_terms: int = 4,
    zmax: int = 3,
    degmax: int = 3,
    height: int = 10,
) -> ExactPolynomial:
    """Random element of the pure branch: z-monomials times tau/mu coefficients."""
    table = ring.table
    z_positions = [table.index(n) for n in ring.z_names]
    tau_positions = [table.index(n) for n in ring.tau_names] + [table.index("mu")]
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = [0] * len(table)
        for pos in z_positions:
            mono[pos] = rng.randint(-zmax, zmax)
        for pos in tau_positions:
            mono[pos] = rng.randint(0, degmax)
        coeff = rand_coeff(rng, height)
        if coeff:
            terms[tuple(mono)] = coeff
    return ExactPolynomial(table, terms)


def rand_blowup_element(
    rng: random.Random,
    ring: AmbientRing,
    max_terms: int = 4,
    zmax: int = 2,
    degmax: int = 2,
    height: int = 8,
) -> ExactPolynomial:
    """Random chart element: polynomial in mu, tau, u and Laurent in z."""
    table = ring.table
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = []
        for pos, flag in enumerate(table.laurent):
            if flag:
                mono.append(rng.randint(-zmax, zmax))
            else:
                mono.append(rng.randint(0, degmax))
        coeff = rand_coeff(rng, height)
        if coeff:
            terms[tuple(mono)] = coeff
    return ExactPolynomial(table, terms)


def rand_member(rng: random.Random, ring: AmbientRing, generators, size: int = 3):
    """Random element of the subring the generators span."""
    total = ring.factors.zero()
    for _ in range(rng.randint(1, size)):
        term = ring.factors.constant(rand_coeff(rng, 6) or 1)
        for _ in range(rng.randint(1, size)):
            _, g = generators[rng.randrange(len(generators))]
            term = term * g
        total = total + term
    return total


def rand_abelian_problem(rng: random.Random) -> CoulombProblem:
    """Random abelian problem whose weights span the coordinate space.

    Spanning keeps the section evaluation faithful sector by sector, which
    the element-level membership/image comparison needs.
    """
    rank = rng.randint(1, 2)
    while True:
        count = rng.randint(1, 4)
        weights = [
            tuple(rng.randint(-2, 2) for _ in range(rank)) for _ in range(count)
        ]
        if rank == 1:
            if any(w[0] for w in weights):
                return CoulombProblem.make(rank, 0, weights)
            continue
        m = [list(weights[i]) for i in range(count)]
        # rank-2 spanning check via a nonzero 2x2 determinant
        spanning = any(
            m[i][0] * m[j][1] - m[i][1] * m[j][0]
            for i in range(count)
            for j in range(i + 1, count)
        )
        if spanning:
            return CoulombProblem.make(rank, 0, weights)
