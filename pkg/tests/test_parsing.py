"""Expression grammar, canonical printing, round trips."""

import random

import pytest

from coulombalg import (
    ExpressionError,
    FactoredFraction,
    FactorSet,
    VariableTable,
    format_element,
    format_fraction,
    format_polynomial,
    parse_expression,
)
from conftest import rand_polynomial

TABLE = VariableTable.make([("mu", False), ("tau", False), ("z", True)])
mu, tau, z = (TABLE.var(n) for n in ("mu", "tau", "z"))
FS = FactorSet(TABLE, (tau, mu + tau, mu - tau, z))


def test_parse_weight_cleared_generator():
    f = parse_expression("z*(mu - tau)", FS)
    assert f == FS.from_polynomial(z * (mu - tau))


def test_parse_blowup_generator():
    f = parse_expression("(z - 1)/tau", FS)
    assert f.numerator == z - 1
    assert f.denominator == ((0, 1),)


def test_parse_rejects_undeclared_denominator():
    with pytest.raises(ExpressionError):
        parse_expression("1/(z + tau)", FS)


def test_parse_errors():
    with pytest.raises(ExpressionError):
        parse_expression("q + 1", FS)  # unknown variable
    with pytest.raises(ExpressionError):
        parse_expression("z^tau", FS)  # non-integer exponent
    with pytest.raises(ExpressionError):
        parse_expression("z^2^3", FS)  # chained exponent
    with pytest.raises(ExpressionError):
        parse_expression("1/0", FS)
    with pytest.raises(ExpressionError):
        parse_expression("(z + 1", FS)
    with pytest.raises(ExpressionError):
        parse_expression("z $ 2", FS)


def test_precedence():
    assert parse_expression("-z^2", FS) == FS.from_polynomial(-(z ** 2))
    assert parse_expression("2*z/2", FS) == FS.var("z")
    assert parse_expression("1 + 2*3", FS) == FS.constant(7)
    assert parse_expression("(1 + 2)*3", FS) == FS.constant(9)
    assert parse_expression("z^-1", FS) == FS.from_polynomial(z ** -1)
    assert parse_expression("z^(-2)", FS) == FS.from_polynomial(z ** -2)
    assert parse_expression("3/2*z", FS) == FS.from_polynomial(z.scaled("3/2"))
    assert parse_expression("1 - 2 - 3", FS) == FS.constant(-4)
    assert parse_expression("8/4/2", FS) == FS.constant(1)


def test_parse_inverse_of_declared_linear_form():
    f = parse_expression("(mu - tau)^-1", FS)
    assert f.numerator == TABLE.one()
    assert f.denominator == ((FS.index_of(mu - tau), 1),)


def test_print_examples():
    tag_table = VariableTable.make(
        [("x", False), ("y", False), ("mu", False), ("tau", False)]
    )
    relation = (
        tag_table.var("x") * tag_table.var("y")
        - tag_table.var("mu") ** 2
        + tag_table.var("tau") ** 2
    )
    assert format_polynomial(relation) == "x*y - mu^2 + tau^2"
    assert format_polynomial(TABLE.zero()) == "0"
    f = FactoredFraction(FS, z - 1, ((0, 1),))
    assert format_fraction(f) == "(z - 1) / (tau)"


def test_print_coefficients():
    p = z.scaled("3/2") - mu.scaled(1) + TABLE.constant("1/3")
    assert format_polynomial(p) == "-mu + 3/2*z + 1/3"


def test_roundtrip_random_elements():
    rng = random.Random(109)
    done = 0
    while done < 500:
        num = rand_polynomial(rng, TABLE, max_terms=4, max_degree=3, height=9)
        den = []
        for i in range(3):
            e = rng.randint(0, 2)
            if e:
                den.append((i, e))
        f = FactoredFraction(FS, num, den)
        text = format_element(f)
        assert parse_expression(text, FS) == f
        done += 1
