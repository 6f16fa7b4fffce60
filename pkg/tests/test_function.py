"""Minterm canonical form, evaluation, cofactors, expansion identities."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from onsolve import (
    BoolFunction,
    Term,
    cofactor,
    minterm_function,
    parse,
    shannon_pos,
    shannon_sop,
    term_to_function,
    to_expression,
)
from onsolve.parsing import Const, Not, Prod, Sum, Var

from helpers import (
    B0,
    B2,
    all_points,
    minterm_sum_eval,
    rand_element,
    rand_function,
)

WORKED_F = "x + x*y'*z + x*y + x'*z' + x*y' + x*y*z"


def worked_f():
    return parse(WORKED_F, 3, B0)


def test_parse_tautology():
    assert [c.mask for c in parse("x1 + x1'", 1, B0).coeffs] == [1, 1]


def test_parse_worked_example_table():
    # f(0,y,0) = 1, f(0,y,1) = 0, f(1,y,z) = 1 for all y,z
    assert [c.mask for c in worked_f().coeffs] == [1, 0, 1, 0, 1, 1, 1, 1]


def test_parse_zero():
    assert parse("0", 2, B0).is_zero


def test_evaluate_worked_example_solution():
    f = worked_f()
    assert f.evaluate((B0.zero, B0.one, B0.one)).is_zero


def test_evaluate_at_01_points_returns_coeffs():
    rng = random.Random(3)
    f = rand_function(B2, 3, rng)
    for j in range(8):
        bits = [(j >> (2 - i)) & 1 for i in range(3)]
        point = tuple(B2.one if b else B2.zero for b in bits)
        assert f.evaluate(point) == f.coeff(j)
        assert f.evaluate_bits(bits) == f.coeff(j)


def _random_expr(rng, n, algebra, depth=3):
    if depth == 0 or rng.random() < 0.3:
        if rng.random() < 0.5 and n:
            return Var(rng.randrange(n))
        return Const(rand_element(algebra, rng))
    kind = rng.randrange(3)
    if kind == 0:
        return Sum(tuple(_random_expr(rng, n, algebra, depth - 1)
                         for _ in range(2)))
    if kind == 1:
        return Prod(tuple(_random_expr(rng, n, algebra, depth - 1)
                          for _ in range(2)))
    return Not(_random_expr(rng, n, algebra, depth - 1))


def test_table_evaluation_matches_ast_interpreter():
    rng = random.Random(11)
    for _ in range(60):
        expr = _random_expr(rng, 3, B2)
        f = BoolFunction.from_expr(expr, 3, B2)
        point = tuple(rand_element(B2, rng) for _ in range(3))
        assert f.evaluate(point) == expr.evaluate(point, B2)


def test_minterm_reconstruction_exhaustive():
    # k*n = 8: every point of B**n agrees with the literal minterm sum
    rng = random.Random(5)
    f = rand_function(B2, 4, rng)
    for point in all_points(B2, 4):
        assert f.evaluate(point) == minterm_sum_eval(f, point)


def test_cofactor_worked_example():
    f = worked_f()
    c1 = f.cofactor(0, 1)
    assert c1.is_one  # arity kept, variable x inert
    assert [c.mask for c in c1.restrict({0: 0}).coeffs] == [1, 1, 1, 1]
    c0 = f.cofactor(0, 0)
    # f(0,y,z) = z'
    assert [c.mask for c in c0.restrict({0: 0}).coeffs] == [1, 0, 1, 0]


def test_cofactor_of_constant_and_variable():
    c = BoolFunction.constant(B2, 2, B2.atom(1))
    assert c.cofactor(0, 1) == c
    x1 = BoolFunction.variable(B0, 1, 0)
    assert x1.cofactor(0, 0).is_zero


def test_cofactor_idempotent():
    f = worked_f()
    for i in range(3):
        for v in (0, 1):
            g = f.cofactor(i, v)
            assert g.cofactor(i, v) == g


def test_cofactor_errors():
    f = worked_f()
    with pytest.raises(IndexError):
        f.cofactor(3, 0)
    with pytest.raises(ValueError):
        f.cofactor(0, 2)


def test_shannon_sop_on_single_variable():
    x1 = BoolFunction.variable(B0, 1, 0)
    c1, c0 = shannon_sop(x1, 0)
    assert c1.is_one and c0.is_zero


def test_shannon_pair_on_worked_example():
    f = worked_f()
    c1, c0 = shannon_sop(f, 0)
    assert c1.is_one
    zprime = parse("z'", 3, B0)
    assert c0 == zprime


@settings(max_examples=200)
@given(st.lists(st.integers(0, 3), min_size=8, max_size=8), st.integers(0, 2),
       st.integers(0, 4 ** 3 - 1))
def test_shannon_reconstruction_pointwise(masks, i, seed):
    f = BoolFunction.from_coeffs(B2, 3, [B2.element(m) for m in masks])
    xi = BoolFunction.variable(B2, 3, i)
    c1, c0 = shannon_sop(f, i)
    assert xi * c1 + (~xi) * c0 == f
    d0, d1 = shannon_pos(f, i)
    assert (xi + d0) * (~xi + d1) == f
    # the identities also hold at an arbitrary point of B**n
    point = tuple(B2.element(seed >> (2 * t) & 3) for t in range(3))
    lhs = (xi * c1 + (~xi) * c0).evaluate(point)
    assert lhs == f.evaluate(point)


def test_term_to_function():
    assert term_to_function(Term((-1, -1)), 2, B0).is_one
    t = term_to_function(Term((1, 0)), 2, B0)
    assert [c.mask for c in t.coeffs] == [0, 0, 1, 0]
    ladder = term_to_function(Term((1, 1, 0)), 3, B0)
    assert ladder.support() == (6,)  # the single point 110


def test_term_padding_and_errors():
    padded = term_to_function(Term((1,)), 2, B0)
    assert padded.support() == (2, 3)
    with pytest.raises(ValueError):
        term_to_function(Term((1, 1, 1)), 2, B0)
    with pytest.raises(ValueError):
        Term((2, 0))
    assert Term((1, -1, 0)).text() == "x1*x3'"


def test_minterm_function():
    mu = minterm_function(B2, 2, 3)
    assert mu.support() == (3,)
    assert mu.coeff(3) == B2.one


def test_from_coeffs_roundtrip_and_arity():
    rng = random.Random(9)
    coeffs = [rand_element(B2, rng) for _ in range(8)]
    f = BoolFunction.from_coeffs(B2, 3, coeffs)
    assert list(f.coeffs) == coeffs
    with pytest.raises(ValueError):
        BoolFunction.from_coeffs(B2, 2, coeffs)
    with pytest.raises(ValueError):
        f.evaluate((B2.one,))


def test_var_cap_enforced():
    with pytest.raises(ValueError):
        BoolFunction.constant(B0, 25, B0.zero)
    assert BoolFunction.constant(B0, 25, B0.zero, var_cap=25).is_zero
    with pytest.raises(ValueError):
        parse("x1", 9, B0, var_cap=8)


def test_function_operators_match_pointwise():
    rng = random.Random(13)
    f = rand_function(B2, 2, rng)
    g = rand_function(B2, 2, rng)
    for point in all_points(B2, 2):
        assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
        assert (f + g).evaluate(point) == f.evaluate(point) + g.evaluate(point)
        assert (~f).evaluate(point) == ~f.evaluate(point)


def test_tables_are_immutable():
    f = worked_f()
    with pytest.raises(ValueError):
        f.table[0] = False


def test_to_expression_roundtrip():
    rng = random.Random(17)
    f = rand_function(B2, 3, rng)
    again = parse(to_expression(f), 3, B2)
    assert again == f
    assert to_expression(parse("0", 2, B0)) == "0"


def test_wide_algebra_tables():
    import onsolve

    wide = onsolve.Algebra(80, atom_cap=128)
    a = wide.atom(75)
    f = BoolFunction.from_coeffs(wide, 1, [a, ~a])
    assert f.evaluate((wide.zero,)) == a
    assert (f * ~f).is_zero
    assert cofactor(f, 0, 1).coeff(0) == ~a
