from __future__ import annotations

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolean_oracle import act_on_refinement, as_function, evaluate, q_value, refinements
from conftest import classes, symplectic_matrices
from torelli_bcj.boolean import (
    BoolElement,
    bar,
    degree,
    monomials,
    multiply,
    sp_action,
    stabilize,
)
from torelli_bcj.symplectic import a, b, gl_elementary, gl_embed, omega, transvection_power


def elements(g: int):
    return st.frozensets(st.integers(0, (1 << (2 * g)) - 1), max_size=8).map(lambda t: BoolElement(g, t))


def P(text: str, g: int = 3) -> BoolElement:
    return BoolElement.parse(text, g)


def test_bar_examples():
    g = 2
    assert bar(a(g, 1)) == P("a1", g)
    assert bar(a(g, 1) + b(g, 1)) == P("a1 + b1 + 1", g)
    assert bar(0 * a(g, 1)) == BoolElement.zero(g)


def test_multiply_examples():
    assert multiply(P("a1"), P("a1")) == P("a1")
    assert multiply(P("a1"), P("b1")) == P("a1*b1")
    x = P("a1 + 1")
    assert multiply(x, x) == x


def test_sp_action_examples():
    g = 2
    assert sp_action(gl_embed(gl_elementary(g, 2, 1)), P("a1", g)) == P("a1 + a2", g)
    T = transvection_power(a(g, 1) + b(g, 1), 1)
    assert sp_action(T, P("a1", g)) == P("b1", g)
    assert sp_action(T @ T.inverse(), P("a1*b2 + 1", g)) == P("a1*b2 + 1", g)


def test_degree_and_stabilize_examples():
    assert degree(P("1")) == 0
    assert degree(P("a1*b1 + a1")) == 2
    assert degree(P("a1*a2*a3")) == 3
    assert degree(BoolElement.zero(3)) == -math.inf
    assert stabilize(P("1", 2), 3) == P("1", 3)
    assert stabilize(P("a1*b1", 2), 4) == P("a1*b1", 4)
    assert stabilize(P("b2", 2), 3) == P("b2", 3)


def test_render_parse_round_trip():
    p = P("1 + a1 + a1*b1 + a2*b3*b1")
    assert p.render() == "1 + a1 + a1*b1 + a2*b1*b3"
    assert P(p.render()) == p
    assert BoolElement.zero(3).render() == "0"
    with pytest.raises(ValueError):
        P("a7")


@given(classes(3), classes(3))
def test_relation_a(x, y):
    k = omega(x, y) % 2
    lhs = bar(x + y)
    rhs = bar(x) + bar(y) + (BoolElement.one(3) if k else BoolElement.zero(3))
    assert lhs == rhs


@given(classes(2))
def test_bar_matches_refinement_oracle(x):
    for q in refinements(2):
        assert evaluate(bar(x), q) == q_value(q, x)


@given(elements(2), elements(2))
def test_multiplication_matches_pointwise_product(p, r):
    fp, fr, fpr = as_function(p), as_function(r), as_function(p * r)
    assert fpr == tuple(u & v for u, v in zip(fp, fr))
    assert as_function(p + r) == tuple(u ^ v for u, v in zip(fp, fr))


def test_monomial_basis_is_a_basis():
    # the monomials evaluate to linearly independent functions
    g = 2
    funcs = {as_function(BoolElement(g, frozenset({m}))) for m in monomials(g, 2 * g)}
    assert len(funcs) == 2 ** (2 * g)


@given(symplectic_matrices(2, 4), elements(2))
def test_sp_action_matches_precomposition(M, p):
    image = sp_action(M, p)
    for q in refinements(2):
        assert evaluate(image, q) == evaluate(p, act_on_refinement(M, q))


@given(st.integers(1, 5).flatmap(lambda g: st.tuples(elements(g), elements(g), elements(g))))
def test_ring_axioms(triple):
    p, q, r = triple
    g = p.genus
    one, zero = BoolElement.one(g), BoolElement.zero(g)
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * one == p and p + zero == p and p + p == zero
    assert p * p == p


@given(symplectic_matrices(3, 4), symplectic_matrices(3, 4), elements(3), elements(3))
def test_action_is_an_algebra_action(M, N, p, r):
    assert sp_action(M, p * r) == sp_action(M, p) * sp_action(M, r)
    assert sp_action(M @ N, p) == sp_action(M, sp_action(N, p))


@given(symplectic_matrices(2, 4), classes(2))
def test_action_on_bar(M, x):
    assert sp_action(M, bar(x)) == bar(M.apply(x))
