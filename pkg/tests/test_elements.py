from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import contexts
from walled_brauer.coefficients import DELTA, ONE, DeltaPoly
from walled_brauer.diagrams import compose, word_to_diagram
from walled_brauer.elements import (
    AlgebraElement,
    format_element,
    gen,
    left_mul_case,
    left_mul_gen,
    left_mul_guards,
    mul,
    mul_words,
    parse_element,
)
from walled_brauer.normal_form import enumerate_basis, normal_word_of
from walled_brauer.words import Context, WordError

C21, C22, C23 = Context(2, 1), Context(2, 2), Context(2, 3)


def basis_words(ctx):
    return [nw.word for nw in enumerate_basis(ctx)]


@st.composite
def elements(draw, ctx, max_terms=3):
    ws = draw(st.lists(st.sampled_from(basis_words(ctx)), max_size=max_terms))
    cs = draw(st.lists(st.integers(-3, 3), min_size=len(ws), max_size=len(ws)))
    es = draw(st.lists(st.integers(0, 2), min_size=len(ws), max_size=len(ws)))
    return AlgebraElement.build(ctx, [(w, DeltaPoly.monomial(e, c)) for w, c, e in zip(ws, cs, es)])


@st.composite
def ctx_and_elements(draw, k=3):
    ctx = draw(contexts(2, 2))
    return ctx, [draw(elements(ctx)) for _ in range(k)]


def test_mul_examples():
    assert mul_words((2,), (2,), C21) == AlgebraElement.word(C21, (2,), DELTA)
    assert gen(1, C21) * gen(1, C21) == AlgebraElement.one(C21)
    assert mul_words((2,), (1, 2), C21) == AlgebraElement.word(C21, (2,))
    a = parse_element("s2 + d*e", C21)
    assert format_element(a * parse_element("s2", C21)) == "2*d*s2"


@given(ctx_and_elements())
def test_associativity_and_distributivity(data):
    _, (a, b, c) = data
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(ctx_and_elements(2))
def test_vector_space_axioms(data):
    ctx, (a, b) = data
    z = AlgebraElement.zero(ctx)
    assert a + z == a and a - a == z
    assert a + b == b + a
    assert a.scale(DELTA).scale(2) == a.scale(2 * DELTA)
    assert AlgebraElement.one(ctx) * a == a == a * AlgebraElement.one(ctx)


def test_mul_matches_diagrams_b22():
    words = basis_words(C22)
    for u in words:
        du = word_to_diagram(u, C22)[1]
        for v in words:
            k, d = compose(du, word_to_diagram(v, C22)[1])
            assert mul_words(u, v, C22) == AlgebraElement.word(C22, normal_word_of(d, C22), DeltaPoly.monomial(k))


def test_left_table_examples():
    assert left_mul_gen(2, (1,), C21) == AlgebraElement.word(C21, (2, 1))
    assert left_mul_case(2, _nw((1,), C21), C21)[0] == "III"
    assert left_mul_gen(2, (2,), C21) == AlgebraElement.word(C21, (2,), DELTA)
    assert left_mul_case(2, _nw((2,), C21), C21)[0] == "IIa"
    assert left_mul_gen(4, (3, 2), C23) == AlgebraElement.word(C23, (4, 3, 2))
    assert left_mul_case(4, _nw((3, 2), C23), C23)[0] == "IVa"
    with pytest.raises(ValueError):
        left_mul_gen(5, (), C23)


def _nw(w, ctx):
    return next(nw for nw in enumerate_basis(ctx) if nw.word == w)


@pytest.mark.parametrize("ctx", [Context(r, s) for r in (1, 2) for s in (1, 2, 3)])
def test_left_table_agrees_with_mul(ctx):
    for nw in enumerate_basis(ctx):
        for p in range(1, ctx.n):
            assert left_mul_gen(p, nw, ctx) == mul(gen(p, ctx), AlgebraElement.word(ctx, nw.word))
            assert left_mul_guards(p, nw, ctx) == [left_mul_case(p, nw, ctx)[0]]


def test_element_text_examples():
    ctx = C21
    a = parse_element("(d^2-1)*s2 s1 + 2*e", ctx)
    assert a.coefficient((2, 1)) == DELTA * DELTA - 1
    assert a.coefficient(()) == 2 * ONE
    assert format_element(a) == "2*e + (d^2 - 1)*s2 s1"
    assert parse_element("s1 s1", ctx) == AlgebraElement.one(ctx)
    assert format_element(AlgebraElement.zero(ctx)) == "0"
    assert format_element(parse_element("-s2", ctx)) == "-s2"
    for bad in ("", "s2 +", "(s2", "s7", "2*"):
        with pytest.raises((WordError, ValueError)):
            parse_element(bad, ctx)


@given(ctx_and_elements(1))
def test_format_parse_round_trip(data):
    ctx, (a,) = data
    assert parse_element(format_element(a), ctx) == a


@given(ctx_and_elements(1), st.integers(-4, 4))
def test_evaluate(data, x):
    _, (a,) = data
    ev = a.evaluate(x)
    for w, c in a.sorted_terms():
        assert ev.get(w, 0) == c.eval(x)
