from __future__ import annotations

import random
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from walled_brauer.cells import (
    ModuleElement,
    ModuleLabel,
    ModuleVector,
    X_set,
    Dbar,
    Bbar,
    act_diagram,
    act_element,
    act_word,
    annihilates,
    annihilator,
    annihilator_part1,
    annihilator_part2,
    annihilator_part3,
    annihilator_equals_kernel,
    block_SL,
    block_SR,
    expected_leading_words,
    module_basis,
    module_dim,
    module_labels,
    parse_label,
    part1_entries,
    shuffles_L,
    shuffles_R,
    star,
    theta_set,
    upsilon,
    v_f,
    varpi,
    verify_theorem1,
    wpp,
)
from walled_brauer.coefficients import DELTA, ONE
from walled_brauer.diagrams import gen_diagram
from walled_brauer.elements import AlgebraElement, format_element, mul, parse_element
from walled_brauer.normal_form import enumerate_basis
from walled_brauer.words import Context, ShapeError

C11, C21, C22 = Context(1, 1), Context(2, 1), Context(2, 2)
L21 = ModuleLabel(1, (1,), ())
SMALL = [Context(r, s) for r in (1, 2, 3) for s in (1, 2, 3) if r + s <= 5]


def test_labels():
    assert module_labels(C21) == [
        ModuleLabel(0, (2,), (1,)), ModuleLabel(0, (1, 1), (1,)), ModuleLabel(1, (1,), ()),
    ]
    # four at f=0, one each at f=1 and f=2; the squares of the dims sum to 4! = 24
    assert len(module_labels(C22)) == 6
    assert str(L21) == "f=1 L=[1] R=[]"
    assert parse_label("f=1 L=[1] R=[]") == L21
    with pytest.raises(ValueError):
        parse_label("f=1 L=[1]")
    with pytest.raises(ValueError):
        ModuleLabel(1, (2,), ()).check(C21)
    with pytest.raises(ValueError):
        ModuleLabel(2, (), ()).check(C21)


def test_module_dims():
    assert [module_dim(lab, C21) for lab in module_labels(C21)] == [1, 1, 2]
    assert module_dim(ModuleLabel(0, (1,), (1,)), C11) == 1
    for f in range(1, 5):
        assert module_dim(ModuleLabel(f, (), ()), Context(f, f)) == factorial(f)
    for r in range(1, 5):
        for s in range(1, 5):
            ctx = Context(r, s)
            assert sum(module_dim(lab, ctx) ** 2 for lab in module_labels(ctx)) == factorial(r + s)


def test_module_basis_size():
    for ctx in SMALL:
        for lab in module_labels(ctx):
            basis = module_basis(lab, ctx)
            assert len(basis) == len(set(basis)) == module_dim(lab, ctx)
            assert v_f(lab, ctx) in basis


def test_v_f_examples():
    v = v_f(L21, C21)
    assert v.matching == ((2, 3),) and v.tL == ((1,),) and v.tR == ()
    v0 = v_f(ModuleLabel(0, (2,), (1,)), C21)
    assert v0.matching == () and v0.tL == ((1, 2),) and v0.tR == ((1,),)
    big = v_f(ModuleLabel(3, (2, 1), (2,)), Context(6, 5))
    assert big.matching == ((4, 9), (5, 8), (6, 7))


def test_vector_serialization():
    v = v_f(L21, C21)
    assert v.to_dict() == {"matching": [[2, 3]], "tL": [[1]], "tR": []}
    assert ModuleVector.from_dict(v.to_dict()) == v
    assert str(v) == "|2->3; [[1]]; []>"
    m = ModuleElement.vector(v).scale(DELTA)
    assert m.to_dict() == [{"coeff": "d", "vector": v.to_dict()}]


def test_action_examples():
    v = v_f(L21, C21)
    mv = ModuleElement.vector(v)
    assert act_diagram(gen_diagram(2, C21), v) == mv.scale(DELTA)
    v0 = v_f(ModuleLabel(0, (1,), (1,)), C11)
    assert not act_diagram(gen_diagram(1, C11), v0)
    assert act_word((2, 1), v, C21) == mv
    assert act_element(AlgebraElement.one(C21), mv, C21) == mv
    assert act_element(parse_element("s2 s2", C21), mv, C21) == mv.scale(DELTA * DELTA)
    assert not act_element(parse_element("s2 - d*e", C21), mv, C21)
    assert annihilates(parse_element("s2 s1 - e", C21), L21, C21)


@st.composite
def module_axiom_case(draw):
    ctx = draw(st.sampled_from([C11, C21, Context(1, 2), C22, Context(3, 2), Context(2, 3)]))
    lab = draw(st.sampled_from(module_labels(ctx)))
    words = [nw.word for nw in enumerate_basis(ctx)]
    u, w = draw(st.sampled_from(words)), draw(st.sampled_from(words))
    v = draw(st.sampled_from(module_basis(lab, ctx)))
    return ctx, u, w, v


@given(module_axiom_case())
def test_module_axiom(case):
    ctx, u, w, v = case
    a, b = AlgebraElement.word(ctx, u), AlgebraElement.word(ctx, w)
    assert act_element(mul(a, b), v, ctx) == act_element(a, act_element(b, v, ctx), ctx)


def test_module_axiom_b33_sample():
    ctx = Context(3, 3)
    rng = random.Random(7)
    words = [nw.word for nw in enumerate_basis(ctx)]
    for lab in module_labels(ctx):
        basis = module_basis(lab, ctx)
        for _ in range(5):
            a = AlgebraElement.word(ctx, rng.choice(words))
            b = AlgebraElement.word(ctx, rng.choice(words))
            v = rng.choice(basis)
            assert act_element(a * b, v, ctx) == act_element(a, act_element(b, v, ctx), ctx)


def test_word_families():
    assert set(shuffles_L(C21, 1)) == {(), (1,)}
    assert shuffles_R(C21, 1) == [()]
    assert block_SL(C21, 0) == [()] and block_SR(C21, 1) == [()]
    for r in range(1, 4):
        for s in range(1, 4):
            ctx = Context(r, s)
            for f in range(min(r, s) + 1):
                assert len(set(shuffles_L(ctx, f))) == comb(r, f)
                assert len(set(shuffles_R(ctx, f))) == comb(s, f)
                assert len(block_SL(ctx, f)) == len(block_SR(ctx, f)) == factorial(f)
                assert len(theta_set(ctx, f)) == comb(r, f) * comb(s, f) * factorial(f)
    assert set(theta_set(C21, 1)) == {(), (1,)}
    assert theta_set(C11, 1) == [()]
    assert theta_set(C21, 0) == [()]


def test_theta_orbit_of_v_f():
    for ctx in SMALL:
        for lab in module_labels(ctx):
            v = v_f(lab, ctx)
            images = []
            for th in theta_set(ctx, lab.f):
                res = act_word(th, v, ctx)
                assert len(res.terms) == 1
                (w, c), = res.terms.items()
                assert c == ONE
                images.append(w)
            assert len(images) == len(set(images))
            assert {(w.matching, w.tL, w.tR) for w in images} == {
                (m.matching, m.tL, m.tR) for m in module_basis(lab, ctx) if (m.tL, m.tR) == (v.tL, v.tR)
            }


def test_X_set_sizes():
    for ctx in SMALL:
        for lab in module_labels(ctx):
            assert len(X_set(lab, ctx)) == module_dim(lab, ctx)
    assert X_set(ModuleLabel(0, (2,), (1,)), C21) == [()]


def test_barred_families():
    assert varpi((2, 1), C21) == ()
    assert Dbar(C21, 1) == [()]
    assert set(Bbar(C21, 1)) == {(), (1,)}
    assert star((), 1, C21) == (2, 1)
    assert star((), 0, C21) == (2,)
    with pytest.raises(ShapeError):
        varpi((1,), C21)
    with pytest.raises(ShapeError):
        star((), 2, C21)
    # grade 2: y keeps the run [r, r-1] so the guard j > k admits only k = 0
    (y,) = Dbar(C22, 2)
    assert y == (2, 1, 3)
    assert star(y, 0, C22, t=2) == (2, 1, 3, 2)
    assert star(y, 1, C22, t=2) is None
    ctx = Context(3, 3)
    assert star((3, 2, 1, 4), 1, ctx, t=2) == (3, 2, 1, 4, 3, 2)
    assert star((3, 2, 1, 4), 2, ctx, t=2) is None


def test_wpp_and_upsilon():
    assert wpp(C21, 0) == [()]
    assert wpp(C21, 1) == []
    assert wpp(C22, 1) == [(3,)]
    assert wpp(Context(2, 3), 2) == [(3, 4), (4, 3, 4)]
    assert upsilon(C21, 1, 2, L21) == [()]
    with pytest.raises(ValueError):
        upsilon(C21, 0, 1, L21)


def test_part_examples():
    part1 = {format_element(a) for a in annihilator_part1(L21, C21)}
    assert part1 == {"-d*e + s2", "-e + s2 s1", "-d*s1 + s1 s2", "-s1 + s1 s2 s1"}
    assert annihilator_part2(L21, C21) == []
    assert annihilator_part3(L21, C21) == []
    assert len(annihilator(L21, C21)) == 4
    (a,) = annihilator(ModuleLabel(1, (), ()), C11)
    assert a == parse_element("s1 - d*e", C11)
    assert len(annihilator(ModuleLabel(0, (1,), (1,)), C11)) == 1


@pytest.mark.parametrize("ctx", SMALL, ids=str)
def test_annihilator_counts_and_annihilation(ctx):
    for lab in module_labels(ctx):
        A = annihilator(lab, ctx)
        assert len(A) == factorial(ctx.n) - module_dim(lab, ctx)
        assert len(set(A)) == len(A)
        assert all(annihilates(a, lab, ctx) for a in A)


@pytest.mark.parametrize("ctx", SMALL, ids=str)
def test_leading_words(ctx):
    for lab in module_labels(ctx):
        leads = {e.lead for e in part1_entries(lab, ctx)}
        assert leads == expected_leading_words(lab, ctx)


def test_printed_mode_shortfall():
    # the literal families fall short of a basis; the corrected ones do not
    ctx = Context(2, 3)
    lab = ModuleLabel(0, (2,), (3,))
    printed = annihilator(lab, ctx, printed=True)
    full = annihilator(lab, ctx)
    assert len(full) == 119
    assert len(printed) < len(full)
    lab = ModuleLabel(1, (1,), (1, 1))
    bad = [e for e in part1_entries(lab, ctx, printed=True) if not annihilates(e.element, lab, ctx)]
    assert len(bad) == 6


@pytest.mark.parametrize("ctx", [C11, C21, Context(1, 2), C22], ids=str)
def test_theorem_and_kernel(ctx):
    for lab in module_labels(ctx):
        rep = verify_theorem1(lab, ctx)
        assert rep.passed, rep.line()
        assert rep.exact and rep.rank == factorial(ctx.n)
        assert annihilator_equals_kernel(lab, ctx)


def test_report_line():
    rep = verify_theorem1(ModuleLabel(1, (), ()), C11)
    assert rep.line() == "PASS f=1 L=[] R=[] rank=2 |A|=1 |X|=1 dim=1 orbit_rank=1"
    assert rep.to_dict()["passed"] is True
