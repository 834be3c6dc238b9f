from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from lcdt.codes import LinearCode, hull_dimension, min_distance
from lcdt.concat import (
    apply_map,
    concatenate,
    construct_lcd_concat,
    is_isometry_oracle,
    isometry_from_coeffs,
    search_isometry,
    trace_form_holds,
)
from lcdt.dtcode import DTParams, dt_generator, is_lcd_theorem
from lcdt.errors import (
    BudgetExceeded,
    LengthTooShort,
    MixedFields,
    NotAnIsometry,
    NotFound,
    OuterNotLCD,
)
from lcdt.galois import embed_build, field_create, trace_to


def emb_of(F):
    return embed_build(field_create(F.p), F)


def coeffs(F, texts):
    return [F.parse(t) for t in texts]


def test_first_example_map(F4):
    e = emb_of(F4)
    pi = isometry_from_coeffs(e, coeffs(F4, ["g^1", "g^2", "1", "1"]))
    assert (pi.n, pi.s, pi.inner_distance) == (4, 2, 2)
    assert [x.value for x in pi(F4.one)] == [1, 1, 0, 0]
    assert [x.value for x in pi(F4.gen)] == [1, 0, 1, 1]
    assert [x.value for x in pi(F4.zero)] == [0, 0, 0, 0]
    assert is_isometry_oracle(e, pi.coeffs)


def test_rejected_maps(F4):
    e = emb_of(F4)
    with pytest.raises(NotAnIsometry):
        isometry_from_coeffs(e, [F4.one, F4.zero, F4.zero, F4.zero])
    with pytest.raises(NotAnIsometry):
        isometry_from_coeffs(e, [F4.zero] * 4)
    with pytest.raises(LengthTooShort):
        isometry_from_coeffs(e, [F4.one])
    assert not is_isometry_oracle(e, [F4.one, F4.zero, F4.zero, F4.zero])
    assert not is_isometry_oracle(e, [F4.zero] * 4)


def test_oracle_budget():
    F = field_create(3, 4)
    with pytest.raises(BudgetExceeded):
        is_isometry_oracle(emb_of(F), [F.one] * 4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_trace_form_equals_definition_exhaustively(F4, n):
    e = emb_of(F4)
    for tup in itertools.product(list(F4.elements()), repeat=n):
        assert trace_form_holds(e, tup) == is_isometry_oracle(e, tup)


def test_trace_form_equals_definition_sampled(F8, F9):
    rng = random.Random(7)
    for F in (F8, F9):
        e = emb_of(F)
        elems = list(F.elements())
        for _ in range(60):
            tup = [rng.choice(elems) for _ in range(5)]
            assert trace_form_holds(e, tup) == is_isometry_oracle(e, tup)


def test_isometry_preserves_trace_form(F8):
    e = emb_of(F8)
    pi = isometry_from_coeffs(e, coeffs(F8, ["g^3", "g^5", "g^6", "1", "1"]))
    F2 = e.sub
    for x, y in itertools.product(F8.elements(), repeat=2):
        dot = sum((u * v for u, v in zip(pi(x), pi(y))), F2.zero)
        assert dot == trace_to(e, x * y)


@given(st.sampled_from(["F4", "F8", "F9"]), st.integers(1, 5), st.data())
def test_apply_map_is_linear(name, length, data):
    F = {"F4": field_create(2, 2, modulus=[1, 1, 1]), "F8": field_create(2, 3, modulus=[1, 1, 0, 1]), "F9": field_create(3, 2, modulus=[2, 2, 1])}[name]
    texts = {"F4": ["g^1", "g^2", "1", "1"], "F8": ["g^3", "g^5", "g^6", "1", "1"], "F9": ["g^1", "g^1", "g^3", "g^3", "2"]}[name]
    e = emb_of(F)
    pi = isometry_from_coeffs(e, coeffs(F, texts))
    draw = lambda: F.from_index(data.draw(st.integers(0, F.order - 1)))
    u = [draw() for _ in range(length)]
    v = [draw() for _ in range(length)]
    c = e.sub.from_index(data.draw(st.integers(0, e.sub.order - 1)))
    lhs = apply_map(pi, [x + e(c) * y for x, y in zip(u, v)])
    rhs = [x + c * y for x, y in zip(apply_map(pi, u), apply_map(pi, v))]
    assert lhs == rhs
    assert len(lhs) == pi.n * length


def test_apply_map_rejects_foreign_entries(F4, F9):
    pi = isometry_from_coeffs(emb_of(F4), coeffs(F4, ["g^1", "g^2", "1", "1"]))
    with pytest.raises(MixedFields):
        apply_map(pi, [F9.one])


@pytest.mark.parametrize(
    "fixture,a,b,texts,params,bound,dist",
    [
        ("F4", "g^1", "1", ["g^1", "g^2", "1", "1"], (16, 4), 6, 7),
        ("F8", "g^1", "g^6", ["g^3", "g^5", "g^6", "1", "1"], (20, 6), 6, 7),
    ],
)
def test_worked_concatenations(request, fixture, a, b, texts, params, bound, dist):
    F = request.getfixturevalue(fixture)
    pi = isometry_from_coeffs(emb_of(F), coeffs(F, texts))
    cc = construct_lcd_concat(DTParams(F, 2, F.parse(a), F.parse(b)), pi)
    assert (cc.result.length, cc.result.k) == params
    assert cc.lcd and hull_dimension(cc.result) == 0
    assert cc.bound == bound
    assert cc.actual_distance == dist


def test_ternary_concatenation_parameters(F9):
    pi = isometry_from_coeffs(emb_of(F9), coeffs(F9, ["g^1", "g^1", "g^3", "g^3", "2"]))
    assert (pi.n, pi.s, pi.inner_distance) == (5, 2, 3)
    dt = DTParams(F9, 2, F9(2), F9.gen)
    # (w + 1)^2 = -1 for this modulus, so the outer code has a hull
    assert not is_lcd_theorem(dt)
    with pytest.raises(OuterNotLCD):
        construct_lcd_concat(dt, pi)
    cc = concatenate(pi, LinearCode(dt_generator(dt)))
    assert (cc.result.length, cc.result.k, cc.actual_distance, cc.bound) == (20, 4, 10, 9)
    # isometries carry the outer hull over: dimension 1 over F_9 becomes 2 over F_3
    assert hull_dimension(cc.result) == 2


def test_outer_not_lcd(F4):
    pi = isometry_from_coeffs(emb_of(F4), coeffs(F4, ["g^1", "g^2", "1", "1"]))
    with pytest.raises(OuterNotLCD):
        construct_lcd_concat(DTParams(F4, 2, 0, 1), pi)


def test_mixed_fields(F4, F8):
    pi = isometry_from_coeffs(emb_of(F4), coeffs(F4, ["g^1", "g^2", "1", "1"]))
    with pytest.raises(MixedFields):
        concatenate(pi, LinearCode(dt_generator(DTParams(F8, 2, F8.gen, 1))))


def _lcd_matrix():
    out = []
    for fx, texts in (
        ((2, 2, [1, 1, 1]), ["g^1", "g^2", "1", "1"]),
        ((2, 3, [1, 1, 0, 1]), ["g^3", "g^5", "g^6", "1", "1"]),
        ((3, 2, [2, 2, 1]), ["g^1", "g^1", "g^3", "g^3", "2"]),
    ):
        F = field_create(fx[0], fx[1], modulus=fx[2])
        for N in (2, 3):
            out.append((F, texts, N))
    return out


@pytest.mark.parametrize("F,texts,N", _lcd_matrix(), ids=str)
def test_lcd_preservation_and_bound(F, texts, N):
    pi = isometry_from_coeffs(emb_of(F), coeffs(F, texts))
    built = 0
    for a, b in itertools.product(F.elements(), F.nonzero_elements()):
        dt = DTParams(F, N, a, b)
        if not is_lcd_theorem(dt):
            with pytest.raises(OuterNotLCD):
                construct_lcd_concat(dt, pi, compute_distance=False)
            continue
        compute = built < 3 and N == 2
        cc = construct_lcd_concat(dt, pi, compute_distance=compute)
        assert (cc.result.length, cc.result.k) == (2 * pi.n * N, pi.s * N)
        assert hull_dimension(cc.result) == 0
        if compute:
            assert cc.actual_distance >= cc.bound
        built += 1
    assert built > 0


def test_search_examples(F4, F9):
    e4 = emb_of(F4)
    pi = search_isometry(e4, 4, 2)
    assert pi.inner_distance >= 2
    with pytest.raises(NotFound):
        search_isometry(e4, 4, 3)
    pi = search_isometry(emb_of(F9), 5, 3)
    assert pi.inner_distance == 3
    with pytest.raises(LengthTooShort):
        search_isometry(e4, 1, 1)


def test_search_is_deterministic_under_sampling(F8):
    e = emb_of(F8)
    one = search_isometry(e, 5, 2, seed=3, budget=5000)
    two = search_isometry(e, 5, 2, seed=3, budget=5000)
    assert one.coeffs == two.coeffs
    assert one.inner_distance >= 2
