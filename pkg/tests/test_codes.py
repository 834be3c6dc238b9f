from __future__ import annotations

import itertools
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from lcdt import codes
from lcdt.algebra import Matrix
from lcdt.codes import (
    LinearCode,
    dual_code,
    hull_dimension,
    intersection_dimension,
    is_lcd,
    min_distance,
    weight_distribution,
)
from lcdt.dtcode import DTParams, dt_generator, is_lcd_direct
from lcdt.errors import BudgetExceeded
from lcdt.galois import field_create

from helpers import small_fields


def brute_weights(code: LinearCode) -> dict[int, int]:
    """Enumerate every message with itertools; no shared code with the library paths."""
    F = code.field
    rows = code.generator.rows()
    counts: Counter = Counter()
    for msg in itertools.product(list(F.elements()), repeat=code.k):
        word = [sum((m * r[j] for m, r in zip(msg, rows)), F.zero) for j in range(code.length)]
        counts[sum(1 for x in word if x)] += 1
    return dict(sorted(counts.items()))


@st.composite
def codes_strategy(draw, max_k=4, max_n=7):
    F = draw(small_fields().filter(lambda F: F.order <= 9))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(1, min(max_k, n)))
    entries = draw(st.lists(st.integers(0, F.order - 1), min_size=n * k, max_size=n * k))
    return LinearCode(Matrix(F, [[F.from_index(entries[i * n + j]) for j in range(n)] for i in range(k)], n))


def test_outer_code_of_first_concatenation_example(F4):
    code = LinearCode(dt_generator(DTParams(F4, 2, F4.gen, 1)))
    assert weight_distribution(code) == {0: 1, 3: 12, 4: 3}
    assert min_distance(code) == 3


def test_identity_code_distance():
    for F in (field_create(2), field_create(3, 2)):
        assert min_distance(LinearCode(Matrix.identity(F, 4))) == 1


def test_zero_code():
    F = field_create(3)
    code = LinearCode(Matrix.zeros(F, 2, 5))
    assert code.k == 0
    assert weight_distribution(code) == {0: 1}
    assert min_distance(code) == 0
    assert dual_code(code).k == 5


def test_dependent_rows_are_reduced():
    F = field_create(2)
    code = LinearCode(Matrix(F, [[1, 1, 0], [0, 1, 1], [1, 0, 1]]))
    assert code.k == 2


def test_budget_guard(monkeypatch):
    F = field_create(3)
    code = LinearCode(Matrix.identity(F, 6))
    with pytest.raises(BudgetExceeded) as info:
        weight_distribution(code, budget=100)
    assert info.value.required == 729
    monkeypatch.setenv("LCDT_BUDGET", "10")
    with pytest.raises(BudgetExceeded):
        min_distance(code)


@given(codes_strategy())
def test_weights_match_brute_force(code):
    dist = weight_distribution(code)
    assert dist == brute_weights(code)
    assert sum(dist.values()) == code.field.order**code.k
    assert dist[0] == 1
    positive = [w for w in dist if w]
    assert min_distance(code) == (min(positive) if positive else 0)


def test_prime_and_generic_paths_agree():
    F = field_create(3)
    rows = [[(i * j + i + 2 * j) % 3 for j in range(12)] for i in range(7)]
    code = LinearCode(Matrix(F, rows))
    assert codes._weights_prime(code, 3**code.k) == codes._weights_generic(code)


def test_thread_count_does_not_change_result(monkeypatch):
    F = field_create(2)
    rows = [[(i >> (j % 5)) & 1 ^ (j % 3 == i % 3) for j in range(30)] for i in range(1, 17)]
    code = LinearCode(Matrix(F, rows))
    monkeypatch.setenv("LCDT_THREADS", "1")
    one = weight_distribution(code)
    monkeypatch.setenv("LCDT_THREADS", "4")
    assert weight_distribution(code) == one


def test_dual_of_binary_dt_code():
    F2 = field_create(2)
    T = [[1, 1], [1, 1]]
    code = LinearCode(Matrix(F2, [[1, 0] + T[0], [0, 1] + T[1]]))
    expected = LinearCode(Matrix(F2, [T[0] + [1, 0], T[1] + [0, 1]]))
    assert dual_code(code) == expected


@given(codes_strategy())
def test_dual_properties(code):
    d = dual_code(code)
    assert d.k == code.length - code.k
    assert dual_code(d) == code
    if d.k and code.k:
        prod = code.generator @ d.generator.T
        assert prod == Matrix.zeros(code.field, code.k, d.k)


@given(codes_strategy())
def test_hull_matches_intersection_with_dual(code):
    h = hull_dimension(code)
    assert 0 <= h <= code.k
    assert h == intersection_dimension(code, dual_code(code))


def test_hull_examples():
    F2 = field_create(2)
    assert hull_dimension(LinearCode(Matrix(F2, [[1, 0, 0, 1], [0, 1, 1, 0]]))) == 2
    assert is_lcd(LinearCode(Matrix(F2, [[1, 0, 1, 1], [0, 1, 1, 1]])))


@pytest.mark.parametrize("ps", [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)])
def test_direct_oracle_agrees_with_hull(ps):
    F = field_create(*ps)
    for n in range(2, 6):
        for a, b in itertools.product(F.elements(), F.nonzero_elements()):
            G = dt_generator(DTParams(F, n, a, b))
            code = LinearCode(G)
            assert is_lcd_direct(G) == (hull_dimension(code) == 0)
            assert hull_dimension(code) == intersection_dimension(code, dual_code(code))
            assert dual_code(code).k == n
