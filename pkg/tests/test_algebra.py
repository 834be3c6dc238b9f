from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix as SymMatrix

from lcdt.algebra import Matrix, Poly, char_poly, interpolate, mat_solve, poly_from_roots
from lcdt.errors import NotSquare, SingularMatrix
from lcdt.galois import embed_build, field_create, primitive_root_of_unity

from helpers import small_fields


@st.composite
def matrices(draw, square=True, max_n=5, fields=None):
    F = draw(fields if fields is not None else small_fields())
    n = draw(st.integers(1, max_n))
    c = n if square else draw(st.integers(1, max_n))
    entries = draw(st.lists(st.integers(0, F.order - 1), min_size=n * c, max_size=n * c))
    return Matrix(F, [[F.from_index(entries[i * c + j]) for j in range(c)] for i in range(n)], c)


def test_det_example(F4):
    w = F4.gen
    m = Matrix(F4, [[w, 1], [1, w]])
    assert m.det() == w
    assert mat_solve(m, "det") == w


def test_trivial_solves(F4):
    assert mat_solve(Matrix.zeros(F4, 3, 3), "rank") == 0
    I = Matrix.identity(F4, 3)
    assert mat_solve(I, "inverse") == I
    assert mat_solve(I, "nullspace_dim") == 0


def test_singular_and_non_square(F4):
    with pytest.raises(SingularMatrix):
        Matrix.zeros(F4, 2, 2).inverse()
    with pytest.raises(NotSquare):
        Matrix.zeros(F4, 2, 3).det()


@given(matrices(fields=st.sampled_from([field_create(p) for p in (2, 3, 5, 7)])))
def test_det_matches_sympy_over_prime_fields(m):
    p = m.field.p
    sym = SymMatrix([[x.value for x in row] for row in m.rows()])
    assert m.det().value == int(sym.det()) % p


@given(matrices())
def test_inverse_round_trip(m):
    if not m.det():
        with pytest.raises(SingularMatrix):
            m.inverse()
        return
    assert m @ m.inverse() == Matrix.identity(m.field, m.nrows)
    assert m.inverse() @ m == Matrix.identity(m.field, m.nrows)


@given(matrices(square=False))
def test_rank_nullity_and_kernel(m):
    ns = m.nullspace()
    assert m.rank() + ns.nrows == m.ncols
    if ns.nrows:
        assert (m @ ns.T) == Matrix.zeros(m.field, m.nrows, ns.nrows)
        assert ns.rank() == ns.nrows


@given(matrices(square=False))
def test_rank_agrees_with_transpose(m):
    assert m.rank() == m.T.rank()


@given(matrices(), st.data())
def test_det_multiplicative(m, data):
    F, n = m.field, m.nrows
    entries = data.draw(st.lists(st.integers(0, F.order - 1), min_size=n * n, max_size=n * n))
    other = Matrix(F, [[F.from_index(entries[i * n + j]) for j in range(n)] for i in range(n)])
    assert (m @ other).det() == m.det() * other.det()


def test_matrix_json_round_trip(F9):
    m = Matrix(F9, [[F9.gen, 0, 1], [2, F9.gen**3, 0]])
    data = m.to_json()
    assert data["rows"] == 2 and data["cols"] == 3
    assert Matrix.from_json(F9, data) == m


# -- polynomials --------------------------------------------------------------


def test_poly_eval_example(F4):
    p = Poly(F4, [1, 0, 1])
    assert p(F4.gen) == F4.gen


def test_poly_mul_identity(F9):
    p = Poly(F9, [F9.gen, 2, 1])
    assert p * Poly.constant(F9, 1) == p


def test_roots_in_f9():
    F3 = field_create(3)
    F9 = field_create(3, 2)
    theta, ext, emb = primitive_root_of_unity(F3, 8)
    roots = Poly(F3, [1, 0, 1]).roots_in(emb)
    assert sorted(r.value for r, _ in roots) == sorted([(theta**2).value, (theta**6).value])
    assert all(mult == 1 for _, mult in roots)
    assert ext.order == F9.order


@given(small_fields(), st.data())
def test_divmod_identity(F, data):
    a = Poly(F, [F.from_index(i) for i in data.draw(st.lists(st.integers(0, F.order - 1), max_size=7))])
    b_raw = data.draw(st.lists(st.integers(0, F.order - 1), min_size=1, max_size=4))
    b = Poly(F, [F.from_index(i) for i in b_raw])
    if b.is_zero():
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(small_fields(), st.data())
def test_roots_in_re_expansion_divides(F, data):
    raw = data.draw(st.lists(st.integers(0, F.order - 1), min_size=2, max_size=6))
    p = Poly(F, [F.from_index(i) for i in raw])
    if p.degree < 1:
        return
    roots = p.roots_in()
    assert sum(m for _, m in roots) <= p.degree
    for r, _ in roots:
        assert p(r) == F.zero
    assert (p % poly_from_roots(F, roots)).is_zero()


@given(small_fields(), st.data())
def test_interpolation_recovers_polynomial(F, data):
    deg = data.draw(st.integers(0, min(5, F.order - 1)))
    raw = data.draw(st.lists(st.integers(0, F.order - 1), min_size=deg + 1, max_size=deg + 1))
    p = Poly(F, [F.from_index(i) for i in raw])
    pts = list(F.elements())[: deg + 1]
    assert interpolate(pts, [p(x) for x in pts]) == p


def test_poly_json(F4):
    assert Poly(F4, [1, F4.gen]).to_json() == {"coeffs": ["1", "0,1"]}


# -- characteristic polynomials -----------------------------------------------


def test_char_poly_t2_zero_over_f2():
    F2 = field_create(2)
    m = Matrix(F2, [[0, 1], [1, 0]])
    assert char_poly(m) == Poly(F2, [1, 0, 1])


@pytest.mark.parametrize("ps", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_char_poly_of_scalar_matrix(ps):
    F = field_create(*ps)
    for a in F.elements():
        for n in (1, 3, 5):
            m = Matrix.identity(F, n).scale(a)
            assert char_poly(m) == (Poly(F, [a]) - Poly.x(F)) ** n


@given(matrices(max_n=6), st.data())
def test_char_poly_matches_determinant(m, data):
    cp = char_poly(m)
    n = m.nrows
    assert cp.degree == n
    # leading coefficient of det(m - xI) is (-1)^n
    assert cp.coeffs[-1] == m.field(-1) ** n
    lam = m.field.from_index(data.draw(st.integers(0, m.field.order - 1)))
    assert cp(lam) == (m - Matrix.identity(m.field, n).scale(lam)).det()


def test_char_poly_needs_extension_for_tiny_fields():
    # over F_2 an 8x8 matrix needs 9 interpolation points
    F2 = field_create(2)
    rows = [[1 if (i + 2 * j) % 3 == 0 else 0 for j in range(8)] for i in range(8)]
    m = Matrix(F2, rows)
    cp = char_poly(m)
    assert cp.field == F2 and cp.degree == 8
    for lam in F2.elements():
        assert cp(lam) == (m - Matrix.identity(F2, 8).scale(lam)).det()
    F4 = field_create(2, 2)
    e = embed_build(F2, F4)
    mm = m.map(e)
    for lam in F4.elements():
        assert cp(lam, e) == (mm - Matrix.identity(F4, 8).scale(lam)).det()
