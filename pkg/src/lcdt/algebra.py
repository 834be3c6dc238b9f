"""Dense matrices and univariate polynomials over a :class:`FiniteField`.

Both containers keep raw element indices internally and hand out
:class:`FieldElement` objects at the boundary.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InvariantViolation, MixedFields, NotSquare, SingularMatrix
from .galois import Embedding, FieldElement, FiniteField, embed_build, field_create


def _raw(field: FiniteField, value) -> int:
    return field(value).value


class Matrix:
    """Row-major matrix over a finite field."""

    def __init__(self, field: FiniteField, rows: Iterable[Sequence], ncols: int | None = None):
        self.field = field
        self._rows = [[_raw(field, v) for v in row] for row in rows]
        if ncols is None:
            ncols = len(self._rows[0]) if self._rows else 0
        if any(len(r) != ncols for r in self._rows):
            raise ValueError("ragged matrix rows")
        self.ncols = ncols

    @classmethod
    def _from_raw(cls, field: FiniteField, rows: list[list[int]], ncols: int) -> Matrix:
        m = cls.__new__(cls)
        m.field = field
        m._rows = rows
        m.ncols = ncols
        return m

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> Matrix:
        return cls._from_raw(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, field: FiniteField, nrows: int, ncols: int) -> Matrix:
        return cls._from_raw(field, [[0] * ncols for _ in range(nrows)], ncols)

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self._rows[i][j])

    def row(self, i: int) -> list[FieldElement]:
        return [FieldElement(self.field, v) for v in self._rows[i]]

    def rows(self) -> list[list[FieldElement]]:
        return [self.row(i) for i in range(self.nrows)]

    def raw_rows(self) -> list[list[int]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self._rows == other._rows
        )

    def __repr__(self):
        body = "; ".join(" ".join(str(self[i, j]) for j in range(self.ncols)) for i in range(self.nrows))
        return f"Matrix<{self.field.spec}>[{body}]"

    def _check(self, other: Matrix):
        if other.field != self.field:
            raise MixedFields(f"matrices over {self.field!r} and {other.field!r}")

    # arithmetic ------------------------------------------------------------

    @property
    def T(self) -> Matrix:
        rows = [list(col) for col in zip(*self._rows)] if self._rows else []
        return Matrix._from_raw(self.field, rows if rows else [[] for _ in range(self.ncols)], self.nrows)

    def __add__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        add = self.field._add
        rows = [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        return Matrix._from_raw(self.field, rows, self.ncols)

    def __neg__(self) -> Matrix:
        neg = self.field._neg
        return Matrix._from_raw(self.field, [[neg(a) for a in r] for r in self._rows], self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        c = _raw(self.field, c)
        mul = self.field._mul
        return Matrix._from_raw(self.field, [[mul(c, a) for a in r] for r in self._rows], self.ncols)

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        add, mul = F._add, F._mul
        cols = list(zip(*other._rows)) if other._rows else [()] * other.ncols
        out = []
        for r in self._rows:
            new = []
            for col in cols:
                acc = 0
                for a, b in zip(r, col):
                    if a and b:
                        acc = add(acc, mul(a, b))
                new.append(acc)
            out.append(new)
        return Matrix._from_raw(F, out, other.ncols)

    def hstack(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix._from_raw(
            self.field, [r + s for r, s in zip(self._rows, other._rows)], self.ncols + other.ncols
        )

    def vstack(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix._from_raw(self.field, self.raw_rows() + other.raw_rows(), self.ncols)

    def map(self, emb: Embedding) -> Matrix:
        """Entrywise image under an embedding of the field into a larger one."""
        if emb.sub != self.field:
            raise MixedFields("embedding does not start at this matrix's field")
        cache: dict[int, int] = {}
        rows = []
        for r in self._rows:
            new = []
            for v in r:
                if v not in cache:
                    cache[v] = emb(FieldElement(self.field, v)).value
                new.append(cache[v])
            rows.append(new)
        return Matrix._from_raw(emb.sup, rows, self.ncols)

    # elimination -----------------------------------------------------------

    def rref(self) -> tuple[Matrix, list[int]]:
        """Reduced row echelon form and pivot columns."""
        F = self.field
        add, mul, neg, inv = F._add, F._mul, F._neg, F._inv
        a = self.raw_rows()
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            piv = next((i for i in range(r, len(a)) if a[i][c]), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            iv = inv(a[r][c])
            a[r] = [mul(iv, v) for v in a[r]]
            pr = a[r]
            for i in range(len(a)):
                if i != r and a[i][c]:
                    f = neg(a[i][c])
                    a[i] = [add(x, mul(f, y)) if y else x for x, y in zip(a[i], pr)]
            pivots.append(c)
            r += 1
            if r == len(a):
                break
        return Matrix._from_raw(F, a, self.ncols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> FieldElement:
        if self.nrows != self.ncols:
            raise NotSquare(f"determinant of a {self.nrows}x{self.ncols} matrix")
        F = self.field
        add, mul, neg, inv = F._add, F._mul, F._neg, F._inv
        a = self.raw_rows()
        n = len(a)
        det = 1
        for c in range(n):
            piv = next((i for i in range(c, n) if a[i][c]), None)
            if piv is None:
                return F.zero
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = neg(det)
            pv = a[c][c]
            det = mul(det, pv)
            iv = inv(pv)
            pr = a[c]
            for i in range(c + 1, n):
                if a[i][c]:
                    f = neg(mul(a[i][c], iv))
                    a[i] = [add(x, mul(f, y)) if y else x for x, y in zip(a[i], pr)]
        return FieldElement(F, det)

    def inverse(self) -> Matrix:
        if self.nrows != self.ncols:
            raise NotSquare(f"inverse of a {self.nrows}x{self.ncols} matrix")
        n = self.nrows
        red, pivots = self.hstack(Matrix.identity(self.field, n)).rref()
        if pivots[:n] != list(range(n)):
            raise SingularMatrix("matrix is not invertible")
        return Matrix._from_raw(self.field, [r[n:] for r in red._rows], n)

    def nullspace(self) -> Matrix:
        """Rows spanning the right nullspace {v : M v^T = 0}."""
        F = self.field
        red, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for i, pc in enumerate(pivots):
                v[pc] = F._neg(red._rows[i][fc])
            basis.append(v)
        return Matrix._from_raw(F, basis, self.ncols)

    def nullspace_dim(self) -> int:
        return self.ncols - self.rank()

    def to_json(self) -> dict:
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [str(FieldElement(self.field, v)) for r in self._rows for v in r],
        }

    @classmethod
    def from_json(cls, field: FiniteField, data: dict) -> Matrix:
        r, c = int(data["rows"]), int(data["cols"])
        entries = [field.parse(str(e)) for e in data["entries"]]
        if len(entries) != r * c:
            raise ValueError("entry count does not match rows*cols")
        return cls(field, [entries[i * c : (i + 1) * c] for i in range(r)], c)


def mat_solve(m: Matrix, mode: str):
    """Dispatch for rank / det / inverse / nullspace_dim."""
    if mode == "rank":
        return m.rank()
    if mode == "det":
        return m.det()
    if mode == "inverse":
        return m.inverse()
    if mode == "nullspace_dim":
        return m.nullspace_dim()
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


class Poly:
    """Univariate polynomial, little-endian, no trailing zeros."""

    def __init__(self, field: FiniteField, coeffs: Iterable = ()):
        self.field = field
        raw = [_raw(field, c) for c in coeffs]
        while raw and raw[-1] == 0:
            raw.pop()
        self._c = raw

    @classmethod
    def _from_raw(cls, field: FiniteField, raw: list[int]) -> Poly:
        while raw and raw[-1] == 0:
            raw.pop()
        p = cls.__new__(cls)
        p.field = field
        p._c = raw
        return p

    @classmethod
    def x(cls, field: FiniteField) -> Poly:
        return cls._from_raw(field, [0, 1])

    @classmethod
    def constant(cls, field: FiniteField, c) -> Poly:
        return cls._from_raw(field, [_raw(field, c)])

    @classmethod
    def linear_root(cls, root: FieldElement) -> Poly:
        """x - root."""
        F = root.field
        return cls._from_raw(F, [F._neg(root.value), 1])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.field, v) for v in self._c]

    def raw_coeffs(self) -> list[int]:
        return list(self._c)

    def leading(self) -> FieldElement:
        return FieldElement(self.field, self._c[-1]) if self._c else self.field.zero

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self._c == other._c

    def __hash__(self):
        return hash((self.field, tuple(self._c)))

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for i, v in enumerate(self._c):
            if v:
                c = str(FieldElement(self.field, v))
                terms.append(f"({c})x^{i}" if i else f"({c})")
        return " + ".join(reversed(terms))

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.field != self.field:
                raise MixedFields(f"polynomials over {self.field!r} and {other.field!r}")
            return other
        return Poly.constant(self.field, other)

    def __add__(self, other) -> Poly:
        o = self._coerce(other)
        add = self.field._add
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = add(out[i], v)
        return Poly._from_raw(self.field, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        neg = self.field._neg
        return Poly._from_raw(self.field, [neg(v) for v in self._c])

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        o = self._coerce(other)
        if not self._c or not o._c:
            return Poly._from_raw(self.field, [])
        add, mul = self.field._add, self.field._mul
        out = [0] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    if b:
                        out[i + j] = add(out[i + j], mul(a, b))
        return Poly._from_raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def frobenius_power(self, k: int) -> Poly:
        """self^(p^k), computed coefficientwise (valid in characteristic p)."""
        p = self.field.p
        step = p**k
        F = self.field
        out = [0] * (self.degree * step + 1) if self._c else []
        for i, v in enumerate(self._c):
            out[i * step] = F._pow(v, step)
        return Poly._from_raw(F, out)

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        o = self._coerce(other)
        if not o._c:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        add, mul, neg = F._add, F._mul, F._neg
        inv_lead = F._inv(o._c[-1])
        rem = list(self._c)
        db = len(o._c) - 1
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = mul(rem[k], inv_lead)
            if not c:
                continue
            quot[k - db] = c
            nc = neg(c)
            for j, b in enumerate(o._c):
                if b:
                    rem[k - db + j] = add(rem[k - db + j], mul(nc, b))
        return Poly._from_raw(F, quot), Poly._from_raw(F, rem)

    def __floordiv__(self, other) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other) -> Poly:
        return self.divmod(other)[1]

    def __call__(self, x: FieldElement, emb: Embedding | None = None) -> FieldElement:
        """Evaluate at x; with ``emb`` the coefficients are first embedded into x's field."""
        if emb is not None:
            return self.map(emb)(x)
        x = self.field(x)
        F = self.field
        add, mul = F._add, F._mul
        acc = 0
        xv = x.value
        for v in reversed(self._c):
            acc = add(mul(acc, xv), v)
        return FieldElement(F, acc)

    def map(self, emb: Embedding) -> Poly:
        if emb.sub != self.field:
            raise MixedFields("embedding does not start at this polynomial's field")
        return Poly._from_raw(emb.sup, [emb(FieldElement(self.field, v)).value for v in self._c])

    def pullback(self, emb: Embedding) -> Poly:
        """Inverse of :meth:`map` for polynomials whose coefficients lie in the image."""
        out = []
        for v in self._c:
            pre = emb.preimage(FieldElement(emb.sup, v))
            if pre is None:
                raise InvariantViolation("coefficient outside the embedded subfield")
            out.append(pre.value)
        return Poly._from_raw(emb.sub, out)

    def roots_in(self, emb: Embedding | None = None) -> list[tuple[FieldElement, int]]:
        """All (root, multiplicity) pairs in the field (or emb.sup) by exhaustive scan."""
        poly = self.map(emb) if emb is not None else self
        if poly.is_zero():
            raise ValueError("the zero polynomial has every element as a root")
        out = []
        for r in poly.field.elements():
            if poly(r):
                continue
            mult = 0
            cur = poly
            lin = Poly.linear_root(r)
            while True:
                q, rem = cur.divmod(lin)
                if not rem.is_zero():
                    break
                mult += 1
                cur = q
            out.append((r, mult))
        return out

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}


def poly_from_roots(field: FiniteField, items: Iterable[tuple[FieldElement, int]]) -> Poly:
    """Expand prod (x - root)^mult."""
    result = Poly.constant(field, 1)
    for root, mult in items:
        result = result * Poly.linear_root(field(root)) ** mult
    return result


def interpolate(points: Sequence[FieldElement], values: Sequence[FieldElement]) -> Poly:
    """Lagrange interpolation through distinct points."""
    F = points[0].field
    full = poly_from_roots(F, [(x, 1) for x in points])
    result = Poly._from_raw(F, [])
    for i, (xi, yi) in enumerate(zip(points, values)):
        if not yi:
            continue
        num = full.divmod(Poly.linear_root(xi))[0]
        denom = num(xi)
        result = result + num * (yi / denom)
    return result


def char_poly(m: Matrix) -> Poly:
    """lambda -> det(m - lambda*I), by evaluation at n+1 points and interpolation."""
    if m.nrows != m.ncols:
        raise NotSquare(f"characteristic polynomial of a {m.nrows}x{m.ncols} matrix")
    n = m.nrows
    F = m.field
    if F.order >= n + 1:
        ext, emb, mm = F, None, m
    else:
        t = 1
        while F.order**t < n + 1:
            t += 1
        ext = field_create(F.p, F.degree * t)
        emb = embed_build(F, ext)
        mm = m.map(emb)
    points = [ext.from_index(i) for i in range(n + 1)]
    ident = Matrix.identity(ext, n)
    values = [(mm - ident.scale(lam)).det() for lam in points]
    poly = interpolate(points, values)
    return poly if emb is None else poly.pullback(emb)
