"""Isometry maps F_{q^s} -> F_q^n and concatenation of DT codes.

A trace-coefficient map pi(x) = (Tr(a_1 x), ..., Tr(a_n x)) is an isometry
exactly when pi(x) . pi(y) = Tr(x y) for all x, y.  (The bilinear form
pi(x) . pi(y) equals Tr(x L(y)) for a unique F_q-linear L; pairing one basis
with its trace-dual basis to the identity forces L = id, which does not depend
on the basis.)  :func:`is_isometry_oracle` checks the existential basis
definition literally and is used to cross-check that criterion.
"""

from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from .algebra import Matrix
from .codes import LinearCode, hull_dimension, min_distance
from .dtcode import DTParams, dt_generator, is_lcd_theorem
from .errors import (
    BudgetExceeded,
    InvariantViolation,
    LengthTooShort,
    MixedFields,
    NotABasis,
    NotAnIsometry,
    NotFound,
    OuterNotLCD,
)
from .galois import Embedding, FieldElement, dual_basis, trace_to

ORACLE_BUDGET = 1 << 20
SEARCH_BUDGET = 1 << 20


def relative_basis(emb: Embedding) -> list[FieldElement]:
    """1, g, ..., g^(t-1) for the generator g of sup; a basis over sub."""
    g = emb.sup.gen
    out = [emb.sup.one]
    for _ in range(emb.degree - 1):
        out.append(out[-1] * g)
    return out


@functools.lru_cache(maxsize=None)
def _trace_table(emb: Embedding) -> tuple[int, ...]:
    """Raw sub value of Tr(y) for every y in sup, indexed by y's index."""
    return tuple(trace_to(emb, y).value for y in emb.sup.elements())


def _trace(emb: Embedding, y: FieldElement) -> FieldElement:
    if emb.sup.order <= (1 << 16):
        return FieldElement(emb.sub, _trace_table(emb)[y.value])
    return trace_to(emb, y)


def _dot(sub, u: Sequence[int], v: Sequence[int]) -> int:
    add, mul = sub._add, sub._mul
    acc = 0
    for a, b in zip(u, v):
        if a and b:
            acc = add(acc, mul(a, b))
    return acc


@dataclass
class IsometryMap:
    emb: Embedding
    coeffs: list[FieldElement]
    inner_code: LinearCode
    inner_distance: int

    @property
    def s(self) -> int:
        return self.emb.degree

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def raw_image(self, x: FieldElement) -> list[int]:
        return [_trace(self.emb, a * x).value for a in self.coeffs]

    def __call__(self, x: FieldElement) -> list[FieldElement]:
        x = self.emb.sup(x)
        return [FieldElement(self.emb.sub, v) for v in self.raw_image(x)]

    def to_json(self) -> dict:
        return {
            "field": self.emb.sup.spec,
            "base": self.emb.sub.spec,
            "coeffs": [str(a) for a in self.coeffs],
            "inner": {"n": self.n, "k": self.inner_code.k, "d": self.inner_distance},
        }


def trace_form_holds(emb: Embedding, coeffs: Sequence[FieldElement]) -> bool:
    """sum_k Tr(a_k e_i) Tr(a_k e_j) == Tr(e_i e_j) on all basis pairs."""
    basis = relative_basis(emb)
    vecs = [[_trace(emb, a * e).value for a in coeffs] for e in basis]
    sub = emb.sub
    for i, ei in enumerate(basis):
        for j in range(i, len(basis)):
            if _dot(sub, vecs[i], vecs[j]) != _trace(emb, ei * basis[j]).value:
                return False
    return True


def isometry_from_coeffs(emb: Embedding, coeffs: Sequence[FieldElement]) -> IsometryMap:
    """Validated trace-coefficient isometry with its inner code."""
    coeffs = [emb.sup(a) for a in coeffs]
    s = emb.degree
    if s < 2:
        raise LengthTooShort("the extension degree s must be at least 2")
    if len(coeffs) < s:
        raise LengthTooShort(f"target length {len(coeffs)} is shorter than s = {s}")
    if not trace_form_holds(emb, coeffs):
        raise NotAnIsometry("pi(x).pi(y) != Tr(xy) for some basis pair")
    rows = [[_trace(emb, a * e) for a in coeffs] for e in relative_basis(emb)]
    inner = LinearCode(Matrix(emb.sub, rows, len(coeffs)))
    if inner.k != s:
        raise InvariantViolation("a valid isometry must be injective")
    return IsometryMap(emb, coeffs, inner, min_distance(inner))


@functools.lru_cache(maxsize=None)
def _ordered_bases(emb: Embedding) -> tuple:
    """Every ordered basis of sup over sub with its trace-dual basis."""
    out = []
    for tup in itertools.product(list(emb.sup.elements()), repeat=emb.degree):
        try:
            dual = dual_basis(emb, tup)
        except NotABasis:
            continue
        out.append((tup, tuple(dual)))
    return tuple(out)


def is_isometry_oracle(
    emb: Embedding, coeffs: Sequence[FieldElement], budget: int = ORACLE_BUDGET
) -> bool:
    """Definition check: some basis e has pi(e_i) . pi(e'_j) = delta_ij."""
    s = emb.degree
    cost = emb.sub.order ** (s * s)
    if cost > budget:
        raise BudgetExceeded(f"basis enumeration needs {cost} > {budget}", required=cost)
    coeffs = [emb.sup(a) for a in coeffs]
    sub = emb.sub

    def pi(x):
        return [_trace(emb, a * x).value for a in coeffs]

    for basis, dual in _ordered_bases(emb):
        imgs = [pi(e) for e in basis]
        duals = [pi(e) for e in dual]
        if all(
            _dot(sub, imgs[i], duals[j]) == int(i == j) for i in range(s) for j in range(s)
        ):
            return True
    return False


def apply_map(pi: IsometryMap, word: Sequence[FieldElement]) -> list[FieldElement]:
    """Blockwise image (pi(c_1), ..., pi(c_L))."""
    out: list[FieldElement] = []
    for c in word:
        if not isinstance(c, FieldElement) or c.field != pi.emb.sup:
            raise MixedFields("word entries must lie in the isometry's extension field")
        out.extend(pi(c))
    return out


@dataclass
class ConcatenatedCode:
    map: IsometryMap
    outer: LinearCode
    result: LinearCode
    outer_distance: int
    bound: int
    actual_distance: int | None = None
    lcd: bool | None = None

    def params(self) -> tuple[int, int, int | None]:
        return self.result.length, self.result.k, self.actual_distance

    def to_json(self) -> dict:
        return {
            "params": {
                "n": self.result.length,
                "k": self.result.k,
                "d": self.actual_distance,
                "q": self.result.field.order,
            },
            "outer": {"n": self.outer.length, "k": self.outer.k, "d": self.outer_distance},
            "inner": {"n": self.map.n, "k": self.map.s, "d": self.map.inner_distance},
            "lcd": self.lcd,
            "bound": self.bound,
            "distance": self.actual_distance,
        }


def concatenate(
    pi: IsometryMap, outer: LinearCode, *, compute_distance: bool = True
) -> ConcatenatedCode:
    """F_q-image of the outer code under pi applied to every coordinate."""
    if outer.field != pi.emb.sup:
        raise MixedFields("outer code alphabet differs from the isometry's extension field")
    rows = []
    for g in outer.generator.rows():
        for beta in relative_basis(pi.emb):
            rows.append(apply_map(pi, [beta * c for c in g]))
    result = LinearCode(Matrix(pi.emb.sub, rows, outer.length * pi.n))
    if result.k != pi.s * outer.k:
        raise InvariantViolation(f"expected dimension {pi.s * outer.k}, got {result.k}")
    d_outer = min_distance(outer)
    cc = ConcatenatedCode(
        map=pi,
        outer=outer,
        result=result,
        outer_distance=d_outer,
        bound=pi.inner_distance * d_outer,
    )
    cc.lcd = hull_dimension(result) == 0
    if compute_distance:
        cc.actual_distance = min_distance(result)
    return cc


def construct_lcd_concat(
    dt: DTParams, pi: IsometryMap, *, compute_distance: bool = True
) -> ConcatenatedCode:
    """Concatenate the DT code of ``dt`` with ``pi``; refuses non-LCD outer codes."""
    if dt.field != pi.emb.sup:
        raise MixedFields("DT code alphabet differs from the isometry's extension field")
    if not is_lcd_theorem(dt):
        raise OuterNotLCD(f"a = {dt.a} lies in the forbidden set for n = {dt.n}, b = {dt.b}")
    cc = concatenate(pi, LinearCode(dt_generator(dt)), compute_distance=compute_distance)
    if not cc.lcd:
        raise InvariantViolation("concatenation of an LCD code by an isometry is not LCD")
    return cc


def search_isometry(
    emb: Embedding,
    n: int,
    d_target: int,
    seed: int = 0,
    budget: int = SEARCH_BUDGET,
) -> IsometryMap:
    """First isometry with inner distance >= d_target.

    Scans coefficient tuples in index order when all of them fit in the
    budget, otherwise samples ``budget`` tuples with a seeded RNG.
    """
    s = emb.degree
    if n < s:
        raise LengthTooShort(f"target length {n} is shorter than s = {s}")
    sup, sub = emb.sup, emb.sub
    basis = relative_basis(emb)
    vec = [[_trace(emb, y * e).value for e in basis] for y in sup.elements()]
    gram = [[_trace(emb, ei * ej).value for ej in basis] for ei in basis]
    add, mul = sub._add, sub._mul

    def valid(tup) -> bool:
        for i in range(s):
            for j in range(i, s):
                acc = 0
                for a in tup:
                    u, v = vec[a][i], vec[a][j]
                    if u and v:
                        acc = add(acc, mul(u, v))
                if acc != gram[i][j]:
                    return False
        return True

    total = sup.order**n
    exhaustive = total <= budget
    if exhaustive:
        candidates = itertools.product(range(sup.order), repeat=n)
    else:
        rng = random.Random(seed)
        candidates = (tuple(rng.randrange(sup.order) for _ in range(n)) for _ in range(budget))
    for tup in candidates:
        if not valid(tup):
            continue
        rows = [[vec[a][i] for a in tup] for i in range(s)]
        inner = LinearCode(Matrix._from_raw(sub, rows, n))
        if min_distance(inner) >= d_target:
            return isometry_from_coeffs(emb, [sup.from_index(a) for a in tup])
    how = "exhaustive scan" if exhaustive else f"{budget} random trials"
    raise NotFound(f"no isometry of length {n} with distance >= {d_target} ({how})")
