"""Finite fields GF(p^s) realized as F_p[x]/(f).

Every field, extensions of non-prime fields included, is a single quotient
ring over its prime field; towers are expressed through :class:`Embedding`.
Elements are stored as the integer ``sum(c_i * p**i)`` of their little-endian
coefficient vector.  That integer (the element *index*) also fixes the order
used by every deterministic choice: default moduli, primitive elements and
embeddings all pick the smallest candidate.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field as dc_field
from typing import Iterator, Sequence

import numpy as np
from sympy import factorint, n_order

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    InvariantViolation,
    MixedFields,
    NoEmbedding,
    NonPrimeCharacteristic,
    NotABasis,
    ParseError,
    ReducibleModulus,
    RootObstruction,
    SingularMatrix,
)

# Fields up to this order get log/Zech tables.
TABLE_LIMIT = 1 << 15
# Odd-characteristic residues of at least this degree are multiplied with numpy.
_NUMPY_DEGREE = 12


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def int_digits(value: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        value, r = divmod(value, base)
        out.append(r)
    return out


# ---------------------------------------------------------------------------
# Raw arithmetic modulo a monic polynomial over F_p
# ---------------------------------------------------------------------------


class _ModArith:
    """Residues of F_p[x] modulo a monic f, encoded as integers.

    Works for reducible f too (the irreducibility test relies on that).
    """

    def __init__(self, p: int, f: Sequence[int]):
        self.p = p
        self.f = tuple(f)
        self.d = d = len(f) - 1
        if p == 2:
            self.fbits = sum(c << i for i, c in enumerate(self.f))
            self.top = 1 << d
        else:
            self.fneg = [(-c) % p for c in self.f[:d]]
            self.pows = [p**i for i in range(d)]
            if d >= _NUMPY_DEGREE:
                rows = []
                cur = list(self.fneg)  # x^d mod f
                for _ in range(d - 1):
                    rows.append(cur)
                    lead = cur[-1]
                    cur = [0] + cur[:-1]
                    cur = [(c + lead * fc) % p for c, fc in zip(cur, self.fneg)]
                self.red = np.array(rows, dtype=np.int64).reshape(d - 1, d)

    def digits(self, a: int) -> list[int]:
        return int_digits(a, self.p, self.d)

    def from_digits(self, ds) -> int:
        v = 0
        p = self.p
        for c in reversed(ds):
            v = v * p + int(c)
        return v

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        for w in self.pows:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            s = ra + rb
            if s >= p:
                s -= p
            out += s * w
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        for w in self.pows:
            a, r = divmod(a, p)
            if r:
                out += (p - r) * w
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self.p == 2:
            fbits, top = self.fbits, self.top
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= fbits
            return r
        d, p = self.d, self.p
        if d == 1:
            return (a * b) % p
        x, y = self.digits(a), self.digits(b)
        if d >= _NUMPY_DEGREE:
            c = np.convolve(np.array(x, dtype=np.int64), np.array(y, dtype=np.int64)) % p
            res = (c[:d] + c[d:] @ self.red[: len(c) - d]) % p
            return self.from_digits(res.tolist())
        c = [0] * (2 * d - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    c[i + j] += xi * yj
        fneg = self.fneg
        for k in range(2 * d - 2, d - 1, -1):
            ck = c[k] % p
            if ck:
                base = k - d
                for j in range(d):
                    c[base + j] += ck * fneg[j]
        return self.from_digits([v % p for v in c[:d]])

    def pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
            _fp_trim(a)
        a, b = b, a
    return a


def _gf2_poly_gcd(a: int, b: int) -> int:
    while b:
        lb = b.bit_length()
        while a.bit_length() >= lb:
            a ^= b << (a.bit_length() - lb)
        a, b = b, a
    return a


def is_irreducible(p: int, f: Sequence[int]) -> bool:
    """Ben-Or test: gcd(f, x^(p^i) - x) = 1 for all i <= deg(f)/2."""
    f = [int(c) % p for c in f]
    _fp_trim(f)
    d = len(f) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    if f[0] == 0:
        return False
    if f[-1] != 1:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    arith = _ModArith(p, f)
    x = p  # index of the residue x
    h = x
    for _ in range(d // 2):
        h = arith.pow(h, p)
        diff = arith.sub(h, x)
        if p == 2:
            g = _gf2_poly_gcd(arith.fbits, diff)
            if g.bit_length() > 1:
                return False
        else:
            g = _fp_poly_gcd(f, arith.digits(diff), p)
            if len(g) > 1:
                return False
    return True


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, s: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree s over F_p (by index)."""
    if s == 1:
        return (0, 1)
    for low in range(p**s):
        cand = int_digits(low, p, s) + [1]
        if cand[0] and is_irreducible(p, cand):
            return tuple(cand)
    raise InvariantViolation(f"no irreducible polynomial of degree {s} over F_{p}")


@functools.lru_cache(maxsize=None)
def _factor(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorint(n)))


# ---------------------------------------------------------------------------
# Fields and elements
# ---------------------------------------------------------------------------


class FiniteField:
    """GF(p^s) as F_p[x]/(modulus); ``modulus`` is little-endian and monic."""

    def __init__(self, p: int, modulus: Sequence[int], *, check: bool = True):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise DegreeMismatch(f"modulus {list(modulus)} is not monic of positive degree")
        if check and not is_irreducible(p, modulus):
            raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.order = p**self.degree
        self._arith = _ModArith(p, modulus)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._zech: list[int] | None = None
        self._primitive: int | None = None

    # identity -------------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.modulus))

    def __repr__(self):
        return f"FiniteField({self.spec!r})"

    @property
    def spec(self) -> str:
        return f"{self.p}^{self.degree}/" + ",".join(map(str, self.modulus))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def is_prime_field(self) -> bool:
        return self.degree == 1

    # construction ---------------------------------------------------------

    def __call__(self, value) -> FieldElement:
        """Coerce ``value``: ints are prime-field scalars, sequences are coefficient vectors."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise MixedFields(f"element of {value.field!r} used in {self!r}")
            return value
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        return self.from_coeffs(value)

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        coeffs = [int(c) % self.p for c in coeffs]
        while len(coeffs) > self.degree and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) > self.degree:
            raise DegreeMismatch(
                f"coefficient vector of length {len(coeffs)} exceeds degree {self.degree}"
            )
        return FieldElement(self, self._arith.from_digits(coeffs))

    def from_index(self, index: int) -> FieldElement:
        if not 0 <= index < self.order:
            raise ValueError(f"index {index} out of range for {self!r}")
        return FieldElement(self, index)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The residue class of x (for prime fields this is -modulus[0])."""
        if self.degree == 1:
            return FieldElement(self, (-self.modulus[0]) % self.p)
        return FieldElement(self, self.p)

    def elements(self) -> Iterator[FieldElement]:
        for i in range(self.order):
            yield FieldElement(self, i)

    def nonzero_elements(self) -> Iterator[FieldElement]:
        for i in range(1, self.order):
            yield FieldElement(self, i)

    def basis(self) -> list[FieldElement]:
        """Polynomial basis 1, x, ..., x^(s-1) over the prime field."""
        return [FieldElement(self, self.p**i) for i in range(self.degree)]

    def primitive_element(self) -> FieldElement:
        """Smallest generator of the multiplicative group (by index)."""
        if self._primitive is None:
            q1 = self.order - 1
            exps = [q1 // ell for ell in _factor(q1)] if q1 > 1 else []
            arith = self._arith
            for v in range(1, self.order):
                if all(arith.pow(v, e) != 1 for e in exps):
                    self._primitive = v
                    break
        return FieldElement(self, self._primitive)

    # raw arithmetic on indices -------------------------------------------

    def _ensure_tables(self) -> bool:
        if self._exp is not None:
            return True
        if self.order > TABLE_LIMIT:
            return False
        q1 = self.order - 1
        g = self.primitive_element().value
        arith = self._arith
        exp = [0] * (2 * q1)
        log = [-1] * self.order
        v = 1
        for i in range(q1):
            exp[i] = v
            log[v] = i
            v = arith.mul(v, g)
        exp[q1:] = exp[:q1]
        if self.p != 2:
            zech = [-1] * q1
            for k in range(q1):
                t = arith.add(1, exp[k])
                if t:
                    zech[k] = log[t]
            self._zech = zech
        self._log = log
        self._exp = exp
        return True

    def _add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        if self._exp is not None or self._ensure_tables():
            log = self._log
            la = log[a]
            k = log[b] - la
            if k < 0:
                k += self.order - 1
            z = self._zech[k]
            if z < 0:
                return 0
            return self._exp[la + z]
        return self._arith.add(a, b)

    def _neg(self, a: int) -> int:
        if self.p == 2 or not a:
            return a
        if self._exp is not None or self._ensure_tables():
            q1 = self.order - 1
            return self._exp[self._log[a] + q1 // 2]
        return self._arith.neg(a)

    def _sub(self, a: int, b: int) -> int:
        return self._add(a, self._neg(b))

    def _mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        if self._exp is not None or self._ensure_tables():
            return self._exp[self._log[a] + self._log[b]]
        return self._arith.mul(a, b)

    def _pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self._inv(a)
            e = -e
        if not a:
            return 1 if e == 0 else 0
        q1 = self.order - 1
        e %= q1
        if self._exp is not None or self._ensure_tables():
            return self._exp[(self._log[a] * e) % q1]
        return self._arith.pow(a, e)

    def _inv(self, a: int) -> int:
        if not a:
            raise DivisionByZero(f"inverse of zero in {self!r}")
        if self._exp is not None or self._ensure_tables():
            q1 = self.order - 1
            return self._exp[(q1 - self._log[a]) % q1]
        return self._arith.pow(a, self.order - 2)

    def _scalar(self, c: int) -> int:
        return c % self.p

    # I/O -----------------------------------------------------------------

    def format(self, x: FieldElement) -> str:
        return str(x)

    def parse(self, text: str) -> FieldElement:
        """Parse ``"0"``, ``"g^k"`` or little-endian coefficients ``"c0,c1,..."``."""
        text = text.strip()
        if not text:
            raise ParseError("empty element string")
        if text.startswith("g^"):
            try:
                k = int(text[2:])
            except ValueError:
                raise ParseError(f"bad exponent in element {text!r}") from None
            return self.primitive_element() ** k
        try:
            coeffs = [int(c) for c in text.split(",")]
        except ValueError:
            raise ParseError(f"bad element syntax {text!r}") from None
        try:
            return self.from_coeffs(coeffs)
        except DegreeMismatch as exc:
            raise ParseError(str(exc)) from None

    def log_of(self, x: FieldElement, base: FieldElement | None = None) -> int | None:
        """Exponent k with base^k = x (base defaults to the primitive element); exhaustive."""
        base = self.primitive_element() if base is None else self(base)
        if x.field != self:
            raise MixedFields("element from another field")
        if not x.value:
            return None
        cur = 1
        for k in range(self.order - 1):
            if cur == x.value:
                return k
            cur = self._mul(cur, base.value)
            if cur == 1:
                break
        return None


class FieldElement:
    """Immutable element of a :class:`FiniteField`."""

    __slots__ = ("field", "value")

    def __init__(self, field: FiniteField, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field._arith.digits(self.value))

    @property
    def index(self) -> int:
        return self.value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise MixedFields(f"cannot combine {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        raise TypeError(f"unsupported operand {other!r}")

    def __add__(self, other):
        return FieldElement(self.field, self.field._add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field._sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field._sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field._mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field._mul(self.value, self.field._inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field._mul(o, self.field._inv(self.value)))

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field._pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field._inv(self.value))

    def frobenius(self, times: int = 1) -> FieldElement:
        return self ** (self.field.p**times)

    def multiplicative_order(self) -> int:
        if not self.value:
            raise DivisionByZero("zero has no multiplicative order")
        order = self.field.order - 1
        for ell in _factor(order):
            while order % ell == 0 and self.field._pow(self.value, order // ell) == 1:
                order //= ell
        return order

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field == other.field
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.field.modulus, self.value))

    def __bool__(self):
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self):
        if not self.value:
            return "0"
        ds = list(self.coeffs)
        while ds[-1] == 0:
            ds.pop()
        return ",".join(map(str, ds))

    def __repr__(self):
        return f"<{self} in GF({self.field.p}^{self.field.degree})>"


# ---------------------------------------------------------------------------
# Field construction
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, modulus: tuple[int, ...], check: bool) -> FiniteField:
    return FiniteField(p, modulus, check=check)


def field_create(p: int, s: int = 1, modulus: Sequence[int] | None = None) -> FiniteField:
    """Build GF(p^s); without ``modulus`` the default (smallest irreducible) is used."""
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")
    if s < 1:
        raise DegreeMismatch(f"degree must be positive, got {s}")
    if modulus is None:
        return _cached_field(p, default_modulus(p, s), False)
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != s + 1:
        raise DegreeMismatch(f"modulus {list(modulus)} does not have degree {s}")
    return _cached_field(p, modulus, True)


def parse_field(text: str) -> FiniteField:
    """Parse a field spec ``"p^s/c0,...,cs"`` (the modulus part is optional)."""
    text = text.strip()
    head, _, tail = text.partition("/")
    try:
        if "^" in head:
            p_str, s_str = head.split("^")
            p, s = int(p_str), int(s_str)
        else:
            p, s = int(head), 1
        modulus = [int(c) for c in tail.split(",")] if tail else None
    except ValueError:
        raise ParseError(f"bad field spec {text!r}") from None
    return field_create(p, s, modulus)


# ---------------------------------------------------------------------------
# Embeddings, traces, roots of unity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Embedding:
    """Field homomorphism sub -> sup fixed by the image of sub's generator."""

    sub: FiniteField
    sup: FiniteField
    image_of_generator: FieldElement
    _powers: tuple = dc_field(default=(), compare=False, repr=False)
    _solver: list = dc_field(default_factory=list, compare=False, repr=False)

    def __post_init__(self):
        sup = self.sup
        powers = [1]
        for _ in range(1, self.sub.degree):
            powers.append(sup._mul(powers[-1], self.image_of_generator.value))
        object.__setattr__(self, "_powers", tuple(powers))

    @property
    def degree(self) -> int:
        """Relative degree [sup : sub]."""
        return self.sup.degree // self.sub.degree

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.field != self.sub:
            raise MixedFields(f"element of {x.field!r} is not in {self.sub!r}")
        sup = self.sup
        acc = 0
        for c, pw in zip(x.coeffs, self._powers):
            if c:
                acc = sup._add(acc, sup._mul(c, pw))
        return FieldElement(sup, acc)

    def _solve_setup(self):
        # Pick sub.degree digit positions where the image basis is invertible over F_p.
        p, s = self.sup.p, self.sub.degree
        cols = [self.sup._arith.digits(v) for v in self._powers]
        rows = [[cols[j][i] for j in range(s)] for i in range(self.sup.degree)]
        chosen: list[int] = []
        basis: list[list[int]] = []
        for i, row in enumerate(rows):
            r = list(row)
            for b, piv in basis:
                if r[piv]:
                    c = r[piv]
                    r = [(x - c * y) % p for x, y in zip(r, b)]
            nz = next((j for j, v in enumerate(r) if v), None)
            if nz is None:
                continue
            inv = pow(r[nz], -1, p)
            r = [v * inv % p for v in r]
            basis = [
                ([(x - bb[nz] * y) % p for x, y in zip(bb, r)], pv) for bb, pv in basis
            ]
            basis.append((r, nz))
            chosen.append(i)
            if len(chosen) == s:
                break
        square = [rows[i] for i in chosen]
        inv = _fp_matrix_inverse(square, p)
        self._solver.extend([chosen, inv])

    def preimage(self, y: FieldElement) -> FieldElement | None:
        """The sub element mapping to ``y``, or None when y is outside the image."""
        if y.field != self.sup:
            raise MixedFields(f"element of {y.field!r} is not in {self.sup!r}")
        if not self._solver:
            self._solve_setup()
        chosen, inv = self._solver
        p = self.sup.p
        ds = self.sup._arith.digits(y.value)
        rhs = [ds[i] for i in chosen]
        coeffs = [sum(a * b for a, b in zip(row, rhs)) % p for row in inv]
        x = self.sub.from_coeffs(coeffs)
        return x if self(x) == y else None

    def contains(self, y: FieldElement) -> bool:
        return self.preimage(y) is not None


def _fp_matrix_inverse(m: list[list[int]], p: int) -> list[list[int]]:
    n = len(m)
    a = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] % p), None)
        if piv is None:
            raise InvariantViolation("embedding image basis is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], -1, p)
        a[col] = [v * inv % p for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                c = a[r][col]
                a[r] = [(x - c * y) % p for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def _eval_int_poly(coeffs: Sequence[int], y: FieldElement) -> FieldElement:
    acc = y.field.zero
    for c in reversed(coeffs):
        acc = acc * y + c
    return acc


def identity_embedding(f: FiniteField) -> Embedding:
    return Embedding(f, f, f.gen)


@functools.lru_cache(maxsize=None)
def embed_build(sub: FiniteField, sup: FiniteField) -> Embedding:
    """Embedding sub -> sup sending sub's generator to the smallest root of its modulus."""
    if sub.p != sup.p or sup.degree % sub.degree:
        raise NoEmbedding(f"{sub!r} does not embed in {sup!r}")
    if sub == sup:
        return identity_embedding(sub)
    # Roots of sub.modulus lie in {0} together with the subgroup of order |sub|-1.
    q1 = sup.order - 1
    h = sup.primitive_element() ** (q1 // (sub.order - 1))
    candidates = [sup.zero]
    cur = sup.one
    for _ in range(sub.order - 1):
        candidates.append(cur)
        cur = cur * h
    roots = [y for y in candidates if not _eval_int_poly(sub.modulus, y)]
    if not roots:
        raise InvariantViolation(f"modulus of {sub!r} has no root in {sup!r}")
    emb = Embedding(sub, sup, min(roots, key=lambda y: y.value))
    # homomorphism check on basis products
    basis = sub.basis()
    for u in basis:
        for v in basis:
            if emb(u * v) != emb(u) * emb(v):
                raise InvariantViolation("embedding fails to be multiplicative")
    if emb(sub.one) != sup.one:
        raise InvariantViolation("embedding does not fix 1")
    return emb


def trace_in_sup(emb: Embedding, x: FieldElement) -> FieldElement:
    """Relative trace Tr_{sup/sub}(x), left inside sup."""
    if x.field != emb.sup:
        raise MixedFields(f"element of {x.field!r} is not in {emb.sup!r}")
    q = emb.sub.order
    acc = x
    y = x
    for _ in range(emb.degree - 1):
        y = y**q
        acc = acc + y
    return acc


def trace_to(emb: Embedding, x: FieldElement) -> FieldElement:
    """Relative trace of x in sup, returned as an element of sub."""
    t = emb.preimage(trace_in_sup(emb, x))
    if t is None:
        raise InvariantViolation("trace left the subfield")
    return t


def primitive_root_of_unity(
    base: FiniteField, k: int, ext: FiniteField | None = None
) -> tuple[FieldElement, FiniteField, Embedding]:
    """Primitive k-th root of unity in the smallest extension of ``base`` holding one.

    Returns ``(theta, ext, emb)`` with ``theta = g^((|ext|-1)/k)`` for the
    primitive element g of ext.  A caller may pass ``ext`` to fix the modulus
    of the extension (it must contain a primitive k-th root).
    """
    if k < 1:
        raise ValueError("k must be positive")
    if math.gcd(k, base.p) != 1:
        raise RootObstruction(f"no primitive {k}-th root of unity in characteristic {base.p}")
    t = 1 if k == 1 else int(n_order(base.order, k))
    if ext is None:
        ext = base if t == 1 else field_create(base.p, base.degree * t)
    elif ext.p != base.p or ext.degree % base.degree or (ext.order - 1) % k:
        raise NoEmbedding(f"{ext!r} cannot hold a primitive {k}-th root over {base!r}")
    emb = embed_build(base, ext)
    theta = ext.primitive_element() ** ((ext.order - 1) // k)
    return theta, ext, emb


def sqrt_minus_one(base: FiniteField) -> tuple[FieldElement, FiniteField, Embedding]:
    """An element mu with mu^2 = -1 (mu = 1 in characteristic 2)."""
    if base.p == 2:
        return base.one, base, identity_embedding(base)
    return primitive_root_of_unity(base, 4)


def dual_basis(emb: Embedding, basis: Sequence[FieldElement]) -> list[FieldElement]:
    """Trace-dual basis: Tr(e_i * e'_j) = delta_ij."""
    from .algebra import Matrix  # local import: algebra builds on this module

    t = emb.degree
    basis = [emb.sup(b) for b in basis]
    if len(basis) != t:
        raise NotABasis(f"need {t} elements, got {len(basis)}")
    gram = Matrix(
        emb.sub, [[trace_to(emb, u * v) for v in basis] for u in basis]
    )
    try:
        inv = gram.inverse()
    except SingularMatrix:
        raise NotABasis("elements are linearly dependent over the subfield") from None
    out = []
    for j in range(t):
        acc = emb.sup.zero
        for k in range(t):
            acc = acc + emb(inv[k, j]) * basis[k]
        out.append(acc)
    return out
