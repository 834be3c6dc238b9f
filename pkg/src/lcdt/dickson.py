"""Dickson polynomials of the second kind E_n (parameter 1) and their roots.

E_0 = 1, E_1 = x, E_n = x E_{n-1} - E_{n-2}.  Writing n + 1 = p^r (m + 1)
with p not dividing m + 1, the roots are explicit:

* odd p:  theta^i + theta^-i (1 <= i <= m, theta of order 2(m+1)), each with
  multiplicity p^r, plus 2 and -2 each with multiplicity (p^r - 1)/2;
* p = 2:  theta^i + theta^-i (1 <= i <= m/2, theta of order m+1), each with
  multiplicity 2^(r+1), plus 0 with multiplicity 2^r - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Poly, poly_from_roots
from .errors import InvariantViolation
from .galois import (
    Embedding,
    FieldElement,
    FiniteField,
    embed_build,
    identity_embedding,
    primitive_root_of_unity,
)


@dataclass(frozen=True)
class FactorizationProfile:
    n: int
    p: int
    r: int
    m: int

    def __post_init__(self):
        pr = self.p**self.r
        if (self.n + 1) != pr * (self.m + 1) or (self.m + 1) % self.p == 0:
            raise InvariantViolation(f"inconsistent profile {self}")

    @property
    def p_power(self) -> int:
        return self.p**self.r

    def as_dict(self) -> dict:
        return {"n": self.n, "p": self.p, "r": self.r, "m": self.m}


def factor_profile(n: int, p: int) -> FactorizationProfile:
    """The unique (r, m) with p^r || n+1 and n+1 = p^r (m+1)."""
    if n < 1:
        raise ValueError("n must be positive")
    r, rest = 0, n + 1
    while rest % p == 0:
        rest //= p
        r += 1
    prof = FactorizationProfile(n=n, p=p, r=r, m=rest - 1)
    if p == 2 and prof.m % 2:
        raise InvariantViolation("m must be even in characteristic 2")
    return prof


def dickson_eval(n: int, x: FieldElement) -> FieldElement:
    """E_n(x) by the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = x.field.one, x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur - prev
    return cur


def dickson_poly(n: int, field: FiniteField) -> Poly:
    """Coefficients of E_n over ``field``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Poly.x(field)
    prev, cur = Poly.constant(field, 1), x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur - prev
    return cur


@dataclass
class RootMultiset:
    """Roots with multiplicities, living in ``ext`` (reached from the base via ``emb``)."""

    ext: FiniteField
    emb: Embedding
    items: list[tuple[FieldElement, int]]
    theta: FieldElement | None = None
    profile: FactorizationProfile | None = None
    notes: list[str] = dc_field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(m for _, m in self.items)

    def as_counter(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for root, mult in self.items:
            out[root.value] = out.get(root.value, 0) + mult
        return out

    def expand(self) -> Poly:
        """prod (x - root)^mult over ext (monic)."""
        return poly_from_roots(self.ext, self.items)

    def distinct(self) -> list[FieldElement]:
        return [r for r, _ in self.items]

    def to_json(self) -> dict:
        return {
            "field": self.ext.spec,
            "theta": None if self.theta is None else str(self.theta),
            "roots": [{"root": str(r), "multiplicity": m} for r, m in self.items],
        }


def _merge(items: list[tuple[FieldElement, int]]) -> list[tuple[FieldElement, int]]:
    acc: dict[int, list] = {}
    for root, mult in items:
        if mult <= 0:
            continue
        if root.value in acc:
            acc[root.value][1] += mult
        else:
            acc[root.value] = [root, mult]
    return sorted(((r, m) for r, m in acc.values()), key=lambda rm: rm[0].value)


def theta_order(profile: FactorizationProfile) -> int | None:
    """Order of the root of unity theta needed for E_m, or None when m = 0."""
    if profile.m == 0:
        return None
    return profile.m + 1 if profile.p == 2 else 2 * (profile.m + 1)


def theta_sums(theta: FieldElement, count: int) -> list[FieldElement]:
    """theta^i + theta^-i for i = 1..count."""
    inv = theta.inverse()
    out = []
    up, down = theta, inv
    for _ in range(count):
        out.append(up + down)
        up, down = up * theta, down * inv
    return out


def roots_from_theta(
    profile: FactorizationProfile,
    ext: FiniteField,
    theta: FieldElement | None,
) -> list[tuple[FieldElement, int]]:
    """Root multiset of E_n in ``ext`` given a suitable theta (ignored when m = 0)."""
    p, r, m = profile.p, profile.r, profile.m
    pr = p**r
    items: list[tuple[FieldElement, int]] = []
    if p == 2:
        if r == 0 and profile.n % 2:
            raise InvariantViolation("characteristic 2 with r = 0 requires n even")
        if m:
            items += [(rho, 2 * pr) for rho in theta_sums(theta, m // 2)]
        items.append((ext.zero, pr - 1))
    else:
        if m:
            items += [(rho, pr) for rho in theta_sums(theta, m)]
        two = ext(2)
        items.append((two, (pr - 1) // 2))
        items.append((-two, (pr - 1) // 2))
    merged = _merge(items)
    if sum(mu for _, mu in merged) != profile.n:
        raise InvariantViolation(f"multiplicities do not sum to n for {profile}")
    return merged


def dickson_roots(
    n: int,
    base: FiniteField,
    *,
    theta_exponent: int = 1,
    ext: FiniteField | None = None,
) -> RootMultiset:
    """Full root multiset of E_n over the smallest extension containing theta.

    ``theta_exponent`` replaces the default theta by theta^j (j coprime to its
    order); the resulting multiset must not depend on it.
    """
    profile = factor_profile(n, base.p)
    k = theta_order(profile)
    if k is None:
        emb = identity_embedding(base) if ext is None else embed_build(base, ext)
        target = emb.sup
        theta = None
    else:
        theta, target, emb = primitive_root_of_unity(base, k, ext)
        if theta_exponent != 1:
            theta = theta**theta_exponent
            if theta.multiplicative_order() != k:
                raise ValueError(f"theta^{theta_exponent} is not a primitive {k}-th root")
    items = roots_from_theta(profile, target, theta)
    return RootMultiset(ext=target, emb=emb, items=items, theta=theta, profile=profile)
