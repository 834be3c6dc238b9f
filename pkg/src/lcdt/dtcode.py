"""Double Toeplitz codes [I_n | T_n(a, b)] with tridiagonal symmetric T.

The code is LCD iff -1 is not an eigenvalue of T^2, i.e. (characteristic 2)
-1 is not an eigenvalue of T, or (odd characteristic) neither mu nor -mu is,
where mu^2 = -1.  The eigenvalues of T_n(a, b) are a - b*rho for the roots rho
of the Dickson polynomial E_n, which gives an explicit forbidden set of
diagonal values a for each b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field

from .algebra import Matrix
from .dickson import (
    FactorizationProfile,
    RootMultiset,
    dickson_roots,
    factor_profile,
    theta_order,
    theta_sums,
)
from .errors import InvariantViolation, RankDeficientGenerator, ZeroOffDiagonal
from .galois import (
    Embedding,
    FieldElement,
    FiniteField,
    embed_build,
    identity_embedding,
    primitive_root_of_unity,
    sqrt_minus_one,
)


@dataclass(frozen=True)
class DTParams:
    field: FiniteField
    n: int
    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        object.__setattr__(self, "a", self.field(self.a))
        object.__setattr__(self, "b", self.field(self.b))


def build_tridiag(params: DTParams) -> Matrix:
    """n x n matrix with a on the diagonal and b next to it."""
    F, n = params.field, params.n
    if n >= 2 and not params.b:
        raise ZeroOffDiagonal("off-diagonal entry b must be nonzero")
    a, b = params.a.value, params.b.value
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = a
        if i + 1 < n:
            rows[i][i + 1] = rows[i + 1][i] = b
    return Matrix._from_raw(F, rows, n)


def dt_generator(params: DTParams) -> Matrix:
    """[I_n | T_n(a, b)]."""
    return Matrix.identity(params.field, params.n).hstack(build_tridiag(params))


def spectrum(params: DTParams) -> RootMultiset:
    """Eigenvalues a - b*rho of T_n(a, b), rho running over the roots of E_n."""
    if not params.b:
        raise ZeroOffDiagonal("spectrum needs b != 0")
    roots = dickson_roots(params.n, params.field)
    emb = roots.emb
    a, b = emb(params.a), emb(params.b)
    items = [(a - b * rho, mult) for rho, mult in roots.items]
    items.sort(key=lambda rm: rm[0].value)
    return RootMultiset(
        ext=roots.ext, emb=emb, items=items, theta=roots.theta, profile=roots.profile
    )


@dataclass
class ForbiddenSet:
    """Diagonal values a making the DT code non-LCD, for fixed (field, n, b)."""

    field: FiniteField
    n: int
    b: FieldElement
    profile: FactorizationProfile
    ext: FiniteField
    emb: Embedding
    theta: FieldElement | None
    mu: FieldElement
    ratios: list[FieldElement]
    full_set: list[FieldElement]
    base_intersection: list[FieldElement]

    def contains(self, a: FieldElement) -> bool:
        a = self.field(a)
        return any(a == x for x in self.base_intersection)

    def to_json(self) -> dict:
        return {
            "profile": {"r": self.profile.r, "m": self.profile.m},
            "theta_field": self.ext.spec,
            "theta": None if self.theta is None else str(self.theta),
            "mu": str(self.mu),
            "ratios": [str(x) for x in self.ratios],
            "forbidden_full": [str(x) for x in self.full_set],
            "forbidden_base": [str(x) for x in self.base_intersection],
        }


def _dedupe(xs: list[FieldElement]) -> list[FieldElement]:
    seen = {}
    for x in xs:
        seen.setdefault(x.value, x)
    return [seen[v] for v in sorted(seen)]


def forbidden_set(
    field: FiniteField, n: int, b: FieldElement, *, ext: FiniteField | None = None
) -> ForbiddenSet:
    """All a with C_n(a, b) not LCD, in the splitting field and in the base field.

    ``ext`` optionally fixes the extension used for theta and mu.
    """
    if n < 2:
        raise ValueError("the forbidden-set characterization needs n >= 2")
    b = field(b)
    if not b:
        raise ZeroOffDiagonal("b must be nonzero")
    profile = factor_profile(n, field.p)
    k = theta_order(profile)
    if field.p == 2:
        if k is None:
            emb = identity_embedding(field) if ext is None else embed_build(field, ext)
            theta = None
        else:
            theta, ext, emb = primitive_root_of_unity(field, k, ext)
        ext = emb.sup
        mu = ext.one  # -1 = 1
        bb = emb(b)
        binv = bb.inverse()
        ratios = [binv + rho for rho in theta_sums(theta, profile.m // 2)] if theta is not None else []
        if profile.r >= 1:
            ratios.append(binv)
    else:
        # one root of unity zeta whose powers give both theta and mu
        order = 4 if k is None else math.lcm(k, 4)
        zeta, ext, emb = primitive_root_of_unity(field, order, ext)
        theta = None if k is None else zeta ** (order // k)
        mu = zeta ** (order // 4)
        bb = emb(b)
        binv = bb.inverse()
        rhos = theta_sums(theta, profile.m) if theta is not None else []
        if profile.r >= 1:
            two = ext(2)
            rhos = rhos + [two, -two]
        ratios = [s * mu * binv + rho for s in (-1, 1) for rho in rhos]
    ratios = _dedupe(ratios)
    full = _dedupe([bb * x for x in ratios])
    base = []
    for y in full:
        pre = emb.preimage(y)
        if pre is not None:
            base.append(pre)
    base.sort(key=lambda x: x.value)
    if field.p != 2 and mu * mu != -ext.one:
        raise InvariantViolation("mu^2 != -1")
    return ForbiddenSet(
        field=field,
        n=n,
        b=b,
        profile=profile,
        ext=ext,
        emb=emb,
        theta=theta,
        mu=mu,
        ratios=ratios,
        full_set=full,
        base_intersection=base,
    )


def is_lcd_direct(generator: Matrix) -> bool:
    """det(G G^T) != 0, for a full-row-rank generator G."""
    if generator.rank() != generator.nrows:
        raise RankDeficientGenerator("generator rows are linearly dependent")
    return bool((generator @ generator.T).det())


def is_lcd_theorem(params: DTParams, fs: ForbiddenSet | None = None) -> bool:
    """LCD verdict from the forbidden set (direct oracle for n = 1)."""
    if params.n == 1:
        return is_lcd_direct(dt_generator(params))
    if not params.b:
        raise ZeroOffDiagonal("b must be nonzero")
    if fs is None:
        fs = forbidden_set(params.field, params.n, params.b)
    return not fs.contains(params.a)


# ---------------------------------------------------------------------------
# Existence corollaries
# ---------------------------------------------------------------------------


@dataclass
class CorollaryRecord:
    name: str
    in_scope: bool  # the characteristic / r-case this corollary addresses
    holds: bool  # hypothesis satisfied (implies in_scope)
    guarantee: str | None  # "exists" | "all_except" when holds
    exceptions: list[FieldElement] = dc_field(default_factory=list)
    condition: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "in_scope": self.in_scope,
            "holds": self.holds,
            "guarantee": self.guarantee,
            "exceptions": [str(x) for x in self.exceptions],
            "condition": self.condition,
        }


@dataclass
class CorollaryDiagnosis:
    field: FiniteField
    n: int
    b: FieldElement
    profile: FactorizationProfile
    records: list[CorollaryRecord]

    def applicable(self) -> list[CorollaryRecord]:
        return [r for r in self.records if r.holds]

    def to_json(self) -> dict:
        return {
            "field": self.field.spec,
            "n": self.n,
            "b": str(self.b),
            "profile": {"r": self.profile.r, "m": self.profile.m},
            "records": [r.to_json() for r in self.records],
        }


def _mu_pm2b(field: FiniteField, b: FieldElement) -> list[FieldElement]:
    """{±mu ± 2b} ∩ F_q; empty unless q = 1 mod 4 (mu in F_q)."""
    if field.order % 4 != 1:
        return []
    mu, ext, _ = sqrt_minus_one(field)
    if ext != field:
        raise InvariantViolation("mu should lie in F_q when q = 1 mod 4")
    two_b = b * 2
    return _dedupe([s * mu + t * two_b for s in (1, -1) for t in (1, -1)])


def existence_diagnosis(
    field: FiniteField, n: int, b: FieldElement | None = None
) -> CorollaryDiagnosis:
    """Evaluate every existence corollary's hypothesis for (field, n, b)."""
    b = field.one if b is None else field(b)
    if not b:
        raise ZeroOffDiagonal("b must be nonzero")
    q, p = field.order, field.p
    prof = factor_profile(n, p)
    r, m = prof.r, prof.m
    even = p == 2
    recs: list[CorollaryRecord] = []

    def add(name, in_scope, holds, guarantee, exceptions=(), condition=""):
        holds = bool(in_scope and holds)
        recs.append(
            CorollaryRecord(
                name=name,
                in_scope=in_scope,
                holds=holds,
                guarantee=guarantee if holds else None,
                exceptions=list(exceptions) if holds else [],
                condition=condition,
            )
        )

    add("counting-even", even and r == 0, 2 * q > n, "exists", condition="q > n/2")
    add("counting-odd", not even and r == 0, q > 2 * n, "exists", condition="q > 2n")
    add(
        "arithmetic-even",
        even and r == 0,
        math.gcd(n + 1, q * (q * q - 1)) == 1,
        "all_except",
        condition="gcd(n+1, q(q^2-1)) = 1",
    )
    if not even and q % 4 == 1:
        cond = math.gcd(n + 1, q * (q * q - 1) // 2) == 1
        text = "q = 1 mod 4 and gcd(n+1, q(q^2-1)/2) = 1"
    else:
        cond = math.gcd(n + 1, q) == 1 and ((q - 1) // 2) % math.gcd(n + 1, (q**4 - 1) // 2) == 0
        text = "q = 3 mod 4, gcd(n+1, q) = 1 and gcd(n+1, (q^4-1)/2) | (q-1)/2"
    in_scope = not even and r == 0
    add(
        "arithmetic-odd",
        in_scope,
        cond,
        "all_except",
        _mu_pm2b(field, b) if in_scope and cond else (),
        condition=text,
    )
    add("counting-even-ext", even and r >= 1, 2 * q > m + 2, "exists", condition="q > m/2 + 1")
    add("counting-odd-ext", not even and r >= 1, q > 2 * m + 4, "exists", condition="q > 2m + 4")
    add(
        "arithmetic-even-ext",
        even and r >= 1,
        math.gcd(m + 1, q * q - 1) == 1,
        "all_except",
        [field.one],
        condition="gcd(m+1, q^2-1) = 1",
    )
    if not even and q % 4 == 1:
        cond = math.gcd(m + 1, (q * q - 1) // 2) == 1
        text = "q = 1 mod 4 and gcd(m+1, (q^2-1)/2) = 1"
    else:
        cond = ((q - 1) // 2) % math.gcd(m + 1, (q**4 - 1) // 2) == 0
        text = "q = 3 mod 4 and gcd(m+1, (q^4-1)/2) | (q-1)/2"
    in_scope = not even and r >= 1
    add(
        "arithmetic-odd-ext",
        in_scope,
        cond,
        "all_except",
        _mu_pm2b(field, b) if in_scope and cond else (),
        condition=text,
    )
    return CorollaryDiagnosis(field=field, n=n, b=b, profile=prof, records=recs)


def diagnosis_contradictions(diag: CorollaryDiagnosis, fs: ForbiddenSet) -> list[str]:
    """Names of applicable corollaries whose guarantee the forbidden set refutes."""
    bad = []
    base = {x.value for x in fs.base_intersection}
    for rec in diag.applicable():
        if rec.guarantee == "exists" and len(base) >= diag.field.order:
            bad.append(rec.name)
        elif rec.guarantee == "all_except" and not base <= {x.value for x in rec.exceptions}:
            bad.append(rec.name)
    return bad
