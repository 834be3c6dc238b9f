"""Linear codes given by generator matrices: distance, weights, dual, hull."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .algebra import Matrix
from .errors import BudgetExceeded, MixedFields
from .galois import FiniteField

DEFAULT_BUDGET = 1 << 24
_CHUNK = 1 << 14


def enumeration_budget() -> int:
    value = os.environ.get("LCDT_BUDGET")
    return int(value) if value else DEFAULT_BUDGET


def thread_count() -> int:
    value = os.environ.get("LCDT_THREADS")
    return max(1, int(value)) if value else (os.cpu_count() or 1)


class LinearCode:
    """Row space of a generator matrix, kept in reduced row echelon form."""

    def __init__(self, generator: Matrix):
        red, pivots = generator.rref()
        self.field: FiniteField = generator.field
        self.length = generator.ncols
        self.generator = Matrix._from_raw(self.field, red.raw_rows()[: len(pivots)], self.length)
        self.pivots = pivots

    @property
    def k(self) -> int:
        return self.generator.nrows

    @property
    def dimension(self) -> int:
        return self.k

    @property
    def N(self) -> int:
        return self.length

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.generator == other.generator

    def __repr__(self):
        return f"LinearCode[{self.length},{self.k}]_{self.field.order}"

    def params(self) -> tuple[int, int]:
        return self.length, self.k


def _check_budget(code: LinearCode, budget: int | None) -> int:
    budget = enumeration_budget() if budget is None else budget
    total = code.field.order**code.k
    if total > budget:
        raise BudgetExceeded(
            f"enumerating {total} codewords exceeds the budget of {budget}", required=total
        )
    return total


def _weights_prime(code: LinearCode, total: int) -> Counter:
    # Messages are the base-p digits of 0..total-1; chunks are independent.
    p, k = code.field.p, code.k
    G = np.array(code.generator.raw_rows(), dtype=np.int64).reshape(k, code.length)
    place = p ** np.arange(k, dtype=np.int64)

    def chunk(start: int) -> Counter:
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        msgs = (idx[:, None] // place[None, :]) % p
        words = (msgs @ G) % p
        return Counter(np.count_nonzero(words, axis=1).tolist())

    starts = range(0, total, _CHUNK)
    threads = min(thread_count(), len(starts))
    result: Counter = Counter()
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            for part in pool.map(chunk, starts):
                result.update(part)
    else:
        for s in starts:
            result.update(chunk(s))
    return result


def _weights_generic(code: LinearCode) -> Counter:
    F = code.field
    add, mul = F._add, F._mul
    rows = code.generator.raw_rows()
    result: Counter = Counter()

    def walk(i: int, acc: list[int]):
        if i == len(rows):
            result[sum(1 for v in acc if v)] += 1
            return
        row = rows[i]
        for c in range(F.order):
            if c == 0:
                walk(i + 1, acc)
            else:
                walk(i + 1, [add(a, mul(c, g)) for a, g in zip(acc, row)])

    walk(0, [0] * code.length)
    return result


def weight_distribution(code: LinearCode, budget: int | None = None) -> dict[int, int]:
    """Number of codewords of each Hamming weight (full enumeration)."""
    total = _check_budget(code, budget)
    if code.k == 0:
        return {0: 1}
    if code.field.is_prime_field:
        counts = _weights_prime(code, total)
    else:
        counts = _weights_generic(code)
    return dict(sorted(counts.items()))


def min_distance(code: LinearCode, budget: int | None = None) -> int:
    """Minimum nonzero Hamming weight; 0 for the zero code."""
    dist = weight_distribution(code, budget)
    positive = [w for w in dist if w > 0]
    return min(positive) if positive else 0


def dual_code(code: LinearCode) -> LinearCode:
    """Euclidean dual."""
    if code.k == 0:
        return LinearCode(Matrix.identity(code.field, code.length))
    return LinearCode(code.generator.nullspace())


def hull_dimension(code: LinearCode) -> int:
    """dim(C ∩ C^perp) = k - rank(G G^T)."""
    if code.k == 0:
        return 0
    G = code.generator
    return code.k - (G @ G.T).rank()


def intersection_dimension(c1: LinearCode, c2: LinearCode) -> int:
    if c1.field != c2.field:
        raise MixedFields("codes over different fields")
    if c1.k == 0 or c2.k == 0:
        return 0
    return c1.k + c2.k - c1.generator.vstack(c2.generator).rank()


def is_lcd(code: LinearCode) -> bool:
    return hull_dimension(code) == 0
