from __future__ import annotations

from hypothesis import strategies as st

from lcdt.galois import field_create

# (p, s) pairs small enough for exhaustive checks
SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (3, 4)]


def small_fields():
    return st.sampled_from(SMALL).map(lambda ps: field_create(*ps))


@st.composite
def field_and_elements(draw, count=2, fields=None):
    F = draw(fields if fields is not None else small_fields())
    xs = [F.from_index(draw(st.integers(0, F.order - 1))) for _ in range(count)]
    return (F, *xs)

# PASS/FAIL lines from the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []
