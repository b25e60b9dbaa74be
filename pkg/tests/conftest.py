from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import strategies as st

from qcd.gf import FieldSpec, field_from_order
from qcd.grouptalg import GroupAlgebraElement

SMALL_QS = (2, 3, 4, 5)

# filled by tests/test_acceptance.py, printed once at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def admissible_ns(q: int, max_n: int = 15) -> list[int]:
    return [n for n in range(1, max_n + 1) if math.gcd(n, q) == 1]


def random_element(F: FieldSpec, n: int, rng: np.random.Generator) -> GroupAlgebraElement:
    return GroupAlgebraElement(F, n, tuple(int(v) for v in rng.integers(0, F.q, n)))


@st.composite
def algebra_and_elements(draw, count: int = 2, qs=SMALL_QS, max_n: int = 15):
    q = draw(st.sampled_from(qs))
    n = draw(st.sampled_from(admissible_ns(q, max_n)))
    F = field_from_order(q)
    elems = [
        GroupAlgebraElement(F, n, tuple(draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n))))
        for _ in range(count)
    ]
    return F, n, elems


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
