from itertools import permutations

import pytest
from hypothesis import strategies as st

from kingperm.perm_core import Permutation


def P(text):
    return Permutation.parse(text)


def all_perms(n):
    return [Permutation(t) for t in permutations(range(1, n + 1))]


@st.composite
def perms(draw, min_size=1, max_size=10):
    n = draw(st.integers(min_size, max_size))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@pytest.fixture
def p3142():
    return P("3142")
