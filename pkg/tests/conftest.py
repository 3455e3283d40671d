import pytest
from hypothesis import strategies as st

from fdfa.core import trim
from fdfa.oracle import enumerate_all_dfas


@pytest.fixture(scope="session")
def suite2():
    """Every complete all-reachable DFA with at most 2 states over {0,1}."""
    return tuple(d for n in (1, 2) for d in enumerate_all_dfas(n, "01"))


@pytest.fixture(scope="session")
def suite3(suite2):
    """Every complete all-reachable DFA with at most 3 states over {0,1}."""
    return suite2 + tuple(enumerate_all_dfas(3, "01"))


@st.composite
def dfas(draw, max_states=4, alphabet="01"):
    """Random reachable DFA; unreachable states are trimmed away."""
    n = draw(st.integers(1, max_states))
    delta = tuple(
        tuple(draw(st.integers(0, n - 1)) for _ in alphabet) for _ in range(n)
    )
    start = draw(st.integers(0, n - 1))
    accepting = frozenset(q for q in range(n) if draw(st.booleans()))
    d, _ = trim(alphabet, start, accepting, delta, None)
    return d
