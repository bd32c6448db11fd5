import numpy as np
from hypothesis import strategies as st

weight = st.floats(min_value=0.1, max_value=10.0, allow_nan=False, allow_infinity=False)


@st.composite
def weights(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return np.array(draw(st.lists(weight, min_size=n, max_size=n)))


@st.composite
def connected_mask(draw, n):
    """Symmetric known-mask containing a random spanning tree plus random extra pairs."""
    known = np.eye(n, dtype=bool)
    order = draw(st.permutations(range(n)))
    for k in range(1, n):
        parent = order[draw(st.integers(min_value=0, max_value=k - 1))]
        known[order[k], parent] = known[parent, order[k]] = True
    extra = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    extra = np.array(extra).reshape(n, n)
    extra = np.triu(extra, 1)
    known |= extra | extra.T
    return known


@st.composite
def consistent_problem(draw, min_n=2, max_n=12):
    """(weights, known mask) with a connected comparison graph."""
    w = draw(weights(min_n, max_n))
    return w, draw(connected_mask(len(w)))


@st.composite
def nonneg_matrix(draw, min_n=1, max_n=8, max_value=10.0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    cells = draw(st.lists(st.floats(min_value=0.0, max_value=max_value), min_size=n * n, max_size=n * n))
    return np.array(cells).reshape(n, n)


def masked(w, known):
    m = w[:, None] / w[None, :]
    return np.where(known, m, np.nan)
