"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from gtsq.trees import LabelledTree, prufer_decode


@st.composite
def labelled_trees(draw, min_n: int = 1, max_n: int = 9) -> LabelledTree:
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return LabelledTree(1, ())
    if n == 2:
        return LabelledTree(2, ((0, 1),))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return prufer_decode(seq, n)


@st.composite
def relabellings(draw, t: LabelledTree) -> LabelledTree:
    perm = draw(st.permutations(range(t.n)))
    return t.relabel(perm)


real_q = st.sampled_from([-10.0, -1.5, -1.0, -0.9, -0.5, -0.1, 0.1, 0.5, 0.9, 1.0, 1.5, 10.0]) | st.floats(
    -3.0, 3.0, allow_nan=False
).filter(lambda q: abs(q) > 1e-3)
