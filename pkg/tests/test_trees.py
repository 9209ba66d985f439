import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gtsq.trees import (
    LabelledTree,
    TreeCode,
    TreeError,
    canonical_code,
    centers,
    decode,
    delete_leaf,
    enumerate_trees,
    induced_subtree,
    path_tree,
    prufer_oracle,
    prufer_oracle_slow,
    star_tree,
)
from strategies import labelled_trees

COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106, 11: 235, 12: 551}


def _nx(t: LabelledTree) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(t.n))
    g.add_edges_from(t.edges)
    return g


@pytest.mark.parametrize("n", sorted(COUNTS))
def test_enumeration_counts(n):
    codes = enumerate_trees(n)
    assert len(codes) == COUNTS[n]
    assert len(set(codes)) == len(codes)
    assert codes == sorted(codes)


@pytest.mark.parametrize("n", range(2, 8))
def test_fast_oracle_matches_slow_oracle(n):
    assert prufer_oracle(n) == prufer_oracle_slow(n)


def test_enumeration_against_networkx():
    for n in range(2, 11):
        ours = enumerate_trees(n)
        theirs = {canonical_code(LabelledTree(n, tuple(g.edges))) for g in nx.nonisomorphic_trees(n)}
        assert set(ours) == theirs


@given(labelled_trees(), st.data())
def test_code_is_relabelling_invariant(t, data):
    perm = data.draw(st.permutations(range(t.n)))
    assert canonical_code(t.relabel(perm)) == canonical_code(t)


@given(labelled_trees(max_n=8), labelled_trees(max_n=8))
def test_code_equality_iff_isomorphic(a, b):
    same = a.n == b.n and nx.is_isomorphic(_nx(a), _nx(b))
    assert (canonical_code(a) == canonical_code(b)) == same


@given(labelled_trees(max_n=12))
def test_decode_round_trip(t):
    code = canonical_code(t)
    assert canonical_code(decode(code)) == code
    assert TreeCode.parse(str(code)) == code
    assert TreeCode.parse(str(code.to_json())) == code


@given(labelled_trees(min_n=2))
def test_centers_minimise_eccentricity(t):
    ecc = [max(t.distances_from(v)) for v in range(t.n)]
    assert centers(t) == [v for v in range(t.n) if ecc[v] == min(ecc)]


def test_named_codes():
    assert str(canonical_code(path_tree(6))) == "0,1,2,3,1,2"
    assert str(canonical_code(star_tree(6))) == "0,1,1,1,1,1"
    assert str(canonical_code(LabelledTree(1, ()))) == "0"


@pytest.mark.parametrize(
    "n, edges",
    [
        (3, ((0, 1),)),
        (3, ((0, 1), (0, 1))),
        (3, ((0, 1), (1, 1))),
        (4, ((0, 1), (1, 2), (2, 0))),
        (3, ((0, 1), (1, 5))),
        (0, ()),
    ],
)
def test_invalid_trees_rejected(n, edges):
    with pytest.raises(TreeError):
        LabelledTree(n, edges)


def test_bad_codes_rejected():
    with pytest.raises(TreeError):
        TreeCode.parse("0,a")
    with pytest.raises(TreeError):
        decode((0, 2, 1))
    with pytest.raises(TreeError):
        enumerate_trees(0)


@given(labelled_trees(min_n=3))
def test_delete_leaf(t):
    leaf = t.leaves()[0]
    d = delete_leaf(t, leaf)
    assert d.tree.n == t.n - 1
    assert d.neighbor == d.old_to_new[t.adjacency[leaf][0]]


def test_induced_subtree_relabels_first_to_zero():
    t = path_tree(5)
    sub, index = induced_subtree(t, [2, 3, 4], 3)
    assert index[3] == 0 and sub.n == 3
    assert sub.degree(0) == 2
