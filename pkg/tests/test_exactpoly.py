from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from gtsq.exactpoly import (
    ONE,
    Q,
    X,
    BiPoly,
    aux_poly,
    bareiss_det,
    charpoly,
    charpoly_interpolated,
    difference_factorization_check,
    join,
    join_identity_check,
    squarefree_factors,
    upoly_divmod,
    upoly_gcd,
)
from gtsq.gts import cover_instances
from gtsq.trees import LabelledTree, path_tree
from strategies import labelled_trees

qs, xs = sp.symbols("q x")

small_ints = st.integers(-20, 20)
bipolys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), small_ints, max_size=6).map(BiPoly)


def _to_sympy(p: BiPoly):
    return sum(c * qs**i * xs**j for (i, j), c in p)


def _sympy_charpoly(t: LabelledTree, deleted=()):
    keep = [v for v in range(t.n) if v not in set(deleted)]
    m = sp.zeros(len(keep), len(keep))
    for a, v in enumerate(keep):
        m[a, a] = xs - 1 - qs**2 * (t.degree(v) - 1)
    idx = {v: a for a, v in enumerate(keep)}
    for u, v in t.edges:
        if u in idx and v in idx:
            m[idx[u], idx[v]] = m[idx[v], idx[u]] = qs
    return sp.expand(m.det(method="berkowitz"))


@given(bipolys, bipolys, bipolys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == BiPoly()
    assert a * ONE == a


@given(bipolys, bipolys)
def test_multiplication_matches_sympy(a, b):
    assert sp.expand(_to_sympy(a * b) - _to_sympy(a) * _to_sympy(b)) == 0


@given(bipolys, st.integers(-3, 3), st.integers(-3, 3))
def test_eval_is_a_homomorphism(a, qv, xv):
    b = a * a + Q
    assert b.eval(qv, xv) == a.eval(qv, xv) ** 2 + qv


@given(bipolys)
def test_json_round_trip(a):
    assert BiPoly.from_json(a.to_json()) == a
    assert hash(BiPoly.from_json(a.to_json())) == hash(a)


@given(labelled_trees(max_n=7))
def test_charpoly_matches_sympy(t):
    assert sp.expand(_to_sympy(charpoly(t)) - _sympy_charpoly(t)) == 0


@given(labelled_trees(min_n=2, max_n=7), st.data())
def test_deleted_charpoly_matches_interpolation(t, data):
    gone = data.draw(st.sets(st.integers(0, t.n - 1), max_size=t.n - 1))
    assert charpoly(t, gone) == charpoly_interpolated(t, gone)


@given(labelled_trees(max_n=8))
def test_charpoly_is_relabelling_invariant(t):
    perm = list(range(t.n))[::-1]
    assert charpoly(t.relabel(perm)) == charpoly(t)


def test_named_charpolys():
    assert str(charpoly(path_tree(2))) == "x^2 - 2*x - q^2 + 1"
    assert str(charpoly(LabelledTree(1, ()))) == "x + q^2 - 1"
    assert charpoly(path_tree(3), (1,)) == (X - ONE) ** 2


def test_bareiss_on_a_small_matrix():
    m = [[X, Q], [Q, X]]
    assert bareiss_det(m) == X * X - Q * Q
    assert bareiss_det([]) == ONE


@given(labelled_trees(min_n=2, max_n=8))
def test_aux_poly_shape(t):
    for v in range(t.n):
        f = aux_poly(t, v)
        assert f.degree_x() == t.n - 1
        assert f.coeff_x(t.n - 1) == BiPoly.const(-t.degree(v)) * Q * Q
        assert f.coeff_x(0).is_zero()


def test_aux_poly_of_path_endpoint():
    # an independent factorisation of the endpoint auxiliary polynomial of P_4
    f = sp.factor(_to_sympy(aux_poly(path_tree(4), 0)))
    want = -(qs**2) * xs * (xs - 1 - qs - qs**2) * (xs - 1 + qs - qs**2)
    assert sp.expand(f - want) == 0


@given(labelled_trees(max_n=5), labelled_trees(max_n=5), st.data())
def test_join_identity(q1, q2, data):
    v1 = data.draw(st.integers(0, q1.n - 1))
    v2 = data.draw(st.integers(0, q2.n - 1))
    t, mapping = join(q1, v1, q2, v2)
    assert t.n == q1.n + q2.n - 1 and mapping[v2] == v1
    assert join_identity_check(q1, v1, q2, v2)


@pytest.mark.parametrize("n", range(4, 8))
def test_difference_factorisation(n):
    for t, s in cover_instances(n):
        assert difference_factorization_check(t, s)


def test_delete_everything_rejected():
    with pytest.raises(ValueError):
        charpoly(path_tree(2), (0, 1))
    with pytest.raises(ValueError):
        charpoly(path_tree(2), (5,))


@given(st.lists(st.integers(-4, 4), min_size=1, max_size=4), st.lists(st.integers(1, 3), min_size=1, max_size=4))
def test_squarefree_factors_recompose(roots, mults):
    pairs = list(zip(dict.fromkeys(roots), mults))
    poly = sp.Poly(sp.prod((xs - r) ** m for r, m in pairs), xs)
    coeffs = [Fraction(int(c)) for c in reversed(poly.all_coeffs())]
    factors = squarefree_factors(coeffs)
    got = sp.prod(sp.Poly(list(reversed([sp.Rational(c.numerator, c.denominator) for c in f])), xs).as_expr() ** k
                  for f, k in factors)
    assert sp.simplify(got / poly.as_expr()).is_constant()
    for f, _ in factors:
        fp = sp.Poly(list(reversed([sp.Rational(c.numerator, c.denominator) for c in f])), xs)
        assert sp.gcd(fp, fp.diff(xs)).degree() == 0


def test_upoly_division():
    a = [Fraction(c) for c in (-1, 0, 1)]
    b = [Fraction(c) for c in (-1, 1)]
    quo, rem = upoly_divmod(a, b)
    assert quo == [1, 1] and not any(rem)
    assert upoly_gcd(a, b) == [-1, 1]

