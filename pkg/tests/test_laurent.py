from hypothesis import given, strategies as st

from affwgraph.laurent import ONE, Q, V, ZERO, LaurentPoly, lp_add, lp_monomial, lp_mul

polys = st.builds(
    LaurentPoly,
    st.dictionaries(st.integers(-6, 6), st.integers(-9, 9), max_size=5),
)


def test_monomial_examples():
    assert lp_monomial(1, 2) == Q
    assert lp_monomial(0, 5) == ZERO
    assert lp_monomial(0, 5).coeffs == {}
    assert lp_monomial(-1, 0) == lp_monomial(-1, 0)
    assert str(lp_monomial(-1, 0)) == "-1"


def test_add_examples():
    assert lp_add(Q, lp_monomial(-1, 2)) == ZERO
    assert lp_add(V, V) == lp_monomial(2, 1)
    assert lp_add(Q + ONE, lp_monomial(-1, 0)) == Q


def test_mul_examples():
    assert lp_mul(V, V) == Q
    assert lp_mul(Q - ONE, Q + ONE) == Q * Q - ONE
    assert lp_mul(Q + V - ONE, ZERO) == ZERO


def test_rendering():
    assert str(ZERO) == "0"
    assert str(Q + V.scale(2) - ONE) == "v^2 + 2*v - 1"
    assert str(lp_monomial(-3, -2)) == "-3*v^-2"
    assert (Q + V).to_dict() == {"1": 1, "2": 1}


def test_scale_and_shift():
    assert Q.scale(0) == ZERO
    assert Q.scale(-2) == lp_monomial(-2, 2)
    assert Q.shift(-2) == ONE


@given(polys, polys)
def test_add_commutes(a, b):
    assert a + b == b + a


@given(polys, polys, polys)
def test_add_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(polys, polys)
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(polys, polys, polys)
def test_mul_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(polys, polys, polys)
def test_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(polys)
def test_identities(a):
    assert a + ZERO == a
    assert a * ONE == a
    assert a * ZERO == ZERO
    assert a - a == ZERO


@given(polys, polys)
def test_canonical_form(a, b):
    for result in (a + b, a * b, a - b, -a):
        assert all(c != 0 for c in result.coeffs.values())
