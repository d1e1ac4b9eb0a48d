import pytest
from hypothesis import given, settings, strategies as st

from clustermut.errors import ExactDivisionError
from clustermut.laurent import (
    LaurentValue,
    Polynomial,
    laurent_normalize,
    monomial_divides,
    monomial_gcd,
    pack_monomial,
    unpack_monomial,
)

RANK = 4

exps = st.tuples(*[st.integers(0, 12)] * RANK)
coeffs = st.integers(-50, 50).filter(lambda c: c != 0)


def poly_strategy(min_terms=0, max_terms=6):
    return st.dictionaries(exps, coeffs, min_size=min_terms, max_size=max_terms).map(
        lambda d: Polynomial.from_terms(RANK, d)
    )


polys = poly_strategy()
nonzero_polys = poly_strategy(min_terms=1)


@given(exps)
def test_pack_unpack_round_trip(e):
    assert unpack_monomial(pack_monomial(e), RANK) == e


@given(exps, exps)
def test_pack_order_is_graded(a, b):
    # the top field is total degree, so int order refines degree order
    if sum(a) > sum(b):
        assert pack_monomial(a) > pack_monomial(b)


@given(exps, exps)
def test_monomial_divides_matches_componentwise(a, b):
    ka, kb = pack_monomial(a), pack_monomial(b)
    assert monomial_divides(ka, kb, RANK) == all(x <= y for x, y in zip(a, b))


@given(st.lists(exps, min_size=1, max_size=5))
def test_monomial_gcd_divides_all(es):
    keys = [pack_monomial(e) for e in es]
    g = monomial_gcd(keys, RANK)
    assert all(monomial_divides(g, k, RANK) for k in keys)


@settings(max_examples=300)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys)
def test_additive_inverse(a):
    assert a - a == Polynomial.zero(RANK)
    assert a + Polynomial.zero(RANK) == a


@settings(max_examples=300)
@given(nonzero_polys, nonzero_polys)
def test_exact_div_inverts_mul(a, b):
    assert (a * b).exact_div(b) == a


@given(nonzero_polys)
def test_exact_div_rejects_remainder(a):
    p = a * Polynomial.from_terms(RANK, {(1, 0, 0, 0): 1}) + Polynomial.constant(RANK, 1)
    x1 = Polynomial.from_terms(RANK, {(1, 0, 0, 0): 1})
    with pytest.raises(ExactDivisionError):
        p.exact_div(x1)


@given(polys, st.integers(0, 4))
def test_pow_matches_repeated_mul(a, n):
    expected = Polynomial.constant(RANK, 1)
    for _ in range(n):
        expected = expected * a
    assert a**n == expected


@given(polys)
def test_terms_sorted_descending(a):
    keys = [pack_monomial(e) for e, _ in a.terms_sorted()]
    assert keys == sorted(keys, reverse=True)


@given(nonzero_polys, exps)
def test_normalize_strips_content(num, den):
    # multiply numerator and denominator by a common monomial: same value
    v = laurent_normalize(num, den)
    shifted = num.shift(pack_monomial((1, 2, 0, 1)))
    w = laurent_normalize(shifted, tuple(d + s for d, s in zip(den, (1, 2, 0, 1))))
    assert v == w
    # cancellation is complete: numerator content and denominator are coprime
    g = unpack_monomial(monomial_gcd(list(v.num.terms), RANK), RANK)
    assert all(min(a, b) == 0 for a, b in zip(g, v.den_exponents()))


@settings(max_examples=200)
@given(nonzero_polys, nonzero_polys, exps, exps)
def test_laurent_field_ops(na, nb, da, db):
    a = laurent_normalize(na, da)
    b = laurent_normalize(nb, db)
    assert (a * b) / b == a
    assert a + b == b + a
    s = (a + b) * b
    assert s == a * b + b * b


def test_variable_text():
    x2 = LaurentValue.variable(3, 1)
    assert x2.to_text() == "x2"
    assert LaurentValue.one(3).is_unit_denominator()
