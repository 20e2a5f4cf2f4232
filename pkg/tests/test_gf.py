from itertools import product
from math import gcd

import pytest
from hypothesis import given, strategies as st

from extballs.errors import (
    DivisionByZero,
    DlogOfZero,
    NotPrime,
    NotPrimePower,
    PolynomialNotIrreducible,
    PolynomialNotPrimitive,
)
from extballs.gf import field_of_order, load_field_config, make_field, parse_field, parse_poly

ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def gf2_mulmod(a, b, mod):
    """Carry-less product of bit-packed GF(2)[x] polynomials, reduced by ``mod``."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> (mod.bit_length() - 1):
            a ^= mod
    return r


def test_gf8_table_against_polynomial_reduction():
    f = make_field(2, 3, "x^3+x+1")
    mod = 0b1011
    x = 0b10
    acc = 1
    for k in range(7):
        assert f.antilog(k) == acc
        acc = gf2_mulmod(acc, x, mod)
    xi = f.xi
    assert f.power(xi, 3) == f.add(xi, 1)


def test_gf8_multiplication_matches_reduction_oracle():
    f = field_of_order(8)
    for a, b in product(range(8), repeat=2):
        assert f.mul(a, b) == gf2_mulmod(a, b, 0b1011)


def test_prime_field_generators_by_direct_powering():
    for p, g in [(2, 1), (3, 2), (5, 2), (7, 3), (11, 2), (13, 2)]:
        f = field_of_order(p)
        assert f.xi == g
        assert sorted(pow(g, k, p) for k in range(p - 1)) == list(range(1, p))


def test_prime_field_matches_integer_arithmetic():
    for p in (5, 7, 11):
        f = field_of_order(p)
        for a, b in product(range(p), repeat=2):
            assert f.add(a, b) == (a + b) % p
            assert f.mul(a, b) == (a * b) % p


def test_default_polynomials():
    assert field_of_order(4).prim_poly == (1, 1, 1)
    assert field_of_order(8).prim_poly == (1, 1, 0, 1)
    assert field_of_order(9).prim_poly == (2, 1, 1)


def test_small_examples():
    f5 = field_of_order(5)
    assert f5.mul(2, 3) == 1
    assert f5.dlog(4) == 2
    f8 = field_of_order(8)
    xi = f8.xi
    for a in range(1, 7):
        assert f8.inv(f8.power(xi, a)) == f8.power(xi, 7 - a)
    assert f8.dlog(f8.mul(f8.power(xi, 3), f8.power(xi, 6))) == 2
    f9 = field_of_order(9)
    assert all(f9.add(x, f9.neg(x)) == 0 for x in f9.elements())


def test_gf2_is_trivial():
    f = field_of_order(2)
    assert f.xi == 1
    assert f.primitive_elements() == [1]
    assert f.dlog(1) == 0


@pytest.mark.parametrize("q", ORDERS)
def test_primitive_elements_have_full_order(q):
    f = field_of_order(q)
    prims = f.primitive_elements()
    phi = sum(1 for k in range(1, q) if gcd(k, q - 1) == 1)
    assert len(prims) == phi
    for g in prims:
        seen = set()
        x = 1
        for _ in range(q - 1):
            x = f.mul(x, g)
            seen.add(x)
        assert len(seen) == q - 1


def test_primitive_elements_small():
    assert field_of_order(5).primitive_elements() == [2, 3]
    f4 = field_of_order(4)
    assert f4.primitive_elements() == sorted([f4.xi, f4.power(f4.xi, 2)])


@pytest.mark.parametrize("q", ORDERS)
def test_log_antilog_is_isomorphism(q):
    f = field_of_order(q)
    assert sorted(f.antilog_table) == list(range(1, q))
    for a in range(q - 1):
        for b in range(q - 1):
            assert f.mul(f.antilog(a), f.antilog(b)) == f.antilog((a + b) % (q - 1))
    for x in f.nonzero():
        assert f.antilog(f.dlog(x)) == x


@given(st.sampled_from(ORDERS), st.data())
def test_field_axioms_random(q, data):
    f = field_of_order(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, b) == f.mul(b, a)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.sub(f.add(a, b), b) == a
    if b:
        assert f.mul(f.div(a, b), b) == a


def test_errors():
    f = field_of_order(5)
    with pytest.raises(DivisionByZero):
        f.inv(0)
    with pytest.raises(ZeroDivisionError):
        f.div(1, 0)
    with pytest.raises(DlogOfZero):
        f.dlog(0)
    with pytest.raises(NotPrime):
        make_field(6)
    with pytest.raises(NotPrimePower):
        field_of_order(12)
    with pytest.raises(PolynomialNotIrreducible):
        make_field(2, 2, "x^2+1")
    # x^4+x^3+x^2+x+1 is irreducible over GF(2) but x has order 5
    with pytest.raises(PolynomialNotPrimitive):
        make_field(2, 4, "x^4+x^3+x^2+x+1")


def test_explicit_polynomial_changes_representation():
    f = make_field(2, 3, "x^3+x^2+1")
    assert f.power(f.xi, 3) == f.add(f.power(f.xi, 2), 1)
    assert f != field_of_order(8)


def test_parsing_and_config(tmp_path):
    assert parse_poly("x^3+x+1", 2) == (1, 1, 0, 1)
    assert parse_poly("1,1,0,1", 2) == (1, 1, 0, 1)
    f = field_of_order(8)
    assert f.parse("x^3") == f.power(f.xi, 3)
    assert f.parse("0") == 0
    cfg = tmp_path / "fields.cfg"
    cfg.write_text("# GF(8) alternative\n8 = x^3+x^2+1\n")
    over = load_field_config(cfg)
    assert parse_field("8", over).prim_poly == (1, 0, 1, 1)
    assert parse_field("8:x^3+x+1", over).prim_poly == (1, 1, 0, 1)
