"""GF(2^m) arithmetic against naive polynomial oracles and field axioms."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from kakeyagf.field import Field, is_irreducible, make_field, poly_mod, smallest_irreducible

from helpers_naive import naive_is_irreducible, naive_mul, naive_quad_roots, naive_smallest_irreducible


def test_smallest_irreducible_frozen():
    # x^2+x+1 is the unique irreducible quadratic; the rest were derived by
    # exhaustively scanning all factor pairs (see naive oracle below)
    assert smallest_irreducible(2) == 0b111
    assert smallest_irreducible(3) == 0b1011
    assert smallest_irreducible(4) == 0b10011


@pytest.mark.parametrize("m", range(1, 7))
def test_smallest_irreducible_matches_oracle(m):
    assert smallest_irreducible(m) == naive_smallest_irreducible(m)


@pytest.mark.parametrize("m", range(2, 7))
def test_is_irreducible_matches_oracle(m):
    for p in range(1 << m, 1 << (m + 1)):
        assert is_irreducible(p) == naive_is_irreducible(p), f"{p:b}"


def test_make_field_validation():
    with pytest.raises(ValueError):
        make_field(0)
    with pytest.raises(ValueError):
        make_field(21)
    with pytest.raises(ValueError):
        Field(4, modulus=0b10101)  # (x^2+x+1)^2
    with pytest.raises(ValueError):
        Field(4, modulus=0b1011)  # degree 3, not 4
    with pytest.raises(ValueError):
        Field(4, modulus=0b10010)  # zero constant term


def test_make_field_override_accepted():
    f = make_field(4, modulus=0b11001)  # x^4+x^3+1
    assert f.q == 16
    assert f.mul(1, 9) == 9


def test_mul_frozen_examples():
    assert make_field(2).mul(2, 2) == 3  # x*x = x+1 mod x^2+x+1
    assert make_field(3).mul(2, 4) == 3  # x*x^2 = x+1 mod x^3+x+1
    f = make_field(3)
    assert all(f.mul(1, a) == a for a in f.elements())


@pytest.mark.parametrize("m", range(1, 7))
def test_mul_matches_naive(m):
    f = make_field(m)
    for a in f.elements():
        for b in f.elements():
            assert f.mul(a, b) == naive_mul(f.modulus, a, b)


def test_pow_frozen_examples():
    f4, f8 = make_field(2), make_field(3)
    assert f4.pow(2, 3) == 1
    assert f8.pow(2, 7) == 1
    assert f4.pow(0, 0) == 1
    assert f8.pow(5, 1) == 5
    with pytest.raises(ValueError):
        f4.pow(2, -1)


def test_inv():
    f4 = make_field(2)
    assert f4.inv(1) == 1
    assert f4.inv(2) == 3  # w * w^2 = w^3 = 1
    with pytest.raises(ZeroDivisionError):
        f4.inv(0)


@pytest.mark.parametrize("m", range(1, 9))
def test_inv_roundtrip_exhaustive(m):
    f = make_field(m)
    for a in range(1, f.q):
        assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("m", range(1, 9))
def test_mul_commutative_all_pairs(m):
    f = make_field(m)
    x = np.arange(f.q, dtype=np.int64)
    prod = f.mul_arrays(x[:, None], x[None, :])
    assert np.array_equal(prod, prod.T)
    rng = np.random.default_rng(m)
    a, b, c = (rng.integers(0, f.q, size=10_000) for _ in range(3))
    assert np.array_equal(f.mul_arrays(f.mul_arrays(a, b), c),
                          f.mul_arrays(a, f.mul_arrays(b, c)))


@pytest.mark.parametrize("m", range(9, 13))
def test_mul_axioms_randomized(m):
    # 1e5 random triples: commutativity, associativity, inverse roundtrip
    f = make_field(m)
    rng = np.random.default_rng(m)
    a, b, c = (rng.integers(0, f.q, size=100_000) for _ in range(3))
    ab = f.mul_arrays(a, b)
    assert np.array_equal(ab, f.mul_arrays(b, a))
    assert np.array_equal(f.mul_arrays(ab, c), f.mul_arrays(a, f.mul_arrays(b, c)))
    nz = a[a != 0][:1000]
    inv = np.array([f.inv(int(v)) for v in nz], dtype=np.int64)
    assert np.all(f.mul_arrays(nz, inv) == 1)


def test_mul_arrays_matches_scalar():
    f = make_field(5)
    x = np.arange(f.q, dtype=np.int64)
    prod = f.mul_arrays(x[:, None], x[None, :])
    for a in f.elements():
        for b in f.elements():
            assert prod[a, b] == f.mul(a, b)


@pytest.mark.parametrize("m", [2, 4, 6])
def test_pow_all_matches_scalar(m):
    f = make_field(m)
    for e in (0, 1, 2, 3, (1 << (m // 2)) + 1, f.q - 2):
        assert np.array_equal(f.pow_all(e),
                              np.array([f.pow(x, e) for x in f.elements()]))


def test_trace_abs_frozen():
    f4 = make_field(2)
    assert [f4.trace_abs(a) for a in f4.elements()] == [0, 0, 1, 1]
    assert make_field(3).trace_abs(1) == 1
    assert make_field(5).trace_abs(0) == 0


@pytest.mark.parametrize("m", range(1, 14))
def test_trace_zero_count(m):
    f = make_field(m)
    tr = f.trace_table()
    assert int(np.count_nonzero(tr == 0)) == 1 << (m - 1)


def test_trace_rel_frozen():
    f4 = make_field(2)
    assert f4.trace_rel(0) == 0
    assert f4.trace_rel(2) == 1  # w^2 + w
    assert f4.trace_rel(1) == 0  # subfield element: 1 + 1
    with pytest.raises(ValueError):
        make_field(3).trace_rel(1)


@pytest.mark.parametrize("m", [2, 4, 6, 8, 10, 12])
def test_trace_rel_image_is_subfield(m):
    f = make_field(m)
    s = 1 << (m // 2)
    image = {f.trace_rel(a) for a in f.elements()}
    subfield = {u for u in f.elements() if f.pow(u, s) == u}
    assert image == subfield
    # subfield-linearity: trace_rel(u*a) = u*trace_rel(a) for subfield u
    for u in sorted(subfield)[:4]:
        for a in list(f.elements())[:: max(1, f.q // 16)]:
            assert f.trace_rel(f.mul(u, a)) == f.mul(u, f.trace_rel(a))


def test_quad_root_count_frozen():
    f8, f4 = make_field(3), make_field(2)
    assert f4.quad_root_count(0, 3) == 1
    assert f8.quad_root_count(1, 0) == 2  # roots {0, 1}
    assert f4.quad_root_count(1, 2) == 0  # Tr(w) = 1


@pytest.mark.parametrize("m", range(1, 9))
def test_quad_root_count_exhaustive(m):
    f = make_field(m)
    for z in f.elements():
        for c in f.elements():
            assert f.quad_root_count(z, c) == naive_quad_roots(f, z, c)


@given(st.integers(1, 10), st.data())
def test_field_axioms_property(m, data):
    f = make_field(m)
    elt = st.integers(0, f.q - 1)
    a, b, c = data.draw(elt), data.draw(elt), data.draw(elt)
    assert f.mul(a, b) == f.mul(b, a)
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
    if a:
        assert f.mul(a, f.inv(a)) == 1
    assert f.trace_abs(a ^ b) == f.trace_abs(a) ^ f.trace_abs(b)
