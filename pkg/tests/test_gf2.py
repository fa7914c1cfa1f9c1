"""Field arithmetic, embeddings and the unit circle."""

import pytest
from hypothesis import given, strategies as st

from conftest import oracle_irreducible, oracle_mul, oracle_pow, oracle_trace
from nihobent import (GF, Embedding, FieldMismatchError, default_modulus,
                      embed_subfield, unit_circle, unit_circle_element)

GF8 = GF(3, 0xB)
GF16 = GF(4)


def test_frozen_gf8_examples():
    assert (GF8.el(0x3) + GF8.el(0x5)).bits == 0x6
    assert (GF8.el(0x2) * GF8.el(0x2)).bits == 0x4
    assert (GF8.el(0x4) * GF8.el(0x2)).bits == 0x3
    assert GF8.el(0x2).inv().bits == 0x5
    assert (GF8.el(0x2) ** 7).bits == 0x1
    assert GF8.el(0x2).sqrt().bits == 0x6


def test_default_modulus_frozen():
    assert default_modulus(1) == 0x3
    assert default_modulus(3) == 0xB
    assert default_modulus(4) == 0x13
    assert default_modulus(8) == 0x11B


@pytest.mark.parametrize("k", range(1, 13))
def test_default_modulus_is_irreducible_and_minimal(k):
    mod = default_modulus(k)
    assert mod >> k == 1 and mod & 1
    assert oracle_irreducible(mod, k)
    for cand in range((1 << k) + 1, mod, 2):
        assert not oracle_irreducible(cand, k)


def test_pow_conventions():
    z = GF16.zero
    assert (z ** 0).bits == 1
    assert (z ** 3).bits == 0
    with pytest.raises(ZeroDivisionError):
        z ** -1
    with pytest.raises(ZeroDivisionError):
        z.inv()
    g = GF16.gen
    assert (g ** 15).bits == 1
    assert g ** -2 == (g ** 2).inv()


@given(st.integers(1, 10), st.data())
def test_mul_matches_oracle(k, data):
    F = GF(k)
    x = data.draw(st.integers(0, (1 << k) - 1))
    y = data.draw(st.integers(0, (1 << k) - 1))
    assert F.mul_bits(x, y) == oracle_mul(x, y, F.modulus, k)


@given(st.integers(1, 10), st.data())
def test_pow_and_trace_match_oracle(k, data):
    F = GF(k)
    x = data.draw(st.integers(0, (1 << k) - 1))
    e = data.draw(st.integers(1, 3 * (1 << k)))
    assert F.pow_bits(x, e) == oracle_pow(x, e, F.modulus, k)
    assert F.trace_bits(x) == oracle_trace(x, F.modulus, k)


@given(st.integers(1, 10), st.data())
def test_ring_axioms(k, data):
    F = GF(k)
    draw = lambda: F.el(data.draw(st.integers(0, (1 << k) - 1)))
    x, y, z = draw(), draw(), draw()
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * F.one == x


@given(st.integers(1, 10), st.data())
def test_inverse_sqrt_frobenius(k, data):
    F = GF(k)
    x = F.el(data.draw(st.integers(1, (1 << k) - 1)))
    assert x * x.inv() == F.one
    assert x.sqrt() * x.sqrt() == x
    y = F.el(data.draw(st.integers(0, (1 << k) - 1)))
    assert (x + y).frob(1) == x.frob(1) + y.frob(1)
    assert x.frob(k) == x


@pytest.mark.parametrize("k", [1, 2, 3, 4, 6, 8])
def test_trace_balanced(k):
    F = GF(k)
    ones = sum(F.trace_bits(x) for x in range(1 << k))
    assert ones == 1 << (k - 1)


@pytest.mark.parametrize("k,r", [(4, 2), (6, 3), (6, 2), (8, 4)])
def test_relative_trace_lands_in_subfield(k, r):
    F = GF(k)
    sub = F.subfield_bits(r)
    for x in range(1 << k):
        t = F.rel_trace_bits(x, r)
        assert t in sub
    # transitivity with the absolute trace
    S = GF(r)
    emb = embed_subfield(S, F)
    for x in range(1 << k):
        small = emb.project(F.el(F.rel_trace_bits(x, r)))
        assert S.trace_bits(small.bits) == F.trace_bits(x)


def test_generator_has_full_order():
    for k in (1, 2, 3, 4, 6, 8, 11):
        F = GF(k)
        order = (1 << k) - 1
        seen = set()
        x = 1
        for _ in range(order):
            x = F.mul_bits(x, F.generator)
            seen.add(x)
        assert len(seen) == order and x == 1


def test_dual_basis_property():
    for k in (2, 3, 4, 6):
        F = GF(k)
        dual = F.dual_basis_bits()
        for i in range(k):
            for j in range(k):
                t = F.trace_bits(F.mul_bits(1 << i, dual[j]))
                assert t == (1 if i == j else 0)


def test_large_degree_fallback_path():
    # degree above the exp/log table limit exercises the shift-xor kernels
    F = GF(17)
    x, y = 0x1abcd, 0x0f0f1
    assert F.mul_bits(x, y) == oracle_mul(x, y, F.modulus, 17)
    assert F.mul_bits(F.inv_bits(x), x) == 1
    s = F.sqrt_bits(x)
    assert F.mul_bits(s, s) == x


def test_embedding_frozen_table():
    emb = embed_subfield(GF(2), GF16)
    assert [emb(GF(2).el(x)).bits for x in range(4)] == [0, 1, 0x6, 0x7]


def test_embedding_is_field_homomorphism():
    for small_k, big_k in ((2, 4), (3, 6), (2, 6), (4, 8)):
        S, B = GF(small_k), GF(big_k)
        emb = embed_subfield(S, B)
        for xb in range(1 << small_k):
            for yb in range(1 << small_k):
                x, y = S.el(xb), S.el(yb)
                assert emb(x + y) == emb(x) + emb(y)
                assert emb(x * y) == emb(x) * emb(y)
                assert emb.project(emb(x)) == x
        assert emb.contains(emb(S.gen))
        assert not emb.contains(B.gen) or big_k == small_k


def test_embedding_rejects_bad_degrees():
    with pytest.raises(ValueError):
        embed_subfield(GF(3), GF(4))


def test_unit_circle_frozen_m2():
    circ = unit_circle(GF16)
    assert sorted(c.bits for c in circ) == [0x1, 0x8, 0xA, 0xC, 0xF]


@pytest.mark.parametrize("m", [2, 3, 4])
def test_unit_circle_properties(m):
    F = GF(2 * m)
    circ = unit_circle(F)
    assert len(circ) == (1 << m) + 1
    for c in circ:
        assert (c ** ((1 << m) + 1)).bits == 1


def test_unit_circle_element_selectors():
    # m = 2: fifth roots exist, cube roots do not
    u = unit_circle_element(GF16, "fifth:1")
    assert u.bits == 0x8
    assert (u ** 5).bits == 1
    with pytest.raises(ValueError):
        unit_circle_element(GF16, "cube")
    # m = 3: cube roots exist, fifth roots do not
    F64 = GF(6)
    c = unit_circle_element(F64, "cube")
    assert (c ** 3).bits == 1 and c.bits != 1
    with pytest.raises(ValueError):
        unit_circle_element(F64, "fifth:1")
    g = unit_circle_element(F64, "general:2")
    assert (g ** ((1 << 3) + 1)).bits == 1
    with pytest.raises(ValueError):
        unit_circle_element(GF16, "nonsense")


def test_field_mismatch_raises():
    with pytest.raises(FieldMismatchError):
        GF8.el(1) + GF16.el(1)
    with pytest.raises(FieldMismatchError):
        GF(3, 0xB).el(2) * GF(3, 0xD).el(2)


def test_int_coercion_and_hex_str():
    x = GF16.el(0xA)
    assert x + 0x3 == GF16.el(0x9)
    assert x == 0xA
    assert str(x) == "0xa"


def test_gf_cache_and_eq():
    assert GF(4) is GF(4, 0x13)
    assert GF(4) == GF(4, 0x13)
    assert GF(3, 0xB) != GF(3, 0xD)
