"""Shared fixtures and independent oracle implementations.

Everything here recomputes library claims by a deliberately different
route: schoolbook arithmetic on plain ints, quadratic-time character
sums, brute-force searches over small parameter spaces.  Frozen
expected values in the test modules were produced by these oracles.
"""

import numpy as np
from hypothesis import settings

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")


def oracle_mul(x, y, modulus, degree):
    """Schoolbook GF(2^degree) product: shift-add, reducing after every
    doubling step instead of one long division at the end."""
    acc = 0
    while y:
        if y & 1:
            acc ^= x
        y >>= 1
        x <<= 1
        if x >> degree:
            x ^= modulus
    return acc


def oracle_pow(x, e, modulus, degree):
    if e == 0:
        return 1
    acc = 1
    base = x
    while e:
        if e & 1:
            acc = oracle_mul(acc, base, modulus, degree)
        base = oracle_mul(base, base, modulus, degree)
        e >>= 1
    return acc


def oracle_trace(x, modulus, degree):
    acc = 0
    y = x
    for _ in range(degree):
        acc ^= y
        y = oracle_mul(y, y, modulus, degree)
    return acc


def oracle_irreducible(modulus, degree):
    """Irreducibility over GF(2) via sympy, entirely separate from the
    library's trial-division test."""
    from sympy import GF as SF, Poly, Symbol
    x = Symbol("x")
    coeffs = [(modulus >> i) & 1 for i in range(degree, -1, -1)]
    return Poly(coeffs, x, domain=SF(2)).is_irreducible


def oracle_walsh_plain(values):
    """Quadratic-time character sum with the bit-parity pairing."""
    n = len(values).bit_length() - 1
    out = []
    for w in range(1 << n):
        acc = 0
        for x in range(1 << n):
            sign = int(values[x]) ^ bin(w & x).count("1") % 2
            acc += 1 - 2 * sign
        out.append(acc)
    return out


def oracle_walsh_field(values, field):
    """Quadratic-time character sum with the field trace pairing."""
    n = field.degree
    out = []
    for w in range(1 << n):
        acc = 0
        for x in range(1 << n):
            sign = int(values[x]) ^ field.trace_bits(field.mul_bits(w, x))
            acc += 1 - 2 * sign
        out.append(acc)
    return out


def oracle_anf(values):
    """ANF coefficients by direct subset sums (submask enumeration)."""
    size = len(values)
    out = []
    for mono in range(size):
        acc = 0
        sub = mono
        while True:
            acc ^= int(values[sub])
            if sub == 0:
                break
            sub = (sub - 1) & mono
        out.append(acc)
    return out


def oracle_degree(values):
    anf = oracle_anf(values)
    degs = [bin(i).count("1") for i, c in enumerate(anf) if c]
    return max(degs, default=0)


def oracle_extract(tt, field, u_bits, v_bits, small, emb):
    """Brute-force recovery of the slope map: for every z try every
    candidate value until the whole line x -> f(x(u + vz)) matches the
    small-field trace form.  Returns (h entries, mu bits) or None."""
    m = small.degree
    lift = [emb(small.el(x)).bits for x in range(1 << m)]

    def matches(point_of, cand):
        return all(
            int(tt.values[point_of(x)])
            == small.trace_bits(small.mul_bits(x, cand))
            for x in range(1 << m))

    mu = None
    for cand in range(1 << m):
        if matches(lambda y: field.mul_bits(v_bits, lift[y]), cand):
            mu = cand
            break
    if mu is None:
        return None
    entries = []
    for z in range(1 << m):
        line = u_bits ^ field.mul_bits(v_bits, lift[z])
        got = None
        for cand in range(1 << m):
            if matches(lambda x: field.mul_bits(lift[x], line), cand):
                got = cand
                break
        if got is None:
            return None
        entries.append(got)
    return entries, mu


def oracle_is_opoly(entries, field):
    """Direct definition: z -> G(z) + beta*z hits every value 0 or 2
    times, for every beta != 0."""
    size = 1 << field.degree
    for beta in range(1, size):
        seen = {}
        for z in range(size):
            v = entries[z] ^ field.mul_bits(beta, z)
            seen[v] = seen.get(v, 0) + 1
        if any(c != 2 for c in seen.values()):
            return False
    return True


def random_table(rng, n):
    from nihobent.boolfn import TruthTable
    vals = np.array([rng.randrange(2) for _ in range(1 << n)],
                    dtype=np.uint8)
    return TruthTable(n, vals)
