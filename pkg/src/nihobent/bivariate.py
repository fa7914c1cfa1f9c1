"""Bivariate view of Boolean functions on GF(2^n) and the bridge to oval
polynomials (n = 2m).

Splitting GF(2^n) over a basis (u, v) of the GF(2^m)-vector space turns
f into g(x, y) = f(u x + v y).  When every restriction of g to a line
through the origin is GF(2)-linear, g is determined by a mapping
H: GF(2^m) -> GF(2^m) and a scalar mu via

    g(x, y) = tr(x H(y/x))   for x != 0,      g(0, y) = tr(mu y),

and G(z) = H(z) + mu z is the object of interest: f is bent exactly when
z -> G(z) + beta z is 2-to-1 for every beta != 0, which makes G an oval
polynomial (o-polynomial) of the projective plane PG(2, 2^m).

extract_h_mu recovers H and mu from a bivariate table by solving for each
line with the trace-dual basis, then verifying the linear form on every
point, so a successful return is a proof that the table is in the class
described above.

closed_form_g evaluates, for the s=3 binomial family, the algebraic
expression of G obtained by expanding (u + v z)^d directly; comparing it
against the extracted G validates that whole expansion pointwise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .boolfn import TruthTable
from .gf2 import Embedding, FieldElement, FieldSpec

__all__ = [
    "NotClassHError",
    "InternalCheckError",
    "BasisPair",
    "MappingTable",
    "BivariateTable",
    "to_bivariate",
    "extract_h_mu",
    "g_from_h",
    "is_permutation",
    "is_two_to_one",
    "is_opolynomial",
    "opoly_normalize",
    "closed_form_g",
    "closed_form_g_circle",
    "verify_trace_identities",
]


class NotClassHError(ValueError):
    """Some line restriction is not GF(2)-linear; .z is the slope of the
    offending line (small-field bitmask), or None for the x = 0 line."""

    def __init__(self, z: int | None, message: str):
        super().__init__(message)
        self.z = z


class InternalCheckError(RuntimeError):
    """A relation that is supposed to hold unconditionally failed."""


@dataclass(frozen=True)
class BasisPair:
    """u, v spanning GF(2^n) over the half-degree subfield.

    Independence is equivalent to u/v falling outside GF(2^m), which is
    what the constructor checks.
    """
    u: FieldElement
    v: FieldElement

    def __post_init__(self):
        u, v = self.u, self.v
        if u.field != v.field:
            raise ValueError("basis elements from different fields")
        n = u.field.degree
        if n % 2:
            raise ValueError("basis needs even degree n = 2m")
        if not u.bits or not v.bits:
            raise ValueError("basis elements must be nonzero")
        if (u / v).in_subfield(n // 2):
            raise ValueError(
                f"u = 0x{u.bits:x}, v = 0x{v.bits:x} are dependent over "
                f"GF(2^{n // 2})")

    @property
    def field(self) -> FieldSpec:
        return self.u.field


class MappingTable:
    """A function GF(2^m) -> GF(2^m) tabulated by bitmask."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries):
        entries = tuple(int(e) for e in entries)
        if len(entries) != field.order:
            raise ValueError(f"need {field.order} entries, "
                             f"got {len(entries)}")
        if any(not 0 <= e < field.order for e in entries):
            raise ValueError("entry out of field range")
        self.field = field
        self.entries = entries

    @classmethod
    def from_function(cls, field: FieldSpec, fn) -> "MappingTable":
        return cls(field, [fn(field.el(z)).bits for z in range(field.order)])

    def apply(self, z) -> FieldElement:
        if isinstance(z, FieldElement):
            if z.field != self.field:
                raise ValueError("argument from the wrong field")
            z = z.bits
        return FieldElement(self.entries[z], self.field)

    def __eq__(self, other):
        if not isinstance(other, MappingTable):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def to_json(self) -> list:
        return [f"0x{e:x}" for e in self.entries]

    @classmethod
    def from_json(cls, field: FieldSpec, data) -> "MappingTable":
        return cls(field, [int(str(e), 16) for e in data])

    def __repr__(self):
        return (f"MappingTable(GF(2^{self.field.degree}), "
                f"{[hex(e) for e in self.entries[:4]]}...)")


class BivariateTable:
    """g(x, y) over GF(2^m) x GF(2^m), entries indexed by bitmasks."""

    __slots__ = ("field", "values")

    def __init__(self, field: FieldSpec, values):
        arr = np.asarray(values, dtype=np.uint8)
        q = field.order
        if arr.shape != (q, q):
            raise ValueError(f"need a {q}x{q} table, got {arr.shape}")
        if arr.max(initial=0) > 1:
            raise ValueError("entries must be 0 or 1")
        self.field = field
        self.values = arr

    def __getitem__(self, xy) -> int:
        x, y = xy
        return int(self.values[x, y])

    def weight(self) -> int:
        return int(self.values.sum())


def to_bivariate(tt: TruthTable, basis: BasisPair,
                 emb: Embedding) -> BivariateTable:
    """Table of (x, y) -> f(u emb(x) + v emb(y))."""
    big = basis.field
    if emb.big != big:
        raise ValueError("embedding targets a different field")
    if tt.n != big.degree:
        raise ValueError("truth table size does not match the field")
    if emb.small.degree * 2 != big.degree:
        raise ValueError("embedding must come from the half-degree field")
    small = emb.small
    q = small.order
    mul = big.mul_bits
    ub, vb = basis.u.bits, basis.v.bits
    tab = emb.table
    vals = np.empty((q, q), dtype=np.uint8)
    fvals = tt.values
    for x in range(q):
        ux = mul(ub, tab[x])
        for y in range(q):
            vals[x, y] = fvals[ux ^ mul(vb, tab[y])]
    return BivariateTable(small, vals)


def extract_h_mu(biv: BivariateTable) -> tuple[MappingTable, FieldElement]:
    """Recover (H, mu) from the line restrictions, verifying exhaustively
    that each restriction really is linear."""
    small = biv.field
    m = small.degree
    q = small.order
    vals = biv.values
    dual = small.dual_basis_bits()
    mul = small.mul_bits
    tr = small.trace_bits

    mu_bits = 0
    for j in range(m):
        if vals[0, 1 << j]:
            mu_bits ^= dual[j]
    for y in range(q):
        if vals[0, y] != tr(mul(mu_bits, y)):
            raise NotClassHError(
                None, "the x = 0 restriction is not linear")

    entries = []
    for z in range(q):
        h_bits = 0
        for j in range(m):
            if vals[1 << j, mul(1 << j, z)]:
                h_bits ^= dual[j]
        for x in range(q):
            if vals[x, mul(x, z)] != tr(mul(h_bits, x)):
                raise NotClassHError(
                    z, f"the slope-0x{z:x} restriction is not linear")
        entries.append(h_bits)
    return MappingTable(small, entries), FieldElement(mu_bits, small)


def g_from_h(h: MappingTable, mu: FieldElement) -> MappingTable:
    """G(z) = H(z) + mu z."""
    if mu.field != h.field:
        raise ValueError("mu from the wrong field")
    mul = h.field.mul_bits
    return MappingTable(h.field,
                        [e ^ mul(mu.bits, z)
                         for z, e in enumerate(h.entries)])


def is_permutation(t: MappingTable) -> bool:
    return len(set(t.entries)) == t.field.order


def is_two_to_one(t: MappingTable) -> bool:
    """Every fiber has size exactly 0 or 2."""
    return all(c == 2 for c in Counter(t.entries).values())


def is_opolynomial(g: MappingTable) -> bool:
    """Whether z -> G(z) + beta z is 2-to-1 for every beta != 0.  That
    property forces G itself to be a permutation, which is re-checked
    here as a guard."""
    field = g.field
    mul = field.mul_bits
    entries = g.entries
    for beta in range(1, field.order):
        counts = Counter(e ^ mul(beta, z) for z, e in enumerate(entries))
        if any(c != 2 for c in counts.values()):
            return False
    if not is_permutation(g):
        raise InternalCheckError(
            "2-to-1 condition held for every beta but the map is not a "
            "permutation")
    return True


def opoly_normalize(g: MappingTable) -> MappingTable:
    """Affine renormalization (G(z) + G(0)) / (G(1) + G(0)), fixing
    G(0) = 0 and G(1) = 1; preserves the o-polynomial property."""
    g0, g1 = g.entries[0], g.entries[1]
    if g0 == g1:
        raise ValueError("cannot normalize: G(0) = G(1)")
    field = g.field
    scale = field.inv_bits(g0 ^ g1)
    return MappingTable(field,
                        [field.mul_bits(e ^ g0, scale) for e in g.entries])


def _project_entry(emb: Embedding, val: FieldElement) -> int:
    if not val.in_subfield(emb.small.degree):
        raise InternalCheckError(
            f"closed form produced 0x{val.bits:x} outside the subfield")
    return emb.project(val).bits


def closed_form_g(b: FieldElement, basis: BasisPair, emb: Embedding,
                  a: FieldElement | None = None) -> MappingTable:
    """G for the s=3 binomial family over an arbitrary basis (u, v),
    evaluated from the expanded algebraic expression:

        G(z) = c + (a T z)^(1/2) + tr(K (u + v z)^(2^m - 2)),
        T = tr(u^(2^m) v),
        K = b u^2 (u^(2(2^m-1)) + v^(2(2^m-1))),
        c = (a u^(2^m+1))^(1/2) + tr(b u^(2^m) v^(2(2^m-1))),

    with tr the relative trace onto GF(2^m)."""
    big = b.field
    if basis.field != big or emb.big != big:
        raise ValueError("b, basis and embedding must share a field")
    n = big.degree
    if n % 2 or emb.small.degree != n // 2:
        raise ValueError("need n = 2m and the half-degree embedding")
    m = n // 2
    if b.bits == 0:
        raise ValueError("b must be nonzero")
    a_expected = b ** ((1 << m) + 1)
    if a is None:
        a = a_expected
    elif a != a_expected:
        raise ValueError(
            f"a must equal b^(2^m+1) = 0x{a_expected.bits:x}")
    u, v = basis.u, basis.v
    qm = 1 << m
    t_lin = (u.frob(m) * v).rel_trace(m)
    k_coef = b * u * u * (u ** (2 * (qm - 1)) + v ** (2 * (qm - 1)))
    c = (a * u ** (qm + 1)).sqrt() \
        + (b * u.frob(m) * v ** (2 * (qm - 1))).rel_trace(m)
    entries = []
    for zs in range(emb.small.order):
        z = emb(zs)
        val = c + (a * t_lin * z).sqrt() \
            + (k_coef * (u + v * z) ** (qm - 2)).rel_trace(m)
        entries.append(_project_entry(emb, val))
    return MappingTable(emb.small, entries)


def closed_form_g_circle(b: FieldElement, u: FieldElement, emb: Embedding,
                         reduced: bool = False) -> MappingTable:
    """The v = 1, u on the unit circle specialization of closed_form_g,
    in either of its two published shapes:

      default  c + (a w z)^(1/2) + b w^2 (u^(2^m)+z)/(u+z)^2
                                 + b^(2^m) w^2 (u+z)/(u^(2^m)+z)^2,
               c = a^(1/2) + tr(b u^(2^m))
      reduced  a^(1/2) + tr(b' u^5) + (a w z)^(1/2)
                 + [tr(b'(u^5+u)) z^4 + tr(b) w^2 z^3
                    + tr(b' u^5) w^2 z^2 + tr(b'(u^4+1)) z] / (z^2+wz+1)^2,
               b' = b^(2^m)

    where w = u + u^(2^m).  Both agree with the general form; the
    denominators never vanish for z in GF(2^m) because u and u^(2^m)
    are the roots of z^2 + wz + 1 and lie outside GF(2^m)."""
    big = b.field
    if u.field != big or emb.big != big:
        raise ValueError("b, u and embedding must share a field")
    n = big.degree
    if n % 2 or emb.small.degree != n // 2:
        raise ValueError("need n = 2m and the half-degree embedding")
    m = n // 2
    if b.bits == 0:
        raise ValueError("b must be nonzero")
    if (u ** ((1 << m) + 1)).bits != 1 or u.in_subfield(m):
        raise ValueError("u must lie on the unit circle outside GF(2^m)")
    a = b ** ((1 << m) + 1)
    ubar = u.frob(m)
    w = u + ubar
    entries = []
    if not reduced:
        c = a.sqrt() + (b * ubar).rel_trace(m)
        for zs in range(emb.small.order):
            z = emb(zs)
            val = c + (a * w * z).sqrt() \
                + b * w * w * (ubar + z) / ((u + z) * (u + z)) \
                + b.frob(m) * w * w * (u + z) / ((ubar + z) * (ubar + z))
            entries.append(_project_entry(emb, val))
        return MappingTable(emb.small, entries)
    bq = b.frob(m)
    c = a.sqrt() + (bq * u ** 5).rel_trace(m)
    c4 = (bq * (u ** 5 + u)).rel_trace(m)
    c3 = b.rel_trace(m) * w * w
    c2 = (bq * u ** 5).rel_trace(m) * w * w
    c1 = (bq * (u ** 4 + big.one)).rel_trace(m)
    for zs in range(emb.small.order):
        z = emb(zs)
        den = z * z + w * z + 1
        num = c4 * z ** 4 + c3 * z ** 3 + c2 * z * z + c1 * z
        val = c + (a * w * z).sqrt() + num / (den * den)
        entries.append(_project_entry(emb, val))
    return MappingTable(emb.small, entries)


def verify_trace_identities(b: FieldElement, u: FieldElement,
                            v: FieldElement | None = None) -> bool:
    """The three trace identities used to reduce the circle form of G,
    plus the square-root expansion of (u + v z)^((2^m+1)/2) on every
    subfield point z.  b = 0 is allowed (everything degenerates to 0)."""
    big = u.field
    if b.field != big:
        raise ValueError("b and u must share a field")
    n = big.degree
    if n % 2:
        raise ValueError("need n = 2m")
    m = n // 2
    if (u ** ((1 << m) + 1)).bits != 1 or u.in_subfield(m):
        raise ValueError("u must lie on the unit circle outside GF(2^m)")
    if v is None:
        v = big.one
    bq = b.frob(m)
    w = u + u.frob(m)
    tb = b + bq
    one = big.one

    ok = (w * w * tb * u ** 3 + b * w ** 3 * (one + w * w)
          == (bq * (u ** 5 + u)).rel_trace(m))
    ok = ok and (u * tb + b * w + (bq * (u ** 5 + u)).rel_trace(m)
                 == (bq * u ** 5).rel_trace(m))
    ok = ok and (w * w * tb * u * u + b * w ** 4
                 == (bq * (u ** 4 + one)).rel_trace(m))
    if not ok:
        return False
    qm1 = (1 << m) + 1
    t_lin = (u.frob(m) * v).rel_trace(m)
    for zb in big.subfield_bits(m):
        z = big.el(zb)
        lhs = ((u + v * z) ** qm1).sqrt()
        rhs = (u ** qm1).sqrt() + (t_lin * z).sqrt() + (v ** qm1).sqrt() * z
        if lhs != rhs:
            return False
    return True
