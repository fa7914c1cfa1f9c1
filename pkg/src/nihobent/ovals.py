"""The Subiaco and Adelaide o-polynomial catalogs, and the pointwise
correspondence between binomial bent functions and catalog members.

The Subiaco catalog lives entirely in GF(2^m): three parameter cases
(m odd; m = 2 mod 4; arbitrary m with a free parameter w), each giving a
pair (f, g) and the one-parameter blend

    f_s = (f + e s g + s^(1/2) x^(1/2)) / (1 + e s + s^(1/2)),

whose denominator never vanishes because tr(e) = 1.  The Adelaide catalog
(m even) is defined through relative traces of a unit-circle element beta
of GF(2^n), so it is evaluated inside the big field on embedded arguments
and projected back.

correspond_subiaco / correspond_adelaide run the whole pipeline: build
the binomial bent function, split it over the basis (u, 1), extract G,
build the claimed catalog member, and check G(z) = c0 + c1 member(z) on
every point.  A mismatch raises VerificationError: it would mean the
implementation (or the claimed correspondence) is wrong.

Every f_s evaluation cross-checks the defining blend against the
published explicit rational form; for the arbitrary-m case the explicit
form is parameterized by s+1 relative to the blend, and both
parameterizations are exposed (subiaco_fs vs subiaco_fs_explicit).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bivariate import (BasisPair, InternalCheckError, MappingTable,
                        extract_h_mu, g_from_h, to_bivariate)
from .gf2 import (GF, Embedding, FieldElement, FieldSpec, embed_subfield,
                  unit_circle, unit_circle_element)
from .niho import FamilySpec, build_bent

__all__ = [
    "VerificationError",
    "SubiacoParams",
    "AdelaideParams",
    "Correspondence",
    "subiaco_pair",
    "subiaco_fs",
    "subiaco_fs_explicit",
    "adelaide_pair",
    "adelaide_fs",
    "adelaide_f1",
    "frobenius_map",
    "correspond_subiaco",
    "correspond_adelaide",
]


class VerificationError(RuntimeError):
    """A claimed pointwise correspondence failed on some input."""


def _as_element(field: FieldSpec, x) -> FieldElement:
    if isinstance(x, FieldElement):
        if x.field != field:
            raise ValueError("element from the wrong field")
        return x
    return field.el(x)


@dataclass(frozen=True)
class SubiacoParams:
    """One Subiaco parameter set: case 1 (m odd, w = e = 1), case 2
    (m = 2 mod 4, w^2 + w + 1 = 0, e = w), or case 3 (any m; w != 0 with
    w^2 + w + 1 != 0 and tr(1/w) = 1)."""
    field: FieldSpec
    case: int
    w: FieldElement
    e: FieldElement

    @classmethod
    def case_i(cls, field: FieldSpec) -> "SubiacoParams":
        if field.degree % 2 == 0:
            raise ValueError("case 1 needs odd m")
        return cls(field, 1, field.one, field.one)

    @classmethod
    def case_ii(cls, field: FieldSpec,
                w: FieldElement | int | None = None) -> "SubiacoParams":
        if field.degree % 4 != 2:
            raise ValueError("case 2 needs m = 2 (mod 4)")
        options = cls.case_ii_w_options(field)
        if w is None:
            w = options[0]
        else:
            w = _as_element(field, w)
            if w not in options:
                raise ValueError(
                    f"w = 0x{w.bits:x} does not satisfy w^2 + w + 1 = 0")
        e = w
        if field.trace_bits(e.bits) != 1:
            raise InternalCheckError("case 2 e must have trace 1")
        return cls(field, 2, w, e)

    @classmethod
    def case_iii(cls, field: FieldSpec,
                 w: FieldElement | int) -> "SubiacoParams":
        w = _as_element(field, w)
        if w.bits == 0 or (w * w + w + 1).bits == 0 \
                or w.inv().trace() != 1:
            raise ValueError(
                f"w = 0x{w.bits:x} needs w != 0, w^2 + w + 1 != 0 and "
                f"tr(1/w) = 1")
        e = (w * w + w ** 5 + w.sqrt()) / (w * (1 + w + w * w))
        if e.trace() != 1:
            raise InternalCheckError("case 3 e must have trace 1")
        return cls(field, 3, w, e)

    @staticmethod
    def case_ii_w_options(field: FieldSpec) -> list:
        """Both roots of w^2 + w + 1 in GF(2^m), bitmask order."""
        opts = [field.el(x) for x in range(field.order)
                if field.mul_bits(x, x) ^ x ^ 1 == 0]
        if len(opts) != 2:
            raise ValueError(
                f"GF(2^{field.degree}) has no cube roots of unity")
        return opts

    @staticmethod
    def case_iii_w_options(field: FieldSpec) -> list:
        """All valid case-3 parameters w, bitmask order."""
        out = []
        for x in range(1, field.order):
            w = field.el(x)
            if (w * w + w + 1).bits and w.inv().trace() == 1:
                out.append(w)
        return out


def subiaco_pair(p: SubiacoParams) -> tuple[MappingTable, MappingTable]:
    """The base pair (f, g) of the parameter set.  The denominators are
    irreducible quadratics over GF(2^m), so they never vanish."""
    field = p.field
    w = p.w
    fe, ge = [], []
    for xb in range(field.order):
        x = field.el(xb)
        sx = x.sqrt()
        if p.case == 1:
            den = x * x + x + 1
            den2 = (den * den).inv()
            fe.append(((x * x + x) * den2 + sx).bits)
            ge.append(((x ** 4 + x ** 3) * den2 + sx).bits)
        elif p.case == 2:
            den = x * x + w * x + 1
            den2 = (den * den).inv()
            fe.append((x * x * (x * x + w * x + w) * den2
                       + w * w * sx).bits)
            ge.append((w * x * (x * x + x + w * w) * den2
                       + w * w * sx).bits)
        else:
            den = x * x + w * x + 1
            den2 = (den * den).inv()
            k = w * w + w ** 5 + w.sqrt()
            fe.append(((w * w * (x ** 4 + x)
                        + w * w * (1 + w + w * w) * (x ** 3 + x * x))
                       * den2 + sx).bits)
            ge.append(((w ** 4 * x ** 4
                        + w ** 3 * (1 + w * w + w ** 4) * x ** 3
                        + w ** 3 * (1 + w * w) * x) * den2 / k
                       + (w.sqrt() / k) * sx).bits)
    return MappingTable(field, fe), MappingTable(field, ge)


def _blend(field: FieldSpec, f: MappingTable, g: MappingTable,
           e: FieldElement, s: FieldElement) -> MappingTable:
    """(f + e s g + (s x)^(1/2)) / (1 + e s + s^(1/2)); the divisor is
    nonzero whenever tr(e) = 1."""
    a_div = 1 + e * s + s.sqrt()
    if a_div.bits == 0:
        raise InternalCheckError(
            "blend denominator vanished although tr(e) = 1")
    inv_a = a_div.inv()
    es = e * s
    ss = s.sqrt()
    entries = []
    for xb in range(field.order):
        x = field.el(xb)
        entries.append(((f.apply(xb) + es * g.apply(xb) + ss * x.sqrt())
                        * inv_a).bits)
    return MappingTable(field, entries)


def subiaco_fs_explicit(p: SubiacoParams, s) -> MappingTable:
    """The published explicit rational form, at ITS OWN parameter: for
    cases 1 and 2 this equals subiaco_fs(p, s); for case 3 it equals
    subiaco_fs(p, s + 1)."""
    field = p.field
    s = _as_element(field, s)
    w, e = p.w, p.e
    entries = []
    if p.case == 1:
        a_div = (1 + e * s + s.sqrt()).inv()
        for xb in range(field.order):
            x = field.el(xb)
            den = x * x + x + 1
            entries.append(((s * (x ** 4 + x ** 3) + x * x + x)
                            * a_div / (den * den) + x.sqrt()).bits)
    elif p.case == 2:
        a_div = (1 + e * s + s.sqrt()).inv()
        for xb in range(field.order):
            x = field.el(xb)
            den = x * x + w * x + 1
            rat = (x ** 4 + w * (s * w + 1) * (x ** 3 + x * x)
                   + s * w * x) / (den * den)
            entries.append((a_div * (rat + (w * w + s + s.sqrt())
                                     * x.sqrt())).bits)
    else:
        pref = (e + e * s + s.sqrt()).inv()
        wsum = 1 + w + w * w
        for xb in range(field.order):
            x = field.el(xb)
            den = x * x + w * x + 1
            rat = w * w * ((1 + s * w + w * w) * x ** 4
                           + wsum * wsum * (s * x ** 3 + x * x)
                           + (s + w + s * w * w) * x) \
                / (wsum * den * den)
            root = (s.sqrt() + (s + 1) / (w.sqrt() * wsum)) * x.sqrt()
            entries.append((pref * (rat + root)).bits)
    return MappingTable(field, entries)


def subiaco_fs(p: SubiacoParams, s) -> MappingTable:
    """f_s by the defining blend, cross-checked against the explicit
    rational form (shifted by s+1 for case 3)."""
    field = p.field
    s = _as_element(field, s)
    f, g = subiaco_pair(p)
    blend = _blend(field, f, g, p.e, s)
    shift = s if p.case != 3 else s + 1
    if blend != subiaco_fs_explicit(p, shift):
        raise InternalCheckError(
            f"blend and explicit f_s disagree (case {p.case}, "
            f"s = 0x{s.bits:x})")
    return blend


class AdelaideParams:
    """Adelaide catalog parameters: m even, l = (2^m - 1)/3, beta on the
    unit circle of GF(2^n) with beta != 1.  The derived traces
    tr(beta) and tr(beta^l) are nonzero for every admissible beta, and
    e = tr(beta^l)/tr(beta) + 1/tr(beta^l) + 1 has absolute trace 1."""

    __slots__ = ("beta", "emb", "m", "l", "trb", "trbl", "e_big", "e")

    def __init__(self, beta: FieldElement, emb: Embedding):
        big = beta.field
        if emb.big != big:
            raise ValueError("embedding targets a different field")
        n = big.degree
        if n % 2 or n % 4:
            raise ValueError("Adelaide needs m even (n = 0 mod 4)")
        m = n // 2
        if emb.small.degree != m:
            raise ValueError("embedding must come from the half-degree "
                             "field")
        if (beta ** ((1 << m) + 1)).bits != 1 or beta.bits == 1:
            raise ValueError(
                f"beta = 0x{beta.bits:x} must lie on the unit circle "
                f"and differ from 1")
        self.beta = beta
        self.emb = emb
        self.m = m
        self.l = ((1 << m) - 1) // 3
        self.trb = beta.rel_trace(m)
        self.trbl = (beta ** self.l).rel_trace(m)
        if self.trb.bits == 0 or self.trbl.bits == 0:
            raise InternalCheckError(
                "tr(beta) and tr(beta^l) cannot vanish for beta != 1")
        self.e_big = self.trbl / self.trb + self.trbl.inv() + 1
        self.e = emb.project(self.e_big)
        if self.e.trace() != 1:
            raise InternalCheckError("Adelaide e must have trace 1")


def adelaide_pair(p: AdelaideParams) -> tuple[MappingTable, MappingTable]:
    """The Adelaide base pair (f, g), evaluated inside GF(2^n) and
    projected to GF(2^m).  The denominator x + tr(beta) x^(1/2) + 1 has
    its square roots at beta and 1/beta, both outside GF(2^m)."""
    emb = p.emb
    small, m, l = emb.small, p.m, p.l
    beta, trb, trbl = p.beta, p.trb, p.trbl
    binv = beta.inv()
    b2 = beta * beta
    fe, ge = [], []
    for xb in range(small.order):
        x = emb(xb)
        sx = x.sqrt()
        dl = (x + trb * sx + 1) ** (l - 1)
        fval = trbl * (x + 1) / trb \
            + ((beta * x + binv) ** l).rel_trace(m) / (trb * dl) + sx
        egval = (trbl / trb) * x \
            + ((b2 * x + 1) ** l).rel_trace(m) / (trb * trbl * dl) \
            + sx / trbl
        fe.append(emb.project(fval).bits)
        ge.append(emb.project(egval / p.e_big).bits)
    return MappingTable(small, fe), MappingTable(small, ge)


def adelaide_fs(p: AdelaideParams, s) -> MappingTable:
    small = p.emb.small
    s = _as_element(small, s)
    f, g = adelaide_pair(p)
    return _blend(small, f, g, p.e, s)


def adelaide_f1(p: AdelaideParams) -> MappingTable:
    """f_1, cross-checked against the scaled single-fraction display
    e tr(beta) tr(beta^l) f_1(x) = tr(beta^(2l))
        + tr((x + beta^2)^l) / (x + tr(beta) x^(1/2) + 1)^(l-1)
        + tr(beta) x^(1/2)."""
    emb = p.emb
    small, m, l = emb.small, p.m, p.l
    f1 = adelaide_fs(p, small.one)
    beta, trb, trbl = p.beta, p.trb, p.trbl
    scale = p.e_big * trb * trbl
    b2 = beta * beta
    tr2l = (beta ** (2 * l)).rel_trace(m)
    for xb in range(small.order):
        x = emb(xb)
        sx = x.sqrt()
        dl = (x + trb * sx + 1) ** (l - 1)
        rhs = tr2l + ((x + b2) ** l).rel_trace(m) / dl + trb * sx
        if scale * emb(f1.apply(xb)) != rhs:
            raise InternalCheckError(
                f"f_1 display mismatch at x = 0x{xb:x}")
    return f1


def frobenius_map(field: FieldSpec, i: int) -> MappingTable:
    """z -> z^(2^i); an o-polynomial exactly when gcd(i, m) = 1."""
    if i < 0:
        raise ValueError("Frobenius power must be >= 0")
    return MappingTable(field,
                        [field.frob_bits(z, i) for z in range(field.order)])


@dataclass
class Correspondence:
    """A verified pointwise identity G(z) = c0 + c1 * member(z), where G
    is extracted from the bent function and member is a catalog map."""
    family: str
    branch: str
    m: int
    s: FieldElement | None
    c0: FieldElement
    c1: FieldElement
    catalog_case: int | None
    w: FieldElement | None
    u: FieldElement | None
    beta: FieldElement | None
    retried: tuple
    verified: bool
    points_checked: int
    member: MappingTable
    extracted: MappingTable

    def to_json(self) -> dict:
        catalog: dict = {"family": self.family}
        if self.catalog_case is not None:
            catalog["case"] = self.catalog_case
        if self.w is not None:
            catalog["w"] = f"0x{self.w.bits:x}"
        if self.beta is not None:
            catalog["beta"] = f"0x{self.beta.bits:x}"
        return {
            "branch": self.branch,
            "s": f"0x{self.s.bits:x}" if self.s is not None else None,
            "c0": f"0x{self.c0.bits:x}",
            "c1": f"0x{self.c1.bits:x}",
            "catalog": catalog,
            "u": f"0x{self.u.bits:x}" if self.u is not None else None,
            "retried": [f"0x{r:x}" for r in self.retried],
            "verified": self.verified,
            "points_checked": self.points_checked,
        }


def _extract_g(b_or_one: FieldElement, family: str, m: int,
               u: FieldElement, emb: Embedding) -> MappingTable:
    tt = build_bent(FamilySpec(family, m, b=b_or_one)).truth_table()
    biv = to_bivariate(tt, BasisPair(u, u.field.one), emb)
    return g_from_h(*extract_h_mu(biv))


def _verify_affine_match(extracted: MappingTable, member: MappingTable,
                         c0: FieldElement, c1: FieldElement,
                         what: str) -> int:
    small = extracted.field
    mul = small.mul_bits
    for z in range(small.order):
        if extracted.entries[z] != c0.bits ^ mul(c1.bits,
                                                 member.entries[z]):
            raise VerificationError(
                f"{what}: mismatch at z = 0x{z:x}")
    return small.order


def correspond_subiaco(b: FieldElement, u: FieldElement | None = None,
                       small: FieldSpec | None = None) -> Correspondence:
    """Match the s=3 binomial bent function for coefficient b against its
    Subiaco catalog member; the branch and catalog case depend on
    m mod 4.  For m = 0 (mod 4) only b = 1 is supported."""
    big = b.field
    n = big.degree
    if n % 2:
        raise ValueError("need n = 2m")
    m = n // 2
    if b.bits == 0:
        raise ValueError("b must be nonzero")
    if small is None:
        small = GF(m)
    emb = embed_subfield(small, big)
    a = b ** ((1 << m) + 1)
    sqa = a.sqrt()

    if m % 2 == 1:
        if u is None:
            u = unit_circle_element(big, "cube")
        elif u.field != big or (u ** 3).bits != 1 or u.bits == 1:
            raise ValueError("u must be a nontrivial cube root of unity")
        params = SubiacoParams.case_i(small)
        if b ** ((1 << m) - 1) == u * u:
            bu = b * u
            c0 = c1 = emb.project(bu)
            member = subiaco_pair(params)[1]
            extracted = _extract_g(b, "binomial3", m, u, emb)
            checked = _verify_affine_match(extracted, member, c0, c1,
                                           "degenerate branch (m odd)")
            return Correspondence("subiaco", "degenerate_g", m, None,
                                  c0, c1, 1, params.w, u, None, (),
                                  True, checked, member, extracted)
        bb = (b / sqa) ** 2
        s_big = (1 + bb) / (u * u + bb * u)
        s = emb.project(s_big)
        c0 = emb.project(sqa + (b * u).rel_trace(m))
        c1 = emb.project(sqa)
        member = subiaco_fs(params, s)
        extracted = _extract_g(b, "binomial3", m, u, emb)
        checked = _verify_affine_match(extracted, member, c0, c1,
                                       "generic branch (m odd)")
        return Correspondence("subiaco", "generic", m, s, c0, c1, 1,
                              params.w, u, None, (), True, checked,
                              member, extracted)

    if m % 4 == 2:
        if u is None:
            candidates = [unit_circle_element(big, f"fifth:{j}")
                          for j in (1, 2, 3, 4)]
        else:
            if u.field != big or (u ** 5).bits != 1 or u.in_subfield(m):
                raise ValueError(
                    "u must be a fifth root of unity outside GF(2^m)")
            candidates = [u] + [v for j in (1, 2, 3, 4)
                                if (v := unit_circle_element(
                                    big, f"fifth:{j}")) != u]
        retried = []
        for cand in candidates:
            t4 = (b * (cand ** 4 + 1)).rel_trace(m)
            if t4.bits == 0:
                retried.append(cand.bits)
                continue
            w_big = cand + cand.frob(m)
            s_big = w_big * w_big * (b * (cand + 1)).rel_trace(m) / t4
            s = emb.project(s_big)
            w = emb.project(w_big)
            params = SubiacoParams.case_ii(small, w)
            c0 = emb.project(sqa + b.rel_trace(m))
            c1 = emb.project((1 + w_big * s_big + s_big.sqrt()) * t4)
            member = subiaco_fs(params, s)
            extracted = _extract_g(b, "binomial3", m, cand, emb)
            checked = _verify_affine_match(
                extracted, member, c0, c1, "generic branch (m = 2 mod 4)")
            return Correspondence("subiaco", "generic", m, s, c0, c1, 2,
                                  w, cand, None, tuple(retried), True,
                                  checked, member, extracted)
        raise InternalCheckError(
            "every fifth root was degenerate; at most one can be")

    # m = 0 (mod 4)
    if b.bits != 1:
        raise ValueError(
            "for m = 0 (mod 4) only b = 1 is supported; the catalog "
            "correspondence for general b is not established")
    if u is None:
        u = unit_circle_element(big, "general:0")
    elif u.field != big or (u ** ((1 << m) + 1)).bits != 1 \
            or u.in_subfield(m):
        raise ValueError("u must lie on the unit circle outside GF(2^m)")
    w_big = u + u.frob(m)
    w = emb.project(w_big)
    params = SubiacoParams.case_iii(small, w)
    # the published target is the EXPLICIT form at parameter 0, which
    # is the blend at s = 1 (case-3 forms differ by the s+1 shift)
    s = small.one
    c0 = emb.project(1 + (u ** 5).rel_trace(m))
    c1 = emb.project(w_big * w_big + w_big ** 5 + w_big.sqrt())
    member = subiaco_fs(params, s)
    extracted = _extract_g(b, "binomial3", m, u, emb)
    checked = _verify_affine_match(extracted, member, c0, c1,
                                   "m = 0 (mod 4) branch")
    return Correspondence("subiaco", "generic", m, s, c0, c1, 3, w, u,
                          None, (), True, checked, member, extracted)


def correspond_adelaide(beta: FieldElement,
                        small: FieldSpec | None = None) -> Correspondence:
    """Match the s=1/6 binomial bent function (b = a = 1) against the
    Adelaide catalog member f_1 for u = beta^2."""
    big = beta.field
    n = big.degree
    if n % 2 or (n // 2) % 2:
        raise ValueError("Adelaide needs even m")
    m = n // 2
    if small is None:
        small = GF(m)
    emb = embed_subfield(small, big)
    params = AdelaideParams(beta, emb)
    u = beta * beta
    member = adelaide_f1(params)
    c0 = emb.project(1 + (beta ** (2 * params.l)).rel_trace(m))
    c1 = emb.project(params.e_big * params.trb * params.trbl)
    extracted = _extract_g(big.one, "adelaide", m, u, emb)
    checked = _verify_affine_match(extracted, member, c0, c1,
                                   "Adelaide display")
    return Correspondence("adelaide", "generic", m, small.one, c0, c1,
                          None, None, u, beta, (), True, checked,
                          member, extracted)
