"""Exact arithmetic in binary fields GF(2^k) for k <= 24.

Elements are k-bit integers: bit i is the coefficient of X^i in the
polynomial basis 1, X, ..., X^(k-1).  A FieldSpec pins down the reduction
modulus and a primitive element; FieldElement pairs one bitmask with its
FieldSpec so that cross-field operations fail loudly instead of silently
mixing incompatible representations.

Reproducibility conventions:

  * the default modulus of degree k is the irreducible polynomial with
    the smallest integer bitmask (constant term forced nonzero, which
    only matters for k = 1 where it rules out the polynomial X);
  * the stored generator is the smallest bitmask whose multiplicative
    order is 2^k - 1.

For k <= 16 a discrete exp/log table pair is built once at construction,
making mul, pow, inv and sqrt O(1) lookups; larger degrees fall back to
shift-and-xor arithmetic.  FieldSpec is immutable after construction and
every derived table is a pure function of it, so instances can be shared
freely across threads.
"""

from __future__ import annotations

__all__ = [
    "FieldMismatchError",
    "FieldSpec",
    "FieldElement",
    "Embedding",
    "GF",
    "clmul",
    "pmod",
    "is_irreducible",
    "default_modulus",
    "embed_subfield",
    "unit_circle",
    "unit_circle_element",
]

_DEGREE_MAX = 24
_TABLE_DEGREE_MAX = 16


class FieldMismatchError(ValueError):
    """An operation tried to combine elements of two different fields."""


def clmul(a: int, b: int) -> int:
    """Carry-less (GF(2)[X]) product of two polynomial bitmasks."""
    r = 0
    while a:
        if a & 1:
            r ^= b
        a >>= 1
        b <<= 1
    return r


def pmod(a: int, m: int) -> int:
    """Remainder of the polynomial bitmask a modulo m (m != 0)."""
    dm = m.bit_length()
    da = a.bit_length()
    while da >= dm:
        a ^= m << (da - dm)
        da = a.bit_length()
    return a


def is_irreducible(p: int) -> bool:
    """Irreducibility over GF(2), by trial division up to degree deg(p)/2."""
    k = p.bit_length() - 1
    if k < 1:
        return False
    for q in range(2, 1 << (k // 2 + 1)):
        if pmod(p, q) == 0:
            return False
    return True


def default_modulus(k: int) -> int:
    """Smallest-bitmask irreducible degree-k polynomial with constant term 1."""
    if not 1 <= k <= _DEGREE_MAX:
        raise ValueError(f"field degree must be in 1..{_DEGREE_MAX}, got {k}")
    for p in range((1 << k) | 1, 1 << (k + 1), 2):
        if is_irreducible(p):
            return p
    raise AssertionError("irreducible polynomials exist in every degree")


def _factorize(n: int) -> list[int]:
    """Distinct prime factors of n."""
    fs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            fs.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        fs.append(n)
    return fs


class FieldSpec:
    """One concrete GF(2^k): degree, reduction modulus, primitive element.

    Prefer the GF() factory, which caches constructed specs.  Two specs
    compare equal iff degree, modulus and generator all agree.
    """

    __slots__ = ("degree", "modulus", "generator", "order", "mult_order",
                 "_exp", "_log", "_derived")

    def __init__(self, degree: int, modulus: int | None = None,
                 generator: int | None = None):
        if not 1 <= degree <= _DEGREE_MAX:
            raise ValueError(
                f"field degree must be in 1..{_DEGREE_MAX}, got {degree}")
        if modulus is None:
            modulus = default_modulus(degree)
        if modulus.bit_length() - 1 != degree:
            raise ValueError(
                f"modulus 0x{modulus:x} does not have degree {degree}")
        if not modulus & 1:
            raise ValueError(
                f"modulus 0x{modulus:x} has zero constant term")
        if not is_irreducible(modulus):
            raise ValueError(f"modulus 0x{modulus:x} is reducible")
        self.degree = degree
        self.modulus = modulus
        self.order = 1 << degree
        self.mult_order = self.order - 1
        self._exp = None
        self._log = None
        self._derived = {}

        if generator is None:
            generator = self._find_generator()
        else:
            if not 0 < generator < self.order:
                raise ValueError(f"generator 0x{generator:x} out of range")
            if self._order_of(generator) != self.mult_order:
                raise ValueError(
                    f"0x{generator:x} does not generate the "
                    f"multiplicative group of GF(2^{degree})")
        self.generator = generator

        if degree <= _TABLE_DEGREE_MAX:
            self._build_tables()

    # -- raw arithmetic used before/without tables ------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        return pmod(clmul(a, b), self.modulus)

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def _order_of(self, a: int) -> int:
        """Exact multiplicative order of a nonzero element."""
        order = self.mult_order
        for p in _factorize(order) if order > 1 else []:
            while order % p == 0 and self._pow_raw(a, order // p) == 1:
                order //= p
        return order

    def _find_generator(self) -> int:
        if self.mult_order == 1:
            return 1
        for cand in range(2, self.order):
            if self._order_of(cand) == self.mult_order:
                return cand
        raise AssertionError("the multiplicative group is cyclic")

    def _build_tables(self):
        n = self.mult_order
        exp = [0] * n
        log = [-1] * self.order
        e = 1
        g = self.generator
        for i in range(n):
            exp[i] = e
            log[e] = i
            e = self._mul_raw(e, g)
        if e != 1:
            raise AssertionError("generator order check failed")
        self._exp = exp
        self._log = log

    # -- int-level operations (bitmask in, bitmask out) -------------------

    def mul_bits(self, a: int, b: int) -> int:
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[(self._log[a] + self._log[b]) % self.mult_order]
        return self._mul_raw(a, b)

    def pow_bits(self, a: int, e: int) -> int:
        """a**e with 0**0 = 1; the exponent of a nonzero base is reduced
        mod 2^k - 1, the zero base keeps e as written."""
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        e %= self.mult_order
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % self.mult_order]
        return self._pow_raw(a, e)

    def inv_bits(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.pow_bits(a, self.order - 2)

    def sqrt_bits(self, a: int) -> int:
        """The unique square root: squaring is a field automorphism."""
        return self.pow_bits(a, 1 << (self.degree - 1)) if a else 0

    def frob_bits(self, a: int, i: int = 1) -> int:
        """a ** (2^i)."""
        return self.pow_bits(a, 1 << i)

    def trace_bits(self, a: int) -> int:
        """Absolute trace to GF(2); always 0 or 1."""
        acc = t = a
        for _ in range(self.degree - 1):
            t = self.mul_bits(t, t)
            acc ^= t
        return acc

    def rel_trace_bits(self, a: int, r: int) -> int:
        """Relative trace onto the subfield GF(2^r), r | k."""
        self._check_subdegree(r)
        acc = t = a
        for _ in range(self.degree // r - 1):
            for _ in range(r):
                t = self.mul_bits(t, t)
            acc ^= t
        return acc

    def in_subfield_bits(self, a: int, r: int) -> bool:
        self._check_subdegree(r)
        return self.frob_bits(a, r) == a

    def _check_subdegree(self, r: int):
        if not 1 <= r <= self.degree or self.degree % r:
            raise ValueError(
                f"{r} is not a subfield degree of GF(2^{self.degree})")

    # -- cached derived tables --------------------------------------------

    def subfield_bits(self, r: int) -> list[int]:
        """Sorted bitmasks of the subfield GF(2^r) inside this field."""
        self._check_subdegree(r)
        key = ("subfield", r)
        if key not in self._derived:
            self._derived[key] = [x for x in range(self.order)
                                  if self.frob_bits(x, r) == x]
        return self._derived[key]

    def subfield_trace_table(self, r: int) -> list[int]:
        """Table of sum_{i<r} y^(2^i) for every y; equals the absolute
        trace of GF(2^r) whenever y lies in that subfield."""
        self._check_subdegree(r)
        if self._exp is None:
            raise ValueError("trace tables are only built for degree <= "
                             f"{_TABLE_DEGREE_MAX}")
        key = ("trtab", r)
        if key not in self._derived:
            mul = self.mul_bits
            tab = [0] * self.order
            for y in range(self.order):
                acc = t = y
                for _ in range(r - 1):
                    t = mul(t, t)
                    acc ^= t
                tab[y] = acc
            self._derived[key] = tab
        return self._derived[key]

    def gram_rows(self) -> list[int]:
        """Row bitmasks of the trace Gram matrix M[i][j] = tr(X^i * X^j)."""
        if "gram" not in self._derived:
            k = self.degree
            rows = []
            for i in range(k):
                row = 0
                for j in range(k):
                    if self.trace_bits(self.mul_bits(1 << i, 1 << j)):
                        row |= 1 << j
                rows.append(row)
            self._derived["gram"] = rows
        return self._derived["gram"]

    def dual_basis_bits(self) -> list[int]:
        """The trace-dual basis of 1, X, ..., X^(k-1): tr(X^i * dual[j])
        is 1 iff i == j.  Found by inverting the trace Gram matrix."""
        if "dual" not in self._derived:
            k = self.degree
            rows = list(self.gram_rows())
            inv = [1 << i for i in range(k)]
            for col in range(k):
                piv = next((r for r in range(col, k) if rows[r] >> col & 1),
                           None)
                if piv is None:
                    raise AssertionError("trace form is non-degenerate")
                rows[col], rows[piv] = rows[piv], rows[col]
                inv[col], inv[piv] = inv[piv], inv[col]
                for r in range(k):
                    if r != col and rows[r] >> col & 1:
                        rows[r] ^= rows[col]
                        inv[r] ^= inv[col]
            for i in range(k):
                for j in range(k):
                    want = 1 if i == j else 0
                    if self.trace_bits(self.mul_bits(1 << i, inv[j])) != want:
                        raise AssertionError("dual basis verification failed")
            self._derived["dual"] = inv
        return self._derived["dual"]

    # -- element construction ---------------------------------------------

    def el(self, bits: int) -> "FieldElement":
        return FieldElement(bits, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self.generator, self)

    def elements(self):
        """All field elements in bitmask order."""
        for bits in range(self.order):
            yield FieldElement(bits, self)

    def star(self):
        """All nonzero elements in bitmask order."""
        for bits in range(1, self.order):
            yield FieldElement(bits, self)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.degree == other.degree
                and self.modulus == other.modulus
                and self.generator == other.generator)

    def __hash__(self):
        return hash((self.degree, self.modulus, self.generator))

    def __repr__(self):
        return (f"GF(2^{self.degree}; modulus=0x{self.modulus:x}, "
                f"generator=0x{self.generator:x})")

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "modulus": f"0x{self.modulus:x}",
                "generator": f"0x{self.generator:x}"}


class FieldElement:
    """A bitmask plus its FieldSpec.  Plain ints mixed into arithmetic are
    read as bitmasks of the same field."""

    __slots__ = ("bits", "field")

    def __init__(self, bits: int, field: FieldSpec):
        if not 0 <= bits < field.order:
            raise ValueError(f"bitmask 0x{bits:x} out of range for "
                             f"GF(2^{field.degree})")
        self.bits = bits
        self.field = field

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"cannot combine {self.field!r} and {other.field!r}")
            return other.bits
        if isinstance(other, int):
            if not 0 <= other < self.field.order:
                raise ValueError(f"int operand {other} out of field range")
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.bits ^ b, self.field)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(self.field.mul_bits(self.bits, b), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(
            self.field.mul_bits(self.bits, self.field.inv_bits(b)),
            self.field)

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(
            self.field.mul_bits(b, self.field.inv_bits(self.bits)),
            self.field)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        return FieldElement(self.field.pow_bits(self.bits, e), self.field)

    def inv(self) -> "FieldElement":
        return FieldElement(self.field.inv_bits(self.bits), self.field)

    def sqrt(self) -> "FieldElement":
        return FieldElement(self.field.sqrt_bits(self.bits), self.field)

    def frob(self, i: int = 1) -> "FieldElement":
        return FieldElement(self.field.frob_bits(self.bits, i), self.field)

    def trace(self) -> int:
        return self.field.trace_bits(self.bits)

    def rel_trace(self, r: int) -> "FieldElement":
        return FieldElement(self.field.rel_trace_bits(self.bits, r),
                            self.field)

    def in_subfield(self, r: int) -> bool:
        return self.field.in_subfield_bits(self.bits, r)

    def __bool__(self):
        return self.bits != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.bits == other.bits
        if isinstance(other, int):
            return self.bits == other
        return NotImplemented

    def __hash__(self):
        return hash((self.bits, self.field))

    def __str__(self):
        return f"0x{self.bits:x}"

    def __repr__(self):
        return f"FieldElement(0x{self.bits:x}, GF(2^{self.field.degree}))"


_FIELD_CACHE: dict = {}


def GF(degree: int, modulus: int | None = None,
       generator: int | None = None) -> FieldSpec:
    """Cached FieldSpec factory."""
    key = (degree, modulus, generator)
    spec = _FIELD_CACHE.get(key)
    if spec is None:
        spec = FieldSpec(degree, modulus, generator)
        # share one instance across equivalent spellings of the key
        spec = _FIELD_CACHE.setdefault(
            (degree, spec.modulus, spec.generator), spec)
        _FIELD_CACHE[key] = spec
    return spec


class Embedding:
    """The field homomorphism GF(2^r) -> GF(2^k) (r | k) that sends the
    small field's class of X to the smallest root of the small modulus in
    the big field, extended linearly.

    Multiplicativity is verified on all basis pairs at construction,
    which settles it for all pairs since both sides are bilinear; the
    image is checked to be exactly the in_subfield set.
    """

    __slots__ = ("small", "big", "table", "_section")

    def __init__(self, small: FieldSpec, big: FieldSpec):
        if big.degree % small.degree:
            raise ValueError(
                f"GF(2^{small.degree}) does not embed in GF(2^{big.degree})")
        r = small.degree
        root = None
        for cand in range(big.order):
            acc = 0
            for i in range(small.modulus.bit_length() - 1, -1, -1):
                acc = big.mul_bits(acc, cand)
                if small.modulus >> i & 1:
                    acc ^= 1
            if acc == 0:
                root = cand
                break
        if root is None:
            raise AssertionError("the small modulus splits in the big field")
        powers = [1]
        for _ in range(r - 1):
            powers.append(big.mul_bits(powers[-1], root))
        table = [0] * small.order
        for x in range(small.order):
            acc = 0
            for i in range(r):
                if x >> i & 1:
                    acc ^= powers[i]
            table[x] = acc
        for i in range(r):
            for j in range(r):
                lhs = table[small.mul_bits(1 << i, 1 << j)]
                rhs = big.mul_bits(powers[i], powers[j])
                if lhs != rhs:
                    raise AssertionError("embedding is not multiplicative")
        if sorted(table) != big.subfield_bits(r):
            raise AssertionError("embedding image is not the subfield")
        self.small = small
        self.big = big
        self.table = table
        self._section = {v: x for x, v in enumerate(table)}

    def __call__(self, x) -> FieldElement:
        if isinstance(x, FieldElement):
            if x.field != self.small:
                raise FieldMismatchError("element is not in the small field")
            x = x.bits
        return FieldElement(self.table[x], self.big)

    def project(self, y: FieldElement) -> FieldElement:
        """Preimage of a big-field element; errors if outside the image."""
        if y.field != self.big:
            raise FieldMismatchError("element is not in the big field")
        bits = self._section.get(y.bits)
        if bits is None:
            raise ValueError(f"0x{y.bits:x} is outside the embedded subfield")
        return FieldElement(bits, self.small)

    def contains(self, y: FieldElement) -> bool:
        return y.field == self.big and y.bits in self._section


_EMBED_CACHE: dict = {}


def embed_subfield(small: FieldSpec, big: FieldSpec) -> Embedding:
    """Cached Embedding factory."""
    key = (small, big)
    emb = _EMBED_CACHE.get(key)
    if emb is None:
        emb = Embedding(small, big)
        _EMBED_CACHE[key] = emb
    return emb


def unit_circle(field: FieldSpec) -> list[FieldElement]:
    """All solutions of x^(2^m + 1) = 1 in GF(2^n), n = 2m, in bitmask
    order.  This is the cyclic group of order 2^m + 1 (the norm-1 circle
    over the subfield GF(2^m))."""
    n = field.degree
    if n % 2:
        raise ValueError("the unit circle needs even degree n = 2m")
    m = n // 2
    c = (1 << m) + 1
    h = field.pow_bits(field.generator, field.mult_order // c)
    bits = []
    x = 1
    for _ in range(c):
        bits.append(x)
        x = field.mul_bits(x, h)
    if x != 1 or len(set(bits)) != c:
        raise AssertionError("circle enumeration failed")
    return [FieldElement(b, field) for b in sorted(bits)]


def unit_circle_element(field: FieldSpec, selector: str) -> FieldElement:
    """One unit-circle element, chosen deterministically.

    Selectors:
      "cube"       the canonical cube root g^((2^n-1)/3); needs odd m
      "fifth:J"    the fifth root g^(J(2^n-1)/5), J in 1..4; needs
                   m = 2 (mod 4)
      "general:I"  the I-th element (bitmask order, 0-based) of the
                   circle with 1 removed
    """
    n = field.degree
    if n % 2:
        raise ValueError("the unit circle needs even degree n = 2m")
    m = n // 2
    name, _, arg = selector.partition(":")
    if name == "cube":
        if m % 2 == 0:
            raise ValueError("cube selector requires odd m")
        u = field.pow_bits(field.generator, field.mult_order // 3)
    elif name == "fifth":
        if m % 4 != 2:
            raise ValueError("fifth selector requires m = 2 (mod 4)")
        try:
            j = int(arg)
        except ValueError:
            raise ValueError(f"bad fifth index {arg!r}") from None
        if not 1 <= j <= 4:
            raise ValueError("fifth index must be in 1..4")
        u = field.pow_bits(field.generator, j * (field.mult_order // 5))
    elif name == "general":
        try:
            i = int(arg)
        except ValueError:
            raise ValueError(f"bad general index {arg!r}") from None
        circle = [x for x in unit_circle(field) if x.bits != 1]
        if not 0 <= i < len(circle):
            raise ValueError(f"general index must be in 0..{len(circle)-1}")
        return circle[i]
    else:
        raise ValueError(f"unknown unit-circle selector {selector!r}")
    el = FieldElement(u, field)
    if field.pow_bits(u, (1 << m) + 1) != 1 or el.in_subfield(m):
        raise AssertionError("selector produced a non-circle element")
    return el
