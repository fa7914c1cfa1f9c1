"""Boolean functions on GF(2^n): truth tables, trace forms, exact Walsh
spectra, algebraic degree, and the subfield-coset linearity test.

A TruthTable stores 2^n bits indexed by element bitmask.  A TraceForm is a
sum of terms tr_r(c * x^e) where tr_r is the absolute trace of GF(2^r);
each term is well defined exactly when c lies in GF(2^r) and e is fixed by
multiplication with 2^r mod 2^n - 1, which the constructor enforces.

The Walsh transform runs as a numpy butterfly in Theta(n 2^n) word ops and
is then reindexed through the trace Gram matrix so that index w carries the
field pairing tr(w x), not the coordinate dot product.  Spectra are exact
64-bit integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf2 import FieldElement, FieldSpec

__all__ = [
    "TruthTable",
    "TraceTerm",
    "TraceForm",
    "WalshSpectrum",
    "walsh_spectrum",
    "is_bent",
    "anf",
    "anf_degree",
    "has_affine_coset_restrictions",
]


class TruthTable:
    """2^n function values f(x) in {0,1}, indexed by the bitmask of x."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values):
        arr = np.asarray(values, dtype=np.uint8)
        if arr.shape != (1 << n,):
            raise ValueError(f"need exactly 2^{n} values, got {arr.shape}")
        if arr.max(initial=0) > 1:
            raise ValueError("truth table entries must be 0 or 1")
        self.n = n
        self.values = arr

    @classmethod
    def from_function(cls, n: int, fn) -> "TruthTable":
        return cls(n, [fn(x) & 1 for x in range(1 << n)])

    def weight(self) -> int:
        return int(self.values.sum())

    def __getitem__(self, x: int) -> int:
        return int(self.values[x])

    def __len__(self) -> int:
        return 1 << self.n

    def __eq__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.values,
                                                         other.values))

    def __hash__(self):
        return hash((self.n, self.values.tobytes()))

    def __xor__(self, other):
        if not isinstance(other, TruthTable):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("truth table sizes differ")
        return TruthTable(self.n, self.values ^ other.values)

    # -- text format: "n=<int>" newline, then 2^n chars of 0/1 ------------

    def to_text(self) -> str:
        return f"n={self.n}\n" + "".join("01"[v] for v in self.values) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "TruthTable":
        lines = text.split()
        if len(lines) != 2 or not lines[0].startswith("n="):
            raise ValueError("expected 'n=<int>' then one line of 0/1")
        try:
            n = int(lines[0][2:])
        except ValueError:
            raise ValueError(f"bad table header {lines[0]!r}") from None
        if not 0 <= n <= 24:
            raise ValueError(f"table size n={n} out of range")
        row = lines[1]
        if len(row) != 1 << n or set(row) - {"0", "1"}:
            raise ValueError(f"expected 2^{n} characters of 0/1")
        return cls(n, [c == "1" for c in row])

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(self.to_text())

    @classmethod
    def load(cls, path) -> "TruthTable":
        with open(path, "r", encoding="ascii") as fh:
            return cls.from_text(fh.read())

    def __repr__(self):
        return f"TruthTable(n={self.n}, weight={self.weight()})"


@dataclass(frozen=True)
class TraceTerm:
    """One summand tr_r(coeff * x^exponent), tr_r the GF(2^r) trace."""
    subfield_degree: int
    coeff: FieldElement
    exponent: int


class TraceForm:
    """A Boolean function given as a sum of subfield-trace monomials.

    Terms are (r, c, e) with r | n, c in the GF(2^r) subfield of the host
    field, and e * 2^r = e (mod 2^n - 1); those two conditions make
    sum_{i<r} (c x^e)^(2^i) a 0/1 value for every x, which is what tr_r
    means here.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: FieldSpec, terms):
        n = field.degree
        mask = field.mult_order
        checked = []
        for term in terms:
            r, c, e = (term.subfield_degree, term.coeff, term.exponent) \
                if isinstance(term, TraceTerm) else term
            if not isinstance(c, FieldElement) or c.field != field:
                raise ValueError("term coefficient must belong to the "
                                 "host field")
            if not 1 <= r <= n or n % r:
                raise ValueError(f"subfield degree {r} does not divide {n}")
            if not field.in_subfield_bits(c.bits, r):
                raise ValueError(
                    f"coefficient 0x{c.bits:x} is outside GF(2^{r})")
            e %= mask
            if (e << r) % mask != e:
                raise ValueError(
                    f"exponent {e} is not closed under the GF(2^{r}) "
                    f"Frobenius mod 2^{n}-1")
            checked.append(TraceTerm(r, c, e))
        self.field = field
        self.terms = tuple(checked)

    def truth_table(self) -> TruthTable:
        field = self.field
        n = field.degree
        size = 1 << n
        if field._exp is not None:
            out = np.zeros(size, dtype=np.uint8)
            order = field.mult_order
            logs = np.array(field._log[1:], dtype=np.int64)
            exps = np.array(field._exp, dtype=np.int64)
            for t in self.terms:
                # entries at non-subfield points are arbitrary bitmasks;
                # only subfield points (guaranteed by validation) are read
                tr = np.array(field.subfield_trace_table(t.subfield_degree),
                              dtype=np.int64)
                if t.coeff.bits == 0:
                    continue
                if t.exponent == 0:
                    # x^0 = 1 everywhere, including x = 0
                    out ^= np.uint8(tr[t.coeff.bits])
                    continue
                logc = field._log[t.coeff.bits]
                vals = tr[exps[(logs * t.exponent + logc) % order]]
                if vals.max() > 1:
                    raise AssertionError("trace term left the prime field")
                out[1:] ^= vals.astype(np.uint8)
            return TruthTable(n, out)
        vals = [0] * size
        for t in self.terms:
            r, c, e = t.subfield_degree, t.coeff.bits, t.exponent
            for x in range(size):
                y = field.mul_bits(c, field.pow_bits(x, e))
                acc = s = y
                for _ in range(r - 1):
                    s = field.mul_bits(s, s)
                    acc ^= s
                if acc > 1:
                    raise AssertionError("trace term left the prime field")
                vals[x] ^= acc
        return TruthTable(n, vals)

    def to_json(self) -> list:
        return [{"subfield": t.subfield_degree,
                 "coeff": f"0x{t.coeff.bits:x}",
                 "exponent": t.exponent} for t in self.terms]

    def __repr__(self):
        body = " + ".join(
            f"tr{t.subfield_degree}(0x{t.coeff.bits:x}*x^{t.exponent})"
            for t in self.terms) or "0"
        return f"TraceForm(GF(2^{self.field.degree}), {body})"


def _walsh_butterfly(signs: np.ndarray) -> np.ndarray:
    """In-place-free fast transform: out[c] = sum_x signs[x] (-1)^(c.x)."""
    a = signs.astype(np.int64, copy=True)
    h = 1
    size = a.shape[0]
    while h < size:
        a = a.reshape(-1, 2 * h)
        left = a[:, :h].copy()
        right = a[:, h:].copy()
        a[:, :h] = left + right
        a[:, h:] = left - right
        h *= 2
    return a.reshape(size)


def _xor_butterfly(bits: np.ndarray) -> np.ndarray:
    """Binary Moebius transform over the hypercube (an involution)."""
    a = bits.copy()
    h = 1
    size = a.shape[0]
    while h < size:
        a = a.reshape(-1, 2 * h)
        a[:, h:] ^= a[:, :h]
        h *= 2
    return a.reshape(size)


def _pairing_permutation(field: FieldSpec) -> np.ndarray:
    """perm[w] = bitmask of the Gram-matrix image M w, so that the
    coordinate pairing (M w).x equals the field pairing tr(w x)."""
    key = "walsh_perm"
    if key not in field._derived:
        rows = field.gram_rows()
        size = field.order
        perm = np.empty(size, dtype=np.int64)
        for w in range(size):
            img = 0
            for i, row in enumerate(rows):
                img |= ((row & w).bit_count() & 1) << i
            perm[w] = img
        field._derived[key] = perm
    return field._derived[key]


@dataclass(frozen=True)
class WalshSpectrum:
    """Exact Walsh coefficients, index w = bitmask of w."""
    n: int
    values: np.ndarray

    @property
    def bent(self) -> bool:
        if self.n % 2:
            return False
        flat = 1 << (self.n // 2)
        return bool(np.all(np.abs(self.values) == flat))

    def parseval(self) -> int:
        return int((self.values.astype(np.int64) ** 2).sum())

    def to_json(self) -> list:
        return [int(v) for v in self.values]


def walsh_spectrum(tt: TruthTable, field: FieldSpec | None = None
                   ) -> WalshSpectrum:
    """Exact spectrum.  Without a field, index c pairs by the coordinate
    dot product c.x; with one, index w pairs by tr(w x) (Gram reindex).
    """
    signs = 1 - 2 * tt.values.astype(np.int64)
    flat = _walsh_butterfly(signs)
    if field is not None:
        if field.degree != tt.n:
            raise ValueError("field degree does not match table size")
        flat = flat[_pairing_permutation(field)]
    if flat[0] != (1 << tt.n) - 2 * tt.weight():
        raise AssertionError("transform identity at w=0 failed")
    return WalshSpectrum(tt.n, flat)


def is_bent(tt: TruthTable) -> bool:
    """True iff every Walsh value is +-2^(n/2).  Needs even n."""
    if tt.n % 2:
        raise ValueError("bentness is defined for even n only")
    return walsh_spectrum(tt).bent


def anf(tt: TruthTable) -> np.ndarray:
    """Algebraic normal form coefficients: entry u is the coefficient of
    the monomial prod_{i in u} x_i."""
    return _xor_butterfly(tt.values)


def anf_degree(tt: TruthTable) -> int:
    """Algebraic degree; 0 for both constants."""
    coeffs = anf(tt)
    nz = np.nonzero(coeffs)[0]
    if nz.size == 0:
        return 0
    return max(int(u).bit_count() for u in nz)


def has_affine_coset_restrictions(tt: TruthTable, field: FieldSpec) -> bool:
    """Whether f restricted to every coset u GF(2^m) of the half-degree
    subfield is affine over GF(2) (n = 2m).

    Restrictions h(y) = f(u y) are affine iff the offset map
    y -> h(y) + h(0) is additive, so checking the second difference
    h(d+e)+h(d)+h(e)+h(0) = 0 over pairs of subfield points suffices.
    One representative u per multiplicative coset covers everything.
    """
    n = tt.n
    if n % 2:
        raise ValueError("coset restriction test needs n = 2m")
    if field.degree != n:
        raise ValueError("field degree does not match table size")
    m = n // 2
    sub = field.subfield_bits(m)
    pos = {y: i for i, y in enumerate(sub)}
    vals = tt.values
    mul = field.mul_bits
    u = 1
    g = field.generator
    for _ in range((1 << m) + 1):
        h = [int(vals[mul(u, y)]) for y in sub]
        h0 = h[0]
        for i in range(1, len(sub)):
            for j in range(i, len(sub)):
                if h[pos[sub[i] ^ sub[j]]] ^ h[i] ^ h[j] ^ h0:
                    return False
        u = mul(u, g)
    return True
