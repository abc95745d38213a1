"""Dense univariate polynomials over a ``FieldSpec``.

Coefficients are stored as a read-only numpy array of field codes in
ascending degree, with trailing zeros stripped (the zero polynomial has an
empty array and degree ``-inf``).
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .gf import FieldElement, FieldError, FieldSpec, is_in_subfield

NEG_INF = -math.inf


def _codes(field: FieldSpec, coeffs) -> np.ndarray:
    if isinstance(coeffs, np.ndarray):
        arr = coeffs.astype(np.int64, copy=True)
    else:
        vals = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise FieldError("coefficient belongs to a different field")
                vals.append(c.value)
            else:
                vals.append(int(c))
        arr = np.array(vals, dtype=np.int64)
    if arr.size and (arr.min() < 0 or arr.max() >= field.order):
        raise FieldError("coefficient code out of range")
    nz = np.flatnonzero(arr)
    arr = arr[: nz[-1] + 1] if nz.size else arr[:0]
    arr.setflags(write=False)
    return arr


class Poly:
    """Polynomial with coefficients (integer field codes) in ``field``."""

    __slots__ = ("field", "codes")

    def __init__(self, field: FieldSpec, coeffs: Iterable = ()):
        self.field = field
        self.codes = _codes(field, coeffs)

    @classmethod
    def zero(cls, field: FieldSpec) -> Poly:
        return cls(field)

    @classmethod
    def one(cls, field: FieldSpec) -> Poly:
        return cls(field, [1])

    @classmethod
    def monomial(cls, field: FieldSpec, degree: int, coeff=1) -> Poly:
        c = coeff.value if isinstance(coeff, FieldElement) else int(coeff)
        arr = np.zeros(degree + 1, dtype=np.int64)
        arr[degree] = c
        return cls(field, arr)

    @classmethod
    def from_sparse(cls, field: FieldSpec, terms: dict[int, int], length: int | None = None) -> Poly:
        size = length if length is not None else (max(terms) + 1 if terms else 0)
        arr = np.zeros(size, dtype=np.int64)
        for k, c in terms.items():
            arr[k] = c.value if isinstance(c, FieldElement) else c
        return cls(field, arr)

    # -- basic properties

    @property
    def degree(self):
        return len(self.codes) - 1 if len(self.codes) else NEG_INF

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, int(c)) for c in self.codes)

    def coeff(self, i: int) -> FieldElement:
        v = int(self.codes[i]) if 0 <= i < len(self.codes) else 0
        return FieldElement(self.field, v)

    def is_zero(self) -> bool:
        return len(self.codes) == 0

    @property
    def leading(self) -> FieldElement:
        if self.is_zero():
            raise FieldError("zero polynomial has no leading coefficient")
        return FieldElement(self.field, int(self.codes[-1]))

    def is_monic(self) -> bool:
        return not self.is_zero() and int(self.codes[-1]) == 1

    def monic(self) -> Poly:
        return self.scale(self.leading.inverse())

    def padded(self, length: int) -> np.ndarray:
        """Coefficient codes zero-padded to ``length``."""
        if len(self.codes) > length:
            raise ValueError(f"degree {self.degree} does not fit in length {length}")
        out = np.zeros(length, dtype=np.int64)
        out[: len(self.codes)] = self.codes
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poly) and self.field == other.field
                and np.array_equal(self.codes, other.codes))

    def __hash__(self) -> int:
        return hash((self.field, self.codes.tobytes()))

    def __repr__(self) -> str:
        return f"Poly({self.field.p}^{self.field.e}: {self})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(len(self.codes) - 1, -1, -1):
            c = int(self.codes[k])
            if not c:
                continue
            cs = str(c) if self.field.e == 1 else "[" + ",".join(map(str, self.field.coords(c))) + "]"
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if c == 1 and k:
                terms.append(mono)
            else:
                terms.append(cs + mono)
        return " + ".join(terms)

    # -- ring operations

    def _check(self, other: Poly):
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldError("polynomials over different fields")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        size = max(len(self.codes), len(other.codes))
        return Poly(self.field, self.field.add(self.padded(size), other.padded(size)))

    def __neg__(self) -> Poly:
        return Poly(self.field, self.field.neg(self.codes))

    def __sub__(self, other: Poly) -> Poly:
        self._check(other)
        return self + (-other)

    def scale(self, c) -> Poly:
        v = c.value if isinstance(c, FieldElement) else int(c)
        return Poly(self.field, self.field.mul(self.codes, v))

    def __mul__(self, other) -> Poly:
        if isinstance(other, (FieldElement, int, np.integer)):
            return self.scale(other)
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        a, b = self.codes, other.codes
        if len(a) > len(b):
            a, b = b, a
        out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
        f = self.field
        for i in np.flatnonzero(a):
            seg = out[i:i + len(b)]
            out[i:i + len(b)] = f.add(seg, f.mul(a[i], b))
        return Poly(f, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> Poly:
        """Multiply by ``x^k``."""
        if self.is_zero():
            return self
        return Poly(self.field, np.concatenate([np.zeros(k, dtype=np.int64), self.codes]))

    def divrem(self, divisor: Poly) -> tuple[Poly, Poly]:
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = np.array(self.codes, dtype=np.int64)
        d = divisor.codes
        dd = len(d) - 1
        if len(rem) - 1 < dd:
            return Poly.zero(f), self
        lead_inv = int(f.inv(d[-1]))
        quo = np.zeros(len(rem) - dd, dtype=np.int64)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = int(rem[k])
            if not c:
                continue
            t = int(f.mul(c, lead_inv))
            quo[k - dd] = t
            rem[k - dd:k + 1] = f.sub(rem[k - dd:k + 1], f.mul(t, d))
        return Poly(f, quo), Poly(f, rem[:dd])

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divrem(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divrem(other)[1]

    def divides(self, other: Poly) -> bool:
        return (other % self).is_zero()

    # -- evaluation

    def eval_codes(self, points) -> np.ndarray:
        """Evaluate at an array of field codes; returns codes of the same shape."""
        f = self.field
        pts = np.asarray(points, dtype=np.int64)
        if self.is_zero():
            return np.zeros(pts.shape, dtype=np.int64)
        out = np.zeros(pts.shape, dtype=np.int64)
        for c in self.codes[::-1]:
            out = f.add(f.mul(out, pts), int(c))
        return out

    def __call__(self, x: FieldElement) -> FieldElement:
        if x.field != self.field:
            raise FieldError("evaluation point belongs to a different field")
        return FieldElement(self.field, int(self.eval_codes(x.value)))

    def weight(self) -> int:
        return int(np.count_nonzero(self.codes))

    def to_json(self) -> list[list[int]]:
        return [list(self.field.coords(int(c))) for c in self.codes]

    @classmethod
    def from_json(cls, field: FieldSpec, data) -> Poly:
        return cls(field, [field.from_coeffs(c) for c in data])


def add(a: Poly, b: Poly) -> Poly:
    return a + b


def mul(a: Poly, b: Poly) -> Poly:
    return a * b


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return a.divrem(b)


def evaluate(f: Poly, x: FieldElement) -> FieldElement:
    return f(x)


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


def weight(f: Poly) -> int:
    return f.weight()


def product_from_roots(field: FieldSpec, roots: Sequence) -> Poly:
    """Monic ``prod (x - r)`` over the multiset ``roots`` (codes or elements)."""
    vals = [r.value if isinstance(r, FieldElement) else int(r) for r in roots]
    out = np.ones(1, dtype=np.int64)
    for r in vals:
        nxt = np.zeros(len(out) + 1, dtype=np.int64)
        nxt[1:] = out
        nxt[:-1] = field.sub(nxt[:-1], field.mul(r, out))
        out = nxt
    return Poly(field, out)


def reciprocal(f: Poly) -> Poly:
    """``x^deg f * f(1/x)``: coefficient list reversed."""
    if f.is_zero():
        return f
    return Poly(f.field, f.codes[::-1])


def monic_reciprocal(f: Poly) -> Poly:
    """Reciprocal scaled by the inverse of the constant term."""
    if f.is_zero() or int(f.codes[0]) == 0:
        raise FieldError("monic reciprocal needs a nonzero constant term")
    return reciprocal(f).scale(f.coeff(0).inverse())


def is_over_subfield(f: Poly, q: int) -> bool:
    """True iff every coefficient lies in the subfield of order ``q``."""
    one = FieldElement(f.field, 1)
    is_in_subfield(one, q)  # validates q
    return bool(np.all(f.field.power(f.codes, q) == f.codes))


def x_n_minus(field: FieldSpec, n: int, lam) -> Poly:
    """``x^n - lam``."""
    lv = lam.value if isinstance(lam, FieldElement) else int(lam)
    arr = np.zeros(n + 1, dtype=np.int64)
    arr[n] = 1
    arr[0] = int(field.neg(lv))
    return Poly(field, arr)
