"""Prime-power finite fields with table-driven arithmetic.

An element of ``F_{p^e}`` is encoded as the integer ``sum(c_i * p**i)``
where ``(c_0, ..., c_{e-1})`` are its coordinates in the polynomial basis
``1, x, ..., x^{e-1}`` of ``F_p[x]/(modulus)``.  The modulus is always
primitive, so the class of ``x`` generates the multiplicative group and
exp/log/Zech tables give O(1) arithmetic.  All vectorised operations on
``FieldSpec`` accept and return numpy integer arrays of such codes.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

FIELD_SIZE_CAP = 1 << 24
_EXHAUSTIVE_LOG_LIMIT = 1 << 16


class FieldError(ValueError):
    """Invalid field parameters or an illegal field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorisation (adequate for n <= 2^24)."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, d)`` with ``q = p**d``, or raise FieldError."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise FieldError(f"{q} is not a prime power")
    (p, d), = fac.items()
    return p, d


# -- plain polynomial arithmetic over F_p on coefficient lists (low degree first)

def _mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    e = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for j in range(e + 1):
                prod[k - e + j] = (prod[k - e + j] - c * mod[j]) % p
    out = prod[:e]
    return out + [0] * (e - len(out))


def _x_power_mod(k: int, mod: list[int], p: int) -> list[int]:
    e = len(mod) - 1
    result = [1] + [0] * (e - 1)
    base = _mulmod([0, 1], [1], mod, p) if e > 1 else [(-mod[0]) % p]
    while k:
        if k & 1:
            result = _mulmod(result, base, mod, p)
        base = _mulmod(base, base, mod, p)
        k >>= 1
    return result


def _is_primitive_modulus(mod: list[int], p: int) -> bool:
    e = len(mod) - 1
    if mod[0] % p == 0:
        return False
    n_mult = p**e - 1
    one = [1] + [0] * (e - 1)
    if _x_power_mod(n_mult, mod, p) != one:
        return False
    return all(_x_power_mod(n_mult // ell, mod, p) != one for ell in factorize(n_mult))


class _Tables:
    __slots__ = ("exp", "log", "zech", "log_minus_one")

    def __init__(self, p: int, e: int, modulus: tuple[int, ...]):
        order = p**e
        n_mult = order - 1
        # companion matrix of multiplication by x on coordinate vectors
        comp = np.zeros((e, e), dtype=np.int64)
        for j in range(e - 1):
            comp[j + 1, j] = 1
        comp[:, e - 1] = [(-c) % p for c in modulus[:e]]
        weights = p ** np.arange(e, dtype=np.int64)
        codes = np.zeros(n_mult, dtype=np.int64)
        vec = np.zeros(e, dtype=np.int64)
        vec[0] = 1
        head = min(n_mult, 256)
        for i in range(head):
            codes[i] = vec @ weights
            vec = comp @ vec % p
        filled = head
        while filled < n_mult:
            # g^(filled + i) = C^filled g^i, applied blockwise to bound memory;
            # float matmul is exact here (e * p^2 < 2^53) and uses BLAS
            step = _matpow(comp, filled, p).T.astype(np.float64)
            take = min(filled, n_mult - filled)
            for lo in range(0, take, 1 << 16):
                hi = min(take, lo + (1 << 16))
                digits = (codes[lo:hi, None] // weights) % p
                block = (digits.astype(np.float64) @ step).astype(np.int64) % p
                codes[filled + lo:filled + hi] = block @ weights
            filled += take
        log = np.full(order, -1, dtype=np.int64)
        log[codes] = np.arange(n_mult, dtype=np.int64)
        if np.count_nonzero(log >= 0) != n_mult:
            raise FieldError("modulus is not primitive")
        self.exp = np.concatenate([codes, codes]).astype(np.int64)
        low = codes % p
        plus_one = codes - low + (low + 1) % p
        self.zech = log[plus_one]
        self.log_minus_one = 0 if p == 2 else n_mult // 2
        self.log = log


def _matpow(m: np.ndarray, k: int, p: int) -> np.ndarray:
    result = np.eye(m.shape[0], dtype=np.int64)
    base = m.copy()
    while k:
        if k & 1:
            result = result @ base % p
        base = base @ base % p
        k >>= 1
    return result


@dataclass(frozen=True)
class FieldSpec:
    """``F_{p^e}`` presented by a primitive monic ``modulus`` (ascending degree)."""

    p: int
    e: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"p = {self.p} is not prime")
        if self.e < 1:
            raise FieldError(f"extension degree must be >= 1, got {self.e}")
        if self.p**self.e > FIELD_SIZE_CAP:
            raise FieldError(f"field of size {self.p}^{self.e} exceeds cap {FIELD_SIZE_CAP}")
        mod = tuple(int(c) for c in self.modulus)
        if len(mod) != self.e + 1 or mod[-1] != 1 or any(not 0 <= c < self.p for c in mod):
            raise FieldError(f"modulus {mod} is not monic of degree {self.e} over F_{self.p}")
        object.__setattr__(self, "modulus", mod)

    def __reduce__(self):
        return (FieldSpec, (self.p, self.e, self.modulus))

    @property
    def order(self) -> int:
        return self.p**self.e

    @property
    def n_mult(self) -> int:
        """Order of the multiplicative group."""
        return self.p**self.e - 1

    @functools.cached_property
    def tables(self) -> _Tables:
        return _Tables(self.p, self.e, self.modulus)

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, e={self.e}, modulus={list(self.modulus)})"

    # -- element construction

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        return FieldElement(self, int(value))

    def from_coeffs(self, coeffs: Iterable[int]) -> FieldElement:
        coeffs = list(coeffs)
        if len(coeffs) != self.e:
            raise FieldError(f"expected {self.e} coordinates, got {len(coeffs)}")
        if any(not 0 <= c < self.p for c in coeffs):
            raise FieldError("coordinates must lie in [0, p)")
        return FieldElement(self, sum(c * self.p**i for i, c in enumerate(coeffs)))

    def from_int(self, n: int) -> FieldElement:
        """The prime-subfield element ``n * 1``."""
        return FieldElement(self, n % self.p)

    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def coords(self, code: int) -> tuple[int, ...]:
        return tuple((int(code) // self.p**i) % self.p for i in range(self.e))

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    # -- vectorised arithmetic on integer codes

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        t = self.tables
        la, lb = t.log[a], t.log[b]
        z = t.zech[(lb - la) % self.n_mult]
        out = np.where(z < 0, 0, t.exp[la + np.maximum(z, 0)])
        return np.where(a == 0, b, np.where(b == 0, a, out))

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        t = self.tables
        return np.where(a == 0, 0, t.exp[t.log[a] + t.log_minus_one])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        t = self.tables
        out = t.exp[t.log[a] + t.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError("inverse of zero in a finite field")
        t = self.tables
        return t.exp[(self.n_mult - t.log[a]) % self.n_mult]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, k):
        """``a**k`` elementwise; ``k`` may be an integer array and negative."""
        a = np.asarray(a, dtype=np.int64)
        k = np.asarray(k, dtype=np.int64)
        if np.any((a == 0) & (k < 0)):
            raise ZeroDivisionError("negative power of zero")
        t = self.tables
        out = t.exp[(t.log[a] * (k % self.n_mult)) % self.n_mult]
        return np.where(a == 0, np.where(k == 0, 1, 0), out)

    def exp(self, k):
        """``generator**k`` for integer (array) ``k``."""
        return self.tables.exp[np.asarray(k, dtype=np.int64) % self.n_mult]

    def log(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldError("zero has no discrete logarithm")
        return self.tables.log[a]

    def sum(self, a, axis=-1):
        """Field sum along ``axis`` (digit-wise addition mod p)."""
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        total = 0
        for i in range(self.e):
            scale = self.p**i
            total = total + (a // scale % self.p).sum(axis=axis) % self.p * scale
        return np.asarray(total, dtype=np.int64)

    def dot(self, a, b, axis=-1):
        return self.sum(self.mul(a, b), axis=axis)


@functools.lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldSpec:
    """Canonical ``F_{p^e}``.

    The modulus is the first primitive monic polynomial of degree ``e`` when
    the non-leading coefficients are read as a base-``p`` integer with the
    constant term least significant (so ``x^4 + x + 1`` precedes
    ``x^4 + x^3 + 1`` over ``F_2``).
    """
    if not is_prime(p):
        raise FieldError(f"p = {p} is not prime")
    if e < 1:
        raise FieldError(f"extension degree must be >= 1, got {e}")
    if p**e > FIELD_SIZE_CAP:
        raise FieldError(f"field of size {p}^{e} exceeds cap {FIELD_SIZE_CAP}")
    for v in range(1, p**e):
        low = [(v // p**i) % p for i in range(e)]
        mod = low + [1]
        if _is_primitive_modulus(mod, p):
            return FieldSpec(p, e, tuple(mod))
    raise FieldError(f"no primitive polynomial found for F_{p}^{e}")  # unreachable


def field_of_order(q: int) -> FieldSpec:
    p, d = prime_power(q)
    return make_field(p, d)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise FieldError(f"code {self.value} out of range for {self.field}")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coords(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("operands belong to different fields")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def _wrap(self, code) -> FieldElement:
        return FieldElement(self.field, int(code))

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, k: int):
        return self._wrap(self.field.power(self.value, int(k)))

    def inverse(self) -> FieldElement:
        return self._wrap(self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def is_zero(self) -> bool:
        return self.value == 0

    def order(self) -> int:
        """Multiplicative order."""
        n = self.field.n_mult
        return n // math.gcd(discrete_log(self), n)

    def __repr__(self) -> str:
        if self.field.e == 1:
            return f"{self.value} (mod {self.field.p})"
        return f"GF({self.field.p}^{self.field.e})[{list(self.coeffs)}]"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def inv(x: FieldElement) -> FieldElement:
    return x.inverse()


def generator(spec: FieldSpec) -> FieldElement:
    """The class of ``x``; a primitive element because the modulus is primitive."""
    return FieldElement(spec, int(spec.tables.exp[1]))


def discrete_log(x: FieldElement) -> int:
    """Exponent ``k`` in ``[0, p^e - 1)`` with ``generator**k == x``."""
    if x.value == 0:
        raise FieldError("zero has no discrete logarithm")
    return int(x.field.tables.log[x.value])


# -- table-free arithmetic, used as an independent check on the tables

def mul_polynomial_basis(spec: FieldSpec, a: int, b: int) -> int:
    """Multiply two codes by schoolbook multiplication modulo the modulus."""
    prod = _mulmod(list(spec.coords(a)), list(spec.coords(b)), list(spec.modulus), spec.p)
    return sum(c * spec.p**i for i, c in enumerate(prod))


def baby_step_giant_step(x: FieldElement) -> int:
    """Discrete log of ``x`` using only polynomial-basis multiplication.

    Falls back to an exhaustive scan for fields below 2^16 elements.
    """
    spec = x.field
    if x.value == 0:
        raise FieldError("zero has no discrete logarithm")
    p_gen = spec.p if spec.e > 1 else (-spec.modulus[0]) % spec.p
    n = spec.n_mult
    if spec.order < _EXHAUSTIVE_LOG_LIMIT:
        cur = 1
        for k in range(n):
            if cur == x.value:
                return k
            cur = mul_polynomial_basis(spec, cur, p_gen)
        raise FieldError("element not in the multiplicative group")  # unreachable
    m = math.isqrt(n) + 1
    baby: dict[int, int] = {}
    cur = 1
    for j in range(m):
        baby.setdefault(cur, j)
        cur = mul_polynomial_basis(spec, cur, p_gen)
    # giant step factor g^{-m} = g^{n-m}
    step = 1
    base, k = p_gen, n - m
    while k:
        if k & 1:
            step = mul_polynomial_basis(spec, step, base)
        base = mul_polynomial_basis(spec, base, base)
        k >>= 1
    gamma = x.value
    for i in range(m):
        if gamma in baby:
            return (i * m + baby[gamma]) % n
        gamma = mul_polynomial_basis(spec, gamma, step)
    raise FieldError("discrete logarithm not found")  # unreachable


def _subfield_degree(spec: FieldSpec, q: int) -> int:
    try:
        p, d = prime_power(q)
    except FieldError:
        raise FieldError(f"{q} is not a subfield order of F_{spec.p}^{spec.e}") from None
    if p != spec.p or spec.e % d:
        raise FieldError(f"{q} is not a subfield order of F_{spec.p}^{spec.e}")
    return d


def is_in_subfield(x: FieldElement, q: int) -> bool:
    _subfield_degree(x.field, q)
    return x**q == x


def subfield_mask(spec: FieldSpec, q: int) -> np.ndarray:
    """Boolean mask over all codes: True on the subfield of order ``q``."""
    _subfield_degree(spec, q)
    codes = spec.elements()
    return spec.power(codes, q) == codes


def subfield_codes(spec: FieldSpec, q: int) -> np.ndarray:
    """Codes of the subfield of order ``q``: 0 followed by powers of its generator."""
    _subfield_degree(spec, q)
    step = spec.n_mult // (q - 1)
    return np.concatenate([[0], spec.exp(np.arange(q - 1) * step)]).astype(np.int64)


class SubfieldEmbedding:
    """Field isomorphism from ``base = F_q`` onto ``{x in big : x^q = x}``.

    The base generator is sent to the root of the base modulus in ``big``
    with the smallest discrete logarithm.
    """

    def __init__(self, base: FieldSpec, big: FieldSpec):
        if base.p != big.p or big.e % base.e:
            raise FieldError(f"F_{base.p}^{base.e} does not embed in F_{big.p}^{big.e}")
        self.base, self.big = base, big
        q = base.order
        step = big.n_mult // (q - 1)
        image = None
        for j in range(1, q - 1 if q > 2 else 2):
            if q > 2 and math.gcd(j, q - 1) != 1:
                continue
            cand = int(big.exp(j * step)) if q > 2 else 1
            val = 0
            for c in reversed(base.modulus):
                val = int(big.add(big.mul(val, cand), c))
            if val == 0:
                image = cand
                break
        if image is None:
            raise FieldError("no root of the base modulus found in the big field")
        self.generator_image = image
        # base code -> big code, via discrete logs
        fwd = np.zeros(base.order, dtype=np.int64)
        nz = np.arange(1, base.order)
        fwd[nz] = big.power(image, base.tables.log[nz])
        self.forward = fwd
        back = np.full(big.order, -1, dtype=np.int64)
        back[fwd] = np.arange(base.order)
        self.backward = back

    def __call__(self, x: FieldElement) -> FieldElement:
        return self.to_big(x)

    def to_big(self, x: FieldElement) -> FieldElement:
        if x.field != self.base:
            raise FieldError("element is not in the base field")
        return FieldElement(self.big, int(self.forward[x.value]))

    def to_base(self, y: FieldElement) -> FieldElement:
        if y.field != self.big:
            raise FieldError("element is not in the big field")
        v = int(self.backward[y.value])
        if v < 0:
            raise FieldError("element does not lie in the subfield")
        return FieldElement(self.base, v)


def subfield_embedding(base: FieldSpec, big: FieldSpec) -> SubfieldEmbedding:
    return SubfieldEmbedding(base, big)


def trace_to_prime(x: FieldElement) -> FieldElement:
    """Absolute trace ``x + x^p + ... + x^{p^{e-1}}`` (lands in F_p)."""
    spec = x.field
    powers = spec.power(x.value, np.array([spec.p**i for i in range(spec.e)], dtype=np.int64))
    return FieldElement(spec, int(spec.sum(powers)))


def solve_quadratic(a1: FieldElement, a0: FieldElement) -> list[FieldElement]:
    """Roots of ``x^2 + a1 x + a0`` in the field of the coefficients, by scan."""
    if a1.field != a0.field:
        raise FieldError("coefficients belong to different fields")
    spec = a1.field
    xs = spec.elements()
    vals = spec.add(spec.add(spec.mul(xs, xs), spec.mul(a1.value, xs)), a0.value)
    return [FieldElement(spec, int(c)) for c in xs[vals == 0]]


def element_to_json(x: FieldElement) -> list[int]:
    return x.to_json()


def element_from_json(spec: FieldSpec, data) -> FieldElement:
    return spec.from_coeffs(data)


def field_to_json(spec: FieldSpec) -> dict:
    return {"p": spec.p, "e": spec.e, "modulus": list(spec.modulus)}


def field_from_json(data: dict) -> FieldSpec:
    try:
        spec = FieldSpec(int(data["p"]), int(data["e"]), tuple(int(c) for c in data["modulus"]))
    except (KeyError, TypeError) as exc:
        raise FieldError(f"malformed field description: {exc}") from None
    if not _is_primitive_modulus(list(spec.modulus), spec.p):
        raise FieldError(f"modulus {list(spec.modulus)} is not primitive")
    return spec
