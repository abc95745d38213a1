"""Constacyclic codes over ``F_q`` computed inside one splitting field.

A code is described by its length ``n``, the subfield order ``q``, the big
field ``F_{q^s}`` holding every root of ``x^n - lambda``, an exponent
``theta_exp`` with ``theta = pi^theta_exp`` (``pi`` the big-field generator)
and the set ``R`` of exponents ``i`` with ``g(theta * alpha^i) = 0`` where
``alpha = pi^((q^s - 1)/n)``.  Words are numpy arrays of big-field codes whose
entries lie in the subfield.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .gf import (FieldElement, FieldError, FieldSpec, field_from_json, field_to_json,
                 make_field, prime_power, subfield_mask)
from .poly import Poly, monic_reciprocal, product_from_roots, x_n_minus


class CodeError(ValueError):
    """Invalid code parameters, inconsistent code data or a bad word."""


def multiplicative_order(q: int, n: int) -> int:
    if math.gcd(q, n) != 1:
        raise CodeError(f"gcd({q}, {n}) != 1")
    if n == 1:
        return 1
    k, v = 1, q % n
    while v != 1:
        v = v * q % n
        k += 1
    return k


@dataclass(frozen=True, eq=False)
class ConstacyclicCode:
    big_field: FieldSpec
    q: int
    n: int
    theta_exp: int
    root_exponents: tuple[int, ...]
    g: Poly

    @property
    def p(self) -> int:
        return self.big_field.p

    @property
    def base(self) -> FieldSpec:
        """The prime field ``F_p``."""
        return make_field(self.p, 1)

    @property
    def alpha_exp(self) -> int:
        return self.big_field.n_mult // self.n

    @property
    def s(self) -> int:
        """Multiplicative order of q modulo n."""
        return multiplicative_order(self.q, self.n)

    @property
    def k(self) -> int:
        return self.n - len(self.root_exponents)

    @cached_property
    def lam(self) -> FieldElement:
        return FieldElement(self.big_field, int(self.big_field.exp(self.theta_exp * self.n)))

    @property
    def is_cyclic(self) -> bool:
        return self.lam.value == 1

    @cached_property
    def subfield_codes_mask(self) -> np.ndarray:
        return subfield_mask(self.big_field, self.q)

    def root_log(self, exps) -> np.ndarray:
        """Discrete logs of ``theta * alpha^i``."""
        e = np.asarray(exps, dtype=np.int64)
        return (self.theta_exp + e * self.alpha_exp) % self.big_field.n_mult

    def root_codes(self, exps) -> np.ndarray:
        return self.big_field.exp(self.root_log(exps))

    def frobenius_image(self, i: int) -> int:
        """Exponent ``i'`` with ``(theta alpha^i)^q = theta alpha^i'``."""
        return (self.q * i + self._frobenius_shift) % self.n

    @cached_property
    def _frobenius_shift(self) -> int:
        num = (self.q - 1) * self.theta_exp
        return (num // self.alpha_exp) % self.n

    @cached_property
    def orbits(self) -> tuple[tuple[int, ...], ...]:
        """Frobenius orbits of the root set, each sorted, ordered by minimum."""
        left = set(self.root_exponents)
        out = []
        while left:
            i = min(left)
            orb = [i]
            j = self.frobenius_image(i)
            while j != i:
                orb.append(j)
                j = self.frobenius_image(j)
            left -= set(orb)
            out.append(tuple(sorted(orb)))
        return tuple(out)

    @property
    def orbit_representatives(self) -> tuple[int, ...]:
        return tuple(o[0] for o in self.orbits)

    def in_subfield(self, word) -> bool:
        return bool(np.all(self.subfield_codes_mask[np.asarray(word, dtype=np.int64)]))

    def __repr__(self) -> str:
        return (f"ConstacyclicCode(q={self.q}, n={self.n}, k={self.k}, "
                f"lambda={self.lam.value}, deg g={self.g.degree})")


def build_code(big_field: FieldSpec, base_q: int, n: int, theta_exp: int,
               root_exponents: Sequence[int]) -> ConstacyclicCode:
    """Form ``g = prod_{i in R} (x - theta alpha^i)`` and check it lies in F_q[x]."""
    try:
        p, d = prime_power(base_q)
    except FieldError as exc:
        raise CodeError(str(exc)) from None
    if p != big_field.p or big_field.e % d:
        raise CodeError(f"F_{base_q} is not a subfield of F_{big_field.p}^{big_field.e}")
    if n < 1 or math.gcd(n, base_q) != 1:
        raise CodeError(f"gcd(n, q) = gcd({n}, {base_q}) != 1")
    N = big_field.n_mult
    if N % n:
        raise CodeError(f"n = {n} does not divide {N}: no primitive n-th root in the big field")
    lam = int(big_field.exp(theta_exp * n))
    if int(big_field.power(lam, base_q)) != lam:
        raise CodeError("theta^n does not lie in F_q")
    roots = sorted({int(i) % n for i in root_exponents})
    if not roots:
        raise CodeError("root set is empty")
    proto = ConstacyclicCode(big_field, base_q, n, theta_exp % N, tuple(roots), Poly.one(big_field))
    g = product_from_roots(big_field, proto.root_codes(roots))
    mask = subfield_mask(big_field, base_q)
    if not np.all(mask[g.codes]):
        raise CodeError("generator has a coefficient outside F_q (root set not Frobenius-closed)")
    return ConstacyclicCode(big_field, base_q, n, theta_exp % N, tuple(roots), g)


def x_n_minus_lambda(code: ConstacyclicCode) -> Poly:
    return x_n_minus(code.big_field, code.n, code.lam)


def check_parity_polynomial(code: ConstacyclicCode) -> Poly:
    """``h = (x^n - lambda) / g``, asserting exact division."""
    h, r = x_n_minus_lambda(code).divrem(code.g)
    if not r.is_zero():
        raise CodeError("g does not divide x^n - lambda")
    return h


def dual_generator(code: ConstacyclicCode) -> tuple[Poly, FieldElement]:
    """Generator of the dual code and its shift constant ``lambda^{-1}``."""
    h = check_parity_polynomial(code)
    return monic_reciprocal(h), code.lam.inverse()


def _as_word(code: ConstacyclicCode, word) -> np.ndarray:
    if isinstance(word, Poly):
        if word.field != code.big_field:
            raise CodeError("word polynomial lives in a different field")
        return word.padded(code.n)
    arr = np.asarray(word, dtype=np.int64)
    if arr.shape != (code.n,):
        raise CodeError(f"word length {arr.shape} does not match n = {code.n}")
    return arr


def constacyclic_shift(word, code: ConstacyclicCode) -> np.ndarray:
    """``(lambda c_{n-1}, c_0, ..., c_{n-2})``."""
    w = _as_word(code, word)
    out = np.roll(w, 1)
    out[0] = int(code.big_field.mul(code.lam.value, w[-1]))
    return out


def encode(code: ConstacyclicCode, message) -> np.ndarray:
    """Non-systematic encoding ``m(x) g(x)``; ``message`` has length <= k."""
    if isinstance(message, Poly):
        m = message
    else:
        m = Poly(code.big_field, np.asarray(message, dtype=np.int64))
    if not m.is_zero() and m.degree >= code.k:
        raise CodeError(f"message degree {m.degree} >= k = {code.k}")
    if not m.is_zero() and not code.in_subfield(m.codes):
        raise CodeError("message symbols must lie in F_q")
    return (m * code.g).padded(code.n)


def generator_matrix(code: ConstacyclicCode) -> np.ndarray:
    """Rows ``x^i g(x)`` for ``i < k`` (no wrap-around since deg < n)."""
    G = np.zeros((code.k, code.n), dtype=np.int64)
    deg = len(code.g.codes)
    for i in range(code.k):
        G[i, i:i + deg] = code.g.codes
    return G


def evaluation_matrix(code: ConstacyclicCode, exps: Sequence[int]) -> np.ndarray:
    """``M[r, j] = (theta alpha^{exps[r]})^j`` as big-field codes."""
    f = code.big_field
    logs = code.root_log(exps)
    j = np.arange(code.n, dtype=np.int64)
    return f.exp(logs[:, None] * j[None, :])


def syndromes(code: ConstacyclicCode, word, exps: Sequence[int]) -> np.ndarray:
    """``c(theta alpha^i)`` for each ``i`` in ``exps``."""
    w = _as_word(code, word)
    H = evaluation_matrix(code, exps)
    return code.big_field.dot(H, w[None, :], axis=-1)


def is_codeword(code: ConstacyclicCode, word, method: str = "divide") -> bool:
    """Membership of an F_q-word: ``g | c(x)`` or vanishing at orbit representatives."""
    w = _as_word(code, word)
    if not code.in_subfield(w):
        return False
    if method == "divide":
        return (Poly(code.big_field, w) % code.g).is_zero()
    if method == "roots":
        return bool(np.all(syndromes(code, w, code.orbit_representatives) == 0))
    raise ValueError(f"unknown membership method {method!r}")


def parity_check_columns(code: ConstacyclicCode, row_exponents: Sequence[int] | None = None) -> np.ndarray:
    """Evaluation-form parity check restricted to ``row_exponents``.

    Rows must contain one exponent from every Frobenius orbit of the root set,
    which suffices for F_q-words.
    """
    rows = list(code.orbit_representatives if row_exponents is None else row_exponents)
    roots = set(code.root_exponents)
    if any(r % code.n not in roots for r in rows):
        raise CodeError("row exponents must lie in the root set")
    covered = {o for o in code.orbits if any(r % code.n in o for r in rows)}
    if len(covered) != len(code.orbits):
        raise CodeError("row exponents do not cover every Frobenius orbit")
    return evaluation_matrix(code, rows)


# -- serialisation

def code_to_json(code: ConstacyclicCode, claims: dict | None = None) -> dict:
    out = {
        "base": field_to_json(code.base),
        "q": code.q,
        "big_field": field_to_json(code.big_field),
        "n": code.n,
        "theta_exp": code.theta_exp,
        "lambda": code.lam.to_json(),
        "g": code.g.to_json(),
        "roots": list(code.root_exponents),
    }
    if claims is not None:
        out["claims"] = claims
    return out


def code_from_json(data: dict) -> tuple[ConstacyclicCode, dict | None]:
    """Rebuild a code from its JSON form, checking every stored quantity."""
    try:
        big = field_from_json(data["big_field"])
        base = field_from_json(data["base"])
        q, n, theta_exp = int(data["q"]), int(data["n"]), int(data["theta_exp"])
        roots = [int(i) for i in data["roots"]]
        g_stored = Poly.from_json(big, data["g"])
        lam_stored = big.from_coeffs(data["lambda"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CodeError(f"malformed code file: {exc}") from None
    if base.e != 1 or base.p != big.p:
        raise CodeError("base field must be the prime field of the big field")
    if sorted(set(roots)) != roots or any(not 0 <= i < n for i in roots):
        raise CodeError("roots must be sorted, distinct and in [0, n)")
    code = build_code(big, q, n, theta_exp, roots)
    if code.g != g_stored:
        raise CodeError("stored generator does not match the root set")
    if code.lam != lam_stored:
        raise CodeError("stored lambda does not match theta^n")
    return code, data.get("claims")


def save_code(code: ConstacyclicCode, path, claims: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(code_to_json(code, claims), fh)
        fh.write("\n")


def load_code(path) -> tuple[ConstacyclicCode, dict | None]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise CodeError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise CodeError(f"{path}: expected a JSON object")
    return code_from_json(data)
