"""Explicit (consta)cyclic LRC families with r = 2 and their weight-5 witnesses.

Families
--------
``thm_even``      q even, 3 | q-1, n = 3(q+1), (k, d) = (2q-1, 6)
``prop3``         same recipe for odd q with 3 | q-1; d drops to 5
``thm_odd``       q = 1 mod 4, 3 | q-1, n = 3(q+1)/2, (k, d) = (q-2, 6)
``remark_odd``    q odd, 3 | q-1, n = 3b where b is the odd part of q+1
``thm3``          q >= 4 even, 3 | q+1, m even, gcd(m, q-1) = 1,
                  n = (q^m-1)/(q-1), cyclic, (k, d) = (2n/3 - m, 5), perfect
``thm4``          q > 2, 3 | q+1, m even, same n, lambda-constacyclic, perfect

Every builder recomputes the root-exponent set from the defining roots (via
discrete logs) and hands it to ``build_code``; nothing downstream relies on
closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .codes import ConstacyclicCode, CodeError, build_code, is_codeword
from .gf import FieldElement, FieldError, FieldSpec, make_field, prime_power, solve_quadratic
from .poly import Poly

FAMILIES = ("thm_even", "prop3", "thm_odd", "remark_odd", "thm3", "thm4")
_ALIASES = {"remark": "remark_odd", "thm3_cyclic_perfect": "thm3",
            "thm4_constacyclic_perfect": "thm4"}


class InadmissibleParameters(ValueError):
    """Parameters outside a family's hypotheses; the message names the condition."""


@dataclass(frozen=True)
class ConstructionParams:
    family: str
    q: int
    m: int | None = None
    n: int = 0
    k: int = 0
    d: int = 0
    r: int = 2

    @property
    def perfect(self) -> bool:
        return self.family in ("thm3", "thm4")

    def claims(self) -> dict:
        return {"family": self.family, "q": self.q, "m": self.m, "n": self.n, "k": self.k,
                "d": self.d, "r": self.r,
                "singleton_optimal": self.family in ("thm_even", "thm_odd", "remark_odd"),
                "perfect": self.perfect}


@dataclass(frozen=True)
class WitnessCodeword:
    """Sparse codeword: ``terms`` maps exponent -> coefficient code (big field)."""

    big_field: FieldSpec
    n: int
    terms: dict = field(hash=False)
    claimed_weight: int = 5

    def dense(self) -> np.ndarray:
        w = np.zeros(self.n, dtype=np.int64)
        for k, c in self.terms.items():
            w[k] = c
        return w

    @property
    def weight(self) -> int:
        return sum(1 for c in self.terms.values() if c)

    def to_json(self) -> dict:
        return {"terms": [{"exp": int(k), "coeff": list(self.big_field.coords(int(c)))}
                          for k, c in sorted(self.terms.items())]}


def _q_parts(q: int) -> tuple[int, int]:
    try:
        return prime_power(q)
    except FieldError:
        raise InadmissibleParameters(f"q = {q} is not a prime power") from None


def _remark_b(q: int) -> int:
    b = q + 1
    while b % 2 == 0:
        b //= 2
    return b


def admissibility(family: str, q: int, m: int | None = None) -> ConstructionParams:
    """Check a family's hypotheses and return the derived parameters.

    Every violated condition is named in the error message.
    """
    family = _ALIASES.get(family.replace("-", "_"), family.replace("-", "_"))
    if family not in FAMILIES:
        raise InadmissibleParameters(f"unknown family {family!r}")
    _q_parts(q)
    conds: list[tuple[bool, str]]
    if family == "thm_even":
        conds = [((q - 1) % 3 == 0, "3 | (q - 1)"), (q % 2 == 0, "q even")]
    elif family == "prop3":
        conds = [((q - 1) % 3 == 0, "3 | (q - 1)"), (q % 2 == 1, "q odd")]
    elif family == "thm_odd":
        conds = [((q - 1) % 3 == 0, "3 | (q - 1)"), (q % 4 == 1, "q = 1 (mod 4)")]
    elif family == "remark_odd":
        conds = [((q - 1) % 3 == 0, "3 | (q - 1)"), (q % 2 == 1, "q odd")]
    else:
        if m is None:
            raise InadmissibleParameters(f"{family} requires m")
        conds = [((q + 1) % 3 == 0, "3 | (q + 1)"), (m % 2 == 0, "m even")]
        if family == "thm3":
            conds = [(q % 2 == 0 and q >= 4, "q >= 4 even")] + conds
            conds.append((math.gcd(m, q - 1) == 1, "gcd(m, q - 1) = 1"))
        else:
            conds = [(q > 2, "q > 2")] + conds
    failed = [text for ok, text in conds if not ok]
    if failed:
        raise InadmissibleParameters("; ".join(f"{family} requires {t}" for t in failed))
    if family in ("thm_even", "prop3"):
        n = 3 * (q + 1)
        return ConstructionParams(family, q, None, n, 2 * q - 1, 6 if family == "thm_even" else 5)
    if family == "thm_odd":
        n = 3 * (q + 1) // 2
        return ConstructionParams(family, q, None, n, q - 2, 6)
    if family == "remark_odd":
        n = 3 * _remark_b(q)
        roots = _cyclic_root_set(q, n)
        if len(roots) >= n:
            raise InadmissibleParameters(
                f"remark_odd is degenerate for q = {q}: n = {n} <= deg g = {len(roots)}")
        return ConstructionParams(family, q, None, n, n - len(roots), 6)
    n = (q**m - 1) // (q - 1)
    return ConstructionParams(family, q, m, n, 2 * n // 3 - m, 5)


def _cyclic_root_set(q: int, n: int) -> set[int]:
    # exponent arithmetic only; used for admissibility of the n = 3b remark
    return {3 * i % n for i in range(n // 3)} | {1 % n, q % n, (q + 1) % n}


def _big_field(q: int, degree: int) -> FieldSpec:
    p, d = _q_parts(q)
    try:
        return make_field(p, d * degree)
    except FieldError as exc:
        raise InadmissibleParameters(str(exc)) from None


def _exponents_of(big: FieldSpec, n: int, theta_exp: int, element_logs) -> list[int]:
    """Exponents ``i`` with ``theta alpha^i`` equal to each given root (by log)."""
    N = big.n_mult
    step = N // n
    out = []
    for lg in element_logs:
        diff = (int(lg) - theta_exp) % N
        if diff % step:
            raise CodeError("element is not a root of x^n - lambda")
        out.append(diff // step)
    return out


def _coprime_power(big: FieldSpec, n: int, alpha_power: int) -> int:
    if math.gcd(alpha_power, n) != 1:
        raise InadmissibleParameters(f"alpha power {alpha_power} is not coprime to n = {n}")
    return alpha_power


def _singleton_shape(q: int, n: int, locality_period: int, alpha_power: int) -> ConstacyclicCode:
    """``g = (x^{n/3} - 1)(x - a)(x - a^q)(x - a^{q+1})`` with ``a`` a primitive n-th root.

    ``thm_even`` additionally lists ``a^{q-1}, a^{q+2}``, which already lie in
    the locality coset when 3 | q - 1.
    """
    big = _big_field(q, 2)
    step = big.n_mult // n
    a_log = (alpha_power * step) % big.n_mult
    L = [(3 * i * a_log) % big.n_mult for i in range(n // 3)]
    D = [(e * a_log) % big.n_mult for e in (1, q, q + 1)]
    if locality_period == 3 * (q + 1):
        D += [((q - 1) * a_log) % big.n_mult, ((q + 2) * a_log) % big.n_mult]
    roots = _exponents_of(big, n, 0, set(L) | set(D))
    return build_code(big, q, n, 0, roots)


def thm_even_construct(q: int, alpha_power: int = 1) -> ConstacyclicCode:
    """Cyclic Singleton-optimal LRC of length 3(q+1) for even q."""
    params = admissibility("thm_even", q)
    return _singleton_shape(q, params.n, params.n, _coprime_power(None, params.n, alpha_power))


def prop3_construct(q: int, alpha_power: int = 1) -> ConstacyclicCode:
    """The thm_even recipe applied to odd q (minimum distance 5)."""
    params = admissibility("prop3", q)
    return _singleton_shape(q, params.n, params.n, _coprime_power(None, params.n, alpha_power))


def thm_odd_construct(q: int, alpha_power: int = 1) -> ConstacyclicCode:
    params = admissibility("thm_odd", q)
    return _singleton_shape(q, params.n, 0, _coprime_power(None, params.n, alpha_power))


def remark_construct(q: int, alpha_power: int = 1) -> ConstacyclicCode:
    params = admissibility("remark_odd", q)
    code = _singleton_shape(q, params.n, 0, _coprime_power(None, params.n, alpha_power))
    if code.k <= 0:
        raise InadmissibleParameters(f"remark_odd is degenerate for q = {q}")
    return code


def _witness(code: ConstacyclicCode, terms: dict[int, int]) -> WitnessCodeword:
    wit = WitnessCodeword(code.big_field, code.n, {k: int(c) for k, c in terms.items()}, 5)
    if wit.weight != 5:
        raise AssertionError(f"witness has weight {wit.weight}, expected 5")
    if not is_codeword(code, wit.dense()):
        raise AssertionError("witness is not a codeword")
    return wit


def prop3_witness(q: int, alpha_power: int = 1) -> WitnessCodeword:
    """Weight-5 codeword of the odd-q ``3(q+1)`` code.

    With ``pi = alpha^{(q+1)/2}`` (a root of ``x^2 - x + 1`` in F_q), the word is
    ``1 - 2x^{q+1} + x^{2(q+1)} - t x^{(q+1)/2} + t x^{3(q+1)/2}``, ``t = 3/(2pi - 1)``.
    """
    code = prop3_construct(q, alpha_power)
    f = code.big_field
    alpha_log = alpha_power * code.alpha_exp
    pi = FieldElement(f, int(f.exp(alpha_log * (q + 1) // 2)))
    if pi * pi - pi + 1:
        raise AssertionError("pi does not satisfy pi^2 - pi + 1 = 0")
    t = f.from_int(3) / (pi * 2 - 1)
    h = (q + 1) // 2
    terms = {0: 1, q + 1: f.from_int(-2).value, 2 * (q + 1): 1,
             h: (-t).value, 3 * h: t.value}
    return _witness(code, terms)


def thm3_construct(q: int, m: int, alpha_power: int = 1) -> tuple[ConstacyclicCode, WitnessCodeword]:
    """Cyclic perfect LRC for even q, with its weight-5 witness.

    Witness: ``beta = alpha^{n/(q+1)}``, ``a = beta + beta^q``, ``b = beta^{q+1}``;
    ``c0`` a root of ``x^2 + a x + a^2 + b`` in F_q with ``a/(beta + c0) = alpha^{n/3}``
    (falling back to ``alpha^{2n/3}`` with the two middle exponents swapped);
    ``c = c0 + a x^{n/3} + (c0+a) x^{2n/3} + x^{n/(q+1)} + x^{n/(q+1) + 2n/3}``.
    """
    params = admissibility("thm3", q, m)
    n = params.n
    big = _big_field(q, m)
    N = big.n_mult
    _coprime_power(big, n, alpha_power)
    a_log = (alpha_power * (N // n)) % N
    L = [(3 * i * a_log) % N for i in range(n // 3)]
    D = [(q**j * a_log) % N for j in range(m)]
    code = build_code(big, q, n, 0, _exponents_of(big, n, 0, set(L) | set(D)))

    alpha = FieldElement(big, int(big.exp(a_log)))
    beta = alpha ** (n // (q + 1))
    a = beta + beta**q
    b = beta ** (q + 1)
    if beta * beta + a * beta + b:
        raise AssertionError("beta is not a root of x^2 + a x + b")
    # Tr_{F_q/F_2}; the absolute trace of F_{q^m} would vanish on F_q for even m
    u = FieldElement(big, 1) + b / (a * a)
    tr = FieldElement(big, 0)
    for i in range(q.bit_length() - 1):
        tr = tr + u ** (2**i)
    if tr.value:
        raise AssertionError("Tr(1 + b/a^2) != 0: no root c0 in F_q")
    sub = code.subfield_codes_mask
    c0_cands = [r for r in solve_quadratic(a, a * a + b) if sub[r.value] and r.value]
    if not c0_cands:
        raise AssertionError("no admissible c0 in F_q")
    omega = alpha ** (n // 3)
    chosen, swap = None, False
    for target, sw in ((omega, False), (omega * omega, True)):
        for c0 in c0_cands:
            if a / (beta + c0) == target:
                chosen, swap = c0, sw
                break
        if chosen is not None:
            break
    if chosen is None:
        raise AssertionError("a / (beta + c0) is not a primitive cube root of unity")
    c0 = chosen
    if c0 == a:
        raise AssertionError("c0 == a")
    t1, t2 = (n // 3, 2 * n // 3) if not swap else (2 * n // 3, n // 3)
    e = n // (q + 1)
    terms = {0: c0.value, t1: a.value, t2: (c0 + a).value, e: 1, (e + t2) % n: 1}
    return code, _witness(code, terms)


def find_pi_for_minimal_polynomial(big: FieldSpec, minpoly_codes) -> int:
    """Smallest discrete log of a primitive root of the given polynomial in ``big``."""
    f = Poly(big, minpoly_codes)
    elems = big.exp(np.arange(big.n_mult))
    vals = f.eval_codes(elems)
    for lg in np.flatnonzero(vals == 0):
        if math.gcd(int(lg), big.n_mult) == 1:
            return int(lg)
    raise CodeError("polynomial has no primitive root in the field")


def thm4_construct(q: int, m: int, pi_exp: int = 1) -> tuple[ConstacyclicCode, WitnessCodeword]:
    """Constacyclic perfect LRC with ``theta = pi^{2-q}``, ``alpha = pi^{q-1}``.

    ``pi = generator^pi_exp`` must be primitive.  Witness: the smallest
    ``a`` in F_q* (by power of the subfield generator) with ``a != -1, 2`` and
    ``2a != 1``; ``w = alpha^{n/3}`` and ``pi^K`` solves ``c(theta alpha) = 0``,
    i.e. ``pi^K = -(1 + a w - (1+a) w^2)/(1 - w)``;
    ``k3 = K mod n``, ``s = K div n``, ``b = pi^{sn}``, ``k4 = k3 + n/3 mod n``;
    ``c = 1 + a t^{-n/3} x^{n/3} - (1+a) t^{-2n/3} x^{2n/3} + b x^{k3} - b t^{k3-k4} x^{k4}``
    with ``t = theta``.
    """
    params = admissibility("thm4", q, m)
    n = params.n
    big = _big_field(q, m)
    N = big.n_mult
    if math.gcd(pi_exp, N) != 1:
        raise InadmissibleParameters(f"pi exponent {pi_exp} does not give a primitive element")
    theta_exp = (pi_exp * (2 - q)) % N
    a_log = (pi_exp * (q - 1)) % N
    L = [(theta_exp + 3 * i * a_log) % N for i in range(n // 3)]
    D = [(pi_exp * q**j) % N for j in range(m)]  # (theta alpha)^{q^j} = pi^{q^j}
    code = build_code(big, q, n, theta_exp, _exponents_of(big, n, theta_exp, set(L) | set(D)))

    pi = FieldElement(big, int(big.exp(pi_exp)))
    theta = FieldElement(big, int(big.exp(theta_exp)))
    alpha = FieldElement(big, int(big.exp(a_log)))
    omega = alpha ** (n // 3)
    one = FieldElement(big, 1)
    sub_step = N // (q - 1)
    a = None
    for j in range(q - 1):
        cand = FieldElement(big, int(big.exp(j * sub_step)))
        if cand != -one and cand != one * 2 and cand * 2 - 1:
            a = cand
            break
    if a is None:
        raise AssertionError("no admissible a in F_q*")
    # c(theta alpha) = 1 + a w - (1+a) w^2 + pi^K (1 - w)
    target = -(one + a * omega - (one + a) * omega * omega) / (one - omega)
    # discrete log base pi: log_gen(target) / pi_exp mod N
    k_bar = (int(big.log(target.value)) * pow(pi_exp, -1, N)) % N
    k3 = k_bar % n
    s_mult = (k_bar - k3) // n
    b = pi ** (s_mult * n)
    if not code.subfield_codes_mask[b.value]:
        raise AssertionError("b = pi^{sn} is not in F_q")
    if k_bar % (n // 3) == 0:
        raise AssertionError("n/3 divides k3")
    k4 = (k3 + n // 3) % n
    t3 = n // 3
    terms = {
        0: 1,
        t3: (a * theta ** (-t3)).value,
        2 * t3: (-(one + a) * theta ** (-2 * t3)).value,
        k3: b.value,
        k4: (-(b * theta ** (k3 - k4))).value,
    }
    return code, _witness(code, terms)


def construct(family: str, q: int, m: int | None = None, alpha_power: int = 1, pi_exp: int = 1):
    """Dispatch by family name; returns ``(code, witness_or_None, params)``.

    ``alpha_power`` selects the primitive n-th root ``alpha^j`` (cyclic
    families); ``pi_exp`` selects the primitive element ``pi`` for thm4.
    """
    params = admissibility(family, q, m)
    fam = params.family
    witness = None
    if fam == "thm_even":
        code = thm_even_construct(q, alpha_power)
    elif fam == "prop3":
        code = prop3_construct(q, alpha_power)
        witness = prop3_witness(q, alpha_power)
    elif fam == "thm_odd":
        code = thm_odd_construct(q, alpha_power)
    elif fam == "remark_odd":
        code = remark_construct(q, alpha_power)
    elif fam == "thm3":
        code, witness = thm3_construct(q, m, alpha_power)
    else:
        code, witness = thm4_construct(q, m, pi_exp)
    if code.k != params.k:
        raise AssertionError(f"dimension {code.k} differs from expected {params.k}")
    return code, witness, params
