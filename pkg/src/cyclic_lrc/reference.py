"""Published reference instances and their printed generator polynomials.

Printed coefficients live in the prime field, so an integer coefficient ``c``
is the field code ``c`` in any extension of ``F_p``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import FieldSpec
from .poly import Poly


@dataclass(frozen=True)
class ReferenceCase:
    name: str
    family: str
    q: int
    m: int | None
    n: int
    k: int
    d: int
    printed_g: dict[int, int] | None = None  # exponent -> prime-field coefficient


CASES = {
    "q4_n15": ReferenceCase("q4_n15", "thm_even", 4, None, 15, 7, 6),
    "q7_n24": ReferenceCase("q7_n24", "prop3", 7, None, 24, 13, 5,
                            {11: 1, 10: 3, 9: 6, 8: 3, 3: 6, 2: 4, 1: 1, 0: 4}),
    "q13_n21": ReferenceCase("q13_n21", "thm_odd", 13, None, 21, 11, 6,
                             {10: 1, 9: 9, 8: 3, 7: 10, 3: 12, 2: 4, 1: 10, 0: 3}),
    "q8_n585": ReferenceCase("q8_n585", "thm3", 8, 4, 585, 386, 5),
    "q5_n3906": ReferenceCase("q5_n3906", "thm4", 5, 6, 3906, 2598, 5,
                              {1308: 1, 1306: 1, 1305: 4, 1304: 1, 1302: 2,
                               6: 2, 4: 2, 3: 3, 2: 2, 0: 4}),
}

# primitive polynomial whose root is pi in the q5_n3906 instance (low degree first)
Q5_N3906_SEXTIC = (2, 0, 1, 4, 1, 0, 1)
Q5_N3906_LAMBDA = 3


def printed_generator(case: ReferenceCase, field: FieldSpec) -> Poly:
    if case.printed_g is None:
        raise ValueError(f"{case.name} has no printed coefficient list")
    return Poly.from_sparse(field, case.printed_g)
