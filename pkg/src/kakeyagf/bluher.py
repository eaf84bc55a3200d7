"""The no-root count N0 for the trinomials x^(2^i+1) + b*x + b.

With q = 2^m, 0 <= i < m and d = gcd(i, m) (d = m when i = 0), the number
of b in F_q* for which the trinomial has no root in F_q is
2^d (q-1) / (2 (2^d+1)) when m/d is even and 2^d (q+1) / (2 (2^d+1)) when
m/d is odd. `bluher_formula` evaluates that in exact integer arithmetic;
`bluher_bruteforce` realizes the definition by scanning every (b, x) pair.
The two routes are independent and must agree on every (m, i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .field import Field, exact_div, make_field
from .parallel import parallel_map


@dataclass
class BluherCount:
    m: int
    i: int
    d: int
    n0_formula: int
    n0_bruteforce: int | None = None
    agree: bool | None = None


def bluher_formula(m: int, i: int) -> int:
    """Closed-form N0; the division must leave no remainder."""
    if not 0 <= i < m:
        raise ValueError(f"need 0 <= i < m, got i={i}, m={m}")
    d = math.gcd(i, m)  # gcd(0, m) == m covers i = 0
    q = 1 << m
    num = (1 << d) * (q - 1 if (m // d) % 2 == 0 else q + 1)
    return exact_div(num, 2 * ((1 << d) + 1))


def bluher_bruteforce(field: Field, i: int) -> int:
    """#{b != 0 : x^(2^i+1) + b*x + b has no root}, scanning all (b, x).

    b*x + b = b*(x+1), so each b costs one vectorized multiply over the
    whole field plus a zero test; the full scan is O(q^2) evaluations.
    """
    if not 0 <= i < field.m:
        raise ValueError(f"need 0 <= i < m, got i={i}, m={field.m}")
    q = field.q
    p = field.pow_all((1 << i) + 1)
    x1 = np.arange(q, dtype=np.int64) ^ 1
    count = 0
    for b in range(1, q):
        vals = p ^ field.mul_arrays(b, x1)
        if not (vals == 0).any():
            count += 1
    return count


def agreement_case(m: int, i: int) -> BluherCount:
    formula = bluher_formula(m, i)
    brute = bluher_bruteforce(make_field(m), i)
    return BluherCount(m=m, i=i, d=math.gcd(i, m), n0_formula=formula,
                       n0_bruteforce=brute, agree=formula == brute)


def _agreement_case(args) -> BluherCount:
    return agreement_case(*args)


def agreement_sweep(m_max: int = 12, workers: int = 1, m_min: int = 2) -> list[BluherCount]:
    """Formula vs brute force for every 2 <= m <= m_max and 0 <= i < m."""
    cases = [(m, i) for m in range(m_min, m_max + 1) for i in range(m)]
    return parallel_map(_agreement_case, cases, workers)
