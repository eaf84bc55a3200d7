"""Closed-form image-set sizes for the power maps x -> x^(2^i + 1).

The size of I(t) = {x^(2^i+1) + t*x} depends only on whether m/d is even
or odd, d = gcd(i, m). The t = 0 size is 1 + (q-1)/gcd(q-1, 2^i+1), and
gcd(q-1, 2^i+1) is 2^d+1 in the even case and 1 in the odd case; that
dichotomy is asserted numerically on every call rather than taken on
faith. The halfway index i = m/2 (m even) is special: there the map
x -> x^(sqrt(q)+1) lands exactly on the subfield GF(sqrt(q)), and
g(x) = x^(sqrt(q)+1) + x is injective on the relative-trace-1 elements
and 2-to-1 everywhere else, which pins |I(t != 0)| to (q + sqrt(q))/2.
`verify_half_gold_structure` establishes each of those facts by exhaustive
enumeration.

The index i = 0 would give x -> x^2, which is GF(2)-linear and therefore
useless for the line constructions downstream; `gold_profile` rejects it
(the fiber module can still profile it).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .field import Field, make_field
from .fiber import Gold, image_sizes_all
from .parallel import parallel_map


@dataclass
class GoldImageProfile:
    m: int
    i: int
    d: int
    parity_case: str  # parity of m/d, "even" or "odd"
    size_at_zero: int
    size_at_nonzero: int


def _as_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return int(x)


def gold_profile(m: int, i: int) -> GoldImageProfile:
    """Exact |I(0)| and |I(t != 0)| for x -> x^(2^i+1) on GF(2^m)."""
    if not 1 <= i < m:
        raise ValueError(f"need 1 <= i < m (i = 0 is the linear map x -> x^2), got i={i}, m={m}")
    d = math.gcd(i, m)
    q = 1 << m
    block = (1 << d) + 1
    if (m // d) % 2 == 0:
        gcd_expected = block
        size_zero = 1 + _as_int(Fraction(q - 1, block))
        size_nonzero = _as_int(Fraction(q + 1, 2) + Fraction(q - 1, 2 * block))
        parity = "even"
    else:
        gcd_expected = 1
        size_zero = q
        size_nonzero = _as_int(Fraction(q - 1, 2) + Fraction(q + 1, 2 * block))
        parity = "odd"
    if math.gcd(q - 1, (1 << i) + 1) != gcd_expected:
        raise ArithmeticError(f"gcd(2^{m}-1, 2^{i}+1) dichotomy failed")
    if size_zero != 1 + (q - 1) // gcd_expected:
        raise ArithmeticError("t = 0 size disagrees with the gcd form")
    return GoldImageProfile(m=m, i=i, d=d, parity_case=parity,
                            size_at_zero=size_zero, size_at_nonzero=size_nonzero)


@dataclass
class HalfGoldStructure:
    """Exhaustively established facts about g(x) = x^(sqrt(q)+1) + x."""

    image_is_subfield: bool
    injective_on_trace_one: bool
    two_to_one_elsewhere: bool
    image_size_at_one: int
    image_size_expected: int

    @property
    def ok(self) -> bool:
        return (self.image_is_subfield and self.injective_on_trace_one
                and self.two_to_one_elsewhere
                and self.image_size_at_one == self.image_size_expected)


def verify_half_gold_structure(field: Field) -> HalfGoldStructure:
    if field.m % 2:
        raise ValueError("the halfway index needs an even extension degree")
    q = field.q
    s = 1 << (field.m // 2)
    x = np.arange(q, dtype=np.int64)
    powmap = field.pow_all(s + 1)
    frob = field.pow_all(s)
    subfield_mask = frob == x  # fixed points of u -> u^sqrt(q)
    image_mask = np.zeros(q, dtype=bool)
    image_mask[powmap] = True

    g = powmap ^ x
    trace_one = (frob ^ x) == 1
    g_on = g[trace_one]
    rest_counts = np.bincount(g[~trace_one], minlength=q)
    return HalfGoldStructure(
        image_is_subfield=bool(np.array_equal(image_mask, subfield_mask)),
        injective_on_trace_one=bool(np.unique(g_on).size == g_on.size),
        two_to_one_elsewhere=bool(np.all(rest_counts[rest_counts > 0] == 2)),
        image_size_at_one=int(np.count_nonzero(np.bincount(g, minlength=q))),
        image_size_expected=(q + s) // 2,
    )


def scale_invariance_check(field: Field, i: int) -> bool:
    """True iff |I(t)| is the same for every t != 0 (exhaustive sweep)."""
    if field.m % 2 or i != field.m // 2:
        raise ValueError("scale invariance is claimed for i = m/2 with m even")
    sizes = image_sizes_all(field, Gold(i))
    return bool(np.all(sizes[1:] == sizes[1]))


def profile_case(m: int, i: int) -> dict:
    """Brute-force image sizes of one map against its closed-form profile."""
    prof = gold_profile(m, i)
    sizes = image_sizes_all(make_field(m), Gold(i))
    ok = int(sizes[0]) == prof.size_at_zero and bool(np.all(sizes[1:] == prof.size_at_nonzero))
    return {"m": m, "i": i, "size_at_zero": prof.size_at_zero,
            "size_at_nonzero": prof.size_at_nonzero, "ok": ok}


def _profile_case(args) -> dict:
    return profile_case(*args)


def image_profile_sweep(m_max: int = 12, workers: int = 1) -> list[dict]:
    cases = [(m, i) for m in range(2, m_max + 1) for i in range(1, m)]
    return parallel_map(_profile_case, cases, workers)


def half_gold_case(m: int) -> dict:
    field = make_field(m)
    s = 1 << (m // 2)
    st = verify_half_gold_structure(field)
    sizes = image_sizes_all(field, Gold(m // 2))
    sizes_ok = int(sizes[0]) == s and bool(np.all(sizes[1:] == (field.q + s) // 2))
    return {"m": m, "structure_ok": st.ok, "sizes_ok": sizes_ok,
            "size_at_one": st.image_size_at_one, "ok": st.ok and sizes_ok}


def half_gold_sweep(m_max: int = 12, workers: int = 1) -> list[dict]:
    return parallel_map(half_gold_case, list(range(2, m_max + 1, 2)), workers)
