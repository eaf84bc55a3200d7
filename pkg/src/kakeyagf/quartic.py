"""Fiber counts and exact image sizes for x -> x^4 + x^3 + t*x.

The preimage histogram of this degree-4 map is rigid: for t != 0 the
number of single-preimage values depends only on m's parity and Tr(t),
only t^2 can have three preimages (iff Tr(t) = 0), nothing has five or
more, and the t = 0 histogram is fully determined by m's parity.

For odd m and t != 0, those facts turn the image size into
|I(t)| = (6q + 1 - v + 4*Tr(t)) / 8, where v counts the pairs (x, z) with
x^2 + z*x = z^3 + z^2 + t. v is computable in O(q): the z = 0 column
always contributes one pair, and each z != 0 contributes 2 or 0 by the
trace criterion for the quadratic in x. |v - q| <= 2*sqrt(q) holds for
this cubic curve (checked, not assumed, by every sweep here), which caps
|I(t)| by floor(5q/8 + (2*sqrt(q) + 5)/8); `sharpness_search` reports the
slopes that reach the cap.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from decimal import ROUND_FLOOR, Decimal, localcontext
from functools import lru_cache

import numpy as np

from .field import Field, exact_div, make_field
from .fiber import FiberDistribution, Quartic, fiber_distribution, image_sizes_all, values_all
from .parallel import parallel_map


def omega1_formula(m: int, tr_t: int) -> int:
    """#values with exactly one preimage, for any slope t != 0 with Tr(t) = tr_t."""
    if m < 1:
        raise ValueError("need m >= 1")
    if tr_t not in (0, 1):
        raise ValueError("trace bit must be 0 or 1")
    q = 1 << m
    if m % 2:
        num = q + 1 if tr_t == 0 else q + 4
    else:
        num = q - 1 if tr_t == 0 else q + 2
    return exact_div(num, 3)


def omega3_formula(tr_t: int) -> int:
    """#values with exactly three preimages, t != 0: one iff Tr(t) = 0."""
    if tr_t not in (0, 1):
        raise ValueError("trace bit must be 0 or 1")
    return 1 - tr_t


def omega0_distribution(m: int) -> FiberDistribution:
    """Complete preimage histogram of the slope-0 map x -> x^4 + x^3."""
    if m < 1:
        raise ValueError("need m >= 1")
    q = 1 << m
    if m % 2:
        omega = {0: q // 2, 2: q // 2}
    else:
        omega = {0: q // 4, 1: exact_div(2 * (q - 1), 3), 2: 1, 4: exact_div(q - 4, 12)}
    return FiberDistribution(t=0, omega=omega)


@dataclass
class CurvePointCount:
    t: int
    v: int      # pairs (x, z) with x^2 + z*x = z^3 + z^2 + t
    delta: int  # Tr(t)


@dataclass
class QuarticImageRecord:
    t: int
    exact_size: int
    floor_bound: int
    sharp: bool


@dataclass
class SharpnessResult:
    max_size: int
    witnesses: list[int]
    bound: int
    sharp: bool


@lru_cache(maxsize=None)
def _curve_arrays(field: Field) -> tuple[np.ndarray, np.ndarray]:
    q = field.q
    z = np.arange(1, q, dtype=np.int64)
    z2 = field.mul_arrays(z, z)
    base = field.mul_arrays(z2, z) ^ z2               # z^3 + z^2
    inv_sq = field.pow_all((q - 3) % (q - 1))[1:]     # z^(-2) for z != 0
    return base, inv_sq


def curve_point_count(field: Field, t: int) -> CurvePointCount:
    """O(q) pair count; identical to enumerating all q^2 pairs directly.

    t = 0 is allowed for diagnostics, but the curve may degenerate there,
    so no near-q guarantee on v is implied for it.
    """
    base, inv_sq = _curve_arrays(field)
    tr = field.trace_table()
    arg = field.mul_arrays(base ^ t, inv_sq)
    v = 1 + 2 * int(np.count_nonzero(tr[arg] == 0))
    return CurvePointCount(t=t, v=v, delta=field.trace_abs(t))


def quartic_image_exact(field: Field, t: int) -> int:
    """|{x^4 + x^3 + t*x}| from the curve pair count; odd m and t != 0 only."""
    if field.m % 2 == 0:
        raise ValueError("the exact image-size formula needs odd m")
    if t == 0:
        raise ValueError("the exact image-size formula needs t != 0")
    c = curve_point_count(field, t)
    return exact_div(6 * field.q + 1 - c.v + 4 * c.delta, 8)


def quartic_floor_bound(m: int) -> int:
    """floor(5q/8 + (2*sqrt(q) + 5)/8) in pure integers, odd m.

    With s = isqrt(4q) = floor(2*sqrt(q)) this equals
    floor((5q + 5 + s) / 8): 2*sqrt(q) is irrational for odd m, so
    dropping its fractional part can never carry the numerator across a
    multiple of 8.
    """
    if m < 1 or m % 2 == 0:
        raise ValueError("the floor bound applies to odd m")
    q = 1 << m
    return (5 * q + 5 + math.isqrt(4 * q)) // 8


def image_record(field: Field, t: int) -> QuarticImageRecord:
    size = quartic_image_exact(field, t)
    bound = quartic_floor_bound(field.m)
    return QuarticImageRecord(t=t, exact_size=size, floor_bound=bound, sharp=size == bound)


def sharpness_search(field: Field) -> SharpnessResult:
    """Sweep every t != 0 with the O(q) exact size and collect the argmax ts."""
    if field.m % 2 == 0:
        raise ValueError("the sharpness sweep applies to odd m")
    q = field.q
    bound = quartic_floor_bound(field.m)
    base, inv_sq = _curve_arrays(field)
    tr = field.trace_table()
    best = 0
    witnesses: list[int] = []
    for t in range(1, q):
        arg = field.mul_arrays(base ^ t, inv_sq)
        v = 1 + 2 * int(np.count_nonzero(tr[arg] == 0))
        size = exact_div(6 * q + 1 - v + 4 * int(tr[t]), 8)
        if size > best:
            best, witnesses = size, [t]
        elif size == best:
            witnesses.append(t)
    return SharpnessResult(max_size=best, witnesses=witnesses, bound=bound,
                           sharp=best == bound)


# ----------------------------------------------------------------------
# sweeps used by the verification suite

def fiber_formula_case(field: Field) -> dict:
    """All fiber histograms of one field against the closed forms."""
    m, q = field.m, field.q
    p = values_all(field, Quartic())
    tr = field.trace_table()
    x = np.arange(q, dtype=np.int64)
    bad: list[int] = []
    measured = fiber_distribution(field, Quartic(), 0)
    if measured.nonzero() != omega0_distribution(m).nonzero():
        bad.append(0)
    for t in range(1, q):
        counts = np.bincount(p ^ field.mul_arrays(t, x), minlength=q)
        trt = int(tr[t])
        if (int(np.count_nonzero(counts == 1)) != omega1_formula(m, trt)
                or int(np.count_nonzero(counts == 3)) != omega3_formula(trt)
                or int(np.count_nonzero(counts >= 5)) != 0):
            bad.append(t)
    return {"m": m, "ok": not bad, "bad_t": bad[:8]}


def _fiber_formula_case(m: int) -> dict:
    return fiber_formula_case(make_field(m))


def fiber_formula_sweep(m_max: int = 13, workers: int = 1) -> list[dict]:
    return parallel_map(_fiber_formula_case, list(range(1, m_max + 1)), workers)


def image_exact_case(field: Field, spot: int | None = None, seed: int = 0) -> dict:
    """Formula-path image sizes vs brute force, plus the |v - q| <= 2*sqrt(q) gate.

    spot = None checks every t != 0 against brute force; otherwise brute
    force runs on `spot` slopes sampled with the given seed while the
    formula path still sweeps every t.
    """
    q = field.q
    tr = field.trace_table()
    base, inv_sq = _curve_arrays(field)
    hasse_ok = True
    sizes = np.empty(q, dtype=np.int64)
    for t in range(1, q):
        arg = field.mul_arrays(base ^ t, inv_sq)
        v = 1 + 2 * int(np.count_nonzero(tr[arg] == 0))
        if (v - q) * (v - q) > 4 * q:
            hasse_ok = False
        sizes[t] = exact_div(6 * q + 1 - v + 4 * int(tr[t]), 8)
    if spot is None:
        brute = image_sizes_all(field, Quartic())
        match_ok = bool(np.all(sizes[1:] == brute[1:]))
        checked = q - 1
    else:
        ts = sorted(random.Random(seed).sample(range(1, q), spot))
        p = values_all(field, Quartic())
        x = np.arange(q, dtype=np.int64)
        seen = np.empty(q, dtype=bool)
        match_ok = True
        for t in ts:
            seen[:] = False
            seen[p ^ field.mul_arrays(t, x)] = True
            if int(np.count_nonzero(seen)) != sizes[t]:
                match_ok = False
        checked = len(ts)
    return {"m": field.m, "hasse_ok": hasse_ok, "match_ok": match_ok,
            "brute_checked": checked, "ok": hasse_ok and match_ok}


def _image_exact_case(args) -> dict:
    m, spot, seed = args
    return image_exact_case(make_field(m), spot, seed)


def image_exact_sweep(m_exhaustive=(3, 5, 7, 9, 11), spot_m: int | None = 13,
                      spot_count: int = 100, seed: int = 0,
                      workers: int = 1) -> list[dict]:
    cases = [(m, None, seed) for m in m_exhaustive]
    if spot_m is not None:
        cases.append((spot_m, spot_count, seed))
    return parallel_map(_image_exact_case, cases, workers)


def sharpness_case(m: int) -> dict:
    r = sharpness_search(make_field(m))
    return {"m": m, "bound": r.bound, "max_size": r.max_size,
            "witnesses": r.witnesses[:4], "ok": r.sharp}


def sharpness_sweep(ms=(1, 3, 5, 7, 9, 11, 13), workers: int = 1) -> list[dict]:
    return parallel_map(sharpness_case, list(ms), workers)


def floor_bound_consistency(m_max: int = 31) -> list[dict]:
    """Integer floor bound vs a 60-digit decimal evaluation, odd m <= m_max."""
    rows = []
    with localcontext() as ctx:
        ctx.prec = 60
        for m in range(1, m_max + 1, 2):
            q = 1 << m
            val = (Decimal(5 * q) + Decimal(4 * q).sqrt() + 5) / 8
            ref = int(val.to_integral_value(rounding=ROUND_FLOOR))
            bound = quartic_floor_bound(m)
            rows.append({"m": m, "bound": bound, "ok": bound == ref})
    return rows
