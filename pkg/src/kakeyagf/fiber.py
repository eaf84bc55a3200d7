"""Function families on GF(2^m) and the statistics of x -> f(x) + t*x.

For a map f and slope t, the image set I_f(t) = {f(x) + t*x : x in F_q}
and the fiber histogram omega_t(k) = #{y : exactly k preimages} are the
raw material every closed-form count in this package is checked against.
Per-t work materializes a q-slot bitmap or count array, so a sweep over
all t costs O(q^2) time and O(q) space.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import Field


@dataclass(frozen=True)
class Gold:
    """Power map x -> x^(2^i + 1)."""

    i: int


@dataclass(frozen=True)
class Quartic:
    """The fixed map x -> x^4 + x^3."""


@dataclass(frozen=True)
class SparseExponentSum:
    """x -> sum of c * x^e over (exponent, coefficient) terms."""

    terms: tuple[tuple[int, int], ...]


FunctionSpec = Gold | Quartic | SparseExponentSum


def function_label(fn: FunctionSpec) -> str:
    if isinstance(fn, Gold):
        return f"gold:{fn.i}"
    if isinstance(fn, Quartic):
        return "quartic"
    return "sparse:" + ",".join(f"{e}:{c:x}" for e, c in fn.terms)


def gold_exponent(field: Field, fn: Gold) -> int:
    if not 0 <= fn.i < field.m:
        raise ValueError(f"gold index {fn.i} outside 0..{field.m - 1}")
    return (1 << fn.i) + 1


def evaluate(field: Field, fn: FunctionSpec, x: int) -> int:
    """f(x) by exact scalar field arithmetic."""
    if isinstance(fn, Gold):
        return field.pow(x, gold_exponent(field, fn))
    if isinstance(fn, Quartic):
        x2 = field.mul(x, x)
        return field.mul(x2, x2) ^ field.mul(x2, x)
    acc = 0
    for e, c in fn.terms:
        acc ^= field.mul(c, field.pow(x, e))
    return acc


def values_all(field: Field, fn: FunctionSpec) -> np.ndarray:
    """f(x) for every x in encoding order."""
    if isinstance(fn, Gold):
        return field.pow_all(gold_exponent(field, fn))
    if isinstance(fn, Quartic):
        return field.pow_all(4) ^ field.pow_all(3)
    acc = np.zeros(field.q, dtype=np.int64)
    for e, c in fn.terms:
        acc ^= field.mul_arrays(c, field.pow_all(e))
    return acc


@dataclass
class FiberDistribution:
    """Histogram of preimage multiplicities under x -> f(x) + t*x."""

    t: int
    omega: dict[int, int]

    def total_values(self) -> int:
        """Accounts for every y once, so it must equal q."""
        return sum(self.omega.values())

    def total_preimages(self) -> int:
        """Accounts for every x once, so it must equal q."""
        return sum(k * c for k, c in self.omega.items())

    def image_size(self) -> int:
        return sum(c for k, c in self.omega.items() if k >= 1)

    def nonzero(self) -> dict[int, int]:
        """omega with zero-count entries dropped, for comparisons."""
        return {k: c for k, c in self.omega.items() if c}


@dataclass
class ImageSetStats:
    t: int
    size: int
    values: frozenset[int] | None = None


def _g_values(field: Field, fn: FunctionSpec, t: int) -> np.ndarray:
    x = np.arange(field.q, dtype=np.int64)
    return values_all(field, fn) ^ field.mul_arrays(t, x)


def image_set(field: Field, fn: FunctionSpec, t: int,
              include_values: bool = False) -> ImageSetStats:
    """Exact value set of x -> f(x) + t*x over all q inputs."""
    vals = _g_values(field, fn, t)
    seen = np.zeros(field.q, dtype=bool)
    seen[vals] = True
    values = frozenset(int(v) for v in np.flatnonzero(seen)) if include_values else None
    return ImageSetStats(t=t, size=int(np.count_nonzero(seen)), values=values)


def image_values(field: Field, fn: FunctionSpec, t: int) -> list[int]:
    """Sorted values of x -> f(x) + t*x."""
    vals = _g_values(field, fn, t)
    seen = np.zeros(field.q, dtype=bool)
    seen[vals] = True
    return [int(v) for v in np.flatnonzero(seen)]


def fiber_distribution(field: Field, fn: FunctionSpec, t: int) -> FiberDistribution:
    """Exact histogram of preimage counts over all y, k = 0 included."""
    vals = _g_values(field, fn, t)
    counts = np.bincount(vals, minlength=field.q)
    hist = np.bincount(counts)
    omega = {int(k): int(c) for k, c in enumerate(hist) if c}
    return FiberDistribution(t=t, omega=omega)


def image_sizes_all(field: Field, fn: FunctionSpec) -> np.ndarray:
    """|I_f(t)| for every t: one O(q) bitmap pass per slope."""
    q = field.q
    p = values_all(field, fn)
    x = np.arange(q, dtype=np.int64)
    sizes = np.empty(q, dtype=np.int64)
    seen = np.empty(q, dtype=bool)
    for t in range(q):
        seen[:] = False
        seen[p ^ field.mul_arrays(t, x)] = True
        sizes[t] = np.count_nonzero(seen)
    return sizes
