"""Exact arithmetic in GF(2^m) on integer-encoded polynomials.

An element of GF(2^m) = GF(2)[x]/(p) is a plain int below 2**m whose bit k
is the coefficient of x^k, so the whole field is range(2**m). Addition is
bitwise XOR and needs no helper. The modulus p uses the same encoding with
bit m set, and all I/O renders elements as bare lowercase hex.

Each degree has a canonical modulus: the irreducible polynomial with the
smallest integer encoding, found by exhaustive trial division when the
field is built (no external table to trust). Every cardinality computed
downstream is invariant under the choice of irreducible modulus, and
`make_field` accepts an override so tests can confirm that on a second
modulus.

Scalar operations are carry-less multiply/reduce on ints. Bulk operations
(`mul_arrays`, `pow_all`, `trace_table`) work on numpy arrays through
discrete log/antilog tables built lazily from a multiplicative generator;
the full-field sweeps in the other modules run on those. Fields are
immutable after construction apart from the idempotent table caches, so
instances are safe to share across workers.
"""

from __future__ import annotations

import functools

import numpy as np

MAX_DEGREE = 20


def poly_mod(a: int, b: int) -> int:
    """Remainder of a divided by b in GF(2)[x] (int encodings, b != 0)."""
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def is_irreducible(poly: int) -> bool:
    """Exhaustive trial division by every polynomial of degree 1..deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for f in range(2, 1 << (deg // 2 + 1)):
        if poly_mod(poly, f) == 0:
            return False
    return True


def smallest_irreducible(m: int) -> int:
    """Irreducible degree-m polynomial with the smallest integer encoding."""
    # constant term must be nonzero for m >= 1, so only odd encodings qualify
    for cand in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_irreducible(cand):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {m}")


def exact_div(num: int, den: int) -> int:
    """Integer quotient that must be exact; a remainder means a formula bug."""
    quo, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num}/{den} is not an exact division")
    return quo


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class Field:
    """GF(2^m) with a fixed irreducible modulus."""

    def __init__(self, m: int, modulus: int | None = None):
        if not isinstance(m, int) or not 1 <= m <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}, got {m}")
        if modulus is None:
            modulus = smallest_irreducible(m)
        else:
            if modulus.bit_length() - 1 != m:
                raise ValueError(f"modulus {modulus:x} does not have degree {m}")
            if modulus & 1 == 0:
                raise ValueError(f"modulus {modulus:x} has a zero constant term")
            if not is_irreducible(modulus):
                raise ValueError(f"modulus {modulus:x} is reducible")
        self.m = m
        self.q = 1 << m
        self.modulus = modulus
        self._exp: np.ndarray | None = None   # g^k, k = 0..q-2
        self._exp2: np.ndarray | None = None  # exp doubled, avoids mod q-1 on index sums
        self._log: np.ndarray | None = None   # discrete log; log[0] is a masked sentinel
        self._trace: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"Field(m={self.m}, modulus={self.modulus:x})"

    def elements(self) -> range:
        return range(self.q)

    # ------------------------------------------------------------------
    # scalar operations

    def mul(self, a: int, b: int) -> int:
        """Carry-less product reduced by the modulus."""
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> self.m:
                a ^= self.modulus
        return r

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; pow(a, 0) == 1 for every a, including a = 0."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(a, self.q - 2)

    def trace_abs(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(m-1)), valued in {0, 1}."""
        acc = a
        s = a
        for _ in range(self.m - 1):
            s = self.mul(s, s)
            acc ^= s
        return acc

    def trace_rel(self, a: int) -> int:
        """a^(2^(m/2)) + a, onto the subfield GF(2^(m/2)); needs m even."""
        if self.m % 2:
            raise ValueError("relative trace needs an even extension degree")
        return self.pow(a, 1 << (self.m // 2)) ^ a

    def quad_root_count(self, z: int, c: int) -> int:
        """Roots of x^2 + z*x = c: always 1 for z = 0, else 2 or 0 by trace."""
        if z == 0:
            return 1  # squaring is a bijection in characteristic 2
        iz = self.inv(z)
        return 2 if self.trace_abs(self.mul(c, self.mul(iz, iz))) == 0 else 0

    # ------------------------------------------------------------------
    # bulk operations on numpy arrays of encodings

    def _find_generator(self) -> int:
        q = self.q
        fac = _prime_factors(q - 1)
        for g in range(2, q):
            if all(self.pow(g, (q - 1) // p) != 1 for p in fac):
                return g
        raise ArithmeticError("no generator found; modulus cannot be irreducible")

    def _tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        if self._exp is None:
            q = self.q
            if q == 2:
                exp = [1]
            else:
                g = self._find_generator()
                exp = [1] * (q - 1)
                for k in range(1, q - 1):
                    exp[k] = self.mul(exp[k - 1], g)
            if len(set(exp)) != q - 1:
                raise ArithmeticError("generator walk did not cover the unit group")
            log = [0] * q
            for k, v in enumerate(exp):
                log[v] = k
            self._exp = np.array(exp, dtype=np.int64)
            self._exp2 = np.concatenate([self._exp, self._exp])
            self._log = np.array(log, dtype=np.int64)
        return self._exp, self._exp2, self._log

    def mul_arrays(self, a, b) -> np.ndarray:
        """Element-wise products of arrays (or scalars) of encodings."""
        _, exp2, log = self._tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = exp2[log[a] + log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def pow_all(self, e: int) -> np.ndarray:
        """x^e for every x in encoding order; pow_all(0) is all ones."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        q = self.q
        if e == 0:
            return np.ones(q, dtype=np.int64)
        exp, _, log = self._tables()
        out = np.zeros(q, dtype=np.int64)
        out[1:] = exp[(log[1:] * e) % (q - 1)]
        return out

    def trace_table(self) -> np.ndarray:
        """trace_abs of every element, cached."""
        if self._trace is None:
            x = np.arange(self.q, dtype=np.int64)
            acc = x.copy()
            s = x
            for _ in range(self.m - 1):
                s = self.mul_arrays(s, s)
                acc ^= s
            if (acc >> 1).any():
                raise ArithmeticError("trace values escaped {0, 1}")
            self._trace = acc
        return self._trace


@functools.lru_cache(maxsize=None)
def _default_field(m: int) -> Field:
    return Field(m)


def make_field(m: int, modulus: int | None = None) -> Field:
    """Field for GF(2^m); default-modulus instances are shared and cached."""
    if modulus is None:
        return _default_field(m)
    return Field(m, modulus)
