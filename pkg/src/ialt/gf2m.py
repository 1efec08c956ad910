"""Table-based arithmetic in GF(2^(s*m)) with the embedded subfield GF(2^s).

Elements are plain ints holding the polynomial-basis bit pattern. The
extension field is built from the lexicographically least primitive
polynomial of degree ``s*m``, so the generator ``g`` is always the element
``x`` (the int 2) and all tables are reproducible from ``(s, m)`` alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

MAX_DEGREE = 20


class FieldError(ValueError):
    pass


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _polymulmod(a: int, b: int, poly: int, deg: int) -> int:
    r = 0
    top = 1 << deg
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return r


def _x_pow(e: int, poly: int, deg: int) -> int:
    """x**e modulo ``poly`` over GF(2)."""
    result, base = 1, 2 if deg > 1 else 2 ^ poly
    while e:
        if e & 1:
            result = _polymulmod(result, base, poly, deg)
        base = _polymulmod(base, base, poly, deg)
        e >>= 1
    return result


def _is_primitive(poly: int, deg: int) -> bool:
    order = (1 << deg) - 1
    if deg == 1:
        return poly == 0b11
    if not poly & 1:
        return False
    if _x_pow(order, poly, deg) != 1:
        return False
    return all(_x_pow(order // p, poly, deg) != 1 for p in _prime_factors(order))


def least_primitive_poly(deg: int) -> int:
    for poly in range((1 << deg) | 1, 1 << (deg + 1), 2):
        if _is_primitive(poly, deg):
            return poly
    raise FieldError(f"no primitive polynomial of degree {deg}")  # pragma: no cover


@dataclass(frozen=True, eq=False)
class FieldTower:
    """GF(2^(s*m)) together with its subfield GF(2^s).

    ``exp`` has length ``2*order`` so a product of two nonzero elements is
    ``exp[log[a] + log[b]]`` without a modulo. ``log[0]`` is -1.
    """

    s: int
    m: int
    irreducible: int
    exp: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)

    @property
    def degree(self) -> int:
        return self.s * self.m

    @property
    def size(self) -> int:
        return 1 << self.degree

    @property
    def order(self) -> int:
        """Order of the multiplicative group."""
        return self.size - 1

    @property
    def q(self) -> int:
        return 1 << self.s

    @property
    def subfield_step(self) -> int:
        return self.order // (self.q - 1)

    @property
    def generator(self) -> int:
        return int(self.exp[1])

    # scalar arithmetic

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^%d)" % self.degree)
        return int(self.exp[(self.order - self.log[a]) % self.order])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % self.order])

    def eval_poly(self, coeffs, x: int) -> int:
        """Evaluate ``sum(coeffs[i] * x**i)`` by Horner's rule."""
        acc = 0
        for c in reversed(list(coeffs)):
            acc = self.mul(acc, x) ^ int(c)
        return acc

    def elements(self) -> range:
        return range(self.size)

    def in_subfield(self, x: int) -> bool:
        return self.pow(x, self.q) == x

    # vectorised helpers

    def mul_arrays(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self.exp[self.log[a] + self.log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def subfield_mask(self) -> np.ndarray:
        mask = np.zeros(self.size, dtype=bool)
        mask[subfield_elements(self)] = True
        return mask


@lru_cache(maxsize=None)
def build_field(s: int, m: int) -> FieldTower:
    if s < 1 or m < 1:
        raise FieldError("s and m must be positive")
    deg = s * m
    if deg > MAX_DEGREE:
        raise FieldError(f"s*m = {deg} exceeds the table limit of {MAX_DEGREE}")
    poly = least_primitive_poly(deg)
    order = (1 << deg) - 1
    exp = np.zeros(2 * order + 1, dtype=np.int64)
    log = np.full(1 << deg, -1, dtype=np.int64)
    x = 1
    top = 1 << deg
    for i in range(order):
        exp[i] = x
        log[x] = i
        x <<= 1
        if x & top:
            x ^= poly
    exp[order:2 * order] = exp[:order]
    exp[2 * order] = exp[0]
    exp.setflags(write=False)
    log.setflags(write=False)
    return FieldTower(s=s, m=m, irreducible=poly, exp=exp, log=log)


@lru_cache(maxsize=None)
def _subfield_tuple(F: FieldTower) -> tuple[int, ...]:
    step = F.subfield_step
    elems = {0} | {int(F.exp[step * i]) for i in range(F.q - 1)}
    return tuple(sorted(elems))


def subfield_elements(F: FieldTower) -> list[int]:
    """All 2^s elements of the base field, ordered by bit pattern."""
    return list(_subfield_tuple(F))
