"""Arithmetic in GF(2^e) with bit-encoded polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import UnsupportedDegree

# Bit i is the coefficient of t^i.  Fixed per degree so that every
# construction built on these fields is reproducible.
DEFAULT_MODULI = {
    1: 0b11,  # t + 1
    2: 0b111,  # t^2 + t + 1
    3: 0b1011,  # t^3 + t + 1
    4: 0b10011,  # t^4 + t + 1
    5: 0b100101,  # t^5 + t^2 + 1
    6: 0b1000011,  # t^6 + t + 1
    7: 0b10000011,  # t^7 + t + 1
    8: 0b100011011,  # t^8 + t^4 + t^3 + t + 1
    9: 0b1000010001,  # t^9 + t^4 + 1
    10: 0b10000001001,  # t^10 + t^3 + 1
    11: 0b100000000101,  # t^11 + t^2 + 1
    12: 0b1000001010011,  # t^12 + t^6 + t^4 + t + 1
    13: 0b10000000011011,  # t^13 + t^4 + t^3 + t + 1
    14: 0b100010001000011,  # t^14 + t^10 + t^6 + t + 1
    15: 0b1000000000000011,  # t^15 + t + 1
    16: 0b10001000000001011,  # t^16 + t^12 + t^3 + t + 1
}


def poly_mod(a: int, m: int) -> int:
    """Remainder of ``a`` modulo ``m`` over GF(2)."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def poly_mul(a: int, b: int) -> int:
    """Carry-less product."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def is_irreducible(m: int) -> bool:
    """Trial division by every polynomial of degree 1 .. deg(m)/2."""
    deg = m.bit_length() - 1
    if deg < 1:
        return False
    for f in range(2, 1 << (deg // 2 + 1)):
        if poly_mod(m, f) == 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class GF2e:
    """The field with ``2**e`` elements; ``generator`` has order ``2**e - 1``."""

    e: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.e <= 16:
            raise UnsupportedDegree(f"extension degree {self.e} outside 1..16")
        if self.modulus.bit_length() - 1 != self.e or not is_irreducible(self.modulus):
            raise UnsupportedDegree(f"modulus {bin(self.modulus)} is not irreducible of degree {self.e}")

    @property
    def size(self) -> int:
        return 1 << self.e

    def elements(self) -> range:
        return range(self.size)

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        return poly_mod(poly_mul(a, b), self.modulus)

    def pow(self, a: int, k: int) -> int:
        if k < 0:
            return self.pow(self.inv(a), -k)
        r = 1
        while k:
            if k & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            k >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.size - 2)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 is not a unit")
        n = self.size - 1
        order = n
        for p in _prime_factors(n):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order

    @cached_property
    def generator(self) -> int:
        n = self.size - 1
        for a in range(1, self.size):
            if self.multiplicative_order(a) == n:
                return a
        raise AssertionError("multiplicative group of a finite field is cyclic")


def gf2e_field(e: int) -> GF2e:
    if e not in DEFAULT_MODULI:
        raise UnsupportedDegree(f"extension degree {e} outside 1..16")
    return GF2e(e, DEFAULT_MODULI[e])
