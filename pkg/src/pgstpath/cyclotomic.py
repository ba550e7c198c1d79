"""Exact integer-polynomial arithmetic over cyclotomic fields.

Polynomials carry arbitrary-precision integer coefficients (plain Python
ints).  The field Q(zeta_N) is handled in the power basis
{1, zeta_N, ..., zeta_N^(phi(N)-1)}: reducing a polynomial modulo the monic
cyclotomic polynomial Phi_N keeps every coordinate an integer, so all
arithmetic here is exact.

The path eigenvalue 2*cos(j*pi/m) equals zeta_{2m}^j + zeta_{2m}^(-j); its
power-basis coordinates (``eigenvalue_coordinates``) are the exact objects
the relation-lattice machinery is built on.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import mpmath as mp


@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of x^i.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and every nonzero polynomial has a nonzero leading coefficient.

    >>> IntPoly((1, 0, 1)).degree
    2
    >>> IntPoly((0, 0)).is_zero
    True
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        trimmed = self.coeffs
        while trimmed and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        object.__setattr__(self, "coeffs", tuple(int(c) for c in trimmed))

    @staticmethod
    def monomial(degree: int, coeff: int = 1) -> IntPoly:
        return IntPoly((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: IntPoly) -> IntPoly:
        return IntPoly(tuple(
            a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        ))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return IntPoly(tuple(
            a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        ))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-c for c in self.coeffs))

    def __mul__(self, other: IntPoly) -> IntPoly:
        if self.is_zero or other.is_zero:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(tuple(out))

    def scale(self, k: int) -> IntPoly:
        return IntPoly(tuple(k * c for c in self.coeffs))

    def divmod_monic(self, divisor: IntPoly) -> tuple[IntPoly, IntPoly]:
        """Quotient and remainder by a monic divisor; exact over the integers.

        >>> num = IntPoly((-1, 0, 0, 1))        # x^3 - 1
        >>> den = IntPoly((-1, 1))              # x - 1
        >>> q, r = num.divmod_monic(den)
        >>> q.coeffs, r.is_zero
        ((1, 1, 1), True)
        """
        if not divisor.is_monic:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        quot = [0] * max(len(rem) - d, 0)
        for top in range(len(rem) - 1, d - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            quot[top - d] = c
            rem[top] = 0
            for i, dc in enumerate(divisor.coeffs[:-1]):
                rem[top - d + i] -= c * dc
        return IntPoly(tuple(quot)), IntPoly(tuple(rem[:d]))

    def __call__(self, x):
        """Evaluate by Horner's rule; works for ints, mpf/mpc, etc."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)


@dataclass(frozen=True)
class CycloCoordinates:
    """Integer coordinates in the power basis of Q(zeta_N).

    ``coords`` has length phi(N); entry i multiplies zeta_N^i.
    """

    order: int
    coords: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def to_complex(self, prec: int = 128) -> mp.mpc:
        """Evaluate at the primitive root exp(2*pi*i/N) with ``prec`` bits."""
        with mp.workprec(prec + 16):
            zeta = mp.expjpi(mp.mpf(2) / self.order)
            val = IntPoly(self.coords)(zeta)
        with mp.workprec(prec):
            return +val


def euler_phi(n: int) -> int:
    """Euler's totient via trial-division factorization.

    >>> [euler_phi(k) for k in (1, 2, 12, 24)]
    [1, 1, 4, 8]
    """
    if n < 1:
        raise ValueError("euler_phi requires n >= 1")
    result = n
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            result -= result // p
            while rest % p == 0:
                rest //= p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(order: int) -> IntPoly:
    """The cyclotomic polynomial Phi_order, monic of degree phi(order).

    Computed by exact division: Phi_n = (x^n - 1) / prod of Phi_d over the
    proper divisors d of n.  The lru_cache acts as a write-once memo table,
    so repeated and concurrent lookups return the identical object.

    >>> str(cyclotomic_poly(1))
    'x - 1'
    >>> str(cyclotomic_poly(12))
    'x^4 - x^2 + 1'
    """
    if order < 1:
        raise ValueError("cyclotomic order must be >= 1")
    poly = IntPoly((-1,) + (0,) * (order - 1) + (1,))
    for d in range(1, order):
        if order % d == 0:
            poly, rem = poly.divmod_monic(cyclotomic_poly(d))
            if not rem.is_zero:
                raise AssertionError(f"inexact cyclotomic division at order {order}")
    return poly


def reduce_mod_cyclotomic(poly: IntPoly, order: int) -> CycloCoordinates:
    """Coordinates of ``poly(zeta_order)`` in the power basis.

    Plain remainder by the monic Phi_order; evaluation at any primitive
    order-th root of unity is unchanged.
    """
    _, rem = poly.divmod_monic(cyclotomic_poly(order))
    width = euler_phi(order)
    coords = rem.coeffs + (0,) * (width - len(rem.coeffs))
    return CycloCoordinates(order=order, coords=coords)


@functools.lru_cache(maxsize=None)
def eigenvalue_coordinates(m: int, j: int) -> CycloCoordinates:
    """Exact coordinates of 2*cos(j*pi/m) = zeta_{2m}^j + zeta_{2m}^(2m-j).

    The result lives in the power basis of Q(zeta_{2m}).

    >>> eigenvalue_coordinates(4, 1).coords
    (0, 1, 0, -1)
    """
    if not 1 <= j <= m - 1:
        raise ValueError(f"index j={j} out of range 1..{m - 1}")
    poly = IntPoly.monomial(j) + IntPoly.monomial(2 * m - j)
    return reduce_mod_cyclotomic(poly, 2 * m)
