"""Closed-form spectral data for the path graph P_n.

The adjacency matrix of the path on vertices 1..n (vertex a adjacent to
a+1) has eigenvalues 2*cos(j*pi/m) for j = 1..n with m = n + 1, listed in
strictly decreasing order, and unnormalized eigenvector entries
sin(k*j*pi/m).  Everything below is a pure function of these formulas;
support membership is decided by exact integer divisibility, never by
floating-point zero tests.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import mpmath as mp

PRECISION_ENV = "PGSTPATH_PRECISION"
_DEFAULT_PRECISION = 128


def default_precision() -> int:
    """Working precision in significand bits; override via PGSTPATH_PRECISION."""
    raw = os.environ.get(PRECISION_ENV)
    if raw is None:
        return _DEFAULT_PRECISION
    try:
        bits = int(raw)
    except ValueError as exc:
        raise ValueError(f"{PRECISION_ENV} must be an integer, got {raw!r}") from exc
    if bits < 64:
        raise ValueError(f"{PRECISION_ENV} must be at least 64 bits, got {bits}")
    return bits


@dataclass(frozen=True)
class PathSpec:
    """The path graph on ``n`` vertices labeled 1..n; ``m`` is n + 1."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"paths need a positive vertex count, got {self.n!r}")

    @property
    def m(self) -> int:
        return self.n + 1

    def check_vertex(self, v: int, name: str = "vertex") -> int:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise ValueError(f"{name}={v!r} out of range 1..{self.n}")
        return v


@dataclass(frozen=True, order=False)
class PathEigenvalue:
    """Exact descriptor of the j-th largest eigenvalue 2*cos(j*pi/m)."""

    j: int
    m: int

    def value(self, prec: int | None = None) -> mp.mpf:
        """Numeric value at the requested precision (bits)."""
        prec = default_precision() if prec is None else prec
        with mp.workprec(prec + 8):
            val = 2 * mp.cospi(mp.mpf(self.j) / self.m)
        with mp.workprec(prec):
            return +val

    def __float__(self) -> float:
        return float(self.value(64))


@dataclass(frozen=True)
class SupportSet:
    """Eigenvalue support of a vertex: the indices j whose eigenspace
    projector does not annihilate the vertex's characteristic vector."""

    a: int
    indices: frozenset[int]

    @property
    def sorted_indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.indices))

    def __contains__(self, j: int) -> bool:
        return j in self.indices

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class SignVector:
    """Per-eigenvalue bit for the mirror pair (a, n+1-a): 0 where the
    projector images at the two vertices agree, 1 where they are opposite.

    On a path this reduces to the parity of j: entries[j] = 1 for even j,
    0 for odd j, restricted to the support of a.
    """

    a: int
    entries: dict[int, int] = field(compare=False)

    def parity(self, support: tuple[int, ...], vector: tuple[int, ...]) -> int:
        """Parity (mod 2) of sum(vector[i] * entries[j]) over the support."""
        if len(support) != len(vector):
            raise ValueError("vector length does not match support size")
        total = sum(c for j, c in zip(support, vector) if self.entries[j])
        return total & 1


def eigenvalues(spec: PathSpec) -> list[PathEigenvalue]:
    """All n eigenvalue descriptors, ordered strictly decreasing."""
    return [PathEigenvalue(j=j, m=spec.m) for j in range(1, spec.n + 1)]


def eigenvector_entry(spec: PathSpec, j: int, k: int, prec: int | None = None) -> mp.mpf:
    """Unnormalized eigenvector entry sin(k*j*pi/m) at ``prec`` bits.

    The squared norm of the full sine vector is m/2, so idempotent entries
    are (2/m) * sin(a*j*pi/m) * sin(b*j*pi/m).
    """
    spec.check_vertex(j, "eigenvalue index")
    spec.check_vertex(k, "vertex")
    prec = default_precision() if prec is None else prec
    m = spec.m
    with mp.workprec(prec + 8):
        # Reduce k*j mod 2m first: keeps the sinpi argument in [0, 2) so the
        # result is exact-zero exactly when m | k*j.
        val = mp.sinpi(mp.mpf((k * j) % (2 * m)) / m)
    with mp.workprec(prec):
        return +val


def eigenvalue_support(spec: PathSpec, a: int) -> SupportSet:
    """Indices j with sin(a*j*pi/m) != 0, i.e. those where m does not
    divide a*j.  Pure integer arithmetic."""
    spec.check_vertex(a)
    m = spec.m
    return SupportSet(a=a, indices=frozenset(
        j for j in range(1, spec.n + 1) if (a * j) % m != 0
    ))


def strongly_cospectral(spec: PathSpec, a: int, b: int) -> bool:
    """Whether every spectral projector maps the two vertex vectors onto
    (anti-)equal images; on a path this holds exactly when a + b = n + 1."""
    spec.check_vertex(a, "vertex a")
    spec.check_vertex(b, "vertex b")
    return a + b == spec.m


def sign_vector(spec: PathSpec, a: int) -> SignVector:
    """Sign bits for the mirror pair (a, n+1-a) over the support of a.

    sin((m-a)*j*pi/m) = (-1)^(j+1) * sin(a*j*pi/m), so the projector images
    at mirrored vertices agree for odd j and are opposite for even j.
    """
    support = eigenvalue_support(spec, a)
    return SignVector(a=a, entries={j: 1 - (j & 1) for j in support.sorted_indices})
