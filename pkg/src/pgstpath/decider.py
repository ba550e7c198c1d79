"""Exact yes/no decisions for pretty good state transfer on paths.

Transfer between vertices a and b of P_n is possible (in the
approach-fidelity-1 sense) exactly when

  * a + b = n + 1 (mirror pair; strong cospectrality), and
  * every integer relation l over the support of a, with
    sum l_j * theta_j = 0 and sum l_j = 0, has even sum of l_j over even j.

The parity map l -> sum(l_j over even j) mod 2 is additive, so it vanishes
on the whole relation lattice iff it vanishes on any generating set; the
decision therefore checks a lattice basis only.  A "no" comes with a
machine-checkable witness vector, a "yes" with the list of basis parities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import RelationLattice, relation_lattice
from .spectrum import PathSpec, sign_vector

REASON_TRIVIAL = "trivial_same_vertex"
REASON_NOT_COSPECTRAL = "not_cospectral"
REASON_PARITY_VIOLATION = "parity_violation"
REASON_ALL_EVEN = "all_parities_even"


@dataclass(frozen=True)
class PgstVerdict:
    """Decision plus certificate.

    ``witness`` is present iff the reason is a parity violation, in which
    case it satisfies both lattice constraints exactly and has odd parity.
    ``parities`` holds (basis vector, parity bit) pairs for lattice-backed
    verdicts; all bits are 0 on a yes.
    """

    n: int
    a: int
    b: int
    pgst: bool
    reason: str
    support: tuple[int, ...] = ()
    witness: tuple[int, ...] | None = None
    parities: tuple[tuple[tuple[int, ...], int], ...] = ()

    @property
    def answer(self) -> str:
        return "yes" if self.pgst else "no"


def _basis_parities(spec: PathSpec, a: int, lattice: RelationLattice):
    sigma = sign_vector(spec, a)
    return tuple(
        (vec, sigma.parity(lattice.support, vec)) for vec in lattice.basis
    )


def decide_pgst(spec: PathSpec, a: int, b: int) -> PgstVerdict:
    """Decide transfer between a and b, with certificate or counterexample.

    a == b is reported as a trivial yes (fidelity 1 at t = 0); this
    convention is ours, the interesting case is a != b.
    """
    spec.check_vertex(a, "vertex a")
    spec.check_vertex(b, "vertex b")
    if a == b:
        return PgstVerdict(n=spec.n, a=a, b=b, pgst=True, reason=REASON_TRIVIAL)
    if a + b != spec.m:
        return PgstVerdict(n=spec.n, a=a, b=b, pgst=False, reason=REASON_NOT_COSPECTRAL)
    lattice = relation_lattice(spec, a)
    parities = _basis_parities(spec, a, lattice)
    for vec, parity in parities:
        if parity:
            return PgstVerdict(
                n=spec.n, a=a, b=b, pgst=False, reason=REASON_PARITY_VIOLATION,
                support=lattice.support, witness=vec, parities=parities,
            )
    return PgstVerdict(
        n=spec.n, a=a, b=b, pgst=True, reason=REASON_ALL_EVEN,
        support=lattice.support, parities=parities,
    )


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    f = 2
    while f * f <= k:
        if k % f == 0:
            return False
        f += 1
    return True


def end_vertex_rule(n: int) -> bool:
    """Classification of end-to-end transfer: true iff n + 1 is prime,
    twice an odd prime, or a power of two.  Cross-check for
    decide_pgst(spec, 1, n), computed independently by trial division."""
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"end_vertex_rule needs n >= 2, got {n!r}")
    m = n + 1
    if _is_prime(m):
        return True
    if m & (m - 1) == 0:
        return True
    half, rem = divmod(m, 2)
    return rem == 0 and half % 2 == 1 and _is_prime(half)


def split_power_prime(m: int) -> tuple[int, int] | None:
    """Write m = 2^t * p with t >= 1 and p an odd prime, or return None."""
    if m < 2 or m % 2 != 0:
        return None
    t = 0
    while m % 2 == 0:
        m //= 2
        t += 1
    return (t, m) if m > 1 and _is_prime(m) else None


def family_rule(n: int, a: int) -> bool:
    """Sufficient condition for transfer between a and n+1-a: the order
    satisfies n + 1 = 2^t * p (p an odd prime) and 2^(t-1) divides a.

    True here guarantees decide_pgst(spec, a, n+1-a) is yes; false makes no
    claim either way.
    """
    if n < 2 or not 1 <= a <= n:
        return False
    split = split_power_prime(n + 1)
    if split is None:
        return False
    t, _ = split
    return a % (1 << (t - 1)) == 0
