"""Integer relation lattices of path eigenvalues.

For a vertex a of P_n the relation lattice is the group of integer vectors
l, indexed by the eigenvalue support of a, with

    sum_j l_j * theta_j = 0   and   sum_j l_j = 0.

The first constraint is imposed exactly through the power-basis coordinates
of each theta_j in Q(zeta_{2m}); stacking those coordinate rows with an
all-ones row gives an integer matrix whose integer kernel is the lattice.
A kernel basis obtained from a unimodular column reduction generates every
integer solution (the kernel of an integer matrix is a saturated sublattice).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .cyclotomic import eigenvalue_coordinates
from .spectrum import PathSpec, eigenvalue_support


@dataclass(frozen=True)
class RelationLattice:
    """Basis of the relation lattice over the given (sorted) support.

    Basis vectors are aligned with ``support``; orientation and basis choice
    are canonical only up to unimodular equivalence, so consumers must not
    read meaning into signs or ordering beyond what parity checks allow.
    """

    support: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def integer_kernel(rows: list[list[int]]) -> list[list[int]]:
    """Basis of {v in Z^c : M v = 0} for an integer matrix M given by rows.

    Column-style Hermite reduction: unimodular column operations bring M to
    column-echelon form while the same operations are mirrored on an identity
    matrix; the mirror columns under the zero columns of the echelon form
    are a lattice basis generating all integer solutions.  Pivoting is
    deterministic (topmost row first, smallest pivot magnitude, lowest index).
    """
    if not rows or not rows[0]:
        raise ValueError("matrix must have at least one row and one column")
    ncols = len(rows[0])
    if any(len(r) != ncols for r in rows):
        raise ValueError("ragged matrix")
    mat = [list(map(int, r)) for r in rows]
    transform = [[1 if i == k else 0 for k in range(ncols)] for i in range(ncols)]
    # transform[i] is the i-th column of the accumulated unimodular matrix,
    # stored as a vector over the original column index.

    def col_axpy(dst: int, src: int, q: int) -> None:
        if q == 0:
            return
        for row in mat:
            row[dst] -= q * row[src]
        t_dst, t_src = transform[dst], transform[src]
        for i in range(ncols):
            t_dst[i] -= q * t_src[i]

    def col_swap(i: int, k: int) -> None:
        if i == k:
            return
        for row in mat:
            row[i], row[k] = row[k], row[i]
        transform[i], transform[k] = transform[k], transform[i]

    lead = 0
    for r, row in enumerate(mat):
        if lead == ncols:
            break
        # Euclid on the live columns of this row until one nonzero remains.
        while True:
            live = [c for c in range(lead, ncols) if row[c] != 0]
            if not live:
                break
            pivot = min(live, key=lambda c: (abs(row[c]), c))
            done = True
            for c in live:
                if c == pivot:
                    continue
                col_axpy(c, pivot, row[c] // row[pivot])
                if row[c] != 0:
                    done = False
            if done:
                col_swap(lead, pivot)
                if row[lead] < 0:
                    for rr in mat:
                        rr[lead] = -rr[lead]
                    transform[lead] = [-x for x in transform[lead]]
                lead += 1
                break
    return [list(transform[c]) for c in range(lead, ncols)]


def size_reduce(basis: list[list[int]], max_passes: int = 32) -> list[list[int]]:
    """Shrink basis vectors by integer Gram reduction (unimodular, so the
    generated lattice is unchanged); purely cosmetic for small certificates."""
    vecs = [list(v) for v in basis]
    for _ in range(max_passes):
        vecs.sort(key=lambda v: (sum(x * x for x in v), v))
        changed = False
        for i in range(len(vecs)):
            for k in range(i):
                ref = vecs[k]
                nrm = sum(x * x for x in ref)
                if nrm == 0:
                    continue
                dot = sum(x * y for x, y in zip(vecs[i], ref))
                # Nearest integer, halves rounded toward zero so the update
                # never grows the vector.
                mu = (2 * dot + nrm) // (2 * nrm) if dot >= 0 else -((2 * -dot + nrm) // (2 * nrm))
                if mu:
                    before = sum(x * x for x in vecs[i])
                    cand = [x - mu * y for x, y in zip(vecs[i], ref)]
                    if sum(x * x for x in cand) < before:
                        vecs[i] = cand
                        changed = True
        if not changed:
            break
    canon = []
    for v in vecs:
        first = next((x for x in v if x != 0), 0)
        canon.append([-x for x in v] if first < 0 else list(v))
    canon.sort(key=lambda v: (sum(x * x for x in v), v))
    return canon


@functools.lru_cache(maxsize=None)
def _lattice_for_support(m: int, support: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Kernel basis for a given modulus and support; shared across vertices
    with equal support (the lattice depends on nothing else)."""
    coord_rows = []
    cols = [eigenvalue_coordinates(m, j).coords for j in support]
    width = len(cols[0])
    for i in range(width):
        row = [col[i] for col in cols]
        if any(row):
            # All-zero coordinate rows add no constraint.
            coord_rows.append(row)
    coord_rows.append([1] * len(support))
    basis = integer_kernel(coord_rows)
    reduced = size_reduce(basis)
    for vec in reduced:
        _assert_exact_relation(m, support, vec)
    return tuple(tuple(v) for v in reduced)


def _assert_exact_relation(m: int, support: tuple[int, ...], vec: list[int]) -> None:
    width = len(eigenvalue_coordinates(m, support[0]).coords)
    acc = [0] * width
    for j, c in zip(support, vec):
        for i, x in enumerate(eigenvalue_coordinates(m, j).coords):
            acc[i] += c * x
    if any(acc) or sum(vec) != 0:
        raise AssertionError("kernel produced an inexact relation vector")


def relation_lattice(spec: PathSpec, a: int) -> RelationLattice:
    """Integer basis of the relation lattice over the support of vertex a."""
    support = eigenvalue_support(spec, a).sorted_indices
    basis = _lattice_for_support(spec.m, support)
    return RelationLattice(support=support, basis=basis)


def _row_hnf_with_transform(rows: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite form H = U * rows with U unimodular."""
    nrows = len(rows)
    ncols = len(rows[0])
    h = [list(map(int, r)) for r in rows]
    u = [[1 if i == k else 0 for k in range(nrows)] for i in range(nrows)]

    def row_axpy(dst: int, src: int, q: int) -> None:
        if q == 0:
            return
        h[dst] = [x - q * y for x, y in zip(h[dst], h[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    lead = 0
    for col in range(ncols):
        if lead == nrows:
            break
        while True:
            live = [r for r in range(lead, nrows) if h[r][col] != 0]
            if not live:
                break
            pivot = min(live, key=lambda r: (abs(h[r][col]), r))
            done = True
            for r in live:
                if r == pivot:
                    continue
                row_axpy(r, pivot, h[r][col] // h[pivot][col])
                if h[r][col] != 0:
                    done = False
            if done:
                h[lead], h[pivot] = h[pivot], h[lead]
                u[lead], u[pivot] = u[pivot], u[lead]
                if h[lead][col] < 0:
                    h[lead] = [-x for x in h[lead]]
                    u[lead] = [-x for x in u[lead]]
                lead += 1
                break
    return h, u


def express_in_basis(lattice: RelationLattice, vector: tuple[int, ...]) -> tuple[int, ...] | None:
    """Integer coefficients writing ``vector`` in the lattice basis, or None
    when the vector is outside the lattice.  Exact throughout."""
    if len(vector) != len(lattice.support):
        raise ValueError("vector length does not match lattice support")
    if not lattice.basis:
        return () if not any(vector) else None
    h, u = _row_hnf_with_transform([list(v) for v in lattice.basis])
    residual = list(map(int, vector))
    coeffs_h = [0] * len(h)
    for i, row in enumerate(h):
        pivot_col = next((c for c, x in enumerate(row) if x != 0), None)
        if pivot_col is None:
            continue
        q, r = divmod(residual[pivot_col], row[pivot_col])
        if r != 0:
            return None
        if q:
            residual = [x - q * y for x, y in zip(residual, row)]
            coeffs_h[i] = q
    if any(residual):
        return None
    coeffs = [0] * len(lattice.basis)
    for i, c in enumerate(coeffs_h):
        if c:
            for k in range(len(lattice.basis)):
                coeffs[k] += c * u[i][k]
    return tuple(coeffs)
