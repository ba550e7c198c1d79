"""Exhaustive brute-force oracles for the relation-lattice machinery.

These deliberately avoid the Hermite-reduction code path: relations are
found by enumerating every integer vector in a box and keeping those whose
exact coordinate sums vanish.  Both sides share only the power-basis
coordinates of the eigenvalues, which are validated numerically elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import eigenvalue_coordinates
from .decider import family_rule
from .lattice import relation_lattice
from .spectrum import PathSpec, eigenvalue_support

NODE_BUDGET = 10**8


@dataclass(frozen=True)
class BruteForceRelation:
    """A box-bounded relation vector found by exhaustive search; ``verified``
    records that the exact coordinate sum and the entry sum are both zero."""

    support: tuple[int, ...]
    vector: tuple[int, ...]
    verified: bool


def brute_force_relations(
    spec: PathSpec, a: int, bound: int, node_budget: int = NODE_BUDGET
) -> list[BruteForceRelation]:
    """All vectors with entries in [-bound, bound] over the support of ``a``
    satisfying both lattice constraints exactly, in lexicographic order.

    Depth-first enumeration ordered by support index, entries ascending.
    Branches are cut as soon as the running ones-row sum (or any running
    coordinate-row sum) can no longer reach zero within the bound; pruning
    never changes the emitted set or its order.  Enumeration aborts once
    ``node_budget`` search nodes have been visited.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    support = eigenvalue_support(spec, a).sorted_indices
    cols = [eigenvalue_coordinates(spec.m, j).coords for j in support]
    width = len(cols[0])
    depth_total = len(support)

    # suffix_reach[c][d]: max |contribution| of columns d.. to coordinate row c.
    suffix_reach = [[0] * (depth_total + 1) for _ in range(width)]
    ones_reach = [0] * (depth_total + 1)
    for d in range(depth_total - 1, -1, -1):
        ones_reach[d] = ones_reach[d + 1] + bound
        for c in range(width):
            suffix_reach[c][d] = suffix_reach[c][d + 1] + bound * abs(cols[d][c])

    found: list[BruteForceRelation] = []
    partial = [0] * width
    chosen = [0] * depth_total
    visited = 0

    def descend(depth: int, ones_sum: int) -> None:
        nonlocal visited
        visited += 1
        if visited > node_budget:
            raise RuntimeError(
                f"enumeration guard exceeded ({node_budget} nodes) for "
                f"support size {depth_total}, bound {bound}"
            )
        if depth == depth_total:
            if ones_sum == 0 and not any(partial):
                found.append(BruteForceRelation(
                    support=support, vector=tuple(chosen), verified=True,
                ))
            return
        if abs(ones_sum) > ones_reach[depth]:
            return
        col = cols[depth]
        for c in range(width):
            if abs(partial[c]) > suffix_reach[c][depth]:
                return
        for value in range(-bound, bound + 1):
            chosen[depth] = value
            if value != 0:
                for c in range(width):
                    if col[c]:
                        partial[c] += value * col[c]
            descend(depth + 1, ones_sum + value)
            if value != 0:
                for c in range(width):
                    if col[c]:
                        partial[c] -= value * col[c]
        chosen[depth] = 0

    descend(0, 0)
    return found


def verify_relation(spec: PathSpec, a: int, vector: tuple[int, ...]) -> bool:
    """Exact re-check of both constraints for a vector over the support of a."""
    support = eigenvalue_support(spec, a).sorted_indices
    if len(vector) != len(support):
        raise ValueError(
            f"vector has {len(vector)} entries but the support of vertex {a} "
            f"has {len(support)}"
        )
    if sum(vector) != 0:
        return False
    width = len(eigenvalue_coordinates(spec.m, support[0]).coords)
    acc = [0] * width
    for j, c in zip(support, vector):
        if c:
            for i, x in enumerate(eigenvalue_coordinates(spec.m, j).coords):
                acc[i] += c * x
    return not any(acc)


def coefficient_identity_check(spec: PathSpec, a: int) -> bool:
    """For orders n+1 = 2^t * p with 2^(t-1) | a: every lattice basis vector
    must satisfy l_j = l_{m-j} for all even j (entries off the support count
    as zero).  Mirrored even indices share support membership, so the check
    reduces to comparing paired in-support entries."""
    if not family_rule(spec.n, a):
        raise ValueError(f"(n={spec.n}, a={a}) is not in the 2^t*p - 1 family")
    lattice = relation_lattice(spec, a)
    m = spec.m
    pos = {j: i for i, j in enumerate(lattice.support)}
    for vec in lattice.basis:
        for j in lattice.support:
            if j % 2 == 0:
                mirrored = m - j
                left = vec[pos[j]]
                right = vec[pos[mirrored]] if mirrored in pos else 0
                if left != right:
                    return False
    return True
