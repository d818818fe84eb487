"""Parabolic subalgebras encoded as root sets.

A parabolic containing the fixed Borel is determined by the subset of
simple roots it keeps; the Borel itself consists of the negative roots.
The root set is all negative roots plus the positive roots supported on
the kept subset.
"""

from __future__ import annotations

from dataclasses import dataclass

from .roots import Root, RootSystem, highest_root, root_sum_table


class NotMaximal(ValueError):
    """Raised by operations defined only for maximal parabolics."""


@dataclass(frozen=True)
class ParabolicData:
    qr: frozenset[int]          # kept simple-root indices, 1-based
    root_set: frozenset[Root]
    is_maximal: bool
    removed_index: int | None   # the single deleted simple root when maximal


def parabolic_from_subset(rs: RootSystem, qr) -> ParabolicData:
    """Build the parabolic keeping the 1-based simple roots in ``qr``."""
    kept = frozenset(qr)
    for i in kept:
        if not isinstance(i, int) or not 1 <= i <= rs.rank:
            raise ValueError(f"simple root index {i!r} out of range 1..{rs.rank}")
    roots = {tuple(-c for c in beta) for beta in rs.positive_roots}
    for beta in rs.positive_roots:
        if all(c == 0 or (i + 1) in kept for i, c in enumerate(beta)):
            roots.add(beta)
    removed = sorted(set(range(1, rs.rank + 1)) - kept)
    p = ParabolicData(
        qr=kept,
        root_set=frozenset(roots),
        is_maximal=len(removed) == 1,
        removed_index=removed[0] if len(removed) == 1 else None,
    )
    assert check_root_set_closed(rs, p.root_set), "parabolic root set must be bracket-closed"
    assert {b for b in p.root_set if sum(b) == 1 and all(c >= 0 for c in b)} == {
        rs.simple(i) for i in kept
    }
    return p


def check_root_set_closed(rs: RootSystem, root_set) -> bool:
    """True iff the set is closed under root addition inside Phi."""
    members = set(root_set)
    sums = root_sum_table(rs)
    for a in members:
        for b in members:
            s = sums.get((a, b))
            if s is not None and s not in members:
                return False
    return True


def c_of_q(rs: RootSystem, p: ParabolicData) -> int:
    """Largest coefficient of the removed simple root over the positive
    roots; defined only for maximal parabolics."""
    if not p.is_maximal:
        raise NotMaximal("c(q) is only defined for a maximal parabolic")
    qi = p.removed_index - 1
    c = max(beta[qi] for beta in rs.positive_roots)
    assert c == highest_root(rs)[qi]
    return c


def gradation(rs: RootSystem, p: ParabolicData) -> dict[int, frozenset[Root]]:
    """Partition of Phi by the removed-index coefficient, j in [-c, c].

    The j = 0 part is the root set of the reductive part of the parabolic;
    the union of the parts with j <= 0 is the parabolic root set.
    """
    if not p.is_maximal:
        raise NotMaximal("the gradation needs a maximal parabolic")
    qi = p.removed_index - 1
    c = c_of_q(rs, p)
    parts = {j: set() for j in range(-c, c + 1)}
    for beta in rs.roots:
        parts[beta[qi]].add(beta)
    out = {j: frozenset(s) for j, s in parts.items()}
    assert frozenset().union(*(out[j] for j in range(-c, 1))) == p.root_set
    return out


def has_nonresonant_field(rs: RootSystem, p: ParabolicData) -> bool:
    """True iff no two roots outside the parabolic sum to a root outside it.

    For a maximal parabolic this is equivalent to c(q) = 1, the Hermitian
    case.  Vacuously true when the complement is empty.
    """
    phi_n = [beta for beta in rs.roots if beta not in p.root_set]
    complement = set(phi_n)
    sums = root_sum_table(rs)
    for a in phi_n:
        for b in phi_n:
            if sums.get((a, b)) in complement:
                return False
    return True
