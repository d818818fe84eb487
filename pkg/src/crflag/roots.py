"""Finite root systems of the simple complex Lie algebras.

Everything lives on the root lattice: a root is a tuple of integer
coefficients over the simple roots alpha_1 .. alpha_n in the Bourbaki
numbering (for B-types the last simple root is short, for C-types the
last one is long, for G2 the first one is short).  The invariant form
kappa is normalized so that long roots have squared length 2; with that
choice every Cartan pairing <beta|gamma> of two roots is an exact
integer and all arithmetic stays in ``int``/``Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Root = tuple[int, ...]


class UnknownRootSystem(ValueError):
    """Raised when (family, rank) does not name a simple type."""


_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"E": 8, "F": 4, "G": 2}

FAMILIES = tuple(_MIN_RANK)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable root system data; safe to share between threads.

    ``root_lookup`` maps a coefficient tuple to a signed id: positive
    roots get 1..N in construction order (by height, then lexicographic),
    their negatives get the negated id.
    """

    family: str
    rank: int
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Root, ...]
    form: tuple[tuple[Fraction, ...], ...]
    root_lookup: dict[Root, int]
    roots: tuple[Root, ...]

    @property
    def zero(self) -> Root:
        return (0,) * self.rank

    def simple(self, i: int) -> Root:
        """The simple root alpha_i, 1-based."""
        if not 1 <= i <= self.rank:
            raise ValueError(f"simple root index {i} out of range 1..{self.rank}")
        return tuple(int(j == i - 1) for j in range(self.rank))

    def is_root(self, v: Root) -> bool:
        return v in self.root_lookup

    def __repr__(self) -> str:  # pragma: no cover
        return f"RootSystem({self.family}{self.rank})"


def is_valid_type(family: str, rank: int) -> bool:
    lo = _MIN_RANK.get(family)
    if lo is None or rank < lo:
        return False
    hi = _MAX_RANK.get(family)
    return hi is None or rank <= hi


def _cartan_and_lengths(family: str, rank: int):
    """Cartan matrix A[i][j] = <alpha_i|alpha_j> and half squared lengths d."""
    A = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        A[i][i] = 2

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        A[i][j] = aij
        A[j][i] = aji

    half = Fraction(1, 2)
    d = [Fraction(1)] * rank
    if family == "A":
        for i in range(rank - 1):
            bond(i, i + 1)
    elif family == "B":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1, -2, -1)
        d[rank - 1] = half
    elif family == "C":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 2, rank - 1, -1, -2)
        d = [half] * (rank - 1) + [Fraction(1)]
    elif family == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
    elif family == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, rank - 1):
            bond(i, i + 1)
    elif family == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
        d[2] = d[3] = half
    elif family == "G":
        bond(0, 1, -1, -3)
        d[0] = Fraction(1, 3)
    else:  # pragma: no cover - guarded by caller
        raise UnknownRootSystem(family)
    return tuple(tuple(row) for row in A), tuple(d)


def _positive_closure(rank: int, form) -> list[Root]:
    """Generate the positive roots by closing the simple roots upward.

    beta + alpha_i is a root iff the alpha_i-string through beta extends
    upward, i.e. p - <beta|alpha_i> >= 1 where p counts the downward steps.
    """

    def pair_simple(beta: Root, i: int) -> int:
        val = 2 * sum(beta[j] * form[j][i] for j in range(rank)) / form[i][i]
        assert val.denominator == 1, "Cartan pairing must be integral"
        return int(val)

    simples = [tuple(int(j == i) for j in range(rank)) for i in range(rank)]
    known: set[Root] = set(simples)
    positives: list[Root] = sorted(simples)
    current: list[Root] = positives[:]
    while current:
        fresh: set[Root] = set()
        for beta in current:
            for i in range(rank):
                p = 0
                v = tuple(b - int(j == i) for j, b in enumerate(beta))
                while v in known:
                    p += 1
                    v = tuple(b - int(j == i) for j, b in enumerate(v))
                if p - pair_simple(beta, i) >= 1:
                    s = tuple(b + int(j == i) for j, b in enumerate(beta))
                    if s not in known:
                        fresh.add(s)
        current = sorted(fresh)
        known.update(fresh)
        positives.extend(current)
    return positives


@lru_cache(maxsize=None)
def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system of the given simple type.

    Raises UnknownRootSystem for pairs outside A(n>=1), B(n>=2), C(n>=3),
    D(n>=4), E(6..8), F4, G2.
    """
    if not isinstance(rank, int) or not is_valid_type(family, rank):
        raise UnknownRootSystem(f"{family!r} rank {rank!r} is not a simple type")
    cartan, d = _cartan_and_lengths(family, rank)
    form = tuple(
        tuple(d[j] * cartan[i][j] for j in range(rank)) for i in range(rank)
    )
    for i in range(rank):
        for j in range(rank):
            assert form[i][j] == form[j][i], "kappa must be symmetric"
    positives = _positive_closure(rank, form)
    lookup: dict[Root, int] = {}
    for idx, beta in enumerate(positives, start=1):
        lookup[beta] = idx
        lookup[tuple(-c for c in beta)] = -idx
    all_roots = tuple(positives) + tuple(tuple(-c for c in beta) for beta in positives)
    rs = RootSystem(
        family=family,
        rank=rank,
        cartan_matrix=cartan,
        positive_roots=tuple(positives),
        form=form,
        root_lookup=lookup,
        roots=all_roots,
    )
    # The highest root must exist and dominate coefficient-wise.
    top = highest_root(rs)
    assert all(all(t >= b for t, b in zip(top, beta)) for beta in positives)
    return rs


def kappa(rs: RootSystem, beta: Root, gamma: Root) -> Fraction:
    """The invariant form on the root lattice (long roots have kappa=2)."""
    total = Fraction(0)
    for i, b in enumerate(beta):
        if b:
            row = rs.form[i]
            total += b * sum(row[j] * g for j, g in enumerate(gamma) if g)
    return total


@lru_cache(maxsize=None)
def int_form(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """6 * kappa as an integer matrix (6 clears every denominator that the
    length normalization can produce); for fast exact inner products."""
    scaled = tuple(tuple(6 * x for x in row) for row in rs.form)
    assert all(v.denominator == 1 for row in scaled for v in row)
    return tuple(tuple(int(v) for v in row) for row in scaled)


@lru_cache(maxsize=None)
def root_sum_table(rs: RootSystem) -> dict[tuple[Root, Root], Root]:
    """Precomputed root sums: (alpha, beta) -> alpha+beta for exactly the
    pairs whose sum is again a root."""
    lookup = rs.root_lookup
    table: dict[tuple[Root, Root], Root] = {}
    for a in rs.roots:
        for b in rs.roots:
            s = tuple(x + y for x, y in zip(a, b))
            if s in lookup:
                table[(a, b)] = s
    return table


def pairing(rs: RootSystem, beta: Root, gamma: Root):
    """Cartan pairing <beta|gamma> = 2 kappa(beta,gamma) / kappa(gamma,gamma).

    Returns an ``int`` when the value is integral (always the case for two
    roots) and a ``Fraction`` otherwise.  gamma = 0 raises ZeroDivisionError.
    """
    denom = kappa(rs, gamma, gamma)
    if denom == 0:
        raise ZeroDivisionError("pairing <.|gamma> needs kappa(gamma,gamma) != 0")
    val = 2 * kappa(rs, beta, gamma) / denom
    return int(val) if val.denominator == 1 else val


def add_roots(rs: RootSystem, beta: Root, gamma: Root) -> Root | None:
    """Classify beta + gamma: the sum if it is a root, the zero tuple if
    gamma = -beta, and None if the sum is neither (bracket vanishes)."""
    if beta not in rs.root_lookup or gamma not in rs.root_lookup:
        raise ValueError("add_roots expects two roots")
    s = tuple(b + g for b, g in zip(beta, gamma))
    if s in rs.root_lookup:
        return s
    if not any(s):
        return rs.zero
    return None


def highest_root(rs: RootSystem) -> Root:
    """The unique maximal root in the coefficient-wise partial order."""
    maximal = [
        beta
        for beta in rs.positive_roots
        if not any(
            other != beta and all(o >= b for o, b in zip(other, beta))
            for other in rs.positive_roots
        )
    ]
    assert len(maximal) == 1, "simple systems have a unique highest root"
    return maximal[0]


def format_root(root: Root) -> str:
    """Render a lattice vector: digit string like "-112" when every
    coefficient fits in one digit and the rank is at most 9, otherwise
    comma-separated signed integers in parentheses."""
    rank = len(root)
    uniform = all(c >= 0 for c in root) or all(c <= 0 for c in root)
    if rank <= 9 and uniform and all(abs(c) <= 9 for c in root):
        digits = "".join(str(abs(c)) for c in root)
        return "-" + digits if any(c < 0 for c in root) else digits
    return "(" + ",".join(str(c) for c in root) + ")"


def parse_root(text: str, rank: int) -> Root:
    """Parse either root string format back into a coefficient tuple."""
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        parts = t[1:-1].split(",")
        if len(parts) != rank:
            raise ValueError(f"expected {rank} coefficients in {text!r}")
        return tuple(int(p) for p in parts)
    sign = 1
    if t.startswith("-"):
        sign = -1
        t = t[1:]
    if len(t) != rank or not t.isdigit():
        raise ValueError(f"malformed root string {text!r} for rank {rank}")
    return tuple(sign * int(ch) for ch in t)
