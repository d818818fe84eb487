"""Exact Chevalley-basis realization and a linear-algebra cross-check.

The algebra is spanned by coroots h_1..h_n and one vector x_alpha per
root.  Structure constants N(alpha,beta) with |N| = p+1 (p the length of
the downward alpha-string through beta) are fixed by choosing +(p+1) on
extraspecial pairs and propagating every other sign through the Jacobi
identity; the construction verifies the Jacobi identity on basis triples
afterwards (exhaustively up to rank 4, sampled above).

Subspaces are kept in a canonical integer echelon form (primitive rows,
positive pivots, fully reduced), so subspace equality is plain equality
of row tuples and every computation is exact.

This module re-derives the kernel filtration, the higher Levi-form
kernels, and minimality by honest bracket arithmetic; it consumes the
involution only through the image root set of the parabolic, never as a
map on the algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .roots import Root, RootSystem, kappa, pairing

Vec = dict[int, int]


# ---------------------------------------------------------------------------
# structure constants


def _neg(r: Root) -> Root:
    return tuple(-c for c in r)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def _string_down(rs: RootSystem, alpha: Root, beta: Root) -> int:
    """p = max k with beta - k*alpha a root."""
    p = 0
    v = _sub(beta, alpha)
    while v in rs.root_lookup:
        p += 1
        v = _sub(v, alpha)
    return p


def _build_n_table(rs: RootSystem) -> dict[tuple[Root, Root], int]:
    """Constants N(alpha,beta) for every ordered pair with alpha+beta a root.

    Positive pairs are filled in increasing height of the sum; the
    extraspecial pair of each sum gets +(p+1) and the remaining pairs are
    solved from a Jacobi relation against the extraspecial pair.  Mixed and
    negative pairs follow from N(-a,-b) = -N(a,b) and the sum-zero cycle
    N(a,b)/kappa(c,c) = N(b,c)/kappa(a,a) for a+b+c = 0.
    """
    order = {r: i for i, r in enumerate(rs.positive_roots)}
    lookup = rs.root_lookup
    npos: dict[tuple[Root, Root], int] = {}

    def kk(a: Root) -> Fraction:
        return kappa(rs, a, a)

    def n_any(x: Root, y: Root) -> Fraction:
        xp = lookup[x] > 0
        yp = lookup[y] > 0
        if xp and yp:
            if order[x] < order[y]:
                return Fraction(npos[(x, y)])
            return Fraction(-npos[(y, x)])
        if not xp and not yp:
            return -n_any(_neg(x), _neg(y))
        if not xp:
            return -n_any(y, x)
        # x positive, y negative, x+y a root
        z = _neg(_add(x, y))
        if lookup[z] > 0:
            return kk(z) / kk(y) * n_any(z, x)
        return kk(z) / kk(x) * n_any(y, z)

    by_height = sorted(rs.positive_roots, key=lambda r: (sum(r), r))
    for gamma in by_height:
        if sum(gamma) < 2:
            continue
        pairs = []
        for alpha in by_height:
            if order[alpha] >= order[gamma]:
                break
            beta = _sub(gamma, alpha)
            if beta in lookup and lookup[beta] > 0 and order[alpha] < order[beta]:
                pairs.append((alpha, beta))
        pairs.sort(key=lambda ab: order[ab[0]])
        assert pairs, "every non-simple positive root is a sum of positive roots"
        ex_alpha, ex_beta = pairs[0]
        npos[(ex_alpha, ex_beta)] = _string_down(rs, ex_alpha, ex_beta) + 1
        for alpha, beta in pairs[1:]:
            # Jacobi on (x_{-a1}, x_alpha, x_beta) with (a1, b1) extraspecial:
            # N(alpha,beta) N(-a1,gamma) = -(N(beta,-a1) N(alpha,beta-a1)
            #                               + N(-a1,alpha) N(beta,alpha-a1))
            acc = Fraction(0)
            d2 = _sub(beta, ex_alpha)
            if d2 in lookup:
                acc += n_any(beta, _neg(ex_alpha)) * n_any(alpha, d2)
            d3 = _sub(alpha, ex_alpha)
            if d3 in lookup:
                acc += n_any(_neg(ex_alpha), alpha) * n_any(beta, d3)
            denom = n_any(_neg(ex_alpha), gamma)
            assert denom != 0
            val = -acc / denom
            expect = _string_down(rs, alpha, beta) + 1
            assert val.denominator == 1 and abs(val) == expect, (
                "structure constant must be an integer of modulus p+1"
            )
            npos[(alpha, beta)] = int(val)

    table: dict[tuple[Root, Root], int] = {}
    for a in rs.roots:
        for b in rs.roots:
            s = _add(a, b)
            if s in lookup:
                val = n_any(a, b)
                assert val.denominator == 1
                n = int(val)
                assert abs(n) == _string_down(rs, a, b) + 1
                table[(a, b)] = n
    for (a, b), n in table.items():
        assert table[(b, a)] == -n
        assert table[(_neg(a), _neg(b))] == -n
    return table


@dataclass(frozen=True, eq=False)
class ChevalleyAlgebra:
    """Bracket tables over the basis h_1..h_n, then x_alpha per root.

    ``coroot`` gives [x_alpha, x_{-alpha}] in coroot coordinates and
    ``h_action`` the integer eigenvalues [h_i, x_alpha] = <alpha|alpha_i>.
    """

    rs: RootSystem
    dim: int
    root_index: dict[Root, int]          # root -> basis coordinate
    basis_root: dict[int, Root]          # basis coordinate -> root
    n_table: dict[tuple[Root, Root], int]
    coroot: dict[Root, tuple[int, ...]]
    h_action: dict[Root, tuple[int, ...]]
    _unit_cache: dict[tuple[int, int], Vec]

    def bracket_units(self, i: int, j: int) -> Vec:
        cached = self._unit_cache.get((i, j))
        if cached is not None:
            return cached
        n = self.rs.rank
        if i < n and j < n:
            out: Vec = {}
        elif i < n:
            c = self.h_action[self.basis_root[j]][i]
            out = {j: c} if c else {}
        elif j < n:
            c = self.h_action[self.basis_root[i]][j]
            out = {i: -c} if c else {}
        else:
            a = self.basis_root[i]
            b = self.basis_root[j]
            s = _add(a, b)
            if not any(s):
                out = {k: c for k, c in enumerate(self.coroot[a]) if c}
            elif s in self.root_index:
                out = {self.root_index[s]: self.n_table[(a, b)]}
            else:
                out = {}
        self._unit_cache[(i, j)] = out
        return out

    def bracket(self, u: Vec, v: Vec) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bracket_units(i, j).items():
                    val = out.get(k, 0) + a * b * c
                    if val:
                        out[k] = val
                    elif k in out:
                        del out[k]
        return out


def _jacobi_defect(ca: ChevalleyAlgebra, i: int, j: int, k: int) -> Vec:
    ei, ej, ek = {i: 1}, {j: 1}, {k: 1}
    out: Vec = {}
    for u, vw in ((ei, (ej, ek)), (ej, (ek, ei)), (ek, (ei, ej))):
        term = ca.bracket(u, ca.bracket(*vw))
        for c, val in term.items():
            new = out.get(c, 0) + val
            if new:
                out[c] = new
            elif c in out:
                del out[c]
    return out


def jacobi_check(ca: ChevalleyAlgebra, sample: int | None = None) -> int:
    """Verify the Jacobi identity on basis triples; returns the number of
    triples checked.  ``sample=None`` checks every i<j<k triple."""
    dim = ca.dim
    if sample is None:
        triples = (
            (i, j, k)
            for i in range(dim)
            for j in range(i + 1, dim)
            for k in range(j + 1, dim)
        )
        count = 0
        for t in triples:
            assert not _jacobi_defect(ca, *t), f"Jacobi fails on {t}"
            count += 1
        return count
    rng = random.Random(20240 + dim)
    count = 0
    for _ in range(sample):
        i, j, k = rng.sample(range(dim), 3)
        assert not _jacobi_defect(ca, i, j, k), f"Jacobi fails on {(i, j, k)}"
        count += 1
    return count


@lru_cache(maxsize=None)
def build_chevalley(rs: RootSystem) -> ChevalleyAlgebra:
    """Build the bracket tables and verify them at construction time."""
    if rs.rank > 8:
        raise ValueError("Chevalley construction is bounded at rank 8")
    n = rs.rank
    root_index: dict[Root, int] = {}
    basis_root: dict[int, Root] = {}
    for beta, signed in sorted(rs.root_lookup.items(), key=lambda kv: (kv[1] < 0, abs(kv[1]))):
        idx = n + len(root_index)
        root_index[beta] = idx
        basis_root[idx] = beta
    n_table = _build_n_table(rs)

    coroot: dict[Root, tuple[int, ...]] = {}
    h_action: dict[Root, tuple[int, ...]] = {}
    for beta in rs.roots:
        kbb = kappa(rs, beta, beta)
        co = []
        for i, c in enumerate(beta):
            val = c * rs.form[i][i] / kbb
            assert val.denominator == 1, "coroots are integral over the coroot basis"
            co.append(int(val))
        coroot[beta] = tuple(co)
        acts = []
        for i in range(n):
            val = pairing(rs, beta, rs.simple(i + 1))
            assert isinstance(val, int)
            acts.append(val)
        h_action[beta] = tuple(acts)

    ca = ChevalleyAlgebra(
        rs=rs,
        dim=n + len(rs.roots),
        root_index=root_index,
        basis_root=basis_root,
        n_table=n_table,
        coroot=coroot,
        h_action=h_action,
        _unit_cache={},
    )
    jacobi_check(ca, sample=None if rs.rank <= 4 else 4000)
    return ca


# ---------------------------------------------------------------------------
# exact subspaces


def _primitive(row: Vec) -> Vec:
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    pivot = min(row)
    if row[pivot] < 0:
        row = {c: -v for c, v in row.items()}
    return row


def _eliminate(row: Vec, by: Vec, col: int) -> Vec:
    """Cross-multiplied elimination of ``col`` from ``row`` by ``by``."""
    a = by[col]
    b = row[col]
    out: Vec = {}
    for c in set(row) | set(by):
        v = a * row.get(c, 0) - b * by.get(c, 0)
        if v:
            out[c] = v
    return out


class Subspace:
    """A rational subspace in canonical integer echelon form.

    Rows are primitive integer vectors, fully reduced with positive
    pivots; two Subspace objects are equal iff the spaces coincide.
    """

    __slots__ = ("ambient_dim", "rows", "pivots", "_by_pivot")

    def __init__(self, ambient_dim: int, vectors=()):
        self.ambient_dim = ambient_dim
        by_pivot: dict[int, Vec] = {}
        for v in vectors:
            row = {c: int(x) for c, x in (v.items() if isinstance(v, dict) else v) if x}
            while row:
                p = min(row)
                if p in by_pivot:
                    row = _eliminate(row, by_pivot[p], p)
                else:
                    by_pivot[p] = _primitive(row)
                    break
        # back-reduce from the largest pivot down, then normalize
        pivots = sorted(by_pivot)
        for p in reversed(pivots):
            row = by_pivot[p]
            for q in pivots:
                if q > p and q in row:
                    row = _eliminate(row, by_pivot[q], q)
            by_pivot[p] = _primitive(row)
        self.pivots = tuple(pivots)
        self._by_pivot = {p: by_pivot[p] for p in pivots}
        self.rows = tuple(
            tuple(sorted(by_pivot[p].items())) for p in pivots
        )

    @property
    def dim(self) -> int:
        return len(self.rows)

    def row_vecs(self) -> list[Vec]:
        return [dict(r) for r in self.rows]

    def reduce(self, vec: Vec) -> Vec:
        """Residue of a vector modulo the subspace (zero iff contained)."""
        by_pivot = self._by_pivot
        row = {c: v for c, v in vec.items() if v}
        while row:
            p = min(row)
            if p not in by_pivot:
                break
            row = _eliminate(row, by_pivot[p], p)
        return row

    def contains(self, vec: Vec) -> bool:
        return not self.reduce(vec)

    def sum_with(self, other: "Subspace") -> "Subspace":
        assert self.ambient_dim == other.ambient_dim
        return Subspace(self.ambient_dim, list(self.rows) + list(other.rows))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.rows))

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(dict(r)) for r in self.rows)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Subspace(dim={self.dim} of {self.ambient_dim})"


def kernel_basis(num_unknowns: int, equations) -> list[Vec]:
    """Primitive integer basis of the solution space of a homogeneous
    integer system; deterministic, ordered by free column."""
    eq = Subspace(num_unknowns, equations)
    by_pivot = {p: dict(r) for p, r in zip(eq.pivots, eq.rows)}
    free = [c for c in range(num_unknowns) if c not in by_pivot]
    basis: list[Vec] = []
    for f in free:
        sol: dict[int, Fraction] = {f: Fraction(1)}
        for p in sorted(by_pivot, reverse=True):
            row = by_pivot[p]
            acc = sum((Fraction(v) * sol.get(c, Fraction(0)) for c, v in row.items() if c != p), Fraction(0))
            if acc:
                sol[p] = -acc / row[p]
        scale = 1
        for v in sol.values():
            scale = scale * v.denominator // gcd(scale, v.denominator)
        vec = {c: int(v * scale) for c, v in sol.items() if v}
        basis.append(_primitive(vec))
    return basis


# ---------------------------------------------------------------------------
# oracle operations


def subspace_from_rootset(ca: ChevalleyAlgebra, root_set, include_cartan: bool) -> Subspace:
    """Span of the named root vectors, plus the full Cartan if requested."""
    vecs: list[Vec] = []
    if include_cartan:
        vecs.extend({i: 1} for i in range(ca.rs.rank))
    for beta in root_set:
        vecs.append({ca.root_index[beta]: 1})
    return Subspace(ca.dim, vecs)


def subspace_root_content(ca: ChevalleyAlgebra, sub: Subspace) -> tuple[frozenset[Root], int]:
    """Decompose an ad(Cartan)-stable subspace into its root set and its
    Cartan dimension; asserts every echelon row is supported either on a
    single root coordinate or inside the Cartan block."""
    n = ca.rs.rank
    roots = []
    cartan = 0
    for row in sub.rows:
        cols = [c for c, _ in row]
        if all(c < n for c in cols):
            cartan += 1
        else:
            assert len(cols) == 1, "row mixes root spaces; subspace is not a root-space sum"
            roots.append(ca.basis_root[cols[0]])
    return frozenset(roots), cartan


def _combinations_of(basis: list[Vec], coefficients: list[Vec], dim: int) -> Subspace:
    """Span of the given coefficient combinations of basis vectors."""
    vectors = []
    for t in coefficients:
        w: Vec = {}
        for i, coeff in t.items():
            for c, v in basis[i].items():
                nv = w.get(c, 0) + coeff * v
                if nv:
                    w[c] = nv
                elif c in w:
                    del w[c]
        vectors.append(w)
    return Subspace(dim, vectors)


def _one_step_kernel(ca: ChevalleyAlgebra, level: Subspace, sigma_q: Subspace) -> Subspace:
    """{w in level : [w, sigma_q] inside level + sigma_q}, by kernel solving."""
    span = level.sum_with(sigma_q)
    basis = level.row_vecs()
    right = sigma_q.row_vecs()
    equations: dict[tuple[int, int], Vec] = {}
    for i, b in enumerate(basis):
        for j, v in enumerate(right):
            residue = span.reduce(ca.bracket(b, v))
            for coord, val in residue.items():
                equations.setdefault((j, coord), {})[i] = val
    ker = kernel_basis(len(basis), list(equations.values()))
    return _combinations_of(basis, ker, ca.dim)


def oracle_filtration(ca: ChevalleyAlgebra, q_sub: Subspace, sigma_q: Subspace) -> list[Subspace]:
    """The descending kernel chain computed by literal bracket arithmetic,
    up to and including the first stationary subspace."""
    levels = [q_sub]
    while True:
        nxt = _one_step_kernel(ca, levels[-1], sigma_q)
        if nxt == levels[-1]:
            break
        assert nxt.dim < levels[-1].dim and nxt <= levels[-1]
        levels.append(nxt)
        assert len(levels) <= q_sub.dim + 1
    return levels


def levi_tensor_kernel(ca: ChevalleyAlgebra, levels: list[Subspace], sigma_q: Subspace, k: int) -> Subspace:
    """Left kernel of the k-th bracket tensor
    level[k-1] x sigma_q -> ambient / (level[k-1] + sigma_q),
    assembled as one explicit linear map and solved exactly.  Must equal
    level k of the chain (a fixed point at the stationary level)."""
    assert k >= 1
    base = levels[min(k - 1, len(levels) - 1)]
    denom = base.sum_with(sigma_q)
    basis = base.row_vecs()
    right = sigma_q.row_vecs()
    rows: dict[tuple[int, int], Vec] = {}
    for i, b in enumerate(basis):
        for j, v in enumerate(right):
            residue = denom.reduce(ca.bracket(b, v))
            for coord, val in residue.items():
                rows.setdefault((j, coord), {})[i] = val
    ker = kernel_basis(len(basis), [rows[key] for key in sorted(rows)])
    return _combinations_of(basis, ker, ca.dim)


def oracle_minimality(ca: ChevalleyAlgebra, q_plus: Subspace) -> bool:
    """Iterate V <- V + [V, V] to stabilization; True iff V fills the
    algebra."""
    current = q_plus
    while True:
        rows = current.row_vecs()
        new_vectors = list(current.rows)
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                new_vectors.append(ca.bracket(rows[i], rows[j]))
        nxt = Subspace(ca.dim, new_vectors)
        if nxt == current:
            return current.dim == ca.dim
        current = nxt
