"""Finite modules over k with sigma-semilinear F and sigma^(-1)-semilinear V.

A module here is a k-vector space of small dimension together with matrices
A, B acting by F(v) = A.sigma(v) and V(v) = B.sigma_inv(v), where sigma is
coordinatewise x -> x^p.  Constructors produce the dimension-4 modules
attached to ordinary and nonordinary abelian-surface p-torsion, plus the
real-multiplication actions (split idempotents or a sqrt(D) companion
block).  pM = 0 throughout, so F.V = V.F = 0 is an invariant of every
constructor and is enforced on build.

Everything is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


class ModuleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# linear algebra over a residue field ring (n = 1)

def vec_add(k, u, v):
    return tuple(k.add(a, b) for a, b in zip(u, v))


def vec_sub(k, u, v):
    return tuple(k.sub(a, b) for a, b in zip(u, v))


def vec_scale(k, c, u):
    return tuple(k.mul(c, a) for a in u)


def vec_is_zero(k, u):
    return all(a == k.zero for a in u)


def mat_vec(k, m, v):
    return tuple(
        _dot(k, row, v) for row in m
    )


def _dot(k, row, v):
    acc = k.zero
    for a, b in zip(row, v):
        if a != k.zero and b != k.zero:
            acc = k.add(acc, k.mul(a, b))
    return acc


def mat_mul(k, m1, m2):
    n = len(m2[0])
    cols = [tuple(row[j] for row in m2) for j in range(n)]
    return tuple(tuple(_dot(k, row, col) for col in cols) for row in m1)


def mat_map(k, m, f):
    return tuple(tuple(f(a) for a in row) for row in m)


def identity_matrix(k, n):
    return tuple(
        tuple(k.one if i == j else k.zero for j in range(n)) for i in range(n)
    )


def zero_matrix(k, n):
    return tuple((k.zero,) * n for _ in range(n))


def transpose(m):
    return tuple(tuple(row[j] for row in m) for j in range(len(m[0])))


def row_reduce(k, rows):
    """Reduced row echelon basis of the span of the given vectors."""
    rows = [list(r) for r in rows if not vec_is_zero(k, r)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != k.zero:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = k.inv(rows[r][c])
        rows[r] = [k.mul(inv, a) for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != k.zero:
                co = rows[i][c]
                rows[i] = [k.sub(rows[i][j], k.mul(co, rows[r][j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    basis = tuple(tuple(row) for row in rows[:r] if not all(a == k.zero for a in row))
    return basis, tuple(pivots)


def rank(k, rows):
    basis, _ = row_reduce(k, rows)
    return len(basis)


def in_span(k, basis, v):
    return rank(k, list(basis) + [v]) == len(basis)


def subspace_key(k, basis):
    """Canonical (echelon) key identifying the subspace spanned by basis."""
    b, _ = row_reduce(k, basis)
    return b


def enumerate_subspaces(k, ambient_dim: int, dim: int):
    """All dim-dimensional subspaces of k^ambient_dim, one echelon basis each.

    Enumerates reduced echelon matrices by pivot pattern; the count matches
    the Gaussian binomial coefficient exactly.
    """
    if dim == 0:
        yield ()
        return
    els = list(k.elements())
    for pivots in _pivot_patterns(ambient_dim, dim):
        free = []
        for r in range(dim):
            for c in range(pivots[r] + 1, ambient_dim):
                if c not in pivots:
                    free.append((r, c))
        for vals in product(els, repeat=len(free)):
            rows = [[k.zero] * ambient_dim for _ in range(dim)]
            for r in range(dim):
                rows[r][pivots[r]] = k.one
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            yield tuple(tuple(row) for row in rows)


def _pivot_patterns(n, r):
    from itertools import combinations

    return combinations(range(n), r)


def gaussian_binomial(n: int, r: int, q: int) -> int:
    num = 1
    den = 1
    for i in range(r):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# Dieudonne modules

@dataclass(frozen=True)
class DieudonneModule:
    """k-space with F(v) = F_matrix.sigma(v), V(v) = V_matrix.sigma_inv(v)."""

    field: object
    dim: int
    F_matrix: tuple
    V_matrix: tuple
    labels: tuple = ()

    def __post_init__(self):
        k = self.field
        # FV = 0 <=> A.sigma(B) = 0, VF = 0 <=> B.sigma_inv(A) = 0
        a_sb = mat_mul(k, self.F_matrix, mat_map(k, self.V_matrix, k.frobenius))
        b_sa = mat_mul(k, self.V_matrix, mat_map(k, self.F_matrix, k.frobenius_inv))
        if a_sb != zero_matrix(k, self.dim) or b_sa != zero_matrix(k, self.dim):
            raise ModuleError("FV = VF = 0 violated")

    def apply_F(self, v):
        k = self.field
        return mat_vec(k, self.F_matrix, tuple(k.frobenius(a) for a in v))

    def apply_V(self, v):
        k = self.field
        return mat_vec(k, self.V_matrix, tuple(k.frobenius_inv(a) for a in v))

    def basis(self):
        return identity_matrix(self.field, self.dim)


def build_ordinary_module(k, mu=None, chi=None) -> DieudonneModule:
    """Ordinary surface p-torsion: e1,e2 etale with F through (1 mu; 0 chi),
    e3,e4 multiplicative with F = 0 and V the identity there."""
    mu = k.zero if mu is None else mu
    chi = k.one if chi is None else chi
    if chi == k.zero:
        raise ModuleError("chi must be invertible")
    z, o = k.zero, k.one
    F = (
        (o, mu, z, z),
        (z, chi, z, z),
        (z, z, z, z),
        (z, z, z, z),
    )
    V = (
        (z, z, z, z),
        (z, z, z, z),
        (z, z, o, z),
        (z, z, z, o),
    )
    return DieudonneModule(k, 4, F, V, labels=("etale", "etale", "mult", "mult"))


def build_nonordinary_module(k) -> DieudonneModule:
    """Nonordinary, nonsupersingular surface p-torsion: a local-local plane
    (F: e2 -> e1 -> 0, V: e2 -> e1 -> 0) plus one multiplicative and one
    etale line.  F image is span(e1, e4); the local-local F-cokernel is one
    dimensional."""
    z, o = k.zero, k.one
    F = (
        (z, o, z, z),
        (z, z, z, z),
        (z, z, z, z),
        (z, z, z, o),
    )
    V = (
        (z, o, z, z),
        (z, z, z, z),
        (z, z, o, z),
        (z, z, z, z),
    )
    return DieudonneModule(k, 4, F, V, labels=("local-local", "local-local", "mult", "etale"))


def build_line_module(k, kind: str) -> DieudonneModule:
    """One-dimensional modules: the constant group (F bijective, V = 0) or
    its Cartier dual (F = 0, V bijective)."""
    z, o = k.zero, k.one
    if kind == "constant":
        return DieudonneModule(k, 1, ((o,),), ((z,),), labels=("etale",))
    if kind == "mult":
        return DieudonneModule(k, 1, ((z,),), ((o,),), labels=("mult",))
    raise ModuleError(f"unknown kind {kind!r}")


def is_etale(m: DieudonneModule) -> bool:
    """F surjective as a semilinear map, i.e. full matrix rank."""
    return rank(m.field, m.F_matrix) == m.dim


def is_connected(m: DieudonneModule) -> bool:
    """F nilpotent: the d-fold semilinear composite kills everything."""
    k = m.field
    comp = m.F_matrix
    for _ in range(m.dim - 1):
        comp = mat_mul(k, m.F_matrix, mat_map(k, comp, k.frobenius))
    return comp == zero_matrix(k, m.dim)


_DUAL_LABEL = {"etale": "mult", "mult": "etale", "local-local": "local-local"}


def dual(m: DieudonneModule) -> DieudonneModule:
    """The Cartier-dual module: F and V swap, transposed with the twists
    that keep semilinearity (F* = sigma(V)^T, V* = sigma_inv(F)^T)."""
    k = m.field
    Fd = transpose(mat_map(k, m.V_matrix, k.frobenius))
    Vd = transpose(mat_map(k, m.F_matrix, k.frobenius_inv))
    labels = tuple(_DUAL_LABEL.get(l, l) for l in m.labels)
    return DieudonneModule(k, m.dim, Fd, Vd, labels=labels)


def image_F(m: DieudonneModule):
    """Echelon basis of F(M) (the column space of F_matrix)."""
    basis, _ = row_reduce(m.field, transpose(m.F_matrix))
    return basis


def is_sub_dieudonne(m: DieudonneModule, basis) -> bool:
    """Is the given subspace F- and V-stable (with the semilinear twists)?"""
    k = m.field
    if rank(k, basis) != len(basis):
        raise ModuleError("basis vectors are not independent")
    span, _ = row_reduce(k, basis)
    for v in basis:
        if not in_span(k, span, m.apply_F(v)):
            return False
        if not in_span(k, span, m.apply_V(v)):
            return False
    return True


# ---------------------------------------------------------------------------
# real multiplication data

@dataclass(frozen=True)
class RMStructure:
    """Action of the two W-algebra generators on a dim-4 module.

    split: orthogonal idempotents f1, f2 (pattern depends on which blocks
    each eigenfactor occupies); inert: the identity and a sqrt(D) companion
    block acting identically on the etale and multiplicative planes.
    """

    kind: str
    action_matrices: tuple
    D: int | None = None


def rm_split_ordinary(k) -> RMStructure:
    z, o = k.zero, k.one
    f1 = _diag(k, (o, z, o, z))
    f2 = _diag(k, (z, o, z, o))
    return RMStructure("split", (f1, f2))


def rm_split_nonordinary(k) -> RMStructure:
    z, o = k.zero, k.one
    f1 = _diag(k, (o, o, z, z))
    f2 = _diag(k, (z, z, o, o))
    return RMStructure("split", (f1, f2))


def rm_inert(k, D: int) -> RMStructure:
    """sqrt(D) acting as the companion matrix (0 D; 1 0) on both planes.

    Requires X^2 - D irreducible over k, i.e. D a non-square; possible only
    when d is odd since every F_p scalar is a square in F_{p^2}.
    """
    fld_d = k.from_int(D)
    if _has_sqrt(k, fld_d):
        raise ModuleError(f"D={D} is a square in F_{k.p}^{k.d}; inert action needs a non-square")
    z, o = k.zero, k.one
    s = (
        (z, fld_d, z, z),
        (o, z, z, z),
        (z, z, z, fld_d),
        (z, z, o, z),
    )
    return RMStructure("inert", (identity_matrix(k, 4), s), D=D)


def _diag(k, entries):
    n = len(entries)
    return tuple(
        tuple(entries[i] if i == j else k.zero for j in range(n)) for i in range(n)
    )


def _has_sqrt(k, a) -> bool:
    if a == k.zero:
        return True
    q = k.p ** k.d
    return k.pow(a, (q - 1) // 2) == k.one


def rm_commutes(rm: RMStructure, m: DieudonneModule) -> bool:
    """O-action must be by endomorphisms: each generator commutes with the
    semilinear F and V.  For S with entries in F_p this reduces to plain
    matrix commutation; checked in full twisted generality anyway."""
    k = m.field
    for s in rm.action_matrices:
        # F(Sv) = S F(v): A.sigma(S) = S.A ; V(Sv) = S V(v): B.sigma_inv(S) = S.B
        if mat_mul(k, m.F_matrix, mat_map(k, s, k.frobenius)) != mat_mul(k, s, m.F_matrix):
            return False
        if mat_mul(k, m.V_matrix, mat_map(k, s, k.frobenius_inv)) != mat_mul(k, s, m.V_matrix):
            return False
    return True


def rm_stable(k, rm: RMStructure, basis) -> bool:
    span, _ = row_reduce(k, basis)
    for s in rm.action_matrices:
        for v in basis:
            if not in_span(k, span, mat_vec(k, s, v)):
                return False
    return True
