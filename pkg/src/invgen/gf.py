"""Dense linear algebra over prime fields F_p.

Matrices are ``int64`` numpy arrays with entries in ``[0, p)``. Vectors are
rows, matching the right-module convention ``v -> v @ rho(g)`` used throughout.
"""

from __future__ import annotations

import numpy as np

_FLOAT_EXACT = 2**52


def as_mod(a, p):
    return np.mod(np.asarray(a, dtype=np.int64), p)


def inv_mod(x, p):
    return pow(int(x) % p, -1, p)


def matmul(a, b, p):
    """``a @ b mod p`` without int64 overflow."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    inner = a.shape[-1] if a.ndim else 1
    bound = max(inner, 1) * (p - 1) ** 2
    if bound < _FLOAT_EXACT:
        out = np.matmul(a.astype(np.float64), b.astype(np.float64))
        return np.mod(out.astype(np.int64), p)
    if bound < 2**62:
        return np.mod(np.matmul(a, b), p)
    out = np.matmul(a.astype(object), b.astype(object))
    return np.mod(out, p).astype(np.int64)


def identity(n):
    return np.eye(n, dtype=np.int64)


def rref(a, p):
    """Reduced row echelon form. Returns ``(rows, pivots)`` with zero rows dropped."""
    r = as_mod(a, p).copy()
    if r.ndim != 2:
        raise ValueError("rref needs a 2-d array")
    m, n = r.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(r[row:, col])
        if nz.size == 0:
            continue
        k = row + nz[0]
        if k != row:
            r[[row, k]] = r[[k, row]]
        r[row] = (r[row] * inv_mod(r[row, col], p)) % p
        others = np.flatnonzero(r[:, col])
        others = others[others != row]
        if others.size:
            r[others] = (r[others] - np.outer(r[others, col], r[row])) % p
        pivots.append(col)
        row += 1
    return r[:row], pivots


def rank(a, p):
    a = np.asarray(a)
    if a.size == 0:
        return 0
    return len(rref(a, p)[1])


def nullspace(a, p):
    """Basis (as rows) of ``{x : a @ x = 0}``."""
    a = as_mod(a, p)
    n = a.shape[1]
    if a.shape[0] == 0:
        return identity(n)
    r, piv = rref(a, p)
    free = [c for c in range(n) if c not in set(piv)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        if piv:
            basis[i, piv] = (-r[:, f]) % p
    return basis


def left_nullspace(a, p):
    """Basis (as rows) of ``{v : v @ a = 0}``."""
    return nullspace(np.asarray(a).T, p)


def inverse(a, p):
    a = as_mod(a, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse needs a square matrix")
    r, piv = rref(np.hstack([a, identity(n)]), p)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ZeroDivisionError("matrix is singular")
    return r[:n, n:]


def is_invertible(a, p):
    a = np.asarray(a)
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def batched_rank(a, p):
    """Ranks of a stack of matrices of shape ``(N, m, n)``, eliminated in lockstep."""
    r = as_mod(a, p).copy()
    big, m, n = r.shape
    ranks = np.zeros(big, dtype=np.int64)
    inv_table = np.array([0] + [inv_mod(x, p) for x in range(1, p)], dtype=np.int64)
    idx = np.arange(big)
    for col in range(n):
        active = ranks < m
        if not active.any():
            break
        row = np.minimum(ranks, m - 1)
        # first nonzero at or below the current pivot row
        below = r[:, :, col] * (np.arange(m)[None, :] >= ranks[:, None])
        has = (below != 0).any(axis=1) & active
        if not has.any():
            continue
        k = np.argmax(below != 0, axis=1)
        sel = idx[has]
        pr, kr = row[has], k[has]
        tmp = r[sel, pr].copy()
        r[sel, pr] = r[sel, kr]
        r[sel, kr] = tmp
        piv_rows = (r[sel, pr] * inv_table[r[sel, pr, col]][:, None]) % p
        r[sel, pr] = piv_rows
        factors = r[sel, :, col].copy()
        factors[np.arange(sel.size), pr] = 0
        r[sel] = (r[sel] - factors[:, :, None] * piv_rows[:, None, :]) % p
        ranks[sel] += 1
    return ranks


class EchelonBasis:
    """Incrementally maintained RREF basis of a subspace of F_p^n."""

    def __init__(self, n, p):
        self.n = n
        self.p = p
        self.rows = np.zeros((0, n), dtype=np.int64)
        self.pivots = []

    @property
    def dim(self):
        return len(self.pivots)

    def reduce(self, v):
        v = as_mod(v, self.p)
        if self.pivots:
            v = (v - matmul(v[..., self.pivots], self.rows, self.p)) % self.p
        return v

    def add(self, v):
        """Add ``v``; return True if the span grew."""
        v = self.reduce(v)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        c = int(nz[0])
        v = (v * inv_mod(v[c], self.p)) % self.p
        if self.dim:
            col = self.rows[:, c].copy()
            self.rows = (self.rows - np.outer(col, v)) % self.p
        self.rows = np.vstack([self.rows, v[None, :]])
        self.pivots.append(c)
        order = np.argsort(self.pivots)
        self.rows = self.rows[order]
        self.pivots = [self.pivots[i] for i in order]
        return True

    def contains(self, v):
        return not self.reduce(v).any()

    def coords(self, v):
        """Coordinates of ``v`` (rows allowed) with respect to ``self.rows``; no membership check."""
        return as_mod(v, self.p)[..., self.pivots]


def span_basis(rows, p, n=None):
    rows = np.asarray(rows, dtype=np.int64)
    if rows.size == 0:
        return np.zeros((0, n if n is not None else rows.shape[-1]), dtype=np.int64)
    return rref(rows, p)[0]


def spin(vectors, gens, p, n=None):
    """RREF basis of the smallest subspace containing ``vectors`` and closed under each ``v @ g``."""
    vectors = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    n = vectors.shape[1] if n is None else n
    eb = EchelonBasis(n, p)
    queue = [v for v in vectors if eb.add(v)]
    while queue:
        v = queue.pop()
        for g in gens:
            w = matmul(v, g, p)
            if eb.add(w):
                queue.append(w)
                if eb.dim == n:
                    return eb.rows
    return eb.rows


def complement_rows(basis, p, n):
    """Unit vectors completing an RREF ``basis`` to a basis of F_p^n."""
    piv = set(rref(basis, p)[1]) if len(basis) else set()
    free = [c for c in range(n) if c not in piv]
    out = np.zeros((len(free), n), dtype=np.int64)
    out[np.arange(len(free)), free] = 1
    return out
