"""Modules for permutation groups over prime fields.

Right modules, row vectors: ``g`` acts as ``v -> v @ rho(g)`` and
``rho(g*h) = rho(g) @ rho(h)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import ceil

import numpy as np
from sympy import isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor

from . import gf
from .errors import (
    CohomologyCapExceeded,
    DuplicateIsomorphismClass,
    FieldMismatch,
    IterationBudgetExceeded,
    NonCoprimePrime,
    NotIrreducible,
    OrderCapExceeded,
    SearchBoundExceeded,
    SplittingViolation,
)

MEATAXE_BUDGET = 200
COHOMOLOGY_CAP = 60
REGULAR_CAP = 2_000


@dataclass(frozen=True)
class PrimeField:
    q: int

    def __post_init__(self):
        if not (2 <= self.q < 2**31 and isprime(self.q)):
            raise ValueError(f"{self.q} is not a prime below 2^31")


def _q(field_or_int):
    return field_or_int.q if isinstance(field_or_int, PrimeField) else int(field_or_int)


@dataclass(eq=False)
class GModule:
    group: object
    p: int
    gens: list
    name: str = None

    def __post_init__(self):
        self.gens = [gf.as_mod(g, self.p) for g in self.gens]
        if len(self.gens) != len(self.group.generators):
            raise ValueError("need one matrix per group generator")

    @property
    def dim(self):
        if self.gens:
            return self.gens[0].shape[0]
        return self._dim

    @classmethod
    def from_matrices(cls, group, p, mats, name=None, dim=None):
        m = cls(group, p, list(mats), name)
        if not mats:
            m._dim = 1 if dim is None else dim
        return m

    @cached_property
    def element_matrices(self):
        g = self.group
        n = self.dim
        out = np.empty((g.order, n, n), dtype=np.int64)
        out[0] = gf.identity(n)
        for j in range(1, g.order):
            out[j] = gf.matmul(out[g.parent[j]], self.gens[g.parent_gen[j]], self.p)
        return out

    def matrix(self, elem):
        return self.element_matrices[self.group.id_of(elem)]

    def check_homomorphism(self):
        """``rho(x*s) == rho(x) @ rho(s)`` for every element ``x`` and generator ``s``."""
        mats = self.element_matrices
        for s, gm in enumerate(self.gens):
            prod = gf.matmul(mats, gm, self.p)
            if not np.array_equal(prod, mats[self.group.right[s]]):
                return False
        return all(gf.is_invertible(m, self.p) for m in self.gens)

    def is_trivial(self):
        eye = gf.identity(self.dim)
        return all(np.array_equal(m, eye) for m in self.gens)

    @cached_property
    def kernel(self):
        """``C_G(V)`` as a subgroup of the acting group."""
        eye = gf.identity(self.dim)
        mask = np.all(self.element_matrices == eye[None], axis=(1, 2))
        from .group import Subgroup, _small_gens
        sub = Subgroup(self.group, mask)
        return Subgroup(self.group, mask, tuple(_small_gens(self.group, sub)))

    def is_faithful(self):
        return self.kernel.order == 1

    def restrict(self, basis):
        """Submodule spanned by the rows of ``basis`` (invariance is assumed)."""
        basis, piv = gf.rref(basis, self.p)
        mats = [gf.matmul(basis, g, self.p)[:, piv] for g in self.gens]
        sub = GModule.from_matrices(self.group, self.p, mats, dim=len(piv))
        if "element_matrices" in self.__dict__:
            em = gf.matmul(basis, self.element_matrices, self.p)[:, :, piv]
            sub.__dict__["element_matrices"] = em
        return sub, basis

    def quotient(self, basis):
        """Quotient by the submodule spanned by ``basis``; coordinates on the non-pivot columns."""
        basis, piv = gf.rref(basis, self.p)
        free = [c for c in range(self.dim) if c not in set(piv)]
        reducer = gf.EchelonBasis(self.dim, self.p)
        reducer.rows, reducer.pivots = basis, list(piv)
        mats = []
        for g in self.gens:
            rows = g[free]
            mats.append(reducer.reduce(rows)[:, free])
        return GModule.from_matrices(self.group, self.p, mats, dim=len(free))

    def dual(self):
        return GModule(self.group, self.p, [gf.inverse(g, self.p).T for g in self.gens])

    def spin(self, vectors):
        return gf.spin(vectors, self.gens, self.p, self.dim)


def direct_sum(*modules):
    first = modules[0]
    mats = []
    for s in range(len(first.gens)):
        n = sum(m.dim for m in modules)
        block = np.zeros((n, n), dtype=np.int64)
        o = 0
        for m in modules:
            block[o:o + m.dim, o:o + m.dim] = m.gens[s]
            o += m.dim
        mats.append(block)
    return GModule.from_matrices(first.group, first.p, mats, dim=sum(m.dim for m in modules))


def trivial_module(group, p, dim=1):
    return GModule.from_matrices(group, p, [gf.identity(dim) for _ in group.generators], dim=dim)


def regular_module(group, field_or_q, cap=REGULAR_CAP):
    """``F_q G`` with basis the group elements, ``g`` acting by right translation."""
    q = _q(field_or_q)
    n = group.order
    if n > cap:
        raise OrderCapExceeded(f"regular module needs |G| <= {cap}")
    mats = []
    for s in range(len(group.generators)):
        m = np.zeros((n, n), dtype=np.int64)
        m[np.arange(n), group.right[s]] = 1
        mats.append(m)
    mod = GModule.from_matrices(group, q, mats, name="regular", dim=n)
    if n <= 400:
        em = np.zeros((n, n, n), dtype=np.int64)
        tab = group.table
        for g in range(n):
            em[g, np.arange(n), tab[:, g]] = 1
        mod.__dict__["element_matrices"] = em
    return mod


def smallest_splitting_prime(group, bound=2**31):
    """Least prime ``q`` with ``exp(G) | q - 1``."""
    e = group.exponent
    q = e + 1
    while q < bound:
        if isprime(q):
            if group.order % q == 0:
                raise SplittingViolation(f"prime {q} divides |G|")
            return q
        q += e
    raise SearchBoundExceeded(f"no prime = 1 mod {e} below {bound}")


# -- meataxe -----------------------------------------------------------------------


def _random_algebra_element(mod, rng):
    n, p = mod.dim, mod.p
    theta = np.zeros((n, n), dtype=np.int64)
    ngens = len(mod.gens)
    for _ in range(int(rng.integers(2, 5))):
        word = gf.identity(n)
        for _ in range(int(rng.integers(1, 6))):
            word = gf.matmul(word, mod.gens[int(rng.integers(ngens))], p)
        theta = (theta + int(rng.integers(1, p)) * word) % p
    return theta


def _min_poly_of_vector(theta, v, p):
    """Monic polynomial ``m`` (coefficients high to low) with ``v m(theta) = 0``, of least degree."""
    n = theta.shape[0]
    eb = gf.EchelonBasis(n, p)
    krylov = []
    w = v
    while eb.add(w):
        krylov.append(w)
        w = gf.matmul(w, theta, p)
    k = len(krylov)
    aug = np.hstack([np.array(krylov).T, w[:, None]])
    r, piv = gf.rref(aug, p)
    c = np.zeros(k, dtype=np.int64)
    for row, col in zip(r, piv):
        c[col] = row[k]
    # w = sum c_i v theta^i  ->  x^k - sum c_i x^i
    return [1] + [int((-c[i]) % p) for i in range(k - 1, -1, -1)]


def _eval_poly(coeffs, theta, p):
    n = theta.shape[0]
    acc = np.zeros((n, n), dtype=np.int64)
    for c in coeffs:
        acc = (gf.matmul(acc, theta, p) + c * gf.identity(n)) % p
    return acc


def find_submodule(mod, rng, budget=MEATAXE_BUDGET):
    """Proper nonzero submodule basis (rows, RREF), or None when ``mod`` is irreducible."""
    n, p = mod.dim, mod.p
    if n == 1:
        return None
    gens_t = [g.T.copy() for g in mod.gens]
    for _ in range(budget):
        theta = _random_algebra_element(mod, rng)
        v0 = rng.integers(0, p, size=n)
        if not v0.any():
            continue
        mpoly = _min_poly_of_vector(theta, v0, p)
        _, factors = gf_factor(mpoly, p, ZZ)
        for f, _mult in sorted(factors, key=lambda t: len(t[0])):
            deg = len(f) - 1
            a = _eval_poly([int(c) for c in f], theta, p)
            null = gf.left_nullspace(a, p)
            u = gf.spin(null[0], mod.gens, p, n)
            if len(u) < n:
                return u
            if null.shape[0] == deg:
                w = gf.nullspace(a, p)[0]
                dual_sub = gf.spin(w, gens_t, p, n)
                if len(dual_sub) < n:
                    return gf.span_basis(gf.nullspace(dual_sub, p), p, n)
                return None
    raise IterationBudgetExceeded(f"meataxe made no decision after {budget} random elements")


def is_irreducible(mod, seed=0):
    return find_submodule(mod, np.random.default_rng(seed)) is None


def composition_factors(mod, seed=0):
    """Composition factors (as modules) in any characteristic."""
    rng = np.random.default_rng(seed)
    out = []
    stack = [mod]
    while stack:
        m = stack.pop()
        u = find_submodule(m, rng)
        if u is None:
            out.append(m)
            continue
        sub, _ = m.restrict(u)
        stack.append(m.quotient(u))
        stack.append(sub)
    return out


def _invariant_complement(mod, u_basis):
    """G-invariant complement of the submodule ``u_basis`` (Maschke averaging; p must not divide |G|)."""
    n, p = mod.dim, mod.p
    order = mod.group.order
    u_basis, _ = gf.rref(u_basis, p)
    q = np.vstack([u_basis, gf.complement_rows(u_basis, p, n)])
    e = np.zeros((n, n), dtype=np.int64)
    k = len(u_basis)
    e[np.arange(k), np.arange(k)] = 1
    p0 = gf.matmul(gf.matmul(gf.inverse(q, p), e, p), q, p)
    mats = mod.element_matrices
    inv_mats = mats[mod.group.inv]
    avg = gf.matmul(gf.matmul(inv_mats, p0, p), mats, p).sum(axis=0) % p
    avg = (avg * gf.inv_mod(order, p)) % p
    return gf.span_basis(gf.left_nullspace(avg, p), p, n)


@dataclass
class Component:
    module: GModule
    multiplicity: int
    bases: list = field(repr=False)


@dataclass
class IrredDecomposition:
    components: list
    change_of_basis: np.ndarray
    p: int

    @property
    def dims(self):
        return [c.module.dim for c in self.components]

    @property
    def multiplicities(self):
        return [c.multiplicity for c in self.components]

    def signature(self):
        return sorted(zip(self.dims, self.multiplicities))


def meataxe_decompose(mod, seed=0):
    """Split a semisimple module into irreducibles grouped by isomorphism type."""
    if mod.group.order % mod.p == 0:
        raise NonCoprimePrime(f"{mod.p} divides |G| = {mod.group.order}")
    rng = np.random.default_rng(seed)
    pieces = []
    stack = [(mod, gf.identity(mod.dim))]
    while stack:
        m, amb = stack.pop()
        u = find_submodule(m, rng)
        if u is None:
            pieces.append((m, amb))
            continue
        w = _invariant_complement(m, u)
        for part in (w, u):
            sub, basis = m.restrict(part)
            stack.append((sub, gf.matmul(basis, amb, mod.p)))
    pieces.reverse()
    components = []
    for m, amb in pieces:
        for comp in components:
            if comp.module.dim == m.dim and modules_isomorphic(comp.module, m):
                comp.multiplicity += 1
                comp.bases.append(amb)
                break
        else:
            components.append(Component(m, 1, [amb]))
    components.sort(key=lambda c: (c.module.dim, not c.module.is_trivial()))
    cob = np.vstack([b for c in components for b in c.bases])
    return IrredDecomposition(components, cob, mod.p)


# -- homomorphisms ------------------------------------------------------------------


def intertwiners(v, w):
    """Basis of ``{X : rho_V(g) X = X rho_W(g)}`` as ``dim V x dim W`` matrices."""
    if v.p != w.p:
        raise FieldMismatch(f"F_{v.p} vs F_{w.p}")
    if v.group is not w.group:
        raise FieldMismatch("modules for different groups")
    n, m, p = v.dim, w.dim, v.p
    blocks = [
        (np.kron(a, gf.identity(m)) - np.kron(gf.identity(n), b.T)) % p
        for a, b in zip(v.gens, w.gens)
    ]
    if not blocks:
        return [x.reshape(n, m) for x in gf.identity(n * m)]
    sol = gf.nullspace(np.vstack(blocks), p)
    return [x.reshape(n, m) for x in sol]


def modules_isomorphic(v, w, tries=20):
    if v.p != w.p:
        raise FieldMismatch(f"F_{v.p} vs F_{w.p}")
    if v.dim != w.dim:
        return False
    basis = intertwiners(v, w)
    if not basis:
        return False
    rng = np.random.default_rng(0)
    for t in range(tries):
        coeffs = rng.integers(0, v.p, size=len(basis)) if t else np.eye(len(basis), dtype=np.int64)[0]
        x = sum(int(c) * b for c, b in zip(coeffs, basis)) % v.p
        if gf.is_invertible(x, v.p):
            return True
    return False


def endo_dim(v, check=True):
    if check and not is_irreducible(v):
        raise NotIrreducible("endo_dim expects an irreducible module")
    return len(intertwiners(v, v))


def r_G(v, check=True):
    e = endo_dim(v, check)
    if v.dim % e:
        raise SplittingViolation(f"dim {v.dim} not divisible by endomorphism dimension {e}")
    return v.dim // e


def fixed_space(v, g):
    """``C_V(g)``: returns ``(dimension, basis rows)``."""
    m = v.matrix(g)
    basis = gf.left_nullspace((m - gf.identity(v.dim)) % v.p, v.p)
    return basis.shape[0], basis


def centralizer_dim_check(group, field_or_q, g, module=None):
    """Fixed-space dimension of ``g`` on ``F_q G`` next to ``|G| / |g|``."""
    mod = regular_module(group, field_or_q) if module is None else module
    gid = group.id_of(g)
    measured, _ = fixed_space(mod, gid)
    return measured, group.order // int(group.element_orders[gid])


# -- module generation --------------------------------------------------------------


@dataclass
class ModuleSum:
    summands: list

    @property
    def dim(self):
        return sum(m.dim * n for m, n in self.summands)

    @property
    def primes(self):
        return [m.p for m, _ in self.summands]

    def module(self):
        return direct_sum(*[m for m, n in self.summands for _ in range(n)])


def d_G_module(a):
    """Least number of elements generating ``a`` as a module: ``max ceil(n_i / r_G(A_i))``."""
    mods = [m for m, _ in a.summands]
    for i in range(len(mods)):
        for j in range(i):
            if mods[i].p == mods[j].p and modules_isomorphic(mods[i], mods[j]):
                raise DuplicateIsomorphismClass(f"summands {j} and {i} are isomorphic")
    if not mods:
        return 0
    return max(ceil(n / r_G(m)) for m, n in a.summands)


def module_generation_brute(mod, max_k=3, samples=2000, seed=0, exhaustive_limit=200_000):
    """Least ``k`` such that some ``k`` vectors generate ``mod``, by search.

    ``k = 1`` is decided exhaustively when ``p^dim`` is within ``exhaustive_limit``;
    larger ``k`` are confirmed by random sampling, which can only prove existence.
    """
    n, p = mod.dim, mod.p
    mats = mod.element_matrices
    if n == 0:
        return 0
    rng = np.random.default_rng(seed)
    for k in range(1, max_k + 1):
        if k == 1 and p**n <= exhaustive_limit:
            digits = np.indices((p,) * n).reshape(n, -1).T
            orbit = np.einsum("vi,gij->vgj", digits, mats) % p
            if (gf.batched_rank(orbit, p) == n).any():
                return 1
            continue
        for _ in range(samples):
            vs = rng.integers(0, p, size=(k, n))
            if len(gf.spin(vs, mod.gens, p, n)) == n:
                return k
        if k == 1:
            raise SearchBoundExceeded("could not decide single-generator case exhaustively")
    raise SearchBoundExceeded(f"no generating set of size <= {max_k} found")


# -- cohomology -------------------------------------------------------------------


def h1_dim(group, v, cap=COHOMOLOGY_CAP):
    """``dim Z^1 - dim B^1`` using the full multiplication table."""
    n = group.order
    if n > cap:
        raise CohomologyCapExceeded(f"|G| = {n} exceeds cohomology cap {cap}")
    d, p = v.dim, v.p
    mats = v.element_matrices
    tab = group.table
    rows = n * n * d
    eq = np.zeros((rows, n * d), dtype=np.int64)
    gg, hh, cc = np.meshgrid(np.arange(n), np.arange(n), np.arange(d), indexing="ij")
    gg, hh, cc = gg.ravel(), hh.ravel(), cc.ravel()
    r = np.arange(rows)
    np.add.at(eq, (r, tab[gg, hh] * d + cc), 1)
    np.add.at(eq, (r, hh * d + cc), -1)
    for a in range(d):
        np.add.at(eq, (r, gg * d + a), -mats[hh, a, cc])
    z1 = n * d - gf.rank(eq % p, p)
    boundary = np.concatenate([(mats[g] - gf.identity(d)) % p for g in range(n)], axis=1)
    b1 = gf.rank(boundary, p)
    return z1 - b1


def irreducible_modules(group, p, seed=0):
    """One representative per isomorphism type of irreducible ``F_p G``-module."""
    reg = regular_module(group, p)
    if group.order % p:
        return [c.module for c in meataxe_decompose(reg, seed).components]
    reps = []
    for m in composition_factors(reg, seed):
        if not any(r.dim == m.dim and modules_isomorphic(r, m) for r in reps):
            reps.append(m)
    reps.sort(key=lambda m: (m.dim, not m.is_trivial()))
    return reps
